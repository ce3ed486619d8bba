#include "pdcong/smith.hpp"

#include <map>
#include <set>
#include <utility>

namespace pdcong {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix::IntMatrix(const SparseIntMatrix& s) : IntMatrix(s.rows, s.cols)
{
    for (const auto& e : s.entries)
        (*this)(e.row, e.col) += e.value;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (o(k, c) != 0)
                    out(r, c) += a * o(k, c);
        }
    return out;
}

std::vector<mpz_class> SmithForm::torsion() const
{
    std::vector<mpz_class> out;
    for (const auto& d : divisors)
        if (d > 1)
            out.push_back(d);
    return out;
}

unsigned p_valuation(const mpz_class& n, unsigned long p)
{
    if (n == 0)
        throw std::invalid_argument("p_valuation of zero");
    mpz_class v = abs(n);
    unsigned k = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++k;
    }
    return k;
}

namespace {

int cmp_abs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class Reducer {
public:
    Reducer(const IntMatrix& m, bool transforms)
        : a_(m), rows_(m.rows()), cols_(m.cols())
    {
        if (transforms) {
            left_ = IntMatrix::identity(rows_);
            right_ = IntMatrix::identity(cols_);
        }
    }

    SmithForm run()
    {
        const std::size_t diag = std::min(rows_, cols_);
        std::size_t t = 0;
        for (; t < diag; ++t) {
            auto pivot = find_min(t);
            if (!pivot)
                break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            settle(t);
        }
        SmithForm out;
        out.rank = t;
        for (std::size_t i = 0; i < diag; ++i) {
            if (i < t && a_(i, i) < 0)
                negate_row(i);
            out.divisors.push_back(i < t ? a_(i, i) : mpz_class(0));
        }
        if (left_) {
            out.left = std::move(left_);
            out.right = std::move(right_);
        }
        return out;
    }

private:
    // Smallest |a(i,j)| over i, j >= t, scanning row-major so the first
    // minimum found is the lowest (row, col).
    std::optional<std::pair<std::size_t, std::size_t>> find_min(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        mpz_class best_abs;
        for (std::size_t i = t; i < rows_; ++i)
            for (std::size_t j = t; j < cols_; ++j) {
                const mpz_class& v = a_(i, j);
                if (v == 0)
                    continue;
                if (!best || cmp_abs(v, best_abs) < 0) {
                    best = {i, j};
                    best_abs = abs(v);
                    if (best_abs == 1)
                        return best;
                }
            }
        return best;
    }

    // Clears row and column t around the pivot and enforces that the pivot
    // divides the remaining block.
    void settle(std::size_t t)
    {
        for (;;) {
            bool residue = false;
            for (std::size_t i = t + 1; i < rows_; ++i) {
                if (a_(i, t) == 0)
                    continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                if (q != 0)
                    add_row_multiple(i, t, -q);
                residue = residue || a_(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < cols_; ++j) {
                if (a_(t, j) == 0)
                    continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                if (q != 0)
                    add_col_multiple(j, t, -q);
                residue = residue || a_(t, j) != 0;
            }
            if (residue) {
                repivot_on_cross(t);
                continue;
            }
            if (mpz_cmpabs_ui(a_(t, t).get_mpz_t(), 1) == 0)
                return;
            auto bad = find_non_multiple(t);
            if (!bad)
                return;
            add_row_multiple(t, *bad, 1);
        }
    }

    void repivot_on_cross(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        mpz_class best = abs(a_(t, t));
        for (std::size_t i = t + 1; i < rows_; ++i)
            if (a_(i, t) != 0 && cmp_abs(a_(i, t), best) < 0) {
                best = abs(a_(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < cols_; ++j)
            if (a_(t, j) != 0 && cmp_abs(a_(t, j), best) < 0) {
                best = abs(a_(t, j));
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    std::optional<std::size_t> find_non_multiple(std::size_t t) const
    {
        const mpz_class& d = a_(t, t);
        for (std::size_t i = t + 1; i < rows_; ++i)
            for (std::size_t j = t + 1; j < cols_; ++j)
                if (a_(i, j) != 0 && mpz_divisible_p(a_(i, j).get_mpz_t(), d.get_mpz_t()) == 0)
                    return i;
        return std::nullopt;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            swap(a_(a, j), a_(b, j));
        if (left_)
            for (std::size_t j = 0; j < rows_; ++j)
                swap((*left_)(a, j), (*left_)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            swap(a_(i, a), a_(i, b));
        if (right_)
            for (std::size_t i = 0; i < cols_; ++i)
                swap((*right_)(i, a), (*right_)(i, b));
    }

    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& q)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            if (a_(src, j) != 0)
                a_(dst, j) += q * a_(src, j);
        if (left_)
            for (std::size_t j = 0; j < rows_; ++j)
                if ((*left_)(src, j) != 0)
                    (*left_)(dst, j) += q * (*left_)(src, j);
    }

    // col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& q)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            if (a_(i, src) != 0)
                a_(i, dst) += q * a_(i, src);
        if (right_)
            for (std::size_t i = 0; i < cols_; ++i)
                if ((*right_)(i, src) != 0)
                    (*right_)(i, dst) += q * (*right_)(i, src);
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            a_(i, j) = -a_(i, j);
        if (left_)
            for (std::size_t j = 0; j < rows_; ++j)
                (*left_)(i, j) = -(*left_)(i, j);
    }

    IntMatrix a_;
    std::size_t rows_;
    std::size_t cols_;
    std::optional<IntMatrix> left_;
    std::optional<IntMatrix> right_;
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms)
{
    return Reducer(m, with_transforms).run();
}

namespace {

// Eliminates unit pivots sparsely (Markowitz order).  Each elimination splits
// off a divisor 1 and replaces the matrix by its Schur complement, which is
// integral because the pivot is a unit.
struct UnitEliminator {
    std::vector<std::map<std::size_t, mpz_class>> rows;
    std::vector<std::set<std::size_t>> cols;
    std::vector<bool> row_alive, col_alive;
    std::size_t units = 0;

    explicit UnitEliminator(const SparseIntMatrix& m)
        : rows(m.rows), cols(m.cols), row_alive(m.rows, true), col_alive(m.cols, true)
    {
        for (const auto& e : m.entries)
            rows[e.row][e.col] += e.value;
        for (std::size_t r = 0; r < m.rows; ++r) {
            std::erase_if(rows[r], [](const auto& kv) { return kv.second == 0; });
            for (const auto& [c, v] : rows[r])
                cols[c].insert(r);
        }
    }

    bool step()
    {
        std::size_t best_r = 0, best_c = 0, best_cost = static_cast<std::size_t>(-1);
        for (std::size_t r = 0; r < rows.size() && best_cost > 0; ++r) {
            if (!row_alive[r])
                continue;
            for (const auto& [c, v] : rows[r]) {
                if (cmpabs_ui(v, 1) != 0)
                    continue;
                const std::size_t cost = (rows[r].size() - 1) * (cols[c].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                    if (cost == 0)
                        break;
                }
            }
        }
        if (best_cost == static_cast<std::size_t>(-1))
            return false;
        const mpz_class pivot = rows[best_r].at(best_c); // +-1
        const auto pivot_row = rows[best_r];
        const std::vector<std::size_t> targets(cols[best_c].begin(), cols[best_c].end());
        for (std::size_t r : targets) {
            if (r == best_r)
                continue;
            const mpz_class factor = rows[r].at(best_c) * pivot; // a_rc / pivot
            for (const auto& [c, v] : pivot_row) {
                mpz_class& x = rows[r][c];
                const bool was_zero = x == 0;
                x -= factor * v;
                if (x == 0) {
                    rows[r].erase(c);
                    cols[c].erase(r);
                } else if (was_zero) {
                    cols[c].insert(r);
                }
            }
        }
        for (const auto& [c, v] : pivot_row)
            cols[c].erase(best_r);
        rows[best_r].clear();
        row_alive[best_r] = false;
        col_alive[best_c] = false;
        ++units;
        return true;
    }

    static int cmpabs_ui(const mpz_class& v, unsigned long x) { return mpz_cmpabs_ui(v.get_mpz_t(), x); }
};

} // namespace

std::vector<mpz_class> smith_divisors(const SparseIntMatrix& m)
{
    UnitEliminator u(m);
    while (u.step()) {
    }
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < m.rows; ++r)
        if (u.row_alive[r])
            live_rows.push_back(r);
    for (std::size_t c = 0; c < m.cols; ++c)
        if (u.col_alive[c])
            live_cols.push_back(c);
    std::vector<std::size_t> col_pos(m.cols, 0);
    for (std::size_t i = 0; i < live_cols.size(); ++i)
        col_pos[live_cols[i]] = i;
    IntMatrix rest(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : u.rows[live_rows[i]])
            rest(i, col_pos[c]) = v;
    std::vector<mpz_class> out(u.units, 1);
    for (auto& d : smith_normal_form(rest).divisors)
        out.push_back(std::move(d));
    return out;
}

} // namespace pdcong
