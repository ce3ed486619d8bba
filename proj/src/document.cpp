#include "pdcong/document.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace pdcong {

DocumentError::DocumentError(Location at, const std::string& message)
    : std::runtime_error("line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " +
                         message),
      at_(at), message_(message)
{
}

Coefficients AlgebraBlock::coefficients(std::optional<std::uint32_t> p) const
{
    if (field == "Q")
        return Coefficients::rational();
    if (field == "Fp") {
        if (!p)
            throw std::invalid_argument("algebra " + name + " is over Fp; a prime is required");
        return Coefficients::mod(*p);
    }
    return Coefficients::mod(static_cast<std::uint32_t>(std::stoul(field.substr(1))));
}

const ComplexBlock* InputDocument::find_complex(const std::string& name) const
{
    for (const auto& c : complexes)
        if (c.name == name)
            return &c;
    return nullptr;
}

const ActionBlock* InputDocument::find_action(const std::string& name) const
{
    for (const auto& a : actions)
        if (a.name == name)
            return &a;
    return nullptr;
}

const AlgebraBlock* InputDocument::find_algebra(const std::string& name) const
{
    for (const auto& a : algebras)
        if (a.name == name)
            return &a;
    return nullptr;
}

namespace {

struct Token {
    std::string text;
    Location at;
};

std::vector<Token> tokenize(const std::string& line, std::size_t lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#')
            break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), {lineno, start + 1}});
    }
    return out;
}

long parse_int(const Token& t, const char* what)
{
    long v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e)
        throw DocumentError(t.at, std::string("expected ") + what + ", found '" + t.text + "'");
    return v;
}

mpq_class parse_coeff(const Token& t)
{
    try {
        return parse_rational(t.text);
    } catch (const std::invalid_argument&) {
        throw DocumentError(t.at, "expected a coefficient, found '" + t.text + "'");
    }
}

void expect_count(const std::vector<Token>& toks, std::size_t n, const char* usage)
{
    if (toks.size() != n) {
        const Location at = toks.size() > n ? toks[n].at : toks.back().at;
        throw DocumentError(at, std::string("expected '") + usage + "'");
    }
}

void expect_word(const Token& t, const char* word)
{
    if (t.text != word)
        throw DocumentError(t.at, std::string("expected '") + word + "', found '" + t.text + "'");
}

bool valid_field(const std::string& s)
{
    if (s == "Q" || s == "Fp")
        return true;
    if (s.size() < 2 || s[0] != 'F')
        return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    const unsigned long p = std::stoul(s.substr(1));
    return p > 2 && p < (1ul << 31) && is_prime(p);
}

class Parser {
public:
    explicit Parser(const std::string& text)
    {
        std::istringstream in(text);
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            ++n;
            auto toks = tokenize(line, n);
            if (!toks.empty())
                lines_.push_back(std::move(toks));
        }
        last_line_ = n;
    }

    InputDocument run()
    {
        while (pos_ < lines_.size()) {
            const auto& head = lines_[pos_];
            const std::string& kw = head[0].text;
            if (kw == "complex")
                parse_complex();
            else if (kw == "action")
                parse_action();
            else if (kw == "algebra")
                parse_algebra();
            else
                throw DocumentError(head[0].at, "expected 'complex', 'action' or 'algebra', found '" + kw + "'");
        }
        return std::move(doc_);
    }

private:
    void claim_name(const Token& t)
    {
        if (!names_.insert(t.text).second)
            throw DocumentError(t.at, "name '" + t.text + "' is already declared");
    }

    // Lines of the current block up to (not including) its 'end'.
    std::vector<std::vector<Token>> body(const Token& header)
    {
        std::vector<std::vector<Token>> out;
        ++pos_;
        while (pos_ < lines_.size()) {
            auto& toks = lines_[pos_++];
            if (toks[0].text == "end") {
                expect_count(toks, 1, "end");
                return out;
            }
            out.push_back(toks);
        }
        throw DocumentError({last_line_ + 1, 1}, "block '" + header.text + "' is missing 'end'");
    }

    void parse_complex()
    {
        const auto head = lines_[pos_];
        expect_count(head, 2, "complex <name>");
        claim_name(head[1]);
        ComplexBlock c;
        c.name = head[1].text;
        c.at = head[0].at;
        std::map<std::string, Location> declared;
        for (const auto& toks : body(head[1])) {
            const std::string& kw = toks[0].text;
            if (kw == "vertices") {
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    if (!declared.emplace(toks[i].text, toks[i].at).second)
                        throw DocumentError(toks[i].at, "vertex '" + toks[i].text + "' declared twice");
                    c.vertices.push_back(toks[i].text);
                }
            } else if (kw == "facet") {
                if (toks.size() < 2)
                    throw DocumentError(toks[0].at, "facet needs at least one vertex");
                std::vector<std::string> f;
                std::set<std::string> seen;
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    if (!declared.count(toks[i].text))
                        throw DocumentError(toks[i].at, "undeclared vertex '" + toks[i].text + "'");
                    if (!seen.insert(toks[i].text).second)
                        throw DocumentError(toks[i].at, "vertex '" + toks[i].text + "' repeated in facet");
                    f.push_back(toks[i].text);
                }
                c.facets.push_back(std::move(f));
            } else {
                throw DocumentError(toks[0].at, "expected 'vertices', 'facet' or 'end', found '" + kw + "'");
            }
        }
        if (c.vertices.empty())
            throw DocumentError(c.at, "complex '" + c.name + "' has no vertices");
        try {
            c.complex = SimplicialComplex::from_facets(c.facets, c.vertices);
        } catch (const ComplexError& e) {
            throw DocumentError(c.at, e.what());
        }
        doc_.order.emplace_back(BlockKind::Complex, doc_.complexes.size());
        doc_.complexes.push_back(std::move(c));
    }

    void parse_action()
    {
        const auto head = lines_[pos_];
        expect_count(head, 6, "action <name> on <complex> p <p>");
        expect_word(head[2], "on");
        expect_word(head[4], "p");
        claim_name(head[1]);
        ActionBlock a;
        a.name = head[1].text;
        a.at = head[0].at;
        a.complex = head[3].text;
        const ComplexBlock* x = doc_.find_complex(a.complex);
        if (!x)
            throw DocumentError(head[3].at, "unknown complex '" + a.complex + "'");
        const long p = parse_int(head[5], "a prime");
        if (p < 3 || p >= (1l << 31) || !is_prime(static_cast<std::uint64_t>(p)))
            throw DocumentError(head[5].at, "p = " + head[5].text + " is not an odd prime");
        a.p = static_cast<std::uint32_t>(p);
        std::set<std::string> mapped;
        for (const auto& toks : body(head[1])) {
            expect_word(toks[0], "map");
            expect_count(toks, 4, "map <v> -> <w>");
            expect_word(toks[2], "->");
            for (const Token* t : {&toks[1], &toks[3]})
                if (!x->complex.vertex_index(t->text))
                    throw DocumentError(t->at, "vertex '" + t->text + "' is not in complex '" + x->name + "'");
            if (!mapped.insert(toks[1].text).second)
                throw DocumentError(toks[1].at, "vertex '" + toks[1].text + "' mapped twice");
            a.map.emplace_back(toks[1].text, toks[3].text);
        }
        try {
            a.action = validate_action(x->complex, a.map, a.p);
        } catch (const ComplexError& e) {
            throw DocumentError(a.at, e.what());
        }
        doc_.order.emplace_back(BlockKind::Action, doc_.actions.size());
        doc_.actions.push_back(std::move(a));
    }

    static std::vector<Term> parse_terms(const std::vector<Token>& toks, std::size_t from,
                                         const std::set<std::string>& basis)
    {
        std::vector<Term> out;
        if (from + 1 == toks.size() && toks[from].text == "0")
            return out;
        std::size_t i = from;
        while (true) {
            if (i + 1 >= toks.size())
                throw DocumentError(toks[std::min(i, toks.size() - 1)].at, "expected '<coeff> <basis>'");
            Term t{parse_coeff(toks[i]), toks[i + 1].text};
            if (!basis.count(t.basis))
                throw DocumentError(toks[i + 1].at, "unknown basis element '" + t.basis + "'");
            out.push_back(std::move(t));
            i += 2;
            if (i == toks.size())
                return out;
            expect_word(toks[i], "+");
            ++i;
        }
    }

    void parse_algebra()
    {
        const auto head = lines_[pos_];
        expect_count(head, 4, "algebra <name> field <Q|Fp>");
        expect_word(head[2], "field");
        claim_name(head[1]);
        if (!valid_field(head[3].text))
            throw DocumentError(head[3].at, "unknown field '" + head[3].text + "' (use Q, Fp or F<odd prime>)");
        AlgebraBlock a;
        a.name = head[1].text;
        a.at = head[0].at;
        a.field = head[3].text;
        std::set<std::string> basis;
        for (const auto& toks : body(head[1])) {
            const std::string& kw = toks[0].text;
            if (kw == "basis") {
                expect_count(toks, 5, "basis <b> bidegree <eps> <j>");
                expect_word(toks[2], "bidegree");
                const long eps = parse_int(toks[3], "eps");
                const long j = parse_int(toks[4], "j");
                if (eps != 0 && eps != 1)
                    throw DocumentError(toks[3].at, "eps must be 0 or 1");
                if (j < 0)
                    throw DocumentError(toks[4].at, "j must be nonnegative");
                if (a.basis.empty() && (eps != 0 || j != 0))
                    throw DocumentError(toks[1].at, "the first basis element is the unit and must lie in (0,0)");
                if (!basis.insert(toks[1].text).second)
                    throw DocumentError(toks[1].at, "basis element '" + toks[1].text + "' declared twice");
                a.basis.push_back({toks[1].text, {static_cast<int>(eps), static_cast<int>(j)}});
            } else if (kw == "mult") {
                if (toks.size() < 5)
                    throw DocumentError(toks[0].at, "expected 'mult <a> <b> = <terms>'");
                expect_word(toks[3], "=");
                for (const Token* t : {&toks[1], &toks[2]})
                    if (!basis.count(t->text))
                        throw DocumentError(t->at, "unknown basis element '" + t->text + "'");
                for (const auto& m : a.mult)
                    if (m.a == toks[1].text && m.b == toks[2].text)
                        throw DocumentError(toks[0].at, "product " + m.a + " " + m.b + " given twice");
                a.mult.push_back({toks[1].text, toks[2].text, parse_terms(toks, 4, basis)});
            } else if (kw == "phi") {
                expect_count(toks, 4, "phi <b> = <coeff>");
                expect_word(toks[2], "=");
                if (!basis.count(toks[1].text))
                    throw DocumentError(toks[1].at, "unknown basis element '" + toks[1].text + "'");
                a.phi.emplace_back(toks[1].text, parse_coeff(toks[3]));
            } else if (kw == "delta") {
                if (toks.size() < 4)
                    throw DocumentError(toks[0].at, "expected 'delta <b> = <terms>'");
                expect_word(toks[2], "=");
                if (!basis.count(toks[1].text))
                    throw DocumentError(toks[1].at, "unknown basis element '" + toks[1].text + "'");
                a.delta.push_back({toks[1].text, parse_terms(toks, 3, basis)});
            } else {
                throw DocumentError(toks[0].at,
                                    "expected 'basis', 'mult', 'phi', 'delta' or 'end', found '" + kw + "'");
            }
        }
        if (a.basis.empty())
            throw DocumentError(a.at, "algebra '" + a.name + "' has no basis");
        doc_.order.emplace_back(BlockKind::Algebra, doc_.algebras.size());
        doc_.algebras.push_back(std::move(a));
    }

    std::vector<std::vector<Token>> lines_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
    std::set<std::string> names_;
    InputDocument doc_;
};

void write_terms(std::ostream& os, const std::vector<Term>& terms)
{
    if (terms.empty()) {
        os << "0";
        return;
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        os << (i ? " + " : "") << terms[i].coeff.get_str() << " " << terms[i].basis;
}

} // namespace

InputDocument parse_document(const std::string& text) { return Parser(text).run(); }

std::string serialize(const InputDocument& doc)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [kind, i] : doc.order) {
        if (!first)
            os << "\n";
        first = false;
        if (kind == BlockKind::Complex) {
            const auto& c = doc.complexes[i];
            os << "complex " << c.name << "\nvertices";
            for (const auto& v : c.vertices)
                os << " " << v;
            os << "\n";
            for (const auto& f : c.facets) {
                os << "facet";
                for (const auto& v : f)
                    os << " " << v;
                os << "\n";
            }
        } else if (kind == BlockKind::Action) {
            const auto& a = doc.actions[i];
            os << "action " << a.name << " on " << a.complex << " p " << a.p << "\n";
            for (const auto& [v, w] : a.map)
                os << "map " << v << " -> " << w << "\n";
        } else {
            const auto& a = doc.algebras[i];
            os << "algebra " << a.name << " field " << a.field << "\n";
            for (const auto& b : a.basis)
                os << "basis " << b.name << " bidegree " << b.degree.eps << " " << b.degree.j << "\n";
            for (const auto& m : a.mult) {
                os << "mult " << m.a << " " << m.b << " = ";
                write_terms(os, m.terms);
                os << "\n";
            }
            for (const auto& [b, c] : a.phi)
                os << "phi " << b << " = " << c.get_str() << "\n";
            for (const auto& d : a.delta) {
                os << "delta " << d.source << " = ";
                write_terms(os, d.terms);
                os << "\n";
            }
        }
        os << "end\n";
    }
    return os.str();
}

} // namespace pdcong
