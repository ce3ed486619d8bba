#pragma once

#include <string>
#include <vector>

namespace pdcong {

struct Hypothesis {
    std::string name;
    bool satisfied = false;
    std::string evidence;
};

inline bool all_satisfied(const std::vector<Hypothesis>& hs)
{
    for (const auto& h : hs)
        if (!h.satisfied)
            return false;
    return true;
}

} // namespace pdcong
