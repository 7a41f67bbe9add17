/**
 * @file s5_classes.cpp
 * @brief Enumeration of S5 and its conjugacy classes.
 */

#include "qpl/constants/s5_classes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qpl {

namespace {

Permutation5 compose(const Permutation5& a, const Permutation5& b) {
    Permutation5 r{};
    for (int i = 0; i < 5; ++i) r[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
    return r;
}

std::vector<std::vector<int>> cycles(const Permutation5& p) {
    std::vector<std::vector<int>> out;
    std::array<bool, 5> seen{};
    for (int s = 0; s < 5; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> cyc;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = p[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

/// Sort key giving the conventional class order.
std::pair<int, std::vector<int>> class_key(const std::vector<int>& type) {
    std::vector<int> nontrivial;
    for (int l : type)
        if (l > 1) nontrivial.push_back(l);
    return {static_cast<int>(nontrivial.size()), nontrivial};
}

}  // namespace

std::vector<Permutation5> s5_elements() {
    std::vector<Permutation5> out;
    Permutation5 p{0, 1, 2, 3, 4};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> cycle_type(const Permutation5& p) {
    std::vector<int> t;
    for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::string S5Class::splitting_type() const {
    std::vector<int> asc(cycle_type.rbegin(), cycle_type.rend());
    std::string s = "(";
    for (int l : asc) s += std::to_string(l);
    return s + ")";
}

std::string S5Class::cycle_notation() const {
    auto cs = cycles(representative);
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::string s;
    for (const auto& c : cs) {
        if (c.size() < 2) continue;
        s += "(";
        for (int x : c) s += std::to_string(x + 1);
        s += ")";
    }
    return s.empty() ? "e" : s;
}

std::vector<S5Class> s5_class_data() {
    const auto elems = s5_elements();
    std::map<std::vector<int>, S5Class> by_type;
    for (const auto& g : elems) {
        auto type = cycle_type(g);
        auto [it, fresh] = by_type.try_emplace(type);
        if (fresh) {
            it->second.cycle_type = type;
            it->second.representative = g;
        }
        ++it->second.size;
    }
    std::vector<S5Class> out;
    for (auto& [type, cls] : by_type) {
        cls.centralizer_order = std::count_if(elems.begin(), elems.end(), [&](const Permutation5& h) {
            return compose(h, cls.representative) == compose(cls.representative, h);
        });
        out.push_back(cls);
    }
    std::sort(out.begin(), out.end(),
              [](const S5Class& a, const S5Class& b) { return class_key(a.cycle_type) < class_key(b.cycle_type); });
    return out;
}

}  // namespace qpl
