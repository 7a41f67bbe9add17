/**
 * @file atlas.cpp
 * @brief Breadth-first cusp dissection, use-factor search, table comparison.
 */

#include "qpl/cusp/atlas.hpp"

#include "qpl/util/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace qpl {

namespace {

const std::array<WeightMonomial, CoordId::kCount>& weight_table() {
    static const auto table = [] {
        std::array<WeightMonomial, CoordId::kCount> t;
        for (auto c : CoordId::all()) t[static_cast<std::size_t>(c.index())] = coordinate_weight(c);
        return t;
    }();
    return table;
}

const WeightMonomial& w(CoordId c) { return weight_table()[static_cast<std::size_t>(c.index())]; }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

CoordSet set_of(std::initializer_list<const char*> names) {
    CoordSet s;
    for (const char* n : names) s.insert(*CoordId::parse(n));
    return s;
}

}  // namespace

std::vector<CoordId> CoordSet::members() const {
    std::vector<CoordId> out;
    for (auto c : CoordId::all())
        if (contains(c)) out.push_back(c);
    return out;
}

std::string CoordSet::to_string() const {
    std::string out;
    for (auto c : members()) {
        if (!out.empty()) out += ',';
        out += c.name();
    }
    return out;
}

CoordSet CoordSet::parse(const std::string& text) {
    CoordSet s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto c = CoordId::parse(item);
        if (!c) throw std::invalid_argument("unknown coordinate '" + item + "'");
        s.insert(*c);
    }
    return s;
}

bool lex_less(CoordSet a, CoordSet b) {
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

int multiset_size(const CoordMultiset& m) {
    int n = 0;
    for (const auto& [c, k] : m) n += k;
    return n;
}

std::string multiset_to_string(const CoordMultiset& m) {
    if (m.empty()) return "-";
    std::string out;
    for (const auto& [c, k] : m) {
        if (!out.empty()) out += ',';
        out += c.name();
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

CoordMultiset parse_multiset(const std::string& text) {
    CoordMultiset m;
    const std::string t = trim(text);
    if (t.empty() || t == "-") return m;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        int mult = 1;
        const auto caret = item.find('^');
        if (caret != std::string::npos) {
            mult = std::stoi(item.substr(caret + 1));
            item = item.substr(0, caret);
        }
        auto c = CoordId::parse(item);
        if (!c || mult <= 0) throw std::invalid_argument("bad use-factor entry '" + item + "'");
        m[*c] += mult;
    }
    return m;
}

CoordSet minimal_coordinates(CoordSet t0) {
    const auto rest = t0.complement().members();
    CoordSet out;
    for (auto c : rest) {
        const bool dominated = std::any_of(rest.begin(), rest.end(), [&](CoordId o) {
            return w(o) != w(c) && w(o).leq(w(c));
        });
        if (!dominated) out.insert(c);
    }
    return out;
}

const std::array<CoordSet, 7>& reducibility_patterns() {
    static const std::array<CoordSet, 7> patterns{
        set_of({"a12", "a13", "a14", "a15", "a23", "a24", "a25"}),
        set_of({"a12", "a13", "a14", "a23", "a24", "a34"}),
        set_of({"a12", "a13", "a14", "a15", "b12", "b13", "b14", "b15"}),
        set_of({"a12", "a13", "a14", "a23", "a24", "b12", "b13", "b14", "b23", "b24"}),
        set_of({"a12", "a13", "a14", "b12", "b13", "b14", "c12", "c13", "c14"}),
        set_of({"a12", "a13", "a23", "b12", "b13", "b23", "c12", "c13", "c23"}),
        set_of({"a12", "a13", "b12", "b13", "c12", "c13", "d12", "d13"}),
    };
    return patterns;
}

bool reducible_by_vanishing(CoordSet t0) {
    const auto& ps = reducibility_patterns();
    return std::any_of(ps.begin(), ps.end(), [&](CoordSet p) { return p.subset_of(t0); });
}

std::array<int, 7> integrand_s_exponents(CoordSet t0, const CoordMultiset& pi) {
    WeightMonomial total;
    for (auto c : t0.complement().members()) total += w(c);
    for (const auto& [c, k] : pi) total += k * w(c);
    const auto haar = haar_exponents();
    std::array<int, 7> out{};
    for (int k = 0; k < 7; ++k) out[static_cast<std::size_t>(k)] = total.s(k + 1) + haar[static_cast<std::size_t>(k)];
    return out;
}

bool pi_makes_negative(CoordSet t0, const CoordMultiset& pi) {
    const auto e = integrand_s_exponents(t0, pi);
    return std::all_of(e.begin(), e.end(), [](int x) { return x < 0; });
}

int Atlas::find(CoordSet t0) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].t0 == t0) return static_cast<int>(i);
    return -1;
}

CoordMultiset find_pi(const CaseNode& node, int cap) {
    const auto support = node.t1.members();
    if (support.empty()) throw NoFactorFound("T1 is empty");
    const auto base = integrand_s_exponents(node.t0, {});
    std::vector<std::array<int, 7>> ws;
    for (auto c : support) {
        std::array<int, 7> v{};
        for (int k = 0; k < 7; ++k) v[static_cast<std::size_t>(k)] = w(c).s(k + 1);
        ws.push_back(v);
    }
    // Multisets of size `size` as non-decreasing index sequences, so the
    // search is exhaustive, ordered by size, and deterministic.
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, int, std::array<int, 7>)> extend = [&](std::size_t from, int left,
                                                                           std::array<int, 7> acc) {
        if (left == 0) return std::all_of(acc.begin(), acc.end(), [](int x) { return x < 0; });
        for (std::size_t i = from; i < ws.size(); ++i) {
            std::array<int, 7> next = acc;
            for (std::size_t k = 0; k < 7; ++k) next[k] += ws[i][k];
            pick.push_back(i);
            if (extend(i, left - 1, next)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= cap; ++size) {
        pick.clear();
        if (extend(0, size, base)) {
            CoordMultiset out;
            for (auto i : pick) out[support[i]] += 1;
            return out;
        }
    }
    throw NoFactorFound("no use factor of size <= " + std::to_string(cap) + " for T0 = {" + node.t0.to_string() + "}");
}

Rat case_bound(const CaseNode& node, const CoordMultiset& pi) {
    return make_rat(40 - node.t0.size() + multiset_size(pi), 40);
}

Atlas generate_atlas() {
    Atlas atlas;
    std::unordered_map<std::uint64_t, int> index;
    auto add = [&](CoordSet t0, int parent) {
        CaseNode n;
        n.t0 = t0;
        n.t1 = minimal_coordinates(t0);
        n.depth = t0.size();
        n.parent = parent;
        const int id = static_cast<int>(atlas.nodes.size());
        index.emplace(t0.bits(), id);
        atlas.nodes.push_back(std::move(n));
        return id;
    };
    add(CoordSet{}, -1);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        const CoordSet t0 = atlas.nodes[static_cast<std::size_t>(id)].t0;
        for (auto t : atlas.nodes[static_cast<std::size_t>(id)].t1.members()) {
            const CoordSet child = t0.with(t);
            if (reducible_by_vanishing(child)) continue;
            int cid;
            if (auto it = index.find(child.bits()); it != index.end()) {
                cid = it->second;
            } else {
                cid = add(child, id);
                queue.push_back(cid);
            }
            atlas.nodes[static_cast<std::size_t>(id)].children.push_back(cid);
            atlas.edges.emplace_back(id, cid);
        }
    }
    for (auto& n : atlas.nodes) {
        n.pi = find_pi(n);
        n.bound_numerator = 40 - n.t0.size() + multiset_size(n.pi);
    }
    // Labels: depth, plus a letter when a depth holds several cases, in
    // lexicographic order of T0.
    std::map<int, std::vector<int>> by_depth;
    for (std::size_t i = 0; i < atlas.nodes.size(); ++i) by_depth[atlas.nodes[i].depth].push_back(static_cast<int>(i));
    for (auto& [depth, ids] : by_depth) {
        std::sort(ids.begin(), ids.end(), [&](int a, int b) {
            return lex_less(atlas.nodes[static_cast<std::size_t>(a)].t0, atlas.nodes[static_cast<std::size_t>(b)].t0);
        });
        for (std::size_t k = 0; k < ids.size(); ++k) {
            std::string label = std::to_string(depth);
            if (ids.size() > 1) label += static_cast<char>('a' + k);
            atlas.nodes[static_cast<std::size_t>(ids[k])].label = label;
        }
    }
    return atlas;
}

std::vector<Table1Row> load_table1(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string(), 0);
    std::vector<Table1Row> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '|')) fields.push_back(trim(f));
        if (fields.size() != 5) throw ParseError("expected 5 '|'-separated fields, found " + std::to_string(fields.size()), lineno);
        Table1Row row;
        row.line = lineno;
        row.label = fields[0];
        try {
            row.t0 = CoordSet::parse(fields[1]);
            row.t1 = CoordSet::parse(fields[2]);
            row.pi = parse_multiset(fields[4]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
        try {
            std::size_t used = 0;
            row.bound_numerator = std::stoi(fields[3], &used);
            if (used != fields[3].size()) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            throw ParseError("bad bound numerator '" + fields[3] + "'", lineno);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Table1Report verify_against_table(const Atlas& atlas, const std::vector<Table1Row>& table) {
    Table1Report report;
    std::vector<bool> covered(atlas.nodes.size(), false);
    for (const auto& row : table) {
        Table1RowCheck check;
        check.label = row.label;
        check.line = row.line;
        const int id = atlas.find(row.t0);
        check.bound_match = 40 - row.t0.size() + multiset_size(row.pi) == row.bound_numerator;
        check.pi_negative = pi_makes_negative(row.t0, row.pi);
        if (id >= 0) {
            const CaseNode& n = atlas.nodes[static_cast<std::size_t>(id)];
            covered[static_cast<std::size_t>(id)] = true;
            check.t0_found = true;
            check.t1_match = n.t1 == row.t1;
            check.auto_pi_no_larger = multiset_size(n.pi) <= multiset_size(row.pi);
            ++report.t0_matches;
        }
        (check.ok() ? report.matches : report.mismatches) += 1;
        report.rows.push_back(std::move(check));
    }
    for (std::size_t i = 0; i < atlas.nodes.size(); ++i)
        if (!covered[i]) report.missing_from_table.push_back(atlas.nodes[i].t0.to_string());
    return report;
}

Table1Report verify_against_table(const Atlas& atlas, const std::filesystem::path& table_file) {
    return verify_against_table(atlas, load_table1(table_file));
}

}  // namespace qpl
