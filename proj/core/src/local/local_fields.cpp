/**
 * @file local_fields.cpp
 * @brief Local-field tables: parsing, validation, tame classification.
 */

#include "qpl/local/local_fields.hpp"

#include "qpl/algebra/numbers.hpp"
#include "qpl/util/errors.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace qpl {

std::vector<LocalFieldRec> LocalFieldTable::of_degree(int n) const {
    std::vector<LocalFieldRec> out;
    for (const auto& r : records)
        if (r.n == n) out.push_back(r);
    return out;
}

std::map<int, std::size_t> LocalFieldTable::degree_counts() const {
    std::map<int, std::size_t> out;
    for (const auto& r : records) ++out[r.n];
    return out;
}

std::string local_field_violation(const LocalFieldRec& r) {
    if (r.p < 2 || !is_probable_prime(Int(r.p))) return "p = " + std::to_string(r.p) + " is not prime";
    if (r.n < 1 || r.n > 5) return "degree " + std::to_string(r.n) + " outside 1..5";
    if (r.e < 1 || r.f < 1 || r.n != r.e * r.f) return "n != e*f";
    if (r.aut < 1 || r.n % r.aut != 0) return "aut does not divide n";
    if (r.e % r.p != 0) {
        if (r.c != r.f * (r.e - 1)) return "tame record with c != f*(e-1)";
    } else if (r.c < r.f * r.e) {
        return "wild record with c < f*e";
    }
    return {};
}

LocalFieldTable parse_local_fields(const std::string& text, const std::string& source) {
    LocalFieldTable table;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_p = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        LocalFieldRec r;
        if (!(fields >> r.p >> r.n >> r.e >> r.f >> r.c >> r.aut))
            throw ParseError(source + ": expected six integers 'p n e f c aut'", lineno);
        std::string extra;
        if (fields >> extra) throw ParseError(source + ": trailing text '" + extra + "'", lineno);
        const std::size_t index = table.records.size();
        if (auto why = local_field_violation(r); !why.empty()) throw InvariantViolation(source + ": " + why, index);
        if (have_p && r.p != table.p)
            throw InvariantViolation(source + ": mixed primes " + std::to_string(table.p) + " and " + std::to_string(r.p), index);
        table.p = r.p;
        have_p = true;
        table.records.push_back(r);
    }
    return table;
}

LocalFieldTable load_local_fields(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot open " + file.string(), 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_local_fields(ss.str(), file.string());
}

LocalFieldTable tame_local_fields(long p) {
    if (p <= 5) throw WildPrime("p = " + std::to_string(p) + " admits wild ramification in degree <= 5");
    if (!is_probable_prime(Int(p))) throw InvariantViolation("p = " + std::to_string(p) + " is not prime", 0);
    LocalFieldTable table;
    table.p = p;
    for (int n = 1; n <= 5; ++n)
        for (int f = 1; f <= n; ++f) {
            if (n % f != 0) continue;
            const int e = n / f;
            // g = gcd(e, p^f − 1), computed exactly.
            const Int q1 = ipow(Int(p), static_cast<unsigned long>(f)) - 1;
            const long g = gcd(Int(e), q1).get_si();
            // Frobenius acts on the Kummer parameter r ∈ Z/g by r ↦ p·r.
            std::vector<bool> seen(static_cast<std::size_t>(g), false);
            for (long r = 0; r < g; ++r) {
                if (seen[static_cast<std::size_t>(r)]) continue;
                long orbit = 0;
                long x = r;
                do {
                    seen[static_cast<std::size_t>(x)] = true;
                    ++orbit;
                    x = (x * (p % g)) % g;
                } while (x != r);
                table.records.push_back({p, n, e, f, f * (e - 1), f * g / orbit});
            }
        }
    return table;
}

std::string format_local_fields(const LocalFieldTable& t, const std::string& comment) {
    std::ostringstream os;
    os << "# p n e f c aut\n";
    if (!comment.empty()) os << "# " << comment << "\n";
    for (const auto& r : t.records) os << r.p << ' ' << r.n << ' ' << r.e << ' ' << r.f << ' ' << r.c << ' ' << r.aut << '\n';
    return os.str();
}

LocalFieldTable real_local_fields() {
    LocalFieldTable t;
    t.p = 0;
    t.records.push_back({0, 1, 1, 1, 0, 1});  // R
    t.records.push_back({0, 2, 1, 2, 0, 2});  // C
    return t;
}

std::filesystem::path fixture_path(const std::filesystem::path& fixtures_dir, long p) {
    return fixtures_dir / "localfields" / ("p" + std::to_string(p) + ".tbl");
}

}  // namespace qpl
