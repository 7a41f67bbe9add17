/**
 * @file masses.cpp
 * @brief Enumeration of étale quintics and the local masses β_p, β_∞.
 */

#include "qpl/local/masses.hpp"

#include "qpl/util/errors.hpp"

#include <functional>
#include <sstream>

namespace qpl {

int EtaleQuintic::degree() const {
    int d = 0;
    for (const auto& c : components) d += c.multiplicity * c.field.n;
    return d;
}

int EtaleQuintic::disc_exponent() const {
    int d = 0;
    for (const auto& c : components) d += c.multiplicity * c.field.c;
    return d;
}

std::string EtaleQuintic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& comp : components) {
        if (!first) os << " + ";
        first = false;
        const auto& f = comp.field;
        if (p == 0) {
            os << (f.n == 1 ? "R" : "C");
        } else if (f.n == 1) {
            os << "Q" << p;
        } else {
            os << "K" << comp.class_index << "(n=" << f.n << ",e=" << f.e << ",c=" << f.c << ")";
        }
        if (comp.multiplicity > 1) os << "^" << comp.multiplicity;
    }
    return os.str();
}

std::vector<EtaleQuintic> etale_quintics(const LocalFieldTable& table) {
    bool has_base = false;
    for (const auto& r : table.records) has_base = has_base || r.n == 1;
    if (!has_base) throw IncompleteTable("no degree-1 record at p = " + std::to_string(table.p));
    std::vector<EtaleQuintic> out;
    EtaleQuintic current;
    current.p = table.p;
    // Choose multiplicities class by class (index order) so each multiset
    // appears exactly once.
    std::function<void(std::size_t, int)> walk = [&](std::size_t index, int remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (index == table.records.size()) return;
        const LocalFieldRec& r = table.records[index];
        for (int m = remaining / r.n; m >= 0; --m) {
            if (m > 0) current.components.push_back({r, index, m});
            walk(index + 1, remaining - m * r.n);
            if (m > 0) current.components.pop_back();
        }
    };
    walk(0, 5);
    return out;
}

std::vector<EtaleQuintic> real_etale_quintics() { return etale_quintics(real_local_fields()); }

Int algebra_aut_order(const EtaleQuintic& alg) {
    Int order = 1;
    for (const auto& c : alg.components) {
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(c.multiplicity));
        order *= ipow(Int(c.field.aut), static_cast<unsigned long>(c.multiplicity)) * fact;
    }
    return order;
}

LaurentP beta_closed_form() { return LaurentP{{0, 1}, {-2, 1}, {-4, -1}, {-5, -1}}; }

MassReport beta_p(long p, const LocalFieldTable& table) {
    if (table.p != p && !table.records.empty())
        throw IncompleteTable("table is for p = " + std::to_string(table.p) + ", not " + std::to_string(p));
    const auto counts = table.degree_counts();
    for (int n = 1; n <= 5; ++n)
        if (!counts.contains(n)) throw IncompleteTable("no degree-" + std::to_string(n) + " records at p = " + std::to_string(p));
    MassReport report;
    report.p = p;
    for (const auto& alg : etale_quintics(table)) {
        MassTerm term;
        term.algebra = alg.to_string();
        term.aut = algebra_aut_order(alg);
        term.disc_exponent = alg.disc_exponent();
        term.mass = make_rat(1, term.aut * ipow(Int(p), static_cast<unsigned long>(term.disc_exponent)));
        report.sum += term.mass;
        report.terms.push_back(std::move(term));
    }
    report.total = make_rat(p - 1, p) * report.sum;
    report.closed_form = beta_closed_form().eval(Rat(p));
    report.match = report.total == report.closed_form;
    return report;
}

MassReport beta_infinity() {
    MassReport report;
    for (const auto& alg : real_etale_quintics()) {
        MassTerm term;
        term.algebra = alg.to_string();
        term.aut = algebra_aut_order(alg);
        term.mass = make_rat(1, term.aut);
        report.sum += term.mass;
        report.terms.push_back(std::move(term));
    }
    report.total = Rat(1, 2) * report.sum;
    report.closed_form = make_rat(13, 120);
    report.match = report.total == report.closed_form;
    return report;
}

}  // namespace qpl
