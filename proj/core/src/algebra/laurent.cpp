/**
 * @file laurent.cpp
 * @brief Arithmetic on Laurent polynomials in a formal prime.
 */

#include "qpl/algebra/laurent.hpp"

#include <cmath>
#include <sstream>

namespace qpl {

LaurentP::LaurentP(std::initializer_list<std::pair<int, Rat>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentP LaurentP::monomial(int e, const Rat& c) {
    LaurentP out;
    out.add_term(e, c);
    return out;
}

void LaurentP::add_term(int e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat LaurentP::coeff(int e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat LaurentP::eval(const Rat& p) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) acc += c * rpow(p, e);
    return acc;
}

double LaurentP::eval(double p) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(p, e);
    return acc;
}

LaurentP LaurentP::shift(int k) const {
    LaurentP out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

LaurentP LaurentP::pow(unsigned n) const {
    LaurentP result = constant(1);
    LaurentP base = *this;
    while (n) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n) base = base * base;
    }
    return result;
}

LaurentP& LaurentP::operator+=(const LaurentP& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentP& LaurentP::operator-=(const LaurentP& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentP operator-(const LaurentP& a) {
    LaurentP out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentP operator*(const LaurentP& a, const LaurentP& b) {
    LaurentP out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentP operator*(const Rat& k, const LaurentP& a) {
    LaurentP out;
    if (k == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, k * c);
    return out;
}

std::string LaurentP::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (!unit || e == 0) os << mag.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            os << var;
            if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        }
    }
    return os.str();
}

}  // namespace qpl
