/**
 * @file forms.cpp
 * @brief Dense homogeneous polynomials in four variables.
 */

#include "qpl/pencil/forms.hpp"

#include "qpl/util/errors.hpp"

#include <sstream>

namespace qpl {

namespace {

struct MonomialTables {
    std::array<std::vector<Exponent4>, Form::kMaxDegree + 1> lists;
    // Exponents are < 8 for every supported degree, so base-8 packing is a
    // perfect hash of the exponent vector.
    std::array<std::size_t, 8 * 8 * 8 * 8> index{};

    MonomialTables() {
        for (int d = 0; d <= Form::kMaxDegree; ++d)
            for (int a = d; a >= 0; --a)
                for (int b = d - a; b >= 0; --b)
                    for (int c = d - a - b; c >= 0; --c) {
                        const Exponent4 e{a, b, c, d - a - b - c};
                        index[key(e)] = lists[static_cast<std::size_t>(d)].size();
                        lists[static_cast<std::size_t>(d)].push_back(e);
                    }
    }
    static std::size_t key(const Exponent4& e) {
        return static_cast<std::size_t>(((e[0] * 8 + e[1]) * 8 + e[2]) * 8 + e[3]);
    }
};

const MonomialTables& tables() {
    static const MonomialTables t;
    return t;
}

void check_degree(int d) {
    if (d < 0 || d > Form::kMaxDegree) throw DimensionMismatch("form degree out of range: " + std::to_string(d));
}

}  // namespace

Form::Form(int degree) : degree_(degree) {
    check_degree(degree);
    c_.resize(monomial_count(degree));
}

Form::Form(int degree, std::vector<Int> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    check_degree(degree);
    if (c_.size() != monomial_count(degree)) throw DimensionMismatch("form coefficient count");
}

Form Form::linear(const std::array<Int, 4>& c) {
    Form f(1);
    for (std::size_t k = 0; k < 4; ++k) f.c_[k] = c[k];  // t1, t2, t3, t4 in storage order
    return f;
}

Form Form::monomial(const Exponent4& e) {
    Form f(e[0] + e[1] + e[2] + e[3]);
    f.c_[monomial_index(e)] = 1;
    return f;
}

std::size_t Form::monomial_count(int degree) {
    check_degree(degree);
    return tables().lists[static_cast<std::size_t>(degree)].size();
}

const std::vector<Exponent4>& Form::monomials(int degree) {
    check_degree(degree);
    return tables().lists[static_cast<std::size_t>(degree)];
}

std::size_t Form::monomial_index(const Exponent4& e) { return tables().index[MonomialTables::key(e)]; }

bool Form::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Int Form::eval(const std::array<Int, 4>& t) const {
    Int acc = 0;
    const auto& mons = monomials(degree_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Int term = c_[k];
        for (std::size_t v = 0; v < 4; ++v) term *= ipow(t[v], static_cast<unsigned long>(mons[k][v]));
        acc += term;
    }
    return acc;
}

double Form::eval(const std::array<double, 4>& t) const {
    double acc = 0.0;
    const auto& mons = monomials(degree_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        double term = c_[k].get_d();
        for (std::size_t v = 0; v < 4; ++v)
            for (int e = 0; e < mons[k][v]; ++e) term *= t[v];
        acc += term;
    }
    return acc;
}

Form Form::substitute(const std::array<std::array<Int, 4>, 4>& g) const {
    std::array<Form, 4> images;
    for (std::size_t v = 0; v < 4; ++v) images[v] = linear(g[v]);
    Form out(degree_);
    const auto& mons = monomials(degree_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Form term(0, {c_[k]});
        for (std::size_t v = 0; v < 4; ++v)
            for (int e = 0; e < mons[k][v]; ++e) term = term * images[v];
        out += term;
    }
    return out;
}

Form& Form::operator+=(const Form& o) {
    if (o.degree_ != degree_) throw DimensionMismatch("adding forms of different degree");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (o.degree_ != degree_) throw DimensionMismatch("subtracting forms of different degree");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Form operator-(const Form& a) {
    Form out(a.degree_);
    for (std::size_t k = 0; k < a.c_.size(); ++k) out.c_[k] = -a.c_[k];
    return out;
}

Form operator*(const Form& a, const Form& b) {
    Form out(a.degree_ + b.degree_);
    const auto& ma = Form::monomials(a.degree_);
    const auto& mb = Form::monomials(b.degree_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            const Exponent4 e{ma[i][0] + mb[j][0], ma[i][1] + mb[j][1], ma[i][2] + mb[j][2], ma[i][3] + mb[j][3]};
            out.c_[Form::monomial_index(e)] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

Form operator*(const Int& k, const Form& a) {
    Form out(a.degree_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = k * a.c_[i];
    return out;
}

std::string Form::to_string() const {
    std::ostringstream os;
    bool first = true;
    const auto& mons = monomials(degree_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const Int mag = abs(c_[k]);
        if (first)
            os << (c_[k] < 0 ? "-" : "");
        else
            os << (c_[k] < 0 ? " - " : " + ");
        first = false;
        bool printed = false;
        if (mag != 1 || degree_ == 0) {
            os << mag.get_str();
            printed = true;
        }
        for (std::size_t v = 0; v < 4; ++v) {
            if (mons[k][v] == 0) continue;
            os << (printed ? "*" : "") << "t" << (v + 1);
            if (mons[k][v] > 1) os << "^" << mons[k][v];
            printed = true;
        }
    }
    return first ? "0" : os.str();
}

}  // namespace qpl
