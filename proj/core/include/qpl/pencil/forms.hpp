#pragma once

/**
 * @file forms.hpp
 * @brief Homogeneous integer polynomials in the four pencil variables t1..t4.
 *
 * A form of degree d is stored densely over the C(d+3, 3) monomials of that
 * degree, listed in lexicographic order of exponent vectors with t1 highest
 * (t1^d first, t4^d last).  Degrees up to kMaxDegree are supported.
 */

#include "qpl/algebra/numbers.hpp"

#include <array>
#include <string>
#include <vector>

namespace qpl {

using Exponent4 = std::array<int, 4>;

class Form {
public:
    static constexpr int kMaxDegree = 6;

    Form() = default;
    /// Zero form of the given degree.
    explicit Form(int degree);
    Form(int degree, std::vector<Int> coeffs);

    /// The linear form c1 t1 + ... + c4 t4.
    static Form linear(const std::array<Int, 4>& c);
    /// The monomial with the given exponents.
    static Form monomial(const Exponent4& e);

    /// Number of monomials of degree d in four variables.
    static std::size_t monomial_count(int degree);
    /// Monomials of degree d in storage order.
    static const std::vector<Exponent4>& monomials(int degree);
    /// Position of a monomial in the storage order of its degree.
    static std::size_t monomial_index(const Exponent4& e);

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] const std::vector<Int>& coeffs() const noexcept { return c_; }
    [[nodiscard]] const Int& coeff(const Exponent4& e) const { return c_[monomial_index(e)]; }
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] Int eval(const std::array<Int, 4>& t) const;
    [[nodiscard]] double eval(const std::array<double, 4>& t) const;
    /// Substitute t -> g·t for a 4×4 matrix given row-major.
    [[nodiscard]] Form substitute(const std::array<std::array<Int, 4>, 4>& g) const;

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(const Form& a);
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(const Int& k, const Form& a);
    friend bool operator==(const Form&, const Form&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    int degree_ = 0;
    std::vector<Int> c_;
};

/// Quaternary quadratic forms (10 coefficients) are forms of degree 2.
using QuadricForm = Form;

}  // namespace qpl
