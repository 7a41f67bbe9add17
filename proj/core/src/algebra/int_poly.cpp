/**
 * @file int_poly.cpp
 * @brief Integer polynomial arithmetic, resultants and Sturm chains.
 */

#include "qpl/algebra/int_poly.hpp"

#include "qpl/algebra/matrix.hpp"
#include "qpl/util/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qpl {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& a : c_) {
        g = qpl::gcd(g, a);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return {};
    Int g = content();
    if (lc() < 0) g = -g;
    std::vector<Int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(out));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    // Homogenised Horner: sum a_i n^i d^(deg-i), divided by d^deg at the end.
    if (is_zero()) return 0;
    const Int& n = x.get_num();
    const Int& d = x.get_den();
    Int acc = 0;
    Int dpow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * n + *it * dpow;
        dpow *= d;
    }
    return make_rat(acc, ipow(d, static_cast<unsigned long>(degree())));
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

int IntPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    const Int& n = x.get_num();
    const Int& d = x.get_den();
    Int acc = 0;
    Int dpow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * n + *it * dpow;
        dpow *= d;
    }
    return sgn(acc);  // d > 0, so d^deg does not change the sign
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Int> out(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = -a.c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(out));
}

IntPoly operator*(const Int& k, const IntPoly& a) {
    std::vector<Int> out(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = k * a.c_[i];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DimensionMismatch("pseudo-division by zero polynomial");
    if (a.degree() < b.degree()) return {IntPoly{}, a};
    const int db = b.degree();
    const Int& l = b.lc();
    std::vector<Int> r = a.coeffs();
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        const Int t = r[static_cast<std::size_t>(k)];
        for (auto& x : r) x *= l;
        for (auto& x : q) x *= l;
        q[static_cast<std::size_t>(k - db)] += t;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) {
        if (quotient) *quotient = IntPoly{};
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Int> r = a.coeffs();
    const int db = b.degree();
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1));
    Int rem;
    for (int k = a.degree(); k >= db; --k) {
        Int& top = r[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        Int t;
        mpz_tdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        if (rem != 0) return false;
        q[static_cast<std::size_t>(k - db)] = t;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    for (int k = 0; k < db; ++k)
        if (r[static_cast<std::size_t>(k)] != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive();
    IntPoly y = b.primitive();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_divmod(x, y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

bool is_squarefree(const IntPoly& f) {
    if (f.degree() <= 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree();
    const int n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    const std::size_t size = static_cast<std::size_t>(m + n);
    IntMatrix s(size, size);
    // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 shifted copies of g;
    // columns are indexed by descending powers of x.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = f.coeffs()[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) = g.coeffs()[static_cast<std::size_t>(n - j)];
    return determinant(s);
}

Rat poly_discriminant(const IntPoly& f) {
    const int d = f.degree();
    if (d < 1) throw DimensionMismatch("discriminant needs degree >= 1");
    if (d == 1) return 1;
    Int res = resultant(f, f.derivative());
    if (((d * (d - 1)) / 2) % 2 == 1) res = -res;
    return make_rat(res, f.lc());
}

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    if (f.is_zero()) return chain;
    chain.push_back(f);
    IntPoly d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        IntPoly r = pseudo_divmod(a, b).second;
        if (r.is_zero()) break;
        // prem multiplies by lc(b)^(delta+1); undo a negative multiplier so the
        // chain keeps the signs of the true Euclidean remainders.
        const int delta = a.degree() - b.degree();
        if (b.lc() < 0 && (delta + 1) % 2 == 1) r = -r;
        r = -r;
        const Int c = r.content();
        std::vector<Int> scaled(r.coeffs().size());
        for (std::size_t i = 0; i < scaled.size(); ++i) mpz_divexact(scaled[i].get_mpz_t(), r.coeffs()[i].get_mpz_t(), c.get_mpz_t());
        chain.emplace_back(std::move(scaled));
    }
    return chain;
}

namespace {
int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}
}  // namespace

int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(p.sign_at(x));
    return variations(signs);
}

int real_root_count(const IntPoly& f) {
    if (f.degree() <= 0) return 0;
    if (!is_squarefree(f)) throw NotSquarefree(f.to_string());
    const auto chain = sturm_chain(f);
    std::vector<int> at_pos;
    std::vector<int> at_neg;
    for (const auto& p : chain) {
        const int s = sgn(p.lc());
        at_pos.push_back(s);
        at_neg.push_back(p.degree() % 2 == 0 ? s : -s);
    }
    return variations(at_neg) - variations(at_pos);
}

Int root_bound(const IntPoly& f) {
    if (f.degree() <= 0) return 1;
    Int m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, Int(abs(f.coeffs()[static_cast<std::size_t>(i)])));
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), Int(abs(f.lc())).get_mpz_t());
    return q + 1;
}

}  // namespace qpl
