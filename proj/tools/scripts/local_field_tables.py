#!/usr/bin/env python3
"""Build the local-field fixture tables under data/localfields/.

For a prime p and every (e, f) with e*f <= 5 this enumerates isomorphism
classes of extensions K/Q_p with ramification index e and residue degree f,
together with the discriminant exponent c and |Aut_{Q_p}(K)|.

Method
------
* K is written as F(pi) where F is the unramified extension of degree f
  (presented by the minimal polynomial of a Teichmueller unit, so Frobenius
  acts by y -> y^p) and pi is a root of an Eisenstein polynomial E over O_F.
* The different exponent d = v_pi(E'(pi)) is read off the coefficient
  valuations; c = f*d.
* Eisenstein polynomials are sampled conditionally on d.  Two samples give the
  same Q_p-field iff some Frobenius twist of one has a root in the other;
  |Aut| is the total number of roots of all twists of E in K.  Roots are
  counted by a pi-adic digit search certified by Hensel's lemma.
* Completeness is certified per d: the Haar measure of Eisenstein polynomials
  with different exponent d is an exact rational, and Serre's mass formula
  turns it into the exact value of sum(1/|Aut|) over the classes with that d.
  Sampling stops only when the discovered classes reach that mass exactly.

Nothing here is consulted by the C++ library at run time; the output files
are the checked-in fixtures.
"""

import argparse
import itertools
import random
import sys
from fractions import Fraction
from math import comb


def vp_int(x, p, cap):
    if x == 0:
        return cap
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


class UnramifiedRing:
    """O_F / p^N for F unramified of degree f, basis 1, y, ..., y^(f-1)."""

    def __init__(self, p, f, prec):
        self.p, self.f, self.N = p, f, prec
        self.M = p ** prec
        self.h = self._teichmueller_modulus()
        self.frob_y = self.power(self.gen(), p)

    # -- basic arithmetic -------------------------------------------------
    def zero(self):
        return (0,) * self.f

    def const(self, a):
        return ((a % self.M),) + (0,) * (self.f - 1)

    def gen(self):
        if self.f == 1:
            return self.const(0)
        return (0, 1) + (0,) * (self.f - 2)

    def add(self, a, b):
        return tuple((x + y) % self.M for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.M for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.M for x in a)

    def scale(self, a, k):
        return tuple((x * k) % self.M for x in a)

    def mul(self, a, b, h=None):
        h = self.h if h is None else h
        f = self.f
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for k in range(2 * f - 2, f - 1, -1):
            c = prod[k] % self.M
            if c:
                for j in range(f):
                    prod[k - f + j] -= c * h[j]
            prod[k] = 0
        return tuple(x % self.M for x in prod[:f])

    def power(self, a, k, h=None):
        result = self.const(1)
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base, h)
            base = self.mul(base, base, h)
            k >>= 1
        return result

    def val(self, a):
        return min(vp_int(x, self.p, self.N) for x in a)

    def frobenius(self, a, times=1):
        for _ in range(times):
            acc = self.zero()
            ypow = self.const(1)
            for b in a:
                if b:
                    acc = self.add(acc, self.scale(ypow, b))
                ypow = self.mul(ypow, self.frob_y)
            a = acc
        return a

    # -- construction of the Teichmueller modulus -------------------------
    def _teichmueller_modulus(self):
        p, f = self.p, self.f
        if f == 1:
            return (0,)
        h0 = self._irreducible_mod_p()
        # Teichmueller lift of the class of x in Z/p^N[x]/(h0).
        x = (0, 1) + (0,) * (f - 2)
        q = p ** f
        w = x
        for _ in range(self.N + 1):
            w = self.power(w, q, h0)
        conj = [w]
        for _ in range(f - 1):
            conj.append(self.power(conj[-1], p, h0))
        # h(Y) = prod (Y - w_k); coefficients must be constants.
        poly = [self.const(1)]
        for wk in conj:
            nxt = [self.zero() for _ in range(len(poly) + 1)]
            for i, c in enumerate(poly):
                nxt[i + 1] = self.add(nxt[i + 1], c)
                nxt[i] = self.sub(nxt[i], self.mul(c, wk, h0))
            poly = nxt
        coeffs = []
        for c in poly[:f]:
            if any(c[1:]):
                raise RuntimeError("Teichmueller modulus has non-constant coefficient")
            coeffs.append(c[0])
        return tuple(coeffs)

    def _irreducible_mod_p(self):
        p, f = self.p, self.f
        for tail in itertools.product(range(p), repeat=f):
            cand = list(tail) + [1]
            if cand[0] == 0:
                continue
            if not any(_divides_mod_p(g, cand, p)
                       for deg in range(1, f // 2 + 1)
                       for g in _monic_polys(p, deg)):
                return tuple(tail)
        raise RuntimeError("no irreducible polynomial found")

    def residues(self):
        return [tuple(t) for t in itertools.product(range(self.p), repeat=self.f)]


def _monic_polys(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def _divides_mod_p(g, a, p):
    r = [x % p for x in a]
    dg = len(g) - 1
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c:
            for j in range(dg + 1):
                r[k - dg + j] = (r[k - dg + j] - c * g[j]) % p
    return not any(r[:dg])


class RamifiedField:
    """O_K / p^N with K = F(pi), pi a root of the Eisenstein polynomial E."""

    def __init__(self, ring, eis):
        self.R = ring
        self.E = eis            # list of e coefficients (elements of O_F); monic
        self.e = len(eis)
        self.cap = self.e * ring.N

    def zero(self):
        return [self.R.zero() for _ in range(self.e)]

    def embed(self, a):
        z = self.zero()
        z[0] = a
        return z

    def add(self, a, b):
        return [self.R.add(x, y) for x, y in zip(a, b)]

    def mul(self, a, b):
        R, e = self.R, self.e
        prod = [R.zero() for _ in range(2 * e - 1)]
        for i, x in enumerate(a):
            if any(x):
                for j, y in enumerate(b):
                    if any(y):
                        prod[i + j] = R.add(prod[i + j], R.mul(x, y))
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if any(c):
                for j in range(e):
                    prod[k - e + j] = R.sub(prod[k - e + j], R.mul(c, self.E[j]))
        return prod[:e]

    def val(self, a):
        return min(self.e * self.R.val(c) + i for i, c in enumerate(a))

    def pi_power(self, k):
        z = self.embed(self.R.const(1))
        pi = self.zero()
        if self.e == 1:
            pi[0] = self.R.neg(self.E[0])
        else:
            pi[1] = self.R.const(1)
        for _ in range(k):
            z = self.mul(z, pi)
        return z

    def evaluate(self, poly, beta):
        acc = self.embed(poly[-1])
        for c in reversed(poly[:-1]):
            acc = self.add(self.mul(acc, beta), self.embed(c))
        return acc

    def count_roots(self, poly):
        """Number of roots in K of a polynomial with O_F coefficients."""
        R = self.R
        if len(poly) == 2:
            return 1
        deriv = [R.scale(c, i) for i, c in enumerate(poly)][1:]
        # Hasse derivatives G_k = G^(k)/k!, all with O_F coefficients.
        hasse = [[R.scale(poly[i + k], comb(i + k, k)) for i in range(len(poly) - k)]
                 for k in range(1, len(poly))]
        digits = [self.embed(d) for d in R.residues()]
        pi_pows = {}
        found = 0
        frontier = [(d, 0) for d in digits]
        while frontier:
            nxt = []
            for beta, m in frontier:
                vg = self.val(self.evaluate(poly, beta))
                # A truncation of a root at level m satisfies
                # G(beta) = -sum_k G_k(beta) delta^k with v(delta) >= m + 1.
                need = min(self.val(self.evaluate(hk, beta)) + (k + 1) * (m + 1)
                           for k, hk in enumerate(hasse))
                if vg < min(need, self.cap):
                    continue
                vd = self.val(self.evaluate(deriv, beta))
                if (2 * vd < self.cap - 2 and vg > 2 * vd and m + 1 > vd
                        and vg - vd >= m + 1):
                    found += 1
                    continue
                if m + 1 >= self.cap - 2:
                    raise RuntimeError("root search too deep")
                if m + 1 not in pi_pows:
                    pi_pows[m + 1] = self.pi_power(m + 1)
                step = pi_pows[m + 1]
                for d in digits:
                    nxt.append((self.add(beta, self.mul(d, step)), m + 1))
            frontier = nxt
        return found


def different_strata(p, e, f):
    """Yield (d, i0, v0, mins) describing each different-exponent stratum."""
    d_max = e * vp_int(e, p, 10 ** 6) + e - 1
    strata = [(d_max, e, None)]
    for i0 in range(1, e):
        v0 = 1
        while True:
            d = e * (vp_int(i0, p, 10 ** 6) + v0) + i0 - 1
            if d >= d_max:
                break
            strata.append((d, i0, v0))
            v0 += 1
    out = []
    for d, i0, v0 in sorted(strata):
        mins = {}
        for i in range(1, e):
            if i == i0:
                continue
            m = 1
            while e * (vp_int(i, p, 10 ** 6) + m) + i - 1 <= d:
                m += 1
            mins[i] = m
        out.append((d, i0, v0, mins))
    return out


def stratum_mass(p, e, f, d, i0, v0, mins):
    q = p ** f
    prob = Fraction(1)
    for m in mins.values():
        prob /= Fraction(q) ** (m - 1)
    if i0 < e:
        prob *= Fraction(1, q ** (v0 - 1)) * (1 - Fraction(1, q))
    # Serre: measure = sum over F-classes of q^-(d-e+1)/|Aut_F|;
    # Q_p-classes carry 1/f of the F-class mass.
    return prob * Fraction(q) ** (d - e + 1) / f


def random_element(R, rng, min_val, exact=False):
    while True:
        z = tuple((rng.randrange(R.M // R.p ** min_val) * R.p ** min_val) % R.M
                  for _ in range(R.f))
        if not exact or R.val(z) == min_val:
            return z


def classify_stratum(R, e, f, d, i0, v0, mins, target, rng, max_samples):
    reps = []        # list of (field, eis)
    mass = Fraction(0)
    samples = 0
    while mass < target:
        samples += 1
        if samples > max_samples:
            raise RuntimeError(f"stratum e={e} f={f} d={d}: mass {mass} < {target}")
        eis = [random_element(R, rng, 1, exact=True)]
        for i in range(1, e):
            if i == i0:
                eis.append(random_element(R, rng, v0, exact=True))
            else:
                eis.append(random_element(R, rng, mins[i]))
        twists = [[R.frobenius(c, k) for c in eis] + [R.const(1)] for k in range(f)]
        known = False
        for field, _ in reps:
            if any(field.count_roots(t) > 0 for t in twists):
                known = True
                break
        if known:
            continue
        field = RamifiedField(R, eis)
        aut = sum(field.count_roots(t) for t in twists)
        reps.append((field, eis))
        mass += Fraction(1, aut)
        yield aut
    if mass != target:
        raise RuntimeError(f"stratum e={e} f={f} d={d}: mass {mass} overshoots {target}")


def build(p, max_degree, seed, prec, max_samples):
    rng = random.Random(seed)
    records = []
    for n in range(1, max_degree + 1):
        for f in range(1, n + 1):
            if n % f:
                continue
            e = n // f
            R = UnramifiedRing(p, f, prec)
            for d, i0, v0, mins in different_strata(p, e, f):
                target = stratum_mass(p, e, f, d, i0, v0, mins)
                for aut in classify_stratum(R, e, f, d, i0, v0, mins, target,
                                            rng, max_samples):
                    records.append((p, n, e, f, f * d, aut))
    records.sort()
    return records


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, required=True)
    ap.add_argument("--max-degree", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--precision", type=int, default=40)
    ap.add_argument("--max-samples", type=int, default=200000)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    recs = build(args.p, args.max_degree, args.seed, args.precision, args.max_samples)
    lines = ["# p n e f c aut",
             f"# local fields over Q_{args.p} of degree <= {args.max_degree}",
             "# generated by tools/scripts/local_field_tables.py "
             f"(seed {args.seed}, p-adic precision {args.precision})"]
    lines += [" ".join(str(x) for x in r) for r in recs]
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
