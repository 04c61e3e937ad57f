"""Factorization of monic integer polynomials and residue degrees mod p.

Two jobs.  factor_over_z splits a monic polynomial into monic irreducible
integer factors (squarefree decomposition, factorization mod a good small
prime, Hensel lifting, subset recombination -- delegated to sympy, which
implements exactly that pipeline).  splitting_profile reads off the degrees
of the irreducible factors of f mod p by distinct-degree factorization;
those degrees are the residue degrees of the primes above p in the number
field cut out by f.  Only the degrees and their count are ever needed, so
no equal-degree splitting happens and everything stays deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .linalg import IntPoly

DEFAULT_DEGREE_CAP = 24


class DegreeCapError(ValueError):
    """Factorization refused: degree beyond the configured cap."""


@dataclass(frozen=True)
class SplittingProfile:
    """How a prime splits in Q[x]/(f): one residue degree per place above p.

    If f mod p is not squarefree the profile is flagged ramified and carries
    no degrees; downstream code must treat such primes as bad.
    """

    prime: int
    degrees: tuple[int, ...]
    ramified: bool

    @property
    def num_places(self) -> int:
        return len(self.degrees)

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "degrees": list(self.degrees),
            "ramified": self.ramified,
        }


def factor_over_z(f: IntPoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> list[tuple[IntPoly, int]]:
    """Monic irreducible integer factors of f with multiplicities.

    Factors come back sorted by (degree, coefficients); their product is
    checked to reconstruct the input exactly.
    """
    if not f.is_monic:
        raise ValueError("factor_over_z wants a monic polynomial")
    if f.degree < 1:
        raise ValueError("factor_over_z wants degree >= 1")
    if f.degree > degree_cap:
        raise DegreeCapError(
            f"degree {f.degree} exceeds the factorization cap {degree_cap}; "
            "supply the factorization directly to bypass"
        )
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(f.coeffs)), x, domain="ZZ")
    constant, parts = poly.factor_list()
    assert constant == 1, "monic input must factor with unit content"
    factors = []
    for part, mult in parts:
        coeffs = [int(c) for c in reversed(part.all_coeffs())]
        factors.append((IntPoly(coeffs), int(mult)))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    product = IntPoly([1])
    for g, m in factors:
        product = product * g ** m
    assert product == f, "factor product must reconstruct the input"
    return factors


# ---------------------------------------------------------------------------
# dense arithmetic in GF(p)[x]; coefficients lowest degree first, in [0, p)


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_from_intpoly(f: IntPoly, p: int):
    return _gf_trim([c % p for c in f.coeffs])


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gf_trim(out)


def _gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * inv % p
        if c:
            q[i - db] = c
            for k in range(len(b)):
                rem[i - db + k] = (rem[i - db + k] - c * b[k]) % p
    return _gf_trim(q), _gf_trim(rem)


def _gf_mod(a, b, p):
    return _gf_divmod(a, b, p)[1]


def _gf_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _gf_mod(a, b, p)
    return _gf_monic(a, p)


def _gf_pow_mod(base, exp, mod, p):
    result = [1]
    base = _gf_mod(base, mod, p)
    while exp:
        if exp & 1:
            result = _gf_mod(_gf_mul(result, base, p), mod, p)
        base = _gf_mod(_gf_mul(base, base, p), mod, p)
        exp >>= 1
    return result


def _gf_derivative(a, p):
    return _gf_trim([i * c % p for i, c in enumerate(a)][1:])


def splitting_profile(f: IntPoly, p: int) -> SplittingProfile:
    """Degrees of the irreducible factors of f mod p, by distinct-degree steps.

    The caller promises f monic irreducible over Q.  When f mod p fails to
    be squarefree the prime ramifies in Q[x]/(f) (or at least we refuse to
    tell the difference) and the profile only carries the flag.
    """
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if not f.is_monic or f.degree < 1:
        raise ValueError("splitting_profile wants a monic polynomial of degree >= 1")
    fbar = _gf_from_intpoly(f, p)
    if _gf_gcd(fbar, _gf_derivative(fbar, p), p) != [1]:
        return SplittingProfile(p, (), True)
    degrees = []
    g = fbar
    w = _gf_mod([0, 1], g, p)  # x mod g
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        w = _gf_pow_mod(w, p, g, p)  # x^(p^d) mod g
        diff = list(w)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        h = _gf_gcd(g, _gf_trim(diff), p)
        if len(h) - 1 > 0:
            degrees.extend([d] * ((len(h) - 1) // d))
            g, r = _gf_divmod(g, h, p)
            assert not r
            w = _gf_mod(w, g, p)
    if len(g) - 1 > 0:
        degrees.append(len(g) - 1)
    return SplittingProfile(p, tuple(sorted(degrees)), False)
