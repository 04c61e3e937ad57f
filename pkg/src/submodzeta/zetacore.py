"""Local and global submodule zeta formulas, in exact symbolic form.

A local Euler factor is a product of binomials (1 - X^a Y^b)^e with X the
residue size and Y = X^(-s); such products are represented canonically by
their sorted factor lists, which determines them uniquely as rational
functions (the binomials are multiplicatively independent).  On top of
that sit: the w_lambda factor of a nilpotent block, the good-prime Euler
factor of a general elementary divisor vector, the global product of
shifted Dedekind zeta factors, the abscissa of convergence with its pole
multiplicity, functional-equation exponents and their verification, the
pole-at-zero criterion, two closed forms (ideals of Z_p[x]/(x^n) and
submodules of the power-series ring), the one hard-coded exceptional
bad-prime factor in size 2, and exact coefficient expansion bridging all
formulas to the brute-force oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .canonical import ElementaryDivisorVector
from .linalg import IntPoly, resultant
from .partitions import Partition
from .polyfactor import SplittingProfile, splitting_profile


class BadPrimeError(ValueError):
    """The generic local formula is not trusted (or not defined) at this prime."""


class RamifiedPrimeError(BadPrimeError):
    """f mod p is not squarefree, so the generic local formula is undefined."""


# ---------------------------------------------------------------------------
# canonical binomial products


@dataclass(frozen=True)
class BinomialProduct:
    """Product of (1 - X^a Y^b)^e factors in canonical form.

    factors are (a, b, e) triples, sorted by (a, b), one triple per (a, b),
    with e != 0.  Equality of canonical lists is equality of the rational
    functions they denote.
    """

    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        previous = None
        for a, b, e in self.factors:
            if a < 0 or b < 1 or e == 0:
                raise ValueError(f"bad factor {(a, b, e)!r}")
            if previous is not None and (a, b) <= previous:
                raise ValueError("factors not canonical; use from_factors")
            previous = (a, b)

    @classmethod
    def from_factors(cls, items) -> BinomialProduct:
        merged: dict[tuple[int, int], int] = {}
        for a, b, e in items:
            merged[(a, b)] = merged.get((a, b), 0) + e
        canon = tuple(
            (a, b, e) for (a, b), e in sorted(merged.items()) if e != 0
        )
        return cls(canon)

    @classmethod
    def one(cls) -> BinomialProduct:
        return cls(())

    def __mul__(self, other):
        if not isinstance(other, BinomialProduct):
            return NotImplemented
        return BinomialProduct.from_factors(self.factors + other.factors)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError("integer power expected")
        return BinomialProduct.from_factors(
            (a, b, e * k) for a, b, e in self.factors
        )

    def inverse(self) -> BinomialProduct:
        return self ** -1

    @property
    def is_pure_denominator(self) -> bool:
        """True when every exponent is negative (an honest Euler factor)."""
        return all(e < 0 for _, _, e in self.factors)

    def text(self) -> str:
        if not self.factors:
            return "1"
        pieces = []
        for a, b, e in self.factors:
            qpart = f"q^{a} " if a else ""
            pieces.append(f"(1 - {qpart}t^{b})^{e}")
        return " ".join(pieces)

    def to_json(self) -> list[dict]:
        return [{"a": a, "b": b, "e": e} for a, b, e in self.factors]

    def __str__(self):
        return self.text()


def w_lambda(lam: Partition) -> BinomialProduct:
    """The local factor attached to a nilpotent block of the given dual type.

    One inverse binomial per diagram cell j: (1 - X^(j-1) Y^ind(j))^(-1).
    """
    if lam.size == 0:
        raise ValueError("empty partition has no local factor")
    return BinomialProduct.from_factors(
        (j - 1, lam.ind(j), -1) for j in range(1, lam.size + 1)
    )


# ---------------------------------------------------------------------------
# good primes and the local Euler factor


def _pairwise_resultants(edv: ElementaryDivisorVector) -> list[tuple[IntPoly, IntPoly, int]]:
    out = []
    entries = edv.entries
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            f, g = entries[i][0], entries[j][0]
            out.append((f, g, resultant(f, g)))
    return out


def _discriminant_like(f: IntPoly) -> int:
    """Resultant of f and f'; vanishes mod p exactly when f mod p is not squarefree."""
    if f.degree == 1:
        return 1
    return resultant(f, f.derivative())


def is_good_prime(p: int, edv: ElementaryDivisorVector, denominator_lcm: int = 1) -> bool:
    """Heuristic goodness: the generic local formula is expected at good p.

    Bad when p <= n, p divides a leaked denominator, any f_i fails to stay
    squarefree mod p, or p divides a pairwise resultant.  Over-approximates;
    the oracle comparison catches (and demotes) anything that slips through.
    """
    if p <= edv.n:
        return False
    if denominator_lcm % p == 0:
        return False
    for f, _ in edv.entries:
        if _discriminant_like(f) % p == 0:
            return False
    for _, _, r in _pairwise_resultants(edv):
        if r % p == 0:
            return False
    return True


def good_primes(edv: ElementaryDivisorVector, denominator_lcm: int = 1):
    """Ascending heuristically-good primes; an infinite generator."""
    p = 1
    while True:
        p = int(sympy.nextprime(p))
        if is_good_prime(p, edv, denominator_lcm):
            yield p


def bad_prime_reasons(edv: ElementaryDivisorVector, denominator_lcm: int = 1) -> dict[int, tuple[str, ...]]:
    """Every heuristically-bad prime, each with its list of reasons."""
    reasons: dict[int, list[str]] = {}

    def add(p, why):
        reasons.setdefault(p, []).append(why)

    for p in sympy.primerange(2, edv.n + 1):
        add(int(p), f"p <= n = {edv.n}")
    for f, _ in edv.entries:
        d = _discriminant_like(f)
        for p in sympy.factorint(d):
            add(int(p), f"{f} not squarefree mod p")
    for f, g, r in _pairwise_resultants(edv):
        for p in sympy.factorint(r):
            add(int(p), f"divides resultant of {f} and {g}")
    if denominator_lcm > 1:
        for p in sympy.factorint(denominator_lcm):
            add(int(p), "divides a primary-decomposition denominator")
    return {p: tuple(dict.fromkeys(rs)) for p, rs in sorted(reasons.items())}


def generic_local_factor(edv: ElementaryDivisorVector, p: int) -> BinomialProduct:
    """The generic-prime Euler factor, with no goodness check beyond ramification.

    For every irreducible f, every place of residue degree d above p, and
    every cell j of the partition: (1 - X^(d(j-1)) Y^(d ind(j)))^(-1) with
    the index function taken on the dual partition.
    """
    factors = []
    for f, lam in edv.entries:
        profile = splitting_profile(f, p)
        if profile.ramified:
            raise RamifiedPrimeError(f"{f} is not squarefree mod {p}")
        mu = lam.dual()
        for d in profile.degrees:
            for j in range(1, lam.size + 1):
                factors.append((d * (j - 1), d * mu.ind(j), -1))
    return BinomialProduct.from_factors(factors)


def local_euler_factor(edv: ElementaryDivisorVector, p: int, denominator_lcm: int = 1) -> BinomialProduct:
    """Local Euler factor at a heuristically-good prime; raises BadPrimeError else."""
    if not is_good_prime(p, edv, denominator_lcm):
        raise BadPrimeError(
            f"p = {p} fails the good-prime heuristic; use the oracle's truncated factor"
        )
    return generic_local_factor(edv, p)


# ---------------------------------------------------------------------------
# the global expression


@dataclass(frozen=True)
class GlobalZetaExpression:
    """Product of shifted Dedekind zeta factors, plus bad-prime flags.

    Each factor (f, scale, shift) denotes the zeta function of the ring of
    integers of Q[x]/(f), S-localized away from the bad primes, evaluated
    at scale*s - shift.
    """

    dedekind_factors: tuple[tuple[IntPoly, int, int], ...]
    bad_primes: tuple[tuple[int, tuple[str, ...]], ...]

    @property
    def bad_prime_set(self) -> frozenset[int]:
        return frozenset(p for p, _ in self.bad_primes)

    @staticmethod
    def _argument(scale: int, shift: int) -> str:
        s = "s" if scale == 1 else f"{scale}s"
        return s if shift == 0 else f"{s}-{shift}"

    def text(self) -> str:
        pieces = []
        for f, scale, shift in self.dedekind_factors:
            name = "zeta" if f.degree == 1 else f"zeta_[{f}]"
            pieces.append(f"{name}({self._argument(scale, shift)})")
        return "*".join(pieces) if pieces else "1"

    def latex(self) -> str:
        pieces = []
        for f, scale, shift in self.dedekind_factors:
            if f.degree == 1:
                name = r"\zeta"
            else:
                name = r"\zeta_{\mathbf{Q}[x]/(" + _poly_latex(f) + r")}"
            pieces.append(f"{name}({self._argument(scale, shift)})")
        return "".join(pieces) if pieces else "1"

    def to_json(self) -> dict:
        return {
            "dedekind_factors": [
                {"poly": f.to_json(), "scale": scale, "shift": shift}
                for f, scale, shift in self.dedekind_factors
            ],
            "bad_primes": {str(p): list(rs) for p, rs in self.bad_primes},
        }


def _poly_latex(f: IntPoly) -> str:
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xpart = "x" if k == 1 else f"x^{{{k}}}"
            body = xpart if mag == 1 else f"{mag}{xpart}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def global_formula(edv: ElementaryDivisorVector, bad_primes=None) -> GlobalZetaExpression:
    """The global zeta expression: one Dedekind factor per entry and cell.

    Cell j of entry (f, lam) contributes the factor for Q[x]/(f) at
    ind(j)*s - (j-1), the index function taken on the dual partition.
    Bad primes (mapping p -> reasons) are carried through as flags.
    """
    if bad_primes is None:
        bad_primes = bad_prime_reasons(edv)
    factors = []
    for f, lam in edv.entries:
        mu = lam.dual()
        for j in range(1, lam.size + 1):
            factors.append((f, mu.ind(j), j - 1))
    flags = tuple(sorted((int(p), tuple(rs)) for p, rs in dict(bad_primes).items()))
    return GlobalZetaExpression(tuple(factors), flags)


# ---------------------------------------------------------------------------
# abscissa of convergence and pole multiplicity


def abscissa(edv: ElementaryDivisorVector) -> tuple[int, int]:
    """(alpha, beta): rightmost pole location and its multiplicity.

    alpha is the longest partition length; beta sums the last parts of the
    partitions attaining it.
    """
    alpha = max(lam.length for _, lam in edv.entries)
    beta = sum(lam.last_part for _, lam in edv.entries if lam.length == alpha)
    return alpha, beta


def abscissa_from_factors(f: BinomialProduct) -> Fraction:
    """Rightmost real pole of a pure Euler denominator: max (a+1)/b."""
    if not f.factors:
        raise ValueError("empty product has no pole")
    if not f.is_pure_denominator:
        raise ValueError("mixed products are unsupported; need all exponents negative")
    return max(Fraction(a + 1, b) for a, b, _ in f.factors)


# ---------------------------------------------------------------------------
# functional equation


@dataclass(frozen=True)
class FunctionalEquationData:
    """Exponents of the local symmetry under inversion of the residue size.

    Predicts F(X^-1, Y^-1) = (-1)^sign_exponent X^q_exponent Y^s_exponent F(X, Y).
    The sign exponent depends on the place through the number of places
    above it; the other two do not.
    """

    sign_exponent: int
    q_exponent: int
    s_exponent: int

    def to_json(self) -> dict:
        return {
            "sign_exponent": self.sign_exponent,
            "q_exponent": self.q_exponent,
            "s_exponent": self.s_exponent,
        }


def functional_equation_data(edv: ElementaryDivisorVector, profiles) -> FunctionalEquationData:
    """The three exponents, from the elementary divisor vector and one profile per f_i."""
    profiles = list(profiles)
    if len(profiles) != len(edv.entries):
        raise ValueError("need exactly one splitting profile per entry")
    primes = {pr.prime for pr in profiles}
    if len(primes) > 1:
        raise ValueError("profiles must all live over the same prime")
    sign = 0
    q_exp = 0
    s_exp = 0
    for (f, lam), profile in zip(edv.entries, profiles):
        if not isinstance(profile, SplittingProfile):
            raise ValueError("profiles must be SplittingProfile values")
        if profile.ramified:
            raise ValueError(f"ramified profile at p = {profile.prime}")
        mu = lam.dual()
        sign += lam.size * profile.num_places
        q_exp += f.degree * math.comb(lam.size, 2)
        s_exp += f.degree * sum(j * mu.parts[j - 1] for j in range(1, mu.length + 1))
    return FunctionalEquationData(sign, q_exp, s_exp)


def verify_functional_equation(f: BinomialProduct, data: FunctionalEquationData) -> bool:
    """Check the inversion symmetry of a pure Euler factor against predicted exponents.

    Each factor (1 - X^-a Y^-b)^e equals (-1)^e X^-ae Y^-be (1 - X^a Y^b)^e,
    so a pure denominator transforms by (-1)^m X^A Y^B with m = sum(-e),
    A = sum(-e a), B = sum(-e b).  Anything with a non-negative exponent is
    not a pure Euler factor and never verifies.
    """
    m = 0
    a_total = 0
    b_total = 0
    for a, b, e in f.factors:
        if e >= 0:
            return False
        m += -e
        a_total += -e * a
        b_total += -e * b
    return (m, a_total, b_total) == (
        data.sign_exponent,
        data.q_exponent,
        data.s_exponent,
    )


def has_simple_pole_at_zero(edv: ElementaryDivisorVector) -> bool:
    """True exactly when a single irreducible acts and it is linear."""
    return len(edv.entries) == 1 and edv.entries[0][0].degree == 1


# ---------------------------------------------------------------------------
# closed forms


def zpxn_zeta(n: int) -> BinomialProduct:
    """Ideal zeta factor of Z_p[x]/(x^n): product of (1 - X^(j-1) Y^j)^(-1)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    return w_lambda(Partition([1] * n))


def powerseries_ring_coeffs(n_max: int) -> list[int]:
    """First coefficients of the submodule growth of the power-series ring.

    Dirichlet coefficients a_1..a_N of the product over j >= 1 of
    zeta(js - j + 1); only factors with 2^j <= N touch the range.
    """
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError("need n_max >= 1")
    coeffs = [0] * (n_max + 1)
    coeffs[1] = 1
    j = 1
    while 2 ** j <= n_max:
        folded = [0] * (n_max + 1)
        m = 1
        while m ** j <= n_max:
            weight = m ** (j - 1)
            step = m ** j
            for idx in range(1, n_max // step + 1):
                if coeffs[idx]:
                    folded[idx * step] += coeffs[idx] * weight
            m += 1
        coeffs = folded
        j += 1
    return coeffs[1:]


# ---------------------------------------------------------------------------
# exact coefficient expansion


@dataclass(frozen=True)
class DirichletCoefficients:
    """Exact coefficients a_{p^0}..a_{p^E} of a local factor at one prime."""

    prime: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("need at least the constant coefficient")
        if self.values[0] != 1:
            raise ValueError("constant coefficient must be 1")

    @property
    def max_exponent(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, e: int) -> int:
        return self.values[e]

    def __iter__(self):
        return iter(self.values)

    def to_json(self) -> dict:
        return {"prime": self.prime, "values": list(self.values)}


def _expand_binomials(factors, p: int, max_exp: int) -> list[int]:
    """Series in Y of prod (1 - p^a Y^b)^e, truncated at Y^max_exp."""
    coeffs = [0] * (max_exp + 1)
    coeffs[0] = 1
    for a, b, e in factors:
        scale = p ** a
        if e < 0:
            for _ in range(-e):
                for i in range(b, max_exp + 1):
                    coeffs[i] += scale * coeffs[i - b]
        else:
            for _ in range(e):
                for i in range(max_exp, b - 1, -1):
                    coeffs[i] -= scale * coeffs[i - b]
    return coeffs


def dirichlet_coefficients(f: BinomialProduct, p: int, max_exp: int) -> DirichletCoefficients:
    """Exact expansion of a binomial product at X = p, up to Y^max_exp."""
    if max_exp < 0:
        raise ValueError("max_exp must be >= 0")
    return DirichletCoefficients(p, tuple(_expand_binomials(f.factors, p, max_exp)))


@dataclass(frozen=True)
class XYRational:
    """A polynomial numerator in X and Y times a canonical binomial product."""

    numerator: tuple[tuple[int, int, int], ...]  # (a, b, coefficient) terms X^a Y^b
    binomials: BinomialProduct

    @classmethod
    def one(cls) -> XYRational:
        return cls(((0, 0, 1),), BinomialProduct.one())

    @property
    def is_one(self) -> bool:
        return self.numerator == ((0, 0, 1),) and not self.binomials.factors

    def __mul__(self, other):
        if isinstance(other, BinomialProduct):
            return XYRational(self.numerator, self.binomials * other)
        return NotImplemented

    def series(self, p: int, max_exp: int) -> list[int]:
        """Exact Y-series coefficients at X = p, up to Y^max_exp."""
        base = _expand_binomials(self.binomials.factors, p, max_exp)
        out = [0] * (max_exp + 1)
        for a, b, c in self.numerator:
            if b > max_exp:
                continue
            scale = c * p ** a
            for i in range(b, max_exp + 1):
                out[i] += scale * base[i - b]
        return out

    def dirichlet_coefficients(self, p: int, max_exp: int) -> DirichletCoefficients:
        return DirichletCoefficients(p, tuple(self.series(p, max_exp)))


def exceptional_factor_2x2(e: int) -> XYRational:
    """The extra factor for a 2x2 matrix [[0, a], [0, 0]] with p-valuation e > 0.

    Multiplies the two inverse binomials (1-Y)^(-1) (1-XY^2)^(-1); when the
    valuation is zero it degenerates to 1 (the numerator cancels the
    denominator exactly).
    """
    if not isinstance(e, int) or e < 0:
        raise ValueError("valuation must be a non-negative integer")
    if e == 0:
        return XYRational.one()
    numerator = (
        (0, 0, 1),
        (1, 2, -1),
        (e + 1, e + 1, -1),
        (e + 1, e + 2, 1),
    )
    return XYRational(numerator, BinomialProduct.from_factors([(1, 1, -1)]))
