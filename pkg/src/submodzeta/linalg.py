"""Exact integer and rational linear algebra.

Dense matrices over Z (arbitrary-precision ints) and over Q (Fraction),
integer polynomials, Hermite normal form, fraction-free rank, determinant,
characteristic and minimal polynomials, and the nilpotent normal forms the
rest of the package is phrased in: the companion matrix of a monic
polynomial, the block form n_of (one shift block per part) and its
recursive sibling a_of, conjugate to each other by a permutation.

Convention used everywhere: vectors are rows and matrices act on the
right, x -> x*A.  "Kernel" always means the left kernel {x : x*A = 0}.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .partitions import Partition


# ---------------------------------------------------------------------------
# polynomials over Z


class IntPoly:
    """Integer polynomial; coefficients lowest degree first, trailing zeros stripped."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"integer coefficients required, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    @classmethod
    def x_power(cls, k: int) -> IntPoly:
        """The monomial X^k."""
        return cls([0] * k + [1])

    @classmethod
    def x_minus(cls, a: int) -> IntPoly:
        """The linear polynomial X - a."""
        return cls([-a, 1])

    def __add__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-c for c in self._coeffs])

    def __sub__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_monic(self, g: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder by a monic divisor; stays over the integers."""
        if not isinstance(g, IntPoly) or not g.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self._coeffs)
        dg = g.degree
        q = [0] * max(0, len(rem) - dg)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if c:
                q[i - dg] = c
                for k, gc in enumerate(g.coeffs):
                    rem[i - dg + k] -= c * gc
        return IntPoly(q), IntPoly(rem)

    def evaluate(self, x):
        """Horner evaluation; works for any exact numeric x (int, Fraction)."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly([i * c for i, c in enumerate(self._coeffs)][1:])

    def to_json(self) -> list[int]:
        return list(self._coeffs)

    @classmethod
    def from_json(cls, data) -> IntPoly:
        if not isinstance(data, (list, tuple)):
            raise ValueError("polynomial JSON must be an array of integers")
        return cls(data)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"IntPoly({list(self._coeffs)!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xpart = "x" if k == 1 else f"x^{k}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = first_body if first_sign == "+" else f"-{first_body}"
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant of two integer polynomials via the Sylvester matrix."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        raise ValueError("resultant of the zero polynomial is undefined")
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    rows = []
    frow = list(reversed(f.coeffs))  # highest degree first
    grow = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + frow + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + grow + [0] * (size - n - 1 - i))
    return det(IntMatrix(rows))


# ---------------------------------------------------------------------------
# matrices


class IntMatrix:
    """Dense matrix over Z; immutable, rows are tuples."""

    __slots__ = ("_rows", "_n_rows", "_n_cols")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        width = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"integer entries required, got {x!r}")
        self._rows = rows
        self._n_rows = len(rows)
        self._n_cols = width

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def n_rows(self) -> int:
        return self._n_rows

    @property
    def n_cols(self) -> int:
        return self._n_cols

    @property
    def is_square(self) -> bool:
        return self._n_rows == self._n_cols

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> IntMatrix:
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, n: int, c: int) -> IntMatrix:
        return cls([[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, *blocks) -> IntMatrix:
        n = sum(b.n_rows for b in blocks)
        rows = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            if not b.is_square:
                raise ValueError("block_diag wants square blocks")
            for i in range(b.n_rows):
                for j in range(b.n_cols):
                    rows[off + i][off + j] = b.entries[i][j]
            off += b.n_rows
        return cls(rows)

    @classmethod
    def from_json(cls, obj) -> IntMatrix:
        """Parse {"n": int, "entries": [[...], ...]}; must be square of size n."""
        if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
            raise ValueError('matrix JSON must look like {"n": int, "entries": [[...], ...]}')
        n = obj["n"]
        entries = obj["entries"]
        if not isinstance(n, int) or not isinstance(entries, list):
            raise ValueError("malformed matrix JSON")
        m = cls(entries)
        if m.n_rows != n or m.n_cols != n:
            raise ValueError(f"matrix JSON says n={n} but entries are {m.n_rows}x{m.n_cols}")
        return m

    def to_json(self) -> dict:
        return {"n": self._n_rows, "entries": [list(r) for r in self._rows]}

    def transpose(self) -> IntMatrix:
        return IntMatrix(list(zip(*self._rows))) if self._rows else IntMatrix(())

    def trace(self) -> int:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self._rows[i][i] for i in range(self._n_rows))

    def __add__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if (self._n_rows, self._n_cols) != (other._n_rows, other._n_cols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if (self._n_rows, self._n_cols) != (other._n_rows, other._n_cols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ]
        )

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self._n_cols != other._n_rows:
            raise ValueError("shape mismatch in matrix product")
        bt = list(zip(*other._rows)) if other._rows else []
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self._rows]
        )

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("matrix power wants a non-negative integer")
        if not self.is_square:
            raise ValueError("matrix power of a non-square matrix")
        result = IntMatrix.identity(self._n_rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self._rows]!r})"


class RatMatrix:
    """Dense matrix over Q; entries are Fractions in lowest terms."""

    __slots__ = ("_rows", "_n_rows", "_n_cols")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        width = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
        self._rows = rows
        self._n_rows = len(rows)
        self._n_cols = width

    @property
    def entries(self):
        return self._rows

    @property
    def n_rows(self) -> int:
        return self._n_rows

    @property
    def n_cols(self) -> int:
        return self._n_cols

    @property
    def is_square(self) -> bool:
        return self._n_rows == self._n_cols

    @classmethod
    def from_int(cls, m: IntMatrix) -> RatMatrix:
        return cls(m.entries)

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, n: int, c) -> RatMatrix:
        return cls([[c if i == j else 0 for j in range(n)] for i in range(n)])

    def denominator_lcm(self) -> int:
        """lcm of all entry denominators; 1 for an integral matrix."""
        out = 1
        for r in self._rows:
            for x in r:
                out = math.lcm(out, x.denominator)
        return out

    def __add__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if (self._n_rows, self._n_cols) != (other._n_rows, other._n_cols):
            raise ValueError("shape mismatch")
        return RatMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ]
        )

    def __mul__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self._n_cols != other._n_rows:
            raise ValueError("shape mismatch in matrix product")
        bt = list(zip(*other._rows)) if other._rows else []
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self._rows]
        )

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("matrix power wants a non-negative integer")
        if not self.is_square:
            raise ValueError("matrix power of a non-square matrix")
        result = RatMatrix.identity(self._n_rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RatMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"RatMatrix({[list(map(str, r)) for r in self._rows]!r})"


def matmul(a, b):
    return a * b


def matpow(a, k: int):
    return a ** k


def poly_at_matrix(f: IntPoly, a):
    """Evaluate f at a square matrix (IntMatrix or RatMatrix) by Horner."""
    if not a.is_square:
        raise ValueError("poly_at_matrix wants a square matrix")
    n = a.n_rows
    cls = a.__class__
    result = cls.scalar(n, 0)
    for c in reversed(f.coeffs):
        result = result * a + cls.scalar(n, c)
    return result


# ---------------------------------------------------------------------------
# fraction-free elimination: rank, determinant


def _integer_rows(m) -> list[list[int]]:
    """Rows of m scaled to integers (per-row lcm); rank/kernel-dim safe."""
    rows = []
    for r in m.entries:
        if all(isinstance(x, int) for x in r):
            rows.append(list(r))
            continue
        scale = 1
        for x in r:
            scale = math.lcm(scale, Fraction(x).denominator)
        rows.append([int(Fraction(x) * scale) for x in r])
    return rows


def rank_over_q(m) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows = _integer_rows(m)
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = next((i for i in range(rank, n_rows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for i in range(rank + 1, n_rows):
            factor = rows[i][col]
            for k in range(col + 1, n_cols):
                rows[i][k] = (pivot * rows[i][k] - factor * rows[rank][k]) // prev
            rows[i][col] = 0
        prev = pivot
        rank += 1
    return rank


def kernel_dim(m) -> int:
    """Dimension of the left kernel {x : x*m = 0}."""
    return m.n_rows - rank_over_q(m)


def det(m: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.n_rows
    if n == 0:
        return 1
    rows = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        pivot = rows[col][col]
        for i in range(col + 1, n):
            factor = rows[i][col]
            for k in range(col + 1, n):
                rows[i][k] = (pivot * rows[i][k] - factor * rows[col][k]) // prev
            rows[i][col] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


# ---------------------------------------------------------------------------
# incremental echelon over Q with combination tracking


class _Echelon:
    """Incremental Gaussian elimination over Q that remembers combinations.

    insert(row) returns None when the row opens a new direction, and the
    coefficients c with row = sum(c[t] * original_t) over the previously
    inserted rows when it is dependent.
    """

    def __init__(self, width: int):
        self.width = width
        self.count = 0
        self.pivots = []  # (pivot column, normalized vector, combination)

    def _reduce(self, vec, combo):
        for col, pvec, pcombo in self.pivots:
            c = vec[col]
            if c:
                for k in range(self.width):
                    vec[k] -= c * pvec[k]
                for k in range(len(pcombo)):
                    combo[k] -= c * pcombo[k]
        return vec, combo

    def insert(self, row):
        vec = [Fraction(x) for x in row]
        combo = [Fraction(0)] * self.count + [Fraction(1)]
        vec, combo = self._reduce(vec, combo)
        self.count += 1
        col = next((k for k in range(self.width) if vec[k]), None)
        if col is None:
            # 0 = sum(combo[t] * orig_t) with combo[-1] == 1
            return [-c for c in combo[:-1]]
        inv = Fraction(1) / vec[col]
        vec = [x * inv for x in vec]
        combo = [x * inv for x in combo]
        self.pivots.append((col, vec, combo))
        return None

    def express(self, row):
        """Coefficients of row over the inserted originals, or None if outside."""
        vec = [Fraction(x) for x in row]
        combo = [Fraction(0)] * self.count + [Fraction(1)]
        vec, combo = self._reduce(vec, combo)
        if any(vec):
            return None
        return [-c for c in combo[:-1]]


def kernel_basis(m) -> list[tuple[Fraction, ...]]:
    """Basis of the left kernel {x : x*m = 0}, as Fraction rows."""
    ech = _Echelon(m.n_cols)
    basis = []
    for i, row in enumerate(m.entries):
        combo = ech.insert(row)
        if combo is not None:
            vec = [-c for c in combo] + [Fraction(1)] + [Fraction(0)] * (m.n_rows - i - 1)
            # combo gave row_i = sum(c_t row_t), so (-c_0,...,-c_{i-1},1,0,...) kills m
            basis.append(tuple(vec))
    return basis


def solve_row_combination(rows, target):
    """Coefficients c with sum(c[i]*rows[i]) = target, or None if unsolvable."""
    rows = list(rows)
    if not rows:
        return None
    ech = _Echelon(len(rows[0]))
    for r in rows:
        ech.insert(r)
    return ech.express(target)


# ---------------------------------------------------------------------------
# normal forms


def companion(f: IntPoly) -> IntMatrix:
    """Companion matrix of a monic polynomial: superdiagonal ones, last row -coeffs."""
    if not f.is_monic:
        raise ValueError("companion matrix wants a monic polynomial")
    m = f.degree
    if m < 1:
        raise ValueError("companion matrix wants degree >= 1")
    rows = [[0] * m for _ in range(m)]
    for i in range(m - 1):
        rows[i][i + 1] = 1
    for j in range(m):
        rows[m - 1][j] = -f.coeffs[j]
    return IntMatrix(rows)


def n_of(lam: Partition) -> IntMatrix:
    """Block-diagonal nilpotent normal form: one shift block per part."""
    if lam.size == 0:
        raise ValueError("empty partition")
    return IntMatrix.block_diag(*(companion(IntPoly.x_power(p)) for p in lam))


def a_of(lam: Partition) -> IntMatrix:
    """The recursive dual normal form.

    With parts (p1, p2, ...): zeros on the top-left p1 x p1 block, an
    identity block of size p2 sitting in the first p2 of the top p1 rows
    just right of the diagonal block, and the same construction recursively
    on the remaining parts.  A single part (or none) gives the zero matrix.
    """
    parts = lam.parts
    n = lam.size
    if len(parts) <= 1:
        return IntMatrix.zeros(n)
    p1, p2 = parts[0], parts[1]
    sub = a_of(Partition(parts[1:]))
    rows = [[0] * n for _ in range(n)]
    for i in range(p2):
        rows[i][p1 + i] = 1
    for i in range(n - p1):
        for j in range(n - p1):
            rows[p1 + i][p1 + j] = sub.entries[i][j]
    return IntMatrix(rows)


def permutation_conjugator(lam: Partition) -> tuple[int, ...]:
    """The permutation relating the two nilpotent normal forms of dual shape.

    Returns sigma (0-based) such that with P = permutation_matrix(sigma),
    P^{-1} * a_of(dual(lam)) * P == n_of(lam).  sigma maps the position of a
    diagram cell in the column-by-column traversal to its position in the
    row-by-row traversal.
    """
    if lam.size == 0:
        raise ValueError("empty partition")
    horizontal = {}
    counter = 0
    for i, part in enumerate(lam.parts):
        for j in range(part):
            horizontal[(i, j)] = counter
            counter += 1
    sigma = []
    for j in range(lam.parts[0]):
        for i, part in enumerate(lam.parts):
            if part > j:
                sigma.append(horizontal[(i, j)])
    return tuple(sigma)


def permutation_matrix(sigma) -> IntMatrix:
    n = len(sigma)
    rows = [[0] * n for _ in range(n)]
    for k, s in enumerate(sigma):
        rows[k][s] = 1
    return IntMatrix(rows)


# ---------------------------------------------------------------------------
# Hermite normal form


def hnf(m: IntMatrix) -> IntMatrix:
    """Row Hermite normal form of a non-singular square integer matrix.

    Upper triangular, positive diagonal, and every entry above a diagonal
    d reduced into [0, d).  Rows span the same lattice as the input.
    """
    if not m.is_square:
        raise ValueError("hnf wants a square matrix")
    n = m.n_rows
    rows = [list(r) for r in m.entries]
    for col in range(n):
        # euclidean elimination below the diagonal
        while True:
            nz = [i for i in range(col, n) if rows[i][col]]
            if not nz:
                raise ValueError("singular matrix has no Hermite normal form here")
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
            done = True
            for i in range(col + 1, n):
                if rows[i][col]:
                    q = rows[i][col] // rows[col][col]
                    for k in range(col, n):
                        rows[i][k] -= q * rows[col][k]
                    if rows[i][col]:
                        done = False
            if done:
                break
        if rows[col][col] < 0:
            rows[col] = [-x for x in rows[col]]
        for i in range(col):
            q = rows[i][col] // rows[col][col]
            if q:
                for k in range(col, n):
                    rows[i][k] -= q * rows[col][k]
    return IntMatrix(rows)


# ---------------------------------------------------------------------------
# characteristic and minimal polynomials


def charpoly(a: IntMatrix) -> IntPoly:
    """Characteristic polynomial (monic) by the trace recursion; exact integers."""
    if not a.is_square:
        raise ValueError("charpoly wants a square matrix")
    n = a.n_rows
    if n == 0:
        return IntPoly([1])
    coeffs = [1]  # X^n downwards
    m = a
    c = -m.trace()
    coeffs.append(c)
    for k in range(2, n + 1):
        m = a * (m + IntMatrix.scalar(n, c))
        t = m.trace()
        assert t % k == 0, "trace recursion must divide exactly"
        c = -t // k
        coeffs.append(c)
    return IntPoly(list(reversed(coeffs)))


def _frac_divmod(f: list[Fraction], g: list[Fraction]):
    rem = list(f)
    dg = len(g) - 1
    lead = g[-1]
    q = [Fraction(0)] * max(0, len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] / lead
        if c:
            q[i - dg] = c
            for k in range(len(g)):
                rem[i - dg + k] -= c * g[k]
    while rem and not rem[-1]:
        rem.pop()
    return q, rem


def _frac_trim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def _frac_monic(f):
    f = _frac_trim(f)
    if not f:
        return f
    lead = f[-1]
    return [c / lead for c in f]


def _frac_mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return out


def _frac_gcd(f, g):
    f, g = _frac_trim(f), _frac_trim(g)
    while g:
        _, r = _frac_divmod(f, g)
        f, g = g, r
    return _frac_monic(f)


def _frac_lcm(f, g):
    f, g = _frac_trim(f), _frac_trim(g)
    if not f:
        return _frac_monic(g)
    if not g:
        return _frac_monic(f)
    d = _frac_gcd(f, g)
    q, r = _frac_divmod(_frac_mul(f, g), d)
    assert not r
    return _frac_monic(q)


def minpoly(a: IntMatrix) -> IntPoly:
    """Minimal polynomial via Krylov chains from the standard basis vectors.

    Exact rational solves; the result is monic with integer coefficients
    because it divides the monic integer characteristic polynomial.
    """
    if not a.is_square:
        raise ValueError("minpoly wants a square matrix")
    n = a.n_rows
    if n == 0:
        raise ValueError("minpoly of a 0x0 matrix")
    best = [Fraction(1)]
    rows = a.entries
    for i in range(n):
        ech = _Echelon(n)
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        while True:
            combo = ech.insert(v)
            if combo is not None:
                local = [-c for c in combo] + [Fraction(1)]
                best = _frac_lcm(best, local)
                break
            v = [sum(v[k] * rows[k][j] for k in range(n)) for j in range(n)]
        if len(best) - 1 == n:
            break
    out = []
    for c in best:
        if c.denominator != 1:
            raise AssertionError("minimal polynomial came out non-integral")
        out.append(int(c))
    return IntPoly(out)
