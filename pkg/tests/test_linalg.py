import random
from fractions import Fraction

import pytest

from submodzeta.linalg import (
    IntMatrix,
    IntPoly,
    RatMatrix,
    a_of,
    charpoly,
    companion,
    det,
    hnf,
    kernel_basis,
    kernel_dim,
    matmul,
    matpow,
    minpoly,
    n_of,
    permutation_conjugator,
    permutation_matrix,
    poly_at_matrix,
    rank_over_q,
    resultant,
)
from submodzeta.partitions import Partition, partitions_of


X = IntPoly((0, 1))


def test_intpoly_basics():
    f = IntPoly((2, -3, 1))  # x^2 - 3x + 2
    assert f.degree == 2
    assert f.is_monic
    assert str(f) == "x^2 - 3*x + 2"
    assert f.evaluate(1) == 0 and f.evaluate(2) == 0 and f.evaluate(3) == 2
    assert (IntPoly.x_minus(1) * IntPoly.x_minus(2)) == f
    assert f.derivative() == IntPoly((-3, 2))
    assert IntPoly((1, 0, 0)).degree == 0  # trailing zeros stripped
    assert IntPoly(()).is_zero and IntPoly(()).degree == -1
    q, r = f.divmod_monic(IntPoly.x_minus(1))
    assert q == IntPoly.x_minus(2) and r.is_zero
    assert IntPoly.x_power(3) == X ** 3
    assert f.to_json() == [2, -3, 1]
    assert IntPoly.from_json([2, -3, 1]) == f


def test_intpoly_errors():
    with pytest.raises(ValueError):
        IntPoly((1, 2.5))
    with pytest.raises(ValueError):
        IntPoly((1, 1)).divmod_monic(IntPoly((1, 2)))
    with pytest.raises(ValueError):
        X ** -1


def test_resultant():
    # disc-style: res(x^2+1, 2x) = 4
    f = IntPoly((1, 0, 1))
    assert resultant(f, f.derivative()) == 4
    assert resultant(IntPoly.x_minus(2), IntPoly.x_minus(5)) == -3
    # multiplicative in the first argument
    g = IntPoly((1, 1))  # x + 1
    h = IntPoly((3, 1))  # x + 3
    k = IntPoly((-1, 2, 1))
    assert resultant(g * h, k) == resultant(g, k) * resultant(h, k)
    with pytest.raises(ValueError):
        resultant(IntPoly(()), g)


def test_companion_examples():
    assert companion(X ** 2) == IntMatrix([[0, 1], [0, 0]])
    assert companion(IntPoly((1, 0, 1))) == IntMatrix([[0, 1], [-1, 0]])
    assert companion(IntPoly.x_minus(3)) == IntMatrix([[3]])
    with pytest.raises(ValueError):
        companion(IntPoly((1, 2)))
    with pytest.raises(ValueError):
        companion(IntPoly((5,)))


def test_companion_has_its_polynomial():
    for f in (X ** 3, IntPoly((1, 0, 1)), IntPoly((2, -3, 1)), IntPoly((-1, -1, 0, 1))):
        c = companion(f)
        assert charpoly(c) == f
        assert minpoly(c) == f
        assert poly_at_matrix(f, c) == IntMatrix.zeros(f.degree)


def test_n_of():
    assert n_of(Partition([2])) == IntMatrix([[0, 1], [0, 0]])
    assert n_of(Partition([1, 1])) == IntMatrix.zeros(2)
    assert n_of(Partition([2, 1])) == IntMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(ValueError):
        n_of(Partition([]))


def test_a_of():
    assert a_of(Partition([4])) == IntMatrix.zeros(4)
    assert a_of(Partition([1, 1])) == IntMatrix([[0, 1], [0, 0]])
    assert a_of(Partition([2, 1])) == IntMatrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    assert a_of(Partition([])) == IntMatrix(())


def test_permutation_conjugator_property():
    # P^{-1} A(dual) P = N(lam), exhaustively for |lam| <= 8
    for n in range(1, 9):
        for lam in partitions_of(n):
            sigma = permutation_conjugator(lam)
            assert sorted(sigma) == list(range(n))
            p = permutation_matrix(sigma)
            pinv = p.transpose()
            assert pinv * p == IntMatrix.identity(n)
            assert pinv * a_of(lam.dual()) * p == n_of(lam)


def test_hnf_examples():
    assert hnf(IntMatrix([[2, 0], [0, 1]])) == IntMatrix([[2, 0], [0, 1]])
    assert hnf(IntMatrix([[0, 1], [2, 0]])) == IntMatrix([[2, 0], [0, 1]])
    assert hnf(IntMatrix([[1, 5], [0, 2]])) == IntMatrix([[1, 1], [0, 2]])
    with pytest.raises(ValueError):
        hnf(IntMatrix([[1, 2], [2, 4]]))


def test_hnf_idempotent_and_preserves_row_span():
    rng = random.Random(7)
    found = 0
    while found < 25:
        m = IntMatrix([[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)])
        d = det(m)
        if d == 0 or abs(d) > 64:
            continue
        found += 1
        h = hnf(m)
        assert hnf(h) == h
        # triangular, positive diagonal, reduced above the diagonal
        for i in range(3):
            assert h.entries[i][i] > 0
            for j in range(3):
                if j < i:
                    assert h.entries[i][j] == 0
                elif j > i:
                    assert 0 <= h.entries[i][j] < h.entries[j][j]
        # same row span: each basis solves integrally over the other
        assert abs(det(m)) == det(h)
        for src, dst in ((m, h), (h, m)):
            # rows of src must be integer combinations of rows of dst
            for row in src.entries:
                assert _solve_int(dst, row) is not None


def _solve_int(basis: IntMatrix, target):
    """Integer coefficients c with c * basis = target, else None."""
    n = basis.n_rows
    frac_rows = [[Fraction(x) for x in row] for row in basis.entries]
    # gaussian elimination on the transposed system
    a = [[frac_rows[r][c] for r in range(n)] for c in range(n)]
    b = [Fraction(t) for t in target]
    piv = []
    for col in range(n):
        p = next((r for r in range(col, n) if a[r][col] != 0), None)
        if p is None:
            return None
        a[col], a[p] = a[p], a[col]
        b[col], b[p] = b[p], b[col]
        inv = a[col][col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = b[r] - f * b[col]
    coeffs = [b[r] / a[r][r] for r in range(n)]
    return coeffs if all(c.denominator == 1 for c in coeffs) else None


def test_charpoly_and_det():
    assert charpoly(IntMatrix([[1, 0], [0, 2]])) == IntPoly((2, -3, 1))
    assert charpoly(IntMatrix.zeros(3)) == X ** 3
    assert det(IntMatrix([[2, 1], [1, 1]])) == 1
    assert det(IntMatrix([[0, 1], [2, 0]])) == -2
    rng = random.Random(3)
    for _ in range(20):
        m = IntMatrix([[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)])
        # det(xI - A) at x = 0 is (-1)^3 det(A)
        assert charpoly(m).evaluate(0) == -det(m)


def test_minpoly_examples():
    assert minpoly(IntMatrix.zeros(3)) == X
    assert minpoly(n_of(Partition([2, 1]))) == X ** 2
    assert minpoly(IntMatrix([[1, 0], [0, 2]])) == IntPoly((2, -3, 1))
    assert minpoly(IntMatrix.identity(4)) == IntPoly.x_minus(1)


def test_minpoly_divides_charpoly_and_annihilates():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 4)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        mp = minpoly(m)
        cp = charpoly(m)
        assert mp.is_monic
        q, r = cp.divmod_monic(mp)
        assert r.is_zero
        assert poly_at_matrix(mp, m) == IntMatrix.zeros(n)


def test_rank_and_kernel():
    assert rank_over_q(IntMatrix.zeros(3)) == 0
    assert rank_over_q(n_of(Partition([3]))) == 2
    assert kernel_dim(n_of(Partition([3]))) == 1
    assert kernel_dim(IntMatrix.identity(5)) == 0
    m = IntMatrix([[1, 2], [2, 4]])
    assert rank_over_q(m) == 1
    basis = kernel_basis(m)
    assert len(basis) == 1
    v = basis[0]
    assert v[0] * 1 + v[1] * 2 == 0 and v[0] * 2 + v[1] * 4 == 0


def test_poly_at_matrix():
    assert poly_at_matrix(X ** 2, n_of(Partition([2]))) == IntMatrix.zeros(2)
    m = IntMatrix([[1, 1], [0, 1]])
    assert poly_at_matrix(IntPoly((1, 1)), m) == m + IntMatrix.identity(2)


def test_matmul_matpow():
    a = IntMatrix([[1, 1], [0, 1]])
    assert matpow(a, 0) == IntMatrix.identity(2)
    assert matpow(a, 5) == IntMatrix([[1, 5], [0, 1]])
    assert matmul(a, a) == a * a
    with pytest.raises(ValueError):
        matmul(a, IntMatrix.zeros(3))
    with pytest.raises(ValueError):
        matpow(a, -1)


def test_ratmatrix():
    r = RatMatrix.from_int(IntMatrix([[1, 2], [3, 4]]))
    half = RatMatrix([[Fraction(1, 2), 0], [0, 1]])
    assert (half * half).entries[0][0] == Fraction(1, 4)
    assert half.denominator_lcm() == 2
    assert (half + half).entries[0][0] == 1
    assert RatMatrix.identity(2) ** 3 == RatMatrix.identity(2)
    assert r.denominator_lcm() == 1


def test_matrix_json():
    m = IntMatrix([[0, 1], [2, 3]])
    assert m.to_json() == {"n": 2, "entries": [[0, 1], [2, 3]]}
    assert IntMatrix.from_json(m.to_json()) == m
    with pytest.raises(ValueError):
        IntMatrix.from_json({"n": 3, "entries": [[0, 1], [2, 3]]})
    with pytest.raises(ValueError):
        IntMatrix.from_json({"entries": "nope"})
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
