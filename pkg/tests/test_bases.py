import random

import pytest

from macops.bases import (
    SymPoly,
    change_basis,
    elementary,
    expand_big_schur,
    expand_elementary,
    expand_monomial,
    expand_schur,
    hl_one_row,
    sym_to_xpoly,
    to_monomial_basis,
    vandermonde,
)
from macops.errors import LengthExceedsVars, NotSymmetric, OutOfRange
from macops.partitions import Partition, partitions_of
from macops.rings import QT, eval_var, xring


def P(*parts):
    return Partition(parts)


def mono(lam, n):
    return expand_monomial(Partition(lam), n)


def test_expand_monomial():
    R = xring(2)
    x1, x2 = R.var("x1"), R.var("x2")
    assert mono((2, 1), 2) == x1 * x1 * x2 + x1 * x2 * x2
    assert mono((1, 1), 3) == expand_elementary(P(2), 3)
    assert mono((), 2) == R.one
    with pytest.raises(LengthExceedsVars):
        mono((1, 1, 1), 2)


def test_elementary_skip():
    R = xring(3)
    assert elementary(1, 3, skip=frozenset({2})) == R.var("x1") + R.var("x3")
    assert elementary(0, 3) == R.one
    assert elementary(3, 3, skip=frozenset({1})).is_zero


def test_vandermonde():
    R = xring(2)
    assert vandermonde(2) == R.var("x1") - R.var("x2")
    assert vandermonde(3).terms and len(vandermonde(3).terms) == 6


def test_expand_schur():
    assert expand_schur((1,), 2) == mono((1,), 2)
    assert expand_schur((2,), 2) == mono((2,), 2) + mono((1, 1), 2)
    assert expand_schur((2, 1), 3) == mono((2, 1), 3) + 2 * mono((1, 1, 1), 3)
    # straightening: one exchange flips the sign
    assert expand_schur((0, 2), 2) == -expand_schur((1, 1), 2)
    # repeated bialternant exponents kill the determinant
    assert expand_schur((1, 2), 2).is_zero


def test_expand_schur_negative_entry():
    # entries >= -1 produce Laurent results used by the lowering checks
    R = xring(2)
    got = expand_schur((2, -1), 2)
    x1, x2 = R.var("x1"), R.var("x2")
    num = x1**3 + x1 * x1 * x2 + x1 * x2 * x2 + x2**3
    assert got * (x1 * x2) == num


def test_hl_one_row():
    R = xring(2)
    t = R.var("t")
    assert hl_one_row(0, 2) == R.one
    assert hl_one_row(-1, 2).is_zero
    assert hl_one_row(1, 2) == (1 - t) * mono((1,), 2)
    expect = (1 - t) * (mono((2,), 2) + (1 - t) * mono((1, 1), 2))
    assert hl_one_row(2, 2) == expect


def test_big_schur_small():
    q1 = hl_one_row(1, 2)
    q2 = hl_one_row(2, 2)
    assert expand_big_schur(P(2), 2) == q2
    assert expand_big_schur(P(1, 1), 2) == q1 * q1 - q2
    assert expand_big_schur(P(), 2) == xring(2).one


def test_big_schur_not_triangular():
    # the (1,1) element meets m_(2) with coefficient t^2 - t: the family is
    # genuinely dense against monomials, hence the general solver
    sym = to_monomial_basis(expand_big_schur(P(1, 1), 2), 2)
    t = QT.var("t")
    assert sym.coeffs[P(2)] == t * t - t
    assert sym.coeffs[P(1, 1)] == (1 - t) ** 2


def test_big_schur_t0_is_schur():
    for d in range(1, 5):
        for lam in partitions_of(d):
            S = expand_big_schur(lam, 4)
            assert eval_var(S, "t", 0) == expand_schur(lam.parts, 4)


def test_to_monomial_basis():
    f = 3 * mono((2, 1), 3) + mono((1, 1, 1), 3) * QT.var("q").cast(xring(3))
    sym = to_monomial_basis(f, 3)
    assert sym.coeffs[P(2, 1)] == QT.const(3)
    assert sym.coeffs[P(1, 1, 1)] == QT.var("q")
    with pytest.raises(NotSymmetric):
        to_monomial_basis(xring(2).var("x1"), 2)
    with pytest.raises(NotSymmetric):
        # complete orbit, unequal coefficients
        R = xring(2)
        to_monomial_basis(R.var("x1", 2) + 2 * R.var("x2", 2), 2)


def test_sym_to_xpoly_roundtrip():
    rng = random.Random(11)
    n = 3
    for _ in range(10):
        coeffs = {}
        for lam in partitions_of(3, max_len=n):
            c = rng.randrange(-3, 4)
            if c:
                coeffs[lam] = QT.const(c)
        sym = SymPoly("monomial", n, coeffs)
        back = to_monomial_basis(sym_to_xpoly(sym), n)
        assert {k: v for k, v in back.coeffs.items()} == {
            k: v for k, v in sym.coeffs.items()
        }


def rand_qt(rng):
    return QT.from_terms(
        {
            (rng.randrange(3), rng.randrange(3)): rng.randrange(-2, 3)
            for _ in range(2)
        }
    )


@pytest.mark.parametrize("target", ["bigschur", "schur", "elementary"])
def test_change_basis_roundtrip(target):
    rng = random.Random(13)
    for d in (2, 3, 4):
        n = d
        coeffs = {}
        for lam in partitions_of(d):
            c = rand_qt(rng)
            if c:
                coeffs[lam] = c
        sym = SymPoly("monomial", n, coeffs)
        out = change_basis(sym, target)
        assert out.basis == target
        back = change_basis(out, "monomial")
        for lam in set(coeffs) | set(back.coeffs):
            want = coeffs.get(lam, QT.zero)
            got = back.coeffs.get(lam, QT.zero)
            if hasattr(got, "is_polynomial"):
                got = got.to_poly()
            assert got == want


def test_change_basis_unit_vector():
    n = 2
    sym = to_monomial_basis(expand_big_schur(P(2), n), n)
    out = change_basis(sym, "bigschur")
    assert set(out.coeffs) == {P(2)}
    assert out.coeffs[P(2)] == QT.one


def test_change_basis_errors():
    sym = SymPoly("monomial", 1, {P(2): QT.one})
    with pytest.raises(OutOfRange):
        change_basis(sym, "bigschur")  # needs n >= degree
    with pytest.raises(OutOfRange):
        change_basis(sym, "nosuch")
