"""Tests for the two-parameter family: eigen route, raising routes, Kostka
matrices, and the column-removal law.

The small-shape coefficient values asserted here were computed by hand
from the triangular eigenvalue system and are frozen as strings.
"""

import pytest

from macops.bases import SymPoly, expand_big_schur, sym_to_xpoly
from macops.errors import (
    LengthExceedsVars,
    NonIntegralEntry,
    OutOfRange,
    VerificationFailed,
)
from macops.macdonald import (
    KostkaMatrix,
    conjugate_columns,
    default_nvars,
    full_eigencheck,
    kostka_matrix,
    lowering_verify,
    macdonald_J,
    macdonald_J_raising,
    macdonald_P_eigen,
    row_step_columns,
    triple_agreement,
)
from macops.partitions import Partition, column_unit_scale, partitions_of
from macops.rings import QT, xring


def P(*parts):
    return Partition(parts)


def coeff_map(sym):
    return {k.parts: v.render() for k, v in sym.coeffs.items()}


def test_default_nvars():
    assert default_nvars(P()) == 2
    assert default_nvars(P(3)) == 2
    assert default_nvars(P(1, 1, 1)) == 3


def test_row_two_eigen_oracle():
    res = macdonald_P_eigen(P(2), 2)
    assert res.provenance == "eigen_oracle"
    assert coeff_map(res.P) == {
        (2,): "1",
        (1, 1): "(1 + q - t - q*t)/(1 - q*t)",
    }
    assert coeff_map(res.J) == {
        (2,): "1 - t - q*t + q*t^2",
        (1, 1): "1 + q - 2*t - 2*q*t + t^2 + q*t^2",
    }


def test_row_two_raising_routes_match_eigen():
    want = macdonald_P_eigen(P(2), 2).J
    for via in ("kplus", "kminus"):
        got = macdonald_J(P(2), 2, via=via)
        assert got.J == want
        assert got.provenance == f"raising_{via}"


def test_single_column_shapes():
    for m in range(1, 5):
        lam = P(*([1] * m))
        res = macdonald_J_raising(lam, m)
        assert res.J.coeffs == {lam: column_unit_scale(m)}
        wider = macdonald_J_raising(lam, m + 1)
        assert wider.J.coeffs[lam] == column_unit_scale(m)


def test_hook_shape_value():
    res = triple_agreement(P(2, 1), 2)
    assert coeff_map(res.J) == {(2, 1): "1 - 2*t + t^2 - q*t^2 + 2*q*t^3 - q*t^4"}


def test_triple_agreement_small_shapes():
    for lam in (P(1), P(2), P(1, 1), P(3), P(2, 1)):
        n = default_nvars(lam)
        res = triple_agreement(lam, n)
        assert res.provenance == "raising_kplus"
        assert res.shape == lam


def test_triple_agreement_reports_mismatch(monkeypatch):
    import macops.macdonald as mac

    real = mac.macdonald_P_eigen

    def crooked(lam, n, validate=True):
        res = real(lam, n, validate=False)
        bad = dict(res.J.coeffs)
        first = next(iter(bad))
        bad[first] = bad[first] + QT.one
        return mac.MacdonaldResult(lam, n, res.P, SymPoly("monomial", n, bad), res.provenance)

    monkeypatch.setattr(mac, "macdonald_P_eigen", crooked)
    with pytest.raises(VerificationFailed):
        mac.triple_agreement(P(2), 2)


def test_column_sequences_agree():
    # both constructors emit the heights in weakly increasing order, which
    # is the only order the one-column adder accepts
    for lam in (P(2, 1), P(3, 1), P(2, 2), P(3, 2, 1), P(1, 1, 1)):
        n = max(lam.length, 2)
        assert conjugate_columns(lam) == row_step_columns(lam, n)
    assert conjugate_columns(P(2, 1)) == (1, 2)
    assert row_step_columns(P(3, 1), 4) == (1, 1, 2)


def test_explicit_column_sequence_accepted():
    want = macdonald_J_raising(P(2, 1), 3).J
    got = macdonald_J_raising(P(2, 1), 3, columns=(1, 2)).J
    assert got == want


def test_bad_column_sequences_rejected():
    with pytest.raises(OutOfRange):
        macdonald_J_raising(P(2, 1), 3, columns=(2, 1))
    with pytest.raises(OutOfRange):
        macdonald_J_raising(P(2, 1), 3, columns=(1, 1))
    with pytest.raises(OutOfRange):
        macdonald_J_raising(P(2, 1), 3, columns=(1, 2, 4))


def test_row_step_needs_enough_variables():
    with pytest.raises(LengthExceedsVars):
        row_step_columns(P(1, 1, 1), 2)
    with pytest.raises(LengthExceedsVars):
        macdonald_J_raising(P(1, 1, 1), 2)
    with pytest.raises(LengthExceedsVars):
        macdonald_P_eigen(P(1, 1, 1), 2)


def test_unknown_routes_rejected():
    with pytest.raises(OutOfRange):
        macdonald_J(P(1), 2, via="newton")
    with pytest.raises(OutOfRange):
        macdonald_J_raising(P(1), 2, kind="kboth")


def test_eigencheck_passes_and_detects_tampering():
    res = macdonald_P_eigen(P(2, 1), 3, validate=False)
    assert full_eigencheck(P(2, 1), 3, res.J)
    bad = dict(res.J.coeffs)
    key = next(iter(bad))
    bad[key] = bad[key] + QT.one
    with pytest.raises(VerificationFailed):
        full_eigencheck(P(2, 1), 3, SymPoly("monomial", 3, bad))


def test_kostka_degree_one():
    mat = kostka_matrix(1)
    assert mat.shapes == (P(1),)
    assert mat.entry(P(1), P(1)) == QT.one


def test_kostka_degree_two_gate():
    mat = kostka_matrix(2, check_duality=True)
    assert mat.shapes == (P(2), P(1, 1))
    q, t = QT.var("q"), QT.var("t")
    assert mat.entry(P(2), P(2)) == QT.one
    assert mat.entry(P(2), P(1, 1)) == t
    assert mat.entry(P(1, 1), P(2)) == q
    assert mat.entry(P(1, 1), P(1, 1)) == QT.one


def test_kostka_degree_three_duality_and_expansion():
    mat = kostka_matrix(3, check_duality=True)
    n = mat.nvars
    ring = xring(n)
    # independent round trip: the matrix columns must rebuild each
    # integral form through the determinantal big-Schur expansion
    for mu in partitions_of(3):
        want = sym_to_xpoly(macdonald_J_raising(mu, n).J, ring)
        got = ring.zero
        for lam in partitions_of(3):
            got = got + mat.entry(lam, mu).cast(ring) * expand_big_schur(lam, n)
        assert got == want


def test_kostka_stability():
    for d in (1, 2, 3):
        small = kostka_matrix(d, nvars=d)
        big = kostka_matrix(d, nvars=d + 1)
        assert small.shapes == big.shapes
        for lam in small.shapes:
            for mu in small.shapes:
                assert small.entry(lam, mu) == big.entry(lam, mu)


def test_kostka_duality_failure_is_reported():
    mat = kostka_matrix(2)
    entries = dict(mat.entries)
    entries[(P(2), P(1, 1))] = QT.var("q", 5)
    broken = KostkaMatrix(2, mat.nvars, mat.shapes, entries)
    with pytest.raises(VerificationFailed):
        broken.verify_duality()


def test_kostka_rejects_too_few_variables():
    with pytest.raises(OutOfRange):
        kostka_matrix(2, nvars=1)
    with pytest.raises(OutOfRange):
        kostka_matrix(-1)


def test_lowering_single_box():
    rep = lowering_verify(P(1), 1, 2)
    assert rep["status"] == "pass"
    assert rep["scale"] == "1 - q - t^2 + q*t^2"


def test_lowering_zero_clause():
    rep = lowering_verify(P(1), 2, 2)
    assert rep["status"] == "pass"
    assert rep["scale"] == "0"
    rep = lowering_verify(P(), 1, 2)
    assert rep["scale"] == "0"


def test_lowering_two_rows_both_kinds():
    for kind in ("mplus", "mminus"):
        rep = lowering_verify(P(1, 1), 2, 2, kind=kind)
        assert rep["status"] == "pass"
        rep = lowering_verify(P(2, 2), 2, 3, kind=kind)
        assert rep["status"] == "pass"


def test_lowering_rejects_bad_arguments():
    with pytest.raises(OutOfRange):
        lowering_verify(P(1), 1, 2, kind="mboth")
    with pytest.raises(OutOfRange):
        lowering_verify(P(2, 1), 1, 2)
    with pytest.raises(OutOfRange):
        lowering_verify(P(1), 3, 2)


def test_integral_form_guard(monkeypatch):
    import macops.macdonald as mac
    from macops.rings import Frac

    res = mac.macdonald_P_eigen(P(2), 2, validate=False)
    q, t = QT.var("q"), QT.var("t")
    crooked = res.P.map_coeffs(lambda c: c * Frac(QT.one, (1 - q * t)))
    with pytest.raises(NonIntegralEntry):
        mac._integral_form(P(2), crooked)
