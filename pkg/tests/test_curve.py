from fractions import Fraction

import pytest

from fillcurve import canonical_field
from fillcurve.binform import BinForm, SL2Mat, enumerate_gq, random_gq, sl2_act
from fillcurve.curve import (
    BiForm,
    build_curve,
    homma_bound,
    internal_polynomial,
    scan_oracle,
    scan_report,
    singular_witness,
    smoothness_report,
    verify_space_filling,
)
from fillcurve.errors import (
    BudgetExceeded,
    DegreeMismatch,
    PreconditionViolated,
    ZeroForm,
)
from fillcurve.field import Fel, minimal_polynomial
from fillcurve.rng import RngState
from fillcurve.unipoly import UPoly, factor, roots_in_field


def form(field, *coeffs):
    return BinForm(field, len(coeffs) - 1, list(coeffs))


O22 = (1, 0, 2, 0, 1)  # X0^4 - X0^2 X1^2 + X1^4
O2P2 = (1, 0, 0, 0, 1)  # X0^4 + X1^4
O4A = (1, 0, 0, 1, 2)  # X0^4 + X0 X1^3 - X1^4


def test_build_curve_grid(F3):
    f = form(F3, *O2P2)
    g = form(F3, *O2P2)
    c = build_curve(f, g)
    assert c.F.bidegree == (4, 4)
    # expanding by hand: each bracket product contributes 4 monomials and
    # the supports are disjoint, so 8 nonzero grid entries
    nonzero = sum(
        1 for row in c.F.grid for v in row if not F3.is_zero(v)
    )
    assert nonzero == 8
    expected = {
        (1, 0): 1, (1, 4): 1, (3, 0): 2, (3, 4): 2,  # f(Y) (X0^3 X1 - X0 X1^3)
        (0, 1): 1, (0, 3): 2, (4, 1): 1, (4, 3): 2,  # g(X) (Y0^3 Y1 - Y0 Y1^3)
    }
    for (i, j), v in expected.items():
        assert c.F.grid[i][j] == v
    # X0^3 X1 Y0^4 coefficient comes from f's Y0^4 term times X0^q X1
    assert c.F.grid[1][0] == 1


def test_build_curve_errors(F3):
    f = form(F3, *O2P2)
    wrong = form(F3, 1, 0, 1)
    with pytest.raises(DegreeMismatch):
        build_curve(f, wrong)
    with pytest.raises(ZeroForm):
        build_curve(f, form(F3, 0, 0, 0, 0, 0))


def test_space_filling(F3, F5):
    assert verify_space_filling(build_curve(form(F3, *O22), form(F3, *O2P2)))
    g5 = random_gq(5, RngState(5))
    f5 = random_gq(5, RngState(6))
    assert verify_space_filling(build_curve(f5, g5))


def test_space_filling_fails_on_mutation(F3):
    c = build_curve(form(F3, *O22), form(F3, *O2P2))
    mutated = c.F.with_entry(0, 0, 1)

    class Fake:
        f = c.f
        F = mutated

    assert not verify_space_filling(Fake())


def test_internal_polynomial_example(F3):
    # for g = X0^4 - X0^2 X1^2 + X1^4 the internal polynomial is
    # 1 + x^2 + x^4 + x^6
    p = internal_polynomial(form(F3, *O22))
    assert p == UPoly(F3, [1, 0, 1, 0, 1, 0, 1])


def test_internal_polynomial_consistency(F3):
    # roots of the internal polynomial have minimal polynomials dividing it
    rng = RngState(9)
    F81 = canonical_field(81)
    for _ in range(5):
        g = random_gq(3, rng)
        p = internal_polynomial(g)
        assert p.degree == 6
        _, facs = factor(p)
        assert sum(h.degree * m for h, m in facs) == 6
        for h, _m in facs:
            if 4 % h.degree == 0:
                for r in roots_in_field(h, F81):
                    assert minimal_polynomial(r, 3) == h
                    assert (p % h).is_zero()


def test_witness_spec_examples(F3):
    w = singular_witness(form(F3, *O22), form(F3, *O22))
    assert w is not None
    assert singular_witness(form(F3, *O2P2), form(F3, *O22)) is None
    assert singular_witness(form(F3, *O4A), form(F3, *O4A)) is None


def test_witness_structure(F3):
    w = singular_witness(form(F3, *O22), form(F3, *O22))
    L = w.compositum
    # the five Jacobian values vanish at (1:alpha) x (1:beta)
    curve = build_curve(form(F3, *O22), form(F3, *O22))
    forms5 = [curve.F] + [curve.F.partial(v) for v in range(4)]
    for bf in forms5:
        assert L.is_zero(bf.eval_raw(L, L.one, w.alpha.raw, L.one, w.beta.raw))
    # coordinates lie outside F_3
    assert L.pow_(w.alpha.raw, 3) != w.alpha.raw
    assert L.pow_(w.beta.raw, 3) != w.beta.raw
    assert w.alpha_minpoly(w.alpha).is_zero()
    d = w.to_json_dict()
    assert d["compositum_degree"] >= 2


def test_precondition_violated(F3):
    bad = form(F3, 1, 0, 0, 0, 0)  # X0^4 vanishes at (0:1)
    good = form(F3, *O22)
    with pytest.raises(PreconditionViolated) as ei:
        singular_witness(bad, good)
    assert ei.value.side == "f"
    assert ei.value.point is not None
    with pytest.raises(PreconditionViolated):
        singular_witness(good, bad)


def test_smoothness_report(F3):
    rep = smoothness_report(form(F3, *O22), form(F3, *O22))
    assert not rep.smooth and rep.witness is not None
    assert rep.method == "factor_gcd"
    assert rep.stats["factors_examined"] >= 1
    d = rep.to_json_dict()
    assert d["smooth"] is False and "witness" in d
    rep2 = scan_report(form(F3, *O4A), form(F3, *O4A))
    assert rep2.smooth and rep2.method == "scan_oracle"


def test_scan_oracle_agreement_small(F3):
    rng = RngState(314)
    for _ in range(12):
        f = random_gq(3, rng)
        g = random_gq(3, rng)
        w1 = singular_witness(f, g)
        w2 = scan_oracle(f, g)
        assert (w1 is None) == (w2 is None)


def test_scan_oracle_budget_q7():
    f = random_gq(7, RngState(1))
    g = random_gq(7, RngState(2))
    with pytest.raises(BudgetExceeded) as ei:
        scan_oracle(f, g)
    assert ei.value.needed > 10**7


def test_sl2_verdict_invariance(F3):
    from tests_util_sl2 import random_sl2

    rng = RngState(400)
    for _ in range(15):
        f = random_gq(3, rng)
        g = random_gq(3, rng)
        A = random_sl2(F3, rng)
        B = random_sl2(F3, rng)
        v1 = singular_witness(f, g) is None
        v2 = singular_witness(sl2_act(A, f), sl2_act(B, g)) is None
        assert v1 == v2


def test_swap_symmetry(F3):
    rng = RngState(401)
    for _ in range(15):
        f = random_gq(3, rng)
        g = random_gq(3, rng)
        assert (singular_witness(f, g) is None) == (singular_witness(g, f) is None)


def test_homma_bound():
    assert homma_bound(2, 6) == Fraction(90, 11)
    assert homma_bound(2, 6) < 9
    assert homma_bound(2, 0) == 0
    assert homma_bound(3, 1) == Fraction(2 * 80, 3 * 26 - 6)
