"""Explicit constructions of smooth space-filling curves (odd q).

``construct_partner`` produces, for any degree-(q+1) form f without
rational points, a partner g with C_{f,g} smooth. For q > 5 it follows the
Galois-orbit avoidance argument: candidate singular points force the ratio
alpha1/alpha0 to be a root of lambda2 X^2 + lambda1 X + 1 with
lambda1^2 - 4 lambda2 a non-square, and simultaneously force the value
-f_Y1(1, gamma) at some root gamma of the f-side internal polynomial.
Those excluded values form at most 2q Galois orbits in F_{q^2} \\ F_q,
while (q^2 - q)/2 > 2q monic irreducible quadratics are available, so a
quadratic avoiding all of them exists; picking X^2 + aX + b gives
g = b X0^{q+1} + a X0 X1^q + X1^{q+1}. The output is still run through the
smoothness checker as a proof check. For q in {3, 5} the partner is found
by lexicographic search instead, which the exhaustive censuses guarantee
to succeed; no trace parameters exist on that path.

``symmetric_form`` yields the diagonal family: f = Y0^{q+1} + s*middle +
lambda Y1^{q+1} with middle Y0 Y1^q or Y0^q Y1, s = +-1, and lambda outside
the value set {-(u^2+u)}; C_{f,f} is smooth for every such lambda, which
the checker confirms for the sign/position variants as well.
"""

from itertools import product

from .binform import BinForm, enumerate_gq, has_rational_point
from .curve import internal_polynomial, singular_witness
from .errors import (
    EvenCharacteristic,
    IndexOutOfRange,
    InternalError,
    PreconditionViolated,
)
from .field import Fel, canonical_field, extension, in_subfield, minimal_polynomial
from .rng import RngState
from .unipoly import UPoly, factor, is_irreducible


class PartnerTrace:
    """Audit record of the quadratic-avoidance construction."""

    __slots__ = (
        "lambda1",
        "lambda2",
        "k",
        "excluded_quadratics",
        "chosen_quadratic",
        "g_out",
    )

    def __init__(self, lambda1, lambda2, k, excluded, chosen, g_out):
        object.__setattr__(self, "lambda1", lambda1)
        object.__setattr__(self, "lambda2", lambda2)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "excluded_quadratics", frozenset(excluded))
        object.__setattr__(self, "chosen_quadratic", chosen)
        object.__setattr__(self, "g_out", g_out)

    def __setattr__(self, *a):
        raise AttributeError("PartnerTrace is immutable")

    def to_json_dict(self):
        field = self.chosen_quadratic.field
        return {
            "lambda1": field.format_el(self.lambda1.raw),
            "lambda2": field.format_el(self.lambda2.raw),
            "k": field.format_el(self.k.raw),
            "chosen_quadratic": [
                field.format_el(c) for c in self.chosen_quadratic.coeffs
            ],
            "excluded_quadratics": sorted(
                [field.format_el(c) for c in m.coeffs]
                for m in self.excluded_quadratics
            ),
            "g": self.g_out.to_string(),
        }


def _excluded_quadratics(f: BinForm):
    """Minimal polynomials of the values -f_Y1(1, gamma) that land in
    F_{q^2} \\ F_q, one per Galois orbit (conjugate roots of one factor give
    conjugate values, so a single root per factor suffices)."""
    field = f.field
    q = field.order
    qt = internal_polynomial(f)
    fy1 = f.partial(1).dehomogenize(0)
    excluded = set()
    # A degree deficit would mean a projective root at (0:1), whose chart
    # value -f_Y1(0,1) lies in F_q and is always rejected by the
    # F_{q^2} \ F_q filter; with no rational point at (0:1) the leading
    # coefficient f(0,1) is nonzero and the deficit never occurs anyway.
    assert qt.degree == 2 * q
    _, factors = factor(qt, RngState(0))
    for h, _mult in factors:
        if h.degree % 2 != 0:
            continue  # odd-degree factors cannot meet F_{q^2} outside F_q
        K = extension(field, h, _trusted=True)
        gen = [K._zentry()] * K.degree
        gen[1] = K.entry_from_base_raw(field.one)
        gamma = tuple(gen)
        v = Fel(K, K.neg(fy1.eval_in(K, gamma)))
        if in_subfield(v, 2, q) and not in_subfield(v, 1, q):
            excluded.add(minimal_polynomial(v, q))
    return excluded


def _lex_quadratics(field):
    """Monic quadratics X^2 + aX + b in lexicographic (b, a) order."""
    for b in field.enumerate_raw():
        for a in field.enumerate_raw():
            yield UPoly(field, [b, a, field.one])


def construct_partner(f: BinForm, rng: RngState | None = None):
    """A partner g making C_{f,g} smooth, plus the construction trace.

    Requires odd q and V(f) without rational points. For q in {3, 5} the
    search fallback returns (g, None); for q > 5 the trace records the
    avoidance data. The result always passes the smoothness checker before
    being returned.
    """
    rng = rng if rng is not None else RngState(0)
    field = f.field
    q = field.order
    if field.char == 2:
        raise EvenCharacteristic("the partner construction needs odd q")
    if has_rational_point(f):
        raise PreconditionViolated(
            "V(f) has a rational point", side="f", point=None
        )
    if q <= 5:
        for g in enumerate_gq(q):
            if singular_witness(f, g, rng) is None:
                return g, None
        raise InternalError(f"no partner found in G_{q}")  # pragma: no cover

    excluded = _excluded_quadratics(f)
    chosen = None
    for cand in _lex_quadratics(field):
        if cand in excluded:
            continue
        if is_irreducible(cand):
            chosen = cand
            break
    if chosen is None:  # pragma: no cover
        raise InternalError("no irreducible quadratic available")
    b = chosen.coeff(0)
    a = chosen.coeff(1)
    lambda2 = b.inv()
    lambda1 = a * lambda2
    k = b  # k = lambda2^{-1}
    coeffs = [field.zero] * (q + 2)
    coeffs[0] = b.raw
    coeffs[q] = a.raw
    coeffs[q + 1] = field.one
    g = BinForm(field, q + 1, coeffs)
    if singular_witness(f, g, rng) is not None:  # pragma: no cover
        raise InternalError("constructed partner failed the smoothness check")
    return g, PartnerTrace(lambda1, lambda2, k, excluded, chosen, g)


def symmetric_lambda_candidates(q: int):
    """All lambda in F_q outside the value set {-(u^2+u)}, sorted; there are
    (q-1)/2 of them."""
    field = canonical_field(q)
    if field.char == 2:
        raise EvenCharacteristic("the symmetric family needs odd q")
    image = set()
    for u in field.enumerate_raw():
        image.add(field.neg(field.add(field.mul(u, u), u)))
    out = [x for x in field.enumerate_raw() if x not in image]
    out.sort(key=field.sort_key)
    return [Fel(field, x) for x in out]


_VARIANT_MIDDLE = {
    0: ("low", +1),  # + Y0 Y1^q
    1: ("low", -1),  # - Y0 Y1^q
    2: ("high", +1),  # + Y0^q Y1
    3: ("high", -1),  # - Y0^q Y1
}


def symmetric_form(q: int, variant: int, index: int) -> BinForm:
    """The index-th diagonal form of the given variant; C_{f,f} is smooth."""
    field = canonical_field(q)
    if field.char == 2:
        raise EvenCharacteristic("the symmetric family needs odd q")
    if variant not in _VARIANT_MIDDLE:
        raise IndexOutOfRange(f"variant must be 0..3, got {variant}")
    lams = symmetric_lambda_candidates(q)
    if not 0 <= index < len(lams):
        raise IndexOutOfRange(
            f"index must be in [0, {len(lams)}) for q={q}, got {index}"
        )
    lam = lams[index]
    pos, sign = _VARIANT_MIDDLE[variant]
    coeffs = [field.zero] * (q + 2)
    coeffs[0] = field.one  # Y0^{q+1}
    coeffs[q + 1] = lam.raw  # lambda Y1^{q+1}
    middle = field.one if sign > 0 else field.neg(field.one)
    if pos == "low":
        coeffs[q] = middle  # Y0 Y1^q
    else:
        coeffs[1] = middle  # Y0^q Y1
    return BinForm(field, q + 1, coeffs)
