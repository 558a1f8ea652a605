"""Homogeneous binary forms over F_q and the SL2 substitution action.

A degree-d form is stored as d+1 coefficients c_0..c_d with c_i multiplying
X0^(d-i) * X1^i; all I/O uses that order. The points of P1(F_q) are scanned
as (1:t) for t in F_q plus (0:1).

The SL2 action is by substitution into the first slot:

    (A f)(X0, X1) = f(a X0 + b X1, c X0 + d X1)   for A = [[a, b], [c, d]].

Under this convention A(Bf) = (BA)f, i.e. composition reverses the matrix
product (a right action written on the left). Orbits are unaffected by the
choice; the identity is pinned down by a test.
"""

from functools import lru_cache

from .errors import MixedFields, TooLarge, ZeroForm
from .field import Fel, Field, canonical_field, lift_raw
from .rng import RngState
from .unipoly import UPoly

GQ_GUARD = 5  # enumerate_gq refuses larger q unless allow_large is set


class BinForm:
    """Homogeneous bivariate form of fixed degree over a field context."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field: Field, degree: int, coeffs):
        coeffs = tuple(field.coerce(c) for c in coeffs)
        if degree < 1:
            raise ValueError("forms must have degree >= 1")
        if len(coeffs) != degree + 1:
            raise ValueError(
                f"degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("BinForm is immutable")

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BinForm):
            return NotImplemented
        return (
            self.field == other.field
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.degree, self.coeffs))

    def sort_key(self):
        f = self.field
        return tuple(f.sort_key(c) for c in self.coeffs)

    def __repr__(self):
        return f"BinForm(GF({self.field.order}), deg {self.degree}: {list(self.coeffs)})"

    def __neg__(self):
        f = self.field
        return BinForm(f, self.degree, [f.neg(c) for c in self.coeffs])

    # -- evaluation ----------------------------------------------------------

    def eval_raw(self, K: Field, x0, x1):
        """Evaluate at raw coordinates living in the tower field K."""
        f = self.field
        d = self.degree
        lifted = [lift_raw(f, c, K) for c in self.coeffs] if K != f else list(self.coeffs)
        # powers of x0 descending, x1 ascending
        acc = K.zero
        p1 = K.one
        vals = []
        for i in range(d + 1):
            vals.append(p1)
            if i < d:
                p1 = K.mul(p1, x1)
        p0 = K.one
        for i in range(d, -1, -1):
            vals[i] = K.mul(vals[i], p0)
            if i > 0:
                p0 = K.mul(p0, x0)
        for c, v in zip(lifted, vals):
            if not K.is_zero(c):
                acc = K.add(acc, K.mul(c, v))
        return acc

    def __call__(self, x0: Fel, x1: Fel) -> Fel:
        if x0.ctx != x1.ctx:
            raise MixedFields("evaluation point has mixed coordinates")
        K = x0.ctx
        if K != self.field and not K.contains_level(self.field):
            raise MixedFields(f"{K} does not extend {self.field}")
        return Fel(K, self.eval_raw(K, x0.raw, x1.raw))

    def partial(self, var: int) -> "BinForm":
        """Formal partial derivative in X0 (var=0) or X1 (var=1), degree d-1."""
        f = self.field
        d = self.degree
        if d == 1:
            # constant result is not a valid BinForm; callers never need it
            raise ValueError("partial of a degree-1 form is a constant")
        out = []
        if var == 0:
            for i in range(d):  # coefficient of X0^(d-1-i) X1^i
                out.append(f.mul(self.coeffs[i], f.from_int(d - i)))
        elif var == 1:
            for i in range(d):
                out.append(f.mul(self.coeffs[i + 1], f.from_int(i + 1)))
        else:
            raise ValueError("var must be 0 or 1")
        return BinForm(f, d - 1, out)

    def dehomogenize(self, at: int = 0) -> UPoly:
        """f(1, x) for at=0 (or f(x, 1) for at=1) as a univariate polynomial."""
        if at == 0:
            return UPoly(self.field, list(self.coeffs))
        return UPoly(self.field, list(reversed(self.coeffs)))

    # -- textual syntax -------------------------------------------------------

    def to_string(self) -> str:
        f = self.field
        sep = ";" if (not f.is_prime and f.degree > 1) else ","
        return sep.join(f.format_el(c) for c in self.coeffs)

    @classmethod
    def from_string(cls, field: Field, degree: int, s: str) -> "BinForm":
        sep = ";" if (not field.is_prime and field.degree > 1) else ","
        parts = [p for p in s.strip().split(sep) if p != ""]
        return cls(field, degree, [field.parse_el(p) for p in parts])


class ProjPoint:
    """A point of P1, canonicalized so its first nonzero coordinate is 1."""

    __slots__ = ("ctx", "x0", "x1")

    def __init__(self, ctx: Field, x0, x1):
        x0 = ctx.coerce(x0)
        x1 = ctx.coerce(x1)
        if ctx.is_zero(x0) and ctx.is_zero(x1):
            raise ValueError("(0, 0) is not a projective point")
        if not ctx.is_zero(x0):
            s = ctx.inv(x0)
            x0, x1 = ctx.one, ctx.mul(s, x1)
        else:
            s = ctx.inv(x1)
            x1 = ctx.one
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "x1", x1)

    def __setattr__(self, *a):
        raise AttributeError("ProjPoint is immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.ctx == other.ctx and self.x0 == other.x0 and self.x1 == other.x1

    def __hash__(self):
        return hash((self.ctx, self.x0, self.x1))

    def __repr__(self):
        f = self.ctx
        try:
            return f"({f.format_el(self.x0)}:{f.format_el(self.x1)})"
        except NotImplementedError:
            return f"({self.x0}:{self.x1})"


def proj_points(field: Field):
    """The q+1 points of P1(F_q): (1:t) for every t, then (0:1)."""
    pts = [ProjPoint(field, field.one, t) for t in field.enumerate_raw()]
    pts.append(ProjPoint(field, field.zero, field.one))
    return pts


class SL2Mat:
    """A matrix [[a, b], [c, d]] with determinant 1."""

    __slots__ = ("ctx", "a", "b", "c", "d")

    def __init__(self, ctx: Field, a, b, c, d):
        a, b, c, d = (ctx.coerce(v) for v in (a, b, c, d))
        det = ctx.sub(ctx.mul(a, d), ctx.mul(b, c))
        if det != ctx.one:
            raise ValueError("matrix does not have determinant 1")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *a):
        raise AttributeError("SL2Mat is immutable")

    def __eq__(self, other):
        if not isinstance(other, SL2Mat):
            return NotImplemented
        return (self.ctx, self.a, self.b, self.c, self.d) == (
            other.ctx,
            other.a,
            other.b,
            other.c,
            other.d,
        )

    def __hash__(self):
        return hash((self.ctx, self.a, self.b, self.c, self.d))

    def __matmul__(self, other: "SL2Mat") -> "SL2Mat":
        if other.ctx != self.ctx:
            raise MixedFields("matrices over different fields")
        f = self.ctx
        return SL2Mat(
            f,
            f.add(f.mul(self.a, other.a), f.mul(self.b, other.c)),
            f.add(f.mul(self.a, other.b), f.mul(self.b, other.d)),
            f.add(f.mul(self.c, other.a), f.mul(self.d, other.c)),
            f.add(f.mul(self.c, other.b), f.mul(self.d, other.d)),
        )

    def __repr__(self):
        return f"SL2[[{self.a},{self.b}],[{self.c},{self.d}]]"


def action_matrix(A: SL2Mat, degree: int):
    """Columns of the substitution action on degree-d coefficient vectors.

    Column i is the coefficient vector of (aX0+bX1)^(d-i) (cX0+dX1)^i, so
    (Af) has coefficients sum_i f_i * column_i.
    """
    f = A.ctx
    d = degree
    row_top = [f.coerce(A.a), f.coerce(A.b)]  # aX0 + bX1 as [c_0, c_1]
    row_bot = [f.coerce(A.c), f.coerce(A.d)]

    def binpow(lin, n):
        # coefficients of (u X0 + v X1)^n in the c_i convention
        out = [f.one]
        for _ in range(n):
            nxt = [f.zero] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i] = f.add(nxt[i], f.mul(c, lin[0]))
                nxt[i + 1] = f.add(nxt[i + 1], f.mul(c, lin[1]))
            out = nxt
        return out

    top_pows = [binpow(row_top, n) for n in range(d + 1)]
    bot_pows = [binpow(row_bot, n) for n in range(d + 1)]
    cols = []
    for i in range(d + 1):
        a = top_pows[d - i]
        b = bot_pows[i]
        col = [f.zero] * (d + 1)
        for j, x in enumerate(a):
            if f.is_zero(x):
                continue
            for k, y in enumerate(b):
                if not f.is_zero(y):
                    col[j + k] = f.add(col[j + k], f.mul(x, y))
        cols.append(col)
    return cols


def sl2_act(A: SL2Mat, form: BinForm) -> BinForm:
    """(A f)(X0, X1) = f(aX0 + bX1, cX0 + dX1)."""
    if A.ctx != form.field:
        raise MixedFields("matrix and form over different fields")
    cols = action_matrix(A, form.degree)
    return BinForm(form.field, form.degree, apply_action(form.field, cols, form.coeffs))


def apply_action(field: Field, cols, coeffs):
    out = [field.zero] * len(coeffs)
    for i, c in enumerate(coeffs):
        if field.is_zero(c):
            continue
        col = cols[i]
        for j in range(len(coeffs)):
            if not field.is_zero(col[j]):
                out[j] = field.add(out[j], field.mul(c, col[j]))
    return tuple(out)


def has_rational_point(form: BinForm) -> bool:
    """True iff the form vanishes somewhere on P1(F_q)."""
    if form.is_zero():
        raise ZeroForm("the zero form does not cut out a divisor")
    f = form.field
    # f(0:1) is the top coefficient; f(1:t) is the dehomogenization at t
    if f.is_zero(form.coeffs[-1]):
        return True
    poly = form.dehomogenize(0)
    for t in f.enumerate_raw():
        if f.is_zero(poly.eval_in(f, t)):
            return True
    return False


def rational_points(form: BinForm):
    """All zeros of the form on P1(F_q), canonicalized."""
    f = form.field
    out = []
    poly = form.dehomogenize(0)
    for t in f.enumerate_raw():
        if f.is_zero(poly.eval_in(f, t)):
            out.append(ProjPoint(f, f.one, t))
    if f.is_zero(form.coeffs[-1]):
        out.append(ProjPoint(f, f.zero, f.one))
    return out


@lru_cache(maxsize=8)
def _gq_cached(q: int):
    field = canonical_field(q)
    d = q + 1
    pts = [t for t in field.enumerate_raw()]
    out = []
    for coeffs in _iter_gq_raw(field, d, pts):
        out.append(coeffs)
    return tuple(out)


def _iter_gq_raw(field, d, ts):
    """Coefficient tuples of nonzero degree-d forms with no rational point,
    in lexicographic order."""
    from itertools import product

    els = list(field.enumerate_raw())
    nonzero = [e for e in els if not field.is_zero(e)]
    # c_0 = f(1:0) and c_d = f(0:1) must both be nonzero; other coefficients
    # are free and the remaining q-1 points are checked by evaluation
    ts_rest = [t for t in ts if not field.is_zero(t)]
    powers = {}
    for t in ts_rest:
        row = [field.one]
        for _ in range(d):
            row.append(field.mul(row[-1], t))
        powers[t] = row
    for c0 in nonzero:
        for mid in product(els, repeat=d - 1):
            for cd in nonzero:
                coeffs = (c0,) + mid + (cd,)
                ok = True
                for t in ts_rest:
                    row = powers[t]
                    acc = field.zero
                    for i, c in enumerate(coeffs):
                        if not field.is_zero(c):
                            acc = field.add(acc, field.mul(c, row[i]))
                    if field.is_zero(acc):
                        ok = False
                        break
                if ok:
                    yield coeffs


def enumerate_gq(q: int, allow_large: bool = False):
    """All degree-(q+1) forms over F_q without rational points, lex order."""
    if q > GQ_GUARD and not allow_large:
        raise TooLarge(
            f"enumerating all of G_{q} walks {q}^{q + 2} forms; "
            "pass allow_large=True to proceed"
        )
    field = canonical_field(q)
    return [BinForm(field, q + 1, c) for c in _gq_cached(q)]


def random_gq(q: int, rng: RngState) -> BinForm:
    """Uniform draw from G_q by rejection sampling."""
    field = canonical_field(q)
    d = q + 1
    while True:
        coeffs = [field.random_raw(rng) for _ in range(d + 1)]
        form = BinForm(field, d, coeffs)
        if form.is_zero():
            continue
        if not has_rational_point(form):
            return form


def bracket_form(q: int) -> BinForm:
    """X0^q X1 - X0 X1^q, the degree-(q+1) form vanishing on all of P1(F_q)."""
    field = canonical_field(q)
    coeffs = [field.zero] * (q + 2)
    coeffs[1] = field.one  # X0^q X1
    coeffs[q] = field.neg(field.one)  # -X0 X1^q
    return BinForm(field, q + 1, coeffs)
