"""The minimal-degree space-filling curve family and its smoothness checker.

For forms f (in the Y variables) and g (in the X variables), both of degree
q+1 over F_q, the curve is cut out on P1 x P1 by

    F = f(Y0, Y1) (X0^q X1 - X0 X1^q) + g(X0, X1) (Y0^q Y1 - Y0 Y1^q).

Both bracket factors vanish at every rational point, so V(F) passes through
all (q+1)^2 of them; the interesting question is smoothness.

``singular_witness`` decides it exactly when neither V(f) nor V(g) has a
rational point. A singular point must have both coordinates outside F_q and
all four homogeneous coordinates nonzero, so it shows up in the chart
X0 = Y0 = 1: its x-coordinate alpha is a root of the internal polynomial
p(x) = g_X0(1,x) + x^q g_X1(1,x), its y-coordinate beta is a root of the
f-side analogue, and the two are coupled by the cross condition
f_Y0(1, beta) = g_X1(1, alpha) * beta^q. The checker factors p over F_q,
works in K = F_q[t]/(h) for each irreducible factor h of degree >= 2, cuts
the candidate betas down with one gcd, and verifies every surviving
candidate by evaluating F and its four partials directly in the compositum.
A verdict of "singular" therefore always carries a checked witness, and
"smooth" means the exhaustive candidate search came up empty.

``scan_oracle`` is an independent brute-force cross-check that uses no
factorization and no gcd: it finds roots by scanning whole extension fields
(built with trial-division moduli) and tests the same five values at every
candidate pair, under an explicit budget on scanned field elements.
"""

from fractions import Fraction
from functools import lru_cache

from .binform import BinForm, has_rational_point, proj_points, rational_points
from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    InternalError,
    PreconditionViolated,
    ZeroForm,
)
from .field import (
    Fel,
    Field,
    canonical_field,
    coords_raw,
    extension,
    lift_raw,
    solve_linear,
)
from .rng import RngState
from .unipoly import UPoly, _ops_for, factor, monic_gcd

DEFAULT_SCAN_BUDGET = 10**7


class BiForm:
    """Bihomogeneous form on P1 x P1: a (d+1) x (e+1) coefficient grid,
    grid[i][j] multiplying X0^(d-i) X1^i Y0^(e-j) Y1^j."""

    __slots__ = ("field", "bidegree", "grid")

    def __init__(self, field: Field, bidegree, grid):
        d, e = bidegree
        grid = tuple(tuple(field.coerce(c) for c in row) for row in grid)
        if len(grid) != d + 1 or any(len(r) != e + 1 for r in grid):
            raise ValueError(f"grid shape does not match bidegree {bidegree}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "bidegree", (d, e))
        object.__setattr__(self, "grid", grid)

    def __setattr__(self, *a):
        raise AttributeError("BiForm is immutable")

    def __eq__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        return (
            self.field == other.field
            and self.bidegree == other.bidegree
            and self.grid == other.grid
        )

    def __hash__(self):
        return hash((self.field, self.bidegree, self.grid))

    def __repr__(self):
        return f"BiForm(GF({self.field.order}), {self.bidegree})"

    def partial(self, var: int) -> "BiForm":
        """Formal partial derivative; var indexes (X0, X1, Y0, Y1)."""
        f = self.field
        d, e = self.bidegree
        g = self.grid
        if var == 0:
            rows = [
                [f.mul(g[i][j], f.from_int(d - i)) for j in range(e + 1)]
                for i in range(d)
            ]
            return BiForm(f, (d - 1, e), rows)
        if var == 1:
            rows = [
                [f.mul(g[i + 1][j], f.from_int(i + 1)) for j in range(e + 1)]
                for i in range(d)
            ]
            return BiForm(f, (d - 1, e), rows)
        if var == 2:
            rows = [
                [f.mul(g[i][j], f.from_int(e - j)) for j in range(e)]
                for i in range(d + 1)
            ]
            return BiForm(f, (d, e - 1), rows)
        if var == 3:
            rows = [
                [f.mul(g[i][j + 1], f.from_int(j + 1)) for j in range(e)]
                for i in range(d + 1)
            ]
            return BiForm(f, (d, e - 1), rows)
        raise ValueError("var must be 0..3")

    def eval_raw(self, K: Field, x0, x1, y0, y1):
        f = self.field
        d, e = self.bidegree
        xpow = _mono_values(K, x0, x1, d)
        ypow = _mono_values(K, y0, y1, e)
        acc = K.zero
        for i in range(d + 1):
            row = self.grid[i]
            racc = K.zero
            touched = False
            for j in range(e + 1):
                c = row[j]
                if f.is_zero(c):
                    continue
                cl = lift_raw(f, c, K) if K != f else c
                racc = K.add(racc, K.mul(cl, ypow[j]))
                touched = True
            if touched:
                acc = K.add(acc, K.mul(racc, xpow[i]))
        return acc

    def __call__(self, p, q):
        """Evaluate at a pair of projective points (same context)."""
        K = p.ctx
        return Fel(K, self.eval_raw(K, p.x0, p.x1, q.x0, q.x1))

    def with_entry(self, i: int, j: int, value) -> "BiForm":
        """A copy with one grid entry replaced (used to perturb curves)."""
        rows = [list(r) for r in self.grid]
        rows[i][j] = self.field.coerce(value)
        return BiForm(self.field, self.bidegree, rows)


def _mono_values(K, x0, x1, d):
    """[x0^(d-i) * x1^i for i in 0..d]"""
    vals = []
    p = K.one
    for i in range(d + 1):
        vals.append(p)
        if i < d:
            p = K.mul(p, x1)
    p = K.one
    for i in range(d, -1, -1):
        vals[i] = K.mul(vals[i], p)
        if i > 0:
            p = K.mul(p, x0)
    return vals


class Curve:
    """C_{f,g}: the pair of forms plus the assembled defining BiForm."""

    __slots__ = ("q", "f", "g", "F")

    def __init__(self, q, f, g, F):
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "F", F)

    def __setattr__(self, *a):
        raise AttributeError("Curve is immutable")

    def __repr__(self):
        return f"Curve(q={self.q})"


def build_curve(f: BinForm, g: BinForm) -> Curve:
    """Assemble F = f(Y)(X0^q X1 - X0 X1^q) + g(X)(Y0^q Y1 - Y0 Y1^q)."""
    field = f.field
    if g.field != field:
        raise DegreeMismatch("f and g must live over the same field")
    q = field.order
    if f.degree != q + 1 or g.degree != q + 1:
        raise DegreeMismatch(
            f"both forms must have degree q+1 = {q + 1}, "
            f"got {f.degree} and {g.degree}"
        )
    if f.is_zero() or g.is_zero():
        raise ZeroForm("the zero form does not define a curve")
    n = q + 2  # coefficients per form
    grid = [[field.zero] * n for _ in range(n)]
    for j, c in enumerate(f.coeffs):  # f(Y) * (X0^q X1 - X0 X1^q)
        grid[1][j] = field.add(grid[1][j], c)
        grid[q][j] = field.sub(grid[q][j], c)
    for i, c in enumerate(g.coeffs):  # g(X) * (Y0^q Y1 - Y0 Y1^q)
        grid[i][1] = field.add(grid[i][1], c)
        grid[i][q] = field.sub(grid[i][q], c)
    return Curve(q, f, g, BiForm(field, (q + 1, q + 1), grid))


def verify_space_filling(curve: Curve) -> bool:
    """Scan all (q+1)^2 rational points of P1 x P1 for membership."""
    field = curve.f.field
    pts = proj_points(field)
    for p in pts:
        for r in pts:
            if not curve.F(p, r).is_zero():
                return False
    return True


def internal_polynomial(form: BinForm) -> UPoly:
    """X0^q * f_X0 + X1^q * f_X1, dehomogenized at X0 = 1.

    Its roots are the candidate affine coordinates of singular points on
    that factor; under the no-rational-point hypothesis it has exact degree
    2q and no roots in F_q.
    """
    field = form.field
    q = field.order
    d0 = form.partial(0).dehomogenize(0)
    d1 = form.partial(1).dehomogenize(0)
    shift = UPoly.monomial(field, field.one, q)
    return d0 + shift * d1


def _check_preconditions(f: BinForm, g: BinForm):
    for side, form in (("f", f), ("g", g)):
        if form.is_zero():
            raise ZeroForm(f"{side} is the zero form")
        if has_rational_point(form):
            pt = rational_points(form)[0]
            raise PreconditionViolated(
                f"V({side}) has the rational point {pt}; the smoothness "
                "criterion requires forms without rational points",
                side=side,
                point=pt,
            )


class SingularWitness:
    """A verified singular point of C_{f,g}.

    alpha and beta are the affine coordinates of the point
    (1:alpha) x (1:beta) inside the compositum field; alpha_minpoly is
    alpha's minimal polynomial over F_q, and beta_minpoly is beta's minimal
    polynomial over K = F_q[t]/(alpha_minpoly). Construction re-checks that
    all five values of the Jacobian criterion vanish and that the point is
    consistent with the structure a singular point must have (coordinates
    outside F_q, hence nonzero).
    """

    __slots__ = (
        "q",
        "alpha_minpoly",
        "beta_minpoly",
        "compositum",
        "alpha",
        "beta",
    )

    def __init__(self, f, g, alpha_minpoly, beta_minpoly, compositum, alpha, beta):
        field = f.field
        q = field.order
        L = compositum
        if alpha.ctx != L or beta.ctx != L:
            raise InternalError("witness coordinates must live in the compositum")
        # structural constraints of singular points
        if L.pow_(alpha.raw, q) == alpha.raw or L.pow_(beta.raw, q) == beta.raw:
            raise InternalError("witness coordinates must lie outside F_q")
        if alpha.is_zero() or beta.is_zero():
            raise InternalError("witness coordinates must be nonzero")
        if alpha_minpoly(alpha) != Fel(L, L.zero):
            raise InternalError("alpha_minpoly does not annihilate alpha")
        # beta_minpoly has coefficients in K = F_q[t]/(alpha_minpoly); embed
        # K into the compositum by t -> alpha and evaluate at beta
        K = beta_minpoly.field
        apow = _mono_powers(L, alpha.raw, K.degree)
        acc = L.zero
        for c in reversed(beta_minpoly.coeffs):
            acc = L.mul(acc, beta.raw)
            acc = L.add(acc, _embed_k(L, field, apow, K, c))
        if not L.is_zero(acc):
            raise InternalError("beta_minpoly does not annihilate beta")
        curve = build_curve(f, g)
        vals = _jacobian_values(curve, L, alpha.raw, beta.raw)
        if any(not L.is_zero(v) for v in vals):
            raise InternalError("witness fails the five vanishing conditions")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "alpha_minpoly", alpha_minpoly)
        object.__setattr__(self, "beta_minpoly", beta_minpoly)
        object.__setattr__(self, "compositum", compositum)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, *a):
        raise AttributeError("SingularWitness is immutable")

    def __repr__(self):
        return (
            f"SingularWitness(q={self.q}, deg alpha={self.alpha_minpoly.degree}, "
            f"deg beta/K={self.beta_minpoly.degree})"
        )

    def to_json_dict(self):
        field = self.alpha_minpoly.field
        K = self.beta_minpoly.field
        return {
            "alpha_minpoly": [field.format_el(c) for c in self.alpha_minpoly.coeffs],
            "beta_minpoly": [
                [field.format_el(x) for x in coords_raw(K, c, field)]
                for c in self.beta_minpoly.coeffs
            ],
            "compositum_degree": self.compositum.degree_over(field),
        }


def _mono_powers(L, x, n):
    out = [L.one]
    for _ in range(n - 1):
        out.append(L.mul(out[-1], x))
    return out


def _embed_k(L, base, alpha_powers, K, k_raw):
    """Image of a K element under t -> alpha inside L (K = base[t]/(h))."""
    acc = L.zero
    for j, c in enumerate(coords_raw(K, k_raw, base)):
        if base.is_zero(c):
            continue
        acc = L.add(acc, L.mul(lift_raw(base, c, L), alpha_powers[j]))
    return acc


def _jacobian_forms(curve: Curve):
    return [
        curve.F,
        curve.F.partial(0),
        curve.F.partial(1),
        curve.F.partial(2),
        curve.F.partial(3),
    ]


def _eval_five(forms, L, alpha_raw, beta_raw):
    one = L.one
    return [bf.eval_raw(L, one, alpha_raw, one, beta_raw) for bf in forms]


def _jacobian_values(curve: Curve, L, alpha_raw, beta_raw):
    return _eval_five(_jacobian_forms(curve), L, alpha_raw, beta_raw)


class SmoothnessReport:
    """Verdict plus evidence: smooth iff no witness."""

    __slots__ = ("smooth", "witness", "method", "stats")

    def __init__(self, smooth, witness, method, stats):
        if smooth != (witness is None):
            raise InternalError("report consistency: smooth iff witness absent")
        object.__setattr__(self, "smooth", smooth)
        object.__setattr__(self, "witness", witness)
        object.__setattr__(self, "method", method)
        object.__setattr__(self, "stats", dict(stats))

    def __setattr__(self, *a):
        raise AttributeError("SmoothnessReport is immutable")

    def to_json_dict(self):
        out = {
            "smooth": self.smooth,
            "method": self.method,
            "stats": self.stats,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


def singular_witness(f: BinForm, g: BinForm, rng: RngState | None = None,
                     _stats: dict | None = None):
    """Search C_{f,g} for a singular point; None means the curve is smooth.

    Requires V(f) and V(g) to have no rational points (PreconditionViolated
    otherwise). The verdict is deterministic: the rng only feeds the
    equal-degree splitting inside factorization, whose output order is
    canonicalized.
    """
    _check_preconditions(f, g)
    rng = rng if rng is not None else RngState(0)
    field = f.field
    q = field.order
    stats = _stats if _stats is not None else {}
    stats.setdefault("factors_examined", 0)
    stats.setdefault("gcds_computed", 0)

    p_poly = internal_polynomial(g)
    qt_poly = internal_polynomial(f)
    fy0 = f.partial(0).dehomogenize(0)  # f_Y0(1, y)
    gx1 = g.partial(1).dehomogenize(0)  # g_X1(1, x)

    jforms = None
    _, p_factors = factor(p_poly, rng)
    for h, _mult in p_factors:
        if h.degree < 2:
            continue  # rational alpha cannot be singular
        stats["factors_examined"] += 1
        K = extension(field, h, _trusted=True)
        alpha_raw = _gen_raw(K)
        c = gx1.eval_in(K, alpha_raw)
        # r(Y) = f_Y0(1, Y) - c Y^q, the cross condition at alpha
        r_coeffs = [lift_raw(field, x, K) for x in fy0.coeffs]
        r_coeffs += [K.zero] * (q + 1 - len(r_coeffs))
        r_coeffs[q] = K.sub(r_coeffs[q], c)
        r = UPoly(K, r_coeffs)
        qt_K = qt_poly.lift_to(K)
        stats["gcds_computed"] += 1
        G = monic_gcd(qt_K, r)
        if G.degree < 1:
            continue
        _, g_factors = factor(G, rng)
        for m, _m2 in g_factors:
            if m.degree == 1:
                L = K
                beta_raw = K.neg(m.coeffs[0])
                alpha_L = alpha_raw
            else:
                L = extension(K, m, _trusted=True)
                beta_raw = _gen_raw(L)
                alpha_L = lift_raw(K, alpha_raw, L)
            if jforms is None:
                jforms = _jacobian_forms(build_curve(f, g))
            vals = _eval_five(jforms, L, alpha_L, beta_raw)
            if all(L.is_zero(v) for v in vals):
                return SingularWitness(
                    f, g, h, m, L, Fel(L, alpha_L), Fel(L, beta_raw)
                )
    return None


def _gen_raw(K):
    """The class of the adjoined variable in K = base[t]/(modulus)."""
    entries = [K._zentry()] * K.degree
    entries[1] = K.entry_from_base_raw(K.base.one)
    return tuple(entries)


def smoothness_report(f: BinForm, g: BinForm, rng: RngState | None = None) -> SmoothnessReport:
    stats = {}
    w = singular_witness(f, g, rng, _stats=stats)
    return SmoothnessReport(w is None, w, "factor_gcd", stats)


# ---------------------------------------------------------------------------
# Independent scan oracle


@lru_cache(maxsize=None)
def _scan_modulus(q: int, d: int):
    """Lex-smallest monic irreducible of degree d over F_q, found by trial
    division only (no gcd, no factorization)."""
    from itertools import product

    field = canonical_field(q)
    if d == 1:
        return (field.zero, field.one)
    ops = _ops_for(field)
    coded = field.kernel_backed
    els = list(field.enumerate_raw())
    divisors = []
    for e in range(1, d // 2 + 1):
        for tail in product(els, repeat=e):
            poly = [field.encode(c) if coded else c for c in tail]
            poly.append(1 if coded else field.one)
            divisors.append(poly)
    for tail in product(els, repeat=d):
        cand = [field.encode(c) if coded else c for c in tail]
        cand.append(1 if coded else field.one)
        if all(ops.rem(cand, div) for div in divisors):
            if coded:
                return tuple(field.decode(c) for c in cand)
            return tuple(cand)
    raise InternalError(f"no irreducible of degree {d} over GF({q})")


@lru_cache(maxsize=None)
def _scan_field(q: int, d: int):
    field = canonical_field(q)
    if d == 1:
        return field
    return extension(field, _scan_modulus(q, d), _trusted=True)


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.spent = 0

    def charge(self, amount, known_remaining):
        if self.spent + amount > self.limit:
            raise BudgetExceeded(
                f"scan oracle needs at least {self.spent + amount + known_remaining} "
                f"field elements, budget is {self.limit}",
                needed=self.spent + amount + known_remaining,
            )
        self.spent += amount


def _exact_degree(M, raw, q, max_deg):
    """Smallest e with raw^(q^e) = raw."""
    cur = raw
    for e in range(1, max_deg + 1):
        cur = M.pow_(cur, q)
        if cur == raw:
            return e
    raise InternalError("element fixed by no Frobenius power")


def _roots_by_scan(M, q, p_poly, qt_poly, budget, known_remaining):
    """All roots of both polynomials in M by full enumeration, tagged with
    exact degrees over F_q. Returns (roots_p, roots_qt) sorted canonically."""
    budget.charge(M.order, known_remaining)
    field = p_poly.field
    deg_total = M.degree_over(field)
    if M == field:
        # scanning the coefficient field itself
        ops = _ops_for(field)
        r_p, r_qt = [], []
        for x in M.enumerate_raw():
            xs = M.encode(x) if M.kernel_backed else x
            if ops.eval_at(list(p_poly._c), xs) == ops.zero_s:
                r_p.append(x)
            if ops.eval_at(list(qt_poly._c), xs) == ops.zero_s:
                r_qt.append(x)
    elif M.base == field and field.kernel_backed:
        from ._kernels import impl as kern

        tab = field.tables()
        mu = list(M._mod_c)
        f1 = [field.encode(c) for c in p_poly.coeffs]
        f2 = [field.encode(c) for c in qt_poly.coeffs]
        rp, rq = kern.scan_roots2(f1, f2, mu, tab)
        r_p = [M._pad(list(t)) for t in rp]
        r_qt = [M._pad(list(t)) for t in rq]
    else:
        r_p, r_qt = [], []
        for x in M.enumerate_raw():
            if M.is_zero(p_poly.eval_in(M, x)):
                r_p.append(x)
            if M.is_zero(qt_poly.eval_in(M, x)):
                r_qt.append(x)
    out = []
    for roots in (r_p, r_qt):
        tagged = [(M.sort_key(r), r, _exact_degree(M, r, q, deg_total)) for r in roots]
        tagged.sort()
        out.append([(r, e) for _, r, e in tagged])
    return out


def _beta_minpoly_over_k(M, field, alpha_raw, h, beta_raw):
    """Minimal polynomial of beta over the subfield F_q(alpha) of M, as a
    polynomial over K = F_q[t]/(h), found by linear algebra over F_q."""
    K = extension(field, h, _trusted=True)
    d1 = h.degree
    apow = _mono_powers(M, alpha_raw, d1)
    bpow = [M.one]
    n = 1
    while True:
        bpow.append(M.mul(bpow[-1], beta_raw))
        cols = []
        for i in range(n):
            for j in range(d1):
                cols.append(coords_raw(M, M.mul(bpow[i], apow[j]), field))
        target = coords_raw(M, M.neg(bpow[n]), field)
        sol = solve_linear(field, cols, target)
        if sol is not None:
            coeffs = []
            for i in range(n):
                chunk = sol[i * d1 : (i + 1) * d1]
                coeffs.append(K.coerce(tuple(chunk)))
            coeffs.append(K.one)
            return UPoly(K, coeffs), K
        n += 1
        if n > M.degree_over(field):  # pragma: no cover
            raise InternalError("no minimal polynomial found")


def scan_oracle(f: BinForm, g: BinForm, budget: int = DEFAULT_SCAN_BUDGET,
                _stats: dict | None = None):
    """Brute-force singular-point search, independent of the factor/gcd path.

    For every pair of candidate degrees (d1 for alpha, d2 for beta) with
    actual roots at those exact degrees, all roots of both internal
    polynomials are enumerated inside F_{q^lcm(d1,d2)} by full field scans
    and every (alpha, beta) combination is tested against the five vanishing
    conditions. Moduli for the scan fields are found by trial division.
    ``budget`` caps the total number of field elements enumerated across all
    scans; exceeding it raises BudgetExceeded naming a lower bound on the
    budget that would complete the call. Deterministic: scans run cheapest
    first and the first verified witness is returned.
    """
    from math import lcm

    _check_preconditions(f, g)
    field = f.field
    q = field.order
    stats = _stats if _stats is not None else {}
    p_poly = internal_polynomial(g)
    qt_poly = internal_polynomial(f)
    bud = _Budget(budget)

    # Phase 1: roots of exact degree d in F_{q^d} for every d up to 2q.
    step_costs = [q**d for d in range(1, 2 * q + 1)]
    roots_at = {}
    for d in range(1, 2 * q + 1):
        remaining = sum(step_costs[d:])  # cost of the remaining phase-1 scans
        M = _scan_field(q, d)
        r_p, r_qt = _roots_by_scan(M, q, p_poly, qt_poly, bud, remaining)
        roots_at[d] = (M, r_p, r_qt)

    p_degrees = sorted({e for d in roots_at for _, e in roots_at[d][1] if e == d})
    qt_degrees = sorted({e for d in roots_at for _, e in roots_at[d][2] if e == d})
    stats["alpha_degrees"] = p_degrees
    stats["beta_degrees"] = qt_degrees

    # Phase 2: for every degree pair, test all root pairs in the compositum.
    pairs = sorted(
        ((lcm(d1, d2), d1, d2) for d1 in p_degrees for d2 in qt_degrees),
    )
    jforms = _jacobian_forms(build_curve(f, g))
    scanned = dict(roots_at)  # compositum caches, keyed by degree over F_q
    tested = 0
    for l, d1, d2 in pairs:
        if l not in scanned:
            later = {ll for ll, _, _ in pairs if ll > l} - set(scanned)
            remaining = sum(q**ll for ll in later)
            M = _scan_field(q, l)
            r_p, r_qt = _roots_by_scan(M, q, p_poly, qt_poly, bud, remaining)
            scanned[l] = (M, r_p, r_qt)
        M, r_p, r_qt = scanned[l]
        alphas = [r for r, e in r_p if e == d1]
        betas = [r for r, e in r_qt if e == d2]
        for alpha_raw in alphas:
            for beta_raw in betas:
                tested += 1
                vals = _eval_five(jforms, M, alpha_raw, beta_raw)
                if all(M.is_zero(v) for v in vals):
                    from .field import minimal_polynomial

                    h = minimal_polynomial(Fel(M, alpha_raw), q)
                    bm, _K = _beta_minpoly_over_k(M, field, alpha_raw, h, beta_raw)
                    stats["pairs_tested"] = tested
                    stats["elements_scanned"] = bud.spent
                    return SingularWitness(
                        f, g, h, bm, M, Fel(M, alpha_raw), Fel(M, beta_raw)
                    )
    stats["pairs_tested"] = tested
    stats["elements_scanned"] = bud.spent
    return None


def scan_report(f: BinForm, g: BinForm, budget: int = DEFAULT_SCAN_BUDGET) -> SmoothnessReport:
    stats = {}
    w = scan_oracle(f, g, budget, _stats=stats)
    return SmoothnessReport(w is None, w, "scan_oracle", stats)


# ---------------------------------------------------------------------------


def homma_bound(q: int, k: int) -> Fraction:
    """Upper bound (q-1)(q^4-1) / (q(q^3-1) - 3(q-1)) * k on the rational
    points of a nondegenerate irreducible degree-k space curve."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Fraction((q - 1) * (q**4 - 1), q * (q**3 - 1) - 3 * (q - 1)) * k
