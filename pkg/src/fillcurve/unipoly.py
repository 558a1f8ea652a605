"""Dense univariate polynomials over any field context.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial has an empty coefficient list and degree -1 (the library's
encoding of "degree minus infinity"). Over fields small enough to carry
lookup tables the arithmetic runs on the selected kernel implementation;
over bigger fields (relative extensions met during the singular-point
search) a generic path uses the field's own element operations.

Factorization is the classical pipeline: squarefree decomposition (with
p-th root extraction in characteristic p), distinct-degree splitting by
Frobenius powers, and equal-degree splitting by Cantor-Zassenhaus in odd
characteristic or the trace map in characteristic two. Equal-degree
splitting consumes caller-supplied randomness, but factors are sorted
canonically before returning so the result does not depend on the seed.
"""

from functools import lru_cache

from ._kernels import impl as kern
from .errors import (
    BothZero,
    DegreeZero,
    DivisionByZero,
    IncompatibleFields,
    MixedFields,
)
from .field import Fel, Field, lift_raw
from .rng import RngState

_SCAN_LIMIT = 4096  # largest field searched for roots by plain scanning


class _KernelOps:
    """Adapter running polynomial ops on the kernel (tabled fields)."""

    def __init__(self, field):
        self.field = field
        self.tab = field.tables()
        self.zero_s = 0
        self.one_s = 1

    def int_scalar(self, n):
        return self.field.encode(self.field.from_int(n))

    def scalar_pow(self, c, e):
        return self.field.encode(self.field.pow_(self.field.decode(c), e))

    def random_scalar(self, rng):
        return rng.randbelow(self.tab[0])

    def add(self, a, b):
        return kern.add(a, b, self.tab)

    def sub(self, a, b):
        return kern.sub(a, b, self.tab)

    def neg(self, a):
        return kern.neg(a, self.tab)

    def scal(self, a, s):
        return kern.scal(a, s, self.tab)

    def mul(self, a, b):
        return kern.mul(a, b, self.tab)

    def divmod_(self, a, b):
        return kern.divmod_(a, b, self.tab)

    def rem(self, a, b):
        return kern.rem(a, b, self.tab)

    def monic(self, a):
        return kern.monic(a, self.tab)

    def gcd(self, a, b):
        return kern.gcd(a, b, self.tab)

    def mulmod(self, a, b, m):
        return kern.mulmod(a, b, m, self.tab)

    def powmod(self, a, e, m):
        return kern.powmod(a, e, m, self.tab)

    def eval_at(self, f, x):
        return kern.eval_at(f, x, self.tab)


class _GenericOps:
    """Same contract as _KernelOps but over raw field elements."""

    def __init__(self, field):
        self.field = field
        self.zero_s = field.zero
        self.one_s = field.one

    def int_scalar(self, n):
        return self.field.from_int(n)

    def scalar_pow(self, c, e):
        return self.field.pow_(c, e)

    def random_scalar(self, rng):
        return self.field.random_raw(rng)

    def _norm(self, a):
        f = self.field
        while a and f.is_zero(a[-1]):
            a.pop()
        return a

    def add(self, a, b):
        f = self.field
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return self._norm(out)

    def sub(self, a, b):
        f = self.field
        out = list(a) + [f.zero] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = f.sub(out[i], c)
        return self._norm(out)

    def neg(self, a):
        f = self.field
        return [f.neg(c) for c in a]

    def scal(self, a, s):
        f = self.field
        if f.is_zero(s):
            return []
        return self._norm([f.mul(c, s) for c in a])

    def mul(self, a, b):
        f = self.field
        if not a or not b:
            return []
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if f.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                if not f.is_zero(bj):
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return self._norm(out)

    def divmod_(self, a, b):
        f = self.field
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        db = len(b) - 1
        if len(a) <= db:
            return [], list(a)
        r = list(a)
        inv_lead = f.inv(b[db])
        q = [f.zero] * (len(r) - db)
        for i in range(len(r) - db - 1, -1, -1):
            c = r[i + db]
            if f.is_zero(c):
                continue
            fac = f.mul(c, inv_lead)
            q[i] = fac
            for j in range(db):
                if not f.is_zero(b[j]):
                    r[i + j] = f.sub(r[i + j], f.mul(fac, b[j]))
            r[i + db] = f.zero
        del r[db:]
        return self._norm(q), self._norm(r)

    def rem(self, a, b):
        return self.divmod_(a, b)[1]

    def monic(self, a):
        if not a or a[-1] == self.field.one:
            return list(a)
        return self.scal(a, self.field.inv(a[-1]))

    def gcd(self, a, b):
        a, b = list(a), list(b)
        while b:
            a, b = b, self.rem(a, b)
        return self.monic(a)

    def mulmod(self, a, b, m):
        return self.rem(self.mul(a, b), m)

    def powmod(self, a, e, m):
        if e < 0:
            raise ValueError("negative exponent")
        if len(m) <= 1:
            return []
        out = [self.field.one]
        base = self.rem(a, m)
        while e:
            if e & 1:
                out = self.mulmod(out, base, m)
            e >>= 1
            if e:
                base = self.mulmod(base, base, m)
        return out

    def eval_at(self, f, x):
        fld = self.field
        acc = fld.zero
        for c in reversed(f):
            acc = fld.add(fld.mul(acc, x), c)
        return acc


@lru_cache(maxsize=None)
def _ops_for(field: Field):
    return _KernelOps(field) if field.kernel_backed else _GenericOps(field)


class UPoly:
    """Dense univariate polynomial over a fixed field context."""

    __slots__ = ("field", "_c")

    def __init__(self, field: Field, coeffs=()):
        stored = []
        coded = field.kernel_backed
        for c in coeffs:
            raw = field.coerce(c)
            stored.append(field.encode(raw) if coded else raw)
        zero = 0 if coded else field.zero
        while stored and stored[-1] == zero:
            stored.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_c", tuple(stored))

    def __setattr__(self, *a):
        raise AttributeError("UPoly is immutable")

    @classmethod
    def _make(cls, field, stored):
        """Trusted constructor from an already-normalized stored list."""
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_c", tuple(stored))
        return self

    @classmethod
    def zero(cls, field):
        return cls._make(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field, coeff, power):
        return cls(field, [0] * power + [coeff])

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 encodes the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    @property
    def coeffs(self):
        """Raw coefficient tuple, lowest degree first."""
        f = self.field
        if f.kernel_backed:
            return tuple(f.decode(c) for c in self._c)
        return self._c

    def coeff(self, i: int) -> Fel:
        if i < 0 or i >= len(self._c):
            return Fel(self.field, self.field.zero)
        c = self._c[i]
        return Fel(self.field, self.field.decode(c) if self.field.kernel_backed else c)

    def lead(self) -> Fel:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeff(self.degree)

    def stored(self):
        return list(self._c)

    def _ops(self):
        return _ops_for(self.field)

    def _chk(self, other):
        if not isinstance(other, UPoly):
            raise TypeError(f"expected UPoly, got {other!r}")
        if other.field != self.field:
            raise MixedFields("polynomials over different fields")
        return other

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._chk(other)
        return UPoly._make(self.field, self._ops().add(list(self._c), list(other._c)))

    def __sub__(self, other):
        other = self._chk(other)
        return UPoly._make(self.field, self._ops().sub(list(self._c), list(other._c)))

    def __neg__(self):
        return UPoly._make(self.field, self._ops().neg(list(self._c)))

    def __mul__(self, other):
        if isinstance(other, (Fel, int)):
            s = self.field.coerce(other)
            s = self.field.encode(s) if self.field.tabled else s
            return UPoly._make(self.field, self._ops().scal(list(self._c), s))
        other = self._chk(other)
        return UPoly._make(self.field, self._ops().mul(list(self._c), list(other._c)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._chk(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q, r = self._ops().divmod_(list(self._c), list(other._c))
        return UPoly._make(self.field, q), UPoly._make(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        return UPoly._make(self.field, self._ops().monic(list(self._c)))

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self):
        return hash((self.field, self._c))

    def sort_key(self):
        """(degree, coefficient keys) tuple used for canonical ordering."""
        f = self.field
        return (self.degree,) + tuple(f.sort_key(r) for r in self.coeffs)

    def __repr__(self):
        return f"UPoly(GF({self.field.order}): {list(self.coeffs)})"

    # -- analysis --------------------------------------------------------------

    def __call__(self, x):
        """Evaluate. Accepts an element of the coefficient field or of any
        tower built on top of it."""
        if isinstance(x, int):
            x = Fel(self.field, self.field.from_int(x))
        if not isinstance(x, Fel):
            raise TypeError("evaluation point must be a field element")
        if x.ctx == self.field:
            f = self.field
            xs = f.encode(x.raw) if f.kernel_backed else x.raw
            val = self._ops().eval_at(list(self._c), xs)
            return Fel(f, f.decode(val) if f.kernel_backed else val)
        if not x.ctx.contains_level(self.field):
            raise IncompatibleFields(
                f"cannot evaluate polynomial over {self.field} at element of {x.ctx}"
            )
        return Fel(x.ctx, self.eval_in(x.ctx, x.raw))

    def eval_in(self, K: Field, x_raw):
        """Horner evaluation in the tower field K (raw in, raw out)."""
        lifted = [lift_raw(self.field, r, K) for r in self.coeffs]
        acc = K.zero if not K.is_prime else 0
        for c in reversed(lifted):
            acc = K.add(K.mul(acc, x_raw), c)
        return acc

    def lift_to(self, K: Field) -> "UPoly":
        """The same polynomial with coefficients embedded into the tower K."""
        if K == self.field:
            return self
        if not K.contains_level(self.field):
            raise IncompatibleFields(f"{K} does not extend {self.field}")
        return UPoly(K, [lift_raw(self.field, r, K) for r in self.coeffs])

    def derivative(self) -> "UPoly":
        return UPoly._make(self.field, _derivative_stored(self._ops(), list(self._c)))


# ---------------------------------------------------------------------------
# gcd, irreducibility, factorization


def monic_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic greatest common divisor by Euclid's algorithm."""
    if a.field != b.field:
        raise MixedFields("gcd of polynomials over different fields")
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    ops = _ops_for(a.field)
    return UPoly._make(a.field, ops.gcd(list(a._c), list(b._c)))


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: UPoly) -> bool:
    """Rabin's test: X^(Q^n) = X mod f and gcd(f, X^(Q^(n/r)) - X) = 1 for
    every prime r dividing n = deg f."""
    n = f.degree
    if n < 1:
        raise DegreeZero("irreducibility needs degree >= 1")
    if n == 1:
        return True
    ops = _ops_for(f.field)
    Q = f.field.order
    fm = ops.monic(list(f._c))
    xp = [ops.zero_s, ops.one_s]
    iterates = [xp]  # iterates[i] = X^(Q^i) mod f
    h = xp
    for _ in range(n):
        h = ops.powmod(h, Q, fm)
        iterates.append(h)
    if iterates[n] != ops.rem(xp, fm):
        return False
    for r in _prime_divisors(n):
        g = ops.gcd(ops.sub(iterates[n // r], xp), fm)
        if len(g) - 1 > 0:
            return False
    return True


def _pth_root(ops, field, f):
    """p-th root of a polynomial with vanishing derivative (stored lists)."""
    p = field.char
    e = field.order // p  # c -> c**(order/p) is the inverse of c -> c**p
    out = []
    for i in range(0, len(f), p):
        out.append(ops.scalar_pow(f[i], e))
    while out and out[-1] == ops.zero_s:
        out.pop()
    return out


def _derivative_stored(ops, f):
    res = []
    for i in range(1, len(f)):
        prod = ops.scal([f[i]], ops.int_scalar(i))
        res.append(prod[0] if prod else ops.zero_s)
    while res and res[-1] == ops.zero_s:
        res.pop()
    return res


def _squarefree_decomposition(ops, field, f):
    """f monic, deg >= 1 -> list of (monic squarefree stored poly, mult)."""
    out = []
    fp = _derivative_stored(ops, f)
    if not fp:
        root = _pth_root(ops, field, f)
        for g, m in _squarefree_decomposition(ops, field, root):
            out.append((g, m * field.char))
        return out
    c = ops.gcd(f, fp)
    w = ops.divmod_(f, c)[0]
    i = 1
    while len(w) - 1 > 0:
        y = ops.gcd(w, c)
        fac = ops.divmod_(w, y)[0]
        if len(fac) - 1 > 0:
            out.append((fac, i))
        w = y
        c = ops.divmod_(c, y)[0]
        i += 1
    if len(c) - 1 > 0:
        root = _pth_root(ops, field, c)
        for g, m in _squarefree_decomposition(ops, field, root):
            out.append((g, m * field.char))
    return out


def _distinct_degree(ops, field, f):
    """f monic squarefree -> list of (product-of-degree-d-factors, d)."""
    Q = field.order
    out = []
    xp = [ops.zero_s, ops.one_s]
    v = f
    h = ops.rem(xp, v)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = ops.powmod(h, Q, v)
        g = ops.gcd(ops.sub(h, xp), v)
        if len(g) - 1 > 0:
            out.append((g, d))
            v = ops.divmod_(v, g)[0]
            h = ops.rem(h, v)
    if len(v) - 1 > 0:
        out.append((v, len(v) - 1))
    return out


def _random_nonconstant(ops, field, deg_bound, rng):
    while True:
        coeffs = [ops.random_scalar(rng) for _ in range(deg_bound)]
        while coeffs and coeffs[-1] == ops.zero_s:
            coeffs.pop()
        if len(coeffs) - 1 >= 1:
            return coeffs


def _equal_degree(ops, field, f, d, rng, out):
    """Split monic squarefree f, all of whose factors have degree d."""
    n = len(f) - 1
    if n == d:
        out.append(f)
        return
    Q = field.order
    while True:
        a = _random_nonconstant(ops, field, n, rng)
        g = ops.gcd(a, f)
        if 0 < len(g) - 1 < n:
            break
        if field.char == 2:
            # trace map over GF(2): a + a^2 + a^4 + ... picks out factors
            k = 0
            t = Q
            while t > 1:
                t //= 2
                k += 1
            total_bits = k * d
            tr = ops.rem(a, f)
            cur = tr
            for _ in range(total_bits - 1):
                cur = ops.mulmod(cur, cur, f)
                tr = ops.add(tr, cur)
            g = ops.gcd(tr, f)
        else:
            e = (Q**d - 1) // 2
            b = ops.powmod(a, e, f)
            g = ops.gcd(ops.sub(b, [ops.one_s]), f)
        if 0 < len(g) - 1 < n:
            break
    _equal_degree(ops, field, g, d, rng, out)
    _equal_degree(ops, field, ops.divmod_(f, g)[0], d, rng, out)


def factor(f: UPoly, rng: RngState | None = None):
    """Full factorization into monic irreducibles.

    Returns (unit, factors) where unit is the leading coefficient as a Fel
    and factors is a list of (monic irreducible UPoly, multiplicity) sorted
    by (degree, coefficient sequence); unit * prod(h**m) == f exactly.
    """
    if f.degree < 1:
        raise DegreeZero("factorization needs degree >= 1")
    rng = rng if rng is not None else RngState(0)
    field = f.field
    ops = _ops_for(field)
    unit = f.lead()
    fm = ops.monic(list(f._c))
    found = {}
    for g, mult in _squarefree_decomposition(ops, field, fm):
        for prod, d in _distinct_degree(ops, field, g):
            if len(prod) - 1 == d:
                parts = [prod]
            else:
                parts = []
                _equal_degree(ops, field, prod, d, rng, parts)
            for h in parts:
                key = tuple(h)
                found[key] = found.get(key, 0) + mult
    factors = [(UPoly._make(field, list(k)), m) for k, m in found.items()]
    factors.sort(key=lambda fm_: fm_[0].sort_key())
    return unit, factors


def roots_in_field(f: UPoly, K: Field):
    """All roots of f in the tower field K, sorted lexicographically,
    multiplicities suppressed."""
    if K != f.field and not K.contains_level(f.field):
        raise IncompatibleFields(f"{K} does not contain {f.field}")
    if f.is_zero():
        raise BothZero("the zero polynomial vanishes everywhere")
    fK = f.lift_to(K)
    if f.degree == 0:
        return []
    raws = []
    if K.order <= _SCAN_LIMIT:
        ops = _ops_for(K)
        stored = list(fK._c)
        for r in K.enumerate_raw():
            x = K.encode(r) if K.kernel_backed else r
            if ops.eval_at(stored, x) == ops.zero_s:
                raws.append(r)
    else:
        ops = _ops_for(K)
        fm = ops.monic(list(fK._c))
        xp = [ops.zero_s, ops.one_s]
        xq = ops.powmod(xp, K.order, fm)
        g = ops.gcd(ops.sub(xq, xp), fm)
        if len(g) - 1 > 0:
            parts = []
            if len(g) - 1 == 1:
                parts = [g]
            else:
                _equal_degree(ops, K, g, 1, RngState(0), parts)
            for lin in parts:
                c0 = lin[0]
                raw = K.decode(ops.neg([c0])[0]) if K.kernel_backed else K.neg(c0)
                raws.append(raw)
    raws.sort(key=K.sort_key)
    return [Fel(K, r) for r in raws]
