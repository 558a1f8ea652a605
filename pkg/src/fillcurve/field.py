"""Finite fields as explicit towers.

A field is either a prime field F_p or an extension of another field by a
monic irreducible modulus, so F_{q^d} built on top of F_q stays a two-level
tower instead of being flattened to one big extension of F_p. Towers of
height three (compositum on top of a relative extension) occur routinely in
the singular-point search.

Element values ("raws") are plain data:

* prime field: an int in [0, p);
* extension: a tuple of fixed length equal to the extension degree, low
  degree first. Entries are the base field's *compact* values: the packed
  integer code when the base is small enough to carry lookup tables,
  otherwise the base raw itself.

Equality of raws is therefore plain ``==`` and raws hash cheaply. All
deterministic tie-breaking in the library uses ``Field.sort_key``, the
lexicographic order on the (recursively decoded) coefficient sequence with
the constant coefficient most significant.
"""

from array import array
from functools import lru_cache

from ._kernels import impl as kern
from .errors import (
    BadSubfieldDegree,
    DivisionByZero,
    IncompatibleFields,
    MixedFields,
    NotAPrimePower,
)

# Largest field order for which flat multiplication tables are built. Fields
# above this run on the generic tower arithmetic instead of the kernels.
# Extensions use a lower threshold than prime fields: their tables are built
# by the (slower) generic arithmetic, which only pays off while the tables
# stay small.
TABLE_MAX = 512
EXT_TABLE_MAX = 128


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def split_prime_power(q: int):
    """Return (p, k) with q = p**k, or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    n = q
    p = None
    for f in (2, 3, 5, 7, 11, 13):
        if n % f == 0:
            p = f
            break
    if p is None:
        f = 17
        while f * f <= n:
            if n % f == 0:
                p = f
                break
            f += 2
        if p is None:
            p = n  # q itself is prime
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    return p, k


class Field:
    """Common interface of PrimeField and ExtField. Immutable."""

    order: int
    char: int
    degree: int  # over the base (1 for prime fields)
    is_prime: bool
    base = None
    modulus = None  # tuple of base raws, monic, length degree + 1

    def __init__(self):
        self._tab = None

    # -- structure ---------------------------------------------------------

    def tower_degree(self) -> int:
        """Degree over the prime field."""
        d, f = 1, self
        while not f.is_prime:
            d *= f.degree
            f = f.base
        return d

    def level_of_order(self, q: int):
        """The tower level of order q, or None."""
        f = self
        while f is not None:
            if f.order == q:
                return f
            f = f.base
        return None

    def degree_over(self, level) -> int:
        d, f = 1, self
        while f is not None:
            if f == level:
                return d
            d *= f.degree
            f = f.base
        raise IncompatibleFields(f"{level} is not a level of {self}")

    def contains_level(self, level) -> bool:
        f = self
        while f is not None:
            if f == level:
                return True
            f = f.base
        return False

    # -- tables and codes --------------------------------------------------

    @property
    def tabled(self) -> bool:
        """Whether arithmetic tables can be built (the field is small)."""
        return self.order <= TABLE_MAX

    @property
    def kernel_backed(self) -> bool:
        """Whether polynomial arithmetic over this field runs on the table
        kernels. A pure function of the field's structure, so structurally
        equal contexts store polynomial coefficients identically. Fields
        beyond the threshold use the generic path, whose *elements* are
        still computed by the kernels one level down the tower."""
        if self.is_prime:
            return self.order <= TABLE_MAX
        return self.order <= EXT_TABLE_MAX

    def tables(self):
        """Flat (Q, MUL, ADD, SUB, NEG, INV) arithmetic tables (order <= TABLE_MAX)."""
        if self._tab is None:
            if not self.tabled:
                raise ValueError(f"field of order {self.order} is too big for tables")
            self._tab = self._build_tables()
        return self._tab

    def _build_tables(self):
        Q = self.order
        els = [self.decode(c) for c in range(Q)]
        mul_l = [0] * (Q * Q)
        add_l = [0] * (Q * Q)
        sub_l = [0] * (Q * Q)
        for a in range(Q):
            ea = els[a]
            row = a * Q
            for b in range(Q):
                eb = els[b]
                mul_l[row + b] = self.encode(self.mul(ea, eb))
                add_l[row + b] = self.encode(self.add(ea, eb))
                sub_l[row + b] = self.encode(self.sub(ea, eb))
        neg_l = [self.encode(self.neg(e)) for e in els]
        inv_l = [0] + [self.encode(self.inv(e)) for e in els[1:]]
        return (
            Q,
            array("i", mul_l),
            array("i", add_l),
            array("i", sub_l),
            array("i", neg_l),
            array("i", inv_l),
        )

    # -- conversions implemented by subclasses ------------------------------

    def encode(self, raw) -> int:
        raise NotImplementedError

    def decode(self, code: int):
        raise NotImplementedError

    def fel(self, x) -> "Fel":
        return Fel(self, self.coerce(x))

    def __repr__(self):
        return f"GF({self.order})"


class PrimeField(Field):
    is_prime = True

    def __init__(self, p: int):
        super().__init__()
        if not _is_prime(p):
            raise NotAPrimePower(f"{p} is not prime")
        self.order = p
        self.char = p
        self.degree = 1
        self.zero = 0
        self.one = 1 % p

    def __eq__(self, other):
        return self is other or (
            isinstance(other, PrimeField) and other.order == self.order
        )

    def __hash__(self):
        return hash(("prime", self.order))

    def coerce(self, x):
        if isinstance(x, Fel):
            if x.ctx != self:
                raise MixedFields(f"element of {x.ctx} used in {self}")
            return x.raw
        if isinstance(x, int):
            return x % self.order
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def from_int(self, n: int) -> int:
        return n % self.order

    def add(self, a, b):
        return (a + b) % self.order

    def sub(self, a, b):
        return (a - b) % self.order

    def neg(self, a):
        return (-a) % self.order

    def mul(self, a, b):
        return (a * b) % self.order

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return pow(a, self.order - 2, self.order)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_(self, a, e: int):
        return pow(a, e, self.order)

    def is_zero(self, a) -> bool:
        return a == 0

    def encode(self, raw) -> int:
        return raw

    def decode(self, code: int):
        return code

    def sort_key(self, raw):
        return (raw,)

    def enumerate_raw(self):
        return iter(range(self.order))

    def random_raw(self, rng):
        return rng.randbelow(self.order)

    def format_el(self, raw) -> str:
        return str(raw)

    def parse_el(self, s: str):
        return int(s.strip()) % self.order


class ExtField(Field):
    """Extension of ``base`` by a monic irreducible modulus.

    ``modulus`` is given as a sequence of base elements (low degree first,
    leading 1 included). Irreducibility is checked unless the caller vouches
    for it with _trusted=True (used for moduli coming straight out of the
    factorizer).
    """

    is_prime = False

    def __init__(self, base: Field, modulus, _trusted: bool = False):
        super().__init__()
        mod = tuple(base.coerce(c) for c in modulus)
        if len(mod) < 2:
            raise ValueError("modulus must have degree >= 1")
        if mod[-1] != base.one:
            raise ValueError("modulus must be monic")
        self.base = base
        self.degree = len(mod) - 1
        self.order = base.order ** self.degree
        self.char = base.char
        self.modulus = mod
        self._base_tabled = base.kernel_backed
        if self._base_tabled:
            self._btab = base.tables()
            self._mod_c = self._strip([base.encode(c) for c in mod])
        else:
            self._btab = None
            self._mod_c = None
        self.zero = tuple([self._zentry()] * self.degree)
        one_entries = [self._zentry()] * self.degree
        one_entries[0] = base.encode(base.one) if self._base_tabled else base.one
        self.one = tuple(one_entries)
        if not _trusted:
            from . import unipoly

            mpoly = unipoly.UPoly(base, list(mod))
            if not unipoly.is_irreducible(mpoly):
                raise ValueError(f"modulus {mpoly} is reducible over {base}")

    def _zentry(self):
        return 0 if self._base_tabled else self.base.zero

    @staticmethod
    def _strip(lst):
        while lst and lst[-1] == 0:
            lst.pop()
        return lst

    def __eq__(self, other):
        return self is other or (
            isinstance(other, ExtField)
            and other.order == self.order
            and other.modulus == self.modulus
            and other.base == self.base
        )

    def __hash__(self):
        return hash(("ext", self.order, self.modulus))

    # -- entry helpers: entries are base codes when the base is tabled ------

    def entry_to_base_raw(self, e):
        return self.base.decode(e) if self._base_tabled else e

    def entry_from_base_raw(self, r):
        return self.base.encode(r) if self._base_tabled else r

    def coerce(self, x):
        if isinstance(x, Fel):
            if x.ctx != self:
                raise MixedFields(f"element of {x.ctx} used in {self}")
            return x.raw
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, (tuple, list)):
            if len(x) != self.degree:
                raise ValueError(
                    f"need {self.degree} coefficients for {self}, got {len(x)}"
                )
            out = []
            for c in x:
                if self._base_tabled and isinstance(c, int):
                    # entries of the internal representation: base codes
                    if not 0 <= c < self.base.order:
                        raise ValueError(
                            f"entry {c} out of range for base GF({self.base.order})"
                        )
                    out.append(c)
                else:
                    out.append(self.entry_from_base_raw(self.base.coerce(c)))
            return tuple(out)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def from_int(self, n: int):
        entries = [self._zentry()] * self.degree
        entries[0] = self.entry_from_base_raw(self.base.from_int(n))
        return tuple(entries)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if self._base_tabled:
            Q, ADD = self._btab[0], self._btab[2]
            return tuple(ADD[x * Q + y] for x, y in zip(a, b))
        bf = self.base
        return tuple(bf.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        if self._base_tabled:
            Q, SUB = self._btab[0], self._btab[3]
            return tuple(SUB[x * Q + y] for x, y in zip(a, b))
        bf = self.base
        return tuple(bf.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if self._base_tabled:
            NEG = self._btab[4]
            return tuple(NEG[x] for x in a)
        bf = self.base
        return tuple(bf.neg(x) for x in a)

    def _pad(self, lst):
        if len(lst) < self.degree:
            lst = lst + [self._zentry()] * (self.degree - len(lst))
        return tuple(lst)

    def mul(self, a, b):
        if self._base_tabled:
            return self._pad(
                kern.mulmod(self._strip(list(a)), self._strip(list(b)),
                            self._mod_c, self._btab)
            )
        return self._pad(self._gmulmod(list(a), list(b)))

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero(f"inverse of 0 in {self}")
        if self._base_tabled:
            return self._pad(
                kern.invmod(self._strip(list(a)), self._mod_c, self._btab)
            )
        return self._pad(self._ginvmod(list(a)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_(self, a, e: int):
        if self._base_tabled:
            return self._pad(
                kern.powmod(self._strip(list(a)), e, self._mod_c, self._btab)
            )
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return out

    def is_zero(self, a) -> bool:
        return a == self.zero

    # Generic (untabled base) polynomial helpers on normalized base-raw lists.

    def _gnorm(self, lst):
        bf = self.base
        while lst and bf.is_zero(lst[-1]):
            lst.pop()
        return lst

    def _gmulmod(self, a, b):
        bf = self.base
        a = self._gnorm(a)
        b = self._gnorm(b)
        if not a or not b:
            return []
        out = [bf.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if bf.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                if not bf.is_zero(bj):
                    out[i + j] = bf.add(out[i + j], bf.mul(ai, bj))
        return self._grem(out)

    def _grem(self, r):
        # modulus is monic, so no leading-coefficient inversion is needed
        bf = self.base
        d = self.degree
        mod = self.modulus
        for i in range(len(r) - 1, d - 1, -1):
            c = r[i]
            if bf.is_zero(c):
                continue
            for j in range(d):
                r[i - d + j] = bf.sub(r[i - d + j], bf.mul(c, mod[j]))
            r[i] = bf.zero
        del r[d:]
        return self._gnorm(r)

    def _ginvmod(self, a):
        bf = self.base

        def gdivmod(x, y):
            x = list(x)
            dy = len(y) - 1
            inv_lead = bf.inv(y[dy])
            q = [bf.zero] * max(len(x) - dy, 0)
            for i in range(len(x) - dy - 1, -1, -1):
                c = x[i + dy]
                if bf.is_zero(c):
                    continue
                f = bf.mul(c, inv_lead)
                q[i] = f
                for j in range(dy):
                    x[i + j] = bf.sub(x[i + j], bf.mul(f, y[j]))
                x[i + dy] = bf.zero
            del x[dy:]
            return self._gnorm(q), self._gnorm(x)

        r0, r1 = list(self.modulus), self._gnorm(list(a))
        t0, t1 = [], [bf.one]
        while r1:
            q, r = gdivmod(r0, r1)
            r0, r1 = r1, r
            # t0, t1 = t1, t0 - q * t1
            prod = [bf.zero] * (len(q) + len(t1) - 1) if q and t1 else []
            for i, qi in enumerate(q):
                if bf.is_zero(qi):
                    continue
                for j, tj in enumerate(t1):
                    prod[i + j] = bf.add(prod[i + j], bf.mul(qi, tj))
            nt = list(t0) + [bf.zero] * max(0, len(prod) - len(t0))
            for i, pi in enumerate(prod):
                nt[i] = bf.sub(nt[i], pi)
            t0, t1 = t1, self._gnorm(nt)
        if len(r0) != 1:
            raise DivisionByZero(f"element not invertible in {self}")
        c = bf.inv(r0[0])
        return self._gnorm([bf.mul(c, x) for x in t0])

    # -- codes, ordering, enumeration ----------------------------------------

    def encode(self, raw) -> int:
        qb = self.base.order
        code = 0
        if self._base_tabled:
            for e in reversed(raw):
                code = code * qb + e
        else:
            for e in reversed(raw):
                code = code * qb + self.base.encode(e)
        return code

    def decode(self, code: int):
        qb = self.base.order
        entries = []
        for _ in range(self.degree):
            code, r = divmod(code, qb)
            entries.append(r if self._base_tabled else self.base.decode(r))
        return tuple(entries)

    def sort_key(self, raw):
        bf = self.base
        key = ()
        for e in raw:
            key += bf.sort_key(self.entry_to_base_raw(e))
        return key

    def enumerate_raw(self):
        from itertools import product

        entries = [
            self.entry_from_base_raw(r) for r in self.base.enumerate_raw()
        ]
        for combo in product(entries, repeat=self.degree):
            yield combo

    def random_raw(self, rng):
        if self._base_tabled:
            qb = self.base.order
            return tuple(rng.randbelow(qb) for _ in range(self.degree))
        bf = self.base
        return tuple(bf.random_raw(rng) for _ in range(self.degree))

    def format_el(self, raw) -> str:
        if not self.base.is_prime:
            raise NotImplementedError(
                "textual syntax only covers prime-based extensions"
            )
        return ",".join(str(e) for e in raw)

    def parse_el(self, s: str):
        if not self.base.is_prime:
            raise NotImplementedError(
                "textual syntax only covers prime-based extensions"
            )
        parts = [int(t.strip()) % self.base.order for t in s.split(",")]
        if len(parts) == 1:
            return self.from_int(parts[0])
        if len(parts) != self.degree:
            raise ValueError(
                f"need {self.degree} coefficients for {self}, got {len(parts)}"
            )
        return tuple(parts)

    def __repr__(self):
        return f"GF({self.order})"


class Fel:
    """An element of a specific field: a context plus a raw value.

    Supports the usual operators; mixing elements of different contexts
    raises MixedFields. Immutable and hashable.
    """

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx: Field, raw):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, *a):
        raise AttributeError("Fel is immutable")

    def _raw_of(self, other):
        if isinstance(other, Fel):
            if other.ctx != self.ctx:
                raise MixedFields(f"{other.ctx} element used with {self.ctx}")
            return other.raw
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        r = self._raw_of(other)
        if r is NotImplemented:
            return NotImplemented
        return Fel(self.ctx, self.ctx.add(self.raw, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._raw_of(other)
        if r is NotImplemented:
            return NotImplemented
        return Fel(self.ctx, self.ctx.sub(self.raw, r))

    def __rsub__(self, other):
        r = self._raw_of(other)
        if r is NotImplemented:
            return NotImplemented
        return Fel(self.ctx, self.ctx.sub(r, self.raw))

    def __mul__(self, other):
        r = self._raw_of(other)
        if r is NotImplemented:
            return NotImplemented
        return Fel(self.ctx, self.ctx.mul(self.raw, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._raw_of(other)
        if r is NotImplemented:
            return NotImplemented
        return Fel(self.ctx, self.ctx.div(self.raw, r))

    def __rtruediv__(self, other):
        r = self._raw_of(other)
        if r is NotImplemented:
            return NotImplemented
        return Fel(self.ctx, self.ctx.div(r, self.raw))

    def __neg__(self):
        return Fel(self.ctx, self.ctx.neg(self.raw))

    def __pow__(self, e: int):
        if e < 0:
            return Fel(self.ctx, self.ctx.pow_(self.ctx.inv(self.raw), -e))
        return Fel(self.ctx, self.ctx.pow_(self.raw, e))

    def inv(self):
        return Fel(self.ctx, self.ctx.inv(self.raw))

    def __eq__(self, other):
        if isinstance(other, Fel):
            return self.ctx == other.ctx and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.raw))

    def is_zero(self) -> bool:
        return self.ctx.is_zero(self.raw)

    @property
    def coeffs(self):
        """Coefficient sequence over the base field (ints for prime fields)."""
        ctx = self.ctx
        if ctx.is_prime:
            return (self.raw,)
        return tuple(
            Fel(ctx.base, ctx.entry_to_base_raw(e)) for e in self.raw
        )

    def __repr__(self):
        ctx = self.ctx
        if ctx.is_prime or ctx.base.is_prime:
            return f"Fel(GF({ctx.order}): {ctx.format_el(self.raw)})"
        return f"Fel(GF({ctx.order}): {self.raw})"


# ---------------------------------------------------------------------------
# Field construction


@lru_cache(maxsize=None)
def _prime_field(p: int) -> PrimeField:
    return PrimeField(p)


@lru_cache(maxsize=None)
def canonical_field(q: int) -> Field:
    """The deterministic model of GF(q).

    For q = p the prime field; otherwise F_p extended by the
    lexicographically smallest monic irreducible of degree k over F_p
    (coefficient sequences compared low degree first). Cached, so repeated
    calls give the identical object.
    """
    p, k = split_prime_power(q)
    base = _prime_field(p)
    if k == 1:
        return base
    from itertools import product

    from . import unipoly

    for tail in product(range(p), repeat=k):
        coeffs = list(tail) + [1]
        if coeffs[0] == 0:
            continue  # divisible by X
        if unipoly.is_irreducible(unipoly.UPoly(base, coeffs)):
            return ExtField(base, coeffs, _trusted=True)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def extension(base: Field, modulus, _trusted: bool = False) -> ExtField:
    """Relative extension base[t]/(modulus); modulus checked irreducible."""
    if hasattr(modulus, "coeffs") and hasattr(modulus, "field"):
        if modulus.field != base:
            raise MixedFields("modulus is not over the requested base field")
        modulus = modulus.coeffs
    return ExtField(base, modulus, _trusted=_trusted)


# ---------------------------------------------------------------------------
# Tower navigation helpers (raw level)


def lift_raw(sub: Field, raw, target: Field):
    """Embed an element of a tower level ``sub`` into ``target`` as a constant."""
    if target == sub:
        return raw
    if target.is_prime:
        raise IncompatibleFields(f"{sub} is not a level of {target}")
    inner = lift_raw(sub, raw, target.base)
    entries = [target._zentry()] * target.degree
    entries[0] = target.entry_from_base_raw(inner)
    return tuple(entries)


def coords_raw(ctx: Field, raw, level: Field):
    """Coordinates of an element over the tower level ``level`` (a list of
    level-raws, length ctx.degree_over(level), basis ordered low level
    powers first)."""
    if ctx == level:
        return [raw]
    if ctx.is_prime:
        raise IncompatibleFields(f"{level} is not a level of {ctx}")
    out = []
    for e in raw:
        out.extend(coords_raw(ctx.base, ctx.entry_to_base_raw(e), level))
    return out


def from_coords_raw(ctx: Field, vec, level: Field):
    """Inverse of coords_raw."""
    if ctx == level:
        assert len(vec) == 1
        return vec[0]
    step = ctx.base.degree_over(level)
    entries = []
    for i in range(ctx.degree):
        entries.append(
            ctx.entry_from_base_raw(
                from_coords_raw(ctx.base, vec[i * step : (i + 1) * step], level)
            )
        )
    return tuple(entries)


# ---------------------------------------------------------------------------
# Operations of the public API


def frobenius(a: Fel, base_order: int, i: int = 1) -> Fel:
    """a raised to the base_order**i power (the i-fold Frobenius over the
    subfield of that order)."""
    p, _ = split_prime_power(base_order)
    if p != a.ctx.char:
        raise BadSubfieldDegree(
            f"{base_order} is not a power of the characteristic {a.ctx.char}"
        )
    raw = a.raw
    for _ in range(i):
        raw = a.ctx.pow_(raw, base_order)
    return Fel(a.ctx, raw)


def in_subfield(a: Fel, m: int, q: int) -> bool:
    """True iff a lies in F_{q^m} (tested as a fixed point of the m-fold
    q-power Frobenius). Requires m to divide [ctx : F_q]."""
    ctx = a.ctx
    level = ctx.level_of_order(q)
    if level is None:
        raise BadSubfieldDegree(f"{ctx} has no tower level of order {q}")
    deg = ctx.degree_over(level)
    if m < 1 or deg % m != 0:
        raise BadSubfieldDegree(f"{m} does not divide [{ctx}:GF({q})] = {deg}")
    raw = a.raw
    for _ in range(m):
        raw = ctx.pow_(raw, q)
    return raw == a.raw


def enumerate_field(ctx: Field):
    """All elements, lexicographically by coefficient sequence, 0 first."""
    return [Fel(ctx, r) for r in ctx.enumerate_raw()]


def solve_linear(level: Field, columns, target):
    """Solve sum_i x_i * columns[i] = target over ``level``.

    columns and target are equal-length lists of level raws. Returns a list
    of level raws or None when the system is inconsistent. Free variables
    are set to zero.
    """
    ncols = len(columns)
    nrows = len(target)
    f = level
    m = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if not f.is_zero(m[i][c]):
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = f.inv(m[r][c])
        m[r] = [f.mul(inv, v) for v in m[r]]
        for i in range(nrows):
            if i != r and not f.is_zero(m[i][c]):
                fac = m[i][c]
                m[i] = [f.sub(v, f.mul(fac, w)) for v, w in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if not f.is_zero(m[i][ncols]):
            return None
    sol = [f.zero] * ncols
    for i, c in enumerate(pivots):
        sol[c] = m[i][ncols]
    return sol


def minimal_polynomial(a: Fel, q: int):
    """Monic minimal polynomial of a over the tower level F_q, found as the
    first linear dependency among 1, a, a^2, ... in tower coordinates."""
    from . import unipoly

    ctx = a.ctx
    level = ctx.level_of_order(q)
    if level is None:
        raise BadSubfieldDegree(f"{ctx} has no tower level of order {q}")
    f = level
    nmax = ctx.degree_over(level)
    rows = []  # (pivot index, vector, combo) with pivot normalized to 1
    power = ctx.from_int(1)
    k = 0
    while True:
        vec = coords_raw(ctx, power, level)
        combo = [f.zero] * k + [f.one]
        for piv, pvec, pcombo in rows:
            c = vec[piv]
            if not f.is_zero(c):
                vec = [f.sub(v, f.mul(c, w)) for v, w in zip(vec, pvec)]
                pc = list(combo) + [f.zero] * (len(pcombo) - len(combo))
                for i, w in enumerate(pcombo):
                    pc[i] = f.sub(pc[i], f.mul(c, w))
                combo = pc
        if all(f.is_zero(v) for v in vec):
            return unipoly.UPoly(level, combo)
        piv = next(i for i, v in enumerate(vec) if not f.is_zero(v))
        inv = f.inv(vec[piv])
        vec = [f.mul(inv, v) for v in vec]
        combo = [f.mul(inv, v) for v in combo]
        rows.append((piv, vec, combo))
        k += 1
        if k > nmax:  # pragma: no cover
            raise AssertionError("no dependency found below the tower degree")
        power = ctx.mul(power, a.raw)


def embed_root(m, target: Field) -> Fel:
    """One deterministic root of the irreducible m in ``target``: the root
    with the lexicographically smallest coefficient sequence."""
    from . import unipoly
    from .errors import NoRootInTarget

    base = m.field
    if not target.contains_level(base):
        raise NoRootInTarget(f"{target} does not extend {base}")
    d = m.degree
    if d < 1 or target.degree_over(base) % d != 0:
        raise NoRootInTarget(
            f"degree {d} does not divide [{target}:{base}] = {target.degree_over(base)}"
        )
    roots = unipoly.roots_in_field(m, target)
    if not roots:
        raise NoRootInTarget(f"{m} has no root in {target}")  # pragma: no cover
    return roots[0]
