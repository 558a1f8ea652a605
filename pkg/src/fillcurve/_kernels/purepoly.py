"""Pure-Python dense polynomial kernels over table-described finite fields.

This module and the compiled ``fastpoly`` expose the same functions; the
package picks one at import time (see ``fillcurve._kernels``). Everything
here is the reference implementation.

A *field table* describes a finite field of order Q <= 512 as flat lookup
tables: ``tab = (Q, MUL, ADD, SUB, NEG, INV)`` where MUL/ADD/SUB have
length Q*Q (entry for (a, b) at index a*Q + b), NEG/INV length Q, and all
entries are element codes in [0, Q). INV[0] is a 0 sentinel and is never
consulted for a valid input.

Polynomials are Python lists of codes, lowest degree first, with no
trailing zeros; the zero polynomial is the empty list.
"""

IMPL = "pure"


def norm(a):
    """Strip trailing zeros in place and return the list."""
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b, tab):
    Q, MUL, ADD = tab[0], tab[1], tab[2]
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ADD[out[i] * Q + c]
    return norm(out)


def sub(a, b, tab):
    Q, SUB = tab[0], tab[3]
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = SUB[out[i] * Q + c]
    return norm(out)


def neg(a, tab):
    NEG = tab[4]
    return [NEG[c] for c in a]


def scal(a, s, tab):
    """Multiply polynomial a by the scalar code s."""
    Q, MUL = tab[0], tab[1]
    if s == 0:
        return []
    return norm([MUL[c * Q + s] for c in a])


def mul(a, b, tab):
    if not a or not b:
        return []
    Q, MUL, ADD = tab[0], tab[1], tab[2]
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        row = ai * Q
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = ADD[out[i + j] * Q + MUL[row + bj]]
    return norm(out)


def divmod_(a, b, tab):
    """Exact (quotient, remainder) with deg r < deg b. b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    Q, MUL, SUB, INV = tab[0], tab[1], tab[3], tab[5]
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    r = list(a)
    inv_lead = INV[b[db]]
    q = [0] * (len(r) - db)
    for i in range(len(r) - db - 1, -1, -1):
        c = r[i + db]
        if c:
            f = MUL[c * Q + inv_lead]
            q[i] = f
            frow = f * Q
            for j in range(db):
                bj = b[j]
                if bj:
                    r[i + j] = SUB[r[i + j] * Q + MUL[frow + bj]]
            r[i + db] = 0
    del r[db:]
    return norm(q), norm(r)


def rem(a, b, tab):
    return divmod_(a, b, tab)[1]


def monic(a, tab):
    if not a or a[-1] == 1:
        return list(a)
    return scal(a, tab[5][a[-1]], tab)


def gcd(a, b, tab):
    """Monic greatest common divisor (inputs not both zero)."""
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(a, b, tab)
    return monic(a, tab)


def mulmod(a, b, m, tab):
    return rem(mul(a, b, tab), m, tab)


def powmod(a, e, m, tab):
    """a**e mod m for any nonnegative Python int e."""
    if e < 0:
        raise ValueError("negative exponent")
    if len(m) <= 1:
        return []
    out = [1]
    base = rem(a, m, tab)
    while e:
        if e & 1:
            out = mulmod(out, base, m, tab)
        e >>= 1
        if e:
            base = mulmod(base, base, m, tab)
    return out


def invmod(a, m, tab):
    """Inverse of a modulo m (requires gcd(a, m) = 1)."""
    Q, MUL, INV = tab[0], tab[1], tab[5]
    r0, r1 = list(m), rem(a, m, tab)
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, tab)
        r0, r1 = r1, r
        t0, t1 = t1, sub(t0, mul(q, t1, tab), tab)
    if len(r0) != 1:
        raise ValueError("element not invertible modulo the given polynomial")
    c = INV[r0[0]]
    return norm([MUL[x * Q + c] for x in t0])


def eval_at(f, x, tab):
    """Evaluate at the scalar code x."""
    Q, MUL, ADD = tab[0], tab[1], tab[2]
    acc = 0
    for c in reversed(f):
        acc = ADD[MUL[acc * Q + x] * Q + c]
    return acc


def scan_roots2(f1, f2, mu, tab):
    """Roots of two scalar-coefficient polynomials in F[w]/(mu).

    Enumerates every element of the extension (as a tuple of len(mu)-1
    codes, low digit first) and evaluates f1 and f2 by Horner's rule.
    Returns (roots_of_f1, roots_of_f2) in enumeration order.
    """
    l = len(mu) - 1
    out1, out2 = [], []
    digits = [0] * l
    total = tab[0] ** l
    for _ in range(total):
        x = norm(list(digits))
        for f, out in ((f1, out1), (f2, out2)):
            acc = []
            for c in reversed(f):
                acc = rem(mul(acc, x, tab), mu, tab)
                if c:
                    if acc:
                        acc[0] = tab[2][acc[0] * tab[0] + c]
                        norm(acc)
                    else:
                        acc = [c]
            if not acc:
                out.append(tuple(digits))
        for pos in range(l - 1, -1, -1):
            digits[pos] += 1
            if digits[pos] < tab[0]:
                break
            digits[pos] = 0
    return out1, out2
