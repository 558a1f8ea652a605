# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense polynomial kernels over table-described finite fields.

Same contract as fillcurve._kernels.purepoly (the reference): field tables
are ``(Q, MUL, ADD, SUB, NEG, INV)`` flat arrays, polynomials are lists of
codes with no trailing zeros.
"""

from libc.stdlib cimport malloc, free

IMPL = "fast"


cdef inline int _len_norm(int *a, int n) noexcept:
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return n


cdef int *_from_list(list a, int extra) except NULL:
    cdef int n = len(a)
    cdef int *buf = <int *> malloc((n + extra if n + extra > 1 else 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _to_list(int *a, int n):
    n = _len_norm(a, n)
    cdef list out = [0] * n
    cdef int i
    for i in range(n):
        out[i] = a[i]
    return out


cdef inline int _c_mul(int *a, int na, int *b, int nb, int *out,
                       const int[::1] MUL, const int[::1] ADD, int Q) noexcept:
    # out must have room for na + nb - 1 entries; returns normalized length
    cdef int i, j, ai, row
    if na == 0 or nb == 0:
        return 0
    for i in range(na + nb - 1):
        out[i] = 0
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        row = ai * Q
        for j in range(nb):
            if b[j]:
                out[i + j] = ADD[out[i + j] * Q + MUL[row + b[j]]]
    return _len_norm(out, na + nb - 1)


cdef inline int _c_rem(int *r, int nr, int *b, int nb,
                       const int[::1] MUL, const int[::1] SUB,
                       const int[::1] INV, int Q) noexcept:
    # reduce r in place modulo b (nb >= 1); returns normalized length < nb
    cdef int db = nb - 1
    cdef int inv_lead = INV[b[db]]
    cdef int i, j, c, f, frow
    for i in range(nr - db - 1, -1, -1):
        c = r[i + db]
        if c:
            f = MUL[c * Q + inv_lead]
            frow = f * Q
            for j in range(db):
                if b[j]:
                    r[i + j] = SUB[r[i + j] * Q + MUL[frow + b[j]]]
            r[i + db] = 0
    return _len_norm(r, db if nr > db else nr)


def add(list a, list b, tab):
    cdef int Q = tab[0]
    cdef const int[::1] ADD = tab[2]
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    cdef int i
    for i in range(len(b)):
        out[i] = ADD[<int> out[i] * Q + <int> b[i]]
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out


def sub(list a, list b, tab):
    cdef int Q = tab[0]
    cdef const int[::1] SUB = tab[3]
    cdef list out = list(a) + [0] * (len(b) - len(a))
    cdef int i
    for i in range(len(b)):
        out[i] = SUB[<int> out[i] * Q + <int> b[i]]
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out


def neg(list a, tab):
    cdef const int[::1] NEG = tab[4]
    return [NEG[<int> c] for c in a]


def scal(list a, int s, tab):
    cdef int Q = tab[0]
    cdef const int[::1] MUL = tab[1]
    if s == 0:
        return []
    cdef list out = [MUL[<int> c * Q + s] for c in a]
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out


def mul(list a, list b, tab):
    if not a or not b:
        return []
    cdef int Q = tab[0]
    cdef const int[::1] MUL = tab[1]
    cdef const int[::1] ADD = tab[2]
    cdef int na = len(a), nb = len(b)
    cdef int *ca = _from_list(a, 0)
    cdef int *cb = _from_list(b, 0)
    cdef int *out = <int *> malloc((na + nb - 1) * sizeof(int))
    if out == NULL:
        free(ca); free(cb)
        raise MemoryError()
    cdef int n = _c_mul(ca, na, cb, nb, out, MUL, ADD, Q)
    res = _to_list(out, n)
    free(ca); free(cb); free(out)
    return res


def divmod_(list a, list b, tab):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef int Q = tab[0]
    cdef const int[::1] MUL = tab[1]
    cdef const int[::1] SUB = tab[3]
    cdef const int[::1] INV = tab[5]
    cdef int na = len(a), nb = len(b), db = nb - 1
    if na <= db:
        return [], list(a)
    cdef int *r = _from_list(a, 0)
    cdef int *cb = _from_list(b, 0)
    cdef int *q = <int *> malloc((na - db) * sizeof(int))
    if q == NULL:
        free(r); free(cb)
        raise MemoryError()
    cdef int inv_lead = INV[cb[db]]
    cdef int i, j, c, f, frow
    for i in range(na - db):
        q[i] = 0
    for i in range(na - db - 1, -1, -1):
        c = r[i + db]
        if c:
            f = MUL[c * Q + inv_lead]
            q[i] = f
            frow = f * Q
            for j in range(db):
                if cb[j]:
                    r[i + j] = SUB[r[i + j] * Q + MUL[frow + cb[j]]]
            r[i + db] = 0
    qs = _to_list(q, na - db)
    rs = _to_list(r, db)
    free(r); free(cb); free(q)
    return qs, rs


def rem(list a, list b, tab):
    return divmod_(a, b, tab)[1]


def monic(list a, tab):
    if not a or a[len(a) - 1] == 1:
        return list(a)
    return scal(a, tab[5][<int> a[len(a) - 1]], tab)


def gcd(list a, list b, tab):
    while b:
        a, b = b, rem(a, b, tab)
    return monic(a, tab)


def mulmod(list a, list b, list m, tab):
    if not a or not b:
        return []
    cdef int Q = tab[0]
    cdef const int[::1] MUL = tab[1]
    cdef const int[::1] ADD = tab[2]
    cdef const int[::1] SUB = tab[3]
    cdef const int[::1] INV = tab[5]
    cdef int na = len(a), nb = len(b), nm = len(m)
    cdef int *ca = _from_list(a, 0)
    cdef int *cb = _from_list(b, 0)
    cdef int *cm = _from_list(m, 0)
    cdef int *out = <int *> malloc((na + nb - 1) * sizeof(int))
    if out == NULL:
        free(ca); free(cb); free(cm)
        raise MemoryError()
    cdef int n = _c_mul(ca, na, cb, nb, out, MUL, ADD, Q)
    n = _c_rem(out, n, cm, nm, MUL, SUB, INV, Q)
    res = _to_list(out, n)
    free(ca); free(cb); free(cm); free(out)
    return res


def powmod(list a, e, list m, tab):
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


def invmod(list a, list m, tab):
    cdef int Q = tab[0]
    cdef const int[::1] MUL = tab[1]
    cdef const int[::1] INV = tab[5]
    r0, r1 = list(m), rem(a, m, tab)
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, tab)
        r0, r1 = r1, r
        t0, t1 = t1, sub(t0, mul(q, t1, tab), tab)
    if len(r0) != 1:
        raise ValueError("element not invertible modulo the given polynomial")
    cdef int c = INV[<int> r0[0]]
    out = [MUL[<int> x * Q + c] for x in t0]
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out


def eval_at(list f, int x, tab):
    cdef int Q = tab[0]
    cdef const int[::1] MUL = tab[1]
    cdef const int[::1] ADD = tab[2]
    cdef int acc = 0
    cdef int i
    for i in range(len(f) - 1, -1, -1):
        acc = ADD[MUL[acc * Q + x] * Q + <int> f[i]]
    return acc


def scan_roots2(list f1, list f2, list mu, tab):
    """Roots of two scalar-coefficient polynomials in F[w]/(mu).

    Same semantics as the pure version: returns two lists of digit tuples.
    """
    cdef int Q = tab[0]
    cdef const int[::1] MUL = tab[1]
    cdef const int[::1] ADD = tab[2]
    cdef const int[::1] SUB = tab[3]
    cdef const int[::1] INV = tab[5]
    cdef int l = len(mu) - 1
    cdef int n1 = len(f1), n2 = len(f2)
    cdef int *cf1 = _from_list(f1, 0)
    cdef int *cf2 = _from_list(f2, 0)
    cdef int *cmu = _from_list(mu, 0)
    cdef int *x = <int *> malloc(l * sizeof(int))
    cdef int *acc = <int *> malloc((2 * l) * sizeof(int))
    cdef int *tmp = <int *> malloc((2 * l) * sizeof(int))
    if x == NULL or acc == NULL or tmp == NULL:
        free(cf1); free(cf2); free(cmu)
        if x != NULL: free(x)
        if acc != NULL: free(acc)
        if tmp != NULL: free(tmp)
        raise MemoryError()
    cdef list out1 = [], out2 = []
    cdef long total = 1, step
    cdef int i, pos, nx, na, c, which, nf
    cdef int *cf
    for i in range(l):
        x[i] = 0
        total *= Q
    for step in range(total):
        nx = _len_norm(x, l)
        for which in range(2):
            cf = cf1 if which == 0 else cf2
            nf = n1 if which == 0 else n2
            na = 0
            for i in range(nf - 1, -1, -1):
                na = _c_mul(acc, na, x, nx, tmp, MUL, ADD, Q)
                na = _c_rem(tmp, na, cmu, l + 1, MUL, SUB, INV, Q)
                for c in range(na):
                    acc[c] = tmp[c]
                c = cf[i]
                if c:
                    if na == 0:
                        acc[0] = c
                        na = 1
                    else:
                        acc[0] = ADD[acc[0] * Q + c]
                        na = _len_norm(acc, na)
            if na == 0:
                root = tuple([x[i] for i in range(l)])
                if which == 0:
                    out1.append(root)
                else:
                    out2.append(root)
        for pos in range(l - 1, -1, -1):
            x[pos] += 1
            if x[pos] < Q:
                break
            x[pos] = 0
    free(cf1); free(cf2); free(cmu); free(x); free(acc); free(tmp)
    return out1, out2
