# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels (int64 with overflow detection).

Mirrors ``algebroid._pykernels``. Any intermediate that leaves the int64
range raises ``OverflowError``; callers then redo the whole computation with
the pure-Python kernel.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    """
    static inline int _mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int _sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int _add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int _mul_ovf(long long a, long long b, long long *r) nogil
    int _sub_ovf(long long a, long long b, long long *r) nogil
    int _add_ovf(long long a, long long b, long long *r) nogil


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _combine(long long *v, const long long *r, long long a, long long b, int n) nogil:
    """v <- a*v - b*r; returns 1 on overflow."""
    cdef int j
    cdef long long x, y
    for j in range(n):
        if _mul_ovf(a, v[j], &x):
            return 1
        if _mul_ovf(b, r[j], &y):
            return 1
        if _sub_ovf(x, y, &v[j]):
            return 1
    return 0


cdef void _make_primitive(long long *v, int piv, int n) nogil:
    cdef long long g = 0
    cdef int j
    for j in range(n):
        if v[j]:
            g = _gcd(g, v[j])
            if g == 1:
                break
    if v[piv] < 0:
        g = -g
    if g != 0 and g != 1:
        for j in range(n):
            v[j] = v[j] // g


cdef long long _to_ll(object x) except? -1:
    if x > 9223372036854775807 or x < -9223372036854775807:
        raise OverflowError("entry exceeds int64")
    return <long long>x


cdef class Echelon:
    """Incremental fraction-free Gauss-Jordan basis of a row space."""

    cdef public int ncols
    cdef int _rank
    cdef long long *_data
    cdef int *_piv
    cdef long long *_tmp

    def __cinit__(self, int ncols):
        self.ncols = ncols
        self._rank = 0
        self._data = <long long *>malloc(max(1, ncols * ncols) * sizeof(long long))
        self._piv = <int *>malloc(max(1, ncols) * sizeof(int))
        self._tmp = <long long *>malloc(max(1, ncols) * sizeof(long long))
        if self._data == NULL or self._piv == NULL or self._tmp == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self._data)
        free(self._piv)
        free(self._tmp)

    @property
    def rank(self):
        return self._rank

    cdef int _reduce_tmp(self) except -1:
        cdef int i, p, n = self.ncols
        cdef long long c, rp, g
        cdef long long *r
        for i in range(self._rank):
            p = self._piv[i]
            c = self._tmp[p]
            if c:
                r = self._data + i * n
                rp = r[p]
                g = _gcd(c, rp)
                if _combine(self._tmp, r, rp // g, c // g, n):
                    raise OverflowError("int64 overflow in reduction")
        return 0

    cdef int _load(self, row) except -1:
        cdef int j, n = self.ncols
        if len(row) != n:
            raise ValueError("row length %d != %d" % (len(row), n))
        for j in range(n):
            self._tmp[j] = _to_ll(row[j])
        return 0

    cdef int _insert_tmp(self) except -1:
        cdef int n = self.ncols
        cdef int piv = -1, j, i, pos
        cdef long long c, g
        cdef long long *r
        self._reduce_tmp()
        for j in range(n):
            if self._tmp[j]:
                piv = j
                break
        if piv < 0:
            return 0
        _make_primitive(self._tmp, piv, n)
        for i in range(self._rank):
            r = self._data + i * n
            c = r[piv]
            if c:
                g = _gcd(c, self._tmp[piv])
                if _combine(r, self._tmp, self._tmp[piv] // g, c // g, n):
                    raise OverflowError("int64 overflow in back-substitution")
                _make_primitive(r, self._piv[i], n)
        pos = 0
        while pos < self._rank and self._piv[pos] < piv:
            pos += 1
        i = self._rank
        while i > pos:
            memcpy(self._data + i * n, self._data + (i - 1) * n, n * sizeof(long long))
            self._piv[i] = self._piv[i - 1]
            i -= 1
        memcpy(self._data + pos * n, self._tmp, n * sizeof(long long))
        self._piv[pos] = piv
        self._rank += 1
        return 1

    def reduce(self, row):
        self._load(row)
        self._reduce_tmp()
        return [self._tmp[j] for j in range(self.ncols)]

    def insert(self, row):
        self._load(row)
        return bool(self._insert_tmp())

    def rows(self):
        cdef int i, j, n = self.ncols
        return [[self._data[i * n + j] for j in range(n)] for i in range(self._rank)]

    def pivots(self):
        return [self._piv[i] for i in range(self._rank)]


cdef int _matmul(const long long *x, const long long *y, long long *out, int n) nogil:
    cdef int i, j, k
    cdef long long c, t
    memset(out, 0, n * n * sizeof(long long))
    for i in range(n):
        for k in range(n):
            c = x[i * n + k]
            if c:
                for j in range(n):
                    if y[k * n + j]:
                        if _mul_ovf(c, y[k * n + j], &t):
                            return 1
                        if _add_ovf(out[i * n + j], t, &out[i * n + j]):
                            return 1
    return 0


cdef int _matvec(const long long *m, const long long *v, long long *out, int n) nogil:
    cdef int i, j
    cdef long long t
    memset(out, 0, n * sizeof(long long))
    for i in range(n):
        for j in range(n):
            if v[j] and m[i * n + j]:
                if _mul_ovf(m[i * n + j], v[j], &t):
                    return 1
                if _add_ovf(out[i], t, &out[i]):
                    return 1
    return 0


cdef long long *_pack(list mats, int width) except NULL:
    cdef int count = len(mats), a, j
    cdef long long *buf = <long long *>malloc(max(1, count * width) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for a in range(count):
            row = mats[a]
            if len(row) != width:
                raise ValueError("operator has wrong size")
            for j in range(width):
                buf[a * width + j] = _to_ll(row[j])
    except BaseException:
        free(buf)
        raise
    return buf


def spin_closure(seeds, ops, int n, int max_rounds):
    """Reduced basis of the smallest op-invariant space containing ``seeds``."""
    cdef Echelon ech = Echelon(n)
    cdef list oplist = [list(o) for o in ops]
    cdef int nops = len(oplist), a, rounds = 0, cnt, nxt_cnt, f
    cdef long long *opbuf = _pack(oplist, n * n)
    # frontier holds primitive residuals; each one raised the rank, so <= n
    cdef long long *front = <long long *>malloc(max(1, n * n) * sizeof(long long))
    cdef long long *nxt = <long long *>malloc(max(1, n * n) * sizeof(long long))
    cdef long long *w = <long long *>malloc(max(1, n) * sizeof(long long))
    cdef long long *swap
    try:
        if front == NULL or nxt == NULL or w == NULL:
            raise MemoryError()
        cnt = 0
        for s in seeds:
            ech._load(s)
            if ech._insert_tmp():
                memcpy(front + cnt * n, ech._tmp, n * sizeof(long long))
                cnt += 1
        while cnt:
            rounds += 1
            if rounds > max_rounds:
                raise RuntimeError("spin closure did not stabilise")
            nxt_cnt = 0
            for f in range(cnt):
                for a in range(nops):
                    if _matvec(opbuf + a * n * n, front + f * n, w, n):
                        raise OverflowError("int64 overflow in spin")
                    memcpy(ech._tmp, w, n * sizeof(long long))
                    if ech._insert_tmp():
                        memcpy(nxt + nxt_cnt * n, ech._tmp, n * sizeof(long long))
                        nxt_cnt += 1
            swap = front
            front = nxt
            nxt = swap
            cnt = nxt_cnt
        return ech.rows()
    finally:
        free(opbuf)
        free(front)
        free(nxt)
        free(w)


def envelope_closure(ops, int n, int max_rounds):
    """Reduced basis of the unital associative algebra generated by ``ops``."""
    cdef int nn = n * n
    cdef Echelon ech = Echelon(nn)
    cdef list oplist = [list(o) for o in ops]
    cdef int nops = len(oplist), a, i, rounds = 0, cnt, nxt_cnt, f
    cdef long long *opbuf = _pack(oplist, nn)
    cdef long long *front = <long long *>malloc(max(1, nn * nn) * sizeof(long long))
    cdef long long *nxt = <long long *>malloc(max(1, nn * nn) * sizeof(long long))
    cdef long long *y = <long long *>malloc(max(1, nn) * sizeof(long long))
    cdef long long *swap
    try:
        if front == NULL or nxt == NULL or y == NULL:
            raise MemoryError()
        memset(y, 0, nn * sizeof(long long))
        for i in range(n):
            y[i * n + i] = 1
        cnt = 0
        memcpy(ech._tmp, y, nn * sizeof(long long))
        if ech._insert_tmp():
            memcpy(front, y, nn * sizeof(long long))
            cnt = 1
        while cnt:
            rounds += 1
            if rounds > max_rounds:
                raise RuntimeError("envelope closure did not stabilise")
            nxt_cnt = 0
            for f in range(cnt):
                for a in range(nops):
                    if _matmul(opbuf + a * nn, front + f * nn, y, n):
                        raise OverflowError("int64 overflow in envelope")
                    memcpy(ech._tmp, y, nn * sizeof(long long))
                    if ech._insert_tmp():
                        memcpy(nxt + nxt_cnt * nn, ech._tmp, nn * sizeof(long long))
                        nxt_cnt += 1
            swap = front
            front = nxt
            nxt = swap
            cnt = nxt_cnt
        return ech.rows()
    finally:
        free(opbuf)
        free(front)
        free(nxt)
        free(y)
