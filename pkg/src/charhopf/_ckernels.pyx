# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the functions in ``_pykernels``."""


def is_lyndon(tuple w):
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t i = 0, j
    cdef long a, b
    if n == 0:
        return False
    for j in range(1, n):
        a = w[i]
        b = w[j]
        if a == b:
            i += 1
        elif a < b:
            i = 0
        else:
            return False
    return i == 0


cdef int _cmp_suffix(long* buf, Py_ssize_t n, Py_ssize_t p, Py_ssize_t q):
    # -1 if buf[p:] < buf[q:], lexicographic with proper prefix smaller
    while p < n and q < n:
        if buf[p] < buf[q]:
            return -1
        if buf[p] > buf[q]:
            return 1
        p += 1
        q += 1
    if p == n and q == n:
        return 0
    return -1 if p == n else 1


def min_suffix_start(tuple w):
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t k, best
    cdef long buf[256]
    if n > 256:
        best = n - 1
        for k in range(n - 2, 0, -1):
            if w[k:] < w[best:]:
                best = k
        return best
    for k in range(n):
        buf[k] = w[k]
    best = n - 1
    for k in range(n - 2, 0, -1):
        if _cmp_suffix(buf, n, k, best) < 0:
            best = k
    return best


def lyndon_words(long theta, long max_len):
    cdef list out = []
    cdef list w
    cdef Py_ssize_t m
    if theta < 1 or max_len < 1:
        return out
    w = [1]
    while w:
        out.append(tuple(w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[len(w) - 1] == theta:
            w.pop()
        if w:
            w[len(w) - 1] += 1
    return out


def poly_mul(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef list out
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                y = b[j]
                if y:
                    out[i + j] += x * y
    return out


def cyc_mul(a, b, phi_low):
    cdef Py_ssize_t d = len(phi_low), i, j, k, base
    cdef list prod = [0] * (2 * d - 1)
    for i in range(d):
        x = a[i]
        if x:
            for j in range(d):
                y = b[j]
                if y:
                    prod[i + j] += x * y
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k]
        if c:
            base = k - d
            for j in range(d):
                p = phi_low[j]
                if p:
                    prod[base + j] -= c * p
    return prod[:d]
