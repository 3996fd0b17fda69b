"""Pure-Python versions of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same results; :mod:`charhopf.kernels` picks one at import time.
Words are tuples of positive ints, polynomials are coefficient lists, lowest
degree first.
"""


def is_lyndon(w):
    n = len(w)
    if n == 0:
        return False
    i = 0
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


def min_suffix_start(w):
    """Start index of the lexicographically minimal proper ending of ``w``."""
    n = len(w)
    best = n - 1
    for k in range(n - 2, 0, -1):
        if w[k:] < w[best:]:
            best = k
    return best


def lyndon_words(theta, max_len):
    out = []
    if theta < 1 or max_len < 1:
        return out
    w = [1]
    while w:
        out.append(tuple(w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == theta:
            w.pop()
        if w:
            w[-1] += 1
    return out


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def cyc_mul(a, b, phi_low):
    """Product of two residues modulo a monic integer polynomial.

    ``phi_low`` holds the modulus without its leading 1; ``a`` and ``b``
    have exactly ``len(phi_low)`` entries.
    """
    d = len(phi_low)
    prod = [0] * (2 * d - 1)
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
