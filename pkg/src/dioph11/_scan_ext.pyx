# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Machine-word scan kernel. Callers must ensure (x_hi - 1)^2 + c < 2^64."""
from libc.math cimport pow as cpow, llround

ctypedef unsigned long long u64


cdef inline int pow_cmp(u64 r, int n, u64 v) nogil:
    """Sign of r**n - v, computed without overflow."""
    cdef u64 acc = 1
    cdef int i
    for i in range(n):
        if r != 0 and acc > v // r:
            return 1
        acc *= r
    if acc > v:
        return 1
    if acc < v:
        return -1
    return 0


cdef inline u64 exact_root(u64 v, int n) nogil:
    """r with r**n == v, or 0."""
    cdef long long g = llround(cpow(<double>v, 1.0 / n))
    cdef long long r
    for r in range(g - 1, g + 2):
        if r >= 1 and pow_cmp(<u64>r, n, v) == 0:
            return <u64>r
    return 0


def scan_offsets(x_lo, x_hi, c, int n_min, int n_max):
    cdef u64 x = x_lo
    cdef u64 hi = x_hi
    cdef u64 v = x * x + <u64>c
    cdef u64 y
    cdef int n
    out = []
    while x < hi:
        for n in range(n_min, n_max + 1):
            y = exact_root(v, n)
            if y:
                out.append((x, y, n))
        v += 2 * x + 1
        x += 1
    return out
