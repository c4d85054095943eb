# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometry kernels; see _kernels_py for the reference semantics."""

IMPL = "cython"


def first_overlap(const long long[::1] xs, const long long[::1] ys,
                  const long long[::1] ws, const long long[::1] hs):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j
    cdef long long xi, yi, xi2, yi2
    for i in range(n):
        xi = xs[i]
        yi = ys[i]
        xi2 = xi + ws[i]
        yi2 = yi + hs[i]
        for j in range(i + 1, n):
            if xi < xs[j] + ws[j] and xs[j] < xi2 and yi < ys[j] + hs[j] and ys[j] < yi2:
                return i, j
    return -1, -1


def first_out_of_bounds(const long long[::1] xs, const long long[::1] ys,
                        const long long[::1] ws, const long long[::1] hs,
                        long long side):
    cdef Py_ssize_t i
    for i in range(xs.shape[0]):
        if xs[i] < 0 or ys[i] < 0 or xs[i] + ws[i] > side or ys[i] + hs[i] > side:
            return i
    return -1


def fits_at(long long x, long long y, long long w, long long h,
            const long long[::1] xs, const long long[::1] ys,
            const long long[::1] ws, const long long[::1] hs, Py_ssize_t n):
    cdef long long x2 = x + w
    cdef long long y2 = y + h
    cdef Py_ssize_t i
    for i in range(n):
        if x < xs[i] + ws[i] and xs[i] < x2 and y < ys[i] + hs[i] and ys[i] < y2:
            return False
    return True
