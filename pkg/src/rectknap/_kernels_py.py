"""Pure-Python geometry kernels.

Same contract as the compiled twin in _kernels.pyx: rectangles are given as
parallel sequences of left/bottom/width/height. All rectangles are open, so
touching edges do not count as overlap.
"""

IMPL = "python"


def first_overlap(xs, ys, ws, hs):
    """Index pair (i, j) of the first overlapping rectangles, else (-1, -1).

    Scans pairs in lexicographic (i, j) order, i < j.
    """
    n = len(xs)
    for i in range(n):
        xi, yi, wi, hi = xs[i], ys[i], ws[i], hs[i]
        xi2 = xi + wi
        yi2 = yi + hi
        for j in range(i + 1, n):
            if xi < xs[j] + ws[j] and xs[j] < xi2 and yi < ys[j] + hs[j] and ys[j] < yi2:
                return i, j
    return -1, -1


def first_out_of_bounds(xs, ys, ws, hs, side):
    """Index of the first rectangle not inside [0, side]^2, else -1."""
    for i in range(len(xs)):
        if xs[i] < 0 or ys[i] < 0 or xs[i] + ws[i] > side or ys[i] + hs[i] > side:
            return i
    return -1


def fits_at(x, y, w, h, xs, ys, ws, hs, n):
    """True iff an open rectangle at (x, y) avoids the first n listed ones."""
    x2 = x + w
    y2 = y + h
    for i in range(n):
        if x < xs[i] + ws[i] and xs[i] < x2 and y < ys[i] + hs[i] and ys[i] < y2:
            return False
    return True
