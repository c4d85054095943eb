"""Geometry kernel selection: compiled extension if present, else pure Python.

The compiled kernels work on int64 buffers; callers pass array('q', ...)
sequences. Values outside the int64-safe range (never produced by the desk
scale instances here, but cheap to guard) are routed to the Python twin.
"""

from array import array

from . import _kernels_py

try:
    from . import _kernels as _impl
except ImportError:
    _impl = _kernels_py

ACTIVE_IMPL = _impl.IMPL

_I64_SAFE = 1 << 62


def _coords(rects):
    """Split (x, y, w, h) tuples into four array('q') columns."""
    xs = array("q", (r[0] for r in rects))
    ys = array("q", (r[1] for r in rects))
    ws = array("q", (r[2] for r in rects))
    hs = array("q", (r[3] for r in rects))
    return xs, ys, ws, hs


def _int64_safe(rects, side=0):
    return abs(side) < _I64_SAFE and all(
        abs(v) < _I64_SAFE for r in rects for v in r
    )


def first_overlap(rects):
    """First overlapping pair (i, j) among open rectangles, else (-1, -1)."""
    if _impl is _kernels_py or not _int64_safe(rects):
        xs = [r[0] for r in rects]
        ys = [r[1] for r in rects]
        ws = [r[2] for r in rects]
        hs = [r[3] for r in rects]
        return _kernels_py.first_overlap(xs, ys, ws, hs)
    return _impl.first_overlap(*_coords(rects))


def first_out_of_bounds(rects, side):
    """Index of the first rectangle not inside [0, side]^2, else -1."""
    if _impl is _kernels_py or not _int64_safe(rects, side):
        xs = [r[0] for r in rects]
        ys = [r[1] for r in rects]
        ws = [r[2] for r in rects]
        hs = [r[3] for r in rects]
        return _kernels_py.first_out_of_bounds(xs, ys, ws, hs, side)
    return _impl.first_out_of_bounds(*_coords(rects), side)


def boxes_overlap(a, b):
    """Positive-area intersection test for two (x, y, w, h) open boxes."""
    return (
        a[0] < b[0] + b[2]
        and b[0] < a[0] + a[2]
        and a[1] < b[1] + b[3]
        and b[1] < a[1] + a[3]
    )


class PlacedSet:
    """Mutable rectangle set with a push/pop interface for search loops.

    Wraps the kernel `fits_at` so branch-and-bound code can test candidate
    positions against the currently placed rectangles cheaply.
    """

    def __init__(self):
        self.xs = array("q")
        self.ys = array("q")
        self.ws = array("q")
        self.hs = array("q")

    def __len__(self):
        return len(self.xs)

    def push(self, x, y, w, h):
        self.xs.append(x)
        self.ys.append(y)
        self.ws.append(w)
        self.hs.append(h)

    def pop(self):
        self.xs.pop()
        self.ys.pop()
        self.ws.pop()
        self.hs.pop()

    def fits(self, x, y, w, h):
        return _impl.fits_at(x, y, w, h, self.xs, self.ys, self.ws, self.hs, len(self.xs))
