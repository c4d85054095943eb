"""Constructive packers: container stacking, NFDH shelves, Steinberg.

All packers are deterministic, integer-exact, and leave orientation decisions
to the caller: items arrive in the orientation they will be placed in.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .model import Container, ItemSpec, Placement


@dataclass
class PackResult:
    placements: list[Placement] = field(default_factory=list)
    leftovers: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "placements": [
                {"id": pl.item_id, "x": pl.x, "y": pl.y, "rotated": pl.rotated}
                for pl in self.placements
            ],
            "leftovers": list(self.leftovers),
        }


class SteinbergPreconditionError(Exception):
    """Raised when the area/size precondition fails; message carries both sides."""


def stack_horizontal(region: Container, items: list[tuple[ItemSpec, bool]]) -> PackResult:
    """Stack items bottom-up, left-aligned, in order; stop at the first misfit."""
    result = PackResult()
    y = region.y
    stopped = False
    for item, rotated in items:
        w, h = (item.h, item.w) if rotated else (item.w, item.h)
        if stopped or w > region.w or y + h > region.y + region.h:
            result.leftovers.append(item.id)
            stopped = True
            continue
        result.placements.append(Placement(item.id, region.x, y, rotated))
        y += h
    return result


def stack_vertical(region: Container, items: list[tuple[ItemSpec, bool]]) -> PackResult:
    """Mirror of stack_horizontal: left-to-right, bottom-aligned."""
    result = PackResult()
    x = region.x
    stopped = False
    for item, rotated in items:
        w, h = (item.h, item.w) if rotated else (item.w, item.h)
        if stopped or h > region.h or x + w > region.x + region.w:
            result.leftovers.append(item.id)
            stopped = True
            continue
        result.placements.append(Placement(item.id, x, region.y, rotated))
        x += w
    return result


def nfdh(region: Container, items: list[ItemSpec]) -> PackResult:
    """Next-Fit-Decreasing-Height shelves inside an area region.

    Ties on height break by width descending, then id. Asserts the area
    guarantee: packed area >= min(a(items), w*h - 2*max(w_max*h, h_max*w)).
    """
    result = PackResult()
    if not items:
        return result
    order = sorted(items, key=lambda it: (-it.h, -it.w, it.id))
    shelf_y = 0
    shelf_h = 0
    cursor = 0
    done = False
    for it in order:
        if done:
            result.leftovers.append(it.id)
            continue
        if cursor + it.w <= region.w and shelf_y + it.h <= region.h:
            if shelf_h == 0:
                shelf_h = it.h
            result.placements.append(Placement(it.id, region.x + cursor, region.y + shelf_y, False))
            cursor += it.w
            continue
        # open a new shelf at the height of the current shelf's first item
        new_y = shelf_y + shelf_h
        if shelf_h > 0 and it.w <= region.w and new_y + it.h <= region.h:
            shelf_y = new_y
            shelf_h = it.h
            cursor = it.w
            result.placements.append(Placement(it.id, region.x, region.y + shelf_y, False))
        else:
            result.leftovers.append(it.id)
            done = True
    packed_area = sum(
        p_it.area for p_it in items if p_it.id not in set(result.leftovers)
    )
    total_area = sum(it.area for it in items)
    w_max = max(it.w for it in items)
    h_max = max(it.h for it in items)
    bound = region.w * region.h - 2 * max(w_max * region.h, h_max * region.w)
    assert packed_area >= min(total_area, bound), "NFDH area guarantee violated"
    return result


def _steinberg_precondition(u: int, v: int, rects) -> tuple[bool, str]:
    if not rects:
        return True, ""
    w_max = max(r[0] for r in rects)
    h_max = max(r[1] for r in rects)
    if w_max > u:
        return False, f"w_max = {w_max} > {u} = region width"
    if h_max > v:
        return False, f"h_max = {h_max} > {v} = region height"
    area2 = 2 * sum(r[0] * r[1] for r in rects)
    slack = max(2 * w_max - u, 0) * max(2 * h_max - v, 0)
    if area2 > u * v - slack:
        return False, f"2*area = {area2} > {u * v - slack} = u*v - (2w_max-u)+(2h_max-v)+"
    return True, ""


def _condition_ok(u: int, v: int, rects) -> bool:
    return _steinberg_precondition(u, v, rects)[0]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _transpose(rects):
    return [(h, w, i) for (w, h, i) in rects]


def _steinberg_solve(u: int, v: int, rects) -> list[tuple[int, int, str]]:
    """Recursive placement under the Steinberg condition; returns (x, y, id).

    Case order: wide procedure, tall procedure (transposed), then the
    all-small case via the two-widest pairing or an exhaustively checked
    guillotine split. Each recursion re-establishes the area condition.
    """
    if not rects:
        return []
    if len(rects) == 1:
        return [(0, 0, rects[0][2])]
    w_max = max(r[0] for r in rects)
    h_max = max(r[1] for r in rects)

    if 2 * w_max >= u:
        return _steinberg_wide(u, v, rects)
    if 2 * h_max >= v:
        placed = _steinberg_solve(v, u, _transpose(rects))
        return [(y, x, i) for (x, y, i) in placed]
    return _steinberg_small(u, v, rects)


def _steinberg_wide(u: int, v: int, rects):
    """Wide case: stack items of width >= u/2 bottom-left; hang the tall
    remainder from the top-right; recurse the rest above the stack."""
    wide = sorted((r for r in rects if 2 * r[0] >= u), key=lambda r: (-r[0], -r[1], r[2]))
    rest = sorted((r for r in rects if 2 * r[0] < u), key=lambda r: (-r[1], -r[0], r[2]))
    placed = []
    y = 0
    for w, h, i in wide:
        placed.append((0, y, i))
        y += h
    h0 = y
    assert h0 <= v, "wide stack exceeds the region"
    v_rest = v - h0
    # peel items too tall for the region above the stack; hang them top-right
    width_used = 0
    k = 0
    while k < len(rest) and rest[k][1] > v_rest:
        w, h, i = rest[k]
        width_used += w
        placed.append((u - width_used, v - h, i))
        k += 1
    assert 2 * width_used <= u, "tall prefix exceeds half the width"
    suffix = rest[k:]
    if suffix:
        assert _condition_ok(u - width_used, v_rest, suffix)
        for x, yy, i in _steinberg_solve(u - width_used, v_rest, suffix):
            placed.append((x, yy + h0, i))
    return placed


def _steinberg_small(u: int, v: int, rects):
    """All items smaller than half the region in both dimensions."""
    by_w = sorted(rects, key=lambda r: (-r[0], -r[1], r[2]))
    by_h = sorted(rects, key=lambda r: (-r[1], -r[0], r[2]))
    total2 = 2 * sum(r[0] * r[1] for r in rects)

    # pair the two widest in a left column
    r1, r2 = by_w[0], by_w[1]
    if total2 - 2 * r1[0] * r1[1] - 2 * r2[0] * r2[1] <= (u - r1[0]) * v:
        rest = by_w[2:]
        placed = [(0, 0, r1[2]), (0, r1[1], r2[2])]
        if rest:
            assert _condition_ok(u - r1[0], v, rest)
            for x, y, i in _steinberg_solve(u - r1[0], v, rest):
                placed.append((x + r1[0], y, i))
        return placed

    # pair the two tallest in a bottom row
    t1, t2 = by_h[0], by_h[1]
    if total2 - 2 * t1[0] * t1[1] - 2 * t2[0] * t2[1] <= u * (v - t1[1]):
        rest = [r for r in by_h if r[2] not in (t1[2], t2[2])]
        placed = [(0, 0, t1[2]), (t1[0], 0, t2[2])]
        if rest:
            assert _condition_ok(u, v - t1[1], rest)
            for x, y, i in _steinberg_solve(u, v - t1[1], rest):
                placed.append((x, y + t1[1], i))
        return placed

    # guillotine split search: width-ordered prefix left, suffix right
    split = _find_split(u, v, by_w)
    if split is not None:
        m, u1 = split
        placed = []
        left, right = by_w[:m], by_w[m:]
        for x, y, i in _steinberg_solve(u1, v, left):
            placed.append((x, y, i))
        for x, y, i in _steinberg_solve(u - u1, v, right):
            placed.append((x + u1, y, i))
        return placed

    split = _find_split(v, u, _transpose(by_h))
    if split is not None:
        m, v1 = split
        placed = list(_steinberg_solve(u, v1, by_h[:m]))
        for x, y, i in _steinberg_solve(u, v - v1, by_h[m:]):
            placed.append((x, y + v1, i))
        return placed

    raise AssertionError("steinberg recursion found no applicable move")


def _find_split(u: int, v: int, by_w) -> tuple[int, int] | None:
    """Smallest prefix m and cut u1 with both guillotine halves satisfying
    the area condition (heights below v/2 keep the slack terms zero)."""
    prefix2 = 0
    for m in range(1, len(by_w)):
        prefix2 += 2 * by_w[m - 1][0] * by_w[m - 1][1]
        u1 = max(by_w[0][0], _ceil_div(prefix2, v))
        if u1 >= u:
            continue
        suffix2 = 2 * sum(r[0] * r[1] for r in by_w[m:])
        if by_w[m][0] <= u - u1 and suffix2 <= (u - u1) * v:
            return m, u1
    return None


def steinberg(region: Container, items: list[ItemSpec]) -> PackResult:
    """Pack ALL items into the region when the Steinberg condition holds.

    Raises SteinbergPreconditionError (with both sides of the violated
    inequality) otherwise. Output is validated before returning.
    """
    rects = [(it.w, it.h, it.id) for it in items]
    ok, detail = _steinberg_precondition(region.w, region.h, rects)
    if not ok:
        raise SteinbergPreconditionError(detail)
    placed = _steinberg_solve(region.w, region.h, rects)
    by_id = {it.id: it for it in items}
    result = PackResult()
    check = []
    for x, y, item_id in placed:
        it = by_id[item_id]
        result.placements.append(Placement(item_id, region.x + x, region.y + y, False))
        check.append((x, y, it.w, it.h))
    assert len(placed) == len(items), "steinberg must pack every item"
    assert all(
        0 <= x and 0 <= y and x + w <= region.w and y + h <= region.h
        for (x, y, w, h) in check
    ), "steinberg placement out of region"
    assert kernels.first_overlap(check) == (-1, -1), "steinberg placement overlaps"
    return result
