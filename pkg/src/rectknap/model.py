"""Instance/packing data model and item classification.

All geometry is exact: coordinates and dimensions are integers, thresholds
are Fractions. Every type is an immutable value; the operations are pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction


class ItemClass(enum.Enum):
    SMALL = "small"
    LARGE = "large"
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    INTERMEDIATE = "intermediate"


class ContainerLabel(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    AREA = "area"


@dataclass(frozen=True)
class ItemSpec:
    id: str
    w: int
    h: int
    p: int = 1

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise ValueError(f"item {self.id}: dimensions must be >= 1")
        if self.p < 0:
            raise ValueError(f"item {self.id}: profit must be >= 0")

    @property
    def area(self) -> int:
        return self.w * self.h


@dataclass(frozen=True)
class Instance:
    N: int
    items: tuple[ItemSpec, ...]
    rotation_allowed: bool = True

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("knapsack side must be >= 1")
        object.__setattr__(self, "items", tuple(self.items))
        ids = [it.id for it in self.items]
        if len(set(ids)) != len(ids):
            raise ValueError("item ids must be pairwise distinct")
        for it in self.items:
            if it.w > self.N or it.h > self.N:
                raise ValueError(f"item {it.id} does not fit the knapsack as given")

    def item(self, item_id: str) -> ItemSpec:
        return self._by_id[item_id]

    @property
    def _by_id(self) -> dict[str, ItemSpec]:
        # cached lazily on the instance dict (frozen dataclass workaround)
        cache = self.__dict__.get("_by_id_cache")
        if cache is None:
            cache = {it.id: it for it in self.items}
            self.__dict__["_by_id_cache"] = cache
        return cache

    def total_profit(self) -> int:
        return sum(it.p for it in self.items)


@dataclass(frozen=True)
class Placement:
    item_id: str
    x: int
    y: int
    rotated: bool = False


@dataclass(frozen=True)
class Packing:
    instance: Instance
    placements: tuple[Placement, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "placements", tuple(self.placements))

    def profit(self) -> int:
        return sum(self.instance.item(pl.item_id).p for pl in self.placements)

    def rects(self) -> list[tuple[int, int, int, int]]:
        out = []
        for pl in self.placements:
            it = self.instance.item(pl.item_id)
            w, h = effective_dims(it, pl.rotated)
            out.append((pl.x, pl.y, w, h))
        return out


@dataclass(frozen=True)
class Container:
    x: int
    y: int
    w: int
    h: int
    label: ContainerLabel

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise ValueError("container dimensions must be >= 1")

    @property
    def area(self) -> int:
        return self.w * self.h

    @property
    def rect(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.w, self.h)


@dataclass(frozen=True)
class LShape:
    """L-shaped corridor anchored at the origin.

    Region: ([0, W] x [0, h_arm]) union ([0, w_arm] x [0, H]); the horizontal
    arm's bottom edge lies on the knapsack bottom.
    """

    W: int
    H: int
    w_arm: int
    h_arm: int

    def __post_init__(self):
        if not (0 <= self.w_arm <= self.W and 0 <= self.h_arm <= self.H):
            raise ValueError("arm thickness exceeds arm length")

    def contains_rect(self, rect: tuple[int, int, int, int]) -> bool:
        x, y, w, h = rect
        in_horizontal = 0 <= x and x + w <= self.W and 0 <= y and y + h <= self.h_arm
        in_vertical = 0 <= x and x + w <= self.w_arm and 0 <= y and y + h <= self.H
        return in_horizontal or in_vertical

    def arm_of_rect(self, rect: tuple[int, int, int, int]) -> str | None:
        x, y, w, h = rect
        if 0 <= x and x + w <= self.W and 0 <= y and y + h <= self.h_arm:
            return "horizontal"
        if 0 <= x and x + w <= self.w_arm and 0 <= y and y + h <= self.H:
            return "vertical"
        return None

    def overlaps_rect(self, rect: tuple[int, int, int, int]) -> bool:
        x, y, w, h = rect
        horiz = x < self.W and 0 < x + w and y < self.h_arm and 0 < y + h
        vert = x < self.w_arm and 0 < x + w and y < self.H and 0 < y + h
        return horiz or vert


@dataclass(frozen=True)
class Thresholds:
    eps: Fraction
    eps_small: Fraction
    eps_large: Fraction

    def __post_init__(self):
        if not (0 < self.eps_small < self.eps_large <= self.eps * self.eps):
            raise ValueError("need 0 < eps_small < eps_large <= eps^2")


def effective_dims(item: ItemSpec, rotated: bool) -> tuple[int, int]:
    """Width and height of the item as placed (swapped when rotated)."""
    if rotated:
        return item.h, item.w
    return item.w, item.h


def classify_item(item: ItemSpec, N: int, t: Thresholds) -> ItemClass:
    """The five-way size classification against eps_small/eps_large cutoffs."""
    w_small = item.w <= t.eps_small * N
    h_small = item.h <= t.eps_small * N
    w_large = item.w > t.eps_large * N
    h_large = item.h > t.eps_large * N
    if w_small and h_small:
        return ItemClass.SMALL
    if w_large and h_large:
        return ItemClass.LARGE
    if w_large and h_small:
        return ItemClass.HORIZONTAL
    if h_large and w_small:
        return ItemClass.VERTICAL
    return ItemClass.INTERMEDIATE


def threshold_ladder(eps: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Candidate (eps_small, eps_large) pairs: e_0 = eps^2, e_{j+1} = e_j^3.

    Consecutive ladder values give disjoint dimension bands, so any item is
    intermediate for at most two of the pairs (once through its width band,
    once through its height band).
    """
    pairs = []
    n_pairs = -(-(2 * eps.denominator) // eps.numerator)  # ceil(2/eps)
    e = eps * eps
    for _ in range(n_pairs):
        nxt = e * e * e
        pairs.append((nxt, e))
        e = nxt
    return pairs


def choose_thresholds(items: list[ItemSpec], N: int, eps: Fraction) -> Thresholds:
    """Pick the ladder pair minimizing intermediate profit (ties: smallest j).

    Pigeonhole over the disjoint ladder bands bounds the chosen intermediate
    profit by 2*eps*p(items).
    """
    eps = Fraction(eps)
    if not (0 < eps <= Fraction(1, 2)):
        raise ValueError("eps must lie in (0, 1/2]")
    if not items:
        raise ValueError("need at least one item")
    best = None
    for j, (lo, hi) in enumerate(threshold_ladder(eps)):
        t = Thresholds(eps=eps, eps_small=lo, eps_large=hi)
        inter = sum(
            it.p for it in items if classify_item(it, N, t) is ItemClass.INTERMEDIATE
        )
        if best is None or inter < best[0]:
            best = (inter, j, t)
    total = sum(it.p for it in items)
    assert best[0] <= 2 * eps * total, "ladder pigeonhole bound violated"
    return best[2]
