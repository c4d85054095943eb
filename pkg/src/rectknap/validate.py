"""Feasibility checking for plain, container, and L&C* packings.

Violations are data, not exceptions: an empty report means the packing is
feasible under open-rectangle semantics (shared edges are legal).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .model import (
    Container,
    ContainerLabel,
    Instance,
    LShape,
    Packing,
    effective_dims,
)


@dataclass(frozen=True)
class Violation:
    kind: str
    ids: tuple[str, ...]
    detail: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, kind: str, ids, detail: str) -> None:
        self.violations.append(Violation(kind, tuple(ids), detail))

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [
                {"kind": v.kind, "ids": list(v.ids), "detail": v.detail}
                for v in self.violations
            ],
        }


def validate_packing(p: Packing) -> ValidationReport:
    """Check bounds, pairwise interior overlap, rotation legality, duplicates."""
    report = ValidationReport()
    inst = p.instance
    seen: set[str] = set()
    rects = []
    owners = []
    for pl in p.placements:
        try:
            item = inst.item(pl.item_id)
        except KeyError:
            report.add("unknown-item", [pl.item_id], "placement references no item")
            continue
        if pl.item_id in seen:
            report.add("duplicate-item", [pl.item_id], "item placed more than once")
            continue
        seen.add(pl.item_id)
        if pl.rotated and not inst.rotation_allowed:
            report.add("illegal-rotation", [pl.item_id], "rotation is forbidden")
        w, h = effective_dims(item, pl.rotated)
        if pl.x < 0 or pl.y < 0 or pl.x + w > inst.N or pl.y + h > inst.N:
            report.add(
                "out-of-bounds",
                [pl.item_id],
                f"rect ({pl.x},{pl.y},{w},{h}) leaves [0,{inst.N}]^2",
            )
        rects.append((pl.x, pl.y, w, h))
        owners.append(pl.item_id)
    i, j = kernels.first_overlap(rects)
    if i >= 0:
        # slow path: enumerate every overlapping pair for the report
        for a in range(len(rects)):
            for b in range(a + 1, len(rects)):
                if kernels.boxes_overlap(rects[a], rects[b]):
                    report.add(
                        "overlap",
                        [owners[a], owners[b]],
                        f"interiors of {rects[a]} and {rects[b]} intersect",
                    )
    return report


def _rect_inside(inner: tuple[int, int, int, int], outer: tuple[int, int, int, int]) -> bool:
    return (
        outer[0] <= inner[0]
        and outer[1] <= inner[1]
        and inner[0] + inner[2] <= outer[0] + outer[2]
        and inner[1] + inner[3] <= outer[1] + outer[3]
    )


def validate_container_packing(
    p: Packing, containers: list[Container], eps: Fraction
) -> ValidationReport:
    """Container-packing discipline on top of validate_packing."""
    report = validate_packing(p)
    inst = p.instance
    eps = Fraction(eps)
    for idx, c in enumerate(containers):
        if c.x < 0 or c.y < 0 or c.x + c.w > inst.N or c.y + c.h > inst.N:
            report.add("container-out-of-bounds", [], f"container {idx} {c.rect}")
        for jdx in range(idx + 1, len(containers)):
            if kernels.boxes_overlap(c.rect, containers[jdx].rect):
                report.add(
                    "container-overlap", [], f"containers {idx} and {jdx} intersect"
                )
    by_container: dict[int, list] = {i: [] for i in range(len(containers))}
    for pl in p.placements:
        item = inst.item(pl.item_id)
        w, h = effective_dims(item, pl.rotated)
        rect = (pl.x, pl.y, w, h)
        homes = [i for i, c in enumerate(containers) if _rect_inside(rect, c.rect)]
        if len(homes) != 1:
            report.add(
                "not-in-one-container",
                [pl.item_id],
                f"item lies inside {len(homes)} containers",
            )
            continue
        by_container[homes[0]].append((pl, rect))
    for idx, members in by_container.items():
        c = containers[idx]
        if c.label is ContainerLabel.HORIZONTAL:
            members.sort(key=lambda m: m[1][1])
            for (pl_a, ra), (pl_b, rb) in zip(members, members[1:]):
                if ra[1] + ra[3] > rb[1]:
                    report.add(
                        "stacking",
                        [pl_a.item_id, pl_b.item_id],
                        "y-projections overlap in horizontal container",
                    )
        elif c.label is ContainerLabel.VERTICAL:
            members.sort(key=lambda m: m[1][0])
            for (pl_a, ra), (pl_b, rb) in zip(members, members[1:]):
                if ra[0] + ra[2] > rb[0]:
                    report.add(
                        "stacking",
                        [pl_a.item_id, pl_b.item_id],
                        "x-projections overlap in vertical container",
                    )
        else:
            for pl, rect in members:
                if rect[2] > eps * c.w or rect[3] > eps * c.h:
                    report.add(
                        "area-threshold",
                        [pl.item_id],
                        f"{rect[2]}x{rect[3]} exceeds eps fraction of {c.w}x{c.h}",
                    )
    return report


def validate_lc_packing(
    p: Packing,
    lshape: LShape | None,
    containers: list[Container],
    eps: Fraction,
) -> ValidationReport:
    """The five L&C* properties, literally, plus container discipline.

    A None lshape means the degenerate (absent) L; the check then reduces to
    validate_container_packing.
    """
    if lshape is None:
        return validate_container_packing(p, containers, eps)
    inst = p.instance
    eps = Fraction(eps)
    report = validate_packing(p)
    # property (3): arm dimensions
    if lshape.W != inst.N:
        report.add("lc-dims", [], f"W_L={lshape.W} differs from N={inst.N}")
    if 2 * lshape.H > inst.N:
        report.add("lc-dims", [], f"H_L={lshape.H} exceeds N/2")
    if lshape.w_arm > eps * inst.N or lshape.h_arm > eps * inst.N:
        report.add("lc-dims", [], "arm thickness exceeds eps*N")
    # containers disjoint from each other and from the L
    for idx, c in enumerate(containers):
        if lshape.overlaps_rect(c.rect):
            report.add("lc-container-overlap", [], f"container {idx} meets the L")
    # property (1) + arm membership for (4)/(5)
    in_container: list = []
    vertical_arm_dims: list[tuple[int, int, str]] = []
    for pl in p.placements:
        item = inst.item(pl.item_id)
        w, h = effective_dims(item, pl.rotated)
        rect = (pl.x, pl.y, w, h)
        arm = lshape.arm_of_rect(rect)
        if arm is None and lshape.overlaps_rect(rect):
            report.add(
                "lc-arm", [pl.item_id], "item meets the L but lies in no single arm"
            )
            continue
        if arm == "horizontal":
            if 2 * w <= inst.N:
                report.add(
                    "lc-property-4",
                    [pl.item_id],
                    f"horizontal-arm item needs w*(i) > N/2, got {w}",
                )
        elif arm == "vertical":
            if 2 * h <= lshape.H:
                report.add(
                    "lc-property-4",
                    [pl.item_id],
                    f"vertical-arm item needs h*(i) > H_L/2, got {h}",
                )
            vertical_arm_dims.append((w, h, pl.item_id))
        else:
            in_container.append(pl)
    # property (5): uniform orientation in the vertical arm
    if vertical_arm_dims:
        all_taller = all(h > w for w, h, _ in vertical_arm_dims)
        all_wider = all(w >= h for w, h, _ in vertical_arm_dims)
        if not (all_taller or all_wider):
            report.add(
                "lc-property-5",
                [i for _, _, i in vertical_arm_dims],
                "vertical arm mixes orientations",
            )
    # container part: reuse the container validator on the sub-packing
    sub = Packing(inst, tuple(in_container))
    for v in validate_container_packing(sub, containers, eps).violations:
        report.violations.append(v)
    return report
