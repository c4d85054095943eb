"""JSON (de)serialization for instances, packings, containers, corridors."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .model import (
    Container,
    ContainerLabel,
    Instance,
    ItemSpec,
    LShape,
    Packing,
    Placement,
)


def parse_fraction(text) -> Fraction:
    """Exact rational from 'p/q', an integer string, or a number."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text)
    raise ValueError(f"cannot parse {text!r} as an exact rational")


def instance_to_json(inst: Instance) -> dict:
    return {
        "N": inst.N,
        "rotation_allowed": inst.rotation_allowed,
        "items": [
            {"id": it.id, "w": it.w, "h": it.h, "p": it.p} for it in inst.items
        ],
    }


def instance_from_json(data: dict) -> Instance:
    items = tuple(
        ItemSpec(id=str(d["id"]), w=int(d["w"]), h=int(d["h"]), p=int(d.get("p", 1)))
        for d in data["items"]
    )
    return Instance(
        N=int(data["N"]),
        items=items,
        rotation_allowed=bool(data.get("rotation_allowed", True)),
    )


def packing_to_json(p: Packing, instance_ref: str | None = None) -> dict:
    return {
        "instance": instance_ref if instance_ref else instance_to_json(p.instance),
        "placements": [
            {"id": pl.item_id, "x": pl.x, "y": pl.y, "rotated": pl.rotated}
            for pl in p.placements
        ],
    }


def packing_from_json(data: dict, base_dir: Path | None = None) -> Packing:
    ref = data["instance"]
    if isinstance(ref, str):
        path = Path(ref)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        inst = instance_from_json(json.loads(path.read_text()))
    else:
        inst = instance_from_json(ref)
    placements = tuple(
        Placement(
            item_id=str(d["id"]),
            x=int(d["x"]),
            y=int(d["y"]),
            rotated=bool(d.get("rotated", False)),
        )
        for d in data["placements"]
    )
    return Packing(inst, placements)


def container_to_json(c: Container) -> dict:
    return {"x": c.x, "y": c.y, "w": c.w, "h": c.h, "label": c.label.value}


def container_from_json(d: dict) -> Container:
    return Container(
        x=int(d["x"]),
        y=int(d["y"]),
        w=int(d["w"]),
        h=int(d["h"]),
        label=ContainerLabel(d["label"]),
    )


def lshape_to_json(l: LShape | None) -> dict | None:
    if l is None:
        return None
    return {"W": l.W, "H": l.H, "w_arm": l.w_arm, "h_arm": l.h_arm}


def lshape_from_json(d: dict | None) -> LShape | None:
    if d is None:
        return None
    return LShape(W=int(d["W"]), H=int(d["H"]), w_arm=int(d["w_arm"]), h_arm=int(d["h_arm"]))


def load_json(path) -> dict:
    return json.loads(Path(path).read_text())


def dump_json(path, data) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
