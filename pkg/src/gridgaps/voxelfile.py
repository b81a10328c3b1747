"""Reading and writing voxel files.

Plain text: one voxel per line as whitespace-separated integers, ``#``
starts a comment, blank lines are ignored.  Files ending in ``.json``
use the structured form ``{"n": <int>, "voxels": [[...], ...]}``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO

from .objects import DigitalObject


class VoxelFileError(ValueError):
    """The voxel file cannot be parsed."""


def read_voxel_file(
    path: str | Path, ambient_n: int | None = None, *, strict: bool = False
) -> DigitalObject:
    path = Path(path)
    if path.suffix == ".json":
        return _read_json(path, ambient_n, strict)
    points = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                points.append(tuple(int(tok) for tok in line.split()))
            except ValueError:
                raise VoxelFileError(f"{path}:{lineno}: not an integer vector: {line!r}")
    try:
        return DigitalObject.from_points(points, ambient_n, strict=strict)
    except ValueError as exc:
        raise VoxelFileError(f"{path}: {exc}") from exc


def _read_json(path: Path, ambient_n: int | None, strict: bool) -> DigitalObject:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise VoxelFileError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "voxels" not in data:
        raise VoxelFileError(f"{path}: expected an object with a 'voxels' key")
    n = data.get("n", ambient_n)
    try:
        return DigitalObject.from_points(data["voxels"], n, strict=strict)
    except (TypeError, ValueError) as exc:
        raise VoxelFileError(f"{path}: {exc}") from exc


def write_voxels(obj: DigitalObject, out: TextIO) -> None:
    """Write the plain-text form, voxels in sorted order for reproducibility."""
    for v in obj:
        out.write(" ".join(str(c) for c in v) + "\n")


def write_voxel_file(obj: DigitalObject, path: str | Path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        payload = {"n": obj.ambient_n, "voxels": [list(v) for v in obj]}
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            write_voxels(obj, fh)
