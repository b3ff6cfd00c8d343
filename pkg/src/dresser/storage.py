"""On-disk dataset layout and in-memory dataset views.

Directory format:
    <root>/manifest.json
    <root>/<identity>/<pose_id>.img   lossless PNG image
    <root>/<identity>/<pose_id>.kp    18 lines: "x y visible"
    <root>/<identity>/<pose_id>.seg   8-bit label raster (PNG, mode L)

The manifest lists identities and the label-set version. Datasets are
immutable after construction; all sampling takes an explicit generator.
"""

from __future__ import annotations

import io
import json
from pathlib import Path

import numpy as np
from PIL import Image

from . import labels as L
from .keypoints import NUM_KEYPOINTS, Keypoints
from .records import SampleRecord, image_from_uint8, image_to_uint8

MANIFEST_NAME = "manifest.json"


def save_record(root: Path, record: SampleRecord) -> None:
    root = Path(root)
    ident_dir = root / record.identity
    ident_dir.mkdir(parents=True, exist_ok=True)
    Image.fromarray(image_to_uint8(record.image)).save(ident_dir / f"{record.pose_id}.img", format="PNG")
    Image.fromarray(record.labels, mode="L").save(ident_dir / f"{record.pose_id}.seg", format="PNG")
    lines = [f"{x:.3f} {y:.3f} {int(v)}" for x, y, v in record.keypoints.points]
    (ident_dir / f"{record.pose_id}.kp").write_text("\n".join(lines) + "\n")


def load_record(root: Path, identity: str, pose_id: str) -> SampleRecord:
    ident_dir = Path(root) / identity
    img = np.asarray(Image.open(ident_dir / f"{pose_id}.img").convert("RGB"))
    seg = np.asarray(Image.open(ident_dir / f"{pose_id}.seg").convert("L"))
    rows = (ident_dir / f"{pose_id}.kp").read_text().strip().splitlines()
    if len(rows) != NUM_KEYPOINTS:
        raise ValueError(f"expected {NUM_KEYPOINTS} keypoint lines, got {len(rows)}")
    pts = np.array([[float(t) for t in row.split()] for row in rows], dtype=np.float32)
    return SampleRecord(
        image=image_from_uint8(img),
        keypoints=Keypoints(pts),
        labels=seg.astype(np.uint8),
        identity=identity,
        pose_id=str(pose_id),
    )


def write_manifest(root: Path, identities: list[str]) -> None:
    payload = {
        "label_set_version": L.LABEL_SET_VERSION,
        "labels": list(L.LABEL_NAMES),
        "identities": sorted(identities),
    }
    (Path(root) / MANIFEST_NAME).write_text(json.dumps(payload, indent=2) + "\n")


class Dataset:
    """Immutable in-memory dataset: records grouped by identity."""

    def __init__(self, records: list[SampleRecord]):
        by_identity: dict[str, dict[str, SampleRecord]] = {}
        for rec in records:
            by_identity.setdefault(rec.identity, {})[rec.pose_id] = rec
        self._by_identity = by_identity
        self._records = list(records)
        if records:
            h, w = records[0].height, records[0].width
            for rec in records:
                if (rec.height, rec.width) != (h, w):
                    raise ValueError("all records in a dataset must share resolution")
            self.height, self.width = h, w
        else:
            self.height = self.width = 0

    def __len__(self) -> int:
        return len(self._records)

    @property
    def records(self) -> list[SampleRecord]:
        return list(self._records)

    @property
    def identities(self) -> list[str]:
        return sorted(self._by_identity)

    def poses_of(self, identity: str) -> list[str]:
        return sorted(self._by_identity[identity], key=lambda p: (len(p), p))

    def get(self, identity: str, pose_id: str) -> SampleRecord:
        return self._by_identity[identity][str(pose_id)]

    def filter_poses(self, pose_ids) -> "Dataset":
        keep = {str(p) for p in pose_ids}
        return Dataset([r for r in self._records if r.pose_id in keep])


def load_dataset(root: Path) -> Dataset:
    root = Path(root)
    manifest = json.loads((root / MANIFEST_NAME).read_text())
    if manifest.get("label_set_version") != L.LABEL_SET_VERSION:
        raise ValueError(
            f"label set version mismatch: {manifest.get('label_set_version')!r} "
            f"!= {L.LABEL_SET_VERSION!r}")
    records = []
    for identity in manifest["identities"]:
        ident_dir = root / identity
        for img_file in sorted(ident_dir.glob("*.img")):
            records.append(load_record(root, identity, img_file.stem))
    return Dataset(records)


def generate_doll_dataset(root: Path, identities: int, poses: int,
                          height: int = 64, width: int = 48, seed0: int = 0) -> Dataset:
    """Render identities x poses dolls into the directory format."""
    from .dolls import NUM_POSES, generate_doll
    if poses > NUM_POSES:
        raise ValueError(f"pose bank has only {NUM_POSES} poses")
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    records, names = [], []
    for i in range(identities):
        seed = seed0 + i
        for p in range(poses):
            rec = generate_doll(seed, p, height, width)
            save_record(root, rec)
            records.append(rec)
        names.append(records[-1].identity)
    write_manifest(root, names)
    return Dataset(records)
