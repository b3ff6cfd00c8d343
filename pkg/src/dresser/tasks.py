"""Training task sampling: pose transfer mixed with free-form inpainting."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .freeform import BrushParams, make_freeform_mask
from .records import SampleRecord
from .storage import Dataset


@dataclass(frozen=True)
class TrainingTask:
    source: SampleRecord
    target: SampleRecord
    kind: str                       # "transfer" | "inpaint"
    inpaint_mask: np.ndarray | None  # uint8 (H, W), present iff kind == "inpaint"

    def __post_init__(self):
        if self.kind not in ("transfer", "inpaint"):
            raise ValueError(f"unknown task kind {self.kind!r}")
        if self.kind == "inpaint":
            if self.inpaint_mask is None:
                raise ValueError("inpaint task requires a mask")
            if self.target is not self.source and (
                    self.target.identity != self.source.identity
                    or self.target.pose_id != self.source.pose_id):
                raise ValueError("inpaint target must be the source record")
        else:
            if self.inpaint_mask is not None:
                raise ValueError("transfer task carries no inpaint mask")
            if self.source.identity != self.target.identity:
                raise ValueError("transfer pairs share one identity")


def sample_task(dataset: Dataset, alpha: float, rng: np.random.Generator,
                brush: BrushParams | None = None) -> TrainingTask:
    """Draw one task: inpainting with probability alpha, else pose transfer.

    Identities with a single pose are excluded from transfer sampling.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    if len(dataset) == 0:
        raise ValueError("empty dataset")

    if rng.random() < alpha:
        records = dataset.records
        rec = records[int(rng.integers(len(records)))]
        mask = make_freeform_mask(rec.height, rec.width, brush, rng)
        return TrainingTask(source=rec, target=rec, kind="inpaint", inpaint_mask=mask)

    candidates = [i for i in dataset.identities if len(dataset.poses_of(i)) >= 2]
    if not candidates:
        raise ValueError("no identity has two or more poses; cannot sample transfer")
    identity = candidates[int(rng.integers(len(candidates)))]
    poses = dataset.poses_of(identity)
    i = int(rng.integers(len(poses)))
    j = int(rng.integers(len(poses) - 1))
    if j >= i:
        j += 1
    return TrainingTask(
        source=dataset.get(identity, poses[i]),
        target=dataset.get(identity, poses[j]),
        kind="transfer",
        inpaint_mask=None,
    )
