"""Procedural "paper-doll" figures: articulated 2D bodies with layered,
textured garments rendered in multiple poses.

Geometry is defined in normalized coordinates and scaled to the requested
resolution, so the same (seed, pose_id) pair produces the same doll at any
size. Identity appearance (skin tone, garment patterns and colors, jacket
presence) is a pure function of the seed; pose is a pure function of pose_id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from PIL import Image, ImageDraw

from . import labels as L
from .keypoints import Keypoints
from .records import SampleRecord

# ---------------------------------------------------------------------------
# Pose bank

# Arm presets: (shoulder angle from straight-down, elbow extra bend), degrees.
_ARMS = {
    "down": (8.0, 5.0),
    "low": (30.0, 10.0),
    "out": (55.0, 15.0),
    "up": (155.0, 15.0),
    "akimbo": (38.0, 105.0),
}
# Leg presets: spread angle from vertical, degrees.
_LEGS = {"straight": 5.0, "narrow": 2.0, "spread": 15.0}

# (right arm, left arm, legs) per pose id.
POSE_BANK = (
    ("down", "down", "straight"),
    ("out", "out", "straight"),
    ("up", "up", "straight"),
    ("down", "down", "spread"),
    ("out", "out", "spread"),
    ("up", "down", "straight"),
    ("down", "up", "spread"),
    ("akimbo", "akimbo", "straight"),
    ("low", "low", "narrow"),
    ("out", "akimbo", "spread"),
    ("up", "up", "spread"),
    ("akimbo", "up", "straight"),
    ("low", "out", "straight"),
    ("out", "low", "spread"),
)

NUM_POSES = len(POSE_BANK)

# Normalized skeleton constants (x in width units, y in height units).
_HEAD = (0.5, 0.13)
_HEAD_R = (0.095, 0.085)     # (rx in W, ry in H)
_NECK = (0.5, 0.24)
_SHOULDER_Y, _SHOULDER_DX = 0.285, 0.16
_HIP_Y, _HIP_DX = 0.54, 0.135
_UPPER_ARM, _FOREARM = 0.125, 0.115   # in height units
_THIGH, _SHIN = 0.16, 0.155


def _limb(start, angle_deg, length, side):
    """End point of a limb segment; angle measured from straight down,
    positive rotating away from the body on the given side (+1 right/-1 left
    in image x)."""
    a = math.radians(angle_deg)
    return (start[0] + side * math.sin(a) * length, start[1] + math.cos(a) * length)


def pose_keypoints(pose_id: int, height: int, width: int) -> Keypoints:
    """Keypoints (OpenPose order) for a pose bank entry, in pixels."""
    if not 0 <= pose_id < NUM_POSES:
        raise ValueError(f"pose_id {pose_id} out of range [0, {NUM_POSES})")
    r_arm, l_arm, legs = POSE_BANK[pose_id]
    spread = _LEGS[legs]

    def px(p):
        return (p[0] * width, p[1] * height)

    pts = {}
    pts["nose"] = (0.5, _HEAD[1] + 0.02)
    pts["neck"] = _NECK
    pts["r_eye"], pts["l_eye"] = (0.5 - 0.04, 0.115), (0.5 + 0.04, 0.115)
    pts["r_ear"], pts["l_ear"] = (0.5 - 0.08, 0.13), (0.5 + 0.08, 0.13)

    for side_name, arm, sgn in (("r", r_arm, -1), ("l", l_arm, +1)):
        sh = (0.5 + sgn * _SHOULDER_DX, _SHOULDER_Y)
        a0, bend = _ARMS[arm]
        el = _limb(sh, a0, _UPPER_ARM, sgn)
        wr = _limb(el, a0 + bend, _FOREARM, sgn)
        if arm == "akimbo":  # forearm folds back toward the hip
            wr = _limb(el, a0 + bend, _FOREARM, -sgn)
        pts[f"{side_name}_shoulder"], pts[f"{side_name}_elbow"], pts[f"{side_name}_wrist"] = sh, el, wr

    for side_name, sgn in (("r", -1), ("l", +1)):
        hip = (0.5 + sgn * _HIP_DX * 0.74, _HIP_Y)
        kn = _limb(hip, spread, _THIGH, sgn)
        an = _limb(kn, spread * 0.6, _SHIN, sgn)
        pts[f"{side_name}_hip"], pts[f"{side_name}_knee"], pts[f"{side_name}_ankle"] = hip, kn, an

    from .keypoints import KEYPOINT_NAMES
    xy = np.array([px(pts[name]) for name in KEYPOINT_NAMES], dtype=np.float32)
    xy[:, 0] = np.clip(xy[:, 0], 0, width - 1)
    xy[:, 1] = np.clip(xy[:, 1], 0, height - 1)
    return Keypoints.from_xy(xy)


# ---------------------------------------------------------------------------
# Identity appearance

_SKIN_TONES = ((242, 206, 176), (224, 180, 140), (198, 140, 100), (150, 100, 66), (110, 74, 48))
_HAIR_COLORS = ((40, 32, 26), (92, 58, 28), (180, 140, 60), (60, 60, 68), (140, 50, 34), (28, 28, 30))
_GARMENT_COLORS = (
    (200, 60, 54), (60, 110, 200), (70, 160, 90), (230, 190, 60),
    (150, 80, 180), (240, 130, 50), (70, 70, 80), (230, 230, 225),
    (30, 90, 90), (190, 40, 110),
)
_BG_COLORS = ((235, 235, 230), (215, 225, 235), (228, 218, 228), (222, 230, 218))
_PATTERNS = ("solid", "hstripe", "vstripe", "check", "dots")


@dataclass(frozen=True)
class DollIdentity:
    skin: tuple
    face: tuple
    hair_color: tuple
    hair_style: str            # cap | bob
    bg: tuple
    top_pattern: str
    top_colors: tuple          # (primary, secondary)
    top_sleeved: bool
    top_print: bool
    print_color: tuple
    bottom_pattern: str
    bottom_colors: tuple
    bottom_long: bool
    jacket: bool
    jacket_color: tuple
    shoe_color: tuple


def doll_identity(seed: int) -> DollIdentity:
    if seed < 0:
        raise ValueError("seed must be non-negative")
    rng = np.random.default_rng(seed)

    def pick(seq):
        return seq[int(rng.integers(len(seq)))]

    skin = pick(_SKIN_TONES)
    face = tuple(min(255, c + 14) for c in skin)
    c = list(_GARMENT_COLORS)
    top_primary = pick(c)
    top_secondary = pick([col for col in c if col != top_primary])
    bottom_primary = pick([col for col in c if col not in (top_primary,)])
    bottom_secondary = pick([col for col in c if col != bottom_primary])
    return DollIdentity(
        skin=skin,
        face=face,
        hair_color=pick(_HAIR_COLORS),
        hair_style=pick(("cap", "bob")),
        bg=pick(_BG_COLORS),
        top_pattern=pick(_PATTERNS),
        top_colors=(top_primary, top_secondary),
        top_sleeved=bool(rng.random() < 0.6),
        top_print=bool(rng.random() < 0.5),
        print_color=pick([col for col in c if col not in (top_primary, top_secondary)]),
        bottom_pattern=pick(("solid", "vstripe", "check")),
        bottom_colors=(bottom_primary, bottom_secondary),
        bottom_long=bool(rng.random() < 0.7),
        jacket=bool(rng.random() < 0.3),
        jacket_color=pick(c),
        shoe_color=pick(((40, 36, 34), (90, 60, 40), (30, 40, 70), (200, 200, 200))),
    )


def _pattern(kind: str, colors, height: int, width: int) -> np.ndarray:
    """Screen-aligned two-color pattern, uint8 (H, W, 3)."""
    p = max(2, round(height * 5 / 64))
    yy, xx = np.mgrid[0:height, 0:width]
    c1 = np.array(colors[0], dtype=np.uint8)
    c2 = np.array(colors[1], dtype=np.uint8)
    if kind == "solid":
        sel = np.zeros((height, width), dtype=bool)
    elif kind == "hstripe":
        sel = (yy // p) % 2 == 1
    elif kind == "vstripe":
        sel = (xx // p) % 2 == 1
    elif kind == "check":
        sel = ((yy // p) + (xx // p)) % 2 == 1
    elif kind == "dots":
        sel = ((yy % (2 * p)) - p // 2) ** 2 + ((xx % (2 * p)) - p // 2) ** 2 <= (p // 2) ** 2
    else:
        raise ValueError(f"unknown pattern {kind}")
    out = np.where(sel[..., None], c2, c1)
    return out.astype(np.uint8)


# ---------------------------------------------------------------------------
# Rendering

def _capsule(draw: ImageDraw.ImageDraw, p0, p1, radius: float, fill: int):
    draw.line([p0[0], p0[1], p1[0], p1[1]], fill=fill, width=max(1, int(round(2 * radius))))
    for p in (p0, p1):
        draw.ellipse([p[0] - radius, p[1] - radius, p[0] + radius, p[1] + radius], fill=fill)


def render_doll(identity: DollIdentity, pose_id: int, height: int, width: int):
    """Rasterize label map + RGB image for an identity in a pose."""
    kp = pose_keypoints(pose_id, height, width)
    pt = {name: kp.points[i, :2] for i, name in enumerate(
        ("nose", "neck", "r_shoulder", "r_elbow", "r_wrist", "l_shoulder", "l_elbow",
         "l_wrist", "r_hip", "r_knee", "r_ankle", "l_hip", "l_knee", "l_ankle",
         "r_eye", "l_eye", "r_ear", "l_ear"))}

    canvas = Image.new("L", (width, height), L.BACKGROUND)
    d = ImageDraw.Draw(canvas)
    s = height / 64.0  # stroke widths are tuned at 64px height

    arm_r, leg_r = 1.3 * s, 1.8 * s

    # Legs (skin), then the bottom garment over them.
    for side in ("r", "l"):
        _capsule(d, pt[f"{side}_hip"], pt[f"{side}_knee"], leg_r, L.SKIN)
        _capsule(d, pt[f"{side}_knee"], pt[f"{side}_ankle"], leg_r, L.SKIN)
    waist_y = pt["r_hip"][1] - 2.0 * s
    d.polygon([(pt["r_hip"][0] - 3.2 * s, waist_y), (pt["l_hip"][0] + 3.2 * s, waist_y),
               (pt["l_hip"][0] + 3.2 * s, pt["l_hip"][1] + 2 * s),
               (pt["r_hip"][0] - 3.2 * s, pt["r_hip"][1] + 2 * s)], fill=L.BOTTOM)
    for side in ("r", "l"):
        hip, knee, ankle = pt[f"{side}_hip"], pt[f"{side}_knee"], pt[f"{side}_ankle"]
        _capsule(d, hip, knee, leg_r + 1.0 * s, L.BOTTOM)
        if identity.bottom_long:
            _capsule(d, knee, knee + (ankle - knee) * 0.85, leg_r + 1.0 * s, L.BOTTOM)

    # Shoes.
    for side in ("r", "l"):
        ax, ay = pt[f"{side}_ankle"]
        d.ellipse([ax - 2.6 * s, ay - 1.2 * s, ax + 2.6 * s, ay + 2.8 * s], fill=L.SHOES)

    # Torso skin, arms, then the top garment.
    torso = [(pt["r_shoulder"][0], pt["r_shoulder"][1]), (pt["l_shoulder"][0], pt["l_shoulder"][1]),
             (pt["l_hip"][0] + 1.5 * s, pt["l_hip"][1]), (pt["r_hip"][0] - 1.5 * s, pt["r_hip"][1])]
    d.polygon(torso, fill=L.SKIN)
    for side in ("r", "l"):
        _capsule(d, pt[f"{side}_shoulder"], pt[f"{side}_elbow"], arm_r, L.SKIN)
        _capsule(d, pt[f"{side}_elbow"], pt[f"{side}_wrist"], arm_r, L.SKIN)

    top_hem_y = pt["r_hip"][1] + 2.8 * s
    top_poly = [(pt["r_shoulder"][0] - 1.6 * s, pt["r_shoulder"][1] - 1.2 * s),
                (pt["l_shoulder"][0] + 1.6 * s, pt["l_shoulder"][1] - 1.2 * s),
                (pt["l_hip"][0] + 2.6 * s, top_hem_y),
                (pt["r_hip"][0] - 2.6 * s, top_hem_y)]
    d.polygon(top_poly, fill=L.TOP)
    if identity.top_sleeved:
        for side in ("r", "l"):
            sh, el = pt[f"{side}_shoulder"], pt[f"{side}_elbow"]
            _capsule(d, sh, sh + (el - sh) * 0.55, arm_r + 0.9 * s, L.TOP)

    # Jacket: open-front side panels plus full sleeves.
    if identity.jacket:
        for side, sgn in (("r", -1), ("l", +1)):
            sh = pt[f"{side}_shoulder"]
            hip = pt[f"{side}_hip"]
            d.polygon([(sh[0] + sgn * 2.2 * s, sh[1] - 1.6 * s),
                       (sh[0] - sgn * 1.2 * s, sh[1] - 1.6 * s),
                       (hip[0] - sgn * 0.4 * s, hip[1] + 3.6 * s),
                       (hip[0] + sgn * 2.6 * s, hip[1] + 3.6 * s)], fill=L.JACKET)
            _capsule(d, sh, pt[f"{side}_elbow"], arm_r + 1.1 * s, L.JACKET)
            _capsule(d, pt[f"{side}_elbow"], pt[f"{side}_wrist"], arm_r + 1.1 * s, L.JACKET)

    # Neck, face, hair.
    nx, ny = pt["neck"]
    d.rectangle([nx - 1.4 * s, _HEAD[1] * height, nx + 1.4 * s, ny + 1.0 * s], fill=L.SKIN)
    hx, hy = _HEAD[0] * width, _HEAD[1] * height
    rx, ry = _HEAD_R[0] * width, _HEAD_R[1] * height
    d.ellipse([hx - rx, hy - ry, hx + rx, hy + ry], fill=L.FACE)
    hrx, hry = rx + 1.0 * s, ry + 1.0 * s
    d.pieslice([hx - hrx, hy - hry, hx + hrx, hy + hry], 180, 360, fill=L.HAIR)
    if identity.hair_style == "bob":
        for sgn in (-1, 1):
            d.rectangle([hx + sgn * rx - 1.2 * s, hy - 2 * s, hx + sgn * rx + 1.2 * s, hy + ry + 1.5 * s],
                        fill=L.HAIR)

    label_map = np.asarray(canvas, dtype=np.uint8)

    # Colorize label regions with per-role textures.
    img = np.empty((height, width, 3), dtype=np.uint8)
    img[:] = identity.bg
    flat = {
        L.SKIN: identity.skin, L.FACE: identity.face, L.HAIR: identity.hair_color,
        L.JACKET: identity.jacket_color, L.SHOES: identity.shoe_color,
    }
    for lab, color in flat.items():
        img[label_map == lab] = color
    top_tex = _pattern(identity.top_pattern, identity.top_colors, height, width)
    bottom_tex = _pattern(identity.bottom_pattern, identity.bottom_colors, height, width)
    img[label_map == L.TOP] = top_tex[label_map == L.TOP]
    img[label_map == L.BOTTOM] = bottom_tex[label_map == L.BOTTOM]
    if identity.top_print:
        cy, cx = (pt["neck"][1] + pt["r_hip"][1]) / 2, (pt["r_shoulder"][0] + pt["l_shoulder"][0]) / 2
        r = 2.6 * s
        yy, xx = np.mgrid[0:height, 0:width]
        patch = (np.abs(yy - cy) <= r) & (np.abs(xx - cx) <= r) & (label_map == L.TOP)
        img[patch] = identity.print_color

    return label_map, img, kp


def generate_doll(seed: int, pose_id: int, height: int = 64, width: int = 48) -> SampleRecord:
    """Deterministic doll sample for (seed, pose_id)."""
    identity = doll_identity(seed)
    label_map, img, kp = render_doll(identity, pose_id, height, width)
    image = img.astype(np.float32).transpose(2, 0, 1) / 127.5 - 1.0
    return SampleRecord(
        image=image,
        keypoints=kp,
        labels=label_map,
        identity=f"doll{seed:04d}",
        pose_id=str(pose_id),
    )


def make_shop_record(record: SampleRecord, role: str) -> SampleRecord:
    """Strip a record down to one garment on a plain background, with no pose.

    This is the "shop image" setting: the garment photographed without a
    wearer, encoded downstream with empty pose heatmaps.
    """
    from .records import role_mask
    mask = role_mask(record, role)
    image = np.where(mask[None], record.image, 0.0).astype(np.float32)
    lab = np.where(mask, record.labels, L.BACKGROUND).astype(np.uint8)
    return SampleRecord(
        image=image,
        keypoints=Keypoints.empty(),
        labels=lab,
        identity=f"{record.identity}-shop-{role}",
        pose_id="shop",
    )
