"""Segmentation label set and role grouping shared across the pipeline."""

LABEL_SET_VERSION = "dresser-labels-v1"

# Fixed label ids for the 8-bit label rasters. Order is part of the on-disk
# format and must not change.
BACKGROUND = 0
SKIN = 1
FACE = 2
HAIR = 3
TOP = 4
BOTTOM = 5
JACKET = 6
SHOES = 7

LABEL_NAMES = ("background", "skin", "face", "hair", "top", "bottom", "jacket", "shoes")
NUM_LABELS = len(LABEL_NAMES)

# Roles are what the encoders consume. Face pixels are folded into the skin
# role (the body encoder treats arms, legs and face as one region); hair stays
# a separate, dressable garment.
ROLE_LABELS = {
    "background": (BACKGROUND,),
    "skin": (SKIN, FACE),
    "hair": (HAIR,),
    "top": (TOP,),
    "bottom": (BOTTOM,),
    "jacket": (JACKET,),
    "shoes": (SHOES,),
}

# Catalog order for garment roles. Dressing order is chosen by the caller;
# this is only the enumeration order of split_segments.
GARMENT_ROLES = ("hair", "top", "bottom", "jacket", "shoes")

# Default dressing order used for training supervision. It matches the doll
# renderer's paint order so the target image and the dressed latent agree on
# which garment wins each overlap.
DEFAULT_DRESSING_ORDER = ("bottom", "shoes", "top", "jacket", "hair")

ALL_ROLES = ("background", "skin") + GARMENT_ROLES


def name_to_id(name: str) -> int:
    return LABEL_NAMES.index(name)
