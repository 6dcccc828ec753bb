from .tags import CHAR_TAGS, COMPATIBLE_ETYPES, CharTag, char_tag, check_compatible
from .torus import (
    PARABOLIC_NODES,
    CharacterRatio,
    TorusCharacter,
    act_character,
    char_ratio,
    chi_s,
    chi_tilde,
    equal_at,
    eta_s,
    lambda_s,
    levi_letters,
    stabilizer,
    twist,
)
from .render import render_character, render_weight

__all__ = [
    # Tags
    "CHAR_TAGS",
    "COMPATIBLE_ETYPES",
    "CharTag",
    "char_tag",
    "check_compatible",
    # Torus characters
    "PARABOLIC_NODES",
    "CharacterRatio",
    "TorusCharacter",
    "act_character",
    "char_ratio",
    "chi_s",
    "chi_tilde",
    "equal_at",
    "eta_s",
    "lambda_s",
    "levi_letters",
    "stabilizer",
    "twist",
    # Rendering
    "render_character",
    "render_weight",
]
