from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional

from ..enums import CharKind, EType
from ..logger import get_logger
from ..roots import canonical_names
from .sigma import EquivClass

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


@dataclass(frozen=True)
class CancellationRule:
    """
    Net order of a class sum at a point, taken from the literature.

    With ``signature`` None the rule caps every class of the configuration at
    ``effect``; otherwise it fixes the net order of the one class whose
    member words are ``signature``.
    """
    etype: EType
    kind: CharKind
    s0: Fraction
    effect: int
    citation: str
    signature: Optional[FrozenSet[str]] = None

    def matches(self, etype: EType, kind: CharKind, s0: Fraction, cls: EquivClass) -> bool:
        if (self.etype, self.kind, self.s0) != (etype, kind, s0):
            return False
        return self.signature is None or canonical_names(etype, self.signature) == cls.signature

    def apply(self, cls: EquivClass) -> int:
        if self.signature is None:
            return min(cls.max_order, self.effect)
        if self.effect > cls.max_order:
            raise ValueError(
                f"Rule effect {self.effect} exceeds the class maximum {cls.max_order} "
                f"for {sorted(cls.signature)}"
            )
        return self.effect


POLE_TABLE = "Heisenberg pole theorem"
CUBIC_RESIDUE = "Cubic-field residue computation"
FXK_RESIDUE = "F x K residue computation"
SPLIT_RESIDUE = "Split residue computation"
SOURCES = (POLE_TABLE, CUBIC_RESIDUE, FXK_RESIDUE, SPLIT_RESIDUE)

RULES: List[CancellationRule] = [
    CancellationRule(
        EType.CUBIC, CharKind.TRIVIAL, HALF, 1,
        f"{CUBIC_RESIDUE}, trivial χ at 1/2: the order-2 terms of {{w212, w2121}} cancel",
    ),
    CancellationRule(
        EType.CUBIC, CharKind.TRIVIAL, THREE_HALVES, 0,
        f"{POLE_TABLE}, cubic field, trivial χ: no pole at 3/2",
    ),
    CancellationRule(
        EType.CUBIC, CharKind.CUBIC_E, HALF, 0,
        f"{POLE_TABLE}, cubic field, cubic χ: no pole at 1/2",
    ),
    CancellationRule(
        EType.FXK, CharKind.TRIVIAL, HALF, 1,
        f"{FXK_RESIDUE}, trivial χ at 1/2: grouped (Id + M) expansions leave a simple pole",
    ),
    CancellationRule(
        EType.FXK, CharKind.TRIVIAL, THREE_HALVES, 1,
        f"{POLE_TABLE}, F x K, trivial χ: simple pole at 3/2",
    ),
    CancellationRule(
        EType.FXK, CharKind.QUAD_K_NORMTRIVIAL, HALF, 1,
        f"{FXK_RESIDUE}, χ = χ_K at 1/2: the double poles of Σ_2 reduce to a simple pole",
    ),
    CancellationRule(
        EType.FXK, CharKind.QUAD_K_NORMNONTRIVIAL, HALF, 0,
        f"{FXK_RESIDUE}, χ∘Nm ≠ Id at 1/2: M(w2132) and M(w21323) cancel each other",
        frozenset({"2132", "21323"}),
    ),
    CancellationRule(
        EType.SPLIT, CharKind.TRIVIAL, HALF, 1,
        f"{SPLIT_RESIDUE}, trivial χ at 1/2: order-4 and order-3 terms drop in the grouped expansions (derived)",
    ),
    CancellationRule(
        EType.SPLIT, CharKind.TRIVIAL, THREE_HALVES, 2,
        f"{POLE_TABLE}, split, trivial χ: double pole at 3/2",
    ),
]


def applicable_rule(etype: EType, kind: CharKind, s0: Fraction, cls: EquivClass) -> Optional[CancellationRule]:
    for rule in RULES:
        if rule.matches(etype, kind, s0, cls):
            return rule
    return None


def net_order(etype: EType, kind: CharKind, s0: Fraction, cls: EquivClass) -> int:
    """Net pole order of a class sum: the rule's effect, else the class maximum."""
    rule = applicable_rule(etype, kind, s0, cls)
    if rule is None:
        return cls.max_order
    net = rule.apply(cls)
    get_logger().debug(
        f"Rule for {sorted(cls.signature)} at s0={s0}: {cls.max_order} -> {net} ({rule.citation})"
    )
    return net
