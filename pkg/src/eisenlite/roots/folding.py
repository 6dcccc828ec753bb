from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple
import numpy as np
from ..enums import EType, Field
from ..logger import get_logger
from .datum import Root, d4

# 0-based image of each absolute node under the Galois action on the diagram.
GALOIS_PERMUTATIONS: Dict[EType, Tuple[int, int, int, int]] = {
    EType.SPLIT: (0, 1, 2, 3),
    EType.FXK: (0, 1, 3, 2),    # (3 4)
    EType.CUBIC: (2, 1, 3, 0),  # (1 3 4)
}

# Relative letter -> absolute nodes (1-based).
LETTERS: Dict[EType, Tuple[Tuple[int, ...], ...]] = {
    EType.SPLIT: ((1,), (2,), (3,), (4,)),
    EType.FXK: ((1,), (2,), (3, 4)),
    EType.CUBIC: ((1, 3, 4), (2,)),
}

_FIELD_BY_ORBIT_SIZE = {1: Field.F, 2: Field.K, 3: Field.E}


@dataclass(frozen=True)
class RelativeRoot:
    """A Galois orbit of absolute roots, with its field of definition."""
    representative: Root
    orbit: Tuple[Root, ...]
    field: Field
    coefficients: Tuple[int, ...]

    @property
    def is_positive(self) -> bool:
        return self.representative.is_positive

    @property
    def label(self) -> str:
        return self.representative.label

    def pairing(self, weight):
        return self.representative.pairing(weight)

    def __str__(self) -> str:
        return f"{self.label}[{self.field.value}]"


@dataclass(frozen=True)
class RelativeDatum:
    etype: EType
    galois_perm: Tuple[int, int, int, int]
    letter_map: Tuple[Tuple[int, ...], ...]
    relative_simple: Tuple[RelativeRoot, ...]
    relative_positive: Tuple[RelativeRoot, ...]

    @property
    def rank(self) -> int:
        return len(self.letter_map)

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def letter_field(self, letter: int) -> Field:
        return self.relative_simple[letter - 1].field

    def letter_of_node(self, node: int) -> int:
        for letter, nodes in enumerate(self.letter_map, start=1):
            if node in nodes:
                return letter
        raise ValueError(f"Invalid node {node}. Must be one of 1, 2, 3, 4.")

    def validate_letter(self, letter: int) -> None:
        if not 1 <= letter <= self.rank:
            raise ValueError(
                f"Invalid letter {letter} for {self.etype.value}. "
                f"Relative letters are {list(self.letters)}."
            )

    def letter_matrix(self, letter: int) -> np.ndarray:
        self.validate_letter(letter)
        matrix = np.eye(4, dtype=np.int64)
        for node in self.letter_map[letter - 1]:
            matrix = matrix @ d4().reflection(node)
        return matrix

    def find(self, root: Root) -> RelativeRoot:
        """The relative root whose orbit contains ``root`` (sign included)."""
        positive = root if root.is_positive else -root
        for rel in self.relative_positive:
            if positive in rel.orbit:
                if root.is_positive:
                    return rel
                return _negate(rel)
        raise ValueError(f"Root {root} has no orbit in the {self.etype.value} datum")

    def levi_roots(self, letters) -> List[RelativeRoot]:
        """Positive relative roots supported on ``letters``."""
        allowed = set(letters)
        return [
            r for r in self.relative_positive
            if all(c == 0 or (i + 1) in allowed for i, c in enumerate(r.coefficients))
        ]


def _negate(rel: RelativeRoot) -> RelativeRoot:
    return RelativeRoot(
        representative=-rel.representative,
        orbit=tuple(-r for r in rel.orbit),
        field=rel.field,
        coefficients=tuple(-c for c in rel.coefficients),
    )


def _permute(root: Root, perm: Tuple[int, ...]) -> Root:
    image = [0, 0, 0, 0]
    for i, c in enumerate(root.coefficients):
        image[perm[i]] = c
    return Root(tuple(image))


def _orbit(root: Root, perm: Tuple[int, ...]) -> Tuple[Root, ...]:
    members = [root]
    current = _permute(root, perm)
    while current != root:
        members.append(current)
        current = _permute(current, perm)
    return tuple(sorted(members, key=lambda r: r.coefficients, reverse=True))


def _relative_root(orbit: Tuple[Root, ...], letter_map) -> RelativeRoot:
    representative = orbit[0]
    coefficients = tuple(
        sum(representative.coefficients[node - 1] for node in nodes) for nodes in letter_map
    )
    return RelativeRoot(
        representative=representative,
        orbit=orbit,
        field=_FIELD_BY_ORBIT_SIZE[len(orbit)],
        coefficients=coefficients,
    )


@lru_cache(maxsize=None)
def build_relative(etype: EType) -> RelativeDatum:
    """
    Fold the absolute D4 datum along the Galois action of ``etype``.

    Args:
        etype: Isomorphism class of the etale cubic algebra

    Returns:
        RelativeDatum of rank 4, 3 or 2 (D4, B3 or G2) with field labels

    Example:
        >>> [r.field.value for r in build_relative(EType.CUBIC).relative_simple]
        ['E', 'F']
    """
    if not isinstance(etype, EType):
        raise ValueError(f"Invalid etype {etype!r}. Must be one of {[e.value for e in EType]}.")

    perm = GALOIS_PERMUTATIONS[etype]
    letter_map = LETTERS[etype]

    seen = set()
    positive: List[RelativeRoot] = []
    for root in d4().positive_roots:
        if root in seen:
            continue
        orbit = _orbit(root, perm)
        seen.update(orbit)
        positive.append(_relative_root(orbit, letter_map))

    positive.sort(key=lambda r: (sum(r.coefficients), tuple(-c for c in r.coefficients)))

    simple = []
    for nodes in letter_map:
        orbit = _orbit(Root(tuple(1 if i + 1 == nodes[0] else 0 for i in range(4))), perm)
        simple.append(_relative_root(orbit, letter_map))

    get_logger().debug(
        f"Folded D4 for {etype.value}: rank={len(letter_map)}, positive roots={len(positive)}"
    )
    return RelativeDatum(
        etype=etype,
        galois_perm=perm,
        letter_map=letter_map,
        relative_simple=tuple(simple),
        relative_positive=tuple(positive),
    )
