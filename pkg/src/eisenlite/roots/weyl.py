from collections import deque
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import numpy as np

from ..enums import EType, Field
from ..logger import get_logger
from .folding import RelativeDatum, RelativeRoot, build_relative
from .datum import d4
from .weight import AffineWeight

Matrix = Tuple[Tuple[int, ...], ...]


def _freeze(matrix: np.ndarray) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in matrix)


class WeylElement:
    """
    A word in relative letters together with its absolute lattice action.

    Two elements compare equal when their actions agree, whatever their
    words; use ``reduce`` to get the canonical reduced word.
    """

    __slots__ = ("etype", "word", "matrix")

    def __init__(self, etype: EType, word: Sequence[int], matrix: Optional[Matrix] = None):
        self.etype = etype
        self.word: Tuple[int, ...] = tuple(int(letter) for letter in word)
        if matrix is None:
            datum = build_relative(etype)
            action = np.eye(4, dtype=np.int64)
            for letter in self.word:
                action = action @ datum.letter_matrix(letter)
            matrix = _freeze(action)
        self.matrix: Matrix = matrix

    @classmethod
    def from_string(cls, etype: EType, text: str) -> "WeylElement":
        """Parse "212", "w212", "w_212"; "id", "e" or "" give the identity."""
        body = text.strip()
        if body.startswith("w"):
            body = body[1:].lstrip("_")
        if body in ("", "id", "e"):
            return cls(etype, ())
        if not body.isdigit():
            raise ValueError(f"Malformed Weyl word {text!r}. Expected digits such as '212'.")
        datum = build_relative(etype)
        letters = [int(ch) for ch in body]
        for letter in letters:
            datum.validate_letter(letter)
        return cls(etype, letters)

    @property
    def action(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    @property
    def name(self) -> str:
        return "".join(str(letter) for letter in self.word) or "id"

    def __len__(self) -> int:
        return len(self.word)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.etype != self.etype:
            raise ValueError(f"Cannot multiply {self.etype.value} and {other.etype.value} elements")
        return WeylElement(self.etype, self.word + other.word, _freeze(self.action @ other.action))

    def inverse(self) -> "WeylElement":
        return WeylElement(self.etype, tuple(reversed(self.word)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.etype == other.etype and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.etype, self.matrix))

    def __repr__(self) -> str:
        return f"WeylElement({self.etype.value}, w{self.name})"

    def __str__(self) -> str:
        return f"w{self.name}" if self.word else self.name


class WeylGroup:
    """
    The relative Weyl group of one etale type, enumerated once.

    Elements are discovered breadth first with letters in ascending order,
    so each element keeps its lexicographically smallest reduced word.
    """

    def __init__(self, etype: EType):
        self.etype = etype
        self.datum: RelativeDatum = build_relative(etype)
        self._by_matrix: Dict[Matrix, WeylElement] = {}
        self.elements: List[WeylElement] = []
        self._enumerate()
        get_logger().debug(f"Weyl group of {etype.value}: {len(self.elements)} elements")

    def _enumerate(self) -> None:
        identity = WeylElement(self.etype, ())
        self._by_matrix[identity.matrix] = identity
        self.elements.append(identity)
        queue = deque([identity])
        generators = [WeylElement(self.etype, (letter,)) for letter in self.datum.letters]
        while queue:
            current = queue.popleft()
            for generator in generators:
                candidate = current * generator
                if candidate.matrix not in self._by_matrix:
                    self._by_matrix[candidate.matrix] = candidate
                    self.elements.append(candidate)
                    queue.append(candidate)

    @property
    def order(self) -> int:
        return len(self.elements)

    def reduce(self, w: WeylElement) -> WeylElement:
        self._check(w)
        return self._by_matrix[w.matrix]

    def element(self, text: str) -> WeylElement:
        return self.reduce(WeylElement.from_string(self.etype, text))

    def longest(self) -> WeylElement:
        return max(self.elements, key=len)

    def _check(self, w: WeylElement) -> None:
        if w.etype != self.etype:
            raise ValueError(
                f"Element {w} belongs to {w.etype.value}, not to {self.etype.value}"
            )


@lru_cache(maxsize=None)
def weyl_group(etype: EType) -> WeylGroup:
    return WeylGroup(etype)


def reduce(w: WeylElement) -> WeylElement:
    """A shortest word with the same action (lexicographically smallest among them)."""
    return weyl_group(w.etype).reduce(w)


def words_equal(w: WeylElement, other: WeylElement) -> bool:
    if w.etype != other.etype:
        raise ValueError(
            f"Cannot compare words over {w.etype.value} and {other.etype.value}"
        )
    return w.matrix == other.matrix


def canonical_names(etype: EType, words: Iterable[str]) -> FrozenSet[str]:
    """Canonical reduced names of the given spellings, e.g. "213421342" -> "213242132"."""
    group = weyl_group(etype)
    return frozenset(group.element(word).name for word in words)


def length(w: WeylElement) -> int:
    return len(reduce(w))


def act(w: WeylElement, weight: AffineWeight) -> AffineWeight:
    """
    Apply the absolute action of ``w`` to an affine weight.

    Example:
        >>> print(act(WeylElement(EType.SPLIT, (2,)), lambda_s()))
        (s+1/2, -s-3/2, s+1/2, s+1/2)
    """
    return AffineWeight(apply_matrix(w.matrix, weight.coords))


def apply_matrix(matrix: Matrix, coords: Sequence) -> Tuple:
    image = []
    for row in matrix:
        total = 0
        for entry, value in zip(row, coords):
            if entry:
                total = total + entry * value
        image.append(total)
    return tuple(image)


def inversion_set(w: WeylElement) -> List[Tuple[RelativeRoot, Field]]:
    """
    The positive relative roots made negative by ``w`` inverse.

    Returns:
        List of (relative root, field label) pairs, in the datum's root order
    """
    datum = build_relative(w.etype)
    inverse = w.inverse().matrix
    result = []
    for rel in datum.relative_positive:
        image = apply_matrix(inverse, rel.representative.weight)
        if not d4().root_from_weight(image).is_positive:
            result.append((rel, rel.field))
    return result


def _sort_key(w: WeylElement):
    return (len(w.word), w.word)


def sort_elements(elements: Iterable[WeylElement]) -> List[WeylElement]:
    """Order by length, then lexicographic reduced word."""
    return sorted((reduce(w) for w in elements), key=_sort_key)


@lru_cache(maxsize=None)
def _coset_reps(etype: EType, psi: FrozenSet[int]) -> Tuple[WeylElement, ...]:
    datum = build_relative(etype)
    levi = set(datum.levi_roots(psi))
    reps = [
        w for w in weyl_group(etype).elements
        if not any(rel in levi for rel, _ in inversion_set(w))
    ]
    get_logger().debug(
        f"Coset representatives for {etype.value}, psi={sorted(psi)}: {len(reps)}"
    )
    return tuple(sorted(reps, key=_sort_key))


def coset_reps(etype: EType, psi: Iterable[int]) -> List[WeylElement]:
    """
    Minimal-length representatives of W_psi \\ W.

    Args:
        etype: Etale type selecting the relative Weyl group
        psi: Relative simple letters generating the Levi's Weyl group

    Returns:
        Representatives sorted by length, then lexicographic word
    """
    psi = frozenset(int(letter) for letter in psi)
    datum = build_relative(etype)
    for letter in psi:
        datum.validate_letter(letter)
    return list(_coset_reps(etype, psi))


def subgroup(etype: EType, letters: Iterable[int]) -> List[WeylElement]:
    """All elements of the parabolic subgroup generated by ``letters``."""
    letters = frozenset(letters)
    datum = build_relative(etype)
    for letter in letters:
        datum.validate_letter(letter)
    return [w for w in weyl_group(etype).elements if set(w.word) <= letters]
