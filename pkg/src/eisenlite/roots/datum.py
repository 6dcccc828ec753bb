from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple
import numpy as np

# Simply-laced star: node 2 is the central vertex.
CARTAN = np.array(
    [
        [2, -1, 0, 0],
        [-1, 2, -1, -1],
        [0, -1, 2, 0],
        [0, -1, 0, 2],
    ],
    dtype=np.int64,
)

RANK = 4

_POSITIVE_COEFFICIENTS = (
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (0, 1, 1, 0), (0, 1, 0, 1),
    (1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1),
    (1, 1, 1, 1),
    (1, 2, 1, 1),
)


@dataclass(frozen=True)
class Root:
    """
    A root of D4 given by its simple-root coefficients.

    The weight vector (fundamental-weight coordinates) is the matching
    combination of Cartan rows. Since D4 is simply laced the coroot has
    the same coefficients, so ``pairing`` is a plain dot product.
    """
    coefficients: Tuple[int, int, int, int]

    @property
    def weight(self) -> Tuple[int, int, int, int]:
        return tuple(int(x) for x in np.asarray(self.coefficients, dtype=np.int64) @ CARTAN)

    @property
    def height(self) -> int:
        return sum(self.coefficients)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    @property
    def label(self) -> str:
        return "".join(str(c) for c in self.coefficients)

    def coroot(self) -> Tuple[int, int, int, int]:
        return self.coefficients

    def pairing(self, weight: Sequence):
        """<weight, coroot>, exact for ints, Fractions and sympy expressions."""
        total = 0
        for c, x in zip(self.coefficients, weight):
            if c:
                total = total + c * x
        return total

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coefficients))

    def __str__(self) -> str:
        return self.label if self.is_positive else f"-{(-self).label}"


class RootDatumD4:
    """The absolute D4 root datum in fundamental-weight coordinates."""

    def __init__(self):
        self.cartan = CARTAN.copy()
        self.simple_roots: List[Tuple[int, ...]] = [tuple(int(x) for x in row) for row in CARTAN]
        self.positive_roots: List[Root] = sorted(
            (Root(c) for c in _POSITIVE_COEFFICIENTS),
            key=lambda r: (r.height, tuple(-c for c in r.coefficients)),
        )
        self.roots: List[Root] = self.positive_roots + [-r for r in self.positive_roots]
        self._by_weight: Dict[Tuple[int, ...], Root] = {r.weight: r for r in self.roots}

    def coroot(self, root: Root) -> Tuple[int, int, int, int]:
        return root.coroot()

    def root_from_weight(self, weight: Sequence[int]) -> Root:
        key = tuple(int(x) for x in weight)
        try:
            return self._by_weight[key]
        except KeyError:
            raise ValueError(f"Weight {key} is not a root of D4") from None

    def reflection(self, node: int) -> np.ndarray:
        """
        Matrix of the simple reflection at ``node`` (1-based) on weight columns.

        s_i(v) = v - v_i * alpha_i, alpha_i being row i of the Cartan matrix.
        """
        if not 1 <= node <= RANK:
            raise ValueError(f"Invalid node {node}. Must be one of 1, 2, 3, 4.")
        i = node - 1
        unit = np.zeros(RANK, dtype=np.int64)
        unit[i] = 1
        return np.eye(RANK, dtype=np.int64) - np.outer(CARTAN[i], unit)


_DATUM = None

def d4() -> RootDatumD4:
    global _DATUM
    if _DATUM is None:
        _DATUM = RootDatumD4()
    return _DATUM
