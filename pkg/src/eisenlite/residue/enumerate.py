import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence

import multiprocess as mp
from tqdm import tqdm

from ..logger import get_logger
from ..roots import format_rational
from .dotted import DottedPlaceSet
from .local import PlaceProfile
from .predicates import GlobalCase, appears, appears_closed_form, case_data, check_place, class_sums


@dataclass(frozen=True)
class LabelledDottedSet:
    """A dotted set with the verdicts of both residue predicates."""
    dotted: DottedPlaceSet
    appears: bool
    closed_form: bool
    class_sums: tuple

    @property
    def agrees(self) -> bool:
        return self.appears == self.closed_form

    def to_json(self) -> dict:
        data = self.dotted.to_json()
        data.update({
            "appears": self.appears,
            "closed_form": self.closed_form,
            "class_sums": [format_rational(v) for v in self.class_sums],
        })
        return data


def candidates(profiles: Sequence[PlaceProfile], bound: int, s0) -> Iterator[DottedPlaceSet]:
    """Every dotted set on at most ``bound`` of the given places."""
    s0 = Fraction(s0)
    options = []
    for place in profiles:
        tags = [tag for tag in place.quotients(s0) if not tag.spherical]
        if tags:
            options.append((place, tags))
    for size in range(min(bound, len(options)) + 1):
        for chosen in itertools.combinations(options, size):
            for tags in itertools.product(*(t for _, t in chosen)):
                yield DottedPlaceSet(s0, tuple(zip((p for p, _ in chosen), tags)))


def _label(args) -> LabelledDottedSet:
    dotted, case = args
    return LabelledDottedSet(
        dotted,
        appears(dotted, case),
        appears_closed_form(dotted, case),
        tuple(class_sums(dotted, case)),
    )


def enumerate_admissible(
    profiles: Sequence[PlaceProfile],
    bound: int,
    case: GlobalCase,
    processes: int = 1,
    progress: bool = False,
) -> List[LabelledDottedSet]:
    """
    Enumerate dotted sets of bounded size and label them by both predicates.

    Args:
        profiles: Available places
        bound: Maximal number of non-spherical places
        case: Global (E, chi, s0)
        processes: Worker processes (1: run in-process)
        progress: Show a progress bar

    Returns:
        Labelled dotted sets, ordered by size then place ids

    Raises:
        InadmissiblePlaceError: If a place cannot occur for the global case
        UnknownClassStructureError: If the case has no recorded class sums

    Example:
        >>> places = [PlaceProfile(f"v{i}", LocalAlgebra.INERT_FIELD, LocalChar.TRIVIAL) for i in range(3)]
        >>> rows = enumerate_admissible(places, 3, GlobalCase(EType.CUBIC, CharKind.TRIVIAL, Fraction(1, 2)))
        >>> sum(row.appears for row in rows)
        5
    """
    if bound < 0:
        raise ValueError(f"Invalid bound {bound}. Must be >= 0.")
    case_data(case)
    for place in profiles:
        check_place(place, case)

    work = [(dotted, case) for dotted in candidates(profiles, bound, case.s0)]
    get_logger().info(f"Labelling {len(work)} dotted sets for {case} with {processes} process(es)")

    if processes > 1:
        with mp.Pool(processes=processes) as pool:
            results = list(tqdm(
                pool.imap(_label, work),
                total=len(work),
                desc="Dotted sets",
                disable=not progress,
            ))
    else:
        results = [_label(item) for item in tqdm(work, desc="Dotted sets", disable=not progress)]

    mismatches = [r for r in results if not r.agrees]
    if mismatches:
        get_logger().warning(f"{len(mismatches)} dotted sets where the predicates disagree")
    return results

