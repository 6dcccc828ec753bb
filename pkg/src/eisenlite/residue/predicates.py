from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from ..characters import char_tag, check_compatible, chi_s, twist
from ..ctan import pole_report
from ..enums import CharKind, EType, LocalAlgebra, LocalChar, Parabolic
from ..errors import InadmissiblePlaceError, UnknownClassStructureError
from ..gk import leading_operator_coefficient
from ..logger import get_logger
from ..roots import canonical_names, format_rational, length, reduce, weyl_group
from .dotted import DottedPlaceSet
from .local import PlaceProfile

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)
FIVE_HALVES = Fraction(5, 2)


@dataclass(frozen=True)
class GlobalCase:
    """A global configuration (E, chi, s0) of the Heisenberg Eisenstein series."""
    etype: EType
    kind: CharKind
    s0: Fraction

    def __post_init__(self):
        check_compatible(self.etype, char_tag(self.kind))
        object.__setattr__(self, "s0", Fraction(self.s0))

    def __str__(self) -> str:
        return f"({self.etype.value}, {self.kind.value}, s0={format_rational(self.s0)})"


@dataclass(frozen=True)
class Term:
    """
    One summand of a class sum: the leading operator of ``member``.

    ``operator`` names the local operator whose eigenvalues scale the term
    (None: identity). ``connector`` = (w, u) supplies the rational scalar
    lead J(u, w^-1 chi_s) at s0.
    """
    member: str
    operator: Optional[str] = None
    connector: Optional[Tuple[str, str]] = None


@dataclass(frozen=True)
class ClassSum:
    members: FrozenSet[str]
    terms: Tuple[Term, ...] = ()
    spherical_only: bool = False


@dataclass(frozen=True)
class CaseData:
    classes: Tuple[ClassSum, ...]
    closed_form: Callable[[DottedPlaceSet], bool]
    description: str
    unique_quotient: bool = False


def _cls(*members: str, terms=(), spherical_only=False) -> ClassSum:
    return ClassSum(frozenset(members), tuple(terms), spherical_only)


def _star_size(dotted: DottedPlaceSet) -> int:
    return (
        dotted.count("π_-1", LocalAlgebra.FXK_FIELD)
        + dotted.count("π_(-1,1)", LocalAlgebra.SPLIT)
        + dotted.count("π_(1,-1)", LocalAlgebra.SPLIT)
    )


def _no_two_odd(dotted: DottedPlaceSet) -> bool:
    a = dotted.count("π_(1,-1)")
    b = dotted.count("π_(-1,1)")
    c = dotted.count("π_(-1,-1)")
    return (a * b) % 2 == (a * c) % 2 == (b * c) % 2


CASES: Dict[Tuple[EType, CharKind, Fraction], CaseData] = {
    (EType.CUBIC, CharKind.TRIVIAL, HALF): CaseData(
        classes=(
            _cls("21", "21212", terms=(Term("21"), Term("21212", "212", ("21", "212")))),
            _cls("212", "2121", spherical_only=True),
        ),
        closed_form=lambda dotted: dotted.size != 1,
        description="appears iff |S| != 1",
    ),
    (EType.CUBIC, CharKind.QUAD_F, HALF): CaseData(
        classes=(
            _cls("212", terms=(Term("212"),)),
            _cls("2121", terms=(Term("2121"),)),
            _cls("21212", terms=(Term("21212"),)),
        ),
        closed_form=lambda dotted: True,
        description="appears for every finite dotted set",
    ),
    (EType.FXK, CharKind.QUAD_K_NORMNONTRIVIAL, HALF): CaseData(
        classes=(
            _cls("2321", "2132132", terms=(Term("2321"), Term("2132132", "2342", ("2321", "232")))),
            _cls("21321", "213213", terms=(Term("21321"), Term("213213", "34", ("21321", "3")))),
        ),
        closed_form=lambda dotted: _star_size(dotted) % 2 == 0,
        description="appears iff |S2| + |S3(-1,1)| + |S3(1,-1)| is even",
    ),
    (EType.SPLIT, CharKind.QUAD_F, HALF): CaseData(
        classes=(
            _cls(
                "21324", "21423", "23421", "213421342",
                terms=(
                    Term("213421342"),
                    Term("21324", "flip4", ("21324", "2132")),
                    Term("21423", "flip3", ("21423", "2142")),
                    Term("23421", "flip1", ("23421", "2342")),
                ),
            ),
            _cls(
                "21342", "2134213", "2134214", "2134234",
                terms=(
                    Term("21342"),
                    Term("2134213", "flip4", ("21342", "13")),
                    Term("2134214", "flip3", ("21342", "14")),
                    Term("2134234", "flip1", ("21342", "34")),
                ),
            ),
            _cls(
                "213421", "213423", "213424", "21342134",
                terms=(
                    Term("21342134"),
                    Term("213424", "flip4", ("213424", "13")),
                    Term("213423", "flip3", ("213423", "14")),
                    Term("213421", "flip1", ("213421", "34")),
                ),
            ),
        ),
        closed_form=_no_two_odd,
        description="appears iff ab, ac, bc agree mod 2 (a, b, c counts of the three non-trivial split tags)",
    ),
}

# A unique or spherical residue: the image is the spherical constituent only.
UNIQUE_QUOTIENT_CASES = frozenset({
    (EType.SPLIT, CharKind.TRIVIAL, FIVE_HALVES),
    (EType.FXK, CharKind.TRIVIAL, FIVE_HALVES),
    (EType.CUBIC, CharKind.TRIVIAL, FIVE_HALVES),
    (EType.SPLIT, CharKind.TRIVIAL, THREE_HALVES),
    (EType.FXK, CharKind.TRIVIAL, THREE_HALVES),
    (EType.FXK, CharKind.QUAD_K_NORMTRIVIAL, THREE_HALVES),
    (EType.CUBIC, CharKind.CUBIC_E, THREE_HALVES),
    (EType.SPLIT, CharKind.TRIVIAL, HALF),
    (EType.FXK, CharKind.TRIVIAL, HALF),
    (EType.FXK, CharKind.QUAD_K_NORMTRIVIAL, HALF),
})

for _key in UNIQUE_QUOTIENT_CASES:
    CASES[_key] = CaseData(
        classes=(),
        closed_form=lambda dotted: dotted.is_empty,
        description="appears iff the dotted set is empty",
        unique_quotient=True,
    )


def case_data(case: GlobalCase) -> CaseData:
    """
    Raises:
        UnknownClassStructureError: If no class-sum data is recorded or the
        series has no pole at s0
    """
    key = (case.etype, case.kind, case.s0)
    if key not in CASES:
        raise UnknownClassStructureError(
            f"No residue class structure recorded for {case}. "
            f"Known cases: {sorted(str(GlobalCase(*k)) for k in CASES)}"
        )
    if _case_order(case) == 0:
        raise UnknownClassStructureError(f"The series is holomorphic at {case}; there is no residue")
    data = CASES[key]
    if not data.unique_quotient:
        _check_classes(case, data)
    return data


@lru_cache(maxsize=None)
def _case_order(case: GlobalCase) -> int:
    return pole_report(case.etype, case.kind, case.s0).order


@lru_cache(maxsize=None)
def _check_classes(case: GlobalCase, data: CaseData) -> None:
    report = pole_report(case.etype, case.kind, case.s0)
    found = {cls.signature for cls, net in zip(report.classes, report.net_orders) if net > 0}
    expected = {canonical_names(case.etype, cls.members) for cls in data.classes}
    if found != expected:
        raise UnknownClassStructureError(
            f"Surviving classes for {case} do not match the recorded class sums: "
            f"computed {sorted(sorted(s) for s in found)}, recorded {sorted(sorted(s) for s in expected)}"
        )


@lru_cache(maxsize=None)
def term_scalar(case: GlobalCase, connector: Optional[Tuple[str, str]]) -> Fraction:
    """Rational leading coefficient of the connecting operator, 1 without one."""
    if connector is None:
        return Fraction(1)
    group = weyl_group(case.etype)
    w, u = group.element(connector[0]), group.element(connector[1])
    if length(w) + length(u) != len(reduce(w * u)):
        raise UnknownClassStructureError(f"Connector {w} * {u} is not length-additive")
    chi = chi_s(case.etype, char_tag(case.kind), Parabolic.HEISENBERG)
    lead = leading_operator_coefficient(u, twist(w, chi), case.s0)
    if not lead.is_rational:
        raise UnknownClassStructureError(
            f"Connecting coefficient of {u} after {w} at {case} is not rational: {lead.render()}"
        )
    return lead.as_fraction()


def check_consistent(dotted: DottedPlaceSet, case: GlobalCase) -> None:
    """
    Raises:
        InadmissiblePlaceError: If a place type cannot occur for the global (E, chi)
    """
    if Fraction(dotted.s0) != case.s0:
        raise InadmissiblePlaceError(
            f"Dotted set is tagged at s0={format_rational(dotted.s0)}, case is {case}"
        )
    for place in dotted.places():
        check_place(place, case)


def check_place(place: PlaceProfile, case: GlobalCase) -> None:
    """Raise InadmissiblePlaceError if the place type cannot occur for the global case."""
    problem = None
    if case.etype == EType.SPLIT and place.local_algebra != LocalAlgebra.SPLIT:
        problem = "E split forces split places"
    elif case.etype == EType.FXK and place.local_algebra == LocalAlgebra.INERT_FIELD:
        problem = "E = F x K has no inert cubic places"
    elif case.kind == CharKind.TRIVIAL and place.local_char != LocalChar.TRIVIAL:
        problem = "a trivial global character is locally trivial"
    elif case.kind == CharKind.QUAD_K_NORMTRIVIAL and place.local_char == LocalChar.QUAD_NORMNONTRIVIAL:
        problem = "chi o Nm_K = Id holds at every place"
    if problem:
        raise InadmissiblePlaceError(
            f"Place {place.id} ({place.local_algebra.value}, {place.local_char.value}) "
            f"is inconsistent with {case}: {problem}"
        )


def class_sums(dotted: DottedPlaceSet, case: GlobalCase) -> List[Fraction]:
    """Scalar by which each surviving class sum acts on the dotted constituent."""
    data = case_data(case)
    check_consistent(dotted, case)
    if data.unique_quotient:
        return [Fraction(1 if dotted.is_empty else 0)]
    sums = []
    for cls in data.classes:
        if cls.spherical_only:
            sums.append(Fraction(1 if dotted.is_empty else 0))
            continue
        total = Fraction(0)
        for term in cls.terms:
            total += term_scalar(case, term.connector) * dotted.eigenvalue(term.operator)
        sums.append(total)
    return sums


def appears(dotted: DottedPlaceSet, case: GlobalCase) -> bool:
    """
    Whether the constituent tagged by ``dotted`` survives in the residue image.

    Evaluates each surviving class sum on the constituent; it appears when
    some sum acts by a nonzero scalar.

    Example:
        >>> case = GlobalCase(EType.CUBIC, CharKind.TRIVIAL, Fraction(1, 2))
        >>> appears(DottedPlaceSet.build("1/2", {inert_place: "π_-2"}), case)
        False
    """
    sums = class_sums(dotted, case)
    result = any(value != 0 for value in sums)
    get_logger().debug(f"{dotted} under {case}: class sums {[str(v) for v in sums]} -> {result}")
    return result


def appears_closed_form(dotted: DottedPlaceSet, case: GlobalCase) -> bool:
    """The closed-form description of the residue image."""
    data = case_data(case)
    check_consistent(dotted, case)
    return data.closed_form(dotted)
