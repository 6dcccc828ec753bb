import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Mapping, Tuple

import multiprocess as mp
import sympy
from tqdm import tqdm

from ..characters import char_tag, chi_s, chi_tilde, levi_letters, render_character, stabilizer, twist
from ..ctan import eisenstein_pole_order, sigma_table
from ..enums import EType, Field, Parabolic
from ..gk import j_factor
from ..jacquet import MultiplicityQuery, multiplicity, orbit_table
from ..lfun import AtomCharacter, LAtom, LProduct
from ..logger import get_logger
from ..residue import DottedPlaceSet, GlobalCase, PlaceProfile, appears, appears_closed_form
from ..roots import AffineWeight, act, coset_reps, parse_rational, s, weyl_group
from ..siegelweil import normalization_report
from .report import RunResult

GOLDEN_ENV = "EISENLITE_GOLDEN_DIR"
GOLDEN_VERSION = "v1"
FAMILIES = ("structure", "sigma_classes", "pole_orders", "twists", "gk", "residue", "jacquet")


def golden_dir() -> Path:
    override = os.environ.get(GOLDEN_ENV)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent.parent / "golden" / GOLDEN_VERSION


def load_family(name: str, directory: Path = None) -> dict:
    path = (directory or golden_dir()) / f"{name}.json"
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


@dataclass(frozen=True)
class CheckResult:
    family: str
    key: str
    ok: bool
    detail: str = ""
    source: str = ""

    def to_json(self) -> dict:
        return {"family": self.family, "key": self.key, "source": self.source, "ok": self.ok, "detail": self.detail}

    def render(self) -> str:
        text = f"[{'ok' if self.ok else 'MISMATCH'}] {self.family}:{self.key}"
        if self.source:
            text += f" ({self.source})"
        return text + (f" - {self.detail}" if self.detail else "")


def _words(etype: EType, words) -> set:
    group = weyl_group(etype)
    return {group.element(w).name for w in words}


def _check_structure(entry: Mapping) -> List[Tuple[str, bool, str]]:
    etype = EType(entry["etype"])
    letters = levi_letters(etype, Parabolic.HEISENBERG)
    reps = coset_reps(etype, letters)
    stab = stabilizer(chi_tilde(etype, entry["char"]), 0, letters)
    found = {
        "group_order": weyl_group(etype).order,
        "coset_reps": len(reps),
        "levi_letters": list(letters),
        "chi_tilde_stabilizer": [w.name for w in stab],
    }
    out = [(name, found[name] == entry[name], f"got {found[name]}") for name in found]
    rho = AffineWeight.of(1, 1, 1, 1)
    image = act(weyl_group(etype).longest(), rho)
    out.append(("longest_negates_rho", image == AffineWeight.of(-1, -1, -1, -1), f"got {image}"))
    return out


def _check_sigma(entry: Mapping) -> List[Tuple[str, bool, str]]:
    etype = EType(entry["etype"])
    table = sigma_table(etype, Parabolic(entry["parabolic"]), entry["char"], parse_rational(entry["s0"]))
    low = entry["min_order"]
    high = entry.get("max_order")
    out = []
    if "sigma" in entry:
        got = {row.element.name for row in table.rows if row.order >= low and (high is None or row.order <= high)}
        out.append(("sigma", got == _words(etype, entry["sigma"]), f"got {sorted(got)}"))
    if "classes" in entry:
        got = {frozenset(w.name for w in cls.members) for cls in table.classes(low)}
        expected = {frozenset(_words(etype, members)) for members in entry["classes"]}
        out.append(("classes", got == expected, f"got {sorted(sorted(c) for c in got)}"))
    return out


def _check_poles(entry: Mapping, points) -> List[Tuple[str, bool, str]]:
    etype = EType(entry["etype"])
    out = []
    for point, expected in zip(points, entry["orders"]):
        got = eisenstein_pole_order(etype, entry["char"], parse_rational(point))
        out.append((f"s0={point}", got == expected, f"got {got}"))
    return out


def _check_twist(entry: Mapping) -> List[Tuple[str, bool, str]]:
    etype = EType(entry["etype"])
    w = weyl_group(etype).element(entry["word"])
    got = render_character(twist(w, chi_s(etype, entry["char"])), parse_rational(entry["s0"]))
    return [("display", got == entry["display"], f"got {got}")]


def _expected_product(entry: Mapping, quadratic: bool) -> LProduct:
    atoms = []
    for field_name, argument, label, exponent in entry["atoms"]:
        character = AtomCharacter(label, quadratic) if label else AtomCharacter()
        atoms.append((LAtom(Field(field_name), sympy.sympify(argument, locals={"s": s}), character), exponent))
    return LProduct(atoms)


def _check_gk(entry: Mapping) -> List[Tuple[str, bool, str]]:
    etype = EType(entry["etype"])
    tag = char_tag(entry["char"])
    group = weyl_group(etype)
    chi = twist(group.element(entry.get("after", "id")), chi_s(etype, tag))
    s0 = parse_rational(entry["s0"])
    result = j_factor(group.element(entry["word"]), chi, s0)
    out = []
    if "atoms" in entry:
        expected = _expected_product(entry, tag.is_quadratic)
        out.append(("product", result.product == expected, f"got {result.product.render()}"))
    if "limit" in entry:
        ok = result.order == 0 and result.leading.is_rational and result.leading.as_fraction() == parse_rational(entry["limit"])
        out.append(("limit", ok, f"got order {result.order}, {result.leading.render()}"))
    if "leading" in entry:
        ok = result.order == entry["order"] and result.leading.render() == entry["leading"]
        out.append(("leading", ok, f"got order {result.order}, {result.leading.render()}"))
    return out


def _check_residue(entry: Mapping) -> List[Tuple[str, bool, str]]:
    case = GlobalCase(EType(entry["etype"]), char_tag(entry["char"]).kind, parse_rational(entry["s0"]))
    labels = {
        PlaceProfile.from_json({k: v for k, v in place.items() if k != "tag"}): place["tag"]
        for place in entry["places"]
    }
    dotted = DottedPlaceSet.build(case.s0, labels)
    got = appears(dotted, case)
    closed = appears_closed_form(dotted, case)
    return [
        ("appears", got == entry["appears"], f"got {got}"),
        ("closed_form", closed == entry["appears"], f"got {closed}"),
    ]


def _check_jacquet(entry: Mapping) -> List[Tuple[str, bool, str]]:
    etype = EType(entry["etype"])
    s0 = parse_rational(entry["s0"])
    chi = chi_s(etype, entry["char"])
    count = multiplicity(MultiplicityQuery(chi, chi, s0))
    total = sum(e.multiplicity for e in orbit_table(chi, s0))
    return [
        ("multiplicity", count == entry["multiplicity"], f"got {count}"),
        ("orbit_total", total == entry["orbit_total"], f"got {total}"),
    ]


def _check_entry(task) -> List[CheckResult]:
    family, entry, extra = task
    checkers: Dict[str, Callable] = {
        "structure": _check_structure,
        "sigma_classes": _check_sigma,
        "pole_orders": lambda e: _check_poles(e, extra),
        "twists": _check_twist,
        "gk": _check_gk,
        "residue": _check_residue,
        "jacquet": _check_jacquet,
    }
    try:
        outcomes = checkers[family](entry)
    except ValueError as exc:
        return [CheckResult(family, entry["key"], False, f"error: {exc}", entry.get("source", ""))]
    return [
        CheckResult(family, f"{entry['key']}/{name}", ok, "" if ok else detail, entry.get("source", ""))
        for name, ok, detail in outcomes
    ]


def check_family(family: str, directory: Path = None) -> List[CheckResult]:
    """Check one golden file in-process."""
    data = load_family(family, directory)
    extra = data.get("points")
    return [result for entry in data["entries"] for result in _check_entry((family, entry, extra))]


def _summary(suite: str, checks: List[dict], lines: List[str]) -> RunResult:
    failed = sum(1 for c in checks if not (c.get("ok") if "ok" in c else c.get("matches")))
    report = {"suite": suite, "checks": checks, "passed": len(checks) - failed, "failed": failed}
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    get_logger().info(f"verify {suite}: {len(checks) - failed}/{len(checks)} passed")
    return RunResult(1 if failed else 0, report, lines)


def verify_normalized_series() -> RunResult:
    """Recompute every constant of the normalized-series evaluation."""
    lines = normalization_report()
    return _summary("appendix-b", [line.to_json() for line in lines], [line.render() for line in lines])


def verify_golden_tables(directory: Path = None, processes: int = 1, progress: bool = False) -> RunResult:
    """
    Check every golden table against the engine.

    Rows may be checked in parallel; the report keeps file order.
    """
    directory = directory or golden_dir()
    tasks = []
    for family in FAMILIES:
        data = load_family(family, directory)
        extra = data.get("points")
        tasks.extend((family, entry, extra) for entry in data["entries"])

    if processes > 1:
        with mp.Pool(processes=processes) as pool:
            batches = list(tqdm(pool.imap(_check_entry, tasks), total=len(tasks), desc="Golden rows", disable=not progress))
    else:
        batches = [_check_entry(task) for task in tqdm(tasks, desc="Golden rows", disable=not progress)]

    results = [result for batch in batches for result in batch]
    normalized = normalization_report()
    checks = [r.to_json() for r in results] + [
        dict(family="normalized-series", key=line.label, ok=line.matches, detail=line.error or "") for line in normalized
    ]
    lines = [r.render() for r in results if not r.ok] + [line.render() for line in normalized if not line.matches]
    return _summary("paper-tables", checks, lines)
