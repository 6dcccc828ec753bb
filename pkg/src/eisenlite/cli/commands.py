from typing import Callable, Dict

from ..characters import act_character, char_tag, chi_s, render_character, render_weight, twist
from ..ctan import pole_report, sigma_table
from ..gk import j_factor
from ..jacquet import MultiplicityQuery, multiplicity, orbit_table
from ..logger import get_logger
from ..residue import GlobalCase, enumerate_admissible, load_profiles
from ..roots import format_rational, weyl_group
from .config import RunConfig
from .report import RunResult
from .verify import verify_normalized_series, verify_golden_tables


def _params(config: RunConfig) -> dict:
    return {
        "etype": config.etype.value,
        "char": config.char.value,
        "s0": format_rational(config.s0) if config.s0 is not None else None,
    }


def run_sigma(config: RunConfig) -> RunResult:
    config.require("etype", "char", "s0")
    table = sigma_table(config.etype, config.parabolic, config.char, config.s0)
    report = table.to_json(config.min_order)
    lines = [f"Sigma (order >= {config.min_order}): {', '.join(r['word'] for r in report['rows']) or '-'}"]
    for row in report["rows"]:
        lines.append(f"  w{row['word']}: order {row['order']}, w^-1·χ_s = {row['twisted_display']}")
    return RunResult(0, report, lines)


def run_classes(config: RunConfig) -> RunResult:
    config.require("etype", "char", "s0")
    table = sigma_table(config.etype, config.parabolic, config.char, config.s0)
    report = table.to_json(config.min_order)
    lines = []
    for entry in report["classes"]:
        members = ", ".join(f"w{w}" for w in entry["members"])
        lines.append(f"class {entry['id']}: {{{members}}}")
    return RunResult(0, report, lines or ["no classes"])


def run_gk(config: RunConfig) -> RunResult:
    config.require("etype", "char", "word")
    group = weyl_group(config.etype)
    chi = chi_s(config.etype, char_tag(config.char), config.parabolic)
    if config.after:
        chi = twist(group.element(config.after), chi)
    w = group.element(config.word)
    result = j_factor(w, chi, config.s0)
    report = dict(_params(config), word=w.name, after=config.after, **result.to_json())
    lines = [f"J({w}) = {result.product.render()}"]
    if result.order is not None:
        lines.append(f"order {result.order} at s0={format_rational(config.s0)}, leading {result.leading.render()}")
    return RunResult(0, report, lines)


def run_twist(config: RunConfig) -> RunResult:
    config.require("etype", "char", "word")
    w = weyl_group(config.etype).element(config.word)
    twisted = twist(w, chi_s(config.etype, char_tag(config.char), config.parabolic))
    display = render_character(twisted, config.s0)
    report = dict(
        _params(config),
        word=w.name,
        character=twisted.to_json(),
        weight=render_weight(twisted, config.s0),
        display=display,
    )
    return RunResult(0, report, [f"{w}^-1·χ_s = {display}"])


def run_pole_order(config: RunConfig) -> RunResult:
    config.require("etype", "char", "s0")
    report = pole_report(config.etype, config.char, config.s0)
    data = report.to_json()
    lines = [f"pole order {report.order} at s0={format_rational(config.s0)}"]
    for entry in data["classes"]:
        lines.append(
            f"  {{{', '.join('w' + w for w in entry['members'])}}}: "
            f"max {entry['max_order']}, net {entry['net_order']}"
            + (f" ({entry['rule']})" if entry["rule"] else "")
        )
    return RunResult(0, data, lines)


def run_residue(config: RunConfig) -> RunResult:
    config.require("etype", "char", "s0", "profiles")
    profiles = load_profiles(config.profiles)
    case = GlobalCase(config.etype, config.char, config.s0)
    rows = enumerate_admissible(
        profiles, config.bound, case, processes=config.processes, progress=config.verbose
    )
    report = dict(_params(config), bound=config.bound, dotted_sets=[row.to_json() for row in rows])
    lines = []
    for row in rows:
        verdict = "appears" if row.appears else "absent"
        flag = "" if row.agrees else "  [closed form disagrees]"
        lines.append(f"{row.dotted}: {verdict}{flag}")
    status = 0 if all(row.agrees for row in rows) else 1
    return RunResult(status, report, lines)


def run_jacquet(config: RunConfig) -> RunResult:
    config.require("etype", "char", "s0")
    inducing = chi_s(config.etype, char_tag(config.char), config.parabolic)
    target = inducing
    if config.word:
        target = act_character(weyl_group(config.etype).element(config.word), inducing)
    count = multiplicity(MultiplicityQuery(inducing, target, config.s0))
    table = orbit_table(inducing, config.s0)
    report = dict(
        _params(config),
        target=render_character(target, config.s0),
        target_weight=render_weight(target, config.s0),
        multiplicity=count,
        orbit=[entry.to_json(config.s0) for entry in table],
    )
    lines = [f"multiplicity of {render_character(target, config.s0)}: {count}"]
    lines.extend(f"  {e.multiplicity} x {render_character(e.character)}" for e in table)
    return RunResult(0, report, lines)


def run_verify(config: RunConfig) -> RunResult:
    config.require("suite")
    if config.suite == "appendix-b":
        return verify_normalized_series()
    return verify_golden_tables(processes=config.processes, progress=config.verbose)


COMMAND_HANDLERS: Dict[str, Callable[[RunConfig], RunResult]] = {
    "sigma": run_sigma,
    "classes": run_classes,
    "gk": run_gk,
    "twist": run_twist,
    "pole-order": run_pole_order,
    "residue": run_residue,
    "jacquet": run_jacquet,
    "verify": run_verify,
}


def run(config: RunConfig) -> RunResult:
    """
    Execute one command.

    Returns:
        RunResult with status 0 on success and 1 on a verification mismatch

    Raises:
        ValueError: On invalid parameters
        OSError: If an input file cannot be read
    """
    get_logger().info(f"Running {config.command}")
    return COMMAND_HANDLERS[config.command](config)
