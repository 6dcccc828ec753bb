import argparse
import json
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional

try:
    from typing import Self # type: ignore[attr-defined]
except ImportError:
    from typing_extensions import Self

from ..enums import CharKind, EType, OutputFormat, Parabolic
from ..roots import parse_rational

COMMANDS = ("sigma", "classes", "gk", "twist", "pole-order", "residue", "jacquet", "verify")
SUITES = ("appendix-b", "paper-tables")
SUITE_ALIASES = {"normalized-series": "appendix-b", "golden-tables": "paper-tables"}


def rational_arg(text: str) -> Fraction:
    """argparse type for exact rationals; malformed input is a usage error."""
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _enum(enum_cls, value, option: str):
    if value is None or isinstance(value, enum_cls):
        return value
    try:
        return enum_cls(value)
    except ValueError:
        raise ValueError(
            f"Invalid {option} {value!r}. Must be one of {[e.value for e in enum_cls]}."
        ) from None


@dataclass
class RunConfig:
    """Everything one CLI invocation needs."""
    command: str
    etype: Optional[EType] = None
    char: Optional[CharKind] = None
    s0: Optional[Fraction] = None
    parabolic: Parabolic = Parabolic.HEISENBERG
    min_order: int = 1
    word: Optional[str] = None
    after: Optional[str] = None
    profiles: Optional[str] = None
    bound: int = 3
    processes: int = 1
    suite: Optional[str] = None
    output_format: OutputFormat = OutputFormat.JSON
    verbose: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Invalid command {self.command!r}. Must be one of {list(COMMANDS)}.")
        self.etype = _enum(EType, self.etype, "algebra")
        self.char = _enum(CharKind, self.char, "char")
        self.parabolic = _enum(Parabolic, self.parabolic, "parabolic")
        self.output_format = _enum(OutputFormat, self.output_format, "format")
        if self.s0 is not None and not isinstance(self.s0, Fraction):
            self.s0 = parse_rational(str(self.s0))
        if self.min_order < 0:
            raise ValueError(f"Invalid min_order {self.min_order}. Must be >= 0.")
        if self.bound < 0:
            raise ValueError(f"Invalid bound {self.bound}. Must be >= 0.")
        if self.processes < 1:
            raise ValueError(f"Invalid processes {self.processes}. Must be >= 1.")
        if self.suite is not None:
            self.suite = SUITE_ALIASES.get(self.suite, self.suite)
        if self.suite is not None and self.suite not in SUITES:
            raise ValueError(f"Invalid suite {self.suite!r}. Must be one of {list(SUITES)}.")

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = ", ".join(f"--{_FLAGS.get(name, name).replace('_', '-')}" for name in missing)
            raise ValueError(f"Command {self.command!r} requires {flags}")

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> Self:
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown configuration keys {unknown}. Known keys: {sorted(known)}.")
        return cls(**dict(data))

    @classmethod
    def from_args(cls, args: argparse.Namespace, defaults: Optional[Mapping[str, Any]] = None) -> Self:
        """Command-line values override ``defaults`` (e.g. a --config file)."""
        values: Dict[str, Any] = dict(defaults or {})
        for f in fields(cls):
            value = getattr(args, f.name, None)
            if value is not None:
                values[f.name] = value
        return cls.from_mapping(values)

    def to_json(self) -> dict:
        data = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, Fraction):
                value = str(value)
            elif hasattr(value, "value"):
                value = value.value
            data[f.name] = value
        return data


_FLAGS = {"etype": "algebra", "output_format": "format"}


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Read a JSON object of RunConfig fields.

    Raises:
        OSError: If the file cannot be read
        ValueError: If the content is not a JSON object or names unknown keys
    """
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValueError(f"Config file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError(f"Config file {path} must contain a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValueError(f"Unknown configuration keys {unknown} in {path}. Known keys: {sorted(known)}.")
    return data
