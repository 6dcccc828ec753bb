from dataclasses import dataclass
from typing import Tuple

from ..characters import char_tag, check_compatible
from ..enums import EType, Parabolic
from .rules import applicable_rule, net_order
from .sigma import EquivClass, SigmaTable, sigma_table


@dataclass(frozen=True)
class PoleOrderReport:
    """Per-class raw and net orders behind an Eisenstein pole order."""
    table: SigmaTable
    classes: Tuple[EquivClass, ...]
    net_orders: Tuple[int, ...]

    @property
    def order(self) -> int:
        return max(self.net_orders, default=0)

    def to_json(self) -> dict:
        data = self.table.to_json(1)
        rules = []
        for cls in self.classes:
            rule = applicable_rule(self.table.etype, self.table.tag.kind, self.table.s0, cls)
            rules.append(rule.citation if rule else None)
        for entry, net, cls, citation in zip(data["classes"], self.net_orders, self.classes, rules):
            entry["max_order"] = cls.max_order
            entry["net_order"] = net
            entry["rule"] = citation
        data["net_order"] = self.order
        return data


def pole_report(etype: EType, tag, s0) -> PoleOrderReport:
    tag = char_tag(tag)
    check_compatible(etype, tag)
    table = sigma_table(etype, Parabolic.HEISENBERG, tag, s0)
    found = table.classes(1)
    nets = tuple(net_order(etype, tag.kind, table.s0, cls) for cls in found)
    return PoleOrderReport(table, tuple(found), nets)


def eisenstein_pole_order(etype: EType, tag, s0) -> int:
    """
    Net pole order of the Heisenberg Eisenstein series at s0.

    Example:
        >>> eisenstein_pole_order(EType.SPLIT, CharKind.TRIVIAL, Fraction(3, 2))
        2
    """
    return pole_report(etype, tag, s0).order
