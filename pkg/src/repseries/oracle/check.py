"""Compare the fast paths against the brute-force oracle for one group."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..classes import class_table, combinatorial_class_table, default_cap, enumerate_class_table
from ..exactpoly import UniPoly
from ..groups import GroupSpec, degrees, reflection_generators
from ..series import hom_series, rep_series, smash_series
from .brute import brute_rep_series_many


@dataclass
class Check:
    name: str
    parameter: int | None
    passed: bool
    detail: str = ""


@dataclass
class CheckReport:
    group: GroupSpec
    weyl_order: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, parameter: int | None, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, parameter, bool(passed), detail))

    def to_json(self) -> dict:
        return {
            "group": self.group.canonical_name,
            "weyl_order": str(self.weyl_order),
            "passed": self.passed,
            "checks": [
                {"name": c.name, "parameter": c.parameter, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        lines = [f"group {self.group.canonical_name}, |W| = {self.weyl_order}"]
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            param = "" if c.parameter is None else f" [{c.parameter}]"
            lines.append(f"  {tag} {c.name}{param}" + (f": {c.detail}" if c.detail else ""))
        lines.append("all checks passed" if self.passed else "SOME CHECKS FAILED")
        return "\n".join(lines)


def cross_check(g: GroupSpec, n_max: int = 3, k_max: int = 3, cap: int | None = None) -> CheckReport:
    """Run every consistency check for ``g`` with ``n <= n_max``, ``k <= k_max``.

    Raises :class:`repseries.classes.CapExceeded` when ``g`` is too large
    to enumerate.
    """
    cap = default_cap() if cap is None else cap
    enumerated = enumerate_class_table(g, cap)
    report = CheckReport(g, enumerated.weyl_order)
    report.add("weyl order", None, enumerated.weyl_order == g.weyl_order,
               f"closure {enumerated.weyl_order}, expected {g.weyl_order}")
    if g.is_classical:
        report.add("combinatorial table == enumerated table", None,
                   combinatorial_class_table(g) == enumerated)
    else:
        report.add("factorwise table == enumerated table", None, class_table(g, cap) == enumerated)
    deg = degrees(g)
    report.add("product of degrees == |W|", None, deg.product == enumerated.weyl_order)

    ns = list(range(n_max + 1))
    brute = brute_rep_series_many(reflection_generators(g), ns, cap, g.rank)
    for n, b in zip(ns, brute):
        fast = rep_series(enumerated, n)
        report.add("rep_series == brute force", n, fast == b, str(fast))

    smash = [smash_series(enumerated, k) for k in range(max(n_max, k_max) + 1)]
    for k in range(k_max + 1):
        report.add("smash_series integral and nonnegative", k,
                   smash[k].is_integral() and all(c >= 0 for c in smash[k].coeffs))
    for n in ns:
        total = UniPoly("s")
        for k in range(n + 1):
            total = total + smash[k] * math.comb(n, k)
        report.add("sum_k C(n,k) smash(k) == rep(n)", n, total == rep_series(enumerated, n))

    expected = UniPoly("q", (1,))
    for d in deg.degrees:
        expected = expected * UniPoly("q", [1] + [0] * (2 * d - 2) + [1])
    hom1 = hom_series(enumerated, deg, 1)
    report.add("hom_series(n=1) == prod(1 + q^(2d-1))", 1, hom1 == expected, str(hom1))
    return report
