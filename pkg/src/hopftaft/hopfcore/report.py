"""Pass/fail records with witnesses for axiom sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .vectors import first_difference


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple | None = None
    lhs: Any = None
    rhs: Any = None
    checked: int = 0

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: pass ({self.checked} checks)"
        return f"{self.name}: FAIL at {self.witness}: {self.lhs} != {self.rhs}"

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if not self.passed:
            out["witness"] = list(self.witness) if self.witness is not None else None
            out["lhs"] = str(self.lhs)
            out["rhs"] = str(self.rhs)
        return out


@dataclass
class AxiomReport:
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> AxiomCheck | None:
        bad = self.failures()
        return bad[0] if bad else None

    def add(self, check: AxiomCheck) -> AxiomCheck:
        self.checks.append(check)
        return check

    def extend(self, other: "AxiomReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(AxiomCheck(prefix + c.name, c.passed, c.witness, c.lhs, c.rhs, c.checked))

    def summary(self) -> str:
        lines = [c.describe() for c in self.checks]
        n_fail = len(self.failures())
        if n_fail:
            lines.append(f"{n_fail} of {len(self.checks)} axiom families FAIL")
        else:
            lines.append(f"all {len(self.checks)} axiom families pass")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


class _Sweep:
    """Accumulates one axiom family; records only the first failure."""

    def __init__(self, name: str):
        self.check = AxiomCheck(name, True)

    def compare(self, index: tuple, lhs: dict, rhs: dict) -> bool:
        self.check.checked += 1
        if lhs == rhs:
            return True
        key = first_difference(lhs, rhs)
        if key is None:
            return True
        if self.check.passed:
            self.check.passed = False
            coord = key if isinstance(key, tuple) else (key,)
            self.check.witness = tuple(index) + coord
            self.check.lhs = lhs.get(key, 0)
            self.check.rhs = rhs.get(key, 0)
        return False

    def compare_scalar(self, index: tuple, lhs, rhs) -> bool:
        self.check.checked += 1
        if lhs == rhs:
            return True
        if self.check.passed:
            self.check.passed = False
            self.check.witness = tuple(index)
            self.check.lhs, self.check.rhs = lhs, rhs
        return False
