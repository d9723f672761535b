"""Axiom check reports: exact residuals located at basis multi-indices."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import vec_sub


@dataclass(frozen=True)
class Violation:
    axiom: str
    index: tuple
    residual: tuple


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple = ()
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def merged(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.violations + other.violations, self.checked + other.checked)

    def failing_axioms(self) -> tuple:
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return tuple(seen)

    def format(self, labels=None, verbose: bool = False) -> str:
        """Human-readable summary; residual entries printed exactly."""
        lines = []
        if self.passed:
            lines.append(f"PASS ({self.checked} instances checked)")
        else:
            lines.append(f"FAIL ({len(self.violations)} violations in {self.checked} instances)")
        shown = self.violations if verbose else self.violations[:20]
        for v in shown:
            idx = ",".join(_label(i, labels) for i in v.index)
            res = " ".join(str(x) for x in v.residual)
            lines.append(f"  violation {v.axiom} at basis ({idx}): residual [{res}]")
        if len(self.violations) > len(shown):
            lines.append(f"  ... {len(self.violations) - len(shown)} more")
        return "\n".join(lines)


def _label(i, labels):
    if labels is not None and isinstance(i, int) and 0 <= i < len(labels):
        return labels[i]
    return str(i)


class ConstructionError(ValueError):
    """A structure constructor's verification failed; carries the report."""

    def __init__(self, message: str, report: AxiomReport | None = None):
        if report is not None and not report.passed:
            message = f"{message}: {', '.join(report.failing_axioms())}"
        super().__init__(message)
        self.report = report


@dataclass
class ReportBuilder:
    violations: list = field(default_factory=list)
    checked: int = 0

    def check_vec(self, axiom: str, index: tuple, lhs, rhs) -> None:
        self.checked += 1
        residual = vec_sub(lhs, rhs)
        if any(residual):
            self.violations.append(Violation(axiom, index, tuple(residual)))

    def check_scalar(self, axiom: str, index: tuple, lhs, rhs) -> None:
        self.checked += 1
        residual = lhs - rhs
        if residual:
            self.violations.append(Violation(axiom, index, (residual,)))

    def check_matrix(self, axiom: str, index: tuple, lhs, rhs) -> None:
        self.checked += 1
        residual = lhs.sub(rhs)
        if not residual.is_zero():
            self.violations.append(Violation(axiom, index, tuple(residual.entries)))

    def fail(self, axiom: str, index: tuple, residual=()) -> None:
        self.checked += 1
        self.violations.append(Violation(axiom, index, tuple(residual)))

    def report(self) -> AxiomReport:
        return AxiomReport(tuple(self.violations), self.checked)
