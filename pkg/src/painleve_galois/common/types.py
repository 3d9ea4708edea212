"""Types and type aliases used in the package."""

from typing import Literal

Verdict = Literal[
    "Liouvillian-case-1",
    "Liouvillian-case-2",
    "case-3-possible-unresolved",
    "SL2",
    "undecided",
]

CaseStatus = Literal["success", "excluded", "undecided", "not-attempted"]

DegreeFormula = Literal["global", "classic", "case1"]

StrategyName = Literal["parity", "exhaustive", "aggregate"]

StrategyOutcome = Literal["excluded", "inconclusive", "candidates", "skipped"]

ReportFormat = Literal["text", "json"]
