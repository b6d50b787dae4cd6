"""reports.py - Law-check results and run reports.

Every verifier returns a Report. The CLI bundles Reports into a RunReport,
which round-trips through JSON and renders as a text table via pandas.
"""

# Get packages.
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import pandas as pd

# Set up logging.
logger = logging.getLogger(__name__)

# Constants.
PASS = "pass"
FAIL = "fail"
UNDETERMINED = "undetermined"
STATUSES = (PASS, FAIL, UNDETERMINED)


def _jsonable(value):
    """Convert witness values (labels, grades, morphisms) to JSON data."""
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


@dataclass
class CheckResult():
    """The outcome of one law instance.

    Attributes:
        law (str): Identifier of the law, e.g. "associativity".
        anchor (str): Short description of where the law comes from.
        status (str): One of pass, fail, undetermined.
        witness (dict): Offending data for failures, otherwise None."""
    law: str
    anchor: str
    status: str
    witness: Optional[Dict[str, Any]] = field(default=None)

    def __post_init__(self):
        """Post-initialization method to validate the attributes."""
        if self.status not in STATUSES:
            raise ValueError(f"Unknown status {self.status!r}.")

    def to_dict(self) -> dict:
        """Convert to plain JSON data."""
        data = {"law": self.law, "anchor": self.anchor,
                "status": self.status}
        if self.witness is not None:
            data["witness"] = self.witness
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        """Inverse of to_dict."""
        return cls(law=data["law"], anchor=data["anchor"],
                   status=data["status"], witness=data.get("witness"))


@dataclass
class Report():
    """An ordered collection of law checks.

    Attributes:
        name (str): What was verified.
        checks (list): The CheckResults in the order they were made.
        data (dict): Extra values a construction wants to return."""
    name: str
    checks: List[CheckResult] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def record(self, law: str, anchor: str, passed: bool,
               witness: Optional[dict] = None) -> bool:
        """Record one law instance.

        Args:
            law (str): Law identifier.
            anchor (str): Where the law comes from.
            passed (bool): Outcome.
            witness (dict): Offending data, kept only on failure.

        Returns:
            bool: The outcome, for chaining."""
        passed = bool(passed)
        status = PASS if passed else FAIL
        self.checks.append(CheckResult(
            law, anchor, status,
            None if passed or witness is None else _jsonable(witness)))
        if not passed:
            logger.warning("%s: %s failed at %s", self.name, law,
                           (witness or {}).get("tuple"))
        return passed

    def compare(self, law: str, anchor: str, tuple_, left, right) -> bool:
        """Record whether two morphisms (or matrices) are exactly equal."""
        passed = left == right
        witness = {"tuple": list(tuple_), "left": left, "right": right}
        return self.record(law, anchor, passed, witness)

    def undetermined(self, law: str, anchor: str, reason: str):
        """Record a law that could not be decided."""
        self.checks.append(CheckResult(law, anchor, UNDETERMINED,
                                       {"reason": reason}))

    def extend(self, other: "Report") -> "Report":
        """Append the checks of another report."""
        self.checks.extend(other.checks)
        return self

    def failures(self) -> List[CheckResult]:
        """The failing checks."""
        return [c for c in self.checks if c.status == FAIL]

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(c.status == PASS for c in self.checks)

    @property
    def verdict(self) -> str:
        """pass, fail or undetermined."""
        if any(c.status == FAIL for c in self.checks):
            return FAIL
        if any(c.status == UNDETERMINED for c in self.checks):
            return UNDETERMINED
        return PASS

    def to_frame(self) -> pd.DataFrame:
        """One row per law, counting instances by status."""
        return summarize_checks(self.checks)

    def __bool__(self):
        return self.passed


def summarize_checks(checks: List[CheckResult]) -> pd.DataFrame:
    """Count checks per (law, anchor, status)."""
    if not checks:
        return pd.DataFrame(columns=["law", "anchor", "status", "count"])
    df = pd.DataFrame([{"law": c.law, "anchor": c.anchor,
                        "status": c.status} for c in checks])
    return (df.groupby(["law", "anchor", "status"], sort=False)
            .size().reset_index(name="count"))


@dataclass
class RunReport():
    """The outcome of one CLI command.

    Attributes:
        command (str): The command that ran.
        verdict (str): pass, fail or undetermined.
        checks (list): Every CheckResult of every Report.
        timing_ms (int): Wall time in milliseconds.
        notes (list): Human-readable remarks (e.g. caveats)."""
    command: str
    verdict: str
    checks: List[CheckResult] = field(default_factory=list)
    timing_ms: int = field(default=0)
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        """Post-initialization method to validate the attributes."""
        if self.verdict not in STATUSES:
            raise ValueError(f"Unknown verdict {self.verdict!r}.")

    @classmethod
    def from_reports(cls, command: str, reports: List[Report],
                     timing_ms: int = 0,
                     notes: Optional[List[str]] = None) -> "RunReport":
        """Bundle verifier reports; the verdict is derived from the checks."""
        merged = Report(command)
        for report in reports:
            merged.extend(report)
        return cls(command=command, verdict=merged.verdict,
                   checks=list(merged.checks), timing_ms=int(timing_ms),
                   notes=list(notes or []))

    @property
    def exit_code(self) -> int:
        """0 for pass, 1 otherwise."""
        return 0 if self.verdict == PASS else 1

    def to_dict(self) -> dict:
        """Convert to plain JSON data."""
        return {"command": self.command, "verdict": self.verdict,
                "timing_ms": self.timing_ms, "notes": list(self.notes),
                "checks": [c.to_dict() for c in self.checks]}

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        """Inverse of to_dict."""
        return cls(command=data["command"], verdict=data["verdict"],
                   checks=[CheckResult.from_dict(c) for c in data["checks"]],
                   timing_ms=int(data.get("timing_ms", 0)),
                   notes=list(data.get("notes", [])))

    def to_json(self) -> str:
        """Stable JSON text."""
        return json.dumps(self.to_dict(), indent=2, sort_keys=True,
                          ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        """Parse the output of to_json."""
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        """Human-oriented rendering."""
        lines = [f"command: {self.command}",
                 f"verdict: {self.verdict}",
                 f"time: {self.timing_ms} ms"]
        lines.extend(f"note: {note}" for note in self.notes)
        frame = summarize_checks(self.checks)
        if not frame.empty:
            lines.append(frame.to_string(index=False))
        for check in self.checks:
            if check.status != PASS and check.witness is not None:
                where = check.witness.get("tuple", check.witness)
                lines.append(f"{check.status}: {check.law} "
                             f"{json.dumps(where, ensure_ascii=False)}")
        return "\n".join(lines)
