##################################################
# Module F - Check Reports
# Python version: 3.13.x (project standard)
#
# Description:
# CheckReport is the outcome of one identity instance: both sides,
# the verdict and the time it took. Reports serialize to JSON lines
# and aggregate into a metrics dict plus a pandas table for the CLI
# and the dashboard.
#
# Functions:
# - CheckReport.timed(identity_id, parameters, sides, relation)
# - write_jsonl(reports, stream)
# - summarize(reports)
#
# Returns:
# summarize -> tuple: (metrics_dict, metrics_df)
#
# Requirements:
# - pip install pandas
##################################################

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Any, Callable, Iterable, TextIO

import pandas as pd

from laurent_module.laurent_poly import LaurentPoly, RationalFn
from partition_module.partitions import GeneralizedPartition

RELATIONS = ("eq", "ne")


@dataclass(frozen=True)
class TruncationSpec:
    """Keep monomials whose total degree in graded_vars is at most cap."""

    graded_vars: tuple[int, ...]
    cap: int

    def __post_init__(self):
        object.__setattr__(self, "graded_vars", tuple(self.graded_vars))
        if self.cap < 0:
            raise ValueError(f"truncation cap must be >= 0, got {self.cap}")

    def apply(self, poly: LaurentPoly) -> LaurentPoly:
        return poly.truncate(self.graded_vars, self.cap)


def _jsonable(value: Any) -> Any:
    if isinstance(value, GeneralizedPartition):
        return value.to_list()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _describe(parameters: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in parameters.items())


@dataclass(frozen=True)
class CheckReport:
    identity_id: str
    parameters: dict
    passed: bool
    lhs: LaurentPoly | RationalFn
    rhs: LaurentPoly | RationalFn
    elapsed: float
    relation: str = "eq"

    @classmethod
    def compare(cls, identity_id, parameters, lhs, rhs, elapsed=0.0, relation="eq") -> CheckReport:
        if relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {relation!r}")
        equal = bool(lhs == rhs)
        return cls(
            identity_id=identity_id,
            parameters=dict(parameters),
            passed=equal if relation == "eq" else not equal,
            lhs=lhs,
            rhs=rhs,
            elapsed=elapsed,
            relation=relation,
        )

    @classmethod
    def timed(
        cls,
        identity_id: str,
        parameters: dict,
        sides: Callable[[], tuple],
        relation: str = "eq",
    ) -> CheckReport:
        """Evaluate sides() -> (lhs, rhs) and record the wall time."""
        start = time.perf_counter()
        lhs, rhs = sides()
        return cls.compare(identity_id, parameters, lhs, rhs, time.perf_counter() - start, relation)

    def describe(self) -> str:
        return _describe(self.parameters)

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity_id,
            "parameters": _jsonable(self.parameters),
            "relation": self.relation,
            "passed": self.passed,
            "lhs": self.lhs.to_json_obj(),
            "rhs": self.rhs.to_json_obj(),
            "elapsed_s": round(self.elapsed, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), ensure_ascii=False)


def write_jsonl(reports: Iterable[CheckReport], stream: TextIO) -> int:
    count = 0
    for report in reports:
        stream.write(report.to_json() + "\n")
        count += 1
    return count


def summarize(reports):
    # metrics_dict contains: total, passed, failed, pass_rate, total_elapsed_s
    # metrics_df contains: identity, parameters, passed, elapsed_s

    reports = list(reports)

    # 1. One row per report
    metrics_df = pd.DataFrame(
        {
            "identity": [r.identity_id for r in reports],
            "parameters": [r.describe() for r in reports],
            "passed": [r.passed for r in reports],
            "elapsed_s": [r.elapsed for r in reports],
        },
        columns=["identity", "parameters", "passed", "elapsed_s"],
    )

    # 2. Scalar metrics
    total = len(metrics_df)
    passed = int(metrics_df["passed"].sum()) if total else 0
    metrics_dict = {
        "total": total,
        "passed": passed,
        "failed": total - passed,
        "pass_rate": round(passed / total, 4) if total else 1.0,
        "total_elapsed_s": round(float(metrics_df["elapsed_s"].sum()), 4) if total else 0.0,
    }

    return metrics_dict, metrics_df


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    x = LaurentPoly.variable(0, 1)
    ok = CheckReport.compare("demo", {"la": GeneralizedPartition.of(1)}, x + 1, 1 + x)
    print(ok.to_json())
    print(summarize([ok]))
