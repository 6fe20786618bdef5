"""Structured results shared by the verification suites and the CLI."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from . import __version__

TOOL = "drlab"


class Provenance(str, enum.Enum):
    FORMULA = "FORMULA"
    ORACLE = "ORACLE"
    BOTH = "BOTH"


PARAM_ORDER = ("t", "m", "n", "M", "N")


def _param_rank(item: tuple[str, Any]) -> tuple[int, str]:
    key = item[0]
    return (PARAM_ORDER.index(key) if key in PARAM_ORDER else len(PARAM_ORDER), key)


@dataclass
class Result:
    name: str
    value: str
    provenance: Provenance
    params: Dict[str, int] = field(default_factory=dict)
    passed: Optional[bool] = None
    expected: Optional[str] = None
    fields: tuple[str, ...] = ()
    seconds: Optional[float] = None
    detail: str = ""

    def __post_init__(self) -> None:
        # fixed key order, so sorting and rendering survive a JSON round trip
        self.params = dict(sorted(self.params.items(), key=_param_rank))
        self.value = str(self.value)
        if self.expected is not None:
            self.expected = str(self.expected)
        self.provenance = Provenance(self.provenance)
        if self.provenance is not Provenance.FORMULA and not self.fields:
            raise ValueError(f"oracle result {self.name!r} must list its field(s)")

    def sort_key(self) -> tuple:
        return (tuple(self.params.items()), self.name)

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "name": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "value": self.value,
            "provenance": self.provenance.value,
            "passed": self.passed,
            "expected": self.expected,
            "fields": list(self.fields),
            "detail": self.detail,
        }
        if timing:
            out["seconds"] = None if self.seconds is None else f"{self.seconds:.6f}"
        return out

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Result":
        seconds = d.get("seconds")
        return cls(
            name=d["name"],
            value=d["value"],
            provenance=Provenance(d["provenance"]),
            params={k: int(v) for k, v in d["params"].items()},
            passed=d["passed"],
            expected=d["expected"],
            fields=tuple(d["fields"]),
            seconds=None if seconds is None else float(seconds),
            detail=d["detail"],
        )

    def render(self) -> str:
        label = ",".join(f"{k}={v}" for k, v in self.params.items())
        status = {True: "PASS", False: "FAIL", None: "----"}[self.passed]
        text = f"[{status}] {label:<16} {self.name}: {self.value}"
        if self.expected is not None:
            text += f" (expected {self.expected})"
        text += f" [{self.provenance.value}"
        if self.fields:
            text += " over " + ", ".join(self.fields)
        text += "]"
        if self.detail:
            text += f" {self.detail}"
        return text


@dataclass
class Report:
    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    results: List[Result] = field(default_factory=list)
    version: str = __version__
    timing: bool = True

    def add(self, result: Result) -> Result:
        self.results.append(result)
        return result

    def extend(self, results: Iterable[Result]) -> None:
        self.results.extend(results)

    def sort(self) -> "Report":
        self.results.sort(key=Result.sort_key)
        return self

    @property
    def failures(self) -> List[Result]:
        return [r for r in self.results if r.passed is False]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        checked = [r for r in self.results if r.passed is not None]
        return {
            "tool": TOOL,
            "version": self.version,
            "command": self.command,
            "inputs": {k: str(v) for k, v in self.inputs.items()},
            "timing": self.timing,
            "results": [r.to_dict(self.timing) for r in self.results],
            "summary": {
                "checks": str(len(checked)),
                "failed": str(len(self.failures)),
                "passed": self.passed,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Report":
        if d.get("tool") != TOOL:
            raise ValueError("not a drlab report")
        return cls(
            command=d["command"],
            inputs=dict(d["inputs"]),
            results=[Result.from_dict(r) for r in d["results"]],
            version=d["version"],
            timing=d["timing"],
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def render_text(self) -> str:
        lines = [f"{TOOL} {self.version} {self.command}"]
        lines += [f"  {k} = {v}" for k, v in self.inputs.items()]
        lines += [r.render() for r in self.results]
        checked = sum(r.passed is not None for r in self.results)
        lines.append(
            f"{checked - len(self.failures)}/{checked} checks passed"
            + ("" if self.passed else f", {len(self.failures)} FAILED")
        )
        return "\n".join(lines) + "\n"
