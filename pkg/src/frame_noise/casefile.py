"""JSON case files: one chain, one attacker list per chain-head direction.

Layout::

    {"name": "example1", "time_unit": "ns", "voltage_unit": "V",
     "scenarios": {"fall": [{"p": 2, "e": 3, "m": 2, "a": 1, "b": 3}, ...]}}

Units are labels only; nothing is converted.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import SchemaError, ValidationError
from .model import DIRECTIONS, ChainCase, make_case

PARAM_KEYS = ("p", "e", "m", "a", "b")


@dataclass(frozen=True)
class CaseFile:
    name: str
    scenarios: dict
    time_unit: str = "ns"
    voltage_unit: str = "V"
    source: str = field(default="", compare=False)

    def cases(self) -> list:
        """One :class:`ChainCase` per scenario, in direction order."""
        return [self.scenarios[d] for d in DIRECTIONS if d in self.scenarios]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "time_unit": self.time_unit,
            "voltage_unit": self.voltage_unit,
            "scenarios": {
                d: [att.as_dict() for att in case.attackers]
                for d, case in ((d, self.scenarios[d]) for d in DIRECTIONS if d in self.scenarios)
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _number(value, path):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"expected a number, got {value!r}", path)
    return value


def _text(doc, key, default):
    value = doc.get(key, default)
    if not isinstance(value, str):
        raise SchemaError(f"expected a string, got {value!r}", key)
    return value


def load_case(doc, source: str = "") -> CaseFile:
    """Validate an already-decoded case document."""
    if not isinstance(doc, dict):
        raise SchemaError("top level must be a JSON object")
    name = _text(doc, "name", Path(source).stem if source else "case")
    scen = doc.get("scenarios")
    if not isinstance(scen, dict) or not scen:
        raise SchemaError("at least one scenario is required", "scenarios")
    cases = {}
    for direction, records in scen.items():
        where = f"scenarios.{direction}"
        if direction not in DIRECTIONS:
            raise SchemaError(f"direction must be one of {DIRECTIONS}", where)
        if not isinstance(records, list) or not records:
            raise SchemaError("expected a non-empty list of attackers", where)
        params = []
        for i, rec in enumerate(records):
            rpath = f"{where}[{i}]"
            if not isinstance(rec, dict):
                raise SchemaError("attacker record must be an object", rpath)
            missing = [k for k in PARAM_KEYS if k not in rec]
            if missing:
                raise SchemaError(f"missing keys {missing}", rpath)
            params.append({k: _number(rec[k], f"{rpath}.{k}") for k in PARAM_KEYS})
        try:
            cases[direction] = make_case(name, params, direction)
        except ValidationError as exc:
            err = type(exc)(f"{where}: {exc}")
            err.index = exc.index
            raise err from None
    return CaseFile(
        name=name,
        scenarios=cases,
        time_unit=_text(doc, "time_unit", "ns"),
        voltage_unit=_text(doc, "voltage_unit", "V"),
        source=source,
    )


def parse_case(path) -> CaseFile:
    """Read and validate a case file.

    Raises ``FileNotFoundError``, :class:`SchemaError` (bad JSON or layout)
    or :class:`ValidationError` (attacker parameters out of range).
    """
    path = Path(path)
    text = path.read_text()
    try:
        doc = json.loads(text, parse_constant=lambda c: math.nan)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", str(path)) from None
    return load_case(doc, str(path))


def case_file_from(case: ChainCase, time_unit: str = "ns", voltage_unit: str = "V") -> CaseFile:
    return CaseFile(case.name, {case.direction: case}, time_unit, voltage_unit)
