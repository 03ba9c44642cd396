"""Lossless JSON/CSV serialization of computed values.

Rationals travel as strings: "p/q" with q > 1, or a bare integer.  Floats only
appear in records flagged ``approx``.
"""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

from .algebra import Poly, as_rational
from .sequences import SeqValue, Route

__all__ = [
    "KINDS",
    "rational_to_str",
    "rational_from_str",
    "OutputRecord",
    "encode",
    "CSV_HEADER",
    "seq_values_to_csv",
    "seq_values_from_csv",
]

KINDS = ("sequence", "polynomial", "zeta", "report")
_RAT = re.compile(r"-?\d+(/\d+)?")
_EXACT_KEYS = {"values", "coeffs", "value"}
CSV_HEADER = ("n", "value_num", "value_den", "route")


def rational_to_str(x) -> str:
    x = as_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    if not _RAT.fullmatch(s):
        raise ValueError(f"not an exact rational string: {s!r}")
    return Fraction(s)


def encode(obj: Any) -> Any:
    """JSON-ready copy of obj with every Fraction replaced by its exact string."""
    if isinstance(obj, Fraction):
        return rational_to_str(obj)
    if isinstance(obj, Poly):
        return [rational_to_str(c) for c in obj.coeffs]
    if isinstance(obj, Route):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def _decode(obj: Any, exact: bool = False) -> Any:
    if isinstance(obj, dict):
        return {k: _decode(v, exact or k in _EXACT_KEYS) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v, exact) for v in obj]
    if exact and isinstance(obj, str) and _RAT.fullmatch(obj):
        return Fraction(obj)
    return obj


@dataclass
class OutputRecord:
    """One unit of output.  ``params`` is a flat string map; exact values in
    ``payload`` under the keys values/coeffs/value are Fractions in memory."""

    kind: str
    params: Dict[str, str] = field(default_factory=dict)
    payload: Dict[str, Any] = field(default_factory=dict)
    approx: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")
        self.params = {str(k): (rational_to_str(v) if isinstance(v, Fraction) else str(v))
                       for k, v in self.params.items()}

    def to_dict(self) -> Dict[str, Any]:
        d = {"kind": self.kind, "params": dict(self.params), "payload": encode(self.payload)}
        if self.approx:
            d["approx"] = True
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "OutputRecord":
        approx = bool(d.get("approx", False))
        payload = d.get("payload", {})
        return cls(d["kind"], dict(d.get("params", {})), payload if approx else _decode(payload), approx)

    @classmethod
    def from_json(cls, line: str) -> "OutputRecord":
        return cls.from_dict(json.loads(line))

    def __eq__(self, other) -> bool:
        if not isinstance(other, OutputRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def seq_values_to_csv(values: Iterable[SeqValue]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for sv in values:
        w.writerow([sv.index, sv.value.numerator, sv.value.denominator, sv.route.value])
    return buf.getvalue()


def seq_values_from_csv(text: str) -> List[SeqValue]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError("missing or unexpected CSV header")
    return [SeqValue(int(n), Fraction(int(num), int(den)), Route(route)) for n, num, den, route in rows[1:]]
