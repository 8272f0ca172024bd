"""Edmonds' blossom algorithm with a certificate of cardinality optimality
for every intermediate matching.

Node ids are 1-based. Weights and amounts accept ``int``, ``str`` ("7/2",
"-2.5") or ``fractions.Fraction``. Results are plain dicts in the same JSON
schema the ``blossomcert`` command prints; use :func:`fraction` to turn a
rational string into a ``Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from . import _blossomcert as _core
from ._blossomcert import (
    CompletionRefused,
    InfeasibleDualUpdate,
    Instance as _Instance,
    InstanceError,
    JsonFormatError,
    OracleBudgetError,
    ParseError,
    RationalParseError,
)

Number = Union[int, str, Fraction]

__all__ = [
    "Instance",
    "CompletionRefused",
    "InfeasibleDualUpdate",
    "InstanceError",
    "JsonFormatError",
    "OracleBudgetError",
    "ParseError",
    "RationalParseError",
    "auxiliary_completion",
    "compare_dual_policies",
    "doubled_graph",
    "figure2_instance",
    "fraction",
    "min_perfect_matching_weight",
    "oracle",
    "parse_instance",
    "read_instance",
    "solve",
    "verify",
]


def _num(value: Number) -> str:
    if isinstance(value, bool):
        raise TypeError("weights must be numbers, not bool")
    if isinstance(value, (int, Fraction, str)):
        return str(value)
    raise TypeError(f"unsupported number type {type(value).__name__}; use int, str or Fraction")


def fraction(text: str) -> Fraction:
    """Exact value of a rational string from a result dict."""
    return Fraction(text)


def Instance(node_count: int, edges: Iterable[Tuple[int, int, Number]]) -> _Instance:
    """Simple graph on nodes 1..node_count; ``edges`` holds (u, v, weight)."""
    return _Instance(node_count, [(u, v, _num(w)) for u, v, w in edges])


parse_instance = _core.parse_instance
read_instance = _core.read_instance
figure2_instance = _core.figure2_instance
doubled_graph = _core.doubled_graph


def solve(
    instance: _Instance,
    mode: str = "maximum",
    scripted: Optional[Sequence[Sequence[Number]]] = None,
    beta: Number = 0,
) -> dict:
    """Runs the algorithm; one snapshot (with certificate) per cardinality."""
    phases = None if scripted is None else [[_num(a) for a in phase] for phase in scripted]
    return json.loads(_core.solve(instance, mode, phases, _num(beta)))


def verify(instance: _Instance, run: dict) -> dict:
    """Re-checks every snapshot of a run produced by :func:`solve`."""
    return json.loads(_core.verify(instance, json.dumps(run)))


def oracle(instance: _Instance, limit: int = 16) -> dict:
    """Brute-force minimum weight at every cardinality."""
    return json.loads(_core.oracle(instance, limit))


def compare_dual_policies(instance: _Instance, amounts: Sequence[Number]) -> dict:
    return json.loads(_core.compare_dual_policies(instance, [_num(a) for a in amounts]))


def min_perfect_matching_weight(instance: _Instance) -> Optional[Fraction]:
    w = _core.min_perfect_matching_weight(instance)
    return None if w is None else Fraction(w)


def auxiliary_completion(instance: _Instance, run: dict, k: int) -> dict:
    """Completes snapshot ``k`` to a perfect matching on an auxiliary graph."""
    out = _core.auxiliary_completion(instance, json.dumps(run), k)
    return {
        "instance": out["instance"],
        "matching": json.loads(out["matching"]),
        "verdict": json.loads(out["verdict"]),
    }
