"""Exact cycles of the map x -> dx (mod 1).

Points are ``fractions.Fraction`` values in [0, 1). Cycle and precycle
records are dicts with the same fields as the ``dmap`` command-line tool.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional

from . import _core
from ._core import DEFAULT_WORK_LIMIT, DmapError

__all__ = [
    "DEFAULT_WORK_LIMIT",
    "DmapError",
    "error_code",
    "dmap_step",
    "value_of_periodic",
    "expansion",
    "orbit",
    "cycle_from_word",
    "cycle_from_points",
    "precycle_from_points",
    "is_cycle",
    "witness_degree",
    "enumerate_cycles",
    "enumerate_precycles",
    "census",
    "approximate_with_cycle",
    "extract_key",
    "reconstruct_cycle",
    "cantor_boxes",
    "build_E_approx",
    "estimate_cantor_dimension",
    "estimate_cycle_dimension",
]


def error_code(exc: DmapError) -> str:
    """Kebab-case code of a library error, e.g. ``"not-a-cycle"``."""
    return str(exc).split(":", 1)[0]


def _text(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _texts(points: Iterable) -> list[str]:
    return [_text(p) for p in points]


def _record(payload: str):
    record = json.loads(payload)
    if record is None:
        return None
    if "points" in record:
        record["points"] = [Fraction(p) for p in record["points"]]
    if "start" in record:
        record["start"] = Fraction(record["start"])
    return record


def dmap_step(x, d: int) -> Fraction:
    return Fraction(_core.dmap_step(_text(x), d))


def value_of_periodic(word: str, d: int) -> Fraction:
    return Fraction(_core.value_of_periodic(word, d))


def expansion(x, d: int, length: int) -> str:
    return _core.expansion(_text(x), d, length)


def orbit(x, d: int) -> dict:
    return _record(_core.orbit(_text(x), d))


def cycle_from_word(word: str, d: int) -> dict:
    return _record(_core.cycle_from_word(word, d))


def cycle_from_points(points: Iterable, d: int) -> dict:
    return _record(_core.cycle_from_points(_texts(points), d))


def precycle_from_points(points: Iterable, d: int) -> dict:
    return _record(_core.precycle_from_points(_texts(points), d))


def is_cycle(points: Iterable, d: int) -> bool:
    return _core.is_cycle(_texts(points), d)


def witness_degree(word: str, d: int) -> int:
    """Degree of the piecewise-linear witness map built for the cycle of ``word``."""
    return _core.witness_degree(word, d)


def enumerate_cycles(d: int, n: int, work_limit: int = DEFAULT_WORK_LIMIT) -> list[dict]:
    return [_record(r) for r in _core.enumerate_cycles(d, n, work_limit)]


def enumerate_precycles(d: int, n: int, work_limit: int = DEFAULT_WORK_LIMIT) -> list[dict]:
    return [_record(r) for r in _core.enumerate_precycles(d, n, work_limit)]


def census(d: int, n: int, precycles: bool = False, work_limit: int = DEFAULT_WORK_LIMIT) -> dict:
    """Counts by degree, plus count/bound ratios as Fractions."""
    row = json.loads(_core.census(d, n, precycles, work_limit))
    row["counts"] = {int(m): c for m, c in row["counts"].items()}
    row["ratios"] = {int(m): Fraction(r) for m, r in row["ratios"].items()}
    return row


def approximate_with_cycle(d: int, digits: Iterable[int], prefix: str, block_len: Optional[int] = None) -> dict:
    """Cycle of degree len(digits) whose first point starts with ``prefix``.

    ``block_len`` defaults to the smallest valid value.
    """
    out = json.loads(_core.approximate_with_cycle(d, list(digits), prefix, block_len or 0))
    out["point"] = Fraction(out["point"])
    out["cycle"]["points"] = [Fraction(p) for p in out["cycle"]["points"]]
    return out


def extract_key(word: str, d: int) -> dict:
    return json.loads(_core.extract_key(word, d))


def reconstruct_cycle(d: int, m: int, n: int, blocks, i1: int, portrait) -> Optional[dict]:
    return _record(_core.reconstruct_cycle(d, m, n, [list(b) for b in blocks], i1, list(portrait)))


def cantor_boxes(m: int, d: int, k: int) -> int:
    return _core.cantor_boxes(m, d, k)


def build_E_approx(d: int, m: int, n_max: int, work_limit: int = DEFAULT_WORK_LIMIT) -> list[Fraction]:
    return [Fraction(p) for p in _core.build_E_approx(d, m, n_max, work_limit)]


def estimate_cantor_dimension(m: int, d: int, k_max: int) -> dict:
    return json.loads(_core.estimate_cantor_dimension(m, d, k_max))


def estimate_cycle_dimension(d: int, m: int, n_max: int, k_max: Optional[int] = None,
                             work_limit: int = DEFAULT_WORK_LIMIT) -> dict:
    return json.loads(_core.estimate_cycle_dimension(d, m, n_max, k_max or n_max, work_limit))
