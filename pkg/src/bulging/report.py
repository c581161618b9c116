"""Deterministic JSON emission for report documents.

Floats are written with 17 significant digits (lossless round trip) and
dict field order is preserved, so identical inputs serialize to identical
bytes.
"""

from __future__ import annotations

import json


def _fmt_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("non-finite value in report")
    s = f"{x:.17g}"
    return "0" if s == "-0" else s


def _render(obj) -> str:
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {_render(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in obj) + "]"
    raise TypeError(f"unsupported type in report: {type(obj)!r}")


def dumps(document: dict) -> str:
    return _render(document) + "\n"
