"""
JSON documents for triples and stacks.

Triple:  {"gx": [{"i": 0, "j": 1, "k": 1, "coeff": 1}, ...], "gy": [...], "gz": [...]}
         (a component may also be given as an expression string)
Stack:   [{"jk": {"split": "y", "kirk1": "2 - t - t^-1", "kirk2": "t + t^-1 - 2"}},
          {"braid": "s1' v1"},
          {"jk": {...}}]
         a JK entry may carry "mirror": true to use the reversed mirror image.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Union

from .group_ring import RingElem, parse_laurent, parse_ring
from .heisenberg import GX, GY, GZ
from .parsing import ParseError
from .theta import JKBlock, Stack, StackError
from .triples import Triple
from .welded import parse_braid

KEYS = ("gx", "gy", "gz")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def triple_to_doc(v: Triple) -> Dict[str, List[Dict[str, int]]]:
    return {
        key: [{"i": i, "j": j, "k": k, "coeff": c} for i, j, k, c in r.records()]
        for key, r in zip(KEYS, v.parts)
    }


def triple_from_doc(doc: Any) -> Triple:
    if not isinstance(doc, dict) or set(doc) - set(KEYS):
        raise ParseError(f"a triple document is an object with keys {', '.join(KEYS)}")
    parts = []
    for key, ctx in zip(KEYS, (GX, GY, GZ)):
        value = doc.get(key, [])
        if isinstance(value, str):
            parts.append(parse_ring(value, ctx))
            continue
        if not isinstance(value, list):
            raise ParseError(f"{key} must be a list of terms or an expression")
        records = []
        for term in value:
            try:
                records.append((int(term["i"]), int(term["j"]), int(term["k"]), int(term["coeff"])))
            except (KeyError, TypeError, ValueError):
                raise ParseError(f"bad term {term!r} in {key}") from None
        parts.append(RingElem.from_records(ctx, records))
    return Triple(*parts)


def stack_to_doc(st: Stack) -> List[Dict[str, Any]]:
    out: List[Dict[str, Any]] = []
    for n, item in enumerate(st.items()):
        if n % 2 == 0:
            out.append({"jk": item.report()})  # type: ignore[union-attr]
        else:
            out.append({"braid": str(item)})
    return out


def stack_from_doc(doc: Any) -> Stack:
    if not isinstance(doc, list):
        raise ParseError("a stack document is a JSON array")
    items = []
    for n, entry in enumerate(doc):
        if not isinstance(entry, dict) or len(set(entry) - {"mirror"}) != 1:
            raise ParseError(f"stack entry {n} must have exactly one of 'jk' or 'braid'")
        if "jk" in entry:
            spec = entry["jk"]
            try:
                block = JKBlock(spec["split"], parse_laurent(str(spec.get("kirk1", "0"))), parse_laurent(str(spec.get("kirk2", "0"))))
            except (KeyError, TypeError) as exc:
                raise ParseError(f"stack entry {n}: bad JK block ({exc})") from None
            except StackError as exc:
                raise ParseError(f"stack entry {n}: {exc}") from None
            except ValueError as exc:
                raise ParseError(f"stack entry {n}: {exc}") from None
            if entry.get("mirror") or spec.get("mirror"):
                block = block.mirror()
            items.append(block)
        elif "braid" in entry:
            items.append(parse_braid(str(entry["braid"])))
        else:
            raise ParseError(f"stack entry {n} must have exactly one of 'jk' or 'braid'")
    try:
        return Stack.from_items(items)
    except StackError as exc:
        raise ParseError(str(exc)) from None


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("linkmap") / "data" / name))


def read_json(path: Union[str, Path]) -> Any:
    """Read a document; '@name' refers to a bundled fixture."""
    p = str(path)
    if p.startswith("@"):
        path = fixture_path(p[1:])
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def load_triple(path) -> Triple:
    return triple_from_doc(read_json(path))


def load_stack(path) -> Stack:
    return stack_from_doc(read_json(path))
