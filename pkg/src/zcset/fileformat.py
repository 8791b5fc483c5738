"""Plain-text and JSON persistence for families.

Text layout (``zcs-v1``)::

    zcs-v1 q=6 M=6 N=4 L=6 Z=4
    set 0
    000003
    030300
    ...
    set 1
    ...

Each sequence is one line of L base-q digits (0-9 then a-z), so q <= 36.
"""

from __future__ import annotations

import json
from typing import Any

from .family import Flock, ZcsFamily

__all__ = [
    "FORMAT_TAG",
    "FormatError",
    "family_from_dict",
    "family_from_json",
    "family_to_dict",
    "family_to_json",
    "parse_family",
    "render_family",
]

FORMAT_TAG = "zcs-v1"
MAX_Q = 36
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class FormatError(ValueError):
    pass


def render_family(family: ZcsFamily) -> str:
    if family.q > MAX_Q:
        raise FormatError(f"q={family.q} exceeds {MAX_Q}, the text format limit")
    head = f"{FORMAT_TAG} q={family.q} M={family.M} N={family.N} L={family.L}"
    if family.claimed_Z is not None:
        head += f" Z={family.claimed_Z}"
    lines = [head]
    for p, flock in enumerate(family):
        lines.append(f"set {p}")
        lines.extend("".join(_DIGITS[e] for e in seq.exponents) for seq in flock)
    return "\n".join(lines) + "\n"


def _header(line: str) -> dict[str, int]:
    parts = line.split()
    if not parts or parts[0] != FORMAT_TAG:
        raise FormatError(f"missing '{FORMAT_TAG}' header")
    fields: dict[str, int] = {}
    for item in parts[1:]:
        key, sep, val = item.partition("=")
        if not sep or key not in {"q", "M", "N", "L", "Z"} or key in fields:
            raise FormatError(f"bad header field {item!r}")
        try:
            fields[key] = int(val)
        except ValueError:
            raise FormatError(f"header field {key} is not an integer: {val!r}") from None
    missing = {"q", "M", "N", "L"} - fields.keys()
    if missing:
        raise FormatError(f"header lacks {', '.join(sorted(missing))}")
    if not 2 <= fields["q"] <= MAX_Q:
        raise FormatError(f"q={fields['q']} outside [2, {MAX_Q}]")
    if min(fields["M"], fields["N"], fields["L"]) < 1:
        raise FormatError("M, N and L must be positive")
    return fields


def parse_family(text: str) -> ZcsFamily:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty input")
    h = _header(lines[0])
    q, M, N, L = h["q"], h["M"], h["N"], h["L"]
    body = lines[1:]
    if len(body) != M * (N + 1):
        raise FormatError(f"expected {M} sets of {N} sequences, found {len(body)} body lines")
    flocks = []
    for p in range(M):
        block = body[p * (N + 1) : (p + 1) * (N + 1)]
        if block[0] != f"set {p}":
            raise FormatError(f"expected 'set {p}', got {block[0]!r}")
        rows = []
        for row in block[1:]:
            if len(row) != L:
                raise FormatError(f"set {p}: sequence {row!r} has length {len(row)}, expected {L}")
            exps = []
            for ch in row.lower():
                e = _DIGITS.find(ch)
                if not 0 <= e < q:
                    raise FormatError(f"set {p}: digit {ch!r} not valid for q={q}")
                exps.append(e)
            rows.append(exps)
        flocks.append(Flock.from_rows(q, rows))
    try:
        return ZcsFamily(tuple(flocks), claimed_Z=h.get("Z"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def family_to_dict(family: ZcsFamily) -> dict[str, Any]:
    return {
        "format": FORMAT_TAG,
        "q": family.q,
        "M": family.M,
        "N": family.N,
        "L": family.L,
        "Z": family.claimed_Z,
        "sets": [[list(seq.exponents) for seq in flock] for flock in family],
    }


def family_from_dict(doc: dict[str, Any]) -> ZcsFamily:
    try:
        q = int(doc["q"])
        sets = doc["sets"]
        fam = ZcsFamily(tuple(Flock.from_rows(q, rows) for rows in sets), claimed_Z=doc.get("Z"))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed family document: {exc}") from None
    for key in ("M", "N", "L"):
        if key in doc and doc[key] != getattr(fam, key):
            raise FormatError(f"{key}={doc[key]} disagrees with the data ({getattr(fam, key)})")
    return fam


def family_to_json(family: ZcsFamily, indent: int | None = None) -> str:
    return json.dumps(family_to_dict(family), indent=indent) + "\n"


def family_from_json(text: str) -> ZcsFamily:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("JSON document must be an object")
    return family_from_dict(doc)
