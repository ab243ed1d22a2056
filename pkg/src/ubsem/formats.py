"""TGF / APX parsing and JSON / text rendering of results."""

from __future__ import annotations

import json
import re
from typing import Iterable

from .errors import FrameworkError, ParseError
from .framework import Framework, build_framework
from .labelling import Labelling


def parse_tgf(text: str) -> Framework:
    """Trivial Graph Format: argument ids, a ``#`` line, then ``x y`` attack lines."""
    args: list[str] = []
    attacks: list[tuple[str, str]] = []
    in_attacks = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_attacks:
                raise ParseError("second '#' separator", lineno)
            in_attacks = True
            continue
        if not in_attacks:
            if len(line.split()) != 1:
                raise ParseError(f"argument line must hold exactly one id: {line!r}", lineno)
            args.append(line)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"attack line must be 'attacker target': {line!r}", lineno)
            attacks.append((parts[0], parts[1]))
    if not in_attacks:
        raise ParseError("missing '#' separator between arguments and attacks")
    try:
        return build_framework(args, attacks)
    except FrameworkError as exc:
        raise ParseError(str(exc)) from exc


_FACT = re.compile(r"(arg|att)\s*\(([^()]*)\)\s*\.")
_ID = re.compile(r"^[^\s,()]+$")


def parse_apx(text: str) -> Framework:
    """ASPARTIX facts ``arg(x).`` and ``att(x,y).`` in any order; ``%`` starts a comment."""
    body = "\n".join(line.split("%", 1)[0] for line in text.splitlines())
    args: list[str] = []
    attacks: list[tuple[str, str]] = []
    pos = 0
    for m in _FACT.finditer(body):
        gap = body[pos:m.start()]
        if gap.strip():
            raise ParseError(f"malformed fact near {gap.strip()[:40]!r}")
        pos = m.end()
        kind, inner = m.group(1), [p.strip() for p in m.group(2).split(",")]
        if not all(_ID.match(p) for p in inner):
            raise ParseError(f"malformed {kind} fact: {m.group(0)!r}")
        if kind == "arg":
            if len(inner) != 1:
                raise ParseError(f"arg takes one id: {m.group(0)!r}")
            args.append(inner[0])
        else:
            if len(inner) != 2:
                raise ParseError(f"att takes two ids: {m.group(0)!r}")
            attacks.append((inner[0], inner[1]))
    if body[pos:].strip():
        raise ParseError(f"malformed fact near {body[pos:].strip()[:40]!r}")
    try:
        return build_framework(args, attacks)
    except FrameworkError as exc:
        raise ParseError(str(exc)) from exc


def parse(text: str, fmt: str) -> Framework:
    if fmt == "tgf":
        return parse_tgf(text)
    if fmt == "apx":
        return parse_apx(text)
    raise ValueError(f"unknown format {fmt!r}")


def emit_tgf(fw: Framework) -> str:
    lines = list(fw.arguments) + ["#"] + [f"{a} {b}" for a, b in fw.sorted_attacks()]
    return "\n".join(lines) + "\n"


def emit_apx(fw: Framework) -> str:
    lines = [f"arg({a})." for a in fw.arguments] + [f"att({a},{b})." for a, b in fw.sorted_attacks()]
    return "\n".join(lines) + "\n"


def emit_framework(fw: Framework, fmt: str = "tgf") -> str:
    return emit_tgf(fw) if fmt == "tgf" else emit_apx(fw)


def labelling_dict(lab: Labelling) -> dict[str, list[str]]:
    return {"in": sorted(lab.in_), "out": sorted(lab.out), "undec": sorted(lab.undec)}


def sort_labellings(labs: Iterable[Labelling]) -> list[Labelling]:
    return sorted(labs, key=lambda lab: sorted(lab.in_))


def emit_labelling(lab: Labelling) -> str:
    return json.dumps(labelling_dict(lab))


def emit_labellings(labs: Iterable[Labelling]) -> str:
    return json.dumps([labelling_dict(lab) for lab in sort_labellings(labs)])


def emit_decision(value: bool) -> str:
    return "YES" if value else "NO"


def text_labelling(lab: Labelling) -> str:
    return " ".join(f"{k}={{{','.join(v)}}}" for k, v in labelling_dict(lab).items())
