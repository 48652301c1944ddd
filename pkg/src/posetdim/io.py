"""Text formats: ``poset v1`` files, Hasse-diagram DOT, realizers and JSON reports."""

from __future__ import annotations

import hashlib
import json
from typing import Optional

from .dimension import Realizer
from .poset import CycleError, Poset, PosetError, bits, from_cover_relations

HEADER = "poset v1"
REPORT_SCHEMA = "report v1"


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def format_poset(p: Poset) -> str:
    lines = [HEADER, f"elements: {p.n}", "covers:"]
    lines.extend(f"{x} {y}" for x, y in p.covers())
    return "\n".join(lines) + "\n"


def write_poset(p: Poset, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_poset(p))


def parse_poset(text: str) -> Poset:
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    rows = [(no, ln) for no, ln in rows if ln and not ln.startswith("#")]
    if not rows or rows[0][1] != HEADER:
        raise ParseError(f"expected header '{HEADER}'", rows[0][0] if rows else 1)
    if len(rows) < 2 or not rows[1][1].startswith("elements:"):
        raise ParseError("expected 'elements: <n>'", rows[1][0] if len(rows) > 1 else None)
    try:
        n = int(rows[1][1].split(":", 1)[1])
    except ValueError:
        raise ParseError("element count is not an integer", rows[1][0]) from None
    if n < 0:
        raise ParseError("element count is negative", rows[1][0])
    if len(rows) < 3 or rows[2][1] != "covers:":
        raise ParseError("expected 'covers:'", rows[2][0] if len(rows) > 2 else None)
    covers: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for no, ln in rows[3:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"malformed cover line {ln!r}", no)
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer cover {ln!r}", no) from None
        if not (0 <= x < n and 0 <= y < n):
            raise ParseError(f"cover index out of range 0..{n - 1}", no)
        if x == y:
            raise ParseError(f"reflexive cover {x} {y}", no)
        if (x, y) in seen:
            raise ParseError(f"duplicate cover {x} {y} (first on line {seen[x, y]})", no)
        seen[x, y] = no
        covers.append((x, y))
    try:
        return from_cover_relations(n, covers)
    except CycleError:
        raise ParseError("cyclic cover relations", _first_cycle_line(n, covers, seen)) from None
    except PosetError as exc:
        raise ParseError(str(exc)) from None


def _first_cycle_line(n: int, covers, seen) -> Optional[int]:
    succ = [0] * n
    for x, y in covers:
        # does y already reach x?
        reach, frontier = 1 << y, 1 << y
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= succ[v]
            frontier = nxt & ~reach
            reach |= frontier
        if (reach >> x) & 1:
            return seen[x, y]
        succ[x] |= 1 << y
    return None


def read_poset(path) -> Poset:
    with open(path) as fh:
        return parse_poset(fh.read())


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def format_dot(p: Poset, name: str = "hasse") -> str:
    """Hasse diagram in DOT, bottom to top, one rank per height level."""
    level = [0] * p.n
    if p.n:
        down = p.down
        for v in sorted(range(p.n), key=lambda v: bin(down[v]).count("1")):
            level[v] = max((level[z] + 1 for z in bits(down[v])), default=0)
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for lev in sorted(set(level)) if p.n else []:
        members = " ".join(f"{v};" for v in range(p.n) if level[v] == lev)
        out.append(f"  {{ rank=same; {members} }}")
    out.extend(f"  {x} -> {y};" for x, y in p.covers())
    out.append("}")
    return "\n".join(out) + "\n"


def format_realizer(r: Realizer) -> str:
    return "".join(" ".join(map(str, e)) + "\n" for e in r.extensions)


def parse_realizer(text: str) -> Realizer:
    return Realizer(tuple(tuple(int(t) for t in ln.split()) for ln in text.splitlines() if ln.strip()))


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_text(report: dict) -> str:
    """Human-readable rendering with the same content as the JSON form."""
    out = []

    def emit(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                emit(f"{prefix}.{k}" if prefix else k, value[k])
        elif isinstance(value, list) and value and isinstance(value[0], list):
            out.append(f"{prefix}:")
            out.extend("    " + " ".join(map(str, row)) for row in value)
        elif isinstance(value, list):
            out.append(f"{prefix}: {' '.join(map(str, value))}")
        else:
            out.append(f"{prefix}: {value}")

    emit("", report)
    width = max((ln.index(":") for ln in out if ":" in ln), default=0)
    return "\n".join(_align(ln, width) for ln in out) + "\n"


def _align(line: str, width: int) -> str:
    if line.startswith("    ") or ":" not in line:
        return line
    key, rest = line.split(":", 1)
    return f"{key:<{width}}:{rest}"
