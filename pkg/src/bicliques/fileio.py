"""Edge-list and vertex-list file formats.

Graph files: the first non-comment line is ``n m``, followed by ``m`` lines
``u v`` with 0-based vertex IDs.  ``#`` starts a comment.  Self-loops and
repeated edges are rejected.

Vertex-list files (OCT sets, designated independent sets): one vertex ID per
line, comments allowed.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from .graph import Graph


class FormatError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> Graph:
    rows = _lines(text)
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise FormatError("empty graph file") from None
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(f"line {lineno}: expected 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative counts")
    edges = []
    seen = set()
    for lineno, line in rows:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: vertex IDs must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop on {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")


def parse_vertices(text: str) -> list[int]:
    out = []
    for lineno, line in _lines(text):
        try:
            out.append(int(line))
        except ValueError:
            raise FormatError(f"line {lineno}: expected a vertex ID, got {line!r}") from None
    if len(set(out)) != len(out):
        raise FormatError("vertex list contains duplicates")
    return out


def read_vertices(path: str | Path) -> list[int]:
    return parse_vertices(Path(path).read_text(encoding="utf-8"))


def write_vertices(vertices: Iterable[int], path: str | Path) -> None:
    Path(path).write_text("".join(f"{v}\n" for v in sorted(vertices)), encoding="utf-8")


def write_bicliques(bicliques, stream: TextIO) -> int:
    count = 0
    for bc in bicliques:
        stream.write(bc.format() + "\n")
        count += 1
    return count
