"""Reading graph corpora (graph6, edge lists) and writing CSV/JSONL reports."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

import numpy as np

from .bounds import BoundReport, LemmaReport
from .graph import Graph, from_edges

HEADER = ">>graph6<<"
DEFAULT_MAX_N = 62
LONG_FORM_MAX = 258047
REPORT_FIELDS = ("graph", "bound", "alpha", "k", "lhs", "rhs", "slack",
                 "holds", "equality", "reason")


class ParseError(ValueError):
    """Malformed input; ``locator`` names the offending line when known."""

    def __init__(self, message: str, locator: str = ""):
        super().__init__(f"{locator}: {message}" if locator else message)
        self.locator = locator


@dataclass(frozen=True)
class CorpusRecord:
    source: str
    graph: Graph
    label: Optional[str] = None


def parse_graph6(line: str, max_n: int = DEFAULT_MAX_N) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise ParseError("empty graph6 string")
    try:
        data = [b - 63 for b in text.encode("ascii")]
    except UnicodeEncodeError:
        raise ParseError("graph6 string is not ASCII") from None
    for pos, v in enumerate(data):
        if not 0 <= v <= 63:
            raise ParseError(f"byte {text[pos]!r} at offset {pos} outside 63..126")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise ParseError("truncated or unsupported long-form size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > max_n:
        raise ParseError(f"n={n} exceeds the size limit {max_n}")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise ParseError(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    bits = np.array([(v >> (5 - i)) & 1 for v in body for i in range(6)], dtype=np.uint8)
    if bits[nbits:].any():
        raise ParseError("nonzero padding bits")
    adj = np.zeros((n, n), dtype=np.uint8)
    rows, cols = _column_order(n)
    chosen = bits[:nbits].astype(bool)
    adj[rows[chosen], cols[chosen]] = 1
    adj[cols[chosen], rows[chosen]] = 1
    return Graph(adj)


def _column_order(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row and column indices of the upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ..."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    rows = np.array([i for i, _ in pairs], dtype=int)
    cols = np.array([j for _, j in pairs], dtype=int)
    return rows, cols


def write_graph6(g: Graph, max_n: int = DEFAULT_MAX_N) -> str:
    n = g.n
    if n > min(max_n, LONG_FORM_MAX):
        raise ValueError(f"n={n} exceeds the size limit {min(max_n, LONG_FORM_MAX)}")
    if n <= 62:
        out = [n]
    else:
        out = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    rows, cols = _column_order(n)
    bits = list(g.adjacency[rows, cols])
    bits += [0] * (-len(bits) % 6)
    for start in range(0, len(bits), 6):
        v = 0
        for b in bits[start:start + 6]:
            v = (v << 1) | int(b)
        out.append(v)
    return bytes(v + 63 for v in out).decode("ascii")


def _int_pair(line: str, locator: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers, got {line.strip()!r}", locator)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {line.strip()!r}", locator) from None


def _edge_blocks(lines: list[tuple[str, str]], max_n: int) -> Iterator[tuple[str, Graph]]:
    i = 0
    while i < len(lines):
        loc, head = lines[i]
        n, m = _int_pair(head, loc)
        if n < 0 or m < 0:
            raise ParseError("negative vertex or edge count", loc)
        if n > max_n:
            raise ParseError(f"n={n} exceeds the size limit {max_n}", loc)
        if i + m >= len(lines):
            raise ParseError(f"header announces {m} edges, found {len(lines) - i - 1}", loc)
        seen = set()
        for eloc, text in lines[i + 1:i + 1 + m]:
            u, v = _int_pair(text, eloc)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", eloc)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex out of range 0..{n - 1}", eloc)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {u} {v}", eloc)
            seen.add(key)
        yield loc, from_edges(n, sorted(seen))
        i += m + 1


def parse_edge_list(text: str, max_n: int = DEFAULT_MAX_N) -> Graph:
    """One graph from an ``n m`` header followed by ``m`` lines ``u v`` (0-based)."""
    lines = [(f"line {no}", s) for no, s in enumerate(text.splitlines(), 1) if s.strip()]
    if not lines:
        raise ParseError("empty edge list")
    graphs = list(_edge_blocks(lines, max_n))
    if len(graphs) != 1:
        raise ParseError(f"expected one graph, found {len(graphs)} (count mismatch)")
    return graphs[0][1]


def read_corpus(path: Union[str, Path], fmt: str = "graph6",
                max_n: int = DEFAULT_MAX_N) -> list[CorpusRecord]:
    """Every graph in a file. Blank lines and lines starting with ``#`` are skipped.

    graph6 files hold one graph per line; edge-list files hold consecutive
    ``n m`` blocks. Each record's ``source`` is ``path:line``.
    """
    path = Path(path)
    raw = path.read_text(encoding="ascii", errors="replace")
    lines = [(f"{path}:{no}", s) for no, s in enumerate(raw.splitlines(), 1)
             if s.strip() and not s.lstrip().startswith("#")]
    if fmt == "graph6":
        out = []
        for loc, s in lines:
            try:
                out.append(CorpusRecord(loc, parse_graph6(s, max_n), s.strip()))
            except ParseError as e:
                raise ParseError(str(e), loc) from None
        return out
    if fmt == "edges":
        return [CorpusRecord(loc, g) for loc, g in _edge_blocks(lines, max_n)]
    raise ValueError(f"unknown corpus format {fmt!r}")


def _num(x) -> str:
    x = float(x)
    return f"{x:.12g}" if math.isfinite(x) else ""


def _row(locator: str, r: Union[BoundReport, LemmaReport]) -> dict:
    if isinstance(r, LemmaReport):
        return {"graph": locator, "bound": r.lemma, "alpha": None, "k": None,
                "lhs": r.lhs, "rhs": r.rhs, "slack": None, "holds": r.holds,
                "equality": r.equality, "reason": r.detail if r.status == "n/a" else ""}
    return {"graph": locator, "bound": r.bound.tag, "alpha": r.alpha, "k": r.k,
            "lhs": r.lhs, "rhs": r.rhs, "slack": r.slack, "holds": r.holds,
            "equality": r.equality, "reason": r.not_applicable_reason}


def _json_value(v):
    if isinstance(v, bool) or isinstance(v, str) or v is None:
        return v
    x = float(v)
    if not math.isfinite(x):
        return None
    # Round through 12 significant digits so CSV and JSONL agree.
    return float(f"{x:.12g}")


def emit_report(records: Iterable[tuple[str, Union[BoundReport, LemmaReport]]],
                fmt: str = "csv", header: bool = True) -> bytes:
    """Serialise ``(locator, report)`` pairs in input order.

    ``header=False`` drops the CSV header so chunks can be concatenated.
    """
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(REPORT_FIELDS)
        for loc, r in records:
            row = _row(loc, r)
            w.writerow([_csv_value(row[f]) for f in REPORT_FIELDS])
    elif fmt == "jsonl":
        for loc, r in records:
            row = _row(loc, r)
            obj = {f: _json_value(row[f]) for f in REPORT_FIELDS}
            buf.write(json.dumps(obj, allow_nan=False) + "\n")
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    return buf.getvalue().encode("utf-8")


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return v
    return _num(v)
