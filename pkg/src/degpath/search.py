"""Exhaustive computation of the extremal function p_ell(v): the maximum
edge count among v-vertex graphs containing no equal-degree path of length
ell; plus theorem verification, certificate sweeps, and table generation.

Filtering happens only on completed graphs: the forbidden configuration is
not monotone under edge addition or deletion (degrees change), so no
mid-generation pruning is sound.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .canon import are_isomorphic, code_blocks, graph_from_code
from .certify import CertificateReport, check_graph
from .detect import find_equal_degree_path3, is_property_free
from .graphs import Graph, GraphError, complete_bipartite, graph6_decode, graph6_encode

SEARCH_RESULT_VERSION = "search-result/1"


class TheoremViolation(AssertionError):
    """An exhaustive search contradicted a proven statement."""


@dataclass
class SearchResult:
    v: int
    ell: int
    p: int
    extremal: list[str]
    histogram: dict[int, int]
    enumerated: int
    seconds: float

    def to_dict(self) -> dict:
        return {
            "version": SEARCH_RESULT_VERSION,
            "v": self.v,
            "ell": self.ell,
            "p": self.p,
            "extremal": self.extremal,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "enumerated": self.enumerated,
            "seconds": self.seconds,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _scan_path3(v: int):
    """Stream (codes, property-free mask, edge counts) blocks at order v."""
    for block in code_blocks(v):
        flags = np.empty(block.shape[0], np.bool_)
        nedges = np.empty(block.shape[0], np.int64)
        _kernels.detect3_codes(block, v, flags, nedges)
        yield block, ~flags, nedges


def compute_extremal(v: int, ell: int = 3, max_order: int = 10,
                     edge_range: tuple[int, int] | None = None) -> SearchResult:
    """Exact p_ell(v) with the complete extremal class list.

    Orders above 9 are only supported for ell = 3 (the fast kernel); the
    general detector enumerates simple paths per graph.  ``edge_range``
    restricts the property-free graphs considered to an inclusive edge
    window (maximum and histogram are taken within the window).
    """
    cap = max_order if ell == 3 else min(max_order, 9)
    if v > cap:
        raise GraphError(f"order {v} above supported limit {cap} for ell={ell}")
    lo, hi = edge_range if edge_range is not None else (0, v * (v - 1) // 2)
    if not 0 <= lo <= hi:
        raise GraphError(f"invalid edge range [{lo},{hi}]")
    t0 = time.perf_counter()
    histogram: dict[int, int] = {}
    best = -1
    best_codes: list[int] = []
    enumerated = 0
    if ell == 3:
        for block, free, nedges in _scan_path3(v):
            enumerated += block.shape[0]
            free = free & (nedges >= lo) & (nedges <= hi)
            for e in nedges[free]:
                histogram[int(e)] = histogram.get(int(e), 0) + 1
            top = int(nedges[free].max()) if free.any() else -1
            if top > best:
                best = top
                best_codes = []
            if top == best:
                sel = free & (nedges == best)
                best_codes.extend(int(c) for c in block[sel])
    else:
        for block in code_blocks(v):
            enumerated += block.shape[0]
            for code in block:
                g = graph_from_code(int(code), v)
                if is_property_free(g, ell):
                    e = g.edge_count()
                    if not lo <= e <= hi:
                        continue
                    histogram[e] = histogram.get(e, 0) + 1
                    if e > best:
                        best = e
                        best_codes = []
                    if e == best:
                        best_codes.append(int(code))
    extremal = sorted(graph6_encode(graph_from_code(c, v)) for c in best_codes)
    result = SearchResult(v, ell, best, extremal, histogram, enumerated,
                          time.perf_counter() - t0)
    _recheck(result)
    return result


def _recheck(r: SearchResult) -> None:
    # every reported extremal graph must survive a fresh detector call and
    # an exact edge recount
    for g6 in r.extremal:
        g = graph6_decode(g6)
        if g.edge_count() != r.p or not is_property_free(g, r.ell):
            raise TheoremViolation(f"extremal graph {g6} failed re-check")


def verify_theorem(v: int) -> dict:
    """Exhaustively verify the extremal value and uniqueness at order v.

    Odd v = 2n+1: p_3 = n^2 + n with the complete bipartite K_{n,n+1} as the
    unique extremal graph; even v = 2n (n >= 3): p_3 = n^2 - 1 with
    K_{n-1,n+1} unique.
    """
    if not 5 <= v <= 11:
        raise GraphError(f"theorem verification supports 5 <= v <= 11, got {v}")
    if v % 2:
        n = (v - 1) // 2
        expected_p = n * n + n
        extremal = complete_bipartite(n, n + 1)
    else:
        n = v // 2
        if n < 3:
            raise GraphError("even-order theorem needs n >= 3")
        expected_p = n * n - 1
        extremal = complete_bipartite(n - 1, n + 1)
    result = compute_extremal(v, 3)
    if result.p != expected_p:
        raise TheoremViolation(f"p_3({v}) = {result.p}, expected {expected_p}")
    if len(result.extremal) != 1:
        raise TheoremViolation(
            f"{len(result.extremal)} extremal graphs at v={v}, expected a unique one")
    found = graph6_decode(result.extremal[0])
    if not are_isomorphic(found, extremal):
        raise TheoremViolation(f"extremal graph at v={v} is not the expected bipartite graph")
    if any(e > expected_p for e in result.histogram):
        raise TheoremViolation(f"property-free graph above {expected_p} edges at v={v}")
    return {
        "v": v,
        "n": n,
        "p": result.p,
        "extremal": result.extremal,
        "unique": True,
        "enumerated": result.enumerated,
        "seconds": result.seconds,
    }


def sharpness_exceptions(v: int) -> int:
    """Number of graphs at odd order v = 2n+1 with more than n^2 + n edges
    that contain no equal-degree path of length three (zero if the edge
    bound is sharp)."""
    if v % 2 == 0:
        raise GraphError("sharpness is stated for odd orders")
    n = (v - 1) // 2
    count = 0
    for _, free, nedges in _scan_path3(v):
        count += int((free & (nedges > n * n + n)).sum())
    return count


def property_free_graphs(v: int, ell: int = 3) -> list[Graph]:
    """All property-free isomorphism classes at order v, enumeration order."""
    out = []
    if ell == 3:
        for block, free, _ in _scan_path3(v):
            out.extend(graph_from_code(int(c), v) for c in block[free])
    else:
        for block in code_blocks(v):
            for code in block:
                g = graph_from_code(int(code), v)
                if is_property_free(g, ell):
                    out.append(g)
    return out


def certificate_sweep(v: int) -> CertificateReport:
    """Run every certificate check on every property-free graph at order v,
    merged in deterministic (enumeration) order."""
    report = CertificateReport()
    for g in property_free_graphs(v, 3):
        report.merge(check_graph(g))
    return report


@dataclass
class TableRow:
    ell: int
    v: int
    p: int
    num_extremal: int
    seconds: float
    half_graph_bound: int | None = None
    bound_attained: bool | None = None


@dataclass
class ExtremalTable:
    rows: list[TableRow] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["ell", "v", "p", "num_extremal", "seconds",
                    "half_graph_bound", "bound_attained"])
        for r in self.rows:
            w.writerow([r.ell, r.v, r.p, r.num_extremal, f"{r.seconds:.3f}",
                        "" if r.half_graph_bound is None else r.half_graph_bound,
                        "" if r.bound_attained is None else r.bound_attained])
        return buf.getvalue()

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps([r.__dict__ for r in self.rows], indent=indent)


def build_table(ell_values, v_values) -> ExtremalTable:
    """One exact search per (ell, v) pair; even ell and even v rows carry
    the half-graph lower bound m(m+1)/2 (v = 2m) and whether it is attained."""
    table = ExtremalTable()
    for ell in ell_values:
        for v in v_values:
            r = compute_extremal(v, ell)
            row = TableRow(ell, v, r.p, len(r.extremal), r.seconds)
            if ell % 2 == 0 and v % 2 == 0:
                m = v // 2
                row.half_graph_bound = m * (m + 1) // 2
                row.bound_attained = r.p == row.half_graph_bound
                if r.p < row.half_graph_bound:
                    raise TheoremViolation(
                        f"p_{ell}({v}) = {r.p} below the half-graph bound")
            table.rows.append(row)
    return table


def detect_file(path: str, ell: int):
    """Run the detector over a graph6 file; yields (graph6, witness | None)."""
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            g = graph6_decode(line)
            if ell == 3:
                w = find_equal_degree_path3(g)
            else:
                from .detect import find_equal_degree_path

                w = find_equal_degree_path(g, ell)
            yield line, w
