"""Canonical forms, isomorphism testing, and exhaustive enumeration of
non-isomorphic graphs (orders <= 11).

Enumeration is orderly generation: level k+1 is produced from level k by
appending one vertex with every possible neighborhood and keeping exactly
the children whose labeling is canonical (see ``_kernels``).  Levels are
cached module-wide, so repeated searches at the same order are cheap.
Order 11 is not cached (roughly 10^9 classes); it is streamed in blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

import numpy as np

from . import _kernels
from .graphs import Graph, GraphError

MAX_CANON_ORDER = 11
_BLOCK = 8192

_levels: dict[int, np.ndarray] = {1: np.zeros(1, np.uint64)}


def set_workers(jobs: int) -> None:
    """Limit the number of worker threads used by the enumeration kernels."""
    import numba

    if jobs < 1:
        raise ValueError("worker count must be >= 1")
    numba.set_num_threads(min(jobs, numba.config.NUMBA_NUM_THREADS))


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical upper-triangle bit string: equal iff graphs are isomorphic."""

    order: int
    code: int

    @property
    def bytes(self) -> bytes:
        nbits = comb(self.order, 2)
        return self.order.to_bytes(1, "big") + self.code.to_bytes(
            (nbits + 7) // 8 if nbits else 1, "big")


def _graph_rows(g: Graph) -> np.ndarray:
    rows = np.zeros(_kernels.MAX_N + 1, np.uint16)
    for i in range(g.order):
        rows[i] = g.rows[i]
    return rows


def graph_from_code(code: int, n: int) -> Graph:
    rows = np.zeros(_kernels.MAX_N + 1, np.uint16)
    _kernels.decode_rows(np.uint64(code), n, rows)
    return Graph(n, tuple(int(rows[i]) for i in range(n)))


def code_of_graph(g: Graph) -> int:
    return int(_kernels.encode_rows(_graph_rows(g), g.order))


def canonical_form(g: Graph) -> CanonicalForm:
    if g.order > MAX_CANON_ORDER:
        raise GraphError(f"canonical forms support order <= {MAX_CANON_ORDER}")
    return CanonicalForm(g.order, int(_kernels.min_code(_graph_rows(g), g.order)))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order:
        return False
    return canonical_form(g) == canonical_form(h)


def _extend(codes: np.ndarray, k: int) -> Iterator[np.ndarray]:
    """Yield canonical children (order k+1) of the given order-k codes,
    compacted block by block in parent order."""
    nparents = codes.shape[0]
    for start in range(0, nparents, _BLOCK):
        stop = min(start + _BLOCK, nparents)
        buf = np.empty((stop - start, 1 << k), np.uint64)
        counts = np.empty(stop - start, np.int64)
        _kernels.extend_block(codes, start, stop, k, buf, counts)
        total = int(counts.sum())
        out = np.empty(total, np.uint64)
        at = 0
        for i in range(stop - start):
            c = int(counts[i])
            out[at:at + c] = buf[i, :c]
            at += c
        yield out


def level_codes(v: int) -> np.ndarray:
    """All canonical codes of order v (cached; v <= 10)."""
    if not 1 <= v <= 10:
        raise GraphError("cached levels support 1 <= order <= 10; use code_blocks for 11")
    top = max(_levels)
    while top < v:
        parts = list(_extend(_levels[top], top))
        _levels[top + 1] = np.concatenate(parts) if len(parts) > 1 else parts[0]
        top += 1
    return _levels[v]


def code_blocks(v: int) -> Iterator[np.ndarray]:
    """Stream canonical codes of order v in deterministic blocks."""
    if not 1 <= v <= MAX_CANON_ORDER:
        raise GraphError(f"enumeration supports 1 <= order <= {MAX_CANON_ORDER}")
    if v <= 10:
        yield level_codes(v)
        return
    for block in _extend(level_codes(10), 10):
        yield block


def enumerate_graphs(
    v: int,
    edge_range: tuple[int, int] | None = None,
    visitor: Callable[[Graph], None] | None = None,
) -> int:
    """Visit one representative per isomorphism class of order v.

    Only classes whose edge count lies within ``edge_range`` (inclusive,
    defaulting to all) are visited and counted.  Enumeration order is
    deterministic: ascending canonical code.
    """
    lo, hi = edge_range if edge_range is not None else (0, comb(v, 2))
    if not (0 <= lo <= hi <= comb(v, 2)):
        raise GraphError(f"edge range [{lo},{hi}] invalid for order {v}")
    total = 0
    for block in code_blocks(v):
        if lo == 0 and hi == comb(v, 2) and visitor is None:
            total += block.shape[0]
            continue
        nedges = np.empty(block.shape[0], np.int64)
        _kernels.code_edge_counts(block, nedges)
        mask = (nedges >= lo) & (nedges <= hi)
        total += int(mask.sum())
        if visitor is not None:
            for code in block[mask]:
                visitor(graph_from_code(int(code), v))
    return total
