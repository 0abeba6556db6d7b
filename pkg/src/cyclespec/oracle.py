"""Ground truth by brute force.

Enumerates every simple cycle of a chorded cycle graph independently of the
closed-form census, checks the Sidon consequence on anchor sets, and
evaluates the two chord-pair counting bounds.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import ChordedCycleGraph, CycleSpectrum

DEFAULT_CYCLE_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    """Cycle enumeration passed its budget; carries the partial count."""

    def __init__(self, budget: int, partial: int):
        super().__init__(f"cycle budget {budget} exceeded; {partial} cycles found")
        self.budget = budget
        self.partial = partial


class InternalInconsistency(RuntimeError):
    """A proved bound failed on a repeat-free graph; indicates a bug."""


def enumerate_cycles(graph: ChordedCycleGraph,
                     budget: int = DEFAULT_CYCLE_BUDGET) -> CycleSpectrum:
    """Exact multiset of simple-cycle lengths, found by backtracking.

    Each cycle is emitted exactly once, canonicalized by its least vertex
    and by the traversal direction whose second vertex is smaller.  Works
    from the adjacency structure alone.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    adjacency = graph.adjacency
    lengths: list[int] = []
    for start in range(1, graph.n + 1):
        path = [start]
        on_path = {start}
        pending = [iter(adjacency[start])]
        while pending:
            step = next(pending[-1], None)
            if step is None:
                pending.pop()
                on_path.discard(path.pop())
                continue
            if step == start and len(path) >= 3 and path[1] < path[-1]:
                if len(lengths) >= budget:
                    raise BudgetExceeded(budget, len(lengths))
                lengths.append(len(path))
            elif step > start and step not in on_path:
                path.append(step)
                on_path.add(step)
                pending.append(iter(adjacency[step]))
    return CycleSpectrum(tuple(lengths))


def has_repeated_length(spectrum: CycleSpectrum) -> int | None:
    """Smallest length occurring at least twice, or None."""
    previous = None
    for length in spectrum.lengths:
        if length == previous:
            return length
        previous = length
    return None


@dataclass(frozen=True)
class SidonViolation:
    """Two element pairs with equal sums: a + b == c + d."""

    a: int
    b: int
    c: int
    d: int


def is_sidon(values) -> SidonViolation | None:
    """None when all two-element sums are distinct, else the first collision.

    Pairs draw two distinct elements; a sum reusing one element twice is not
    counted.  Scanning pairs in lexicographic order makes the reported
    witness deterministic.
    """
    ordered = sorted(values)
    if len(set(ordered)) != len(ordered):
        raise ValueError("elements must be distinct")
    if ordered and ordered[0] < 1:
        raise ValueError("elements must be positive")
    first_pair: dict[int, tuple[int, int]] = {}
    for a, b in itertools.combinations(ordered, 2):
        total = a + b
        if total in first_pair:
            c, d = first_pair[total]
            return SidonViolation(c, d, a, b)
        first_pair[total] = (a, b)
    return None


def crossing_pairs(graph: ChordedCycleGraph) -> int:
    """Chord pairs whose endpoints strictly interleave around the cycle.

    With endpoints normalized ascending, {a, b} and {c, d} cross exactly
    when a < c < b < d or c < a < d < b; sharing an endpoint never counts.
    """
    count = 0
    for (a, b), (c, d) in itertools.combinations(graph.chords, 2):
        if a < c < b < d or c < a < d < b:
            count += 1
    return count


@dataclass(frozen=True)
class BoundReport:
    """Chord-pair counting bounds evaluated on one graph.

    Every pair of chords supports at least one cycle through exactly those
    two chords, and crossing pairs support two, so on a repeat-free graph
    C(k, 2) < n and 2c + (C(k, 2) - c) <= n must both hold.
    """

    n: int
    chord_count: int
    crossing_count: int
    chord_pairs: int
    pair_bound_ok: bool          # C(k, 2) < n
    crossing_bound_ok: bool      # 2c + (C(k, 2) - c) <= n
    edge_upper_bound: float      # n + sqrt(2n) + 1
    singer_lower_bound: float    # n + sqrt(n - 3/4) - 3/2


def bound_report(graph: ChordedCycleGraph, spectrum: CycleSpectrum) -> BoundReport:
    """Evaluate both bounds; their failure on a repeat-free spectrum is a bug."""
    k = len(graph.chords)
    crossings = crossing_pairs(graph)
    pairs = k * (k - 1) // 2
    report = BoundReport(
        n=graph.n,
        chord_count=k,
        crossing_count=crossings,
        chord_pairs=pairs,
        pair_bound_ok=pairs < graph.n,
        crossing_bound_ok=2 * crossings + (pairs - crossings) <= graph.n,
        edge_upper_bound=graph.n + math.sqrt(2 * graph.n) + 1,
        singer_lower_bound=graph.n + math.sqrt(graph.n - 0.75) - 1.5,
    )
    if has_repeated_length(spectrum) is None and not (report.pair_bound_ok
                                                      and report.crossing_bound_ok):
        raise InternalInconsistency(
            f"counting bound failed on a repeat-free graph: {report}")
    return report


def singer_lower_bound_exact(n: int) -> Fraction | None:
    """n + sqrt(n - 3/4) - 3/2 as an exact rational, when the root is rational.

    sqrt(n - 3/4) = sqrt(4n - 3) / 2 is rational exactly when 4n - 3 is a
    perfect (odd) square, which covers every n of the form q^2 + q + 1:
    there 4n - 3 = (2q + 1)^2 and the whole expression collapses to
    q^2 + 2q.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    root = math.isqrt(4 * n - 3)
    if root * root != 4 * n - 3:
        return None
    return Fraction(n) + Fraction(root, 2) - Fraction(3, 2)


def verification_report(graph: ChordedCycleGraph,
                        budget: int = DEFAULT_CYCLE_BUDGET) -> dict:
    """JSON-ready verification summary with a stable key order."""
    spectrum = enumerate_cycles(graph, budget)
    report = bound_report(graph, spectrum)
    return {
        "n": graph.n,
        "edges": graph.edge_count,
        "chords": [list(chord) for chord in graph.chords],
        "spectrum": list(spectrum.lengths),
        "repeated": has_repeated_length(spectrum) is not None,
        "bounds": {
            "chord_count": report.chord_count,
            "crossing_count": report.crossing_count,
            "chord_pairs": report.chord_pairs,
            "pair_bound_ok": report.pair_bound_ok,
            "crossing_bound_ok": report.crossing_bound_ok,
            "edge_upper_bound": report.edge_upper_bound,
            "singer_lower_bound": report.singer_lower_bound,
        },
    }
