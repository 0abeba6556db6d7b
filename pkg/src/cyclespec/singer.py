"""Perfect difference sets in Z_n for n = q^2 + q + 1, q a prime power.

The construction walks the powers of a primitive element of GF(q^3) and
keeps the exponents whose top coordinate over GF(q) vanishes.  Those
exponents fall into exactly q + 1 residue classes mod n, and their ordered
differences hit every nonzero residue exactly once.  A brute-force
backtracking search over Z_n doubles as an independent existence oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import finite_field as ff


class NotPrimePower(ValueError):
    """q is not p^m for a single prime p (or is smaller than 2)."""


@dataclass(frozen=True)
class PerfectDifferenceSet:
    """Residues mod n; perfect when ordered differences cover 1..n-1 once each."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.n < 1:
            raise ValueError("modulus must be positive")
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("elements must be strictly increasing")
        if self.elements and not (0 <= self.elements[0] and self.elements[-1] < self.n):
            raise ValueError(f"elements must lie in 0..{self.n - 1}")

    @property
    def k(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class DifferenceSetViolation:
    """A residue covered the wrong number of times, with the pairs hitting it."""

    residue: int
    count: int
    pairs: tuple[tuple[int, int], ...]


def prime_power(q: int) -> tuple[int, int] | None:
    """Decompose q as p^m for a single prime p; None when impossible."""
    if q < 2:
        return None
    factors = ff.factorize(q)
    if len(factors) != 1:
        return None
    return factors[0]


def singer_difference_set(q: int) -> PerfectDifferenceSet:
    """Size-(q+1) perfect difference set in Z_{q^2+q+1}.

    Builds the tower GF(p) -> GF(q) -> GF(q^3) from canonical irreducible
    moduli, takes the canonical primitive element, and collects the
    exponents (mod n) of the powers with vanishing top coordinate.  Fully
    deterministic, so equal q always yields equal output.
    """
    decomposition = prime_power(q)
    if decomposition is None:
        raise NotPrimePower(f"{q} is not a prime power")
    p, m = decomposition
    ground = ff.prime_field(p)
    mid = ground if m == 1 else ff.extend(ground, ff.find_irreducible(ground, m))
    top = ff.extend(mid, ff.find_irreducible(mid, 3))
    gamma = ff.find_primitive(top)
    n = q * q + q + 1
    residues = set()
    power = top.one()
    for exponent in range(top.order - 1):
        if power.coords[2].is_zero:
            residues.add(exponent % n)
        power = power * gamma
    assert len(residues) == q + 1, "a projective line should give q + 1 residues"
    result = PerfectDifferenceSet(n, tuple(sorted(residues)))
    assert verify_perfect_difference_set(result) is None
    return result


def verify_perfect_difference_set(candidate: PerfectDifferenceSet,
                                  ) -> DifferenceSetViolation | None:
    """None when every nonzero residue is an ordered difference exactly once.

    Otherwise reports the smallest residue covered 0 or >= 2 times together
    with all pairs (a, b), a - b = residue mod n, that land on it.
    """
    n = candidate.n
    coverage: dict[int, list[tuple[int, int]]] = {r: [] for r in range(1, n)}
    for a in candidate.elements:
        for b in candidate.elements:
            if a != b:
                coverage[(a - b) % n].append((a, b))
    for residue in range(1, n):
        pairs = coverage[residue]
        if len(pairs) != 1:
            return DifferenceSetViolation(residue, len(pairs), tuple(sorted(pairs)))
    return None


def translate(diffset: PerfectDifferenceSet, shift: int) -> PerfectDifferenceSet:
    """Shift every element by -shift mod n; perfectness is preserved."""
    moved = sorted((a - shift) % diffset.n for a in diffset.elements)
    return PerfectDifferenceSet(diffset.n, tuple(moved))


def brute_force_difference_set(n: int, k: int) -> PerfectDifferenceSet | None:
    """Lexicographically first perfect difference set of size k in Z_n, or None.

    Backtracking over increasing residue lists starting at 0 (every perfect
    difference set has a translate through 0, so the lexicographic minimum
    starts there), pruning as soon as an ordered difference repeats.  Kept
    free of field machinery so it can cross-check the algebraic construction.
    """
    if k < 1 or k * (k - 1) > n - 1:
        raise ValueError("need 1 <= k and k*(k-1) <= n-1")

    chosen = [0]
    used: set[int] = set()

    def differences_with(candidate: int) -> list[int] | None:
        fresh: list[int] = []
        for a in chosen:
            forward = (candidate - a) % n
            backward = (a - candidate) % n
            if forward == backward:  # residue n/2 would be covered twice
                return None
            if (forward in used or backward in used
                    or forward in fresh or backward in fresh):
                return None
            fresh.append(forward)
            fresh.append(backward)
        return fresh

    def search(lowest: int) -> PerfectDifferenceSet | None:
        if len(chosen) == k:
            if len(used) == n - 1:
                return PerfectDifferenceSet(n, tuple(chosen))
            return None
        for candidate in range(lowest, n):
            fresh = differences_with(candidate)
            if fresh is None:
                continue
            chosen.append(candidate)
            used.update(fresh)
            found = search(candidate + 1)
            if found is not None:
                return found
            used.difference_update(fresh)
            chosen.pop()
        return None

    return search(1)
