"""Deciding H-equivalence of flips, enumerating non-trivial
reconstructions, membership in the reconstructible class, and the minimal
reconstruction number r.

A reconstruction of phi is any coloring with the same homogeneous sets;
phi and its complement are the trivial ones.  Flipping phi on a pair set
D yields a reconstruction exactly when D passes a local test on triples
(``is_valid_difference``): a triple containing exactly one D-edge must see
its two other pairs in opposite phi-colors, a triple containing two
D-edges meeting at an apex must see the apex's two pairs in opposite
phi-colors, and triples with zero or three D-edges are unconstrained.
That criterion must agree with directly comparing homogeneous-triple
signatures; the test suite enforces the agreement exhaustively.

r(phi) is the least size of a non-empty, non-full valid difference; it
exists iff phi has a non-trivial reconstruction.  Exhaustive searches are
feasible through n = 7 by default (2^21 candidates) and n = 8 behind a
flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

import numpy as np

from . import kernels
from .coloring import Coloring, EdgeSet, iter_subsets_colex, pair_count
from .critical import find_critical_cycles, find_critical_pairs
from .errors import (
    BudgetError,
    DimensionMismatchError,
    NotApplicableError,
    PreconditionError,
    TooSmallError,
)
from .structure import Component, components

__all__ = [
    "RMembership",
    "RValueReport",
    "ReconstructionWitness",
    "SearchMode",
    "Verdict",
    "component_restriction_valid",
    "enumerate_reconstructions",
    "in_R",
    "is_valid_difference",
    "make_witness",
    "minimal_reconstructions",
    "r_value",
]

# 2^21 masks: the default exhaustive ceiling (n = 7); n = 8 is 2^28 and
# only allowed explicitly.
EXHAUSTIVE_MAX_PAIRS = 21
_CHUNK = 1 << 18


class Verdict(Enum):
    IN_R = "in_R"
    NOT_IN_R = "not_in_R"
    UNKNOWN = "unknown"


class SearchMode(Enum):
    EXHAUSTIVE = "exhaustive"
    STRUCTURAL_ONLY = "structural"


@dataclass(frozen=True)
class ReconstructionWitness:
    difference: EdgeSet
    components: tuple[Component, ...]
    trivial: bool

    def size(self) -> int:
        return len(self.difference)


@dataclass(frozen=True)
class RMembership:
    verdict: Verdict
    witness: Optional[ReconstructionWitness]


@dataclass(frozen=True)
class RValueReport:
    """Result of a minimal-reconstruction search.

    ``r is None`` with ``complete`` means no non-trivial reconstruction
    exists (r is not applicable); ``r is None`` without ``complete``
    means the structural scan was inconclusive.
    """

    r: Optional[int]
    witnesses: tuple[ReconstructionWitness, ...]
    mode: SearchMode
    complete: bool

    @property
    def status(self) -> str:
        if self.r is not None:
            return "value"
        return "not_applicable" if self.complete else "unknown"

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "mode": self.mode.value,
            "complete": self.complete,
            "witnesses": [
                [list(p) for p in w.difference.members()] for w in self.witnesses
            ],
        }


def make_witness(phi: Coloring, diff: EdgeSet) -> ReconstructionWitness:
    full = (1 << pair_count(phi.n)) - 1
    return ReconstructionWitness(
        difference=diff,
        components=tuple(components(diff)),
        trivial=diff.mask in (0, full),
    )


def is_valid_difference(phi: Coloring, diff: EdgeSet) -> bool:
    """Whether flipping phi on ``diff`` preserves all homogeneous sets.

    Implemented by the local triple criterion; only triples touching a
    D-edge can impose a constraint, so the scan is O(|D| * n).
    """
    if phi.n != diff.n:
        raise DimensionMismatchError(f"n mismatch: {phi.n} != {diff.n}")
    if phi.n < 3:
        raise TooSmallError(f"validity needs n >= 3, got {phi.n}")
    get = phi.get
    has = diff.__contains__
    for x, y in diff.members():
        for z in range(phi.n):
            if z == x or z == y:
                continue
            in_xz = has((x, z))
            in_yz = has((y, z))
            if in_xz and in_yz:
                continue  # three D-edges: unconstrained
            if not in_xz and not in_yz:
                # exactly one D-edge {x,y}; z is the external vertex
                if get(x, z) == get(y, z):
                    return False
            elif in_xz:
                # D-edges {x,y} and {x,z} meet at apex x
                if get(x, y) == get(x, z):
                    return False
            else:
                # D-edges {x,y} and {y,z} meet at apex y
                if get(y, x) == get(y, z):
                    return False
    return True


def _valid_masks_sorted(phi: Coloring) -> np.ndarray:
    """All valid difference masks, ordered by size then colex (numeric)."""
    masks = kernels.all_masks(phi.n)
    ok = kernels.valid_for_phi(phi.n, phi.bits, masks)
    valid = masks[ok]
    order = np.lexsort((valid, kernels.popcounts(valid)))
    return valid[order]


def enumerate_reconstructions(
    phi: Coloring, max_size: int | None = None
) -> Iterator[ReconstructionWitness]:
    """Yield every non-trivial valid difference in size-then-colex order."""
    if phi.n < 3:
        raise TooSmallError(f"enumeration needs n >= 3, got {phi.n}")
    p = pair_count(phi.n)
    full = (1 << p) - 1
    if p <= EXHAUSTIVE_MAX_PAIRS:
        for mask in _valid_masks_sorted(phi).tolist():
            if mask in (0, full):
                continue
            if max_size is not None and mask.bit_count() > max_size:
                break  # sorted by size: nothing smaller follows
            yield make_witness(phi, EdgeSet(phi.n, mask))
        return
    # large n: lazy scalar walk, practical only with a small max_size
    top = p - 1 if max_size is None else min(max_size, p - 1)
    for k in range(1, top + 1):
        for mask in iter_subsets_colex(p, k):
            diff = EdgeSet(phi.n, mask)
            if is_valid_difference(phi, diff):
                yield make_witness(phi, diff)


def _structural_witness(phi: Coloring) -> Optional[EdgeSet]:
    pairs = find_critical_pairs(phi)
    if pairs:
        return EdgeSet.from_pairs(phi.n, [pairs[0]])
    if phi.n >= 5:
        cycles = find_critical_cycles(phi)
        if cycles:
            return cycles[0].edges
    return None


def in_R(
    phi: Coloring, budget: int | None = None, allow_n8: bool = False
) -> RMembership:
    """Decide whether the only reconstructions of phi are the trivial ones.

    Critical pairs and cycles are scanned first (sound shortcuts to
    NOT_IN_R); otherwise the difference space is exhausted when feasible
    (n <= 7, or n = 8 with ``allow_n8``).  ``budget`` caps the number of
    exhaustively examined candidates; hitting it yields UNKNOWN.
    """
    if phi.n < 3:
        raise TooSmallError(f"membership needs n >= 3, got {phi.n}")
    shortcut = _structural_witness(phi)
    if shortcut is not None:
        return RMembership(Verdict.NOT_IN_R, make_witness(phi, shortcut))
    p = pair_count(phi.n)
    full = (1 << p) - 1
    if p <= EXHAUSTIVE_MAX_PAIRS:
        masks = kernels.all_masks(phi.n)
        order = np.lexsort((masks, kernels.popcounts(masks)))
        take = len(order) if budget is None else min(budget, len(order))
        candidates = masks[order[:take]]
        ok = kernels.valid_for_phi(phi.n, phi.bits, candidates)
        ok &= (candidates != 0) & (candidates != np.uint64(full))
        hits = candidates[ok]
        if hits.size:
            return RMembership(
                Verdict.NOT_IN_R, make_witness(phi, EdgeSet(phi.n, int(hits[0])))
            )
        if take < len(order):
            return RMembership(Verdict.UNKNOWN, None)
        return RMembership(Verdict.IN_R, None)
    if phi.n == 8 and allow_n8:
        examined = 0
        start = 0
        while start < 1 << p:
            if budget is not None and examined >= budget:
                return RMembership(Verdict.UNKNOWN, None)
            stop = min(start + _CHUNK, 1 << p)
            if budget is not None:
                stop = min(stop, start + budget - examined)
            masks = np.arange(start, stop, dtype=np.uint64)
            ok = kernels.valid_for_phi(phi.n, phi.bits, masks)
            ok &= (masks != 0) & (masks != np.uint64(full))
            examined += stop - start
            hits = masks[ok]
            if hits.size:
                return RMembership(
                    Verdict.NOT_IN_R, make_witness(phi, EdgeSet(phi.n, int(hits[0])))
                )
            start = stop
        return RMembership(Verdict.IN_R, None)
    return RMembership(Verdict.UNKNOWN, None)


def r_value(
    phi: Coloring,
    mode: SearchMode = SearchMode.EXHAUSTIVE,
    allow_n8: bool = False,
) -> RValueReport:
    """The minimal-reconstruction number and all its minimal witnesses.

    Exhaustive mode covers the whole difference space and is complete.
    Structural mode only scans critical pairs (r = 1, complete: the
    size-1 space is covered) and critical cycles (r = 4 reported, not
    complete below the regime where the dichotomy theorems apply); with
    neither found it reports unknown.
    """
    if phi.n < 3:
        raise TooSmallError(f"r-value needs n >= 3, got {phi.n}")
    if mode is SearchMode.STRUCTURAL_ONLY:
        pairs = find_critical_pairs(phi)
        if pairs:
            witnesses = tuple(
                make_witness(phi, EdgeSet.from_pairs(phi.n, [p])) for p in pairs
            )
            return RValueReport(1, witnesses, mode, complete=True)
        if phi.n >= 5:
            cycles = find_critical_cycles(phi)
            if cycles:
                witnesses = tuple(make_witness(phi, c.edges) for c in cycles)
                return RValueReport(4, witnesses, mode, complete=False)
        return RValueReport(None, (), mode, complete=False)

    p = pair_count(phi.n)
    full = (1 << p) - 1
    if p <= EXHAUSTIVE_MAX_PAIRS:
        ordered = _valid_masks_sorted(phi).tolist()
        nontrivial = [m for m in ordered if m not in (0, full)]
        if not nontrivial:
            return RValueReport(None, (), mode, complete=True)
        r = nontrivial[0].bit_count()
        witnesses = tuple(
            make_witness(phi, EdgeSet(phi.n, m))
            for m in nontrivial
            if m.bit_count() == r
        )
        return RValueReport(r, witnesses, mode, complete=True)
    if phi.n == 8 and allow_n8:
        best_r, best = _minimal_nontrivial_chunked(phi)
        if best_r is None:
            return RValueReport(None, (), mode, complete=True)
        witnesses = tuple(make_witness(phi, EdgeSet(phi.n, m)) for m in best)
        return RValueReport(best_r, witnesses, mode, complete=True)
    raise BudgetError(
        f"exhaustive search infeasible for n={phi.n} "
        f"(ceiling n=7; n=8 requires allow_n8)"
    )


def _minimal_nontrivial_chunked(phi: Coloring) -> tuple[Optional[int], list[int]]:
    """One full pass over the difference space in fixed chunks, keeping the
    smallest non-trivial valid masks.  Memory stays bounded for n = 8."""
    p = pair_count(phi.n)
    full = (1 << p) - 1
    best: list[int] = []
    best_r: Optional[int] = None
    for start in range(0, 1 << p, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, 1 << p), dtype=np.uint64)
        ok = kernels.valid_for_phi(phi.n, phi.bits, masks)
        ok &= (masks != 0) & (masks != np.uint64(full))
        hits = masks[ok]
        if not hits.size:
            continue
        sizes = kernels.popcounts(hits)
        lo = int(sizes.min())
        if best_r is None or lo < best_r:
            best_r = lo
            best = hits[sizes == lo].tolist()
        elif lo == best_r:
            best.extend(hits[sizes == best_r].tolist())
    return best_r, sorted(int(m) for m in best)


def minimal_reconstructions(
    phi: Coloring, allow_n8: bool = False
) -> list[ReconstructionWitness]:
    """All witnesses of size r(phi), exhaustively established."""
    report = r_value(phi, SearchMode.EXHAUSTIVE, allow_n8=allow_n8)
    if report.r is None:
        raise NotApplicableError("coloring has only trivial reconstructions")
    return list(report.witnesses)


def component_restriction_valid(phi: Coloring, diff: EdgeSet, comp: Component) -> bool:
    """Whether the flip of ``diff`` cut down to one of its components is
    still valid.  For a valid ``diff`` this always holds; in particular a
    minimal witness can have only one component."""
    if not is_valid_difference(phi, diff):
        raise PreconditionError("difference set is not valid for the coloring")
    if comp not in components(diff):
        raise PreconditionError("component does not belong to the difference set")
    return is_valid_difference(phi, diff.within(comp.vertices))
