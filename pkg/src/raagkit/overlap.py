"""Cyclic inverse-overlap verification.

The central quantity: given a cyclic word ``w``, the largest length of a
subword ``u`` such that both ``u`` and its formal inverse occur in some word
obtained from ``w`` by rotations and swaps of adjacent commuting letters
(in ``disjoint`` mode the two occurrences must occupy disjoint cyclic
position sets).  For a cyclically reduced core of an ``n``-th power the
verified claim is that this maximum never exceeds ``len(w) / (2 n)``.

Three tools live here: a direct scanner for one representative, an
exhaustive breadth-first enumeration of the rotation/swap closure, and a
cheap projection certificate that often bounds the closure maximum without
enumerating it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import TrivialElement
from .graphs import DefiningGraph, chromatic_number
from .words import (
    CyclicWord,
    Word,
    _inv_codes,
    _nf_of,
    _reduce_codes,
    cyclically_reduce,
    is_cyclically_reduced,
    normal_form,
    power,
    reduce,
)
from .cube import ball, in_a_g_plus, interval

DEFAULT_REPS_CAP = 200_000

_MODES = ("disjoint", "any")


def _check_mode(mode: str) -> None:
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")


# ---------------------------------------------------------------------------
# scanning one representative
# ---------------------------------------------------------------------------


def _pair_at(codes: bytes, length: int, mode: str) -> Optional[tuple[int, int]]:
    """First (i, j) with ``u`` at i and ``u^-1`` at j of the given length.

    Positions are cyclic start indices in scan order (i ascending, then j).
    """
    n = len(codes)
    if length < 1 or length > n or (mode == "disjoint" and 2 * length > n):
        return None
    doubled = codes * 2
    slices = [doubled[i : i + length] for i in range(n)]
    occ: dict[bytes, list[int]] = {}
    for j, s in enumerate(slices):
        occ.setdefault(s, []).append(j)
    for i, s in enumerate(slices):
        hits = occ.get(_inv_codes(s))
        if not hits:
            continue
        for j in hits:
            if mode == "disjoint" and ((j - i) % n < length or (i - j) % n < length):
                continue
            if i == j:
                continue
            return i, j
    return None


def _raw_max_overlap(codes: bytes, mode: str) -> tuple[int, Optional[tuple[int, int, int]]]:
    """Largest inverse-overlap length in one cyclic word, with first witness.

    Overlap lengths are downward closed (drop the last letter of ``u`` and
    shift the inverse occurrence by one), so the scan walks lengths upward
    and stops at the first empty one.
    """
    best = 0
    witness: Optional[tuple[int, int, int]] = None
    length = 1
    while True:
        hit = _pair_at(codes, length, mode)
        if hit is None:
            return best, witness
        best, witness = length, (length, hit[0], hit[1])
        length += 1


@dataclass(frozen=True)
class Witness:
    """A maximal overlapping pair inside one closure representative."""

    u: Word
    pos_u: int
    pos_u_inv: int
    representative: Word

    def to_json_dict(self) -> dict:
        return {
            "u": self.u.display(),
            "pos_u": self.pos_u,
            "pos_u_inv": self.pos_u_inv,
            "representative": self.representative.display(),
        }


def _witness_from(graph: DefiningGraph, rep: bytes, raw: tuple[int, int, int]) -> Witness:
    length, i, j = raw
    doubled = rep * 2
    return Witness(
        u=Word(graph, doubled[i : i + length]),
        pos_u=i,
        pos_u_inv=j,
        representative=Word(graph, rep),
    )


def max_inverse_overlap(w: CyclicWord, mode: str = "disjoint") -> tuple[int, Optional[Witness]]:
    """Largest inverse-overlap length in the given cyclic word alone.

    Only rotations of ``w`` are considered (the scanner is rotation
    invariant); commuting swaps are the closure enumeration's business.
    """
    _check_mode(mode)
    rep = w.canonical().codes
    best, raw = _raw_max_overlap(rep, mode)
    return best, None if raw is None else _witness_from(w.graph, rep, raw)


# ---------------------------------------------------------------------------
# the rotation/swap closure
# ---------------------------------------------------------------------------


def _closure_scan(
    graph: DefiningGraph, start: bytes, mode: str, cap: int
) -> tuple[int, Optional[Witness], int, bool]:
    """Breadth-first walk of the rotation/swap closure, scanning as it goes.

    Every discovered representative is probed for overlaps one length above
    the current best (per-representative lengths are downward closed, so
    nothing is missed).  Returns (max, witness, representatives, capped).
    """
    seen = {start}
    queue = [start]
    best = 0
    witness: Optional[Witness] = None
    hit = _pair_at(start, 1, mode)
    while hit is not None:
        best += 1
        witness = _witness_from(graph, start, (best, hit[0], hit[1]))
        hit = _pair_at(start, best + 1, mode)
    capped = False
    head = 0
    nc = graph._nc_mask
    while head < len(queue):
        rep = queue[head]
        head += 1
        n = len(rep)
        neighbors = [rep[1:] + rep[:1]]
        for i in range(n - 1):
            if not (nc[rep[i]] >> rep[i + 1]) & 1:
                neighbors.append(rep[:i] + rep[i + 1 : i + 2] + rep[i : i + 1] + rep[i + 2 :])
        for nb in neighbors:
            if nb in seen:
                continue
            if len(seen) >= cap:
                capped = True
                continue
            seen.add(nb)
            queue.append(nb)
            hit = _pair_at(nb, best + 1, mode)
            while hit is not None:
                best += 1
                witness = _witness_from(graph, nb, (best, hit[0], hit[1]))
                hit = _pair_at(nb, best + 1, mode)
    return best, witness, len(queue), capped


@dataclass
class OverlapReport:
    """Result of bounding the overlap maximum for one power of one element."""

    graph: DefiningGraph
    g: Word
    n: int
    representatives_checked: int
    max_overlap_length: int
    witness: Optional[Witness]
    bound: Fraction
    violated: bool
    cap_exceeded: bool = False
    mode: str = "disjoint"

    @property
    def ok(self) -> bool:
        return not self.violated and not self.cap_exceeded

    def to_json_dict(self) -> dict:
        return {
            "graph": {
                "vertices": list(self.graph.vertices),
                "edges": sorted(sorted(e) for e in self.graph.edges),
            },
            "g": self.g.display(),
            "n": self.n,
            "representatives_checked": self.representatives_checked,
            "max_overlap_length": self.max_overlap_length,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "bound": f"{self.bound.numerator}/{self.bound.denominator}",
            "violated": self.violated,
            "cap_exceeded": self.cap_exceeded,
            "mode": self.mode,
        }


def core_of_power(g: Word, n: int) -> CyclicWord:
    """The cyclically reduced core of ``g**n`` as a cyclic word."""
    core = cyclically_reduce(g).core
    return CyclicWord(normal_form(power(core, n)))


def verify_key_lemma(
    g: Word,
    n_max: int = 4,
    reps_cap: int = DEFAULT_REPS_CAP,
    mode: str = "disjoint",
) -> list[OverlapReport]:
    """Check the overlap bound for cores of powers ``g**1 .. g**n_max``.

    For each power the rotation/swap closure of the core is enumerated (up
    to ``reps_cap`` representatives) and the maximum inverse-overlap length
    is compared against ``len(core(g**n)) / (2 n)``.  A capped enumeration is
    reported honestly via ``cap_exceeded`` rather than silently trusted.
    """
    _check_mode(mode)
    if reduce(g).is_identity:
        raise TrivialElement("overlap bounds concern nontrivial elements only")
    graph = g.graph
    reports = []
    for n in range(1, n_max + 1):
        w = core_of_power(g, n)
        start = w.canonical().codes
        best, witness, reps, capped = _closure_scan(graph, start, mode, reps_cap)
        bound = Fraction(len(start), 2 * n)
        reports.append(
            OverlapReport(
                graph=graph,
                g=g,
                n=n,
                representatives_checked=reps,
                max_overlap_length=best,
                witness=witness,
                bound=bound,
                violated=best > bound,
                cap_exceeded=capped,
                mode=mode,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# projection certificates
# ---------------------------------------------------------------------------


def _support_classes(graph: DefiningGraph, support: tuple[str, ...]) -> list[tuple[tuple[str, ...], ...]]:
    """Candidate partitions of the support into mutually non-commuting classes.

    Within a class no two generators may be adjacent (otherwise a commuting
    swap could act inside the class and perturb the projection).  Such
    classes are exactly the color classes of proper colorings of the induced
    subgraph, so one candidate comes from a chromatic coloring; singletons
    always qualify; for tiny supports every valid set partition is tried.
    """
    singletons = tuple((v,) for v in support)
    candidates = [singletons]
    induced_edges = {
        frozenset((a, b)) for a, b in combinations(support, 2) if graph.adjacent(a, b)
    }
    if len(support) >= 2:
        sub = DefiningGraph(support, [tuple(sorted(e)) for e in induced_edges])
        mode = "exact" if len(support) <= 8 else "heuristic"
        _, coloring, _ = chromatic_number(sub, mode=mode)
        by_color: dict[int, list[str]] = {}
        for v in support:
            by_color.setdefault(coloring.assignment[v], []).append(v)
        chromatic = tuple(tuple(part) for part in by_color.values())
        if chromatic != singletons:
            candidates.append(chromatic)
    if 2 <= len(support) <= 5:
        candidates.extend(_all_valid_partitions(support, induced_edges))
    out = []
    seen = set()
    for cand in candidates:
        key = tuple(sorted(cand))
        if key not in seen:
            seen.add(key)
            out.append(cand)
    return out


def _all_valid_partitions(
    support: tuple[str, ...], induced_edges: set[frozenset[str]]
) -> list[tuple[tuple[str, ...], ...]]:
    results: list[tuple[tuple[str, ...], ...]] = []

    def extend(rest: list[str], parts: list[list[str]]) -> None:
        if not rest:
            results.append(tuple(tuple(p) for p in parts))
            return
        v, tail = rest[0], rest[1:]
        for p in parts:
            if all(frozenset((v, u)) not in induced_edges for u in p):
                p.append(v)
                extend(tail, parts)
                p.pop()
        parts.append([v])
        extend(tail, parts)
        parts.pop()

    extend(list(support), [])
    return results


def projection_overlap_bound(w: CyclicWord, mode: str = "disjoint") -> tuple[int, tuple[tuple[str, ...], ...]]:
    """An upper bound for the closure overlap maximum, with its certificate.

    For a partition of the support into pairwise non-commuting classes,
    deleting all letters outside one class is unaffected by commuting swaps
    and turns rotations into rotations; an overlapping pair therefore
    projects to an overlapping pair in every class, and the lengths add up.
    Summing per-class scanner maxima hence bounds the whole closure.  The
    smallest sum over candidate partitions is returned.
    """
    _check_mode(mode)
    graph = w.graph
    codes = w.canonical().codes
    support = tuple(v for v in graph.vertices if any(c >> 1 == graph.index[v] for c in codes))
    best: Optional[int] = None
    best_partition: tuple[tuple[str, ...], ...] = ()
    for partition in _support_classes(graph, support):
        total = 0
        for part in partition:
            gens = {graph.index[v] for v in part}
            projected = bytes(c for c in codes if c >> 1 in gens)
            total += _raw_max_overlap(projected, mode)[0]
        if best is None or total < best:
            best, best_partition = total, partition
    return (0 if best is None else best), best_partition


# ---------------------------------------------------------------------------
# translated-interval search
# ---------------------------------------------------------------------------


@dataclass
class NoOverlapSearchReport:
    """Result of searching for a translate reversing a long axis segment."""

    g: Word
    radius: int
    samples: int
    seed: int
    pairs_checked: int = 0
    elements_checked: int = 0
    triples_checked: int = 0
    premise_failures: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.premise_failures

    def to_json_dict(self) -> dict:
        return {
            "g": self.g.display(),
            "radius": self.radius,
            "samples": self.samples,
            "seed": self.seed,
            "pairs_checked": self.pairs_checked,
            "elements_checked": self.elements_checked,
            "triples_checked": self.triples_checked,
            "premise_failures": self.premise_failures,
            "violations": list(self.violations),
            "ok": self.ok,
        }


def _axis_point(graph: DefiningGraph, g_codes: bytes, offset: int) -> bytes:
    """Normal form of the axis vertex ``offset`` letters from the basepoint."""
    span = len(g_codes) * 2
    doubled = g_codes * 2
    if offset >= 0:
        q, r = divmod(offset, span)
        path = doubled * q + doubled[:r]
    else:
        # the backwards path spells the inverse of (suffix + full blocks)
        q, r = divmod(-offset, span)
        path = _inv_codes(doubled) * q + (_inv_codes(doubled[span - r :]) if r else b"")
    return _nf_of(graph, path)


def search_prop_noov_violation(
    g: Word, radius: int = 3, samples: int = 200, seed: int = 0x5C1
) -> NoOverlapSearchReport:
    """Look for an element carrying a long attracting-axis segment backwards.

    Vertex pairs x, y are taken on the axis of ``g`` (two periods either
    side of the basepoint) with the segment [x, y] inside the attracting
    half-space family and strictly longer than half a period.  For every
    element f of length at most ``radius`` the reversed translate is tested:
    a violation means every half-space of [f*y, f*x] still lies in the
    attracting family.  None is expected; the identity element is the
    canonical near-miss (it reverses the segment exactly).
    """
    from .cube import _require_cyclically_reduced  # shared validation

    _require_cyclically_reduced(g)
    graph = g.graph
    rng = random.Random(seed)
    period = len(g.codes)
    offsets = range(-2 * period, 2 * period + 1)
    pairs = [
        (i, j)
        for i in offsets
        for j in offsets
        if j > i and 2 * (j - i) > period
    ]
    if len(pairs) > samples:
        pairs = sorted(rng.sample(pairs, samples))
    pool = ball(graph, radius)
    report = NoOverlapSearchReport(g=g, radius=radius, samples=samples, seed=seed)
    report.elements_checked = len(pool)
    for i, j in pairs:
        x = Word(graph, _axis_point(graph, g.codes, i))
        y = Word(graph, _axis_point(graph, g.codes, j))
        segment = interval(x, y)
        if not all(in_a_g_plus(g, hs) for hs in segment.halfspaces):
            report.premise_failures += 1
            continue
        report.pairs_checked += 1
        for f in pool:
            report.triples_checked += 1
            fy = Word(graph, _reduce_codes(graph, f.codes + y.codes))
            fx = Word(graph, _reduce_codes(graph, f.codes + x.codes))
            reversed_segment = interval(fy, fx)
            if all(in_a_g_plus(g, hs) for hs in reversed_segment.halfspaces):
                report.violations.append(
                    f"f={f.display()} carries [{x.display()}, {y.display()}] "
                    "backwards inside the attracting family"
                )
    return report
