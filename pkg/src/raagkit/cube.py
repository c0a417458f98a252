"""Half-space calculus on the universal cover of the Salvetti complex.

Vertices of the cover are group elements (the basepoint is the identity);
oriented edges are right multiplications by a generator or its inverse.  A
hyperplane dual to an edge ``(x, x*a)`` is determined by the coset
``x*<lk(a)>`` together with the label ``a``, because parallel edges differ by
right multiplication by generators adjacent to ``a``.  A half-space adds a
sign: ``+`` is the side containing ``base*a``, ``-`` the side containing
``base``.

Canonical form: the base is the unique minimal-length representative of the
coset, reached by greedily deleting suffix-movable letters whose generators
are adjacent to the label, then taking the normal form.  Equality of
half-spaces is then plain equality of ``(base, label, sign)``.

Relations come in two flavors.  ``crosses``/``nested``/``tightly_nested``
are evaluated inside a finite context interval by quadrant counting over the
interval's vertex set.  The module also provides global variants (no context
needed) used by the axiom checkers, based on a double-coset membership test
for crossing and on membership probes for nesting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import ceil
from typing import Optional, Sequence

from .errors import (
    ChainTooShort,
    EmptyWord,
    GraphMismatch,
    HullTooLarge,
    NotCyclicallyReduced,
    NotInContext,
    NotNested,
    UnknownGenerator,
)
from .graphs import DefiningGraph
from .words import (
    Letter,
    Word,
    _cyc_reduce_codes,
    _dist_codes,
    _inv_codes,
    _nf_of,
    _normal_codes,
    _reduce_codes,
    _strip_front_in,
    _strip_suffix_in,
    is_cyclically_reduced,
    normal_form,
)

#: Default cap on the size of a context interval's vertex set.
DEFAULT_HULL_CAP = 100_000


# ---------------------------------------------------------------------------
# canonical half-spaces
# ---------------------------------------------------------------------------


def _canon_base(graph: DefiningGraph, codes: bytes, gen: int) -> bytes:
    """Minimal representative of ``codes * <letters adjacent to gen>``."""
    reduced = _reduce_codes(graph, codes)
    key = (reduced, gen)
    cache = graph._canon_base_cache
    hit = cache.get(key)
    if hit is None:
        stripped = _strip_suffix_in(graph, reduced, graph._lk_mask[gen])
        hit = _normal_codes(graph, stripped)
        if len(cache) < 400_000:
            cache[key] = hit
    return hit


class HalfSpace:
    """An oriented half-space in canonical coset form.

    ``sign == +1`` selects the side containing ``base * label``; ``-1`` the
    side containing ``base``.  Instances are immutable value objects.
    """

    __slots__ = ("graph", "base_codes", "label_index", "sign", "_hash")

    def __init__(self, graph: DefiningGraph, base_codes: bytes, label_index: int, sign: int):
        self.graph = graph
        self.base_codes = base_codes
        self.label_index = label_index
        self.sign = sign
        self._hash = hash((graph, base_codes, label_index, sign))

    @property
    def base(self) -> Word:
        return Word(self.graph, self.base_codes)

    @property
    def label(self) -> str:
        return self.graph.vertices[self.label_index]

    def complement(self) -> "HalfSpace":
        return HalfSpace(self.graph, self.base_codes, self.label_index, -self.sign)

    def defining_edge(self) -> tuple[Word, Letter]:
        """The canonical dual edge, as (initial vertex, positively signed letter)."""
        return self.base, Letter(self.label, 1)

    def wall_key(self) -> tuple[bytes, int]:
        """Orientation-free identity of the underlying hyperplane."""
        return (self.base_codes, self.label_index)

    def sort_key(self) -> tuple[bytes, int, int]:
        return (self.base_codes, self.label_index, self.sign)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HalfSpace)
            and self.graph == other.graph
            and self.base_codes == other.base_codes
            and self.label_index == other.label_index
            and self.sign == other.sign
        )

    def __hash__(self) -> int:
        return self._hash

    def display(self) -> str:
        sign = "+" if self.sign > 0 else "-"
        return f"({self.base.display()}, {self.label}, {sign})"

    def __repr__(self) -> str:
        return f"HalfSpace{self.display()}"


def _coerce_letter(graph: DefiningGraph, letter: Letter | tuple[str, int] | str) -> tuple[str, int]:
    if isinstance(letter, str):
        word = Word.parse(graph, letter)
        if len(word.codes) != 1:
            raise UnknownGenerator(f"expected a single letter, got {letter!r}")
        return graph.decode(word.codes[0])
    name, sign = letter
    if not graph.has_vertex(name):
        raise UnknownGenerator(f"unknown generator {name!r}")
    if sign not in (1, -1):
        raise UnknownGenerator(f"letter sign must be +1 or -1, got {sign!r}")
    return name, sign


def halfspace_of_edge(x: Word, letter: Letter | tuple[str, int] | str) -> HalfSpace:
    """The canonical half-space entered by crossing the edge ``(x, x*letter)``.

    The returned half-space contains ``x*letter`` and not ``x``.
    """
    graph = x.graph
    name, sign = _coerce_letter(graph, letter)
    gen = graph.index[name]
    if sign > 0:
        point = x.codes
    else:
        # the positively-oriented form of the same edge starts at x*a^-1
        point = x.codes + bytes([2 * gen + 1])
    base = _canon_base(graph, point, gen)
    return HalfSpace(graph, base, gen, sign)


def _member_codes(graph: DefiningGraph, x_reduced: bytes, hs: HalfSpace) -> bool:
    edge_head = hs.base_codes + bytes([2 * hs.label_index])
    closer_to_head = _dist_codes(graph, x_reduced, edge_head) < _dist_codes(
        graph, x_reduced, hs.base_codes
    )
    return closer_to_head if hs.sign > 0 else not closer_to_head


def member(x: Word, hs: HalfSpace) -> bool:
    """True iff the vertex ``x`` lies in the half-space.

    The two endpoints of the defining edge straddle the hyperplane, so the
    distances from ``x`` to them always differ by exactly one; membership is
    decided by which is closer.
    """
    if x.graph != hs.graph:
        raise GraphMismatch("vertex and half-space live over different graphs")
    return _member_codes(x.graph, _reduce_codes(x.graph, x.codes), hs)


def act(f: Word, hs: HalfSpace) -> HalfSpace:
    """Translate a half-space by a group element (label and sign preserved)."""
    graph = hs.graph
    if f.graph != graph:
        raise GraphMismatch("element and half-space live over different graphs")
    moved = _reduce_codes(graph, f.codes + hs.base_codes)
    base = _canon_base(graph, moved, hs.label_index)
    return HalfSpace(graph, base, hs.label_index, hs.sign)


# ---------------------------------------------------------------------------
# intervals and context relations
# ---------------------------------------------------------------------------


class Interval:
    """The half-spaces separating two vertices, oriented toward the second.

    ``halfspaces`` lists each half-space H with ``start ∉ H`` and ``end ∈ H``,
    collected by walking the normal form of ``start^-1 * end``; its length is
    the distance between the endpoints.  The vertex set of the interval (all
    vertices on geodesics) is computed lazily and capped.
    """

    def __init__(self, start: Word, end: Word, hull_cap: Optional[int] = None):
        if start.graph != end.graph:
            raise GraphMismatch("interval endpoints live over different graphs")
        graph = start.graph
        self.graph = graph
        self.start = normal_form(start)
        self.end = normal_form(end)
        self.hull_cap = DEFAULT_HULL_CAP if hull_cap is None else hull_cap

        halfspaces = []
        here = self.start.codes
        for c in _nf_of(graph, _inv_codes(self.start.codes) + self.end.codes):
            name, sign = graph.decode(c)
            halfspaces.append(halfspace_of_edge(Word(graph, here), (name, sign)))
            here = _reduce_codes(graph, here + bytes([c]))
        self.halfspaces: tuple[HalfSpace, ...] = tuple(halfspaces)
        self._index = {hs: i for i, hs in enumerate(self.halfspaces)}
        self._hull: Optional[list[bytes]] = None
        self._hull_masks: Optional[list[int]] = None

    def __len__(self) -> int:
        return len(self.halfspaces)

    def __contains__(self, hs: HalfSpace) -> bool:
        return hs in self._index

    def __iter__(self):
        return iter(self.halfspaces)

    def locate(self, hs: HalfSpace) -> tuple[int, bool]:
        """Index of the half-space; the flag marks complement orientation."""
        i = self._index.get(hs)
        if i is not None:
            return i, False
        i = self._index.get(hs.complement())
        if i is not None:
            return i, True
        raise NotInContext(f"{hs!r} does not separate the interval endpoints")

    def _ensure_hull(self) -> tuple[list[bytes], list[int]]:
        """All vertices on geodesics, with a crossed-half-space bitmask each."""
        if self._hull is not None:
            return self._hull, self._hull_masks  # type: ignore[return-value]
        graph = self.graph
        end = self.end.codes
        letters = range(graph.letter_count)
        start_nf = self.start.codes
        masks: dict[bytes, int] = {start_nf: 0}
        hull: list[bytes] = [start_nf]
        frontier: list[bytes] = [start_nf]
        while frontier:
            nxt: list[bytes] = []
            for v in frontier:
                dv = _dist_codes(graph, v, end)
                if dv == 0:
                    continue
                for c in letters:
                    w = _reduce_codes(graph, v + bytes([c]))
                    if _dist_codes(graph, w, end) != dv - 1:
                        continue
                    name, sign = graph.decode(c)
                    crossed = halfspace_of_edge(Word(graph, v), (name, sign))
                    bit = 1 << self._index[crossed]
                    w_nf = _normal_codes(graph, w)
                    mask = masks[v] | bit
                    seen = masks.get(w_nf)
                    if seen is None:
                        masks[w_nf] = mask
                        hull.append(w_nf)
                        nxt.append(w_nf)
                        if len(hull) > self.hull_cap:
                            raise HullTooLarge(
                                f"interval vertex set exceeds cap {self.hull_cap}"
                            )
                    elif seen != mask:
                        raise AssertionError(
                            "inconsistent separator sets while expanding an interval"
                        )
            frontier = nxt
        self._hull = hull
        self._hull_masks = [masks[v] for v in hull]
        return hull, self._hull_masks

    def vertices(self) -> list[Word]:
        hull, _ = self._ensure_hull()
        return [Word(self.graph, v) for v in hull]

    def _quadrants(self, h: HalfSpace, k: HalfSpace) -> set[tuple[bool, bool]]:
        i, neg_i = self.locate(h)
        j, neg_j = self.locate(k)
        _, masks = self._ensure_hull()
        seen: set[tuple[bool, bool]] = set()
        for m in masks:
            hb = bool((m >> i) & 1) ^ neg_i
            kb = bool((m >> j) & 1) ^ neg_j
            seen.add((hb, kb))
            if len(seen) == 4:
                break
        return seen


def interval(x: Word, y: Word, hull_cap: Optional[int] = None) -> Interval:
    """The interval from ``x`` to ``y``: half-spaces oriented toward ``y``."""
    return Interval(x, y, hull_cap=hull_cap)


def crosses(h: HalfSpace, k: HalfSpace, context: Interval) -> bool:
    """True iff the two hyperplanes cross (all four quadrants inhabited).

    Quadrants are checked over the context interval's vertex set, which is
    enough because intervals are convex.
    """
    if h.wall_key() == k.wall_key():
        context.locate(h)
        context.locate(k)
        return False
    return len(context._quadrants(h, k)) == 4


def nested(h: HalfSpace, k: HalfSpace, context: Interval) -> Optional[int]:
    """Nesting direction: +1 if h ⊃ k, -1 if k ⊃ h, None otherwise."""
    if h.wall_key() == k.wall_key():
        context.locate(h)
        context.locate(k)
        return None
    quads = context._quadrants(h, k)
    if len(quads) == 4:
        return None
    if (False, True) not in quads and (True, False) in quads:
        return 1
    if (True, False) not in quads and (False, True) in quads:
        return -1
    return None


def _between_in_context(
    context: Interval, outer: HalfSpace, inner: HalfSpace
) -> Optional[HalfSpace]:
    """A context half-space strictly between outer ⊃ inner, if any."""
    for cand in context.halfspaces:
        for oriented in (cand, cand.complement()):
            if oriented in (outer, inner):
                continue
            if (
                nested(outer, oriented, context) == 1
                and nested(oriented, inner, context) == 1
            ):
                return oriented
    return None


def tightly_nested(h: HalfSpace, k: HalfSpace, context: Interval) -> bool:
    """Nested with no half-space of the context strictly between.

    By convexity, a half-space between two nested half-spaces of an interval
    also separates the interval's endpoints, so checking context half-spaces
    is exhaustive.
    """
    direction = nested(h, k, context)
    if direction is None:
        return False
    outer, inner = (h, k) if direction == 1 else (k, h)
    return _between_in_context(context, outer, inner) is None


# ---------------------------------------------------------------------------
# chains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    """A strictly nested run of half-spaces, outermost first.

    Its length is the number of interior half-spaces: a chain listing
    ``H ⊃ H_1 ⊃ ... ⊃ H_n ⊃ K`` has length ``n``.
    """

    halfspaces: tuple[HalfSpace, ...]
    taut: bool = False

    @property
    def length(self) -> int:
        return len(self.halfspaces) - 2

    def __len__(self) -> int:
        return len(self.halfspaces)


def midpoint(chain: Chain) -> HalfSpace:
    """The interior half-space halfway along the chain.

    For length ``n`` the midpoint is the ``m``-th interior entry where
    ``m = n/2`` for even ``n`` and ``(n+1)/2`` for odd ``n``.
    """
    n = chain.length
    if n < 1:
        raise ChainTooShort(f"chain of length {n} has no midpoint")
    m = (n + 1) // 2
    return chain.halfspaces[m]


def _chain_candidates(
    context: Interval, outer: HalfSpace, inner: HalfSpace
) -> list[HalfSpace]:
    out = []
    for cand in context.halfspaces:
        for oriented in (cand, cand.complement()):
            if oriented in (outer, inner):
                continue
            if (
                nested(outer, oriented, context) == 1
                and nested(oriented, inner, context) == 1
            ):
                out.append(oriented)
    out.sort(key=HalfSpace.sort_key)
    return out


def _longest_paths(
    context: Interval, outer: HalfSpace, inner: HalfSpace, all_chains: bool
) -> list[tuple[HalfSpace, ...]]:
    """Maximum-length strictly nested sequences from outer to inner."""
    mids = _chain_candidates(context, outer, inner)
    nodes = list(range(len(mids)))
    # contains[i][j] = True when mids[i] strictly contains mids[j]
    contains = [
        [i != j and nested(mids[i], mids[j], context) == 1 for j in nodes]
        for i in nodes
    ]

    best_len: dict[Optional[int], int] = {}
    best_next: dict[Optional[int], list[Optional[int]]] = {}

    def solve(i: Optional[int]) -> int:
        # longest continuation from node i (None = outer) down to inner
        if i in best_len:
            return best_len[i]
        succs = nodes if i is None else [j for j in nodes if contains[i][j]]
        best = 0
        nxt: list[Optional[int]] = [None]  # None terminator = go straight to inner
        for j in succs:
            cand = 1 + solve(j)
            if cand > best:
                best, nxt = cand, [j]
            elif cand == best and cand > 0:
                nxt.append(j)
        best_len[i] = best
        best_next[i] = nxt if best > 0 else [None]
        return best

    solve(None)

    chains: list[tuple[HalfSpace, ...]] = []

    def walk(i: Optional[int], acc: list[HalfSpace]) -> None:
        targets = best_next[i]
        if best_len[i] == 0:
            chains.append(tuple(acc) + (inner,))
            return
        for j in targets:
            if j is None:
                continue
            walk(j, acc + [mids[j]])
            if not all_chains and chains:
                return

    walk(None, [outer])
    return chains


def _verify_taut(chain_halfspaces: Sequence[HalfSpace], context: Interval) -> bool:
    return all(
        tightly_nested(chain_halfspaces[i], chain_halfspaces[i + 1], context)
        for i in range(len(chain_halfspaces) - 1)
    )


def longest_chain(h: HalfSpace, k: HalfSpace, context: Interval) -> Chain:
    """A maximum-length chain of context half-spaces from ``h`` down to ``k``.

    Requires ``h ⊃ k`` in the context.  Deterministic: at every step the
    least available half-space is preferred.  The result is taut, and the
    taut flag is verified rather than assumed.
    """
    if nested(h, k, context) != 1:
        raise NotNested("longest_chain requires the first argument to contain the second")
    path = _longest_paths(context, h, k, all_chains=False)[0]
    return Chain(path, taut=_verify_taut(path, context))


def all_longest_chains(h: HalfSpace, k: HalfSpace, context: Interval) -> list[Chain]:
    """Every maximum-length chain from ``h`` down to ``k`` in the context."""
    if nested(h, k, context) != 1:
        raise NotNested("all_longest_chains requires the first argument to contain the second")
    paths = _longest_paths(context, h, k, all_chains=True)
    paths.sort(key=lambda p: [hs.sort_key() for hs in p])
    return [Chain(p, taut=_verify_taut(p, context)) for p in paths]


# ---------------------------------------------------------------------------
# medians
# ---------------------------------------------------------------------------


def median(x: Word, y: Word, z: Word) -> Word:
    """The unique vertex through which all three pairwise geodesics pass.

    Walks from ``x``, repeatedly taking the least letter that strictly
    decreases the distances to both ``y`` and ``z``; the walk stops exactly
    at the median.
    """
    if x.graph != y.graph or x.graph != z.graph:
        raise GraphMismatch("median arguments live over different graphs")
    graph = x.graph
    here = _reduce_codes(graph, x.codes)
    ty = _reduce_codes(graph, y.codes)
    tz = _reduce_codes(graph, z.codes)
    dy = _dist_codes(graph, here, ty)
    dz = _dist_codes(graph, here, tz)
    while True:
        for c in range(graph.letter_count):
            step = _reduce_codes(graph, here + bytes([c]))
            ny = _dist_codes(graph, step, ty)
            if ny != dy - 1:
                continue
            nz = _dist_codes(graph, step, tz)
            if nz != dz - 1:
                continue
            here, dy, dz = step, ny, nz
            break
        else:
            return Word(graph, _normal_codes(graph, here))


# ---------------------------------------------------------------------------
# global relations (no context interval required)
# ---------------------------------------------------------------------------


def hyperplanes_cross(h: HalfSpace, k: HalfSpace) -> bool:
    """Whether the underlying hyperplanes cross, tested globally.

    Crossing happens inside a square, so the labels must be distinct and
    adjacent, and some vertex must carry both defining edges: the bases must
    lie in a common ``<lk(h)> * <lk(k)>`` double coset.  That membership is
    decided by greedily stripping front-movable letters of the first link
    and checking the remainder lies in the second link's subgroup.
    """
    if h.graph != k.graph:
        raise GraphMismatch("half-spaces live over different graphs")
    graph = h.graph
    if h.label_index == k.label_index:
        return False
    if not (graph._lk_mask[h.label_index] >> k.label_index) & 1:
        return False
    w = _reduce_codes(graph, _inv_codes(h.base_codes) + k.base_codes)
    rest = _strip_front_in(graph, w, graph._lk_mask[h.label_index])
    k_mask = graph._lk_mask[k.label_index]
    return all((k_mask >> (c >> 1)) & 1 for c in rest)


def nested_globally(h: HalfSpace, k: HalfSpace) -> Optional[int]:
    """Global nesting direction: +1 if h ⊃ k, -1 if k ⊃ h, None otherwise.

    For distinct non-crossing hyperplanes each defining edge lies entirely on
    one side of the other hyperplane, so two membership probes classify the
    four possible configurations.
    """
    if h.wall_key() == k.wall_key():
        return None
    if hyperplanes_cross(h, k):
        return None
    h_side = _member_codes(h.graph, h.base_codes, k)  # whole edge of h vs k
    k_side = _member_codes(k.graph, k.base_codes, h)
    if k_side and not h_side:
        return 1
    if h_side and not k_side:
        return -1
    return None


def _edge_endpoint(hs: HalfSpace, inside: bool) -> bytes:
    head = hs.base_codes + bytes([2 * hs.label_index])
    on_plus_side = inside if hs.sign > 0 else not inside
    return head if on_plus_side else hs.base_codes


def tightly_nested_globally(h: HalfSpace, k: HalfSpace) -> bool:
    """Global tight nesting: nested with no half-space at all strictly between.

    Any half-space between the pair separates a point just outside the outer
    one from a point just inside the inner one, so scanning that single
    finite interval is exhaustive.
    """
    direction = nested_globally(h, k)
    if direction is None:
        return False
    outer, inner = (h, k) if direction == 1 else (k, h)
    graph = h.graph
    p_out = Word(graph, _edge_endpoint(outer, inside=False))
    p_in = Word(graph, _edge_endpoint(inner, inside=True))
    for cand in interval(p_out, p_in).halfspaces:
        if cand in (outer, inner):
            continue
        if nested_globally(outer, cand) == 1 and nested_globally(cand, inner) == 1:
            return False
    return True


# ---------------------------------------------------------------------------
# attracting-end membership
# ---------------------------------------------------------------------------


def _require_cyclically_reduced(g: Word) -> None:
    if g.is_identity:
        raise EmptyWord("the element must be nontrivial")
    if not is_cyclically_reduced(g):
        raise NotCyclicallyReduced(f"{g.display()!r} is not cyclically reduced")


def _axis_window(g: Word, hs: HalfSpace) -> int:
    """A power bound past which the axis cannot cross the given hyperplane.

    Deleting the letters adjacent to the label is a retraction fixing the
    base's coset, so the base is at least as long as the image of the axis
    point under that retraction; the image of ``g`` has a nonempty cyclically
    reduced core whose length grows linearly in the exponent.  Inverting that
    growth bound (plus slack) gives the window.
    """
    graph = g.graph
    lk = graph._lk_mask[hs.label_index]
    image = bytes(c for c in g.codes if not (lk >> (c >> 1)) & 1)
    core, conj = _cyc_reduce_codes(graph, image)
    if not core:
        raise AssertionError(
            "axis label survives the retraction but its image is conjugacy-trivial"
        )
    numer = len(hs.base_codes) + 2 * len(conj) + len(g.codes)
    return ceil(numer / len(core)) + 2


def in_a_g_plus(g: Word, hs: HalfSpace) -> bool:
    """Whether the half-space contains the attracting end of the axis of ``g``.

    Convention: ``g`` is cyclically reduced and its axis is the orbit path of
    the identity.  The half-space qualifies iff it lies in some segment
    ``[g^n, g^(n+1)]`` of that path, i.e. iff membership of ``g^n`` switches
    from false to true as ``n`` runs from a sufficiently negative to a
    sufficiently positive power.  Membership along a geodesic line switches
    at most once, so probing the two window endpoints decides it.
    """
    _require_cyclically_reduced(g)
    if g.graph != hs.graph:
        raise GraphMismatch("element and half-space live over different graphs")
    graph = g.graph
    if not any(c >> 1 == hs.label_index for c in g.codes):
        return False  # the axis only crosses hyperplanes labeled by letters of g
    m = _axis_window(g, hs)
    pos = _reduce_codes(graph, g.codes * m)
    neg = _inv_codes(pos)
    return _member_codes(graph, pos, hs) and not _member_codes(graph, neg, hs)


# ---------------------------------------------------------------------------
# randomized checks of the action axioms
# ---------------------------------------------------------------------------


def ball(graph: DefiningGraph, radius: int) -> list[Word]:
    """All group elements of length at most ``radius``, in normal form.

    Deterministic order: by length, then by packed letter codes.
    """
    seen = {b""}
    frontier = [b""]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for c in range(graph.letter_count):
                w = _nf_of(graph, v + bytes([c]))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    ordered = sorted(seen, key=lambda b: (len(b), b))
    return [Word(graph, b) for b in ordered]


@dataclass
class SpecialAxiomsReport:
    """Outcome of a randomized search for forbidden action configurations."""

    radius: int
    samples: int
    seed: int
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "radius": self.radius,
            "samples": self.samples,
            "seed": self.seed,
            "checked": dict(sorted(self.checked.items())),
            "violations": list(self.violations),
            "ok": self.ok,
        }


def check_special_axioms(
    graph: DefiningGraph, samples: int = 1000, radius: int = 3, seed: int = 0x5C1
) -> SpecialAxiomsReport:
    """Hunt for the four forbidden configurations of the group action.

    Per sample: draw half-spaces H, K dual to edges in the given ball and an
    element f of the ball, then check that
    (s1) f(H̄) never equals H,
    (s2) H never crosses f(H),
    (s3) H and f(H̄) are never tightly nested, and
    (s4) when H, K are tightly nested, H never crosses f(K).
    Any hit is recorded as a violation (it would witness an implementation
    bug, not new mathematics).
    """
    rng = random.Random(seed)
    pool = ball(graph, radius)
    letters = [
        (name, sign) for name in graph.vertices for sign in (1, -1)
    ]
    report = SpecialAxiomsReport(radius=radius, samples=samples, seed=seed)
    counts = {"s1": 0, "s2": 0, "s3": 0, "s4": 0, "s4_eligible": 0}
    if not letters:
        report.checked = counts
        return report
    for _ in range(samples):
        h = halfspace_of_edge(rng.choice(pool), rng.choice(letters))
        k = halfspace_of_edge(rng.choice(pool), rng.choice(letters))
        f = rng.choice(pool)

        counts["s1"] += 1
        if act(f, h.complement()) == h:
            report.violations.append(f"s1: f={f.display()} H={h.display()}")

        counts["s2"] += 1
        if hyperplanes_cross(h, act(f, h)):
            report.violations.append(f"s2: f={f.display()} H={h.display()}")

        counts["s3"] += 1
        if tightly_nested_globally(h, act(f, h.complement())):
            report.violations.append(f"s3: f={f.display()} H={h.display()}")

        counts["s4"] += 1
        if tightly_nested_globally(h, k):
            counts["s4_eligible"] += 1
            if hyperplanes_cross(h, act(f, k)):
                report.violations.append(
                    f"s4: f={f.display()} H={h.display()} K={k.display()}"
                )
    report.checked = counts
    return report


@dataclass
class MaxChainsReport:
    """Outcome of checking that longest-chain midpoints cross or coincide."""

    radius: int
    samples: int
    seed: int
    intervals_checked: int = 0
    nested_pairs: int = 0
    chains_enumerated: int = 0
    midpoint_pairs: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "radius": self.radius,
            "samples": self.samples,
            "seed": self.seed,
            "intervals_checked": self.intervals_checked,
            "nested_pairs": self.nested_pairs,
            "chains_enumerated": self.chains_enumerated,
            "midpoint_pairs": self.midpoint_pairs,
            "violations": list(self.violations),
            "ok": self.ok,
        }


def check_max_chains(
    graph: DefiningGraph, samples: int = 200, radius: int = 3, seed: int = 0x5C1
) -> MaxChainsReport:
    """Sample intervals and verify the longest-chain midpoint property.

    For every nested pair H ⊃ K inside a sampled interval, all longest chains
    from H to K are enumerated; every two of their midpoints must either
    coincide or cross.
    """
    rng = random.Random(seed)
    pool = ball(graph, radius)
    report = MaxChainsReport(radius=radius, samples=samples, seed=seed)
    for _ in range(samples):
        x = rng.choice(pool)
        y = rng.choice(pool)
        if x.codes == y.codes:
            continue
        ctx = interval(x, y)
        report.intervals_checked += 1
        for h in ctx.halfspaces:
            for k in ctx.halfspaces:
                if h is k or nested(h, k, ctx) != 1:
                    continue
                report.nested_pairs += 1
                chains = all_longest_chains(h, k, ctx)
                report.chains_enumerated += len(chains)
                mids = [midpoint(c) for c in chains if c.length >= 1]
                for a in range(len(mids)):
                    for b in range(a + 1, len(mids)):
                        report.midpoint_pairs += 1
                        if mids[a] == mids[b] or crosses(mids[a], mids[b], ctx):
                            continue
                        report.violations.append(
                            f"midpoints neither equal nor crossing: "
                            f"{mids[a].display()} vs {mids[b].display()} "
                            f"in [{x.display()}, {y.display()}]"
                        )
    return report
