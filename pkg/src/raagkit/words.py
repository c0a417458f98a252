"""Words in a right-angled Artin group.

A word is a sequence of letters ``v`` or ``v^-1`` over the vertices of a
defining graph.  Internally letters are packed into a ``bytes`` object: the
generator with vertex index ``i`` becomes byte ``2*i`` and its inverse byte
``2*i + 1``.  Byte-wise comparison of packed words is then exactly the letter
order every deterministic choice in this package uses (vertex order, with each
generator just before its inverse).

Two different notions of equality matter and are kept strictly apart:

* ``Word.__eq__`` is structural — same graph, same letter sequence.  This is
  what sets and dict keys use.
* :func:`equal` is equality in the group, decided via normal forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    EmptyWord,
    GraphMismatch,
    NotCyclicallyReduced,
    NotReduced,
    UnknownGenerator,
    WordSyntaxError,
)
from .graphs import DefiningGraph

_TOKEN_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")

_NF_CACHE_LIMIT = 400_000


class Letter(NamedTuple):
    name: str
    sign: int  # +1 or -1


# ---------------------------------------------------------------------------
# code-level engine (operates on bytes of letter codes)
# ---------------------------------------------------------------------------


def _inv_codes(codes: bytes) -> bytes:
    return bytes(c ^ 1 for c in reversed(codes))


def _reduce_codes(graph: DefiningGraph, codes: bytes) -> bytes:
    """Fully reduce a coded word.

    Single left-to-right pass with a stack.  An incoming letter cancels the
    nearest earlier copy of its inverse that it can reach by commuting past
    every letter in between; otherwise it is pushed.  A letter that fails to
    commute blocks the scan, because no shuffle can move the pair together
    past it.
    """
    nc = graph._nc_mask
    stack: list[int] = []
    for c in codes:
        inv = c ^ 1
        pos = len(stack) - 1
        cancelled = False
        while pos >= 0:
            s = stack[pos]
            if s == inv:
                del stack[pos]
                cancelled = True
                break
            if (nc[s] >> c) & 1:
                break
            pos -= 1
        if not cancelled:
            stack.append(c)
    return bytes(stack)


def _normal_codes(graph: DefiningGraph, reduced: bytes) -> bytes:
    """Lexicographic normal form of an already-reduced coded word.

    Greedy: the next output letter is the least letter that can be shuffled
    to the front of what remains, i.e. the least letter not blocked by an
    earlier non-commuting letter.  Results are cached per graph.
    """
    cache = graph._nf_cache
    hit = cache.get(reduced)
    if hit is not None:
        return hit
    nc = graph._nc_mask
    remaining = list(reduced)
    out = bytearray()
    while remaining:
        blocked = 0
        best_pos = -1
        best_code = 0x7FFFFFFF
        for pos, c in enumerate(remaining):
            if c < best_code and not (blocked >> c) & 1:
                best_code = c
                best_pos = pos
                if c == 0:
                    break
            blocked |= nc[c]
        out.append(best_code)
        del remaining[best_pos]
    result = bytes(out)
    if len(cache) >= _NF_CACHE_LIMIT:
        cache.clear()
    cache[reduced] = result
    return result


def _nf_of(graph: DefiningGraph, codes: bytes) -> bytes:
    return _normal_codes(graph, _reduce_codes(graph, codes))


def _dist_codes(graph: DefiningGraph, x: bytes, y: bytes) -> int:
    """Word-length distance between group elements given by coded words."""
    return len(_reduce_codes(graph, _inv_codes(x) + y))


def _front_movable_positions(graph: DefiningGraph, codes: bytes) -> list[int]:
    """Positions whose letter commutes with everything before it."""
    nc = graph._nc_mask
    blocked = 0
    out = []
    for pos, c in enumerate(codes):
        if not (blocked >> c) & 1:
            out.append(pos)
        blocked |= nc[c]
    return out


def _back_movable_positions(graph: DefiningGraph, codes: bytes) -> list[int]:
    """Positions whose letter commutes with everything after it."""
    nc = graph._nc_mask
    blocked = 0
    out = []
    for pos in range(len(codes) - 1, -1, -1):
        c = codes[pos]
        if not (blocked >> c) & 1:
            out.append(pos)
        blocked |= nc[c]
    out.reverse()
    return out


def _strip_suffix_in(graph: DefiningGraph, codes: bytes, gen_mask: int) -> bytes:
    """Shortest coset representative for a subgroup of commuting-closed kind.

    Greedily deletes, until none remains, the rightmost letter whose generator
    lies in ``gen_mask`` (a bitmask over vertex indices) and which commutes
    with every letter after it.  For a reduced input this computes the minimal
    representative of ``w * <gen_mask>``.
    """
    work = bytearray(codes)
    nc = graph._nc_mask
    while True:
        blocked = 0
        hit = -1
        for pos in range(len(work) - 1, -1, -1):
            c = work[pos]
            if not (blocked >> c) & 1 and (gen_mask >> (c >> 1)) & 1:
                hit = pos
                break
            blocked |= nc[c]
        if hit < 0:
            return bytes(work)
        del work[hit]


def _strip_front_in(graph: DefiningGraph, codes: bytes, gen_mask: int) -> bytes:
    """Greedily delete front-movable letters with generator in ``gen_mask``."""
    work = bytearray(codes)
    nc = graph._nc_mask
    while True:
        blocked = 0
        hit = -1
        for pos, c in enumerate(work):
            if not (blocked >> c) & 1 and (gen_mask >> (c >> 1)) & 1:
                hit = pos
                break
            blocked |= nc[c]
        if hit < 0:
            return bytes(work)
        del work[hit]


def _cyc_reduce_codes(graph: DefiningGraph, codes: bytes) -> tuple[bytes, bytes]:
    """Return ``(core, conjugator)`` with ``word = conjugator core conjugator^-1``.

    The input is reduced first.  Then, while some letter can be shuffled to
    the front whose inverse can be shuffled to the back, the least such letter
    is stripped from both ends and recorded.  Stripping a front-movable letter
    and a back-movable letter from a reduced word leaves a reduced word, but a
    defensive re-reduce keeps the invariant locally checkable.
    """
    work = _reduce_codes(graph, codes)
    conj = bytearray()
    while True:
        front = _front_movable_positions(graph, work)
        back = _back_movable_positions(graph, work)
        back_codes = {work[p]: p for p in back}
        candidate = None
        for p in front:
            c = work[p]
            q = back_codes.get(c ^ 1)
            if q is not None and q != p:
                if candidate is None or c < work[candidate[0]]:
                    candidate = (p, q)
        if candidate is None:
            return bytes(work), bytes(conj)
        p, q = candidate
        conj.append(work[p])
        work = bytearray(work)
        del work[q]
        del work[p]
        work = bytearray(_reduce_codes(graph, bytes(work)))


# ---------------------------------------------------------------------------
# public word type
# ---------------------------------------------------------------------------


class Word:
    """An unreduced word over the generators of a defining graph.

    Immutable.  Equality and hashing are structural (graph plus exact letter
    sequence); use :func:`equal` for equality in the group.  The ``*``, ``~``
    and ``**`` operators are literal concatenation, inversion and repetition —
    they never reduce.
    """

    __slots__ = ("graph", "codes", "_hash")

    def __init__(self, graph: DefiningGraph, codes: bytes):
        if any(c >= graph.letter_count for c in codes):
            raise UnknownGenerator("letter code out of range for this graph")
        self.graph = graph
        self.codes = codes
        self._hash = hash((graph, codes))

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, graph: DefiningGraph) -> "Word":
        return cls(graph, b"")

    @classmethod
    def from_letters(cls, graph: DefiningGraph, letters: Iterable[Letter | tuple[str, int]]) -> "Word":
        codes = bytearray()
        for name, sign in letters:
            if sign not in (1, -1):
                raise WordSyntaxError(f"letter sign must be +1 or -1, got {sign!r}")
            if not graph.has_vertex(name):
                raise UnknownGenerator(f"unknown generator {name!r}")
            codes.append(graph.code(name, sign))
        return cls(graph, bytes(codes))

    @classmethod
    def parse(cls, graph: DefiningGraph, text: str) -> "Word":
        """Parse a word string.

        Accepted forms:

        * ``"1"`` or the empty string: the identity.
        * whitespace-separated tokens ``name`` or ``name^k`` for integer k,
          e.g. ``"a b^-1 a^2"``;
        * a single run of letters with upper case meaning inverse, e.g.
          ``"abAB"`` — available when the relevant vertices are single
          characters.
        """
        text = text.strip()
        if text in ("", "1"):
            return cls.identity(graph)
        tokens = text.split()
        if len(tokens) == 1 and tokens[0].isalpha() and not graph.has_vertex(tokens[0]):
            return cls._parse_compact(graph, tokens[0])
        codes = bytearray()
        for tok in tokens:
            m = _TOKEN_RE.match(tok)
            if not m:
                raise WordSyntaxError(f"malformed token {tok!r}")
            name, exp_s = m.group(1), m.group(2)
            if not graph.has_vertex(name):
                raise UnknownGenerator(f"unknown generator {name!r} in token {tok!r}")
            exp = 1 if exp_s is None else int(exp_s)
            code = graph.code(name, 1 if exp >= 0 else -1)
            codes.extend([code] * abs(exp))
        return cls(graph, bytes(codes))

    @classmethod
    def _parse_compact(cls, graph: DefiningGraph, run: str) -> "Word":
        codes = bytearray()
        for ch in run:
            if graph.has_vertex(ch):
                codes.append(graph.code(ch, 1))
            elif ch.isupper() and graph.has_vertex(ch.lower()):
                codes.append(graph.code(ch.lower(), -1))
            else:
                raise UnknownGenerator(f"unknown generator {ch!r} in {run!r}")
        return cls(graph, bytes(codes))

    # -- structural value semantics ----------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.graph == other.graph
            and self.codes == other.codes
        )

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.codes)

    def __bool__(self) -> bool:  # identity word is falsy on purpose
        return bool(self.codes)

    @property
    def is_identity(self) -> bool:
        return not self.codes

    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(*self.graph.decode(c)) for c in self.codes)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters())

    # -- literal operators --------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return inverse(self)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return power(inverse(self), -n)
        return power(self, n)

    # -- rendering ----------------------------------------------------------

    def display(self) -> str:
        """Human-oriented rendering; the identity renders as ``"1"``."""
        if not self.codes:
            return "1"
        if all(len(v) == 1 and v.islower() for v in self.graph.vertices):
            return "".join(
                name if sign > 0 else name.upper() for name, sign in self.letters()
            )
        return " ".join(
            name if sign > 0 else f"{name}^-1" for name, sign in self.letters()
        )

    def __str__(self) -> str:
        return self.display()

    def __repr__(self) -> str:
        return f"Word({self.display()!r})"


def _require_same_graph(*words: Word) -> DefiningGraph:
    graph = words[0].graph
    for w in words[1:]:
        if w.graph != graph:
            raise GraphMismatch("words live over different defining graphs")
    return graph


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def concat(w1: Word, w2: Word) -> Word:
    """Literal concatenation; no reduction is performed."""
    graph = _require_same_graph(w1, w2)
    return Word(graph, w1.codes + w2.codes)


def inverse(word: Word) -> Word:
    """Formal inverse: reversed letters with flipped signs."""
    return Word(word.graph, _inv_codes(word.codes))


def power(word: Word, n: int) -> Word:
    """Literal ``n``-fold repetition; negative ``n`` repeats the inverse."""
    if n < 0:
        return Word(word.graph, _inv_codes(word.codes) * (-n))
    return Word(word.graph, word.codes * n)


def reduce(word: Word) -> Word:
    """A fully reduced word representing the same group element.

    Letter order is preserved except for cancellations, so the result of
    reducing an already-reduced word is that word itself.
    """
    return Word(word.graph, _reduce_codes(word.graph, word.codes))


def is_reduced(word: Word) -> bool:
    return _reduce_codes(word.graph, word.codes) == word.codes


def normal_form(word: Word) -> Word:
    """The canonical representative: reduce, then shuffle lexicographically least."""
    return Word(word.graph, _nf_of(word.graph, word.codes))


def equal(w1: Word, w2: Word) -> bool:
    """Equality as group elements."""
    graph = _require_same_graph(w1, w2)
    return _nf_of(graph, w1.codes) == _nf_of(graph, w2.codes)


def exponent_vector(word: Word) -> dict[str, int]:
    """Net exponent of every generator (zero entries included)."""
    out = {v: 0 for v in word.graph.vertices}
    for name, sign in word.letters():
        out[name] += sign
    return out


@dataclass(frozen=True)
class CyclicReduction:
    """Result of cyclic reduction: ``original = conjugator * core * conjugator^-1``."""

    core: Word
    conjugator: Word


def cyclically_reduce(word: Word) -> CyclicReduction:
    """Cyclically reduce a word.

    Returns a cyclically reduced core in normal form together with a reduced
    conjugating word ``u`` such that the input equals ``u core u^-1`` in the
    group.
    """
    core, conj = _cyc_reduce_codes(word.graph, word.codes)
    return CyclicReduction(
        core=Word(word.graph, _normal_codes(word.graph, core)),
        conjugator=Word(word.graph, conj),
    )


def is_cyclically_reduced(word: Word) -> bool:
    """True when the word is reduced and no conjugation can shorten it.

    Equivalently: no letter that can shuffle to the front has an inverse that
    can shuffle to the back.  Unreduced words simply return False.
    """
    if not is_reduced(word):
        return False
    core, conj = _cyc_reduce_codes(word.graph, word.codes)
    return not conj


class CyclicWord:
    """A cyclic word: a cyclically reduced word considered up to rotation.

    Construction validates the representative: it must be nonempty, reduced,
    and cyclically reduced.  Equality and hashing use the least rotation of
    the packed letters, so two representatives of the same rotation class
    compare equal.
    """

    __slots__ = ("word", "_canon", "_hash")

    def __init__(self, word: Word):
        if word.is_identity:
            raise EmptyWord("a cyclic word must be nonempty")
        if not is_reduced(word):
            raise NotReduced(f"{word.display()!r} is not reduced")
        core, conj = _cyc_reduce_codes(word.graph, word.codes)
        if conj:
            raise NotCyclicallyReduced(f"{word.display()!r} is not cyclically reduced")
        self.word = word
        codes = word.codes
        self._canon = min(codes[i:] + codes[:i] for i in range(len(codes)))
        self._hash = hash((word.graph, self._canon))

    @property
    def graph(self) -> DefiningGraph:
        return self.word.graph

    def __len__(self) -> int:
        return len(self.word)

    def rotations(self) -> tuple[Word, ...]:
        codes = self.word.codes
        return tuple(
            Word(self.graph, codes[i:] + codes[:i]) for i in range(len(codes))
        )

    def canonical(self) -> Word:
        """The least rotation of the representative."""
        return Word(self.graph, self._canon)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CyclicWord)
            and self.graph == other.graph
            and self._canon == other._canon
        )

    def __hash__(self) -> int:
        return self._hash

    def display(self) -> str:
        return self.word.display()

    def __str__(self) -> str:
        return self.display()

    def __repr__(self) -> str:
        return f"CyclicWord({self.display()!r})"
