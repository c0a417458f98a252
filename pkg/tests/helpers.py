"""Independent oracles and builders for the test suite.

Everything here is deliberately naive and written against its own data
representations (letters as (name, sign) tuples, graphs as (names, edge
set) pairs) so that agreement with the package is meaningful evidence, not
a tautology.  The only package facilities reused are parsing and normal
forms where an oracle explicitly concerns a *different* layer (noted at the
function in question).
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

Letter = tuple[str, int]
WordT = tuple[Letter, ...]


def adj_set(names, edges):
    out = {n: set() for n in names}
    for a, b in edges:
        out[a].add(b)
        out[b].add(a)
    return out


# ---------------------------------------------------------------------------
# word oracle: rewriting by elementary moves only
# ---------------------------------------------------------------------------


def moves_closure(names, edges, word: WordT, cap: int = 500_000) -> set[WordT]:
    """All words reachable by commuting swaps and inverse-pair deletions.

    These are the defining relations applied literally; no normal-form
    theory is assumed.  The closure is finite since moves never lengthen.
    """
    adj = adj_set(names, edges)
    seen = {tuple(word)}
    queue = [tuple(word)]
    while queue:
        w = queue.pop()
        for i in range(len(w) - 1):
            (a, sa), (b, sb) = w[i], w[i + 1]
            if a == b and sa == -sb:
                nw = w[:i] + w[i + 2 :]
                if nw not in seen:
                    seen.add(nw)
                    queue.append(nw)
            if a != b and b in adj[a]:
                nw = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                if nw not in seen:
                    seen.add(nw)
                    queue.append(nw)
        if len(seen) > cap:
            raise RuntimeError("moves closure exploded past the cap")
    return seen


def oracle_canonical(names, edges, word: WordT) -> WordT:
    """Least (length, lexicographic) member of the moves closure.

    A complete invariant of the group element: two words are equal in the
    group iff their canonicals coincide.
    """
    return min(moves_closure(names, edges, word), key=lambda w: (len(w), w))


def geodesic_descend(names, edges, word: WordT, cap: int = 500_000):
    """Shrink a word to geodesic length by elementary moves alone.

    Explores the swap-closure of the current word breadth-first; on the
    first available inverse-pair deletion it restarts from the shorter
    word.  When a closure is exhausted with no deletion anywhere, the word
    is geodesic and the closure is the element's full set of geodesic
    spellings.  Returns (geodesic word, closure).
    """
    adj = adj_set(names, edges)
    current = tuple(word)
    while True:
        seen = {current}
        queue = [current]
        shorter = None
        while queue and shorter is None:
            u = queue.pop()
            for i in range(len(u) - 1):
                (a, sa), (b, sb) = u[i], u[i + 1]
                if a == b and sa == -sb:
                    shorter = u[:i] + u[i + 2 :]
                    break
                if a != b and b in adj[a]:
                    nu = u[:i] + (u[i + 1], u[i]) + u[i + 2 :]
                    if nu not in seen:
                        seen.add(nu)
                        queue.append(nu)
            if len(seen) > cap:
                raise RuntimeError("swap closure exploded past the cap")
        if shorter is None:
            return current, seen
        current = shorter


def cayley_ball(names, edges, radius: int):
    """Breadth-first distances from the identity, keyed by oracle canonicals."""
    letters = [(n, s) for n in names for s in (1, -1)]
    dist = {(): 0}
    frontier = [()]
    for d in range(1, radius + 1):
        nxt = []
        for w in frontier:
            for letter in letters:
                key = oracle_canonical(names, edges, w + (letter,))
                if key not in dist:
                    dist[key] = d
                    nxt.append(key)
        frontier = nxt
    return dist


def random_word(rng: random.Random, names, max_len: int) -> WordT:
    length = rng.randint(0, max_len)
    return tuple(
        (rng.choice(list(names)), rng.choice((1, -1))) for _ in range(length)
    )


# ---------------------------------------------------------------------------
# overlap oracle: cubic-time cyclic scan on tuples
# ---------------------------------------------------------------------------


def naive_max_cyclic_overlap(word: WordT, mode: str = "disjoint") -> int:
    n = len(word)
    if n == 0:
        return 0
    doubled = word + word
    inv = lambda w: tuple((a, -s) for a, s in reversed(w))
    best = 0
    top = n if mode == "any" else n // 2
    for length in range(1, top + 1):
        found = False
        for i in range(n):
            u = doubled[i : i + length]
            for j in range(n):
                if i == j:
                    continue
                if mode == "disjoint" and (
                    (j - i) % n < length or (i - j) % n < length
                ):
                    continue
                if doubled[j : j + length] == inv(u):
                    found = True
                    break
            if found:
                break
        if found:
            best = length
    return best


def cyclic_closure_max(names, edges, word: WordT, mode: str = "disjoint", cap: int = 200_000) -> int:
    """Max inverse overlap over the whole rotation/swap closure, brute force."""
    adj = adj_set(names, edges)
    seen = {tuple(word)}
    queue = [tuple(word)]
    best = 0
    while queue:
        u = queue.pop()
        best = max(best, naive_max_cyclic_overlap(u, mode))
        moves = [u[1:] + u[:1]]
        for i in range(len(u) - 1):
            if u[i][0] != u[i + 1][0] and u[i + 1][0] in adj[u[i][0]]:
                moves.append(u[:i] + (u[i + 1], u[i]) + u[i + 2 :])
        for nu in moves:
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
        if len(seen) > cap:
            raise RuntimeError("cyclic closure exploded past the cap")
    return best


# ---------------------------------------------------------------------------
# coloring oracle
# ---------------------------------------------------------------------------


def proper_coloring_exists(names, edges, k: int) -> bool:
    """Plain backtracking over vertex order; no heuristics, no bounds."""
    names = list(names)
    adj = adj_set(names, edges)
    colors: dict[str, int] = {}

    def place(i: int) -> bool:
        if i == len(names):
            return True
        v = names[i]
        for c in range(k):
            if all(colors.get(u) != c for u in adj[v]):
                colors[v] = c
                if place(i + 1):
                    return True
                del colors[v]
        return False

    return place(0)


# ---------------------------------------------------------------------------
# hyperplane oracle: square crawling with union-find
# ---------------------------------------------------------------------------


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[x] = p
        return p

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def square_crawl_walls(graph, compare_radius: int, crawl_radius: int):
    """Partition edges into hyperplane classes by crawling across squares.

    Two edges are elementary-parallel when they are opposite sides of a
    square, i.e. the positively-oriented edge (x, x*a) matches (x*u, x*u*a)
    for a single letter u adjacent to a.  The partition is the transitive
    closure inside the crawl ball.  Vertex identity uses the package's
    normal form (this oracle targets the half-space layer, whose
    correctness is separate from word canonicalization).

    Returns (edges_to_compare, root mapping) where edges are (nf codes, gen)
    pairs with both endpoints inside the compare ball.
    """
    from raagkit.words import _nf_of

    # breadth-first vertex enumeration, nf codes as identity
    seen = {b""}
    frontier = [b""]
    layers = [[b""]]
    for _ in range(crawl_radius):
        nxt = []
        for v in frontier:
            for c in range(graph.letter_count):
                w = _nf_of(graph, v + bytes([c]))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
        layers.append(nxt)
    in_crawl = seen
    by_radius = {v: r for r, layer in enumerate(layers) for v in layer}

    def edge_nodes(radius):
        out = []
        for v in in_crawl:
            if by_radius[v] > radius:
                continue
            for gen in range(len(graph.vertices)):
                head = _nf_of(graph, v + bytes([2 * gen]))
                if head in in_crawl and by_radius[head] <= radius:
                    out.append((v, gen))
        return out

    uf = UnionFind()
    for v, gen in edge_nodes(crawl_radius):
        lk = graph._lk_mask[gen]
        for other in range(len(graph.vertices)):
            if not (lk >> other) & 1:
                continue
            for u_code in (2 * other, 2 * other + 1):
                shifted = _nf_of(graph, v + bytes([u_code]))
                if shifted in in_crawl:
                    head = _nf_of(graph, shifted + bytes([2 * gen]))
                    if head in in_crawl:
                        uf.union((v, gen), (shifted, gen))
    compare = edge_nodes(compare_radius)
    return compare, {e: uf.find(e) for e in compare}


# ---------------------------------------------------------------------------
# exhaustive conjugacy-class enumeration for the overlap suite
# ---------------------------------------------------------------------------


def rotation_classes(graph, max_len: int) -> list[bytes]:
    """Every cyclically reduced word of length <= max_len, one per rotation class."""
    from raagkit.words import _cyc_reduce_codes

    n2 = graph.letter_count
    nc = graph._nc_mask
    out: list[bytes] = []
    prefix = bytearray()

    def ok_append(c: int) -> bool:
        # appending must not create a cancellable pair with an earlier letter
        for p in range(len(prefix) - 1, -1, -1):
            cp = prefix[p]
            if cp == c ^ 1:
                return False
            if (nc[cp] >> c) & 1:
                return True
        return True

    def visit() -> None:
        if prefix:
            b = bytes(prefix)
            if b == min_rotation(b):
                core, conj = _cyc_reduce_codes(graph, b)
                if not conj and len(core) == len(b):
                    out.append(b)
        if len(prefix) < max_len:
            for c in range(n2):
                if ok_append(c):
                    prefix.append(c)
                    visit()
                    prefix.pop()

    visit()
    return out


def min_rotation(b: bytes) -> bytes:
    bb = b + b
    return min(bb[i : i + len(b)] for i in range(len(b)))


def inv_letter_codes(b: bytes) -> bytes:
    return bytes(c ^ 1 for c in reversed(b))


def graph_automorphisms(graph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving adjacency (brute force, n <= 7)."""
    n = len(graph.vertices)
    idx = graph.index
    edges = set()
    for a, b in graph.edges:
        edges.add((idx[a], idx[b]))
        edges.add((idx[b], idx[a]))
    return [
        p
        for p in permutations(range(n))
        if all(
            ((p[i], p[j]) in edges) == ((i, j) in edges)
            for i in range(n)
            for j in range(i + 1, n)
        )
    ]


def letter_symmetry_tables(graph) -> list[bytes]:
    """Byte-translate tables for every graph automorphism and sign flip.

    Each is an automorphism of the group sending letters to letters, hence
    preserves cyclic reducedness, lengths, rotation/swap closures, and
    formal-inverse occurrences; overlap maxima are invariant under them.
    """
    n = len(graph.vertices)
    ident = bytes(range(256))
    tables = []
    for perm in graph_automorphisms(graph):
        for flips in range(1 << n):
            t = bytearray(ident)
            for i in range(n):
                s = (flips >> i) & 1
                t[2 * i] = 2 * perm[i] + s
                t[2 * i + 1] = 2 * perm[i] + (s ^ 1)
            tables.append(bytes(t))
    return tables


def orbit_representatives(classes: list[bytes], tables: list[bytes]) -> list[bytes]:
    """One representative per symmetry orbit (tables + inversion + rotation)."""
    seen: set[bytes] = set()
    reps: list[bytes] = []
    for w in classes:
        if w in seen:
            continue
        reps.append(w)
        for t in tables:
            tw = w.translate(t)
            seen.add(min_rotation(tw))
            seen.add(min_rotation(inv_letter_codes(tw)))
    return reps


# ---------------------------------------------------------------------------
# angled-complex builders
# ---------------------------------------------------------------------------


def _half(count):
    return [Fraction(1, 2)] * count


def torus_grid(m: int, n: int):
    """m x n square grid on the torus; all angles pi/2."""
    from raagkit.complexes import AngledComplex

    def v(i, j):
        return f"v{i % m}_{j % n}"

    vertices = [v(i, j) for i in range(m) for j in range(n)]
    east = {}
    south = {}
    edges = []
    next_id = 1
    for i in range(m):
        for j in range(n):
            east[i, j] = next_id
            edges.append((next_id, (v(i, j), v(i, j + 1))))
            next_id += 1
            south[i, j] = next_id
            edges.append((next_id, (v(i, j), v(i + 1, j))))
            next_id += 1
    faces = []
    for i in range(m):
        for j in range(n):
            boundary = [
                east[i, j],
                south[i % m, (j + 1) % n],
                -east[(i + 1) % m, j],
                -south[i, j],
            ]
            faces.append((f"f{i}_{j}", boundary, _half(4)))
    return AngledComplex(vertices, edges, faces)


def disk_grid(m: int, n: int):
    """m x n square grid as a disk (no wrapping); all angles pi/2."""
    from raagkit.complexes import AngledComplex

    def v(i, j):
        return f"v{i}_{j}"

    vertices = [v(i, j) for i in range(m + 1) for j in range(n + 1)]
    east = {}
    south = {}
    edges = []
    next_id = 1
    for i in range(m + 1):
        for j in range(n):
            east[i, j] = next_id
            edges.append((next_id, (v(i, j), v(i, j + 1))))
            next_id += 1
    for i in range(m):
        for j in range(n + 1):
            south[i, j] = next_id
            edges.append((next_id, (v(i, j), v(i + 1, j))))
            next_id += 1
    faces = []
    for i in range(m):
        for j in range(n):
            boundary = [east[i, j], south[i, j + 1], -east[i + 1, j], -south[i, j]]
            faces.append((f"f{i}_{j}", boundary, _half(4)))
    return AngledComplex(vertices, edges, faces)


def annulus_grid(m: int, n: int):
    """m rows of faces wrapping around in the second coordinate."""
    from raagkit.complexes import AngledComplex

    def v(i, j):
        return f"v{i}_{j % n}"

    vertices = [v(i, j) for i in range(m + 1) for j in range(n)]
    east = {}
    south = {}
    edges = []
    next_id = 1
    for i in range(m + 1):
        for j in range(n):
            east[i, j] = next_id
            edges.append((next_id, (v(i, j), v(i, j + 1))))
            next_id += 1
    for i in range(m):
        for j in range(n):
            south[i, j] = next_id
            edges.append((next_id, (v(i, j), v(i + 1, j))))
            next_id += 1
    faces = []
    for i in range(m):
        for j in range(n):
            boundary = [
                east[i, j],
                south[i, (j + 1) % n],
                -east[i + 1, j],
                -south[i, j],
            ]
            faces.append((f"f{i}_{j}", boundary, _half(4)))
    return AngledComplex(vertices, edges, faces)


def genus2_octagon():
    """One vertex, four loops, a single octagon with angles pi/4."""
    from raagkit.complexes import AngledComplex

    edges = [(i, ("v", "v")) for i in (1, 2, 3, 4)]
    boundary = [1, 2, -1, -2, 3, 4, -3, -4]
    return AngledComplex(["v"], edges, [("f", boundary, [Fraction(1, 4)] * 8)])


def random_valid_complex(rng: random.Random):
    """A structurally valid complex with arbitrary rational angles.

    The curvature identity holds for *any* angle assignment, so angles are
    drawn freely; only the cell structure must be consistent.
    """
    kind = rng.randrange(4)
    if kind == 0:
        cx = torus_grid(rng.randint(1, 3), rng.randint(1, 3))
    elif kind == 1:
        cx = disk_grid(rng.randint(1, 3), rng.randint(1, 3))
    elif kind == 2:
        cx = annulus_grid(rng.randint(1, 2), rng.randint(1, 3))
    else:
        cx = genus2_octagon()
    from raagkit.complexes import AngledComplex

    faces = []
    for fid in cx.face_order:
        boundary, angles = cx.faces[fid]
        new_angles = [
            Fraction(rng.randint(-6, 12), rng.choice((1, 2, 3, 4, 6)))
            for _ in angles
        ]
        faces.append((fid, list(boundary), new_angles))
    edges = [(e, cx.edges[e]) for e in cx.edge_order]
    return AngledComplex(list(cx.vertices), edges, faces)
