"""Certified lower bounds for stable commutator length.

Two uniform bounds are computed from the defining graph alone: ``1/(6k)``
for any proper ``k``-coloring of the graph, and ``1/20`` when the graph has
no triangle.  Both apply to every nontrivial element whose exponent vector
vanishes (equivalently, some power lies in the commutator subgroup); for
other elements the quantity is infinite, and for the trivial element it is
zero.  Certificates carry enough data to be re-validated from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import Coloring, DefiningGraph, chromatic_number, find_triangle
from .words import Word, exponent_vector, reduce

#: Named constants from the surrounding literature, for display next to
#: certificates.  Values are exact and informational only.
_REFERENCE_TABLE = {
    "culler_free": Fraction(1, 6),
    "duncan_howie_free": Fraction(1, 2),
    "heuer_raag": Fraction(1, 2),
    "fft_raag": Fraction(1, 24),
    "commutator_exact_free": Fraction(1, 2),
}

ROUTE_COLORING = "coloring"
ROUTE_TRIANGLE_FREE = "triangle-free"
ROUTE_BEST_OF_BOTH = "best-of-both"
ROUTE_INFINITE = "infinite"
ROUTE_ZERO = "zero"

TRIANGLE_FREE_BOUND = Fraction(1, 20)


def reference_bounds() -> dict[str, Fraction]:
    """The static table of literature constants (copied per call)."""
    return dict(_REFERENCE_TABLE)


def is_scl_finite(g: Word) -> bool:
    """True iff some nonzero power of ``g`` lies in the commutator subgroup.

    The abelianization is free abelian, so this happens exactly when the
    exponent vector of the reduced word vanishes.
    """
    return all(v == 0 for v in exponent_vector(reduce(g)).values())


@dataclass(frozen=True)
class BoundCertificate:
    """A machine-checkable record of one lower-bound computation.

    ``bound`` is ``None`` exactly on the infinite route.  ``exactness``
    records whether the chromatic number used was exact; routes that never
    color the graph set it to True (nothing approximate happened).
    """

    graph: DefiningGraph
    element: Word
    finite: bool
    bound: Optional[Fraction]
    route: str
    coloring: Optional[Coloring]
    triangle_free_witness: bool
    exactness: bool
    references: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "graph": {
                "vertices": list(self.graph.vertices),
                "edges": sorted(sorted(e) for e in self.graph.edges),
            },
            "element": self.element.display(),
            "finite": self.finite,
            "bound": _rational_str(self.bound),
            "route": self.route,
            "coloring": None
            if self.coloring is None
            else {
                "assignment": {v: self.coloring.assignment[v] for v in self.graph.vertices},
                "num_colors": self.coloring.num_colors,
            },
            "triangle_free_witness": self.triangle_free_witness,
            "exactness": self.exactness,
            "references": list(self.references),
        }


def _rational_str(q: Optional[Fraction]) -> str:
    if q is None:
        return "inf"
    return f"{q.numerator}/{q.denominator}"


def scl_lower_bound(graph: DefiningGraph, g: Word, mode: str = "exact") -> BoundCertificate:
    """Best available lower bound for the stable commutator length of ``g``.

    The element only matters through triviality and finiteness; the bound
    itself is uniform over the graph.  When the graph is triangle-free both
    bounds apply and the certificate records both (route ``best-of-both``);
    otherwise only the coloring route is available.  Heuristic mode accepts
    a possibly non-optimal proper coloring, yielding a valid but possibly
    weaker bound flagged via ``exactness``.
    """
    if mode not in ("exact", "heuristic"):
        raise ValueError(f"mode must be 'exact' or 'heuristic', got {mode!r}")
    references = tuple(sorted(_REFERENCE_TABLE))
    if reduce(g).is_identity:
        return BoundCertificate(
            graph=graph,
            element=g,
            finite=True,
            bound=Fraction(0),
            route=ROUTE_ZERO,
            coloring=None,
            triangle_free_witness=find_triangle(graph) is None,
            exactness=True,
            references=references,
        )
    if not is_scl_finite(g):
        return BoundCertificate(
            graph=graph,
            element=g,
            finite=False,
            bound=None,
            route=ROUTE_INFINITE,
            coloring=None,
            triangle_free_witness=find_triangle(graph) is None,
            exactness=True,
            references=references,
        )
    k, coloring, exact = chromatic_number(graph, mode=mode)
    coloring_bound = Fraction(1, 6 * k)
    triangle_free = find_triangle(graph) is None
    if triangle_free:
        bound = max(coloring_bound, TRIANGLE_FREE_BOUND)
        route = ROUTE_BEST_OF_BOTH
    else:
        bound = coloring_bound
        route = ROUTE_COLORING
    return BoundCertificate(
        graph=graph,
        element=g,
        finite=True,
        bound=bound,
        route=route,
        coloring=coloring,
        triangle_free_witness=triangle_free,
        exactness=exact,
        references=references,
    )


def verify_certificate(cert: BoundCertificate) -> bool:
    """Re-validate a certificate without trusting its producer.

    Checks the finiteness claim against the exponent vector, the coloring's
    properness and color count, the triangle-freeness witness, and the bound
    arithmetic for the claimed route.
    """
    graph = cert.graph
    finite = is_scl_finite(cert.element)
    trivial = reduce(cert.element).is_identity
    triangle_free = find_triangle(graph) is None
    if cert.triangle_free_witness != triangle_free:
        return False
    if cert.route == ROUTE_ZERO:
        return trivial and cert.finite and cert.bound == 0
    if cert.route == ROUTE_INFINITE:
        return (not finite) and (not cert.finite) and cert.bound is None
    if trivial or not finite or not cert.finite:
        return False
    if cert.coloring is None or not cert.coloring.is_proper(graph):
        return False
    coloring_bound = Fraction(1, 6 * cert.coloring.num_colors)
    if cert.route == ROUTE_COLORING:
        return (not triangle_free) and cert.bound == coloring_bound
    if cert.route == ROUTE_BEST_OF_BOTH:
        return triangle_free and cert.bound == max(coloring_bound, TRIANGLE_FREE_BOUND)
    if cert.route == ROUTE_TRIANGLE_FREE:
        return triangle_free and cert.bound == TRIANGLE_FREE_BOUND
    return False
