"""Catalog of zero forcing bounds with exact rational values.

Every entry carries its applicability predicate and a proven/conjectured
status, so a verifier can treat proven violations as defects and
conjectured violations as discoveries.  All values are Fractions; the
command line renders decimals but no comparison ever goes through a
float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactResult, zero_forcing_number
from .families import ExceptionalGraph, complete_bipartite_parts, exceptional_tag
from .graph import Graph, components, girth, is_connected
from .heuristics import vertex_probability
from .ratmath import girth5_regular_factor, harmonic, subcubic_girth5_value

PROVEN = "proven"
CONJECTURED = "conjectured"

#: The seven distance-2 neighborhood shapes a vertex of a cubic
#: triangle-free graph (no K_{3,3} component) can have, keyed by their
#: exact inclusion probability under the random-order construction.
TYPE_PROBABILITIES: dict[int, Fraction] = {
    1: Fraction(81, 140),
    2: Fraction(149, 252),
    3: Fraction(5, 8),
    4: Fraction(171, 280),
    5: Fraction(101, 168),
    6: Fraction(269, 420),
    7: Fraction(17, 28),
}

_PROBABILITY_TO_TYPE = {p: i for i, p in TYPE_PROBABILITIES.items()}


@dataclass(frozen=True)
class VertexType:
    index: int
    probability: Fraction


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # "upper" | "lower"
    value: Fraction | None  # None when not applicable
    applicable: bool
    reason: str
    status: str  # "proven" | "conjectured"
    source: str

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "value": None if self.value is None else {
                "num": self.value.numerator,
                "den": self.value.denominator,
                "decimal": float(self.value),
            },
            "applicable": self.applicable,
            "reason": self.reason,
            "status": self.status,
            "source": self.source,
        }


# -- closed-form bound values ----------------------------------------------


def upper_degree_ratio(n: int, d: int) -> Fraction:
    """d*n/(d+1) for connected graphs of maximum degree d >= 2."""
    if d < 2:
        raise ValueError("needs maximum degree >= 2")
    return Fraction(d * n, d + 1)


def upper_degree_refined(n: int, d: int) -> Fraction:
    """((d-2)*n + 2)/(d-1), tight on complete and balanced bipartite graphs."""
    if d < 2:
        raise ValueError("needs maximum degree >= 2")
    return Fraction((d - 2) * n + 2, d - 1)


def upper_degree_refined_additive(n: int, d: int) -> Fraction:
    """(d-2)n/(d-1) + 2/(d+1): a published variant of the refined bound.

    Exposed for comparison only.  It undercuts the true value on cycles,
    complete graphs, and balanced complete bipartite graphs, so it never
    participates in verification; use ``upper_degree_refined``.
    """
    if d < 2:
        raise ValueError("needs maximum degree >= 2")
    return Fraction((d - 2) * n, d - 1) + Fraction(2, d + 1)


def upper_noncomplete(n: int, d: int) -> Fraction:
    """(d-1)*n/d for connected, max degree d >= 3, not complete on d+1."""
    if d < 3:
        raise ValueError("needs maximum degree >= 3")
    return Fraction((d - 1) * n, d)


def lower_girth_degree(gir: int, delta: int) -> Fraction:
    """(girth-2)*(delta-2) + 2; proven for girth in {4, 5, 6}."""
    if gir < 3:
        raise ValueError("needs finite girth >= 3")
    if delta < 2:
        raise ValueError("needs minimum degree >= 2")
    return Fraction((gir - 2) * (delta - 2) + 2)


def conjecture_third_holds(n: int, z_value: int) -> bool:
    """The open n/3 + 2 predicate for connected subcubic graphs."""
    return Fraction(z_value) <= Fraction(n, 3) + 2


# -- vertex classification -------------------------------------------------


def classify_vertex(g: Graph, u: int) -> VertexType:
    """Type 1..7 of a vertex in a cubic triangle-free graph.

    The seven types have pairwise distinct inclusion probabilities, so
    the exact probability identifies the type.  A probability outside
    the table signals a precondition violation (triangle, non-cubic
    vertex nearby, or a K_{3,3} component).
    """
    p = vertex_probability(g, u)
    index = _PROBABILITY_TO_TYPE.get(p)
    if index is None:
        raise ValueError(
            f"vertex {u} has inclusion probability {p}, outside the seven "
            "cubic triangle-free types; check for triangles, degrees != 3, "
            "or a K_3,3 component"
        )
    return VertexType(index, p)


def _has_k33_component(g: Graph) -> bool:
    for comp in components(g):
        if comp.bit_count() == 6:
            sub, _ = g.induced(comp)
            if complete_bipartite_parts(sub) == (3, 3):
                return True
    return False


# -- graph-level entries ----------------------------------------------------


def upper_exception_free(g: Graph) -> BoundEntry:
    """(d-2)n/(d-1), valid exactly when the graph is none of the five
    exceptional graphs."""
    d = g.max_degree()
    name, kind, source = "exception_free", "upper", "(d-2)n/(d-1) outside five exceptional graphs"
    if not is_connected(g) or d < 3:
        return BoundEntry(name, kind, None, False, "needs connected, max degree >= 3", PROVEN, source)
    tag = exceptional_tag(g)
    if tag is not None:
        return BoundEntry(name, kind, None, False, f"exceptional graph: {tag.value}", PROVEN, source)
    return BoundEntry(name, kind, Fraction((d - 2) * g.n, d - 1), True, "", PROVEN, source)


def upper_regular_girth5(g: Graph) -> BoundEntry:
    """Product-factor bound for r-regular graphs of girth at least 5."""
    name, kind, source = "regular_girth5", "upper", "prod(1 - 1/(ri+1)) * n for r-regular, girth >= 5"
    r = g.is_regular()
    gir = girth(g)
    if r is None:
        return BoundEntry(name, kind, None, False, "graph is not regular", PROVEN, source)
    if gir is not None and gir < 5:
        return BoundEntry(name, kind, None, False, f"girth {gir} < 5", PROVEN, source)
    return BoundEntry(name, kind, girth5_regular_factor(r) * g.n, True, "", PROVEN, source)


def upper_cubic_trianglefree(g: Graph) -> BoundEntry:
    """Sum of the seven type probabilities over all vertices."""
    name, kind, source = "cubic_trianglefree", "upper", "sum of type probabilities, cubic triangle-free"
    gir = girth(g)
    if g.is_regular() != 3:
        return BoundEntry(name, kind, None, False, "graph is not cubic", PROVEN, source)
    if gir == 3:
        return BoundEntry(name, kind, None, False, "graph has a triangle", PROVEN, source)
    if _has_k33_component(g):
        return BoundEntry(name, kind, None, False, "a component is K_3,3", PROVEN, source)
    total = sum((classify_vertex(g, u).probability for u in range(g.n)), Fraction(0))
    return BoundEntry(name, kind, total, True, "", PROVEN, source)


def classify_counts(g: Graph) -> dict[int, int]:
    """How many vertices of each type 1..7 the graph has."""
    counts = {i: 0 for i in TYPE_PROBABILITIES}
    for u in range(g.n):
        counts[classify_vertex(g, u).index] += 1
    return counts


# -- the full report ---------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    n: int
    max_degree: int
    min_degree: int
    girth: int | None
    connected: bool
    regular: int | None
    entries: tuple[BoundEntry, ...]
    exact: ExactResult | None
    violations: tuple[str, ...]
    conjecture_flags: tuple[str, ...]
    info: dict

    def to_json_dict(self) -> dict:
        return {
            "stats": {
                "n": self.n,
                "max_degree": self.max_degree,
                "min_degree": self.min_degree,
                "girth": "inf" if self.girth is None else self.girth,
                "connected": self.connected,
                "regular": self.regular,
            },
            "entries": [e.to_json_dict() for e in self.entries],
            "exact": None if self.exact is None else {
                "value": self.exact.value,
                "complete": self.exact.complete,
                "lower": self.exact.lower,
                "upper": self.exact.upper,
            },
            "violations": list(self.violations),
            "conjecture_flags": list(self.conjecture_flags),
            "info": self.info,
        }


def bounds_report(g: Graph, with_exact: bool = False,
                  budget: int | None = None) -> BoundReport:
    """Evaluate every catalog bound on g; optionally check against exact Z.

    With the exact value present, any applicable proven entry on the
    wrong side of it is reported in ``violations`` (an implementation
    defect by construction), while conjectured entries land in
    ``conjecture_flags`` (a discovery).
    """
    n, d = g.n, g.max_degree()
    delta = g.min_degree()
    gir = girth(g)
    conn = is_connected(g)
    entries = []

    def closed_form(name, kind, status, source, ok, reason, value):
        entries.append(BoundEntry(
            name, kind, value() if ok else None, ok,
            "" if ok else reason, status, source,
        ))

    closed_form(
        "degree_ratio", "upper", PROVEN, "d*n/(d+1) for connected graphs",
        conn and d >= 2, "needs connected, max degree >= 2",
        lambda: upper_degree_ratio(n, d),
    )
    closed_form(
        "degree_refined", "upper", PROVEN, "((d-2)n+2)/(d-1) for connected graphs",
        conn and d >= 2, "needs connected, max degree >= 2",
        lambda: upper_degree_refined(n, d),
    )
    closed_form(
        "noncomplete", "upper", PROVEN, "(d-1)n/d for connected non-complete graphs",
        conn and d >= 3 and exceptional_tag(g) is not ExceptionalGraph.COMPLETE,
        "needs connected, max degree >= 3, and not the complete graph",
        lambda: upper_noncomplete(n, d),
    )
    entries.append(upper_exception_free(g))
    closed_form(
        "subcubic_girth5", "upper", PROVEN, "n/2 - n/(24 log2 n + 6) + 2",
        conn and d == 3 and (gir is None or gir >= 5),
        "needs connected, max degree 3, girth >= 5",
        lambda: subcubic_girth5_value(n),
    )
    entries.append(upper_regular_girth5(g))
    entries.append(upper_cubic_trianglefree(g))
    closed_form(
        "girth_degree", "lower",
        PROVEN if gir in (4, 5, 6) else CONJECTURED,
        "(g-2)(delta-2)+2 for finite girth, min degree >= 2",
        gir is not None and delta >= 2,
        "needs a cycle and minimum degree >= 2",
        lambda: lower_girth_degree(gir, delta),
    )
    closed_form(
        "third_plus_two", "upper", CONJECTURED, "n/3 + 2 for connected subcubic graphs",
        conn and d == 3, "needs connected, max degree 3",
        lambda: Fraction(n, 3) + 2,
    )

    info: dict = {}
    if d >= 2:
        v = upper_degree_refined_additive(n, d)
        info["degree_refined_additive"] = {
            "num": v.numerator, "den": v.denominator, "decimal": float(v),
            "note": "comparison only, not verification-grade",
        }
    r = g.is_regular()
    if r is not None and r >= 1 and (gir is None or gir >= 5):
        first_order = (1 - harmonic(r) / r) * n
        info["regular_first_order"] = {
            "num": first_order.numerator, "den": first_order.denominator,
            "decimal": float(first_order),
            "note": "(1 - H_r/r) n, informational: one-sided only asymptotically",
        }

    exact = zero_forcing_number(g, budget) if with_exact else None
    violations = []
    flags = []
    if exact is not None and exact.complete:
        for e in entries:
            if not e.applicable or e.value is None:
                continue
            bad = (e.kind == "upper" and e.value < exact.value) or \
                  (e.kind == "lower" and e.value > exact.value)
            if bad and e.status == PROVEN:
                violations.append(e.name)
            elif bad:
                flags.append(e.name)
    return BoundReport(
        n, d, delta, gir, conn, r,
        tuple(entries), exact, tuple(violations), tuple(flags), info,
    )
