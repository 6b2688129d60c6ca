"""Exact zero forcing number at desk scale.

The search iterates the target cardinality k upward from a proven lower
bound and enumerates k-subsets depth-first in lexicographic order,
reusing the closure of the current prefix.  One pruning rule is applied:
a candidate vertex already inside the closure of the prefix is skipped,
because a witness containing it would yield a witness one smaller, and
all smaller cardinalities have already been exhausted.  Correctness is
therefore easy to audit, which matters more than speed here: this solver
is the ground truth for every bound and heuristic in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .forcing import closure_core
from .graph import Graph, VertexSet, bits, components, girth, mask_of


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact computation.

    ``value``/``witness`` are set when ``complete``; otherwise only the
    interval [lower, upper] is known and ``value`` is None.
    ``nodes_explored`` counts closure invocations.
    """

    value: int | None
    witness: VertexSet | None
    nodes_explored: int
    complete: bool
    lower: int
    upper: int


class _BudgetExhausted(Exception):
    """Carries the cardinality whose exhaustive check was interrupted."""

    def __init__(self, proven_lower: int = 0):
        super().__init__(proven_lower)
        self.proven_lower = proven_lower


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise _BudgetExhausted


def _component_lower_bound(g: Graph) -> int:
    gir = girth(g)
    if gir in (5, 6) and g.min_degree() >= 2:
        return max(1, (gir - 2) * (g.min_degree() - 2) + 2)
    return 1


def _search_cardinality(g: Graph, k: int, budget: _Budget) -> VertexSet | None:
    """First k-subset (in lexicographic DFS order) forcing everything."""
    n, adj, full = g.n, g.adj, g.full_mask

    def dfs(start: int, slots: int, filled: int, stalled: int, chosen: int):
        if slots == 0:
            return chosen if filled == full else None
        for v in range(start, n - slots + 1):
            if filled >> v & 1:
                continue  # already forced; any witness through v shrinks
            budget.spend()
            new_filled, new_stalled = closure_core(
                adj, filled | 1 << v, stalled | 1 << v
            )
            hit = dfs(v + 1, slots - 1, new_filled, new_stalled, chosen | 1 << v)
            if hit is not None:
                return hit
        return None

    return dfs(0, k, 0, 0, 0)


def _solve_connected(g: Graph, budget: _Budget) -> tuple[int, VertexSet]:
    lb = _component_lower_bound(g)
    for k in range(lb, g.n + 1):
        try:
            found = _search_cardinality(g, k, budget)
        except _BudgetExhausted:
            # Cardinalities below k were exhausted, so Z >= k is proven.
            raise _BudgetExhausted(k) from None
        if found is not None:
            return k, found
    raise AssertionError("the full vertex set always forces")  # pragma: no cover


def zero_forcing_number(g: Graph, budget: int | None = None) -> ExactResult:
    """Exact Z(G) with a minimum witness, or a flagged interval on budget stop.

    Disconnected graphs decompose: forcing never crosses components, so
    the number is the sum over components and the witness the union.
    ``budget`` caps the number of closure invocations; when it runs out
    the result carries the interval proven so far instead of a value.
    """
    state = _Budget(budget)
    total = 0
    witness = 0
    lower = 0
    upper = 0
    complete = True
    for comp in components(g):
        sub, labels = g.induced(comp)
        interrupted_at = None
        if complete:
            try:
                value, sub_witness = _solve_connected(sub, state)
            except _BudgetExhausted as exc:
                complete = False
                interrupted_at = exc.proven_lower
            else:
                total += value
                witness |= mask_of(labels[i] for i in bits(sub_witness))
                lower += value
                upper += value
                continue
        lower += interrupted_at or _component_lower_bound(sub)
        upper += sub.n - 1 if sub.edge_count() else sub.n
    if complete:
        return ExactResult(total, witness, state.used, True, total, total)
    return ExactResult(None, None, state.used, False, lower, upper)


def brute_force_oracle(g: Graph) -> ExactResult:
    """Plain enumeration of all subsets by cardinality, zero pruning.

    Deliberately independent of the pruned solver; used to validate it.
    """
    if g.n > 12:
        raise ValueError("the brute force oracle is limited to n <= 12")
    full = g.full_mask
    explored = 0
    for k in range(0, g.n + 1):
        for combo in combinations(range(g.n), k):
            z = mask_of(combo)
            explored += 1
            if closure_core(g.adj, z, z)[0] == full:
                return ExactResult(k, z, explored, True, k, k)
    raise AssertionError("unreachable")  # pragma: no cover
