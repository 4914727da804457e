"""Small Ramsey numbers: an exact table plus sound interval fallbacks.

R(s, t) is the least n such that every graph on n vertices contains a clique
of size s or an independent set of size t.  Exact values beyond small cases
are unknown, so lookups outside the embedded table return an interval: the
upper end from the parity-strengthened recurrence
R(s,t) <= R(s-1,t) + R(s,t-1) (minus one when both terms are even), the lower
end from table monotonicity and the complete-multipartite witness
(s-1)(t-1) + 1.  Brute-force verifiers for the smallest table entries are
provided for the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .construct import circulant, cycle, edgeless
from .graphs import Graph

# Established values; stored with s <= t.
_TABLE: dict[tuple[int, int], int] = {
    (3, 3): 6,
    (3, 4): 9,
    (3, 5): 14,
    (3, 6): 18,
    (3, 7): 23,
    (3, 8): 28,
    (3, 9): 36,
    (4, 4): 18,
    (4, 5): 25,
}


@dataclass(frozen=True)
class RamseyValue:
    s: int
    t: int
    exact: Optional[int]
    lower: int
    upper: Optional[int]

    def contains(self, value: int) -> bool:
        if self.exact is not None:
            return value == self.exact
        return self.lower <= value and (self.upper is None or value <= self.upper)

    def to_json_obj(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
        }


def _table_exact(s: int, t: int) -> Optional[int]:
    if s > t:
        s, t = t, s
    if s == 1:
        return 1
    if s == 2:
        return t
    return _TABLE.get((s, t))


@lru_cache(maxsize=None)
def _upper(s: int, t: int) -> int:
    exact = _table_exact(s, t)
    if exact is not None:
        return exact
    a = _upper(s - 1, t)
    b = _upper(s, t - 1)
    bound = a + b
    if a % 2 == 0 and b % 2 == 0:
        bound -= 1
    return bound


def ramsey_lookup(s: int, t: int) -> RamseyValue:
    """Exact value when tabulated, otherwise a sound [lower, upper] interval."""
    if s < 1 or t < 1:
        raise ValueError("Ramsey arguments must be >= 1")
    exact = _table_exact(s, t)
    if exact is not None:
        return RamseyValue(s, t, exact, exact, exact)
    lower = (s - 1) * (t - 1) + 1
    for (s0, t0), val in _TABLE.items():
        for a, b in ((s0, t0), (t0, s0)):
            if a <= s and b <= t:
                lower = max(lower, val)
    return RamseyValue(s, t, None, lower, _upper(s, t))


# -- brute-force verification ---------------------------------------------------


def has_clique(g: Graph, r: int) -> bool:
    if r <= 1:
        return r == 1 and g.n >= 1
    bits = g.bits()
    for combo in combinations(range(g.n), r):
        if all(bits[u] >> v & 1 for u, v in combinations(combo, 2)):
            return True
    return False


def has_coclique(g: Graph, r: int) -> bool:
    if r <= 1:
        return r == 1 and g.n >= 1
    bits = g.bits()
    for combo in combinations(range(g.n), r):
        if all(not (bits[u] >> v & 1) for u, v in combinations(combo, 2)):
            return True
    return False


def is_ramsey_witness(g: Graph, s: int, t: int) -> bool:
    """True when g has no clique of size s and no coclique of size t."""
    return not has_clique(g, s) and not has_coclique(g, t)


def every_graph_arrows(n: int, s: int, t: int) -> bool:
    """Exhaustively check that all 2^C(n,2) graphs on n vertices contain a
    K_s or a size-t coclique.  Only feasible for n <= 6."""
    pairs = list(combinations(range(n), 2))
    if len(pairs) > 21:
        raise ValueError("exhaustive check limited to n <= 7 edges budget")
    s_combos = [list(combinations(c, 2)) for c in combinations(range(n), s)]
    t_combos = [list(combinations(c, 2)) for c in combinations(range(n), t)]
    index = {pq: i for i, pq in enumerate(pairs)}
    s_masks = [sum(1 << index[pq] for pq in combo) for combo in s_combos]
    t_masks = [sum(1 << index[pq] for pq in combo) for combo in t_combos]
    for mask in range(1 << len(pairs)):
        if any(mask & sm == sm for sm in s_masks):
            continue
        if any(mask & tm == 0 for tm in t_masks):
            continue
        return False
    return True


def verify_small_table() -> dict[str, bool]:
    """Re-derive R(2,t) for t <= 5, R(3,3) and R(3,4) from first principles.

    R(3,4)'s upper bound uses the parity-strengthened recurrence on the two
    exhaustively verified values (both even), the lower bound an explicitly
    checked witness on 8 vertices.
    """
    results = {}
    for t in range(2, 6):
        lower_ok = is_ramsey_witness(edgeless(t - 1), 2, t)
        upper_ok = every_graph_arrows(t, 2, t)
        results[f"R(2,{t})={t}"] = lower_ok and upper_ok
    r33_lower = is_ramsey_witness(cycle(5), 3, 3)
    r33_upper = every_graph_arrows(6, 3, 3)
    results["R(3,3)=6"] = r33_lower and r33_upper
    r34_lower = is_ramsey_witness(circulant(8, [1, 4]), 3, 4)
    r24 = ramsey_lookup(2, 4).exact
    r33 = ramsey_lookup(3, 3).exact
    parity_upper = r24 + r33 - (1 if (r24 % 2 == 0 and r33 % 2 == 0) else 0)
    results["R(3,4)=9"] = r34_lower and parity_upper == 9
    return results
