"""Numeric thresholds, closed-form bounds, and verifiable bound certificates.

Real parameters are carried as exact Fractions wherever a floor or a boundary
comparison is taken (floats are converted at their exact binary value), so
quantities like floor(lambda^2) never misround at integer boundaries.
Strict source inequalities are checked against a 1e-9 margin on eigenvalue
comparisons.

The constants M(lambda), C1(lambda), C2(lambda), C3(lambda) are defined via
Ramsey numbers and non-explicit integers, so they are exposed symbolically
(lower bounds, plus Ramsey intervals when the caller supplies the missing
clique threshold); no invented numeric values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .construct import (
    complement,
    complete_bipartite,
    coclique_extension,
    k_tilde,
    line_graph,
)
from .graphs import Graph, distance_matrix, regularity_params
from .hoffman import attach_universal_fat
from .ramsey import RamseyValue, ramsey_lookup
from .spectra import (
    Spectrum,
    eig_symmetric,
    group_eigenvalues,
    lambda_min,
    second_largest,
    spectrum,
)

STRICT_MARGIN = 1e-9
SPECTRUM_TOL = 1e-8

Real = Union[int, float, str, Fraction]


def to_fraction(x: Real) -> Fraction:
    """Exact rational value of x ('p/q' and decimal strings accepted)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)  # float: exact binary value


def floor_exact(x: Fraction) -> int:
    return math.floor(x)


@dataclass(frozen=True)
class BoundCertificate:
    """Outcome of one verifiable claim: parameters, verdict, numeric evidence."""

    claim: str
    params: dict
    verified: bool
    evidence: dict = field(default_factory=dict)
    tolerance: float = STRICT_MARGIN

    def to_json_obj(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "verified": self.verified,
            "evidence": self.evidence,
            "tolerance": self.tolerance,
        }


# -- thresholds t'(lambda), m'(lambda) -------------------------------------------


@dataclass(frozen=True)
class Thresholds:
    """Minimal biclique / tilde-graph orders whose smallest eigenvalue drops
    strictly below -lambda, plus the floor quantities used alongside them."""

    lam: Fraction
    t_prime: int
    m_prime: int
    gamma2_cap: int
    isolated_cap: int

    def to_json_obj(self) -> dict:
        return {
            "lambda": str(self.lam),
            "t_prime": self.t_prime,
            "m_prime": self.m_prime,
            "gamma2_cap": self.gamma2_cap,
            "isolated_cap": self.isolated_cap,
        }


def t_prime_closed_form(lam: Fraction) -> int:
    """Least t with lambda_min(K_{2,t}) = -sqrt(2t) < -lambda, i.e. t > lam^2/2."""
    return floor_exact(lam * lam / 2) + 1


def thresholds(lam: Real, m_cap: int = 64) -> Thresholds:
    """t'(lambda) by closed form cross-checked by eigensolves; m'(lambda) by
    incremental eigensolves of the tilde graphs."""
    lam = to_fraction(lam)
    if lam < 1:
        raise ValueError("lambda must be >= 1")
    lam_f = float(lam)

    t_prime = t_prime_closed_form(lam)
    below = lambda_min(complete_bipartite(2, t_prime))
    if not below < -lam_f - STRICT_MARGIN:
        raise AssertionError("t' closed form disagrees with eigensolve")
    if t_prime > 1:
        at = lambda_min(complete_bipartite(2, t_prime - 1))
        if at < -lam_f - STRICT_MARGIN:
            raise AssertionError("t' not minimal against eigensolve")

    m_prime = None
    for m in range(1, m_cap + 1):
        if lambda_min(k_tilde(m)) < -lam_f - STRICT_MARGIN:
            m_prime = m
            break
    if m_prime is None:
        raise AssertionError(f"m' not found below cap {m_cap}")

    return Thresholds(
        lam=lam,
        t_prime=t_prime,
        m_prime=m_prime,
        gamma2_cap=floor_exact(lam) * floor_exact(lam * lam),
        isolated_cap=floor_exact(lam * lam) + 1,
    )


# -- isolated-vertex bound (universal fat vertex) ---------------------------------


def isolated_vertex_bound_check(lam: Real, h: Graph) -> BoundCertificate:
    """Contrapositive instance of the isolated-vertex bound: a graph with an
    isolated vertex on more than floor(lam^2)+1 vertices must give
    lambda_min(q(H)) < -lambda."""
    lam = to_fraction(lam)
    if lam < 1:
        raise ValueError("lambda must be >= 1")
    if all(h.degree(v) > 0 for v in range(h.n)):
        raise ValueError("graph has no isolated vertex")
    cap = floor_exact(lam * lam) + 1
    lam_min_q = attach_universal_fat(h).lambda_min()
    applicable = h.n > cap
    strictly_below = lam_min_q < -float(lam) - STRICT_MARGIN
    verified = (not applicable) or strictly_below
    return BoundCertificate(
        claim="isolated-vertex-bound",
        params={"lambda": str(lam), "order": h.n},
        verified=verified,
        evidence={
            "cap": cap,
            "order_exceeds_cap": applicable,
            "lambda_min_q": lam_min_q,
            "strictly_below_minus_lambda": strictly_below,
        },
    )


# -- diameter-2 / second-neighborhood verifier ------------------------------------


def m_lambda_lower(lam: Real) -> int:
    """Computable part of the common-neighbor constant: floor(lam^3 + 1)."""
    lam = to_fraction(lam)
    return floor_exact(lam**3) + 1


def m_lambda_interval(lam: Real, n_prime: Optional[int] = None) -> tuple[int, Optional[int]]:
    """Interval for max{R(n', t'(lambda)), floor(lam^3 + 1)}.

    n' is the non-explicit clique threshold; without it only the floor term
    bounds from below and no upper end exists.  With a hypothesized n', the
    Ramsey interval sharpens both ends.
    """
    lam = to_fraction(lam)
    lo = m_lambda_lower(lam)
    if n_prime is None:
        return lo, None
    r = ramsey_lookup(n_prime, thresholds(lam).t_prime)
    upper = None if r.upper is None else max(r.upper, lo)
    return max(r.lower, lo), upper


def prop13_verifier(g: Graph, lam: Real, m_common: int) -> BoundCertificate:
    """Check the diameter-2 statement instance-wise.

    Premises: (i) every pair at distance 2 has at least m_common common
    neighbors, (ii) lambda_min(g) >= -lambda.  Conclusions: no pair at finite
    distance >= 3, and |Gamma_2(x)| <= floor(lambda) * floor(lambda^2) for
    every x.  The certificate is verified when the premises fail (vacuous) or
    the conclusions hold.
    """
    lam = to_fraction(lam)
    dist = distance_matrix(g)
    common = (g.adj.astype(int) @ g.adj.astype(int))

    d2_min = None
    max_finite = 0
    for u in range(g.n):
        for w in range(u + 1, g.n):
            d = dist[u][w]
            if d == 2:
                c = int(common[u, w])
                d2_min = c if d2_min is None else min(d2_min, c)
            if d != math.inf:
                max_finite = max(max_finite, int(d))

    premise_common = d2_min is None or d2_min >= m_common
    lmin = lambda_min(g)
    premise_eig = lmin >= -float(lam) - STRICT_MARGIN

    gamma2_cap = floor_exact(lam) * floor_exact(lam * lam)
    gamma2_max = 0
    for x in range(g.n):
        gamma2_max = max(gamma2_max, sum(1 for w in range(g.n) if dist[x][w] == 2))
    concl_diameter = max_finite <= 2
    concl_gamma2 = gamma2_max <= gamma2_cap

    applicable = premise_common and premise_eig
    verified = (not applicable) or (concl_diameter and concl_gamma2)
    return BoundCertificate(
        claim="diameter2-second-neighborhood",
        params={"lambda": str(lam), "min_common_required": m_common, "order": g.n},
        verified=verified,
        evidence={
            "premise_common_neighbors": premise_common,
            "distance2_common_min": d2_min,
            "premise_lambda_min": premise_eig,
            "lambda_min": lmin,
            "applicable": applicable,
            "max_finite_distance": max_finite,
            "conclusion_diameter_le_2": concl_diameter,
            "gamma2_max": gamma2_max,
            "gamma2_cap": gamma2_cap,
            "conclusion_gamma2": concl_gamma2,
            "m_lambda_lower": m_lambda_lower(lam),
        },
    )


# -- known values of the maximum order --------------------------------------------


@dataclass(frozen=True)
class KnownValue:
    """Known value of the maximum order of a connected k-regular graph with
    second largest eigenvalue at most lambda: exact, interval, infinite, or
    none (no such graph exists)."""

    kind: str  # "exact" | "interval" | "infinite" | "none"
    lower: Optional[int] = None
    upper: Optional[int] = None
    note: str = ""

    @property
    def value(self) -> int:
        if self.kind != "exact":
            raise ValueError(f"no exact value: kind={self.kind}")
        return self.lower

    def contains(self, v: int) -> bool:
        if self.kind == "exact":
            return v == self.lower
        if self.kind == "interval":
            return self.lower <= v and (self.upper is None or v <= self.upper)
        return self.kind == "infinite"

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "lower": self.lower,
            "upper": self.upper,
            "note": self.note,
        }


def known_v(k: int, lam: Real) -> KnownValue:
    """Piecewise-known maximum order for degree k and eigenvalue bound lambda."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lam = to_fraction(lam)

    if lam < -1:
        return KnownValue(
            kind="none",
            note="every graph on >= 2 vertices has second eigenvalue >= -1",
        )
    if k == 1:
        return KnownValue(kind="exact", lower=2, upper=2, note="K_2 is the only connected 1-regular graph")
    if lam < 0:
        return KnownValue(kind="exact", lower=k + 1, upper=k + 1, note="attained only by the complete graph")
    if lam == 0:
        return KnownValue(kind="exact", lower=2 * k, upper=2 * k, note="attained only by the balanced complete bipartite graph")
    if lam < 1:
        return KnownValue(
            kind="interval",
            lower=2 * k,
            upper=2 * k + 6,
            note="monotone between the lambda=0 and lambda=1 values",
        )
    if lam == 1:
        if k >= 11:
            return KnownValue(kind="exact", lower=2 * k + 2, upper=2 * k + 2,
                              note="complement of the line graph of K_{2,k+1}")
        return KnownValue(kind="interval", lower=2 * k + 2, upper=2 * k + 6)
    # lam > 1
    if lam * lam >= 4 * (k - 1):
        return KnownValue(kind="infinite", note="bipartite Ramanujan families exceed every order")
    return KnownValue(
        kind="interval",
        lower=2 * k + 2,
        upper=None,
        note="finite, but the additive constant is not explicit",
    )


# -- certified lower-bound construction -------------------------------------------


def lower_bound_graph(lam: int, a: int) -> tuple[Graph, BoundCertificate]:
    """lambda-coclique extension of the complement of the line graph of
    K_{2,a+1}: a (lam*a)-regular graph on 2*lam*a + 2*lam vertices with second
    largest eigenvalue exactly lambda (certified numerically)."""
    if not isinstance(lam, int) or lam < 1:
        raise ValueError("lambda must be a positive integer")
    if a < 2:
        raise ValueError("a must be >= 2")
    base = complement(line_graph(complete_bipartite(2, a + 1)))
    g = coclique_extension(base, lam)
    k = lam * a
    order_expected = 2 * k + 2 * lam

    degs = set(g.degrees())
    regular_ok = degs == {k}
    order_ok = g.n == order_expected

    expected_vals = [float(k)] + [float(lam)] * a + [-float(lam)] * a + [-float(k)]
    expected_vals += [0.0] * ((lam - 1) * (2 * a + 2))
    expected = group_eigenvalues(expected_vals, SPECTRUM_TOL)
    actual = spectrum(g, tol=SPECTRUM_TOL)
    spectrum_ok = actual.approx_eq(expected, tol=SPECTRUM_TOL)
    lam2 = actual.second_largest()
    lam2_ok = abs(lam2 - lam) <= SPECTRUM_TOL

    verified = regular_ok and order_ok and spectrum_ok and lam2_ok
    cert = BoundCertificate(
        claim="coclique-extension-lower-bound",
        params={"lambda": lam, "a": a, "k": k},
        verified=verified,
        evidence={
            "order": g.n,
            "order_expected": order_expected,
            "regular": regular_ok,
            "second_largest": lam2,
            "spectrum": actual.to_json_obj(),
            "consequence": f"max order for (k={k}, lambda={lam}) >= {order_expected}",
        },
        tolerance=SPECTRUM_TOL,
    )
    return g, cert


# -- co-edge-regular and amply regular applications --------------------------------


def is_complete_multipartite(g: Graph) -> bool:
    """True iff the complement is a disjoint union of cliques."""
    co = complement(g)
    seen: set[int] = set()
    for v in range(co.n):
        if v in seen:
            continue
        comp = sorted(co._bfs_reach(v))
        seen.update(comp)
        for i, u in enumerate(comp):
            for w in comp[i + 1 :]:
                if not co.has_edge(u, w):
                    return False
    return True


def co_edge_bound_check(g: Graph, lam: Real) -> BoundCertificate:
    """Report (v, k, c2), lambda_min and v-k-1 against the (lambda-1)^2/4 + 1
    cap for a connected co-edge-regular graph; for lambda = 2 the computable
    threshold C2(2) = 8 makes the implication falsifiable and it is checked."""
    lam = to_fraction(lam)
    rp = regularity_params(g)
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not rp.co_edge_regular:
        raise ValueError("graph is not co-edge-regular")
    c2 = rp.c2_coedge
    vacuous = c2 is None  # complete graph: no non-adjacent pairs
    lmin = lambda_min(g)
    premise_eig = lmin >= -float(lam) - STRICT_MARGIN
    ell = g.n - rp.k - 1
    ell_cap = (lam - 1) ** 2 / 4 + 1
    ell_ok = Fraction(ell) <= ell_cap

    c2_threshold = 8 if lam == 2 else None
    falsified = (
        not vacuous
        and c2_threshold is not None
        and premise_eig
        and c2 > c2_threshold
        and not ell_ok
    )
    return BoundCertificate(
        claim="co-edge-regular-order-bound",
        params={"lambda": str(lam), "v": g.n, "k": rp.k, "c2": c2},
        verified=not falsified,
        evidence={
            "vacuous_complete_graph": vacuous,
            "lambda_min": lmin,
            "premise_lambda_min": premise_eig,
            "ell": ell,
            "ell_cap": float(ell_cap),
            "ell_within_cap": bool(ell_ok),
            "c2_threshold_at_lambda_2": c2_threshold,
        },
    )


def mu_bound(lam: int) -> int:
    """Common-neighbor cap lam^3 (2 lam - 3) for strongly regular graphs with
    integral smallest eigenvalue -lam <= -2."""
    if not isinstance(lam, int) or lam < 2:
        raise ValueError("lambda must be an integer >= 2")
    return lam**3 * (2 * lam - 3)


def srg_mu_check(params: tuple[int, int, Optional[int], Optional[int]], lam: int) -> bool:
    """c2 <= mu_bound(lam) for strongly-regular parameters (v, k, a1, c2)."""
    c2 = params[3]
    if c2 is None:
        raise ValueError("parameters carry no c2 value")
    return c2 <= mu_bound(lam)


def amply_regular_check(g: Graph, lam: int) -> BoundCertificate:
    """Either c2 stays within the computable part of the amply-regular cap or
    the graph is complete multipartite; 'indeterminate' marks instances where
    only the non-explicit part of the cap could decide."""
    if not isinstance(lam, int) or lam < 2:
        raise ValueError("lambda must be an integer >= 2")
    rp = regularity_params(g)
    if not rp.amply_regular:
        raise ValueError("graph is not amply regular")
    lmin = lambda_min(g)
    premise_eig = lmin >= -float(lam) - STRICT_MARGIN
    multipartite = is_complete_multipartite(g)
    mu_cap = mu_bound(lam)
    c2 = rp.c2_dist2
    if not premise_eig:
        status = "premise-violated"
    elif multipartite:
        status = "complete-multipartite"
    elif c2 is not None and c2 <= mu_cap:
        status = "c2-within-mu-bound"
    elif c2 is None:
        status = "no-distance-2-pairs"
    else:
        status = "indeterminate"
    verified = status != "indeterminate"
    return BoundCertificate(
        claim="amply-regular-dichotomy",
        params={"lambda": lam, "v": g.n, "k": rp.k, "a1": rp.a1, "c2": c2},
        verified=verified,
        evidence={
            "lambda_min": lmin,
            "premise_lambda_min": premise_eig,
            "complete_multipartite": multipartite,
            "mu_bound": mu_cap,
            "c3_lower_bound": max(m_lambda_lower(lam) - 1, mu_cap),
            "status": status,
        },
    )


__all__ = [
    "BoundCertificate",
    "KnownValue",
    "RamseyValue",
    "Thresholds",
    "amply_regular_check",
    "co_edge_bound_check",
    "is_complete_multipartite",
    "isolated_vertex_bound_check",
    "known_v",
    "lower_bound_graph",
    "m_lambda_interval",
    "m_lambda_lower",
    "mu_bound",
    "prop13_verifier",
    "ramsey_lookup",
    "srg_mu_check",
    "t_prime_closed_form",
    "thresholds",
    "to_fraction",
]
