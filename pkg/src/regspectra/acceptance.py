"""The acceptance suite: every verifiable claim the package certifies, with
one result object per claim.

These checks are both the `verify` CLI payload and the backing for
tests/test_acceptance.py.  Claim 5 is special: the universal-fat identity it
quotes is off by a -1 shift (see the hoffman module docstring), so the claim
as stated fails for every input with |lambda_min(q(H)) + lambda_max(co-H)|
exactly 1.  It is kept, honestly red, next to the corrected identity which
holds to 1e-8 on the same sample.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import association, bounds, hoffman, ramsey, search
from .construct import (
    complement,
    complete_bipartite,
    complete_multipartite,
    coclique_extension,
    cycle,
    k_tilde,
    line_graph,
    petersen,
    random_graph,
)
from .graphs import Graph, regularity_params
from .hoffman import HoffmanGraph, attach_universal_fat, fatten
from .spectra import (
    coclique_extension_spectrum,
    eig_symmetric,
    group_eigenvalues,
    lambda_max,
    quotient_matrix,
    spectrum,
)

TOL = 1e-8


@dataclass
class ClaimResult:
    cid: str
    title: str
    passed: bool
    seconds: float
    details: dict = field(default_factory=dict)
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.note}]" if self.note else ""
        return f"[{status}] {self.cid}: {self.title} ({self.seconds:.2f}s){extra}"

    def to_json_obj(self) -> dict:
        return {
            "id": self.cid,
            "title": self.title,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "details": self.details,
            "note": self.note,
        }


def _timed(fn):
    start = time.time()
    passed, details, note = fn()
    return passed, time.time() - start, details, note


def criterion_01() -> ClaimResult:
    """Spectrum of the complement of the line graph of K_{2,a+1}."""

    def run():
        failures = []
        for a in range(2, 11):
            g = complement(line_graph(complete_bipartite(2, a + 1)))
            got = spectrum(g)
            want = group_eigenvalues(
                [float(a)] + [1.0] * a + [-1.0] * a + [-float(a)], TOL
            )
            if not got.approx_eq(want, tol=TOL):
                failures.append((a, str(got)))
        return not failures, {"a_range": [2, 10], "failures": failures}, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A1", "biclique line-graph complement spectrum {a,1^a,-1^a,-a}",
                       passed, secs, details, note)


def criterion_02() -> ClaimResult:
    """Closed-form coclique-extension spectrum vs direct eigensolve."""

    def run():
        rng = random.Random(20240)
        worst = 0.0
        for _ in range(50):
            n = rng.randint(1, 8)
            g = random_graph(n, rng.uniform(0.2, 0.8), rng)
            base = spectrum(g)
            for q in (2, 3):
                ext = coclique_extension(g, q)
                formula = coclique_extension_spectrum(base, g.n, q)
                direct = eig_symmetric(ext.adj.astype(float))
                expanded = formula.values()
                diffs = [abs(x - y) for x, y in zip(expanded, direct)]
                worst = max(worst, max(diffs))
                if len(expanded) != len(direct) or worst > TOL:
                    return False, {"worst": worst, "n": n, "q": q}, ""
        return True, {"graphs": 50, "q": [2, 3], "worst_abs_diff": worst}, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A2", "coclique-extension spectrum formula vs eigensolve",
                       passed, secs, details, note)


def criterion_03() -> ClaimResult:
    """Certified lower-bound construction for lambda in 1..3, a in 2..6."""

    def run():
        checked = []
        for lam in (1, 2, 3):
            for a in range(2, 7):
                g, cert = bounds.lower_bound_graph(lam, a)
                if not cert.verified:
                    return False, {"lambda": lam, "a": a, "cert": cert.to_json_obj()}, ""
                checked.append((lam, a, g.n))
        return True, {"cases": len(checked)}, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A3", "coclique-extension witnesses: k-regular, order 2k+2*lambda, lambda_2 = lambda",
                       passed, secs, details, note)


def criterion_04() -> ClaimResult:
    """Fattening sequences: monotone, bounded below, final gap < 0.1."""

    def run():
        rows = {}
        for name, h in hoffman.catalog():
            lm = h.lambda_min()
            seq = hoffman.fattening_lambda_min_sequence(h, 30)
            monotone = all(seq[i + 1] <= seq[i] + 1e-9 for i in range(len(seq) - 1))
            bounded = all(x >= lm - 1e-9 for x in seq)
            gap = seq[-1] - lm
            rows[name] = {"lambda_min": lm, "final_gap": gap,
                          "monotone": monotone, "bounded_below": bounded}
            if not (monotone and bounded and gap < 0.1):
                return False, rows, f"first failure at {name}"
        return True, {"catalog_size": len(rows), "gaps": {k: v["final_gap"] for k, v in rows.items()}}, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A4", "fattening lambda_min sequences converge onto the Hoffman value",
                       passed, secs, details, note)


def _universal_fat_sample(seed: int = 513, count: int = 100):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 10)
        yield random_graph(n, rng.uniform(0.1, 0.9), rng)


def criterion_05_as_stated() -> ClaimResult:
    """|lambda_min(q(H)) + lambda_max(co-H)| <= 1e-8, as quoted.

    Expected to fail: the quoted identity omits a -1 shift, so the quantity
    equals exactly 1 for every graph.  Kept as an honest red check; see
    criterion A5b for the identity that actually holds.
    """

    def run():
        worst = 0.0
        for h in _universal_fat_sample():
            value = abs(attach_universal_fat(h).lambda_min() + lambda_max(complement(h)))
            worst = max(worst, value)
        return worst <= TOL, {"sample": 100, "worst_abs": worst}, (
            "identity as quoted is off by one: S(q(H)) = A - J = -(I + A(co-H))"
        )

    passed, secs, details, note = _timed(run)
    return ClaimResult("A5", "universal-fat identity in its commonly stated form (documented defect)",
                       passed, secs, details, note)


def criterion_05_corrected() -> ClaimResult:
    """|lambda_min(q(H)) + 1 + lambda_max(co-H)| <= 1e-8 on the same sample."""

    def run():
        worst = 0.0
        for h in _universal_fat_sample():
            value = abs(attach_universal_fat(h).lambda_min() + 1.0 + lambda_max(complement(h)))
            worst = max(worst, value)
        return worst <= TOL, {"sample": 100, "worst_abs": worst}, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A5b", "universal-fat identity, exact form lambda_min(q(H)) = -1 - lambda_max(co-H)",
                       passed, secs, details, note)


def criterion_06() -> ClaimResult:
    """Isolated-vertex bound, exhaustive at lambda = 2 over order-7 hosts."""

    def run():
        free = search.enumerate_all_graphs(6)
        worst = 0.0
        for g in free:
            n = g.n + 1
            a = np.zeros((n, n), dtype=bool)
            a[: g.n, : g.n] = g.adj
            h = Graph(a)  # extra vertex is isolated
            cert = bounds.isolated_vertex_bound_check(2, h)
            if not (cert.verified and cert.evidence["order_exceeds_cap"]):
                return False, {"bad": cert.to_json_obj()}, ""
            worst = max(worst, cert.evidence["lambda_min_q"])
        return True, {"hosts": len(free), "max_lambda_min_q": worst}, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A6", "every order-7 graph with an isolated vertex has lambda_min(q) < -2",
                       passed, secs, details, note)


def criterion_07() -> ClaimResult:
    """Threshold minimality and the tilde-graph quotient matrix."""

    def run():
        details: dict = {}
        for lam in (1, Fraction(3, 2), 2, Fraction(5, 2), 3):
            th = bounds.thresholds(lam)
            lam_fr = bounds.to_fraction(lam)
            if th.t_prime != bounds.floor_exact(lam_fr**2 / 2) + 1:
                return False, {"lambda": str(lam), "t_prime": th.t_prime}, "t' closed form"
            lam_f = float(lam_fr)
            if th.m_prime > 1:
                prev = eig_symmetric(k_tilde(th.m_prime - 1).adj.astype(float))[-1]
                if not prev >= -lam_f - 1e-9:
                    return False, {"lambda": str(lam)}, "m' not minimal"
            at = eig_symmetric(k_tilde(th.m_prime).adj.astype(float))[-1]
            if not at < -lam_f - 1e-9:
                return False, {"lambda": str(lam)}, "m' does not qualify"
            details[str(lam)] = {"t_prime": th.t_prime, "m_prime": th.m_prime}
        quotient_worst = 0.0
        for m in range(1, 7):
            g = k_tilde(m)
            parts = [list(range(m, 2 * m)), list(range(m)), [2 * m]]
            q = quotient_matrix(g, parts)
            expected = ((m - 1, m, 0), (m, m - 1, 1), (0, m, 0))
            if not q.equitable:
                return False, {"m": m}, "tilde partition should be equitable"
            if tuple(tuple(int(x) for x in row) for row in q.matrix) != expected:
                return False, {"m": m, "matrix": q.as_floats()}, "quotient matrix mismatch"
            qmin = min(q.eigenvalue_list())
            gmin = eig_symmetric(g.adj.astype(float))[-1]
            quotient_worst = max(quotient_worst, abs(qmin - gmin))
        details["quotient_vs_full_worst"] = quotient_worst
        return quotient_worst <= TOL, details, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A7", "t'/m' minimality and the 3x3 tilde quotient matrix",
                       passed, secs, details, note)


def _random_hoffman(rng: random.Random) -> HoffmanGraph:
    s = rng.randint(2, 4)
    slim = random_graph(s, rng.uniform(0.3, 0.8), rng)
    fat_count = rng.randint(1, 3)
    nbrs = []
    for _ in range(fat_count):
        size = rng.randint(1, s)
        nbrs.append(rng.sample(range(s), size))
    n = s + fat_count
    a = np.zeros((n, n), dtype=bool)
    a[:s, :s] = slim.adj
    for j, group in enumerate(nbrs):
        for w in group:
            a[s + j, w] = a[w, s + j] = True
    return HoffmanGraph(Graph(a), fat=range(s, n))


def criterion_08() -> ClaimResult:
    """Equivalence-relation suite at m = 2, n = 9 on generated graphs."""

    def run():
        rng = random.Random(88)
        accepted = 0
        attempts = 0
        nonempty_families = 0
        while accepted < 50 and attempts < 400:
            attempts += 1
            if attempts % 3 == 0:
                g = random_graph(rng.randint(4, 12), rng.uniform(0.2, 0.7), rng)
            else:
                g = fatten(_random_hoffman(rng), rng.randint(9, 12))
            if association.hypothesis_report(g, 2, 9):
                continue  # hypotheses violated; not part of this suite
            fam = association.maximal_cliques(g, 9)
            part = association.partition_classes(fam, 2, certified=True)
            if part.warnings:
                return False, {"warnings": list(part.warnings)}, ""
            for cls in part.classes:
                for i in range(len(cls)):
                    for j in range(i + 1, len(cls)):
                        if not association.equiv_nm(
                            g, fam.cliques[cls[i]], fam.cliques[cls[j]], 2
                        ):
                            return False, {}, "transitivity violated"
            hg, _ = association.associate(g, 2, 9, certified=True)
            if not hg.is_valid():
                return False, {"violations": hg.validate()}, ""
            if len(fam) > 0:
                nonempty_families += 1
            accepted += 1
        return accepted >= 50, {
            "accepted": accepted,
            "attempts": attempts,
            "with_cliques": nonempty_families,
        }, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A8", "clique relation transitive + associations valid on 50 generated graphs",
                       passed, secs, details, note)


def criterion_09() -> ClaimResult:
    """Association round-trip recovers every catalog Hoffman graph."""

    def run():
        params = {}
        for name, h in hoffman.catalog():
            ok = False
            for p in (10, 12, 16):
                g = fatten(h, p)
                hg, part = association.associate(g, 2, 9, certified=True)
                if part.warnings:
                    continue
                found, _ = hoffman.contains_hoffman_subgraph(hg, h)
                if found:
                    params[name] = {"m": 2, "n": 9, "p": p}
                    ok = True
                    break
            if not ok:
                return False, {"failed_entry": name}, ""
        return True, {"parameters": params}, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A9", "fatten-then-associate round-trip contains the original Hoffman graph",
                       passed, secs, details, note)


def criterion_10() -> ClaimResult:
    """Exhaustive extremal searches and pruning equivalence."""

    def run():
        from .construct import complete

        cases = [
            (2, 0, 8, 4, complete_bipartite(2, 2), True),
            (3, -0.5, 8, 4, complete(4), True),
            (2, 1, 10, 6, cycle(6), None),
            (3, 0, 10, 6, complete_bipartite(3, 3), True),
        ]
        details = {}
        for k, lam, n_max, want_v, want_graph, want_unique in cases:
            pruned = search.v_search(k, lam, n_max, prune=True)
            unpruned = search.v_search(k, lam, n_max, prune=False)
            if not pruned.same_result(unpruned):
                return False, {"case": (k, lam, n_max)}, "pruned != unpruned"
            if pruned.exact_v != want_v:
                return False, {"case": (k, lam, n_max), "got": pruned.exact_v}, ""
            if want_unique is not None and pruned.unique != want_unique:
                return False, {"case": (k, lam, n_max)}, "uniqueness mismatch"
            want_cert = search.canonical_form(want_graph).certificate
            if want_cert not in {e.certificate for e in pruned.extremal}:
                return False, {"case": (k, lam, n_max)}, "expected witness missing"
            details[f"v({k},{lam})<= {n_max}"] = {
                "exact_v": pruned.exact_v,
                "extremal": [e.graph6 for e in pruned.extremal],
            }
        return True, details, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A10", "exact small-case maxima with unique witnesses; pruning is lossless",
                       passed, secs, details, note)


def criterion_11() -> ClaimResult:
    """mu-bound vs C2(2), Petersen check, and multipartite classification."""

    def run():
        if bounds.mu_bound(2) != 8:
            return False, {}, "mu_bound(2) != 8"
        pete = regularity_params(petersen())
        if not bounds.srg_mu_check(pete.srg_params(), 2):
            return False, {}, "Petersen fails mu check"
        cert = bounds.amply_regular_check(complete_multipartite([3, 3, 3]), 3)
        if not (cert.verified and cert.evidence["complete_multipartite"]):
            return False, {"cert": cert.to_json_obj()}, ""
        return True, {
            "mu_bound_2": bounds.mu_bound(2),
            "petersen": pete.srg_params(),
            "k333_status": cert.evidence["status"],
        }, ""

    passed, secs, details, note = _timed(run)
    return ClaimResult("A11", "mu-bound equals the lambda=2 threshold; classifications",
                       passed, secs, details, note)


def criterion_12() -> ClaimResult:
    """Ramsey re-derivations and the diameter-2 verifier corpus."""

    def run():
        table = ramsey.verify_small_table()
        if not all(table.values()):
            return False, {"ramsey": table}, ""
        corpus = [
            ("petersen", petersen(), 2, 1),
            ("K_{3,3,3}", complete_multipartite([3, 3, 3]), 3, 6),
            ("C5", cycle(5), 2, 1),
            ("C4", cycle(4), 2, 2),
            ("K_{4,4}", complete_bipartite(4, 4), 4, 4),
            ("octahedron", complete_multipartite([2, 2, 2]), 2, 4),
            ("K_{2x4}", complete_multipartite([2, 2, 2, 2]), 2, 6),
            ("co-petersen", complement(petersen()), 2, 4),
        ]
        rows = {}
        for name, g, lam, m_common in corpus:
            cert = bounds.prop13_verifier(g, lam, m_common)
            rows[name] = {
                "applicable": cert.evidence["applicable"],
                "verified": cert.verified,
            }
            if not (cert.verified and cert.evidence["applicable"]):
                return False, rows, f"corpus instance {name}"
        return True, {"ramsey": table, "corpus": rows}, (
            "constants defined via Ramsey numbers stay symbolic; property form checked"
        )

    passed, secs, details, note = _timed(run)
    return ClaimResult("A12", "Ramsey oracle values and premise-satisfying diameter-2 corpus",
                       passed, secs, details, note)


CRITERIA = {
    "A1": criterion_01,
    "A2": criterion_02,
    "A3": criterion_03,
    "A4": criterion_04,
    "A5": criterion_05_as_stated,
    "A5b": criterion_05_corrected,
    "A6": criterion_06,
    "A7": criterion_07,
    "A8": criterion_08,
    "A9": criterion_09,
    "A10": criterion_10,
    "A11": criterion_11,
    "A12": criterion_12,
}

SUITES = {
    "spectra": ["A1", "A2"],
    "hoffman": ["A4", "A5", "A5b"],
    "association": ["A8", "A9"],
    "bounds": ["A3", "A6", "A7", "A11", "A12"],
    "search": ["A10"],
}

# Claims that are implemented as quoted but cannot pass (documented defects).
EXPECTED_FAILURES = {"A5"}

# Wall-time budgets per claim (seconds); generous, asserted by the test suite.
RUNTIME_CAPS = {
    "A1": 1, "A2": 5, "A3": 5, "A4": 30, "A5": 10, "A5b": 10, "A6": 120,
    "A7": 1, "A8": 60, "A9": 120, "A10": 300, "A11": 1, "A12": 600,
}


def run_suite(name: str) -> list[ClaimResult]:
    if name == "all":
        ids = list(CRITERIA)
    elif name in SUITES:
        ids = SUITES[name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose all|{'|'.join(SUITES)}")
    return [CRITERIA[cid]() for cid in ids]
