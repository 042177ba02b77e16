"""Cross-check sweep: every closed form against its general-graph oracle."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import closed_form as cf
from . import oracle
from .montecarlo import estimate_hitting
from .sequences import check_identity
from .wheel_model import (
    CENTER,
    Peripheral,
    RationalMatrix,
    WheelSpec,
    build_wheel,
    fold_reduced_laplacian,
    folded_matrix,
    identify_vertices,
)

CHECK_ORDER = [
    "identities",
    "inverse",
    "hitting",
    "trees",
    "identified",
    "nash-williams",
    "kirchhoff",
    "enumeration",
    "montecarlo",
]
MC_SIGMAS = 3.0
MC_MAX_OUTSIDE = 0.15
ENUMERATION_MAX_N = 7


@dataclass
class CheckResult:
    check: str
    n: int | None
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: str) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(detail)


@dataclass
class Report:
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def sorted(self) -> list[CheckResult]:
        # global identity checks first, per-n checks by n, the statistical sweep last
        def key(r: CheckResult):
            group = 0 if r.check == "identities" else 2 if r.check == "montecarlo" else 1
            return group, r.n or 0, CHECK_ORDER.index(r.check)
        return sorted(self.results, key=key)


# index ranges for the identity sweep; summations need nonnegative limits
_IDENTITY_CASES = {
    "EQ1": lambda: ({"n": n} for n in range(1, 201)),
    "EQ2": lambda: ({"n": n} for n in range(-200, 201)),
    "EQ3": lambda: ({"n": n} for n in range(-200, 201)),
    "EQ4": lambda: ({"n": n} for n in range(-100, 101)),
    "EQ5": lambda: ({"n": n} for n in range(1, 201)),
    "EQ6": lambda: ({"m": m, "n": n} for m in range(-30, 31) for n in range(-30, 31)),
    "EQ7": lambda: ({"m": m, "n": n} for m in range(-30, 31) for n in range(-30, 31)),
    "EQ8": lambda: ({"n": n, "r": r} for n in range(-100, 101) for r in range(-10, 11)),
    "EQ9": lambda: ({"n": n} for n in range(0, 201)),
    "EQ10": lambda: ({"n": n, "l": l} for n in range(0, 61) for l in range(0, n + 1)),
    "EQ11": lambda: ({"l": l} for l in range(0, 101)),
    "LF": lambda: ({"n": n} for n in range(-200, 201)),
}


def check_identities() -> CheckResult:
    res = CheckResult("identities", None)
    for tag, cases in _IDENTITY_CASES.items():
        for params in cases():
            res.record(check_identity(tag, params), f"{tag} fails at {params}")
    # the misprinted forms must fail where documented
    res.record(not check_identity("EQ4-printed", {"n": 2}), "printed EQ4 unexpectedly holds at n=2")
    res.record(not check_identity("EQ8-printed", {"n": 3, "r": 1}),
               "printed EQ8 unexpectedly holds at n=3, r=1")
    return res


def check_wheel(n: int, enumerate_small: bool = True) -> list[CheckResult]:
    spec = WheelSpec(n)
    g = build_wheel(spec)
    labels = g.labels
    results = []

    inv = CheckResult("inverse", n)
    h = folded_matrix(spec)
    inv.record(h @ cf.inverse_folded_matrix(spec) == RationalMatrix.identity(spec.folded_size),
               "H*K != I")
    inv.record(h == fold_reduced_laplacian(spec), "case-table H differs from folded L'")
    results.append(inv)

    solved = {t: oracle.solve_hitting_system(g, t) for t in labels}
    hit = CheckResult("hitting", n)
    for t in labels:
        for s in labels:
            exact = cf.hitting_time(spec, s, t)
            hit.record(exact == solved[t][s], f"h({s}->{t}): closed {exact} != solver {solved[t][s]}")
    results.append(hit)

    total_trees = cf.spanning_tree_count(spec)
    trees = CheckResult("trees", n)
    mt = oracle.matrix_tree_count(g)
    trees.record(mt == total_trees, f"matrix-tree {mt} != L(2n)-2 = {total_trees}")
    results.append(trees)

    ident = CheckResult("identified", n)
    nash = CheckResult("nash-williams", n)
    kirch = CheckResult("kirchhoff", n)
    for a, b in combinations(labels, 2):
        tau = cf.identified_tree_count(spec, a, b)
        merged = oracle.matrix_tree_count(identify_vertices(g, a, b))
        ident.record(tau == merged, f"tau({a},{b}): closed {tau} != matrix-tree {merged}")

        r = cf.effective_resistance(spec, a, b)
        commute = (solved[b][a] + solved[a][b]) / (2 * g.edge_count)
        via_closed = (cf.hitting_time(spec, a, b) + cf.hitting_time(spec, b, a)) / (2 * spec.edge_count)
        nash.record(r == commute == via_closed, f"r({a},{b}) = {r}, solver {commute}, closed h {via_closed}")
        kirch.record(tau == r * total_trees, f"tau({a},{b}) = {tau} != r*T = {r * total_trees}")
    for s in labels:
        if s != CENTER:
            nash.record(cf.hitting_time(spec, s, CENTER) == 3, f"h({s}->center) != 3")
    results += [ident, nash, kirch]

    if enumerate_small and n <= ENUMERATION_MAX_N:
        enum = CheckResult("enumeration", n)
        graphs = [g] + [identify_vertices(g, a, b) for a, b in combinations(labels, 2)]
        for sub in graphs:
            e, m = oracle.enumerate_spanning_trees(sub), oracle.matrix_tree_count(sub)
            enum.record(e == m, f"enumeration {e} != matrix-tree {m} on {sub!r}")
        results.append(enum)
    return results


def monte_carlo_pairs(spec: WheelSpec):
    return [
        (Peripheral(0), Peripheral(1)),
        (Peripheral(0), Peripheral(spec.half)),
        (CENTER, Peripheral(0)),
        (Peripheral(0), CENTER),
    ]


def check_montecarlo(n_values, walks: int, seed: int) -> CheckResult:
    """3-sigma band sweep; fails only if more than MC_MAX_OUTSIDE of cases fall outside."""
    res = CheckResult("montecarlo", None)
    outside = []
    cases = 0
    for n in n_values:
        spec = WheelSpec(n)
        g = build_wheel(spec)
        for s, t in monte_carlo_pairs(spec):
            est = estimate_hitting(g, s, t, walks, seed)
            exact = float(cf.hitting_time(spec, s, t))
            cases += 1
            if abs(est.mean - exact) > MC_SIGMAS * est.std_error:
                outside.append(f"n={n} h({s}->{t}): {est.mean:.6g} +/- {est.std_error:.3g} vs {exact:.6g}")
    res.total = cases
    res.passed = cases - len(outside)
    if cases and len(outside) / cases > MC_MAX_OUTSIDE:
        res.failures = outside
    return res


def run_verification(n_min: int = 3, n_max: int = 20, seed: int = 0,
                     montecarlo: bool = True, walks: int = 5000) -> Report:
    if n_min < 3:
        raise ValueError(f"--n-min must be >= 3, got {n_min}")
    if n_max < n_min:
        raise ValueError(f"--n-max ({n_max}) must be >= --n-min ({n_min})")
    results = [check_identities()]
    for n in range(n_min, n_max + 1):
        results += check_wheel(n)
    if montecarlo:
        results.append(check_montecarlo(range(n_min, n_max + 1), walks, seed))
    return Report(results)
