"""General-graph exact computations that know nothing about wheels.

These are the reference values the closed forms are checked against:
first-step hitting-time systems solved over the rationals, the matrix-tree
theorem via fraction-free elimination, and brute-force tree enumeration.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Hashable, Sequence

from .wheel_model import MultiGraph, RationalMatrix, laplacian

ENUMERATION_MAX_VERTICES = 8
ENUMERATION_MAX_EDGES = 24


class DisconnectedGraphError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def solve_linear(a: Sequence[Sequence[int | Fraction]],
                 b: Sequence[int | Fraction]) -> list[Fraction]:
    """Solve a·x = b exactly by Gaussian elimination over Fraction.

    The first nonzero entry in each column is taken as pivot; zero entries are
    skipped, so sparse systems stay cheap.
    """
    n = len(a)
    rows = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(a, b)]
    if len(rows) != n or any(len(r) != n + 1 for r in rows):
        raise ValueError("solve_linear needs a square system with matching right-hand side")
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        rows[col], rows[piv] = rows[piv], rows[col]
        prow = rows[col]
        inv = 1 / prow[col]
        support = [j for j in range(col + 1, n + 1) if prow[j]]
        for r in range(col + 1, n):
            row = rows[r]
            factor = row[col]
            if not factor:
                continue
            factor *= inv
            for j in support:
                row[j] -= factor * prow[j]
            row[col] = Fraction(0)
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        row = rows[i]
        acc = row[n]
        for j in range(i + 1, n):
            if row[j]:
                acc -= row[j] * x[j]
        x[i] = acc / row[i]
    return x


def invert(matrix: RationalMatrix) -> RationalMatrix:
    """Exact inverse, one column solve per unit vector."""
    n, m = matrix.shape
    if n != m:
        raise ValueError(f"cannot invert a {n}x{m} matrix")
    cols = [solve_linear(matrix.rows, [int(i == j) for i in range(n)]) for j in range(n)]
    return RationalMatrix(tuple(zip(*cols)))


def solve_hitting_system(g: MultiGraph, target: Hashable) -> dict[Hashable, Fraction]:
    """Hitting times h(v -> target) for every vertex v of `g`.

    Uses the first-step equations deg(v)·h(v) - sum_u mult(v,u)·h(u) = deg(v)
    for v != target, i.e. the Laplacian with target's row and column removed.
    """
    t = g.index(target)
    if not g.is_connected():
        raise DisconnectedGraphError("hitting times are infinite on a disconnected graph")
    if g.vertex_count == 1:
        return {target: Fraction(0)}
    lap = laplacian(g).delete(t)
    degrees = [g.degree(v) for v in range(g.vertex_count) if v != t]
    solution = solve_linear(lap.rows, degrees)
    others = [lab for v, lab in enumerate(g.labels) if v != t]
    result = dict(zip(others, solution))
    result[target] = Fraction(0)
    return {lab: result[lab] for lab in g.labels}


def nash_williams_resistance(g: MultiGraph, a: Hashable, b: Hashable) -> Fraction:
    """Effective resistance as commute time over twice the edge count."""
    if g.index(a) == g.index(b):
        raise ValueError(f"resistance needs two distinct vertices, got {a!r} twice")
    h_ab = solve_hitting_system(g, b)[a]
    h_ba = solve_hitting_system(g, a)[b]
    return (h_ab + h_ba) / (2 * g.edge_count)


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    m = [list(map(int, r)) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot_row = m[k]
        p = pivot_row[k]
        for i in range(k + 1, n):
            row = m[i]
            mik = row[k]
            if mik:
                for j in range(k + 1, n):
                    row[j] = (p * row[j] - mik * pivot_row[j]) // prev
            else:
                for j in range(k + 1, n):
                    row[j] = p * row[j] // prev
            row[k] = 0
        prev = p
    return sign * m[n - 1][n - 1]


def matrix_tree_count(g: MultiGraph, removed: Hashable | None = None) -> int:
    """Number of spanning trees: any cofactor of the Laplacian (default: drop the last vertex)."""
    if g.vertex_count == 1:
        return 1
    idx = g.vertex_count - 1 if removed is None else g.index(removed)
    cofactor = laplacian(g).delete(idx)
    return bareiss_determinant([[int(x) for x in r] for r in cofactor.rows])


def enumerate_spanning_trees(g: MultiGraph) -> int:
    """Count spanning trees by checking every (V-1)-edge subset; parallel copies are distinct."""
    nv, ne = g.vertex_count, g.edge_count
    if nv > ENUMERATION_MAX_VERTICES or ne > ENUMERATION_MAX_EDGES:
        raise ValueError(
            f"enumeration limited to {ENUMERATION_MAX_VERTICES} vertices and "
            f"{ENUMERATION_MAX_EDGES} edges, got {nv} and {ne}"
        )
    edges = g.edge_list()
    count = 0
    for subset in combinations(edges, nv - 1):
        parent = list(range(nv))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            count += 1
    return count
