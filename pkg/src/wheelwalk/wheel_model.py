"""Graph and matrix data model: wheel graphs, loop-free multigraphs, exact
rational matrices, and the half-size (folded) coefficient matrix of the wheel
hitting-time system."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, Sequence, Union


# ---------------------------------------------------------------------------
# Vertices and wheel parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Peripheral:
    k: int

    def __str__(self) -> str:
        return f"p{self.k}"


@dataclass(frozen=True)
class Center:
    def __str__(self) -> str:
        return "center"


CENTER = Center()
VertexId = Union[Peripheral, Center]


@dataclass(frozen=True)
class WheelSpec:
    """Wheel W_{n+1}: an n-cycle p0..p{n-1} plus a hub joined to every cycle vertex."""

    n: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError(f"cycle size must be an int, got {self.n!r}")
        if self.n < 3:
            raise ValueError(f"cycle size must be >= 3 for a simple wheel, got {self.n}")

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def half(self) -> int:
        return self.n // 2

    @property
    def folded_size(self) -> int:
        return self.n // 2 + 1

    @property
    def edge_count(self) -> int:
        return 2 * self.n

    def peripheral(self, k: int) -> Peripheral:
        return Peripheral(k % self.n)

    def vertex(self, v: VertexId) -> VertexId:
        """Normalize `v` for this wheel (peripheral index reduced mod n)."""
        if isinstance(v, Center):
            return CENTER
        if isinstance(v, Peripheral):
            return self.peripheral(v.k)
        raise TypeError(f"not a wheel vertex: {v!r}")

    def vertices(self) -> list[VertexId]:
        return [Peripheral(k) for k in range(self.n)] + [CENTER]


def as_spec(spec: WheelSpec | int) -> WheelSpec:
    return spec if isinstance(spec, WheelSpec) else WheelSpec(spec)


def parse_vertex(text: str, n: int | None = None) -> VertexId:
    """Parse ``p<k>`` or ``center``; with `n` given, reject k outside [0, n)."""
    token = text.strip().lower()
    if token == "center":
        return CENTER
    if token.startswith("p") and token[1:].isdigit():
        k = int(token[1:])
        if n is not None and not 0 <= k < n:
            raise ValueError(f"peripheral index {k} out of range 0..{n - 1}")
        return Peripheral(k)
    raise ValueError(f"bad vertex {text!r}; expected p<k> or center")


# ---------------------------------------------------------------------------
# Exact matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int | Fraction]]) -> RationalMatrix:
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        return RationalMatrix(
            tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
                  for row in self.rows)
        )

    def apply(self, vector: Sequence[int | Fraction]) -> list[Fraction]:
        """Matrix times column vector."""
        if len(vector) != self.shape[1]:
            raise ValueError(f"vector length {len(vector)} != {self.shape[1]} columns")
        return [sum((a * Fraction(x) for a, x in zip(row, vector)), Fraction(0))
                for row in self.rows]

    def delete(self, index: int) -> RationalMatrix:
        """Drop row `index` and column `index`."""
        return RationalMatrix(tuple(
            tuple(x for j, x in enumerate(r) if j != index)
            for i, r in enumerate(self.rows) if i != index
        ))

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


# ---------------------------------------------------------------------------
# Multigraphs
# ---------------------------------------------------------------------------

class MultiGraph:
    """Loop-free undirected multigraph on vertices 0..vertex_count-1.

    Each vertex carries a hashable label (a VertexId for wheels, the index
    itself by default). Immutable after construction.
    """

    __slots__ = ("_labels", "_mult", "_index")

    def __init__(self, labels: Sequence[Hashable], multiplicity: Mapping[tuple[int, int], int]):
        labels = tuple(labels)
        if not labels:
            raise ValueError("graph needs at least one vertex")
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("vertex labels must be distinct")
        mult: dict[tuple[int, int], int] = {}
        nv = len(labels)
        for (u, v), m in multiplicity.items():
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < nv and 0 <= v < nv):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            if m < 0:
                raise ValueError(f"negative multiplicity on ({u}, {v})")
            if m:
                key = (u, v) if u < v else (v, u)
                mult[key] = mult.get(key, 0) + m
        self._labels = labels
        self._mult = MappingProxyType(dict(sorted(mult.items())))
        self._index = MappingProxyType(index)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Hashable, Hashable]],
                   labels: Sequence[Hashable] | int) -> MultiGraph:
        """Build from label pairs; a repeated pair adds a parallel edge."""
        if isinstance(labels, int):
            labels = range(labels)
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        mult: dict[tuple[int, int], int] = {}
        for a, b in edges:
            u, v = index[a], index[b]
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + 1
        return cls(labels, mult)

    @property
    def labels(self) -> tuple[Hashable, ...]:
        return self._labels

    @property
    def vertex_count(self) -> int:
        return len(self._labels)

    @property
    def multiplicities(self) -> Mapping[tuple[int, int], int]:
        return self._mult

    @property
    def edge_count(self) -> int:
        return sum(self._mult.values())

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise ValueError(f"vertex {label!r} not in graph") from None

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get((u, v) if u < v else (v, u), 0)

    def degree(self, u: int) -> int:
        return sum(m for (a, b), m in self._mult.items() if u in (a, b))

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbour, multiplicity)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self._labels]
        for (u, v), m in self._mult.items():
            adj[u].append((v, m))
            adj[v].append((u, m))
        return adj

    def edge_list(self) -> list[tuple[int, int]]:
        """Every edge once per copy (parallel copies listed separately)."""
        return [e for e, m in self._mult.items() for _ in range(m)]

    def is_connected(self) -> bool:
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.vertex_count

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._labels == other._labels and dict(self._mult) == dict(other._mult)

    def __hash__(self) -> int:
        return hash((self._labels, tuple(self._mult.items())))

    def __repr__(self) -> str:
        return f"MultiGraph(vertices={self.vertex_count}, edges={self.edge_count})"


def path_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edges([(i, i + 1) for i in range(n - 1)], n)


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edges([(i, (i + 1) % n) for i in range(n)], n)


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def build_wheel(spec: WheelSpec | int) -> MultiGraph:
    spec = as_spec(spec)
    n = spec.n
    rim = [(Peripheral(k), Peripheral((k + 1) % n)) for k in range(n)]
    spokes = [(Peripheral(k), CENTER) for k in range(n)]
    return MultiGraph.from_edges(rim + spokes, spec.vertices())


def laplacian(g: MultiGraph) -> RationalMatrix:
    nv = g.vertex_count
    rows = [[0] * nv for _ in range(nv)]
    for (u, v), m in g.multiplicities.items():
        rows[u][v] -= m
        rows[v][u] -= m
        rows[u][u] += m
        rows[v][v] += m
    return RationalMatrix.from_rows(rows)


def reduced_laplacian(g: MultiGraph, removed: Hashable) -> RationalMatrix:
    if g.vertex_count < 2:
        raise ValueError("reduced Laplacian needs at least 2 vertices")
    return laplacian(g).delete(g.index(removed))


def identify_vertices(g: MultiGraph, u: Hashable, v: Hashable) -> MultiGraph:
    """Merge `v` into `u`. Parallel edges add up; u-v edges would become loops
    and are dropped. The merged vertex keeps u's label and position."""
    iu, iv = g.index(u), g.index(v)
    if iu == iv:
        raise ValueError(f"cannot identify vertex {u!r} with itself")
    remap = {}
    for old in range(g.vertex_count):
        if old == iv:
            continue
        remap[old] = old - (old > iv)
    remap[iv] = remap[iu]
    mult: dict[tuple[int, int], int] = {}
    for (a, b), m in g.multiplicities.items():
        x, y = remap[a], remap[b]
        if x == y:
            continue
        key = (x, y) if x < y else (y, x)
        mult[key] = mult.get(key, 0) + m
    labels = [lab for i, lab in enumerate(g.labels) if i != iv]
    return MultiGraph(labels, mult)


# ---------------------------------------------------------------------------
# Folded hitting-time system
# ---------------------------------------------------------------------------

def folded_matrix(spec: WheelSpec | int) -> RationalMatrix:
    """Coefficient matrix H of the half-size hitting-time system.

    Unknowns (1-based): slot l <= n//2 holds h(p0 -> p_l), the last slot holds
    h(center -> p0). Entries come from the odd/even case tables.
    """
    spec = as_spec(spec)
    n, m = spec.n, spec.folded_size
    rows = [[0] * m for _ in range(m)]
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            rows[i - 1][j - 1] = _odd_entry(n, m, i, j) if spec.odd else _even_entry(n, m, i, j)
    return RationalMatrix.from_rows(rows)


def _odd_entry(n: int, m: int, i: int, j: int) -> int:
    if i == j:
        if i == m:
            return n
        return 2 if i == (n - 1) // 2 else 3
    if i == m:
        return -2
    if j == m or abs(i - j) == 1:
        return -1
    return 0


def _even_entry(n: int, m: int, i: int, j: int) -> int:
    h = n // 2
    if i == j:
        return n if i == m else 3
    if i == m:
        return -1 if j == h else -2
    if j == m:
        return -1
    if (i, j) == (h, h - 1):
        return -2
    if abs(i - j) == 1:
        return -1
    return 0


def fold_reduced_laplacian(spec: WheelSpec | int) -> RationalMatrix:
    """Fold the reduced Laplacian (p0 removed) onto the half-size unknowns.

    Independent route to `folded_matrix`: columns j and n-j of a rim row are
    summed because h(p0 -> p_j) = h(p0 -> p_{n-j}). The centre row is folded
    the same way, so its rim entries are -2 (or -1 on the unpaired middle
    column for even n).
    """
    spec = as_spec(spec)
    n, m = spec.n, spec.folded_size
    g = build_wheel(spec)
    lp = reduced_laplacian(g, Peripheral(0))

    def entry(i: int, j: int) -> Fraction:
        # 1-based access; index n is the centre
        return lp[i - 1, j - 1]

    rows = []
    for i in range(1, m + 1):
        src = n if i == m else i
        row = []
        for j in range(1, m + 1):
            if j == m:
                row.append(entry(src, n))
            elif spec.n % 2 == 0 and j == n // 2:
                row.append(entry(src, j))
            else:
                row.append(entry(src, j) + entry(src, n - j))
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def folded_rhs(spec: WheelSpec | int) -> list[Fraction]:
    """Right-hand side (3, ..., 3, n) of the folded system, as a column."""
    spec = as_spec(spec)
    return [Fraction(3)] * spec.half + [Fraction(spec.n)]
