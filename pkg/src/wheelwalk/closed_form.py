"""Closed-form hitting times, folded-system inverses, effective resistances and
spanning-tree counts for wheel graphs.

Odd n uses Fibonacci numbers, even n Lucas numbers. Every formula shares the
denominator D = F(n-1) + F(n+1) (odd) or L(n-1) + L(n+1) (even).
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .sequences import fibonacci as F, lucas as L
from .wheel_model import (
    Center,
    Peripheral,
    RationalMatrix,
    VertexId,
    WheelSpec,
    as_spec,
)


class FormulaInconsistency(ArithmeticError):
    """A closed form produced a value that cannot be right (e.g. a fractional tree count)."""


class HittingQuery(NamedTuple):
    spec: WheelSpec
    source: VertexId
    target: VertexId


def _seq(spec: WheelSpec):
    return F if spec.odd else L


def _denominator(spec: WheelSpec) -> int:
    s = _seq(spec)
    return s(spec.n - 1) + s(spec.n + 1)


def _rim_offset(spec: WheelSpec, a: Peripheral, b: Peripheral) -> int:
    return (b.k - a.k) % spec.n


def rim_hitting_time(spec: WheelSpec | int, offset: int) -> Fraction:
    """h(p0 -> p_offset); negative subscripts resolve by reflection."""
    spec = as_spec(spec)
    n, s = spec.n, _seq(spec)
    ell = offset % n
    return Fraction(4 * n * (s(n) - s(n - 2 * ell)), _denominator(spec))


def center_hitting_time(spec: WheelSpec | int) -> Fraction:
    """h(center -> p0)."""
    spec = as_spec(spec)
    n, s = spec.n, _seq(spec)
    return Fraction((4 * n - 3) * s(n + 1) - (4 * n + 3) * s(n - 1), _denominator(spec))


def hitting_time(spec: WheelSpec | int | HittingQuery, source: VertexId | None = None,
                 target: VertexId | None = None) -> Fraction:
    """Expected steps for a simple random walk from `source` to first reach `target`.

    Rim-to-rim pairs reduce to an offset from p0 by rotation; rim-to-centre is
    always exactly 3 (each step reaches the hub with probability 1/3).
    """
    if isinstance(spec, HittingQuery):
        spec, source, target = spec
    spec = as_spec(spec)
    source, target = spec.vertex(source), spec.vertex(target)
    if source == target:
        return Fraction(0)
    if isinstance(target, Center):
        return Fraction(3)
    if isinstance(source, Center):
        return center_hitting_time(spec)
    return rim_hitting_time(spec, _rim_offset(spec, source, target))


def folded_hitting_vector(spec: WheelSpec | int) -> list[Fraction]:
    """Unknowns of the folded system: h(p0->p1), ..., h(p0->p_{n//2}), h(center->p0)."""
    spec = as_spec(spec)
    return [rim_hitting_time(spec, ell) for ell in range(1, spec.half + 1)] + [
        center_hitting_time(spec)
    ]


def inverse_folded_matrix(spec: WheelSpec | int) -> RationalMatrix:
    """Inverse of the folded coefficient matrix, entry by entry from the case formulas."""
    spec = as_spec(spec)
    n, m = spec.n, spec.folded_size
    entry = _odd_inverse_entry if spec.odd else _even_inverse_entry
    d = _denominator(spec)
    return RationalMatrix(tuple(
        tuple(Fraction(entry(n, m, i, j), d) for j in range(1, m + 1))
        for i in range(1, m + 1)
    ))


def _odd_inverse_entry(n: int, m: int, i: int, j: int) -> int:
    # numerator over F(n-1) + F(n+1); 1-based, m = (n+1)/2
    if i == m and j == m:
        return F(n)
    if i == m:
        return 2 * (F(n) - F(n - 2 * j))
    if j == m:
        return F(n) - F(n - 2 * i)
    if i < j:
        return 2 * (F(n) - F(n - 2 * i)) + F(n - 2 * j) * (L(2 * i) - 2)
    return 2 * (F(n) - F(n - 2 * j)) + F(n - 2 * i) * (L(2 * j) - 2)


def _even_inverse_entry(n: int, m: int, i: int, j: int) -> int:
    # numerator over L(n-1) + L(n+1); 1-based, m = (n+2)/2
    h = n // 2
    if i == m and j == m:
        return L(n)
    if i == m:
        return L(n) - 2 if j == h else 2 * (L(n) - L(n - 2 * j))
    if j == m:
        return L(n) - L(n - 2 * i)
    if j == h:
        return L(n) - L(n - 2 * i) + L(2 * i) - 2
    if i <= j:
        return 2 * (L(n) - L(n - 2 * i)) + L(n - 2 * j) * (L(2 * i) - 2)
    return 2 * (L(n) - L(n - 2 * j)) + L(n - 2 * i) * (L(2 * j) - 2)


def effective_resistance(spec: WheelSpec | int, a: VertexId, b: VertexId) -> Fraction:
    """Resistance between `a` and `b` with every edge a unit resistor."""
    spec = as_spec(spec)
    a, b = spec.vertex(a), spec.vertex(b)
    if a == b:
        raise ValueError(f"effective resistance needs two distinct vertices, got {a} twice")
    n, s, d = spec.n, _seq(spec), _denominator(spec)
    if isinstance(a, Center) or isinstance(b, Center):
        return Fraction(s(n), d)
    ell = _rim_offset(spec, a, b)
    return Fraction(2 * (s(n) - s(n - 2 * ell)), d)


def spanning_tree_count(spec: WheelSpec | int) -> int:
    spec = as_spec(spec)
    return L(2 * spec.n) - 2


def identified_tree_count(spec: WheelSpec | int, a: VertexId, b: VertexId) -> int:
    """Spanning trees of the wheel after merging `a` and `b` into one vertex."""
    spec = as_spec(spec)
    a, b = spec.vertex(a), spec.vertex(b)
    if a == b:
        raise ValueError(f"identified tree count needs two distinct vertices, got {a} twice")
    n = spec.n
    hub = isinstance(a, Center) or isinstance(b, Center)
    if spec.odd:
        lead = F(n) if hub else 2 * (F(n) - F(n - 2 * _rim_offset(spec, a, b)))
        value = Fraction(lead * (F(n - 1) + F(n + 1)))
    else:
        lead = L(n) if hub else 2 * (L(n) - L(n - 2 * _rim_offset(spec, a, b)))
        value = Fraction(lead * (L(n) - 2) * (L(n) + 2), L(n - 1) + L(n + 1))
    if value.denominator != 1:
        raise FormulaInconsistency(
            f"tree count for n={n}, pair ({a}, {b}) came out non-integral: {value}"
        )
    return int(value)

