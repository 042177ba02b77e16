"""Fibonacci and Lucas numbers on signed indices, and a catalogue of the
identities the wheel-graph formulas lean on.

Values are plain Python ints, so there is no overflow at any index inside the
guard. Negative indices are resolved by reflection:

    F(-n) = (-1)**(n+1) * F(n)
    L(-n) = (-1)**n * L(n)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

MAX_INDEX = 10**6


def _check_index(k: int) -> None:
    if abs(k) > MAX_INDEX:
        raise ValueError(f"sequence index {k} outside guard |k| <= {MAX_INDEX}")


def _iterate(a: int, b: int, k: int) -> int:
    # k >= 0; (a, b) are the seeds at indices 0 and 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fibonacci(k: int) -> int:
    """Return F_k for any signed index within the guard."""
    _check_index(k)
    if k >= 0:
        return _iterate(0, 1, k)
    value = _iterate(0, 1, -k)
    return value if k % 2 else -value


def lucas(k: int) -> int:
    """Return L_k for any signed index within the guard."""
    _check_index(k)
    if k >= 0:
        return _iterate(2, 1, k)
    value = _iterate(2, 1, -k)
    return -value if k % 2 else value


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


F = fibonacci
L = lucas


# Each check takes keyword indices and returns True iff both sides agree exactly.

def _eq1(n: int) -> bool:
    return F(2 * n - 2) - 3 * F(2 * n) + F(2 * n + 2) == 0


def _eq2(n: int) -> bool:
    return F(-n) == _sign(n + 1) * F(n)


def _eq3(n: int) -> bool:
    return L(-n) == _sign(n) * L(n)


def _eq4(n: int) -> bool:
    return L(2 * n) == L(n) ** 2 - 2 * _sign(n)


def _eq4_printed(n: int) -> bool:
    return L(2 * n) - 2 == L(n) ** 2


def _eq5(n: int) -> bool:
    return L(2 * n - 2) - 3 * L(2 * n) + L(2 * n + 2) == 0


def _eq6(m: int, n: int) -> bool:
    return F(m) * L(n) == F(m + n) + _sign(n) * F(m - n)


def _eq7(m: int, n: int) -> bool:
    return F(n) * L(m + 1) + F(n - 1) * L(m) == L(m + n)


def _eq8(n: int, r: int) -> bool:
    return F(n) ** 2 - F(n - r) * F(n + r) == _sign(n - r) * F(r) ** 2


def _eq8_printed(n: int, r: int) -> bool:
    return F(n) - F(n - r) * F(n + r) == _sign(n - r) * F(r) ** 2


def _eq9(n: int) -> bool:
    return F(n) ** 2 + F(n + 1) ** 2 == F(2 * n + 1)


def _eq10(n: int, l: int) -> bool:
    upper = n - l
    if upper < 0:
        raise ValueError(f"EQ10 needs n - l >= 0, got n={n}, l={l}")
    return sum(F(2 * k - 1) for k in range(1, upper + 1)) == F(2 * n - 2 * l)


def _eq11(l: int) -> bool:
    if l < 0:
        raise ValueError(f"EQ11 needs l >= 0, got l={l}")
    return sum(L(2 * k) for k in range(1, l + 1)) == L(2 * l + 1) - 1


def _lf(n: int) -> bool:
    return L(n) == F(n - 1) + F(n + 1)


@dataclass(frozen=True)
class Identity:
    tag: str
    params: tuple[str, ...]
    formula: str
    check: Callable[..., bool]
    erratum: str | None = None


IDENTITIES: dict[str, Identity] = {
    ident.tag: ident
    for ident in [
        Identity("EQ1", ("n",), "F(2n-2) - 3F(2n) + F(2n+2) = 0", _eq1),
        Identity("EQ2", ("n",), "F(-n) = (-1)^(n+1) F(n)", _eq2),
        Identity("EQ3", ("n",), "L(-n) = (-1)^n L(n)", _eq3),
        Identity("EQ4", ("n",), "L(2n) = L(n)^2 - 2(-1)^n", _eq4),
        Identity(
            "EQ4-printed", ("n",), "L(2n) - 2 = L(n)^2", _eq4_printed,
            erratum="holds only for odd n; use EQ4",
        ),
        Identity("EQ5", ("n",), "L(2n-2) - 3L(2n) + L(2n+2) = 0", _eq5),
        Identity("EQ6", ("m", "n"), "F(m)L(n) = F(m+n) + (-1)^n F(m-n)", _eq6),
        Identity("EQ7", ("m", "n"), "F(n)L(m+1) + F(n-1)L(m) = L(m+n)", _eq7),
        Identity("EQ8", ("n", "r"), "F(n)^2 - F(n-r)F(n+r) = (-1)^(n-r) F(r)^2", _eq8),
        Identity(
            "EQ8-printed", ("n", "r"), "F(n) - F(n-r)F(n+r) = (-1)^(n-r) F(r)^2",
            _eq8_printed,
            erratum="missing square on F(n); fails at n=3, r=1; use EQ8",
        ),
        Identity("EQ9", ("n",), "F(n)^2 + F(n+1)^2 = F(2n+1)", _eq9),
        Identity("EQ10", ("n", "l"), "sum_{k=1}^{n-l} F(2k-1) = F(2n-2l)", _eq10),
        Identity("EQ11", ("l",), "sum_{k=1}^{l} L(2k) = L(2l+1) - 1", _eq11),
        Identity("LF", ("n",), "L(n) = F(n-1) + F(n+1)", _lf),
    ]
}


def check_identity(tag: str, params: Mapping[str, int]) -> bool:
    """Evaluate catalogue identity `tag` at the given indices.

    EQ4 and EQ8 are the corrected forms; the literal misprints are available
    as EQ4-printed and EQ8-printed.
    """
    try:
        ident = IDENTITIES[tag]
    except KeyError:
        raise ValueError(f"unknown identity {tag!r}; known: {', '.join(IDENTITIES)}") from None
    missing = [p for p in ident.params if p not in params]
    if missing:
        raise ValueError(f"identity {tag} is missing index {missing[0]!r}")
    args = {p: int(params[p]) for p in ident.params}
    for value in args.values():
        _check_index(value)
    return ident.check(**args)
