"""Min-plus tropical arithmetic over exact rationals with a top element.

The carrier is Q together with Top; the semiring sum is min (neutral Top) and
the semiring product is rational addition (neutral 0, Top absorbing). Every
element except Top has a multiplicative inverse, its rational negation, which
makes the structure a semifield. The carrier is infinite, so laws are checked
on seeded samples instead of exhaustively.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import NegationOfTop

Rational = Union[Fraction, int]


@dataclass(frozen=True, order=False)
class Trop:
    """A rational value or Top (value None)."""

    value: Optional[Fraction]

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_top(self) -> bool:
        return self.value is None

    def __repr__(self):
        return "Top" if self.is_top else f"Trop({self.value})"


TOP = Trop(None)


def trop(x: Union[Trop, Rational, None]) -> Trop:
    if isinstance(x, Trop):
        return x
    if x is None:
        return TOP
    return Trop(Fraction(x))


def trop_leq(a: Trop, b: Trop) -> bool:
    """The usual rational order with Top greatest."""
    if b.is_top:
        return True
    if a.is_top:
        return False
    return a.value <= b.value


def trop_meet(a: Trop, b: Trop) -> Trop:
    """min; this is the semiring sum."""
    return a if trop_leq(a, b) else b


def trop_join(a: Trop, b: Trop) -> Trop:
    return b if trop_leq(a, b) else a


def trop_sum(a: Trop, b: Trop) -> Trop:
    return trop_meet(a, b)


def trop_prod(a: Trop, b: Trop) -> Trop:
    if a.is_top or b.is_top:
        return TOP
    return Trop(a.value + b.value)


def trop_neg(a: Trop) -> Trop:
    """Multiplicative inverse. Top has none."""
    if a.is_top:
        raise NegationOfTop("Top is not invertible")
    return Trop(-a.value)


TROP_ZERO = TOP           # additive neutral (min)
TROP_ONE = Trop(Fraction(0))  # multiplicative neutral (+)


@dataclass(frozen=True)
class TropicalUSemifield:
    """The min-plus rationals with a chosen positive unit u.

    u plays the role of the truncation bound; for rationals every positive u
    is a strong unit, so no archimedean side condition needs checking.
    """

    u: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        if self.u <= 0:
            raise ValueError("unit must be positive")


def sample_trop(rng: random.Random, top_weight: float = 0.05,
                num_bound: int = 50, den_bound: int = 12,
                nonnegative: bool = False) -> Trop:
    if rng.random() < top_weight:
        return TOP
    num = rng.randint(0 if nonnegative else -num_bound, num_bound)
    den = rng.randint(1, den_bound)
    return Trop(Fraction(num, den))


def tropical_law_report(samples: int = 10000, seed: int = 42) -> dict:
    """Sampled law checks: the eight semiring laws, inverses, and the
    derived-join identity a `meet` b = -((-a) join (-b)) on non-Top draws."""
    rng = random.Random(seed)
    fails = {
        "add-associative": 0, "add-commutative": 0, "add-identity": 0,
        "mul-associative": 0, "mul-identity": 0,
        "distributive-left": 0, "distributive-right": 0, "zero-absorbing": 0,
        "mul-inverse": 0, "meet-from-join": 0,
    }
    for _ in range(samples):
        a, b, c = (sample_trop(rng) for _ in range(3))
        if trop_sum(trop_sum(a, b), c) != trop_sum(a, trop_sum(b, c)):
            fails["add-associative"] += 1
        if trop_sum(a, b) != trop_sum(b, a):
            fails["add-commutative"] += 1
        if trop_sum(a, TROP_ZERO) != a:
            fails["add-identity"] += 1
        if trop_prod(trop_prod(a, b), c) != trop_prod(a, trop_prod(b, c)):
            fails["mul-associative"] += 1
        if trop_prod(a, TROP_ONE) != a or trop_prod(TROP_ONE, a) != a:
            fails["mul-identity"] += 1
        if trop_prod(a, trop_sum(b, c)) != trop_sum(trop_prod(a, b), trop_prod(a, c)):
            fails["distributive-left"] += 1
        if trop_prod(trop_sum(a, b), c) != trop_sum(trop_prod(a, c), trop_prod(b, c)):
            fails["distributive-right"] += 1
        if trop_prod(a, TROP_ZERO) != TROP_ZERO or trop_prod(TROP_ZERO, a) != TROP_ZERO:
            fails["zero-absorbing"] += 1
        if not a.is_top:
            if trop_prod(a, trop_neg(a)) != TROP_ONE:
                fails["mul-inverse"] += 1
            if not b.is_top:
                lhs = trop_meet(a, b)
                rhs = trop_neg(trop_join(trop_neg(a), trop_neg(b)))
                if lhs != rhs:
                    fails["meet-from-join"] += 1
    return {"samples": samples, "seed": seed, "failures": fails,
            "ok": not any(fails.values())}
