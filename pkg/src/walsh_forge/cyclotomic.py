"""Exact arithmetic in Z[w], w = exp(2*pi*i/p).

A :class:`CycInt` stores coordinates over the integral basis
1, w, ..., w^(p-2); the w^(p-1) coordinate is removed with
1 + w + ... + w^(p-1) = 0, which makes the representation unique.
"""

from __future__ import annotations

import cmath
from typing import Iterable, Sequence

import numpy as np


class CycIntError(ValueError):
    pass


def _canonical(full: Sequence[int], p: int) -> tuple[int, ...]:
    last = int(full[p - 1])
    return tuple(int(full[i]) - last for i in range(p - 1))


class CycInt:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]):
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) == p:
            coeffs = list(_canonical(coeffs, p))
        elif len(coeffs) != p - 1:
            raise CycIntError(f"need {p - 1} or {p} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_counts(cls, p: int, counts: Sequence[int]) -> "CycInt":
        """sum_t counts[t] * w^t for t in range(p)."""
        return cls(p, _canonical(counts, p))

    @classmethod
    def integer(cls, p: int, m: int) -> "CycInt":
        return cls(p, (m,) + (0,) * (p - 2))

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls.integer(p, 0)

    @classmethod
    def one(cls, p: int) -> "CycInt":
        return cls.integer(p, 1)

    def full(self) -> list[int]:
        """Length-p coordinate vector with a zero w^(p-1) entry."""
        return list(self.coeffs) + [0]

    def _same_p(self, other: "CycInt") -> None:
        if other.p != self.p:
            raise CycIntError(f"cannot mix p={self.p} and p={other.p}")

    def _lift(self, other):
        if isinstance(other, CycInt):
            self._same_p(other)
            return other
        if isinstance(other, (int, np.integer)):
            return CycInt.integer(self.p, int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CycInt(self.p, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, (-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CycInt(self.p, (a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        p = self.p
        prod = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[(i + j) % p] += a * b
        return CycInt(p, prod)

    __rmul__ = __mul__

    def conj(self) -> "CycInt":
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            full[(-i) % p] = a
        return CycInt(p, full)

    def rotate(self, t: int) -> "CycInt":
        """Multiply by w^t."""
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            full[(i + t) % p] = a
        return CycInt(p, full)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise CycIntError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __complex__(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.p)
        return sum(c * w**i for i, c in enumerate(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"CycInt(p={self.p}, coeffs={list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*w^{i}")
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "CycInt":
        return cls(obj["p"], obj["coeffs"])


def cyc_root(p: int, t: int) -> CycInt:
    """w^t in canonical form."""
    full = [0] * p
    full[t % p] = 1
    return CycInt(p, full)


def mag_sq(z: CycInt) -> int:
    """|z|^2 as a rational integer; raises if z*conj(z) is not one."""
    return (z * z.conj()).rational_value()


def match_scaled_root(z: CycInt, m: int) -> tuple[int, int] | None:
    """Return (sign, t) with z == sign * m * w^t, or None."""
    if m <= 0:
        raise CycIntError("scale must be positive")
    p = z.p
    for t in range(p):
        root = cyc_root(p, t)
        for sign in (1, -1):
            if z.coeffs == tuple(sign * m * c for c in root.coeffs):
                return sign, t
    return None


def ratio_is_scaled_root(z1: CycInt, z2: CycInt, m: int) -> int | None:
    """Return t with z1 * conj(z2) == m * w^t, or None."""
    hit = match_scaled_root(z1 * z2.conj(), m)
    if hit is None or hit[0] != 1:
        return None
    return hit[1]
