from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldCtx, FieldError, build_field, is_prime


@dataclass(frozen=True)
class FamilyParams:
    """(p, k) with n = 4k: the setting of the binomial family and its lemmas."""

    p: int
    k: int

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise FieldError(f"odd characteristic only: p={self.p}")
        if self.k < 1:
            raise FieldError("k must be positive")

    @property
    def n(self) -> int:
        return 4 * self.k

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def pk(self) -> int:
        return self.p**self.k

    @property
    def p2k(self) -> int:
        return self.p ** (2 * self.k)

    @property
    def d0(self) -> int:
        """Exponent of the non-quadratic term, p^3k + p^2k - p^k + 1."""
        return self.p ** (3 * self.k) + self.p2k - self.pk + 1

    @property
    def d(self) -> int:
        """Niho exponent (p^2k + 1) / 2."""
        return (self.p2k + 1) // 2

    @property
    def s(self) -> int:
        """Gauss-sum sign: (-1)^k when p = 3 mod 4, else 1."""
        return (-1) ** self.k if self.p % 4 == 3 else 1

    def field(self) -> FieldCtx:
        return build_field(self.p, self.n)

    def as_dict(self) -> dict:
        return {"p": self.p, "k": self.k}
