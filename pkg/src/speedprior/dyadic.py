"""Exact nonnegative dyadic rationals: value = num / 2**exp.

Every probability mass in this package is a finite sum of powers of two and
is carried exactly; nothing in this module ever rounds. Values are kept in
canonical form (num odd or zero, zero has exp 0) so that equality is
structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Dyadic:
    """Canonical dyadic rational num / 2**exp with num >= 0, exp >= 0."""

    num: int
    exp: int

    def __post_init__(self):
        if self.num < 0 or self.exp < 0:
            raise ValueError("dyadic must be nonnegative with nonnegative exponent")
        if self.num == 0:
            if self.exp != 0:
                raise ValueError("canonical zero has exp 0")
        elif self.num % 2 == 0:
            raise ValueError("canonical numerator must be odd")

    @staticmethod
    def make(num: int, exp: int) -> "Dyadic":
        """Build from any (num, exp) pair, reducing to canonical form."""
        if num < 0:
            raise ValueError("dyadic must be nonnegative")
        if num == 0:
            return Dyadic(0, 0)
        while num % 2 == 0 and exp > 0:
            num //= 2
            exp -= 1
        if exp < 0:
            raise ValueError("exponent must be nonnegative")
        return Dyadic(num, exp)

    @staticmethod
    def zero() -> "Dyadic":
        return Dyadic(0, 0)

    @staticmethod
    def one() -> "Dyadic":
        return Dyadic(1, 0)

    @staticmethod
    def pow2(k: int) -> "Dyadic":
        """2**k for k <= 0 (and integer powers for k > 0)."""
        if k >= 0:
            return Dyadic(1 << k, 0)
        return Dyadic(1, -k)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exp, other.exp)
        n = (self.num << (e - self.exp)) + (other.num << (e - other.exp))
        return Dyadic.make(n, e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exp, other.exp)
        n = (self.num << (e - self.exp)) - (other.num << (e - other.exp))
        if n < 0:
            raise ValueError("dyadic subtraction went negative")
        return Dyadic.make(n, e)

    def _cmp(self, other: "Dyadic") -> int:
        a = self.num << other.exp
        b = other.num << self.exp
        return (a > b) - (a < b)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def times_pow2(self, k: int) -> "Dyadic":
        """Exact scaling by 2**k (k may be negative)."""
        if self.num == 0:
            return self
        if k >= 0:
            return Dyadic.make(self.num << k, self.exp)
        return Dyadic.make(self.num, self.exp - k)

    def is_zero(self) -> bool:
        return self.num == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def to_float(self) -> float:
        # display only; never used in any mass computation
        return self.num / (1 << self.exp) if self.exp < 1000 else float(self.to_fraction())

    def to_json(self) -> dict:
        return {"num": str(self.num), "exp": self.exp}

    @staticmethod
    def from_json(obj: dict) -> "Dyadic":
        return Dyadic.make(int(obj["num"]), int(obj["exp"]))

    def __repr__(self):
        return f"Dyadic({self.num}/2^{self.exp})"


def dyadic_sum(terms) -> Dyadic:
    total = Dyadic.zero()
    for t in terms:
        total = total + t
    return total
