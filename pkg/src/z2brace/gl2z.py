"""Exact arithmetic on 2x2 integer matrices and the GL2(Z) facts the brace
machinery relies on: multiplicative orders read off determinant and trace,
finite centralizers, and entrywise congruences with wildcard masks.

Everything works on plain Python integers, so every result is exact; there
is no floating point and no fixed-width wraparound anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "FINITE_ORDERS",
    "IDENTITY",
    "Mat2",
    "MatOrder",
    "NO_WILDCARDS",
    "NotUnimodular",
    "UnsupportedOrder",
    "centralizer_finite",
    "commutes",
    "congruent_mod",
    "order_by_iteration",
    "order_by_predicate",
]


class NotUnimodular(ValueError):
    """The operation needs determinant +1 or -1."""


class UnsupportedOrder(ValueError):
    """centralizer_finite was asked for a matrix whose centralizer is infinite."""


#: The finite multiplicative orders that occur in GL2(Z).
FINITE_ORDERS = (1, 2, 3, 4, 6)


@dataclass(frozen=True, slots=True)
class Mat2:
    """2x2 integer matrix ((a11, a12), (a21, a22)), immutable and hashable."""

    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def from_rows(cls, rows: object) -> "Mat2":
        """Build from the JSON form [[a11, a12], [a21, a22]].

        Entries must be plain integers (bools are rejected).
        """
        if (
            not isinstance(rows, (list, tuple))
            or len(rows) != 2
            or any(not isinstance(r, (list, tuple)) or len(r) != 2 for r in rows)
        ):
            raise ValueError(f"expected a 2x2 nested list, got {rows!r}")
        flat = [rows[0][0], rows[0][1], rows[1][0], rows[1][1]]
        if any(type(e) is not int for e in flat):
            raise ValueError(f"matrix entries must be integers, got {rows!r}")
        return cls(*flat)

    def rows(self) -> list[list[int]]:
        """JSON form [[a11, a12], [a21, a22]]."""
        return [[self.a11, self.a12], [self.a21, self.a22]]

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a11, self.a12, self.a21, self.a22)

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> int:
        return self.a11 + self.a22

    def is_unimodular(self) -> bool:
        return self.det() in (1, -1)

    def inverse(self) -> "Mat2":
        """Exact inverse: the adjugate for det +1, its negative for det -1."""
        d = self.det()
        if d == 1:
            return Mat2(self.a22, -self.a12, -self.a21, self.a11)
        if d == -1:
            return Mat2(-self.a22, self.a12, self.a21, -self.a11)
        raise NotUnimodular(f"{self} has determinant {d}, no integer inverse")

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        """Matrix-vector product on a coordinate pair."""
        x1, x2 = v
        return (self.a11 * x1 + self.a12 * x2, self.a21 * x1 + self.a22 * x2)

    def __mul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def __pow__(self, k: int) -> "Mat2":
        """Exact k-th power by binary exponentiation, any sign of k.

        Negative exponents go through inverse() and therefore require
        determinant +1 or -1.
        """
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = IDENTITY
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __str__(self) -> str:
        return f"[[{self.a11},{self.a12}],[{self.a21},{self.a22}]]"


IDENTITY = Mat2(1, 0, 0, 1)


@dataclass(frozen=True, slots=True)
class MatOrder:
    """Multiplicative order of a GL2(Z) element: finite n, or infinite (n is None).

    Only 1, 2, 3, 4 and 6 occur as finite orders in GL2(Z); any other finite
    value is rejected so a wrong order computation fails loudly instead of
    being carried along.
    """

    n: int | None

    def __post_init__(self) -> None:
        if self.n is not None and self.n not in FINITE_ORDERS:
            raise ValueError(f"{self.n} is not a finite order of a GL2(Z) element")

    @classmethod
    def finite(cls, n: int) -> "MatOrder":
        return cls(n)

    @classmethod
    def infinite(cls) -> "MatOrder":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.n is not None

    def __str__(self) -> str:
        return "inf" if self.n is None else str(self.n)


def order_by_predicate(a: Mat2) -> MatOrder:
    """Multiplicative order from determinant and trace alone.

    For unimodular a: order 1 iff a = E; order 2 iff a = -E or
    (det -1, trace 0); order 3 iff (det 1, trace -1); order 4 iff
    (det 1, trace 0); order 6 iff (det 1, trace 1); infinite otherwise.
    """
    if not a.is_unimodular():
        raise NotUnimodular(f"{a} has determinant {a.det()}")
    if a == IDENTITY:
        return MatOrder.finite(1)
    if a == -IDENTITY:
        return MatOrder.finite(2)
    d, t = a.det(), a.trace()
    if d == -1 and t == 0:
        return MatOrder.finite(2)
    if d == 1 and t == -1:
        return MatOrder.finite(3)
    if d == 1 and t == 0:
        return MatOrder.finite(4)
    if d == 1 and t == 1:
        return MatOrder.finite(6)
    return MatOrder.infinite()


def order_by_iteration(a: Mat2, cutoff: int = 12) -> MatOrder:
    """Order by explicitly multiplying out a, a^2, ... up to cutoff.

    Independent of order_by_predicate, so the two can cross-check each
    other.  Every finite order in GL2(Z) divides 12, hence the default.
    """
    if not a.is_unimodular():
        raise NotUnimodular(f"{a} has determinant {a.det()}")
    if cutoff < 1:
        raise ValueError("cutoff must be positive")
    power = a
    for n in range(1, cutoff + 1):
        if power == IDENTITY:
            return MatOrder.finite(n)
        power = power * a
    return MatOrder.infinite()


def commutes(a: Mat2, b: Mat2) -> bool:
    """True iff ab = ba exactly."""
    return a * b == b * a


def centralizer_finite(a: Mat2) -> frozenset[Mat2]:
    """The centralizer of a in GL2(Z) when a has finite order and a != +-E.

    For order 2 or 4 this is {+-E, +-a}; for order 3 or 6 it is
    {+-E, +-a, +-a^-1}.  The identity, -E and infinite-order matrices have
    infinite centralizers and are rejected.
    """
    order = order_by_predicate(a)
    if not order.is_finite or order.n == 1 or a == -IDENTITY:
        raise UnsupportedOrder(
            f"{a} has an infinite centralizer (order {order}); use commutes() directly"
        )
    members = {IDENTITY, -IDENTITY, a, -a}
    if order.n in (3, 6):
        inv = a.inverse()
        members.update((inv, -inv))
    return frozenset(members)


#: Wildcard mask matching every entry, in (a11, a12, a21, a22) order.
NO_WILDCARDS = (False, False, False, False)


def congruent_mod(
    a: Mat2,
    b: Mat2,
    k: int,
    wildcards: tuple[bool, bool, bool, bool] = NO_WILDCARDS,
) -> bool:
    """True iff every non-wildcard entry of a - b is divisible by k.

    The wildcard mask is in (a11, a12, a21, a22) order; a True position is
    left unconstrained.  Typical moduli here are 2 and 3.
    """
    if k < 1:
        raise ValueError("modulus must be positive")
    diffs = (
        a.a11 - b.a11,
        a.a12 - b.a12,
        a.a21 - b.a21,
        a.a22 - b.a22,
    )
    return all(wild or d % k == 0 for d, wild in zip(diffs, wildcards))
