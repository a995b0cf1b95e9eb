"""Braces on Z^2 defined by a pair of unimodular integer matrices.

The additive group is Z^2 with componentwise addition.  A pair (phi, psi)
of unimodular matrices assigns to each a = (a1, a2) the automorphism
lambda_a = phi^a1 * psi^a2, and the candidate multiplication is
a (*) b = a + lambda_a(b).  check_pair decides exactly when this makes
(Z^2, +, *) a brace: phi and psi must commute and four power identities,
whose exponents are read off the entries of phi and psi, must all equal
the identity matrix.

The same four conditions are recomputed along an independent code path,
as kernel membership of -u + lambda_w(u) for generators u, w, and both
tuples are reported so any divergence between the two readings surfaces
immediately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gl2z import IDENTITY, Mat2, NotUnimodular

__all__ = [
    "BraceSpec",
    "HolElement",
    "Vec2",
    "Verdict",
    "ZERO",
    "act",
    "brace_axiom_holds",
    "check_pair",
    "h_lambda_closed",
    "hol_mul",
    "in_lambda_kernel",
    "lambda_of",
    "odot",
    "odot_associative",
    "odot_inverse",
]


@dataclass(frozen=True, slots=True)
class Vec2:
    """Element of Z^2; addition is componentwise."""

    x1: int
    x2: int

    def __add__(self, other: "Vec2") -> "Vec2":
        if not isinstance(other, Vec2):
            return NotImplemented
        return Vec2(self.x1 + other.x1, self.x2 + other.x2)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x1, -self.x2)

    def __sub__(self, other: "Vec2") -> "Vec2":
        if not isinstance(other, Vec2):
            return NotImplemented
        return Vec2(self.x1 - other.x1, self.x2 - other.x2)

    def coords(self) -> tuple[int, int]:
        return (self.x1, self.x2)

    def __str__(self) -> str:
        return f"({self.x1},{self.x2})"


ZERO = Vec2(0, 0)

# Generators of Z^2, in the order used for the four pair conditions.
_GENERATORS = (Vec2(1, 0), Vec2(0, 1))


def act(m: Mat2, v: Vec2) -> Vec2:
    """The automorphism m applied to v."""
    return Vec2(m.a11 * v.x1 + m.a12 * v.x2, m.a21 * v.x1 + m.a22 * v.x2)


@dataclass(frozen=True, slots=True)
class BraceSpec:
    """Candidate pair (phi, psi): the automorphisms attached to the generators.

    Construction only enforces membership in GL2(Z); whether the pair
    actually defines a brace is decided by check_pair.
    """

    phi: Mat2
    psi: Mat2

    def __post_init__(self) -> None:
        for name, m in (("phi", self.phi), ("psi", self.psi)):
            if not m.is_unimodular():
                raise NotUnimodular(f"{name} = {m} has determinant {m.det()}")

    @classmethod
    def from_dict(cls, data: object) -> "BraceSpec":
        """Parse the JSON form {"phi": [[..]], "psi": [[..]]}."""
        if not isinstance(data, dict) or set(data) != {"phi", "psi"}:
            raise ValueError(
                f'expected an object with exactly the keys "phi" and "psi", got {data!r}'
            )
        return cls(Mat2.from_rows(data["phi"]), Mat2.from_rows(data["psi"]))

    def to_dict(self) -> dict:
        return {"phi": self.phi.rows(), "psi": self.psi.rows()}

    def __str__(self) -> str:
        return f"(phi={self.phi}, psi={self.psi})"


@dataclass(frozen=True, slots=True)
class Verdict:
    """Outcome of check_pair.

    power_identities holds the four entry-exponent conditions in generator
    order (phi on x, phi on y, psi on x, psi on y); kernel_identities holds
    the same conditions computed via kernel membership.  valid is commuting
    together with all four power identities.
    """

    valid: bool
    commuting: bool
    power_identities: tuple[bool, bool, bool, bool]
    kernel_identities: tuple[bool, bool, bool, bool]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "commuting": self.commuting,
            "power_identities": list(self.power_identities),
            "kernel_identities": list(self.kernel_identities),
        }


def lambda_of(spec: BraceSpec, a: Vec2) -> Mat2:
    """The automorphism lambda_a = phi^a1 * psi^a2."""
    return spec.phi ** a.x1 * spec.psi ** a.x2


def odot(spec: BraceSpec, a: Vec2, b: Vec2) -> Vec2:
    """The candidate multiplication a + lambda_a(b)."""
    return a + act(lambda_of(spec, a), b)


def odot_inverse(spec: BraceSpec, a: Vec2) -> Vec2:
    """-(lambda_a^-1(a)), the inverse of a for the multiplication.

    a odot result is always (0, 0); result odot a is (0, 0) whenever the
    spec is valid (for arbitrary pairs the multiplication need not be a
    group operation).
    """
    return -act(lambda_of(spec, a).inverse(), a)


def in_lambda_kernel(spec: BraceSpec, v: Vec2) -> bool:
    """True iff lambda_v = phi^v1 * psi^v2 is the identity."""
    return lambda_of(spec, v) == IDENTITY


def check_pair(spec: BraceSpec) -> Verdict:
    """Decide whether (phi, psi) defines a brace on Z^2.

    The pair is valid iff phi*psi = psi*phi and the four conditions

        phi^(phi11-1) psi^(phi21) = E,   phi^(phi12) psi^(phi22-1) = E,
        phi^(psi11-1) psi^(psi21) = E,   phi^(psi12) psi^(psi22-1) = E

    hold exactly.  The kernel tuple re-derives each condition by applying
    lambda_w to a generator u and testing -u + lambda_w(u) for membership
    in the kernel of lambda, rather than reading entries directly.
    """
    phi, psi = spec.phi, spec.psi
    commuting = phi * psi == psi * phi
    power = (
        phi ** (phi.a11 - 1) * psi ** phi.a21 == IDENTITY,
        phi ** phi.a12 * psi ** (phi.a22 - 1) == IDENTITY,
        phi ** (psi.a11 - 1) * psi ** psi.a21 == IDENTITY,
        phi ** psi.a12 * psi ** (psi.a22 - 1) == IDENTITY,
    )
    kernel = []
    for w in _GENERATORS:
        lam_w = lambda_of(spec, w)
        for u in _GENERATORS:
            kernel.append(in_lambda_kernel(spec, -u + act(lam_w, u)))
    return Verdict(
        valid=commuting and all(power),
        commuting=commuting,
        power_identities=power,
        kernel_identities=tuple(kernel),
    )


def brace_axiom_holds(spec: BraceSpec, a: Vec2, b: Vec2, c: Vec2) -> bool:
    """Exact check of a*(b+c) = (a*b) + (-a) + (a*c) at one triple.

    Holds for every triple as soon as lambda is defined through matrix
    powers, even for invalid pairs; the condition that actually fails for
    bad pairs is associativity of the multiplication.
    """
    left = odot(spec, a, b + c)
    right = odot(spec, a, b) + (-a) + odot(spec, a, c)
    return left == right


def odot_associative(spec: BraceSpec, a: Vec2, b: Vec2, c: Vec2) -> bool:
    """Exact check of a*(b*c) = (a*b)*c at one triple."""
    return odot(spec, a, odot(spec, b, c)) == odot(spec, odot(spec, a, b), c)


@dataclass(frozen=True, slots=True)
class HolElement:
    """Element (g, f) of the holomorph Z^2 x| GL2(Z)."""

    g: Vec2
    f: Mat2

    def __post_init__(self) -> None:
        if not self.f.is_unimodular():
            raise NotUnimodular(f"automorphism part {self.f} has determinant {self.f.det()}")


def hol_mul(h1: HolElement, h2: HolElement) -> HolElement:
    """Semidirect product law (g1, f1)(g2, f2) = (g1 + f1(g2), f1 f2)."""
    return HolElement(h1.g + act(h1.f, h2.g), h1.f * h2.f)


def h_lambda_closed(spec: BraceSpec, a: Vec2, b: Vec2) -> bool:
    """Whether (a, lambda_a)(b, lambda_b) = (a*b, lambda_(a*b)) in the holomorph.

    For a valid spec this closure holds for all a, b, which is what makes
    {(a, lambda_a)} a subgroup of the holomorph.
    """
    product = hol_mul(
        HolElement(a, lambda_of(spec, a)),
        HolElement(b, lambda_of(spec, b)),
    )
    ab = odot(spec, a, b)
    return product == HolElement(ab, lambda_of(spec, ab))
