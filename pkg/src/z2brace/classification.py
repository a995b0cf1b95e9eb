"""The twelve-family classification of valid pairs, and its cross-validation.

Valid pairs (phi, psi) fall into twelve parametric families, labelled with
dotted names 1.1 .. 4.2 and grouped into four blocks by the determinant
signs (det phi, det psi): block 1 = (1, 1), block 2 = (1, -1),
block 3 = (-1, 1), block 4 = (-1, -1).  This module provides

  * exact constructors for every family (generate_row),
  * a membership test evaluating all twelve family predicates
    (row_membership), including exact parameter recovery for family 1.2,
  * a duplicate-free lexicographic enumeration of unimodular matrices
    with bounded entries (enumerate_unimodular),
  * a bidirectional exhaustive cross-validation (exhaustive_search):
    every valid pair in the bounded box must match a family, and every
    family instance that fits in the box must be valid,
  * an order-classification cross-check over the same box
    (orders_crosscheck).

Family constructors follow the case analysis by order of phi.  Square-root
parametrizations (families 1.3, 1.4, 2.1, 2.2, 3.1, 3.2, 4.2) take the
root of their radicand exactly and reject non-squares; rational
parametrizations (1.5, 1.6, 4.1) reject non-exact divisions.
"""

from __future__ import annotations

import math
import multiprocessing
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterable, Iterator

from .brace import BraceSpec, check_pair
from .gl2z import (
    IDENTITY,
    Mat2,
    congruent_mod,
    order_by_iteration,
    order_by_predicate,
)

__all__ = [
    "BadParams",
    "GcdError",
    "IntegralityError",
    "ROW_BLOCKS",
    "RowLabel",
    "RowParams",
    "SearchReport",
    "enumerate_unimodular",
    "exhaustive_search",
    "generate_row",
    "generated_row_instances",
    "orders_crosscheck",
    "row12_parameters",
    "row_membership",
]


class BadParams(ValueError):
    """Parameters do not fit the family (wrong arity or excluded values)."""


class IntegralityError(BadParams):
    """A radicand is not a perfect square, or a division is not exact."""


class GcdError(BadParams):
    """Family 1.2 requires gcd(p, q) = 1."""


class RowLabel(Enum):
    """Dotted labels of the twelve classification families."""

    R1_1 = "1.1"
    R1_2 = "1.2"
    R1_3 = "1.3"
    R1_4 = "1.4"
    R1_5 = "1.5"
    R1_6 = "1.6"
    R2_1 = "2.1"
    R2_2 = "2.2"
    R3_1 = "3.1"
    R3_2 = "3.2"
    R4_1 = "4.1"
    R4_2 = "4.2"

    def __str__(self) -> str:
        return self.value


#: (det phi, det psi) of each family's block.
ROW_BLOCKS: dict[RowLabel, tuple[int, int]] = {
    RowLabel.R1_1: (1, 1),
    RowLabel.R1_2: (1, 1),
    RowLabel.R1_3: (1, 1),
    RowLabel.R1_4: (1, 1),
    RowLabel.R1_5: (1, 1),
    RowLabel.R1_6: (1, 1),
    RowLabel.R2_1: (1, -1),
    RowLabel.R2_2: (1, -1),
    RowLabel.R3_1: (-1, 1),
    RowLabel.R3_2: (-1, 1),
    RowLabel.R4_1: (-1, -1),
    RowLabel.R4_2: (-1, -1),
}

_LABEL_BY_VALUE = {label.value: label for label in RowLabel}


def row_label(value: str) -> RowLabel:
    """Look up a label from its dotted form, e.g. "1.2"."""
    try:
        return _LABEL_BY_VALUE[value]
    except KeyError:
        raise BadParams(f"unknown family label {value!r}") from None


@dataclass(frozen=True, slots=True)
class RowParams:
    """Family parameters; which fields apply depends on the label.

    1.1: sign1, sign2            1.2: m, p, q (gcd(p, q) = 1)
    1.3/1.4: p, q, sign1         1.5/1.6: m, n
    2.1/2.2/3.1/3.2/4.2: p, q, sign1
    4.1: m, n, plus p exactly when m = n (m = n in {0, -1}).
    """

    m: int | None = None
    p: int | None = None
    q: int | None = None
    n: int | None = None
    sign1: int | None = None
    sign2: int | None = None

    def __post_init__(self) -> None:
        for name in ("sign1", "sign2"):
            value = getattr(self, name)
            if value is not None and value not in (1, -1):
                raise BadParams(f"{name} must be +1 or -1, got {value}")


def _need(params: RowParams, label: RowLabel, *names: str) -> list[int]:
    values = []
    for name in names:
        value = getattr(params, name)
        if value is None:
            raise BadParams(f"family {label} needs parameters {', '.join(names)}")
        values.append(value)
    return values


def _exact_sqrt(radicand: int) -> int:
    """Nonnegative integer square root, or IntegralityError."""
    if radicand < 0:
        raise IntegralityError(f"radicand {radicand} is negative")
    root = math.isqrt(radicand)
    if root * root != radicand:
        raise IntegralityError(f"radicand {radicand} is not a perfect square")
    return root


def _exact_div(num: int, den: int) -> int:
    if den == 0 or num % den != 0:
        raise IntegralityError(f"{num}/{den} is not an integer")
    return num // den


def _swap_conj(m: Mat2) -> Mat2:
    """Conjugation by the coordinate swap: exchanges both index pairs."""
    return Mat2(m.a22, m.a21, m.a12, m.a11)


def _scaled_identity(sign: int) -> Mat2:
    return Mat2(sign, 0, 0, sign)


def _gen_1_1(params: RowParams) -> BraceSpec:
    s1, s2 = _need(params, RowLabel.R1_1, "sign1", "sign2")
    return BraceSpec(_scaled_identity(s1), _scaled_identity(s2))


def _gen_1_2(params: RowParams) -> BraceSpec:
    m, p, q = _need(params, RowLabel.R1_2, "m", "p", "q")
    if math.gcd(p, q) != 1:
        raise GcdError(f"gcd({p}, {q}) = {math.gcd(p, q)}, must be 1")
    phi = Mat2(1 + m * p * p * q, m * p * q * q, -m * p**3, 1 - m * p * p * q)
    psi = Mat2(1 + m * p * q * q, m * q**3, -m * p * p * q, 1 - m * p * q * q)
    return BraceSpec(phi, psi)


def _order3_psi_identity(p: int, q: int, sign: int) -> Mat2:
    # Order-3 matrix with a11 = 1 mod 3, a12 = 0 mod 3: partner of psi = E.
    root = _exact_sqrt(-3 - 12 * p * q)
    return Mat2((-1 + sign * root) // 2, 3 * p, q, (-1 - sign * root) // 2)


def _gen_1_4(params: RowParams) -> BraceSpec:
    p, q, s = _need(params, RowLabel.R1_4, "p", "q", "sign1")
    return BraceSpec(_order3_psi_identity(p, q, s), IDENTITY)


def _gen_1_3(params: RowParams) -> BraceSpec:
    p, q, s = _need(params, RowLabel.R1_3, "p", "q", "sign1")
    return BraceSpec(IDENTITY, _swap_conj(_order3_psi_identity(p, q, s)))


def _gen_1_5(params: RowParams) -> BraceSpec:
    m, n = _need(params, RowLabel.R1_5, "m", "n")
    if m == n:
        raise BadParams("family 1.5 has no members with m = n")
    h = _exact_div(1 + n + 2 * m + 3 * m * n, n - m)
    phi = Mat2(h, 2 + 3 * n + h, 1 + 3 * m - h, -1 - h)
    return BraceSpec(phi, phi)


def _gen_1_6(params: RowParams) -> BraceSpec:
    m, n = _need(params, RowLabel.R1_6, "m", "n")
    if 1 + m + n == 0:
        raise BadParams("family 1.6 has no members with m + n = -1")
    h = _exact_div(3 * m * n + m + n, 1 + m + n)
    phi = Mat2(h, 1 + 3 * n - h, -1 - 3 * m + h, -1 - h)
    return BraceSpec(phi, phi.inverse())


def _order2_psi_identity(p: int, q: int, sign: int) -> Mat2:
    # Order-2 matrix with even a12: partner of psi = E.
    root = _exact_sqrt(1 - 2 * p * q)
    return Mat2(sign * root, 2 * p, q, -sign * root)


def _order2_psi_neg_identity(p: int, q: int, sign: int) -> Mat2:
    # Order-2 matrix congruent to E mod 2: partner of psi = -E (and of 4.2).
    root = _exact_sqrt(1 - 4 * p * q)
    return Mat2(sign * root, 2 * p, 2 * q, -sign * root)


def _gen_3_1(params: RowParams) -> BraceSpec:
    p, q, s = _need(params, RowLabel.R3_1, "p", "q", "sign1")
    return BraceSpec(_order2_psi_identity(p, q, s), IDENTITY)


def _gen_2_1(params: RowParams) -> BraceSpec:
    p, q, s = _need(params, RowLabel.R2_1, "p", "q", "sign1")
    return BraceSpec(IDENTITY, _swap_conj(_order2_psi_identity(p, q, s)))


def _gen_3_2(params: RowParams) -> BraceSpec:
    p, q, s = _need(params, RowLabel.R3_2, "p", "q", "sign1")
    return BraceSpec(_order2_psi_neg_identity(p, q, s), -IDENTITY)


def _gen_2_2(params: RowParams) -> BraceSpec:
    p, q, s = _need(params, RowLabel.R2_2, "p", "q", "sign1")
    return BraceSpec(-IDENTITY, _swap_conj(_order2_psi_neg_identity(p, q, s)))


def _gen_4_1(params: RowParams) -> BraceSpec:
    m, n = _need(params, RowLabel.R4_1, "m", "n")
    if m == n:
        if m not in (0, -1):
            raise BadParams("family 4.1 with m = n requires m in {0, -1}")
        if params.p is None:
            raise BadParams("family 4.1 with m = n needs the free parameter p")
        p = params.p
        if m == 0:
            phi = Mat2(p, 1 + p, 1 - p, -p)
        else:
            phi = Mat2(p, p - 1, -1 - p, -p)
    else:
        if params.p is not None:
            raise BadParams("family 4.1 with m != n takes no parameter p")
        h = _exact_div(m + n + 2 * m * n, n - m)
        phi = Mat2(h, 1 + 2 * n + h, 1 + 2 * m - h, -h)
    return BraceSpec(phi, phi)


def _gen_4_2(params: RowParams) -> BraceSpec:
    p, q, s = _need(params, RowLabel.R4_2, "p", "q", "sign1")
    phi = _order2_psi_neg_identity(p, q, s)
    return BraceSpec(phi, -phi)


_GENERATORS = {
    RowLabel.R1_1: _gen_1_1,
    RowLabel.R1_2: _gen_1_2,
    RowLabel.R1_3: _gen_1_3,
    RowLabel.R1_4: _gen_1_4,
    RowLabel.R1_5: _gen_1_5,
    RowLabel.R1_6: _gen_1_6,
    RowLabel.R2_1: _gen_2_1,
    RowLabel.R2_2: _gen_2_2,
    RowLabel.R3_1: _gen_3_1,
    RowLabel.R3_2: _gen_3_2,
    RowLabel.R4_1: _gen_4_1,
    RowLabel.R4_2: _gen_4_2,
}


def generate_row(label: RowLabel, params: RowParams) -> BraceSpec:
    """Construct the exact family member for the given parameters.

    Raises BadParams (or its subclasses IntegralityError / GcdError) when
    the parameters do not produce a member.  Every constructed pair
    satisfies check_pair, which is asserted here.
    """
    spec = _GENERATORS[label](params)
    assert check_pair(spec).valid, f"family {label} produced invalid pair {spec}"
    return spec


# Congruence patterns used by the membership predicates.  Wildcards are in
# (a11, a12, a21, a22) order.
_WILD_A12 = (False, True, False, False)
_WILD_A21 = (False, False, True, False)
_SWAP = Mat2(0, 1, 1, 0)
_PATTERNS_1_5 = (Mat2(0, 2, 1, 2), Mat2(2, 1, 2, 0), IDENTITY)
_PATTERNS_1_6 = (Mat2(0, 1, 2, 2), Mat2(2, 2, 1, 0), IDENTITY)


def row12_parameters(spec: BraceSpec) -> tuple[int, int, int] | None:
    """Recover (m, p, q) for family 1.2, or None if the pair is not in it.

    The family is

        phi = (1 + m p^2 q,  m p q^2)      psi = (1 + m p q^2,  m q^3)
              (   -m p^3,  1 - m p^2 q)          (  -m p^2 q,  1 - m p q^2)

    with gcd(p, q) = 1.  (m, p, q) and (-m, -p, -q) give the same pair, so
    the answer is canonicalized to p > 0, or p = 0 with q > 0; the identity
    pair reports (0, 1, 0).  Since the off-diagonal entries are m p^3 and
    m q^3 up to sign, a divisor scan bounded by the cube roots of the
    largest entry magnitude plus one is exhaustive.
    """
    phi, psi = spec.phi, spec.psi
    if phi == IDENTITY and psi == IDENTITY:
        return (0, 1, 0)
    bound = max(abs(e) for e in phi.entries() + psi.entries()) + 1
    cube_cap = 1
    while (cube_cap + 1) ** 3 <= bound:
        cube_cap += 1
    for p in range(0, cube_cap + 1):
        for q in range(-cube_cap, cube_cap + 1):
            if p == 0 and q <= 0:
                continue
            if math.gcd(p, q) != 1:
                continue
            if p > 0:
                if phi.a21 % p**3 != 0:
                    continue
                m = -phi.a21 // p**3
            else:
                if psi.a12 % q**3 != 0:
                    continue
                m = psi.a12 // q**3
            if m == 0 or abs(m) > bound:
                continue
            candidate = _gen_1_2(RowParams(m=m, p=p, q=q))
            if candidate.phi == phi and candidate.psi == psi:
                return (m, p, q)
    return None


def row_membership(spec: BraceSpec) -> set[RowLabel]:
    """Every family whose defining conditions the pair satisfies.

    Families may overlap; for example the identity pair belongs to both
    1.1 and 1.2 (with m = 0).  Membership is purely a predicate evaluation
    and does not require the pair to be valid.
    """
    phi, psi = spec.phi, spec.psi
    dphi, dpsi = phi.det(), psi.det()
    plus_minus_e = (IDENTITY, -IDENTITY)
    labels: set[RowLabel] = set()

    if dphi == 1 and dpsi == 1:
        if phi in plus_minus_e and psi in plus_minus_e:
            labels.add(RowLabel.R1_1)
        if row12_parameters(spec) is not None:
            labels.add(RowLabel.R1_2)
        if phi == IDENTITY and psi.trace() == -1 and congruent_mod(psi, IDENTITY, 3, _WILD_A12):
            labels.add(RowLabel.R1_3)
        if psi == IDENTITY and phi.trace() == -1 and congruent_mod(phi, IDENTITY, 3, _WILD_A21):
            labels.add(RowLabel.R1_4)
        if psi == phi and phi.trace() == -1 and any(
            congruent_mod(phi, pattern, 3) for pattern in _PATTERNS_1_5
        ):
            labels.add(RowLabel.R1_5)
        if psi == phi.inverse() and phi.trace() == -1 and any(
            congruent_mod(phi, pattern, 3) for pattern in _PATTERNS_1_6
        ):
            labels.add(RowLabel.R1_6)
    elif dphi == 1 and dpsi == -1:
        if phi == IDENTITY and psi.trace() == 0 and congruent_mod(psi, IDENTITY, 2, _WILD_A12):
            labels.add(RowLabel.R2_1)
        if phi == -IDENTITY and psi.trace() == 0 and congruent_mod(psi, IDENTITY, 2):
            labels.add(RowLabel.R2_2)
    elif dphi == -1 and dpsi == 1:
        if psi == IDENTITY and phi.trace() == 0 and congruent_mod(phi, IDENTITY, 2, _WILD_A21):
            labels.add(RowLabel.R3_1)
        if psi == -IDENTITY and phi.trace() == 0 and congruent_mod(phi, IDENTITY, 2):
            labels.add(RowLabel.R3_2)
    else:
        if psi == phi and phi.trace() == 0 and (
            congruent_mod(phi, IDENTITY, 2) or congruent_mod(phi, _SWAP, 2)
        ):
            labels.add(RowLabel.R4_1)
        if psi == -phi and phi.trace() == 0 and congruent_mod(phi, IDENTITY, 2):
            labels.add(RowLabel.R4_2)
    return labels


def enumerate_unimodular(bound: int) -> Iterator[Mat2]:
    """All matrices with entries in [-bound, bound] and determinant +-1.

    Lexicographic in (a11, a12, a21, a22), each matrix exactly once.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    rng = range(-bound, bound + 1)
    for a11 in rng:
        for a12 in rng:
            for a21 in rng:
                for a22 in rng:
                    if abs(a11 * a22 - a12 * a21) == 1:
                        yield Mat2(a11, a12, a21, a22)


def _mat_key(m: Mat2) -> tuple[int, int, int, int]:
    return m.entries()


def _spec_key(spec: BraceSpec) -> tuple:
    return (_mat_key(spec.phi), _mat_key(spec.psi))


def _cube_cap(limit: int) -> int:
    cap = 1
    while (cap + 1) ** 3 <= limit:
        cap += 1
    return cap


def _search_param_grid(label: RowLabel, bound: int) -> Iterator[RowParams]:
    """Parameter tuples whose family member can fit in the entry box.

    The ranges are deliberately generous; instantiation failures and
    out-of-box members are filtered by the caller.  For every family the
    entry formulas bound the parameters linearly (or by cube roots for
    1.2), so these ranges provably cover all in-box members.
    """
    signs = (1, -1)
    wide = range(-bound - 1, bound + 2)
    if label == RowLabel.R1_1:
        for s1, s2 in product(signs, signs):
            yield RowParams(sign1=s1, sign2=s2)
    elif label == RowLabel.R1_2:
        cap = _cube_cap(bound + 1)
        for m, p, q in product(wide, range(-cap, cap + 1), range(-cap, cap + 1)):
            yield RowParams(m=m, p=p, q=q)
    elif label in (RowLabel.R1_3, RowLabel.R1_4):
        for p, q, s in product(range(-bound, bound + 1), range(-bound, bound + 1), signs):
            yield RowParams(p=p, q=q, sign1=s)
    elif label in (RowLabel.R1_5, RowLabel.R1_6):
        for m, n in product(wide, wide):
            yield RowParams(m=m, n=n)
    elif label == RowLabel.R4_1:
        for m in (0, -1):
            for p in wide:
                yield RowParams(m=m, n=m, p=p)
        for m, n in product(wide, wide):
            if m != n:
                yield RowParams(m=m, n=n)
    else:  # 2.1, 2.2, 3.1, 3.2, 4.2
        for p, q, s in product(range(-bound, bound + 1), range(-bound, bound + 1), signs):
            yield RowParams(p=p, q=q, sign1=s)


def _max_entry(spec: BraceSpec) -> int:
    return max(abs(e) for e in spec.phi.entries() + spec.psi.entries())


def generated_row_instances(bound: int) -> list[tuple[RowLabel, BraceSpec]]:
    """Every family member whose entries all fit in [-bound, bound].

    Deduplicated per (label, pair) and sorted lexicographically, so the
    result is independent of grid iteration order.
    """
    seen: set[tuple] = set()
    instances: list[tuple[RowLabel, BraceSpec]] = []
    for label in RowLabel:
        for params in _search_param_grid(label, bound):
            try:
                spec = generate_row(label, params)
            except BadParams:
                continue
            if _max_entry(spec) > bound:
                continue
            key = (label.value, _spec_key(spec))
            if key not in seen:
                seen.add(key)
                instances.append((label, spec))
    instances.sort(key=lambda item: (item[0].value, _spec_key(item[1])))
    return instances


@dataclass
class SearchReport:
    """Outcome of the bidirectional exhaustive cross-validation.

    The classification is confirmed at this bound iff unmatched_valid and
    invalid_row_instances are both empty: every valid pair matched a
    family, and every in-box family member was valid.
    """

    bound: int
    candidates_examined: int
    valid_pairs: int
    unmatched_valid: list[BraceSpec] = field(default_factory=list)
    invalid_row_instances: list[tuple[RowLabel, BraceSpec]] = field(default_factory=list)
    row_histogram: dict[RowLabel, int] = field(default_factory=dict)

    @property
    def confirms_classification(self) -> bool:
        return not self.unmatched_valid and not self.invalid_row_instances

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "candidates": self.candidates_examined,
            "valid_pairs": self.valid_pairs,
            "row_histogram": {
                label.value: self.row_histogram.get(label, 0) for label in RowLabel
            },
            "unmatched_valid": [spec.to_dict() for spec in self.unmatched_valid],
            "invalid_row_instances": [
                {"row": label.value, "spec": spec.to_dict()}
                for label, spec in self.invalid_row_instances
            ],
        }


def _scan_pairs(phi: Mat2, candidates: Iterable[Mat2]):
    """Scan all (phi, psi) for one phi: valid count, histogram, unmatched.

    Also asserts, for every pair visited, that the entry-exponent and
    kernel-membership readings of the four conditions agree.
    """
    valid = 0
    histogram: Counter = Counter()
    unmatched: list[BraceSpec] = []
    for psi in candidates:
        spec = BraceSpec(phi, psi)
        verdict = check_pair(spec)
        if verdict.power_identities != verdict.kernel_identities:
            raise AssertionError(
                f"power/kernel condition mismatch for {spec}: "
                f"{verdict.power_identities} vs {verdict.kernel_identities}"
            )
        if not verdict.valid:
            continue
        valid += 1
        labels = row_membership(spec)
        if labels:
            histogram.update(labels)
        else:
            unmatched.append(spec)
    return valid, histogram, unmatched


_WORKER_CANDIDATES: list[Mat2] = []


def _init_search_worker(bound: int) -> None:
    global _WORKER_CANDIDATES
    _WORKER_CANDIDATES = list(enumerate_unimodular(bound))


def _scan_pairs_at(index: int):
    return _scan_pairs(_WORKER_CANDIDATES[index], _WORKER_CANDIDATES)


def exhaustive_search(bound: int, jobs: int = 1) -> SearchReport:
    """Cross-validate the classification over all pairs with entries in the box.

    Both orderings of every unimodular pair are examined independently (the
    families are not symmetric under swapping phi and psi).  With jobs > 1
    the phi-stream is partitioned across worker processes; the merge is in
    candidate order, so the report is identical to the single-process one.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if jobs < 1:
        raise ValueError("jobs must be positive")
    candidates = list(enumerate_unimodular(bound))
    if jobs == 1:
        partials = [_scan_pairs(phi, candidates) for phi in candidates]
    else:
        with multiprocessing.Pool(
            processes=jobs, initializer=_init_search_worker, initargs=(bound,)
        ) as pool:
            partials = pool.map(_scan_pairs_at, range(len(candidates)))

    valid_pairs = 0
    histogram: Counter = Counter()
    unmatched: list[BraceSpec] = []
    for part_valid, part_hist, part_unmatched in partials:
        valid_pairs += part_valid
        histogram.update(part_hist)
        unmatched.extend(part_unmatched)
    unmatched.sort(key=_spec_key)

    invalid_instances = [
        (label, spec)
        for label, spec in generated_row_instances(bound)
        if not check_pair(spec).valid
    ]

    return SearchReport(
        bound=bound,
        candidates_examined=len(candidates) ** 2,
        valid_pairs=valid_pairs,
        unmatched_valid=unmatched,
        invalid_row_instances=invalid_instances,
        row_histogram=dict(histogram),
    )


def orders_crosscheck(bound: int):
    """Compare the det/trace order classification with explicit iteration.

    Returns the list of disagreements (matrix, by_predicate, by_iteration);
    an empty list means the two independent classifications agree on every
    unimodular matrix in the box.
    """
    disagreements = []
    for matrix in enumerate_unimodular(bound):
        predicted = order_by_predicate(matrix)
        iterated = order_by_iteration(matrix)
        if predicted != iterated:
            disagreements.append((matrix, predicted, iterated))
    return disagreements
