"""Shared fixtures: one generated pair per classification family, plus
session-scoped search reports so the expensive sweeps run once.
"""

import pytest

from z2brace import (
    BraceSpec,
    IDENTITY,
    RowLabel,
    RowParams,
    exhaustive_search,
    generate_row,
)

# Smallest parameter tuples per family that give something other than a
# pair of scaled identities (and a non-diagonal matrix where the family
# has one this small).
ROW_FIXTURE_PARAMS = {
    RowLabel.R1_1: RowParams(sign1=-1, sign2=-1),
    RowLabel.R1_2: RowParams(m=1, p=1, q=1),
    RowLabel.R1_3: RowParams(p=1, q=-1, sign1=1),
    RowLabel.R1_4: RowParams(p=1, q=-1, sign1=1),
    RowLabel.R1_5: RowParams(m=0, n=1),
    RowLabel.R1_6: RowParams(m=0, n=0),
    RowLabel.R2_1: RowParams(p=0, q=1, sign1=1),
    RowLabel.R2_2: RowParams(p=1, q=0, sign1=1),
    RowLabel.R3_1: RowParams(p=0, q=1, sign1=1),
    RowLabel.R3_2: RowParams(p=1, q=0, sign1=1),
    RowLabel.R4_1: RowParams(m=0, n=0, p=1),
    RowLabel.R4_2: RowParams(p=1, q=0, sign1=1),
}

ROW_SPECS = {
    label: generate_row(label, params) for label, params in ROW_FIXTURE_PARAMS.items()
}

TRIVIAL_SPEC = BraceSpec(IDENTITY, IDENTITY)

#: The trivial pair plus one representative per family.
ALL_FIXTURE_SPECS = [TRIVIAL_SPEC, *ROW_SPECS.values()]


@pytest.fixture(scope="session")
def search_bound1():
    return exhaustive_search(1)


@pytest.fixture(scope="session")
def search_bound2():
    return exhaustive_search(2)
