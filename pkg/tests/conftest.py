import pytest

import worked_examples as ex
from hookkron.hook_rule import picture_counts
from hookkron.pictures import Picture
from hookkron.shapes import partitions, skew
from hookkron.tableaux import PartialTableau


@pytest.fixture
def example_tableau() -> PartialTableau:
    return PartialTableau(skew(ex.T_OUTER, ex.T_INNER), ex.T_ENTRIES)


@pytest.fixture
def example_reading() -> dict:
    target = skew(ex.BIG_OUTER, ex.TARGET_INNER)
    return {c: ex.ROW_READING_BIG[c] for c in target.cells()}


@pytest.fixture
def example_picture() -> Picture:
    return Picture(
        skew(ex.T_OUTER, ex.T_INNER), skew(ex.BIG_OUTER, ex.TARGET_INNER), ex.LAMBDA_MAP
    )


@pytest.fixture(scope="session")
def counts_by_pair() -> dict:
    """Hook/exterior count vectors for every ordered pair of partitions of
    every degree up to 7, computed once for the whole session."""
    out = {}
    for n in range(1, 8):
        for lam in partitions(n):
            for mu in partitions(n):
                out[(lam, mu)] = picture_counts(lam, mu)
    return out
