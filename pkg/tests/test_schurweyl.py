from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from tgpdeform.errors import PreconditionError
from tgpdeform.partitions import kostka_number, partitions_of
from tgpdeform.schurweyl import (
    GDecomposition,
    dualweyl_check,
    kostka_cross_identity,
    schur_weyl_image,
    weyl_dimension,
    weyl_gmodule_decomposition,
)
from tgpdeform.symgrp import CharacterVector, sign_twist
from tgpdeform.tgp import build_quotient, character
from conftest import partitions


def dec(n, **kw):
    return GDecomposition(n, kw)


def test_weyl_dimension_small():
    assert weyl_dimension([1], 2) == 3
    assert weyl_dimension([1, 1], 2) == 3
    assert weyl_dimension([2], 2) == 6
    assert weyl_dimension([2, 1], 2) == 8
    assert weyl_dimension([1, 1, 1], 2) == 1
    assert weyl_dimension([1, 1, 1, 1], 2) == 0


def _weyl_formula(lam, n):
    """Product over positive roots of sl_{n+1}: prod_{i<j} (l_i - l_j + j - i) / (j - i)."""
    from fractions import Fraction
    l = list(lam) + [0] * (n + 1 - len(lam))
    out = Fraction(1)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            out *= Fraction(l[i] - l[j] + j - i, j - i)
    return out


@settings(max_examples=80)
@given(partitions(6, min_size=1), st.integers(min_value=1, max_value=6))
def test_hook_content_matches_weyl_formula(lam, n):
    if len(lam) <= n + 1:
        assert weyl_dimension(lam, n) == _weyl_formula(lam, n)


def test_decomposition_examples():
    assert weyl_gmodule_decomposition((1, 1), 2) == GDecomposition(2, {(1, 1): 1})
    assert weyl_gmodule_decomposition((2,), 2) == GDecomposition(2, {(2,): 1, (1, 1): 1})
    assert weyl_gmodule_decomposition((2, 1), 3) == GDecomposition(3, {(2, 1): 1, (1, 1, 1): 1})
    with pytest.raises(PreconditionError):
        weyl_gmodule_decomposition((2, 1), 2)


def test_image_examples():
    v = CharacterVector(3, {(2, 1): 1})
    assert schur_weyl_image(v, 3) == GDecomposition(3, {(2, 1): 1})
    v = CharacterVector(3, {(3,): 1, (2, 1): 2})
    assert schur_weyl_image(v, 3) == GDecomposition(3, {(3,): 1, (2, 1): 2})
    tw = sign_twist(character(build_quotient((2, 1), (1, 1))))
    assert schur_weyl_image(tw, 3) == GDecomposition(3, {(1, 1, 1): 1, (2, 1): 1})
    with pytest.raises(PreconditionError):
        schur_weyl_image(v, 2)


def test_json_format():
    assert weyl_gmodule_decomposition((2,), 2).to_json() == {"rank": 2, "multiplicities": {"(2)": 1, "(1,1)": 1}}


@pytest.mark.parametrize("lam,a,n", [((2, 1), (1, 1), 3), ((1, 1), (1,), 2), ((2, 2), (1, 2), 4)])
def test_dualweyl_examples(lam, a, n):
    rep = dualweyl_check(lam, a, n)
    assert rep["ok"] and rep["match"] and rep["kostka_identity"] and rep["dimension_ok"]


@settings(max_examples=40, deadline=None)
@given(partitions(5, min_size=1), st.randoms(use_true_random=False))
def test_column_order_is_irrelevant(lam, rnd):
    cols = list(lam.transpose())
    rnd.shuffle(cols)
    n = lam.size
    assert weyl_gmodule_decomposition(lam, n, cols) == weyl_gmodule_decomposition(lam, n)


@pytest.mark.parametrize("d", range(1, 6))
def test_dimension_and_cross_identity(d):
    for lam in partitions_of(d):
        for n in (d, d + 1):
            W = weyl_gmodule_decomposition(lam, n)
            expected = 1
            for h in lam.transpose():
                expected *= comb(n + 1, h)
            assert W.dimension() == expected
            assert kostka_cross_identity(lam, n, W)
            for mu in partitions_of(d):
                assert W[mu] == kostka_number(mu.transpose(), lam.transpose())


def test_cross_identity_detects_wrong_oracle():
    bad = GDecomposition(2, {(2,): 1})
    assert not kostka_cross_identity((2,), 2, bad)


def test_rank_violation_rejected():
    with pytest.raises(PreconditionError):
        GDecomposition(1, {(1, 1): 1})
