import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graded_maps, random_map
from leibsuper.adapted import adapted_basis_zf, to_adapted, zf_relation_defects
from leibsuper.algebra import apply_basis_change, is_leibniz
from leibsuper.catalog import registry
from leibsuper.errors import NotZeroFiliformError
from leibsuper.invariants import invariant_profile

ZF = [("zf_model", 3, 2, {}), ("zf_2_2.mu1", 2, 2, {"alpha": 2}), ("zf_2_3.mu6", 2, 3, {}),
      ("zf_n1_2.mu2", 4, 2, {}), ("zf_3_3.mu10", 3, 3, {}), ("zf_2_m.muK", 2, 5, {"k": 2})]


@pytest.mark.parametrize("name,n,m,p", ZF, ids=[z[0] for z in ZF])
def test_catalog_laws_are_already_adapted(name, n, m, p):
    A = registry.build(name, n, m, p)
    assert zf_relation_defects(A) == []


@pytest.mark.parametrize("name,n,m,p", ZF, ids=[z[0] for z in ZF])
def test_recovery_after_scrambling(name, n, m, p):
    A = registry.build(name, n, m, p)
    for seed in range(3):
        S = apply_basis_change(A, random_map(n, m, random.Random(seed)))
        B, g = to_adapted(S)
        assert zf_relation_defects(B) == []
        assert B == apply_basis_change(S, g)
        assert is_leibniz(B)
        assert invariant_profile(B) == invariant_profile(A)


@given(st.data())
def test_recovery_property(data):
    A = registry.build("zf_model", 4, 3)
    S = apply_basis_change(A, data.draw(graded_maps(4, 3)))
    assert zf_relation_defects(apply_basis_change(S, adapted_basis_zf(S))) == []


def test_defects_are_named():
    A = registry.build("R32", 3, 2)
    bad = zf_relation_defects(A)
    assert "[X0,X0]" in bad


def test_rejects_other_shapes():
    with pytest.raises(NotZeroFiliformError):
        adapted_basis_zf(registry.build("R32", 3, 2))
