import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import SEED_LAWS, graded_maps, random_map, seed_law
from leibsuper.algebra import (
    GradedSubspace,
    GradedVector,
    ScalingFamily,
    SuperAlgebra,
    apply_basis_change,
    bracket,
    degeneration_limit,
    member,
)
from leibsuper.catalog import registry
from leibsuper.catalog.registry import DEGENERATIONS
from leibsuper.errors import AlgebraError, NotNilpotentError
from leibsuper.invariants import (
    AnnihilatorKind,
    CharSequence,
    Shape,
    annihilator,
    central_series,
    char_sequence,
    classify_shape,
    closure_obstruction,
    distinguish,
    engel_flag,
    graded_central_series,
    invariant_profile,
    nilindex,
    s_nilindex,
)

seed_index = st.integers(0, len(SEED_LAWS) - 1)


def oracle_annihilator_dim(A, kind):
    rows = []
    N = A.dim
    for e in range(N):
        for k in range(N):
            if kind in ("right", "center"):
                rows.append([A.product(e, j).get(k, 0) for j in range(N)])
            if kind in ("left", "center"):
                rows.append([A.product(j, e).get(k, 0) for j in range(N)])
    return N - sympy.Matrix(rows).rank() if rows else N


def test_r32_series_by_hand():
    A = registry.build("R32", 3, 2)
    series, nil = central_series(A)
    # C^1 = <X0, X2, Y2>, C^2 = <X2, Y2>, C^3 = <X2>
    assert [S.dim for S in series] == [5, 3, 2, 1, 0]
    assert nil == 4
    assert s_nilindex(A) == (2, 2)
    assert classify_shape(A) is Shape.FILIFORM


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 2), (2, 5), (4, 4)])
def test_zero_filiform_model(n, m):
    A = registry.build("zf_model", n, m)
    assert s_nilindex(A) == (n, m)
    assert classify_shape(A) is Shape.ZERO_FILIFORM
    assert char_sequence(A) == CharSequence((n,), (m,))


def test_abelian_invariants():
    A = SuperAlgebra.abelian(2, 1)
    assert nilindex(A) == 1
    assert annihilator(A, "center").dim == 3
    assert char_sequence(A) == CharSequence((1, 1), (1,))


def test_non_nilpotent():
    A = SuperAlgebra(1, 1, {(0, 0): {0: 1}, (1, 0): {1: 1}})
    assert nilindex(A) is None
    with pytest.raises(NotNilpotentError):
        engel_flag(A)
    assert invariant_profile(A).shape is None
    with pytest.raises(AlgebraError):
        char_sequence(SuperAlgebra.abelian(0, 2))


@pytest.mark.parametrize("i", range(len(SEED_LAWS)), ids=[s[0] for s in SEED_LAWS])
@pytest.mark.parametrize("kind", ["right", "left", "center"])
def test_annihilator_dims_match_oracle(i, kind):
    A0 = seed_law(i)
    A = apply_basis_change(A0, random_map(A0.n, A0.m, random.Random(i)))
    assert annihilator(A, kind).dim == oracle_annihilator_dim(A, kind)


@given(seed_index, st.data())
def test_annihilators_really_annihilate(i, data):
    A = seed_law(i)
    Z = annihilator(A, AnnihilatorKind.RIGHT)
    L = annihilator(A, AnnihilatorKind.LEFT)
    for z in Z.basis():
        for e in range(A.dim):
            assert bracket(A, A.basis_vector(e), z).is_zero()
    for v in L.basis():
        for e in range(A.dim):
            assert bracket(A, v, A.basis_vector(e)).is_zero()
    assert annihilator(A, AnnihilatorKind.CENTER) == Z.intersection(L)


@given(seed_index, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_even_squares_lie_in_right_annihilator(i, coeffs):
    A = seed_law(i)
    x = GradedVector(tuple(Fraction(c) for c in (coeffs * 2)[: A.n]), (Fraction(0),) * A.m)
    assert member(annihilator(A, "right"), bracket(A, x, x))


@given(seed_index, st.data())
def test_profile_is_isomorphism_invariant(i, data):
    A = seed_law(i)
    B = apply_basis_change(A, data.draw(graded_maps(A.n, A.m)))
    pa, pb = invariant_profile(A), invariant_profile(B)
    assert pa == pb
    assert distinguish(A, B) is None


@given(seed_index)
def test_series_are_nested(i):
    A = seed_law(i)
    series, _ = central_series(A)
    for a, b in zip(series, series[1:]):
        assert a.contains(b)
    s0, s1, _ = graded_central_series(A)
    for chain in (s0, s1):
        for a, b in zip(chain, chain[1:]):
            assert a.contains(b)


@pytest.mark.parametrize("i", range(len(SEED_LAWS)), ids=[s[0] for s in SEED_LAWS])
def test_engel_flag(i):
    A = seed_law(i)
    flag = engel_flag(A)
    assert flag[-1] == GradedSubspace.odd_part(A.n, A.m)
    prev = GradedSubspace.zero(A.n, A.m)
    for V in flag:
        assert V.contains(prev) and V != prev
        for v in V.basis():
            for e in range(A.n):
                assert member(prev, bracket(A, v, A.basis_vector(e)))
        prev = V


@given(seed_index, st.lists(st.integers(0, 3), min_size=6, max_size=6))
def test_closure_obstruction_is_sound(i, exps):
    # a scaling limit lies in the orbit closure, so no dimension condition may fire
    A = seed_law(i)
    lim = degeneration_limit(A, ScalingFamily(tuple(exps[: A.n]), tuple(exps[A.n: A.n + A.m])))
    assume(isinstance(lim, SuperAlgebra))
    assert closure_obstruction(A, lim) == []


def test_closure_obstruction_fires():
    A = registry.build("zf_2_3.mu6", 2, 3)
    mu5 = registry.build("zf_2_3.mu5", 2, 3)
    obs = closure_obstruction(A, mu5)
    assert any(o.condition == "Z" for o in obs)
    # the abelian law is in every closure
    assert closure_obstruction(A, SuperAlgebra.abelian(2, 3)) == []


def test_registered_degenerations_obey_closed_set_inequalities():
    checked = 0
    for d in DEGENERATIONS:
        A = registry.build(d.source, *d.dims, d.source_params)
        B = degeneration_limit(A, ScalingFamily(d.even_exponents, d.odd_exponents))
        if not isinstance(B, SuperAlgebra):
            continue
        pa, pb = invariant_profile(A), invariant_profile(B)
        for s in range(max(len(pa.series_dims), len(pb.series_dims))):
            assert pb.series_dim(s) <= pa.series_dim(s)
        assert pb.dim_right_ann >= pa.dim_right_ann
        assert pb.dim_left_ann >= pa.dim_left_ann
        assert pb.dim_center >= pa.dim_center
        checked += 1
    assert checked == len(DEGENERATIONS)
