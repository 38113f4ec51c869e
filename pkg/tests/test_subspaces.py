import itertools

import pytest
from hypothesis import given, settings, strategies as st

from subspace_aut.errors import DomainError
from subspace_aut.graph import gaussian_binomial
from subspace_aut.subspaces import (
    Subspace,
    canonicalize,
    contains_vector,
    enumerate_subspaces,
    is_proper_subset,
    is_subspace,
    perp,
    span_join,
    standard_rep,
)

from conftest import field
from test_linalg import row_space


def e(n, *idx):
    return tuple(1 if i in idx else 0 for i in range(n))


def brute_subspaces(F, n):
    """Every subspace of F_q^n as a frozenset of vectors, grown one vector at a time."""
    vectors = list(itertools.product(range(F.q), repeat=n))
    layers = [{frozenset([(0,) * n]): ()}]
    for _ in range(n):
        nxt = {}
        for W, basis in layers[-1].items():
            for v in vectors:
                if v not in W:
                    grown = basis + (v,)
                    nxt.setdefault(frozenset(row_space(F, grown)), grown)
        layers.append(nxt)
    return [set(layer) for layer in layers]


def test_canonicalize_examples(F2, F3):
    W = canonicalize(F2, [e(3, 0)])
    assert W.basis == ((1, 0, 0),) and W.k == 1
    assert canonicalize(F2, [e(3, 0, 1), e(3, 1)]) == canonicalize(F2, [e(3, 0), e(3, 1)])
    vecs = [(1, 2, 0), (2, 1, 0)]
    W = canonicalize(F3, vecs)
    assert 3 ** W.k == len(row_space(F3, tuple(vecs)))
    with pytest.raises(DomainError):
        canonicalize(F3, [(0, 0, 0)])


def test_proper_subset_examples(F2):
    assert is_proper_subset(F2, canonicalize(F2, [e(3, 0)]), canonicalize(F2, [e(3, 0), e(3, 1)]))
    W = canonicalize(F2, [e(3, 0)])
    assert not is_proper_subset(F2, W, W) and is_subspace(F2, W, W)
    assert is_proper_subset(F2, canonicalize(F2, [(1, 1, 0)]), canonicalize(F2, [(1, 0, 1), (0, 1, 1)]))


def test_perp_examples(F2):
    assert perp(F2, canonicalize(F2, [e(3, 0)])) == canonicalize(F2, [e(3, 1), e(3, 2)])
    W = canonicalize(F2, [(1, 1, 0)])
    assert contains_vector(F2, perp(F2, W), (1, 1, 0))


def test_join_examples(F2):
    W = canonicalize(F2, [(1, 1, 0)])
    assert span_join(F2, W, W) == W
    assert span_join(F2, canonicalize(F2, [e(3, 0)]), canonicalize(F2, [e(3, 1)])) == \
        canonicalize(F2, [e(3, 0), e(3, 1)])
    assert span_join(F2, W, canonicalize(F2, [(0, 1, 1)])).k == 2


def test_standard_rep_examples(F3):
    assert standard_rep(F3, (0, 2, 1)) == (0, 1, 2)
    assert standard_rep(field(5), (3, 0, 1)) == (1, 0, 2)
    assert standard_rep(F3, (0, 1, 1)) == (0, 1, 1)
    with pytest.raises(DomainError):
        standard_rep(F3, (0, 0, 0))


def test_enumeration_examples(F2):
    assert len(list(enumerate_subspaces(F2, 3, 1))) == 7
    assert len(list(enumerate_subspaces(F2, 4, 2))) == 35
    assert list(enumerate_subspaces(F2, 3, 0)) == [Subspace(3, ())]
    assert len(list(enumerate_subspaces(F2, 3, 3))) == 1


@pytest.mark.parametrize("p,m,n", [(2, 1, 3), (3, 1, 3), (2, 1, 4), (2, 2, 3)])
def test_enumeration_matches_brute_force(p, m, n):
    F = field(p, m)
    layers = brute_subspaces(F, n)
    for k in range(n + 1):
        enumerated = {frozenset(row_space(F, W.basis) if k else [(0,) * n])
                      for W in enumerate_subspaces(F, n, k)}
        assert enumerated == layers[k]


@pytest.mark.parametrize("q", [(2, 1), (3, 1), (2, 2), (5, 1)])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_count_is_gaussian_binomial(q, n):
    F = field(*q)
    for k in range(n + 1):
        subs = list(enumerate_subspaces(F, n, k))
        assert len(subs) == gaussian_binomial(n, k, F.q)
        assert len(set(subs)) == len(subs)
        for W in subs:
            assert canonicalize(F, W.basis, n) == W if k else W.k == 0


def test_enumeration_order_is_deterministic(F3):
    a = [W.basis for W in enumerate_subspaces(F3, 4, 2)]
    b = [W.basis for W in enumerate_subspaces(F3, 4, 2)]
    assert a == b
    keys = [(W.pivots, W.basis) for W in enumerate_subspaces(F3, 4, 2)]
    assert [k[0] for k in keys] == sorted(k[0] for k in keys)


@pytest.mark.parametrize("p,m,n", [(2, 1, 4), (3, 1, 3), (2, 2, 3)])
def test_perp_algebra_exhaustive(p, m, n):
    F = field(p, m)
    subs = [W for k in range(1, n) for W in enumerate_subspaces(F, n, k)]
    P = {W: perp(F, W) for W in subs}
    for W in subs:
        assert W.k + P[W].k == n
        assert perp(F, P[W]) == W
        for w in W.basis:
            for u in P[W].basis:
                assert _dot(F, w, u) == 0
    for W1 in subs:
        for W2 in subs:
            assert is_proper_subset(F, W1, W2) == is_proper_subset(F, P[W2], P[W1])


def _dot(F, u, v):
    s = 0
    for a, b in zip(u, v):
        s = F.add(s, F.mul(a, b))
    return s


def _vectors(F, n):
    return st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n).map(tuple)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]), st.data())
def test_standard_rep_is_projective_invariant(pm, data):
    F = field(*pm)
    v = data.draw(_vectors(F, 4).filter(any))
    c = data.draw(st.integers(1, F.q - 1))
    cv = tuple(F.mul(c, x) for x in v)
    s = standard_rep(F, v)
    assert s == standard_rep(F, cv)
    assert next(x for x in s if x) == 1
    assert canonicalize(F, [v]) == canonicalize(F, [s])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2)]), st.data())
def test_canonicalize_ignores_order_and_scaling(pm, data):
    F = field(*pm)
    vecs = data.draw(st.lists(_vectors(F, 4), min_size=1, max_size=4).filter(lambda vs: any(map(any, vs))))
    scales = data.draw(st.lists(st.integers(1, F.q - 1), min_size=len(vecs), max_size=len(vecs)))
    perm = data.draw(st.permutations(range(len(vecs))))
    other = [tuple(F.mul(scales[i], x) for x in vecs[i]) for i in perm]
    W = canonicalize(F, vecs)
    assert W == canonicalize(F, other)
    assert F.q ** W.k == len(row_space(F, tuple(vecs)))
