import itertools
import random

import pytest

from qcover.bounds import gaussian
from qcover.fields import get_gf, vec_add, vec_pack
from qcover.subspaces import (AmbientMismatch, BudgetError, Subspace,
                              contains_subspace, contains_vector, cosets,
                              enumerate_grassmannian, enumerate_vectors,
                              full_space, intersect, orthogonal_complement,
                              span, subspaces_of, sum_subspaces,
                              superspaces_containing, zero_subspace)


def random_subspace(rng, q, n, k):
    gf = get_gf(q)
    while True:
        vecs = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(k)]
        s = span(q, n, vecs)
        if s.dim == k:
            return s


def test_span_examples():
    assert span(2, 4, []).dim == 0
    s = span(2, 4, [(1, 0, 1, 0), (0, 1, 0, 1), (1, 1, 1, 1)])
    assert s.rows == ((1, 0, 1, 0), (0, 1, 0, 1))
    all_nonzero = [tuple(int(b) for b in f"{v:03b}")[::-1] for v in range(1, 8)]
    assert span(2, 3, all_nonzero).dim == 3


def test_span_idempotent_canonical():
    for s in enumerate_grassmannian(2, 4, 2):
        assert span(2, 4, s.rows).rows == s.rows
    for s in enumerate_grassmannian(3, 3, 2):
        assert span(3, 3, s.rows).rows == s.rows


def test_span_mixed_ambient_rejected():
    with pytest.raises(AmbientMismatch):
        span(2, 4, [(1, 0, 1), (1, 0, 0, 1)])


def test_containment():
    a = span(2, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert contains_subspace(a, a)
    assert contains_subspace(a, zero_subspace(2, 4))
    assert contains_subspace(a, span(2, 4, [(1, 1, 0, 0)]))
    assert not contains_subspace(a, span(2, 4, [(0, 0, 1, 0)]))


def test_containment_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        contains_subspace(span(2, 4, [(1, 0, 0, 0)]), span(2, 3, [(1, 0, 0)]))


def test_intersect_basics():
    a = span(2, 3, [(1, 0, 0), (0, 1, 0)])
    assert intersect(a, a) == a
    b = span(2, 3, [(0, 1, 0), (0, 0, 1)])
    assert intersect(a, b).dim == 1


def test_intersection_against_vector_set_oracle():
    rng = random.Random(17)
    for _ in range(60):
        k1, k2 = rng.randint(1, 3), rng.randint(1, 3)
        a = random_subspace(rng, 2, 5, k1)
        b = random_subspace(rng, 2, 5, k2)
        inter = intersect(a, b)
        oracle = set(enumerate_vectors(a)) & set(enumerate_vectors(b))
        assert set(enumerate_vectors(inter)) == oracle
        # modular law of dimensions
        assert a.dim + b.dim == sum_subspaces(a, b).dim + inter.dim


def test_orthogonal_complement_examples():
    assert orthogonal_complement(full_space(2, 4)) == zero_subspace(2, 4)
    c = orthogonal_complement(span(2, 4, [(1, 0, 0, 0)]))
    assert c == span(2, 4, [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])


def test_orthogonal_complement_involution_and_duality():
    gf = get_gf(2)
    for k in range(5):
        seen = set()
        for s in enumerate_grassmannian(2, 4, k):
            c = orthogonal_complement(s)
            assert c.dim == 4 - k
            assert orthogonal_complement(c) == s
            seen.add(c)
            for u in s.rows:
                for v in c.rows:
                    dot = 0
                    for x, y in zip(u, v):
                        dot = gf.add(dot, gf.mul(x, y))
                    assert dot == 0
        assert len(seen) == gaussian(4, k, 2)


def test_containment_reversal_under_duality():
    subs = [s for k in range(5) for s in enumerate_grassmannian(2, 4, k)]
    rng = random.Random(3)
    for a, b in [(rng.choice(subs), rng.choice(subs)) for _ in range(200)]:
        assert contains_subspace(b, a) == contains_subspace(
            orthogonal_complement(a), orthogonal_complement(b))


@pytest.mark.parametrize("q,n,k,count", [
    (2, 4, 2, 35),
    (2, 7, 2, 2667),
    (3, 4, 0, 1),
    (3, 4, 2, 130),
])
def test_grassmannian_counts(q, n, k, count):
    assert gaussian(n, k, q) == count
    assert sum(1 for _ in enumerate_grassmannian(q, n, k)) == count


def test_grassmannian_unique_and_canonical():
    seen = set()
    for s in enumerate_grassmannian(3, 4, 2):
        assert s not in seen
        seen.add(s)
        assert span(3, 4, s.rows) == s


def test_grassmannian_brute_force_cross_check():
    # span of every pair of vectors in F_2^4, deduplicated
    vectors = list(itertools.product(range(2), repeat=4))
    planes = {span(2, 4, [u, v]) for u in vectors for v in vectors}
    planes = {s for s in planes if s.dim == 2}
    assert planes == set(enumerate_grassmannian(2, 4, 2))


def test_subspaces_of():
    s = random_subspace(random.Random(5), 2, 7, 3)
    subs = list(subspaces_of(s, 2))
    assert len(subs) == 7
    assert len(set(subs)) == 7
    assert all(contains_subspace(s, t) for t in subs)
    assert list(subspaces_of(s, 3)) == [s]
    assert list(subspaces_of(s, 0)) == [zero_subspace(2, 7)]
    with pytest.raises(ValueError):
        list(subspaces_of(s, 4))


def test_superspaces_containing():
    s = span(2, 4, [(1, 1, 0, 0)])
    sups = list(superspaces_containing(s, 2))
    assert len(sups) == gaussian(3, 1, 2)
    assert len(set(sups)) == len(sups)
    assert all(contains_subspace(t, s) for t in sups)
    # cross-check against a scan of the whole Grassmannian
    scan = [t for t in enumerate_grassmannian(2, 4, 2) if contains_subspace(t, s)]
    assert set(sups) == set(scan)


def test_cosets():
    w = full_space(2, 2)
    assert cosets(w, w) == [(0, 0)]
    reps = cosets(zero_subspace(2, 2), w)
    assert len(reps) == 4 and reps[0] == (0, 0)
    p = span(2, 3, [(1, 0, 1)])
    reps = cosets(p, full_space(2, 3))
    assert len(reps) == 4
    gf = get_gf(2)
    covered = set()
    for r in reps:
        for v in enumerate_vectors(p):
            key = vec_pack(2, vec_add(gf, r, v))
            assert key not in covered
            covered.add(key)
    assert len(covered) == 8


def test_cosets_requires_containment():
    with pytest.raises(ValueError):
        cosets(span(2, 3, [(1, 0, 0)]), span(2, 3, [(0, 1, 0)]))


def test_enumerate_vectors():
    assert enumerate_vectors(zero_subspace(2, 3)) == [(0, 0, 0)]
    s = span(2, 4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    vs = enumerate_vectors(s)
    assert len(vs) == 4 and vs[0] == (0, 0, 0, 0)
    gf = get_gf(2)
    vset = set(vs)
    for u in vs:
        for v in vs:
            assert vec_add(gf, u, v) in vset


def test_contains_vector():
    s = span(3, 3, [(1, 0, 2), (0, 1, 1)])
    for v in enumerate_vectors(s):
        assert contains_vector(s, v)
    assert not contains_vector(s, (0, 0, 1))


def test_budget_guard():
    with pytest.raises(BudgetError):
        list(enumerate_grassmannian(2, 30, 15))
