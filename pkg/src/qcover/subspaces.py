"""Canonical subspaces of F_q^n and Grassmannian enumeration.

A subspace is identified by its reduced row-echelon generator matrix, stored
as a tuple of coordinate tuples.  Two subspaces are equal as vector sets iff
their canonical matrices are identical, so hashing and set semantics come for
free.  Enumeration iterates pivot-column sets in lexicographic order, then
fills the free entries in odometer order; this yields RREF matrices directly
and the order is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Sequence, Tuple

from .fields import Field, get_gf, vec_add, vec_pack, vec_scale

MAX_SUBSPACE_ENUM = 10 ** 7
MAX_VECTOR_ENUM = 1 << 24


class BudgetError(RuntimeError):
    """Enumeration would exceed the hard subspace/vector budget."""


class AmbientMismatch(ValueError):
    """Operands live in different ambient spaces F_q^n."""


def rref(gf: Field, rows: Iterable[Sequence[int]], n: int):
    """Reduced row echelon form over GF(q); returns (rows, pivots)."""
    mat = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r >= len(mat):
            break
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        if mat[r][c] != 1:
            inv = gf.inv(mat[r][c])
            mat[r] = [gf.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                row_r = mat[r]
                mat[i] = [gf.sub(mat[i][j], gf.mul(f, row_r[j])) for j in range(n)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A k-dimensional subspace of F_q^n in canonical RREF form."""

    q: int
    n: int
    rows: Tuple[Tuple[int, ...], ...]
    pivots: Tuple[int, ...] = field(compare=False, default=())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def sort_key(self):
        return (self.pivots, self.rows)

    def __repr__(self):
        body = ",".join("".join(str(c) for c in row) for row in self.rows)
        return f"Subspace(q={self.q},n={self.n},[{body}])"


def span(q: int, n: int, vectors: Iterable[Sequence[int]]) -> Subspace:
    """Canonical subspace spanned by the given vectors."""
    gf = get_gf(q)
    vecs = [tuple(v) for v in vectors]
    for v in vecs:
        if len(v) != n:
            raise AmbientMismatch(f"vector of length {len(v)} in F_{q}^{n}")
    rows, pivots = rref(gf, vecs, n)
    return Subspace(q, n, rows, pivots)


def zero_subspace(q: int, n: int) -> Subspace:
    return Subspace(q, n, (), ())


def full_space(q: int, n: int) -> Subspace:
    rows = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    return Subspace(q, n, rows, tuple(range(n)))


def _check_ambient(a: Subspace, b: Subspace):
    if a.q != b.q or a.n != b.n:
        raise AmbientMismatch(f"({a.q},{a.n}) vs ({b.q},{b.n})")


def contains_vector(s: Subspace, v: Sequence[int]) -> bool:
    """Membership test by reduction against the RREF rows."""
    gf = get_gf(s.q)
    rem = list(v)
    if len(rem) != s.n:
        raise AmbientMismatch("vector length mismatch")
    for row, p in zip(s.rows, s.pivots):
        c = rem[p]
        if c:
            for j in range(p, s.n):
                rem[j] = gf.sub(rem[j], gf.mul(c, row[j]))
    return not any(rem)


def contains_subspace(a: Subspace, b: Subspace) -> bool:
    """True iff b is a subspace of a."""
    _check_ambient(a, b)
    return all(contains_vector(a, row) for row in b.rows)


def sum_subspaces(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return span(a.q, a.n, a.rows + b.rows)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block construction."""
    _check_ambient(a, b)
    gf = get_gf(a.q)
    n = a.n
    block = [list(row) + list(row) for row in a.rows]
    block += [list(row) + [0] * n for row in b.rows]
    rows, _ = rref(gf, block, 2 * n)
    inter = [row[n:] for row in rows if not any(row[:n])]
    return span(a.q, n, inter)


def orthogonal_complement(s: Subspace) -> Subspace:
    """Null space of the generator matrix under the standard dot product."""
    gf = get_gf(s.q)
    n = s.n
    pivset = set(s.pivots)
    free_cols = [c for c in range(n) if c not in pivset]
    basis = []
    for fc in free_cols:
        v = [0] * n
        v[fc] = 1
        for row, p in zip(s.rows, s.pivots):
            v[p] = gf.neg(row[fc])
        basis.append(v)
    return span(s.q, n, basis)


def grassmannian_pivot_freedom(n: int, pivots: Sequence[int]) -> List[Tuple[int, int]]:
    """Free entry positions (row, col) of the RREF template for a pivot set."""
    pivset = set(pivots)
    out = []
    for i, p in enumerate(pivots):
        for c in range(p + 1, n):
            if c not in pivset:
                out.append((i, c))
    return out


def enumerate_grassmannian(q: int, n: int, k: int,
                           pivot_sets: Iterable[Tuple[int, ...]] = None) -> Iterator[Subspace]:
    """All k-subspaces of F_q^n, each exactly once, in deterministic order.

    Restricting pivot_sets splits the enumeration into independent chunks.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    from .bounds import gaussian
    if pivot_sets is None and gaussian(n, k, q) > MAX_SUBSPACE_ENUM:
        raise BudgetError(f"G_{q}({n},{k}) exceeds {MAX_SUBSPACE_ENUM} subspaces")
    if pivot_sets is None:
        pivot_sets = itertools.combinations(range(n), k)
    for pivots in pivot_sets:
        freedom = grassmannian_pivot_freedom(n, pivots)
        template = [[0] * n for _ in range(k)]
        for i, p in enumerate(pivots):
            template[i][p] = 1
        if not freedom:
            yield Subspace(q, n, tuple(tuple(r) for r in template), tuple(pivots))
            continue
        for values in itertools.product(range(q), repeat=len(freedom)):
            for (i, c), v in zip(freedom, values):
                template[i][c] = v
            yield Subspace(q, n, tuple(tuple(r) for r in template), tuple(pivots))


def enumerate_vectors(s: Subspace) -> List[Tuple[int, ...]]:
    """All q^dim vectors of the subspace, zero first, odometer order."""
    gf = get_gf(s.q)
    if s.q ** s.dim > MAX_VECTOR_ENUM:
        raise BudgetError(f"{s.q}^{s.dim} vectors exceed the enumeration budget")
    out = []
    for coeffs in itertools.product(range(s.q), repeat=s.dim):
        v = tuple([0] * s.n)
        for c, row in zip(coeffs, s.rows):
            if c:
                v = vec_add(gf, v, vec_scale(gf, c, row))
        out.append(v)
    return out


def subspaces_of(s: Subspace, r: int) -> Iterator[Subspace]:
    """Every r-subspace of s, as a subspace of the ambient space."""
    if not 0 <= r <= s.dim:
        raise ValueError(f"need 0 <= r <= dim, got r={r}, dim={s.dim}")
    gf = get_gf(s.q)
    k, n = s.dim, s.n
    for local in enumerate_grassmannian(s.q, k, r):
        rows = []
        for lrow in local.rows:
            v = tuple([0] * n)
            for c, srow in zip(lrow, s.rows):
                if c:
                    v = vec_add(gf, v, vec_scale(gf, c, srow))
            rows.append(v)
        yield span(s.q, n, rows)


def complement_of(s: Subspace) -> Subspace:
    """A fixed direct complement: span of standard basis at non-pivot columns."""
    pivset = set(s.pivots)
    rows = []
    for c in range(s.n):
        if c not in pivset:
            rows.append(tuple(1 if j == c else 0 for j in range(s.n)))
    return Subspace(s.q, s.n, tuple(rows), tuple(c for c in range(s.n) if c not in pivset))


def superspaces_containing(s: Subspace, k: int) -> Iterator[Subspace]:
    """Every k-subspace of the ambient space that contains s.

    Superspaces correspond to (k - dim)-subspaces of the quotient, realized
    inside the fixed complement spanned by standard basis vectors at the
    non-pivot columns of s.
    """
    d = s.dim
    if not d <= k <= s.n:
        raise ValueError(f"need dim <= k <= n, got k={k}")
    gf = get_gf(s.q)
    comp_cols = [c for c in range(s.n) if c not in set(s.pivots)]
    for local in enumerate_grassmannian(s.q, s.n - d, k - d):
        rows = list(s.rows)
        for lrow in local.rows:
            v = [0] * s.n
            for c, col in zip(lrow, comp_cols):
                v[col] = c
            rows.append(tuple(v))
        yield span(s.q, s.n, rows)


def cosets(p: Subspace, w: Subspace) -> List[Tuple[int, ...]]:
    """Coset representatives of p inside w, first representative zero.

    Each representative is the minimal vector of its coset in the
    deterministic vector enumeration order of w.
    """
    _check_ambient(p, w)
    if not contains_subspace(w, p):
        raise ValueError("p is not a subspace of w")
    gf = get_gf(p.q)
    seen = set()
    reps = []
    p_vectors = enumerate_vectors(p)
    for v in enumerate_vectors(w):
        key = vec_pack(p.q, v)
        if key in seen:
            continue
        reps.append(v)
        for u in p_vectors:
            seen.add(vec_pack(p.q, vec_add(gf, v, u)))
    return reps
