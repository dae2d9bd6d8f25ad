"""Explicit constructions of covering, Turan and Steiner designs.

Every construction routes its output through the matching verifier before
returning; a verification failure raises ConstructionError rather than
returning an uncertified design.  Verification can be switched off for
parameter ranges where the census would exceed the budget; the structural
size identities are still asserted.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .bounds import gaussian
from .designs import (CoverageReport, SetSystem, SubspaceDesign,
                      verify_covering, verify_steiner, verify_steiner_system,
                      verify_turan, dualize)
from .fields import (Field, field_new, flatten_ext_vector, get_gf, is_prime,
                     vec_pack)
from .subspaces import (Subspace, contains_subspace, cosets,
                        enumerate_grassmannian, enumerate_vectors, full_space,
                        span, subspaces_of)


class ConstructionError(RuntimeError):
    """A construction failed its mandatory verification or self-check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def _require_prime(q: int, what: str):
    if not is_prime(q):
        raise ValueError(f"{what} uses a field tower over GF(q); "
                         f"composite q={q} is not supported")


# trivial structures ---------------------------------------------------------

def trivial_steiner(q: int, n: int, r: int, verify: bool = True) -> SubspaceDesign:
    """All r-subspaces of F_q^n: the trivial Steiner structure with blocks of dim r."""
    blocks = list(enumerate_grassmannian(q, n, r))
    design = SubspaceDesign.from_blocks(blocks, label=f"trivial[{r},{r},{n}]",
                                        q=q, n=n, k=r)
    if verify:
        report = verify_steiner(design, r)
        if not report.is_steiner:
            raise ConstructionError("trivial design failed Steiner check", report)
    return design


def full_space_steiner(q: int, n: int, verify: bool = True) -> SubspaceDesign:
    """The single full-space block; Steiner at every r."""
    design = SubspaceDesign.from_blocks([full_space(q, n)],
                                        label=f"trivial[1,{n},{n}]")
    if verify:
        report = verify_steiner(design, 1)
        if not report.is_steiner:
            raise ConstructionError("full-space design failed Steiner check", report)
    return design


# spreads and line coverings --------------------------------------------------

def spread(q: int, k: int, n: int, verify: bool = True) -> SubspaceDesign:
    """Partition of the nonzero vectors of F_q^n into k-subspaces (k | n).

    Realized through the field tower: blocks are the GF(q^k)-multiples of a
    transversal of the projective points of GF(q^k)^(n/k), flattened back to
    coordinate vectors over GF(q).
    """
    if n % k != 0:
        raise ValueError(f"k={k} does not divide n={n}")
    _require_prime(q, "spread")
    ext = field_new(q, k)
    s = n // k
    basis = [q ** j for j in range(k)]  # coefficient-vector basis 1, x, .., x^(k-1)
    blocks = []
    for lead in range(s):
        for tail in itertools.product(range(ext.q), repeat=s - 1 - lead):
            w = (0,) * lead + (1,) + tail
            rows = []
            for b in basis:
                rows.append(flatten_ext_vector(ext, [ext.mul(b, c) for c in w]))
            block = span(q, n, rows)
            if block.dim != k:
                raise ConstructionError("spread block has wrong dimension")
            blocks.append(block)
    design = SubspaceDesign.from_blocks(blocks, label=f"spread[{k},{n}]_{q}",
                                        q=q, n=n, k=k)
    expected = (q ** n - 1) // (q ** k - 1)
    if len(design) != expected:
        raise ConstructionError(f"spread size {len(design)} != {expected}")
    if verify:
        report = verify_steiner(design, 1)
        if not report.is_steiner:
            raise ConstructionError("spread failed Steiner verification", report)
    return design


def lift_covering(design: SubspaceDesign, delta: int,
                  verify: bool = True) -> SubspaceDesign:
    """Lift a line covering C_q[n,k,1] to C_q[n+d,k+d,1] with the same size.

    Each block P becomes P x F_q^d in the extended coordinates.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    report = verify_covering(design, 1)
    if not report.is_covering:
        raise ConstructionError("input is not a verified line covering", report)
    if delta == 0:
        return design
    q, n = design.q, design.n
    blocks = []
    for block in design.blocks:
        rows = [tuple(row) + (0,) * delta for row in block.rows]
        for i in range(delta):
            rows.append(tuple([0] * (n + i) + [1] + [0] * (delta - 1 - i)))
        blocks.append(span(q, n + delta, rows))
    lifted = SubspaceDesign.from_blocks(blocks, label=f"lift({design.label},{delta})",
                                        q=q, n=n + delta, k=design.k + delta)
    if len(lifted) != len(design):
        raise ConstructionError("lift changed the block count")
    if verify:
        rep = verify_covering(lifted, 1)
        if not rep.is_covering:
            raise ConstructionError("lifted design failed covering check", rep)
    return lifted


@dataclass(frozen=True)
class PartialSpreadResult:
    """Pairwise trivially-intersecting blocks plus one residual subspace.

    Together the blocks and the residual partition the 1-subspaces of F_q^n.
    """

    q: int
    n: int
    rho: int
    blocks: Tuple[Subspace, ...]
    residual: Subspace


def partial_spread(q: int, rho: int, n: int,
                   verify: bool = True) -> PartialSpreadResult:
    """Partial spread for n = s*rho + m with rho < m < 2*rho, s >= 1.

    Level t peels off a GF(q^rho) head: blocks are graphs x -> (x*z_1, ...,
    x*z_(s-t), phi(x)*w) over all scalar tuples z, with phi the padded
    embedding GF(q^rho) -> GF(q^m).  Distinct tuples give trivially
    intersecting blocks and every vector with nonzero head is covered once;
    the residual is the last-m-coordinates subspace.
    """
    if n % rho == 0 or n <= 2 * rho:
        raise ValueError(
            f"no decomposition n = s*rho + m with rho < m < 2*rho for "
            f"(rho={rho}, n={n})")
    _require_prime(q, "partial_spread")
    m = n % rho + rho
    s = (n - m) // rho
    ext_r = field_new(q, rho)
    ext_m = field_new(q, m)
    basis = [q ** j for j in range(rho)]

    def phi(x: int) -> int:
        return ext_m.from_vector(ext_r.to_vector(x) + (0,) * (m - rho))

    blocks: List[Subspace] = []
    for t in range(1, s + 1):
        prefix = (0,) * ((t - 1) * rho)
        for z in itertools.product(range(ext_r.q), repeat=s - t):
            for w in range(ext_m.q):
                rows = []
                for b in basis:
                    row = prefix + ext_r.to_vector(b)
                    for zi in z:
                        row += ext_r.to_vector(ext_r.mul(b, zi))
                    row += ext_m.to_vector(ext_m.mul(phi(b), w))
                    rows.append(row)
                block = span(q, n, rows)
                if block.dim != rho:
                    raise ConstructionError("partial spread block has wrong dim")
                blocks.append(block)
    expected = (q ** n - q ** m) // (q ** rho - 1)
    if len(set(blocks)) != expected:
        raise ConstructionError(
            f"partial spread size {len(set(blocks))} != {expected}")
    residual_rows = [tuple(1 if j == n - m + i else 0 for j in range(n))
                     for i in range(m)]
    residual = span(q, n, residual_rows)
    result = PartialSpreadResult(q, n, rho, tuple(blocks), residual)
    if verify:
        _check_partial_spread_partition(result)
    return result


def _check_partial_spread_partition(ps: PartialSpreadResult):
    """Exact partition check: nonzero vectors of all parts tile F_q^n - {0}."""
    seen = set()
    count = 0
    for part in list(ps.blocks) + [ps.residual]:
        for v in enumerate_vectors(part):
            key = vec_pack(ps.q, v)
            if key == 0:
                continue
            if key in seen:
                raise ConstructionError("partial spread parts overlap")
            seen.add(key)
            count += 1
    if count != ps.q ** ps.n - 1:
        raise ConstructionError("partial spread does not cover F_q^n")


def optimal_line_covering(q: int, n: int, k: int,
                          verify: bool = True) -> SubspaceDesign:
    """Line covering C_q[n,k,1] of the optimal size ceil((q^n-1)/(q^k-1)).

    Dispatch: spread when k | n; lifted spread when 2k >= n; otherwise a
    partial spread plus an optimal covering of the residual subspace.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({n},{k})")
    expected = math.ceil(Fraction(q ** n - 1, q ** k - 1))
    if n % k == 0:
        design = spread(q, k, n, verify=verify)
    elif 2 * k >= n:
        base = spread(q, n - k, 2 * (n - k), verify=verify)
        design = lift_covering(base, 2 * k - n, verify=verify)
    else:
        ps = partial_spread(q, k, n, verify=verify)
        m = ps.residual.dim
        inner = optimal_line_covering(q, m, k, verify=verify)
        embedded = []
        for block in inner.blocks:
            rows = [(0,) * (n - m) + tuple(row) for row in block.rows]
            embedded.append(span(q, n, rows))
        design = SubspaceDesign.from_blocks(
            list(ps.blocks) + embedded, label=f"line-covering[{n},{k}]_{q}",
            q=q, n=n, k=k)
        if verify:
            report = verify_covering(design, 1)
            if not report.is_covering:
                raise ConstructionError("line covering failed verification", report)
    if len(design) != expected:
        raise ConstructionError(
            f"line covering size {len(design)} != optimal {expected}")
    return design


# Turan designs ---------------------------------------------------------------

def turan_point_design(q: int, n: int, k: int,
                       verify: bool = True) -> SubspaceDesign:
    """All 1-subspaces of a fixed (n-k+1)-subspace: a Turan design T_q[n,k,1].

    The fixed subspace is the span of the first n-k+1 standard basis vectors.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({n},{k})")
    d = n - k + 1
    big = span(q, n, [tuple(1 if j == i else 0 for j in range(n))
                      for i in range(d)])
    blocks = list(subspaces_of(big, 1))
    design = SubspaceDesign.from_blocks(blocks, label=f"turan-points[{n},{k}]_{q}",
                                        q=q, n=n, k=1)
    expected = (q ** d - 1) // (q - 1)
    if len(design) != expected:
        raise ConstructionError(f"Turan design size {len(design)} != {expected}")
    if verify:
        report = verify_turan(design, k)
        if not report.is_covering:
            raise ConstructionError("Turan point design failed verification", report)
    return design


def turan_dual_covering(q: int, n: int, k: int,
                        verify: bool = True) -> SubspaceDesign:
    """Dual of the Turan point design: a covering C_q[n, n-1, n-k]."""
    design = dualize(turan_point_design(q, n, k, verify=verify))
    if verify and k < n:
        report = verify_covering(design, n - k)
        if not report.is_covering:
            raise ConstructionError("dual covering failed verification", report)
    return design


# covering recursion -----------------------------------------------------

def recursive_covering(s1: SubspaceDesign, s2: SubspaceDesign, r: int,
                       verify: bool = True) -> SubspaceDesign:
    """Combine C_q[n-1,k-1,r-1] and C_q[n-1,k,r] into a C_q[n,k,r].

    Type-1 blocks: for each block P of s1 and each coset representative b of
    P in F_q^(n-1), the span of P x {0} and (b, 1).  Type-2 blocks: the
    blocks of s2 embedded in the last-coordinate-zero hyperplane.  The output
    has exactly q^(n-k) |s1| + |s2| blocks.
    """
    q = s1.q
    if s2.q != q or s2.n != s1.n or s2.k != s1.k + 1:
        raise ConstructionError("mismatched input designs for the recursion")
    n = s1.n + 1
    k = s2.k
    if verify:
        rep1 = verify_covering(s1, r - 1)
        if not rep1.is_covering:
            raise ConstructionError("s1 is not a covering at r-1", rep1)
        rep2 = verify_covering(s2, r)
        if not rep2.is_covering:
            raise ConstructionError("s2 is not a covering at r", rep2)
    ambient = full_space(q, n - 1)
    blocks = []
    for p in s1.blocks:
        reps = cosets(p, ambient)
        if len(reps) != q ** (n - k):
            raise ConstructionError("unexpected coset count in recursion")
        base_rows = [tuple(row) + (0,) for row in p.rows]
        for beta in reps:
            blocks.append(span(q, n, base_rows + [tuple(beta) + (1,)]))
    for b in s2.blocks:
        blocks.append(span(q, n, [tuple(row) + (0,) for row in b.rows]))
    design = SubspaceDesign.from_blocks(
        blocks, label=f"recursive[{n},{k},{r}]_{q}", q=q, n=n, k=k)
    expected = q ** (n - k) * len(s1) + len(s2)
    if len(design) != expected:
        raise ConstructionError(
            f"recursion block count {len(design)} != {expected}")
    if verify:
        report = verify_covering(design, r)
        if not report.is_covering:
            raise ConstructionError("recursive covering failed verification",
                                    report)
    return design


# the 399-block C_2[7,3,2] ------------------------------------------------------

# Base-set exponents and shift ranges for the GF(64) construction; the five
# quadruples have pairwise difference sets tiling Z_63 minus {0, 21, 42} and
# zero element sums, both asserted before any block is emitted.
GF64_QUADS = ((0, 1, 4, 16), (0, 2, 8, 32), (0, 5, 27, 40),
                (0, 7, 44, 53), (0, 11, 29, 49))
GF64_LINE_EXPONENTS = (0, 1, 4, 6, 16, 24, 33)
GF64_MODULUS = (1, 1, 0, 0, 0, 0, 1)  # x^6 + x + 1


def _vectors_to_block(q: int, n: int, vectors: Sequence[Tuple[int, ...]],
                      dim: int) -> Subspace:
    """Span the vectors and insist they form exactly a dim-dimensional subspace."""
    nonzero = [v for v in vectors if any(v)]
    block = span(q, n, nonzero)
    if block.dim != dim:
        raise ConstructionError(f"emitted set spans dim {block.dim}, not {dim}")
    if set(enumerate_vectors(block)) != set(tuple(v) for v in vectors) | {(0,) * n}:
        raise ConstructionError("emitted set is not closed under addition")
    return block


def gf64_covering_design(verify: bool = True) -> SubspaceDesign:
    """The 399-block covering design C_2[7,3,2] over GF(64) x GF(2).

    315 blocks from 63 cyclic shifts of five quadruples, 21 diagonal blocks,
    and 63 blocks from shifts of a fixed 7-element multiplicative pattern.
    """
    gf64 = field_new(2, 6, GF64_MODULUS)

    def vec(beta: int, bit: int) -> Tuple[int, ...]:
        return gf64.to_vector(beta) + (bit,)

    # self-checks on the quadruples
    union = set()
    for quad in GF64_QUADS:
        diffs = {(a - b) % 63 for a in quad for b in quad if a != b}
        if len(diffs) != 12:
            raise ConstructionError(f"difference set of {quad} has size {len(diffs)}")
        union |= diffs
        acc = 0
        for j in quad:
            acc = gf64.add(acc, gf64.alpha_pow(j))
        if acc != 0:
            raise ConstructionError(f"quadruple {quad} does not sum to zero")
    if union != set(range(63)) - {0, 21, 42}:
        raise ConstructionError("difference sets do not tile Z_63 - {0,21,42}")

    blocks: List[Subspace] = []
    for quad in GF64_QUADS:
        j1, j2, j3, j4 = quad
        for shift in range(63):
            a = [gf64.alpha_pow(j + shift) for j in (j1, j2, j3, j4)]
            vectors = [vec(0, 0),
                       vec(gf64.add(a[0], a[1]), 0),
                       vec(gf64.add(a[0], a[2]), 0),
                       vec(gf64.add(a[0], a[3]), 0),
                       vec(a[0], 1), vec(a[1], 1), vec(a[2], 1), vec(a[3], 1)]
            blocks.append(_vectors_to_block(2, 7, vectors, 3))
    for shift in range(21):
        a = [gf64.alpha_pow(shift), gf64.alpha_pow(21 + shift),
             gf64.alpha_pow(42 + shift)]
        vectors = [vec(0, 0), vec(a[0], 0), vec(a[1], 0), vec(a[2], 0),
                   vec(0, 1), vec(a[0], 1), vec(a[1], 1), vec(a[2], 1)]
        blocks.append(_vectors_to_block(2, 7, vectors, 3))
    for shift in range(63):
        vectors = [vec(0, 0)] + [vec(gf64.alpha_pow(e + shift), 0)
                                 for e in GF64_LINE_EXPONENTS]
        blocks.append(_vectors_to_block(2, 7, vectors, 3))

    design = SubspaceDesign.from_blocks(blocks, label="gf64-C2[7,3,2]",
                                        q=2, n=7, k=3)
    if len(design) != 399:
        raise ConstructionError(f"gf64 block count {len(design)} != 399")
    if verify:
        report = verify_covering(design, 2)
        if not report.is_covering:
            raise ConstructionError("gf64 design is not a covering", report)
    return design


# Steiner structure conversions --------------------------------------------------

def expand_to_steiner_system(design: SubspaceDesign,
                             verify: bool = True) -> SetSystem:
    """Expand a Steiner structure S_2[2,k,n] into a Steiner system S(3,2^k,2^n).

    Points are the vectors of F_2^n indexed by their packed integer value
    (coordinate 0 least significant); blocks are all cosets of all design
    blocks, deduplicated.
    """
    if design.q != 2:
        raise ConstructionError("expansion is defined over GF(2) only")
    if design.n > 16:
        raise ConstructionError("ambient dimension too large to expand")
    report = verify_steiner(design, 2)
    if not report.is_steiner:
        raise ConstructionError("input is not a Steiner structure S_2[2,k,n]",
                                report)
    n, k = design.n, design.k
    coset_blocks = set()
    for block in design.blocks:
        packed = [vec_pack(2, v) for v in enumerate_vectors(block)]
        for beta in range(1 << n):
            coset_blocks.add(frozenset(beta ^ x for x in packed))
    system = SetSystem.from_blocks(1 << n, [sorted(b) for b in coset_blocks])
    expected = (2 ** (n - k) * (2 ** n - 1) * (2 ** (n - 1) - 1)
                // ((2 ** k - 1) * (2 ** (k - 1) - 1)))
    if len(system.blocks) != expected:
        raise ConstructionError(
            f"expansion produced {len(system.blocks)} blocks, expected {expected}")
    if verify:
        rep = verify_steiner_system(system, 3)
        if not rep.is_steiner:
            raise ConstructionError("expanded system failed the t=3 check", rep)
    return system


def derive_steiner(design: SubspaceDesign, t: int, point: Subspace,
                   verify: bool = True) -> Tuple[SubspaceDesign, Optional[CoverageReport]]:
    """Derived structure: blocks through a point, mapped to the quotient.

    Takes a Steiner structure S_q[t,k,n] and a 1-dimensional subspace; the
    blocks containing it are projected onto a fixed complement of the point
    and re-coordinatized to F_q^(n-1).  The method reconstructs an unstated
    derivation, so the output is re-verified and the report is returned with
    the design; callers must check report.is_steiner.
    """
    if t < 2:
        raise ValueError("derivation needs t >= 2")
    if point.dim != 1 or (point.q, point.n) != (design.q, design.n):
        raise ValueError("point must be a 1-subspace of the ambient space")
    if verify:
        rep_in = verify_steiner(design, t)
        if not rep_in.is_steiner:
            raise ConstructionError("input is not a Steiner structure", rep_in)
    q, n = design.q, design.n
    gf = get_gf(q)
    p_row = point.rows[0]
    j0 = point.pivots[0]
    derived = []
    for block in design.blocks:
        if not contains_subspace(block, point):
            continue
        rows = []
        for v in block.rows:
            c = v[j0]
            w = tuple(gf.sub(v[j], gf.mul(c, p_row[j])) for j in range(n))
            rows.append(w[:j0] + w[j0 + 1:])
        image = span(q, n - 1, rows)
        if image.dim != design.k - 1:
            raise ConstructionError("projected block has wrong dimension")
        derived.append(image)
    out = SubspaceDesign.from_blocks(derived, label=f"derived({design.label})",
                                     q=q, n=n - 1, k=design.k - 1)
    report = verify_steiner(out, t - 1) if verify else None
    return out, report


# greedy baseline -----------------------------------------------------------------

def greedy_covering(q: int, n: int, k: int, r: int,
                    verify: bool = True) -> SubspaceDesign:
    """Greedy covering baseline: repeatedly add the block covering the most
    currently-uncovered r-subspaces, ties broken by enumeration order.
    """
    candidates_n = gaussian(n, k, q)
    if candidates_n * gaussian(k, r, q) > 10 ** 7:
        raise ConstructionError("greedy incidence budget exceeded")
    target_index = {t: i for i, t in enumerate(enumerate_grassmannian(q, n, r))}
    candidates = []
    for block in enumerate_grassmannian(q, n, k):
        cover = frozenset(target_index[t] for t in subspaces_of(block, r))
        candidates.append((block, cover))
    uncovered = set(range(len(target_index)))
    chosen = []
    while uncovered:
        best = None
        best_gain = -1
        for block, cover in candidates:
            gain = len(cover & uncovered)
            if gain > best_gain:
                best, best_gain = (block, cover), gain
        if best_gain == 0:
            raise ConstructionError("greedy cannot make progress")
        chosen.append(best[0])
        uncovered -= best[1]
    design = SubspaceDesign.from_blocks(chosen, label=f"greedy[{n},{k},{r}]_{q}",
                                        q=q, n=n, k=k)
    if verify:
        report = verify_covering(design, r)
        if not report.is_covering:
            raise ConstructionError("greedy output failed verification", report)
    return design
