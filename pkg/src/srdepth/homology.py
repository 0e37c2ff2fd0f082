"""Reduced simplicial homology over Q or F_p, exactly.

Ranks of boundary matrices are computed with fraction-free (Bareiss-style)
integer elimination over the rationals and plain Gaussian elimination over
prime fields; no floating point anywhere.  On top of the homology kernel sit
Reisner's Cohen-Macaulay criterion and the skeleton formula for the depth of
a Stanley-Reisner ring.

Conventions for degenerate complexes (needed by the local-cohomology code):
the irrelevant complex {0} has H~_{-1} = K and nothing else; the void complex
has no homology at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .simplicial import Complex, Face, IRRELEVANT, ORDINARY, VOID, mask_vertices


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (p=None) or a prime field F_p."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"


RATIONALS = FieldSpec()


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(int(p))


# -- exact rank kernels ------------------------------------------------------

def rank_fraction_free(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Bareiss' two-step determinant update keeps every intermediate entry an
    integer (the division is exact), so the result is exact for arbitrary
    integer input.
    """
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    a = [list(r) for r in rows]
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, m):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
        pivot = a[rank][col]
        for r in range(rank + 1, m):
            factor = a[r][col]
            row = a[r]
            prow = a[rank]
            for c in range(col, ncols):
                row[c] = (row[c] * pivot - factor * prow[c]) // prev
        prev = pivot
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    a = [[x % p for x in r] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, m):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        prow = a[rank]
        if inv != 1:
            a[rank] = prow = [(x * inv) % p for x in prow]
        for r in range(rank + 1, m):
            factor = a[r][col]
            if factor:
                row = a[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - factor * prow[c]) % p
        rank += 1
        if rank == m:
            break
    return rank


def matrix_rank(rows: list[list[int]], field: FieldSpec) -> int:
    if field.is_rationals:
        return rank_fraction_free(rows)
    return rank_mod_p(rows, field.p)


# -- boundary matrices -------------------------------------------------------

def boundary_matrix(cx: Complex, i: int) -> list[list[int]]:
    """Matrix of the boundary map C_i -> C_{i-1} in the augmented chain complex.

    Rows are the (i-1)-faces and columns the i-faces, both in colex order;
    the entry for removing the vertex at position k of a sorted i-face is
    (-1)^k.  For i = 0 the target is the span of the empty face, so the
    matrix is the all-ones augmentation row.
    """
    if cx.kind == VOID:
        raise ValueError("void complex has no boundary matrices")
    if i < 0:
        raise ValueError("boundary index must be >= 0")
    cols = cx.face_masks_of_dim(i) if i <= cx.dim else []
    rows = cx.face_masks_of_dim(i - 1) if i - 1 <= cx.dim else []
    row_index = {m: r for r, m in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for c, fm in enumerate(cols):
        verts = mask_vertices(fm)
        for k, v in enumerate(verts):
            sub = fm & ~(1 << (v - 1))
            mat[row_index[sub]][c] = -1 if k % 2 else 1
    return mat


@lru_cache(maxsize=None)
def _boundary_rank(cx: Complex, i: int, field: FieldSpec) -> int:
    if cx.kind != ORDINARY or i < 0 or i > cx.dim:
        return 0
    return matrix_rank(boundary_matrix(cx, i), field)


def _is_cone(cx: Complex) -> bool:
    if cx.kind != ORDINARY:
        return False
    common = cx.facet_masks[0]
    for fm in cx.facet_masks[1:]:
        common &= fm
        if not common:
            return False
    return bool(common)


def reduced_betti(cx: Complex, i: int, field: FieldSpec = RATIONALS) -> int:
    """dim_K of the i-th reduced homology of cx over the given field."""
    if cx.kind == VOID:
        return 0
    if cx.kind == IRRELEVANT:
        return 1 if i == -1 else 0
    if i < -1 or i > cx.dim:
        return 0
    if _is_cone(cx):
        # a common apex makes the complex contractible
        return 0
    f_i = 1 if i == -1 else len(cx.face_masks_of_dim(i))
    return f_i - _boundary_rank(cx, i, field) - _boundary_rank(cx, i + 1, field)


@lru_cache(maxsize=None)
def min_nonzero_betti(cx: Complex, field: FieldSpec) -> Optional[int]:
    """Least i with H~_i(cx) != 0, or None if all reduced homology vanishes."""
    if cx.kind == VOID:
        return None
    if cx.kind == IRRELEVANT:
        return -1
    for i in range(-1, cx.dim + 1):
        if reduced_betti(cx, i, field):
            return i
    return None


# -- Cohen-Macaulayness and depth --------------------------------------------

@dataclass(frozen=True)
class CMResult:
    """Reisner-criterion verdict; on failure carries the violating link."""

    cm: bool
    face: Optional[Face] = None
    index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.cm


@lru_cache(maxsize=None)
def is_cohen_macaulay(cx: Complex, field: FieldSpec = RATIONALS) -> CMResult:
    """Reisner's criterion: every link has vanishing homology below its dimension.

    The empty face is included, so H~_i(cx) itself must vanish for i < dim cx.
    """
    if cx.kind != ORDINARY:
        raise ValueError("Cohen-Macaulayness is tested on ordinary complexes")
    for fm in cx.all_face_masks():
        lk = cx.link(mask_vertices(fm))
        for i in range(-1, lk.dim):
            if reduced_betti(lk, i, field):
                return CMResult(False, mask_vertices(fm), i)
    return CMResult(True)


@lru_cache(maxsize=None)
def depth_stanley_reisner(cx: Complex, field: FieldSpec = RATIONALS) -> int:
    """depth of K[cx] = 1 + max{i : the i-skeleton is Cohen-Macaulay}.

    The scan runs top-down; skeletons of Cohen-Macaulay complexes are again
    Cohen-Macaulay, so the first hit is the maximum.  Any complex with a
    vertex has a Cohen-Macaulay 0-skeleton, hence depth >= 1.
    """
    if cx.kind != ORDINARY:
        raise ValueError("depth is defined for ordinary complexes")
    for i in range(cx.dim, -1, -1):
        if is_cohen_macaulay(cx.skeleton(i), field):
            return i + 1
    raise AssertionError("0-skeleton of an ordinary complex is Cohen-Macaulay")
