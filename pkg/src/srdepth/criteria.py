"""Degree complexes, graded local cohomology and depth of monomial ideals.

The central object is the degree complex of an ideal I at a degree vector
a in Z^n: the faces are F \\ G_a for the sets F containing G_a = {j : a_j < 0}
such that x^a stays outside I after inverting the variables of F.  The graded
pieces of local cohomology are reduced homology groups of degree complexes
(with an index shift by |G_a|), which turns depth into a finite, exact
computation: only degrees with a_j < max exponent of x_j can contribute, and
negative coordinates matter only through their sign.

Two independent depth engines are provided: the local-cohomology scan and a
multigraded Koszul-complex oracle; they are cross-checked in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from .homology import (
    FieldSpec,
    RATIONALS,
    matrix_rank,
    min_nonzero_betti,
    reduced_betti,
    depth_stanley_reisner,
)
from .ideals import Decomposition, MonomialIdeal, radical_complex
from .simplicial import Complex, VOID


def negative_support(a: Sequence[int]) -> int:
    """Bitmask of the coordinates where the degree vector is negative."""
    m = 0
    for j, x in enumerate(a):
        if x < 0:
            m |= 1 << j
    return m


def positive_support(a: Sequence[int]) -> int:
    m = 0
    for j, x in enumerate(a):
        if x > 0:
            m |= 1 << j
    return m


# -- degree complexes ---------------------------------------------------------

def degree_complex_facet_form(dec: Decomposition, a: Sequence[int]) -> Complex:
    """Subcomplex generated by the facets whose component misses x^a (a >= 0)."""
    if len(a) != dec.n:
        raise ValueError(f"degree length {len(a)} != ambient {dec.n}")
    if any(x < 0 for x in a):
        raise ValueError("facet-selection form needs a nonnegative degree vector")
    a = tuple(a)
    masks = [
        fm
        for fm, comp in zip(dec.delta.facet_masks, dec.components)
        if not comp.contains(a)
    ]
    return Complex._from_masks(dec.n, masks)


def degree_complex(ideal: MonomialIdeal, a: Sequence[int]) -> Complex:
    """Localization form for an arbitrary monomial ideal and a in Z^n.

    Enumerates all F between G_a and {1..n}; x^a lies in the localized ideal
    iff some generator's excess support {j : e_j > a_j} is contained in F.
    """
    n = ideal.n
    if len(a) != n:
        raise ValueError(f"degree length {len(a)} != ambient {n}")
    gmask = negative_support(a)
    excess = []
    for g in ideal.gens:
        d = 0
        for j in range(n):
            if g[j] > a[j]:
                d |= 1 << j
        if d == 0:
            return Complex.void(n)  # x^a already in the ideal for every F
        excess.append(d)
    # drop non-minimal excess masks: F avoids d' whenever it avoids d <= d'
    excess = [d for d in excess if not any(o != d and o & d == o for o in excess)]
    free = ((1 << n) - 1) & ~gmask
    qualifying = []
    sub = free
    while True:
        f = gmask | sub
        if not any(d & f == d for d in excess):
            qualifying.append(f & ~gmask)
        if sub == 0:
            break
        sub = (sub - 1) & free
    return Complex._from_masks(n, qualifying)


def degree_complex_unmixed(dec: Decomposition, a: Sequence[int]) -> Complex:
    """Localization form computed facet-locally for an unmixed decomposition.

    For a P_F-primary component every generator is supported outside F, so
    the maximal set keeping x^a out of the localized intersection is a facet
    itself; it suffices to test each facet with its own variables inverted.
    """
    if len(a) != dec.n:
        raise ValueError(f"degree length {len(a)} != ambient {dec.n}")
    gmask = negative_support(a)
    masks = []
    for fm, comp in zip(dec.delta.facet_masks, dec.components):
        if gmask & ~fm:
            continue
        if not comp.localization_membership(a, fm):
            masks.append(fm & ~gmask)
    return Complex._from_masks(dec.n, masks)


# -- witnesses for exact facet selections --------------------------------------

def degree_selecting_witness(
    dec: Decomposition, gamma_indices: Sequence[int]
) -> Optional[tuple[int, ...]]:
    """A degree a >= 0 whose monomial lies in every component outside the
    selection and in none inside it, or None.

    The search grid caps each coordinate at the componentwise max exponent;
    capping preserves every component membership because the components of a
    valid decomposition have generator exponents bounded by those maxima.
    """
    r = len(dec.components)
    inside = sorted(set(gamma_indices))
    if not inside or len(inside) >= r:
        raise ValueError("selection must be a proper nonempty subset of the facets")
    for i in inside:
        if not 0 <= i < r:
            raise ValueError(f"facet index {i} out of range 0..{r - 1}")
    inside_set = set(inside)
    rho = dec.max_exponents()
    outside = [c for i, c in enumerate(dec.components) if i not in inside_set]
    chosen = [dec.components[i] for i in inside]
    for a in product(*[range(cap + 1) for cap in rho]):
        if all(c.contains(a) for c in outside) and not any(
            c.contains(a) for c in chosen
        ):
            return a
    return None


# -- graded local cohomology ----------------------------------------------------

@dataclass(frozen=True)
class LocalCohomologyCell:
    """Nonzero graded piece of a local cohomology module."""

    degree: tuple[int, ...]
    index: int
    dimension: int


def local_cohomology_dim(
    ideal: MonomialIdeal, i: int, a: Sequence[int], field: FieldSpec = RATIONALS
) -> int:
    """dim_K of the degree-a piece of the i-th local cohomology of S/I.

    Vanishes unless the negative support of a is a face of the radical's
    complex and a_j stays below the largest x_j-exponent of the generators;
    otherwise it is reduced homology of the degree complex in homological
    degree i - |G_a| - 1.
    """
    if not ideal.is_proper_nonzero:
        raise ValueError("local cohomology scan needs a proper nonzero ideal")
    if i < 0:
        return 0
    gmask = negative_support(a)
    if not radical_complex(ideal).has_face_mask(gmask):
        return 0
    rho = ideal.max_exponents()
    if any(x >= r for x, r in zip(a, rho)):
        return 0
    cx = degree_complex(ideal, a)
    return reduced_betti(cx, i - gmask.bit_count() - 1, field)


def _depth_grid(rho: Sequence[int]):
    return product(*[[-1] + list(range(cap)) for cap in rho])


def depth_via_local_cohomology(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS
) -> int:
    """depth(S/I) as the least i with a nonvanishing graded local cohomology piece.

    The scan is exact on the finite grid {-1} x {0..rho_j - 1} per coordinate:
    degrees with a_j >= rho_j vanish outright and all negative values behave
    like -1.
    """
    if not ideal.is_proper_nonzero:
        raise ValueError("depth needs a proper nonzero ideal")
    rc = radical_complex(ideal)
    best: Optional[int] = None
    for a in _depth_grid(ideal.max_exponents()):
        gmask = negative_support(a)
        if not rc.has_face_mask(gmask):
            continue
        cx = degree_complex(ideal, a)
        if cx.kind == VOID:
            continue
        low = min_nonzero_betti(cx, field)
        if low is None:
            continue
        cand = gmask.bit_count() + 1 + low
        if best is None or cand < best:
            best = cand
            if best == 0:
                break
    if best is None:
        raise AssertionError("no nonvanishing local cohomology found")
    return best


def depth_via_local_cohomology_unmixed(
    dec: Decomposition, field: FieldSpec = RATIONALS
) -> int:
    """Same scan as depth_via_local_cohomology using the facet-local degree
    complex, which avoids expanding the intersection ideal."""
    best: Optional[int] = None
    for a in _depth_grid(dec.max_exponents()):
        cx = degree_complex_unmixed(dec, a)
        if cx.kind == VOID:
            continue
        low = min_nonzero_betti(cx, field)
        if low is None:
            continue
        cand = negative_support(a).bit_count() + 1 + low
        if best is None or cand < best:
            best = cand
            if best == 0:
                break
    if best is None:
        raise AssertionError("no nonvanishing local cohomology found")
    return best


def local_cohomology_table(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, max_index: Optional[int] = None
) -> list[LocalCohomologyCell]:
    """All nonzero graded local cohomology pieces over the exact degree grid."""
    if not ideal.is_proper_nonzero:
        raise ValueError("local cohomology scan needs a proper nonzero ideal")
    rc = radical_complex(ideal)
    top = ideal.n if max_index is None else max_index
    cells = []
    for a in _depth_grid(ideal.max_exponents()):
        gmask = negative_support(a)
        if not rc.has_face_mask(gmask):
            continue
        cx = degree_complex(ideal, a)
        if cx.kind == VOID:
            continue
        shift = gmask.bit_count() + 1
        for i in range(shift - 1, top + 1):
            d = reduced_betti(cx, i - shift, field)
            if d:
                cells.append(LocalCohomologyCell(tuple(a), i, d))
    cells.sort(key=lambda c: (c.index, c.degree))
    return cells


# -- Koszul-complex depth oracle -------------------------------------------------

def _koszul_top_index(ideal: MonomialIdeal, field: FieldSpec) -> int:
    """Largest homological index with nonvanishing Koszul homology of
    (x_1..x_n) on S/I.

    Works degree by degree over the closed box prod_j {0..rho_j}; the Koszul
    differentials lower multidegrees by squarefree vectors and multiplication
    by x_j is bijective beyond rho_j, so homology is supported in the box.
    """
    n = ideal.n
    rho = ideal.max_exponents()
    subsets_by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for t in range(1 << n):
        subsets_by_size[t.bit_count()].append(t)
    top = -1
    for b in product(*[range(r + 1) for r in rho]):
        # basis in homological degree k: subsets T with b - e_T >= 0 and
        # the monomial x^(b - e_T) outside the ideal
        bases: list[dict[int, int]] = []
        for k in range(n + 1):
            basis: dict[int, int] = {}
            for t in subsets_by_size[k]:
                vec = list(b)
                ok = True
                for j in range(n):
                    if t >> j & 1:
                        vec[j] -= 1
                        if vec[j] < 0:
                            ok = False
                            break
                if ok and not ideal.contains(vec):
                    basis[t] = len(basis)
            bases.append(basis)
        ranks = [0] * (n + 2)
        for k in range(1, n + 1):
            if not bases[k] or not bases[k - 1]:
                continue
            rows = [[0] * len(bases[k]) for _ in bases[k - 1]]
            for t, c in bases[k].items():
                sign = 1
                for j in range(n):
                    if t >> j & 1:
                        sub = t & ~(1 << j)
                        r = bases[k - 1].get(sub)
                        if r is not None:
                            rows[r][c] = sign
                        sign = -sign
            ranks[k] = matrix_rank(rows, field)
        for k in range(n, top, -1):
            if len(bases[k]) - ranks[k] - ranks[k + 1] > 0:
                top = k
                break
    return top


def depth_via_koszul(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> int:
    """Independent depth oracle: n minus the top nonvanishing Koszul homology
    index of the full variable sequence on S/I."""
    if not ideal.is_proper_nonzero:
        raise ValueError("depth needs a proper nonzero ideal")
    top = _koszul_top_index(ideal, field)
    if top < 0:
        raise AssertionError("Koszul homology of S/I cannot vanish entirely")
    return ideal.n - top


# -- decision procedure: depth(S/I) vs depth of the radical ----------------------

@dataclass(frozen=True)
class DepthEqualsRadicalVerdict:
    """Outcome of the depth-vs-radical decision.

    On inequality, witness_degree is a degree a whose selected subcomplex
    witness_subcomplex has depth below the radical depth t.
    """

    equal: bool
    t: int
    witness_degree: Optional[tuple[int, ...]] = None
    witness_subcomplex: Optional[Complex] = None

    def __bool__(self) -> bool:
        return self.equal


def _proper_nonempty_subsets(r: int):
    for k in range(1, r):
        yield from combinations(range(r), k)


def depth_equals_radical(
    dec: Decomposition, field: FieldSpec = RATIONALS
) -> DepthEqualsRadicalVerdict:
    """Decide depth(S/I) = depth(S/sqrt(I)) for the decomposition's intersection.

    Two equivalent characterizations are evaluated and cross-checked: every
    nonvoid degree complex over the capped nonnegative grid must have depth
    >= t, and no facet selection of depth < t may admit a degree witness.  A
    disagreement would be an internal error.
    """
    delta = dec.delta
    t = depth_stanley_reisner(delta, field)
    rho = dec.max_exponents()

    scan_witness = None
    for a in product(*[range(cap + 1) for cap in rho]):
        cx = degree_complex_facet_form(dec, a)
        if cx.kind == VOID:
            continue
        if depth_stanley_reisner(cx, field) < t:
            scan_witness = (a, cx)
            break

    selection_witness = None
    for subset in _proper_nonempty_subsets(len(dec.components)):
        gamma = delta.facet_subcomplex(subset)
        if depth_stanley_reisner(gamma, field) >= t:
            continue
        w = degree_selecting_witness(dec, subset)
        if w is not None:
            selection_witness = (w, gamma)
            break

    if (scan_witness is None) != (selection_witness is None):
        raise AssertionError(
            "degree-scan and facet-selection routes disagree: "
            f"{scan_witness!r} vs {selection_witness!r}"
        )
    if scan_witness is None:
        return DepthEqualsRadicalVerdict(True, t)
    a, cx = scan_witness
    return DepthEqualsRadicalVerdict(False, t, a, cx)
