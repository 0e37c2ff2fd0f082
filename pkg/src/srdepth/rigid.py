"""Rigid depth of pure simplicial complexes.

A pure complex has rigid depth when every unmixed monomial ideal with that
complex as radical has the same depth as the squarefree ideal itself.  The
decidable route is combinatorial: every k of the facets must intersect in at
least t - k + 1 vertices, for k up to min(r, t), where t is the depth of the
Stanley-Reisner ring.  Two homological routes (all proper facet selections
keep depth >= t; all their (t-1)-skeletons are Cohen-Macaulay) are exposed
for cross-auditing, along with a randomized stability sampler over concrete
ideal classes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from typing import Optional, Sequence

from .criteria import depth_via_local_cohomology_unmixed
from .homology import FieldSpec, RATIONALS, depth_stanley_reisner, is_cohen_macaulay, prime_field
from .ideals import Decomposition, irreducible_ideal, prime_power_ideal
from .simplicial import Complex, ORDINARY, face_mask

DEFAULT_FACET_CAP = 20


@dataclass(frozen=True)
class RigidVerdict:
    """Verdict plus certificate: a facet tuple whose intersection is too small
    (combinatorial route) or a facet selection of depth below t (homological
    routes)."""

    rigid: bool
    t: int
    facet_indices: Optional[tuple[int, ...]] = None
    intersection_size: Optional[int] = None
    subcomplex: Optional[Complex] = None
    subcomplex_depth: Optional[int] = None

    def __bool__(self) -> bool:
        return self.rigid


def _require_pure(cx: Complex) -> None:
    if cx.kind != ORDINARY:
        raise ValueError("rigidity is defined for ordinary complexes")
    if not cx.is_pure:
        raise ValueError("rigidity is defined for pure complexes")


def _check_cap(cx: Complex, max_facets: int) -> None:
    if len(cx.facet_masks) > max_facets:
        raise ValueError(
            f"{len(cx.facet_masks)} facets exceed the enumeration cap {max_facets}"
        )


def is_rigid_by_intersections(cx: Complex, t: int) -> RigidVerdict:
    """Combinatorial test: |F_{i_1} n ... n F_{i_k}| >= t - k + 1 for all
    1 <= k <= min(r, t).  First violating tuple is the certificate."""
    _require_pure(cx)
    if not 1 <= t <= cx.dim + 1:
        raise ValueError(f"depth {t} out of range 1..{cx.dim + 1}")
    masks = cx.facet_masks
    r = len(masks)
    for k in range(1, min(r, t) + 1):
        for idx in combinations(range(r), k):
            inter = masks[idx[0]]
            for i in idx[1:]:
                inter &= masks[i]
            size = inter.bit_count()
            if size < t - k + 1:
                return RigidVerdict(
                    False, t, facet_indices=idx, intersection_size=size
                )
    return RigidVerdict(True, t)


def is_rigid_by_subcomplex_depths(
    cx: Complex, field: FieldSpec = RATIONALS, max_facets: int = DEFAULT_FACET_CAP
) -> RigidVerdict:
    """Homological test: every proper nonempty facet selection has depth >= t."""
    _require_pure(cx)
    _check_cap(cx, max_facets)
    t = depth_stanley_reisner(cx, field)
    r = len(cx.facet_masks)
    for k in range(1, r):
        for idx in combinations(range(r), k):
            gamma = cx.facet_subcomplex(idx)
            d = depth_stanley_reisner(gamma, field)
            if d < t:
                return RigidVerdict(False, t, subcomplex=gamma, subcomplex_depth=d)
    return RigidVerdict(True, t)


def is_rigid_by_skeleton_cm(
    cx: Complex, field: FieldSpec = RATIONALS, max_facets: int = DEFAULT_FACET_CAP
) -> RigidVerdict:
    """Homological test: the (t-1)-skeleton of every proper facet selection is
    Cohen-Macaulay."""
    _require_pure(cx)
    _check_cap(cx, max_facets)
    t = depth_stanley_reisner(cx, field)
    r = len(cx.facet_masks)
    for k in range(1, r):
        for idx in combinations(range(r), k):
            gamma = cx.facet_subcomplex(idx)
            if not is_cohen_macaulay(gamma.skeleton(t - 1), field):
                return RigidVerdict(
                    False,
                    t,
                    subcomplex=gamma,
                    subcomplex_depth=depth_stanley_reisner(gamma, field),
                )
    return RigidVerdict(True, t)


def two_facet_depth(f: Sequence[int], g: Sequence[int]) -> int:
    """Depth of the Stanley-Reisner ring of a two-facet complex: |F n G| + 1."""
    n = max(max(f), max(g))
    fm = face_mask(f, n)
    gm = face_mask(g, n)
    if fm == gm or fm & gm == fm or fm & gm == gm:
        raise ValueError("facets must be distinct and inclusion-incomparable")
    return (fm & gm).bit_count() + 1


# -- randomized stability sampling ---------------------------------------------

@dataclass(frozen=True)
class StabilitySample:
    kind: str  # "irreducible" or "prime-power"
    parameters: tuple
    depth: int


@dataclass
class StabilityReport:
    """Depths of randomly drawn unmixed ideals with the given radical complex."""

    t: int
    trials: int
    exponent_bound: int
    seed: int
    mismatches: list[StabilitySample] = dataclass_field(default_factory=list)
    samples: int = 0

    @property
    def all_equal(self) -> bool:
        return not self.mismatches


def sample_depth_stability(
    cx: Complex,
    field: FieldSpec = RATIONALS,
    exponent_bound: int = 2,
    trials: int = 20,
    seed: int = 0,
) -> StabilityReport:
    """Draw random irreducible and prime-power decompositions over cx and
    record every sample whose depth differs from depth K[cx].

    For a complex that passes the combinatorial rigidity test all samples
    must come back equal; for a non-rigid complex this is a search, not a
    decision.
    """
    _require_pure(cx)
    if exponent_bound < 1:
        raise ValueError("exponent bound must be >= 1")
    t = depth_stanley_reisner(cx, field)
    rng = random.Random(seed)
    report = StabilityReport(t=t, trials=trials, exponent_bound=exponent_bound, seed=seed)
    n = cx.n
    facets = cx.facets
    for _ in range(trials):
        exps = tuple(
            tuple(rng.randint(1, exponent_bound) for _ in range(n - len(f)))
            for f in facets
        )
        dec = Decomposition(
            cx, [irreducible_ideal(n, f, e) for f, e in zip(facets, exps)]
        )
        d = depth_via_local_cohomology_unmixed(dec, field)
        report.samples += 1
        if d != t:
            report.mismatches.append(StabilitySample("irreducible", exps, d))
    for _ in range(trials):
        powers = tuple(rng.randint(1, exponent_bound) for _ in facets)
        dec = Decomposition(
            cx, [prime_power_ideal(n, f, m) for f, m in zip(facets, powers)]
        )
        d = depth_via_local_cohomology_unmixed(dec, field)
        report.samples += 1
        if d != t:
            report.mismatches.append(StabilitySample("prime-power", powers, d))
    return report


# -- field-independence and skeleton audits --------------------------------------

@dataclass(frozen=True)
class CharIndependenceEntry:
    p: int
    depth: int
    rigid: bool


@dataclass
class CharIndependenceReport:
    rationals_depth: int
    rationals_rigid: bool
    entries: list[CharIndependenceEntry]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def char_independence_audit(
    cx: Complex,
    primes: Sequence[int] = (2, 3),
    max_facets: int = DEFAULT_FACET_CAP,
) -> CharIndependenceReport:
    """Rigidity over the rationals must persist over every prime field, and
    depth can only drop when the characteristic becomes positive."""
    _require_pure(cx)
    t_q = depth_stanley_reisner(cx, RATIONALS)
    rigid_q = bool(is_rigid_by_subcomplex_depths(cx, RATIONALS, max_facets))
    entries = []
    violations = []
    for p in primes:
        k = prime_field(p)
        t_p = depth_stanley_reisner(cx, k)
        rigid_p = bool(is_rigid_by_intersections(cx, t_p))
        entries.append(CharIndependenceEntry(p, t_p, rigid_p))
        if t_p > t_q:
            violations.append(f"depth over F_{p} is {t_p} > {t_q} over Q")
        if rigid_q and not rigid_p:
            violations.append(f"rigid over Q but not over F_{p}")
    return CharIndependenceReport(t_q, rigid_q, entries, violations)


@dataclass(frozen=True)
class SkeletonLevel:
    i: int
    depth: int
    rigid: bool


@dataclass
class SkeletonPropagationReport:
    t: int
    levels: list[SkeletonLevel]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def skeleton_propagation_audit(
    cx: Complex, field: FieldSpec = RATIONALS
) -> SkeletonPropagationReport:
    """For a rigid complex of depth t: skeletons at levels >= t-1 keep depth t,
    and once a skeleton is rigid every higher skeleton must be rigid too."""
    _require_pure(cx)
    t = depth_stanley_reisner(cx, field)
    if not is_rigid_by_intersections(cx, t):
        raise ValueError("skeleton propagation audit needs a rigid complex")
    levels = []
    violations = []
    for i in range(t - 1, cx.dim + 1):
        skel = cx.skeleton(i)
        d = depth_stanley_reisner(skel, field)
        if d != t:
            violations.append(f"skeleton {i} has depth {d}, expected {t}")
        rigid_i = bool(is_rigid_by_intersections(skel, d))
        levels.append(SkeletonLevel(i, d, rigid_i))
    first_rigid = None
    for lvl in levels:
        if lvl.rigid and first_rigid is None:
            first_rigid = lvl.i
        if first_rigid is not None and lvl.i >= first_rigid and not lvl.rigid:
            violations.append(
                f"skeleton {lvl.i} is not rigid although skeleton {first_rigid} is"
            )
    return SkeletonPropagationReport(t, levels, violations)
