"""Monomial ideals with exact integer exponents, and unmixed decompositions.

A monomial is an exponent tuple of length n; a MonomialIdeal keeps the
antichain of minimal generators in a canonical sort order.  Intersections go
through pairwise lcms plus minimalization, which is transparent at desk scale
and certified by membership property tests.

A Decomposition pairs a pure complex with one P_F-primary component per facet
F.  P_F-primary is checked structurally: every generator is supported in the
complement of F and every complement variable occurs as a pure power.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .simplicial import Complex, ORDINARY, face_mask, mask_vertices

Monomial = tuple  # exponent tuple of length n


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a >= b else b for a, b in zip(u, v))


def support_mask(u: Monomial) -> int:
    m = 0
    for j, e in enumerate(u):
        if e:
            m |= 1 << j
    return m


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # scanning by total degree lets a single pass catch every proper divisor
    out: list[Monomial] = []
    for g in sorted(set(gens), key=lambda t: (sum(t), t)):
        if not any(divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


class MonomialIdeal:
    """Finite antichain of minimal monomial generators in K[x_1..x_n]."""

    __slots__ = ("n", "gens", "_hash")

    def __init__(self, n: int, generators: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("ambient variable count must be >= 1")
        clean: list[Monomial] = []
        for g in generators:
            t = tuple(int(e) for e in g)
            if len(t) != n:
                raise ValueError(f"generator {t} has length {len(t)}, expected {n}")
            if any(e < 0 for e in t):
                raise ValueError(f"negative exponent in generator {t}")
            clean.append(t)
        self.n = n
        self.gens = _minimalize(clean)
        self._hash = hash((n, self.gens))

    # -- predicates -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and not any(self.gens[0])

    @property
    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    # -- membership and arithmetic --------------------------------------------

    def contains(self, monomial: Iterable[int]) -> bool:
        """True iff some minimal generator divides the monomial."""
        m = tuple(monomial)
        if len(m) != self.n:
            raise ValueError(f"monomial length {len(m)} != ambient {self.n}")
        return any(divides(g, m) for g in self.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.n != other.n:
            raise ValueError("ambient variable counts differ")
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.n, [])
        return MonomialIdeal(
            self.n, [lcm(u, v) for u in self.gens for v in other.gens]
        )

    def radical(self) -> "MonomialIdeal":
        """Generated by the squarefree supports of the generators."""
        return MonomialIdeal(
            self.n, [tuple(1 if e else 0 for e in g) for g in self.gens]
        )

    def max_exponent(self, j: int) -> int:
        """Largest exponent of x_j among minimal generators (0 if absent)."""
        if not 1 <= j <= self.n:
            raise ValueError(f"variable index {j} out of range 1..{self.n}")
        return max((g[j - 1] for g in self.gens), default=0)

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(
            max((g[j] for g in self.gens), default=0) for j in range(self.n)
        )

    def localization_membership(self, a: Sequence[int], face: Iterable[int]) -> bool:
        """Whether x^a lies in the extension of the ideal after inverting x_i, i in face.

        Coordinates inside the face are unconstrained; outside it a generator
        must satisfy exponent <= a_j coordinatewise, so a_j < 0 rules out
        every generator that actually involves x_j.
        """
        if len(a) != self.n:
            raise ValueError(f"degree length {len(a)} != ambient {self.n}")
        fmask = face if isinstance(face, int) else face_mask(face, self.n)
        for g in self.gens:
            if all(fmask >> j & 1 or g[j] <= a[j] for j in range(self.n)):
                return True
        return False

    def polarize(self) -> tuple["MonomialIdeal", tuple[int, ...]]:
        """Standard squarefree-ization in an enlarged variable set.

        Variable x_j gets max_exponent(j) slots; x_j^e maps to the product of
        the first e slots.  Returns the squarefree ideal together with the
        origin map (new variable position -> original variable index).
        """
        if not self.is_proper_nonzero:
            raise ValueError("polarization needs a proper nonzero ideal")
        rho = self.max_exponents()
        origin: list[int] = []
        offset: list[int] = []
        for j in range(self.n):
            offset.append(len(origin))
            origin.extend([j + 1] * rho[j])
        big_n = len(origin)
        new_gens = []
        for g in self.gens:
            vec = [0] * big_n
            for j, e in enumerate(g):
                for s in range(e):
                    vec[offset[j] + s] = 1
            new_gens.append(vec)
        return MonomialIdeal(big_n, new_gens), tuple(origin)

    # -- serialization and protocol --------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MonomialIdeal":
        try:
            n = int(data["n"])
            gens = data["generators"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"ideal JSON needs 'n' and 'generators': {exc}") from exc
        return cls(n, gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, gens={list(self.gens)})"


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("need at least one ideal")
    acc = ideals[0]
    for ideal in ideals[1:]:
        acc = acc.intersect(ideal)
    return acc


# -- component constructors ---------------------------------------------------

def complement_vars(n: int, facet: Iterable[int]) -> tuple[int, ...]:
    fmask = face_mask(facet, n)
    return tuple(j for j in range(1, n + 1) if not fmask >> (j - 1) & 1)


def prime_ideal(n: int, facet: Iterable[int]) -> MonomialIdeal:
    """P_F = (x_j : j not in F)."""
    gens = []
    for j in complement_vars(n, facet):
        vec = [0] * n
        vec[j - 1] = 1
        gens.append(vec)
    return MonomialIdeal(n, gens)


def irreducible_ideal(n: int, facet: Iterable[int], exps: Sequence[int]) -> MonomialIdeal:
    """(x_j^{e_j} : j not in F), exponents listed by ascending complement variable."""
    comp = complement_vars(n, facet)
    if len(exps) != len(comp):
        raise ValueError(
            f"expected {len(comp)} exponents for complement {comp}, got {len(exps)}"
        )
    gens = []
    for j, e in zip(comp, exps):
        e = int(e)
        if e < 1:
            raise ValueError(f"irreducible exponents must be >= 1, got {e}")
        vec = [0] * n
        vec[j - 1] = e
        gens.append(vec)
    return MonomialIdeal(n, gens)


def prime_power_ideal(n: int, facet: Iterable[int], m: int) -> MonomialIdeal:
    """P_F^m, generated by all degree-m monomials in the complement variables."""
    if m < 1:
        raise ValueError(f"power must be >= 1, got {m}")
    comp = complement_vars(n, facet)
    gens = []
    for combo in combinations_with_replacement(comp, m):
        vec = [0] * n
        for j in combo:
            vec[j - 1] += 1
        gens.append(vec)
    return MonomialIdeal(n, gens)


def stanley_reisner_ideal(cx: Complex) -> MonomialIdeal:
    """Intersection of the facet primes P_F of the complex."""
    if cx.kind == "void":
        raise ValueError("void complex has no Stanley-Reisner ideal")
    return intersect_all([prime_ideal(cx.n, f) for f in cx.facets])


@lru_cache(maxsize=None)
def radical_complex(ideal: MonomialIdeal) -> Complex:
    """The complex whose faces are the squarefree monomials outside radical(ideal)."""
    if ideal.is_unit:
        return Complex.void(ideal.n)
    gen_masks = [support_mask(g) for g in ideal.gens]
    faces = [
        mask
        for mask in range(1 << ideal.n)
        if not any(gm & mask == gm for gm in gen_masks)
    ]
    return Complex._from_masks(ideal.n, faces)


# -- unmixed decompositions ---------------------------------------------------

def primary_violation(n: int, facet_mask: int, component: MonomialIdeal) -> Optional[str]:
    """Reason the component fails to be P_F-primary, or None if it is."""
    if component.n != n:
        return f"component ambient {component.n} != {n}"
    comp_mask = ((1 << n) - 1) & ~facet_mask
    if comp_mask == 0:
        return "facet covers every vertex, so its prime is zero"
    pure_powers = set()
    for g in component.gens:
        sm = support_mask(g)
        if sm & facet_mask:
            return f"generator {g} involves variables of the facet"
        if sm and sm & (sm - 1) == 0:
            pure_powers.add(sm)
    for j in range(n):
        bit = 1 << j
        if comp_mask & bit and bit not in pure_powers:
            return f"no pure power of x_{j + 1} among the generators"
    return None


class Decomposition:
    """A pure complex plus one P_F-primary monomial ideal per facet.

    Components are stored in the canonical facet order of the complex.  The
    construction validates purity and the structural P_F-primary conditions;
    the intersection of the components then automatically has radical equal
    to the Stanley-Reisner ideal of the complex.
    """

    __slots__ = ("delta", "components", "_intersection")

    def __init__(self, delta: Complex, components):
        if delta.kind != ORDINARY:
            raise ValueError("decomposition needs an ordinary complex")
        if not delta.is_pure:
            raise ValueError("decomposition needs a pure complex")
        if isinstance(components, dict):
            keyed = {face_mask(f, delta.n): ideal for f, ideal in components.items()}
            if set(keyed) != set(delta.facet_masks):
                raise ValueError("components must be keyed by the facets of the complex")
            ordered = tuple(keyed[fm] for fm in delta.facet_masks)
        else:
            ordered = tuple(components)
            if len(ordered) != len(delta.facet_masks):
                raise ValueError(
                    f"expected {len(delta.facet_masks)} components, got {len(ordered)}"
                )
        for fm, ideal in zip(delta.facet_masks, ordered):
            reason = primary_violation(delta.n, fm, ideal)
            if reason is not None:
                raise ValueError(
                    f"component for facet {mask_vertices(fm)} is not primary: {reason}"
                )
        self.delta = delta
        self.components = ordered
        self._intersection = None

    @property
    def n(self) -> int:
        return self.delta.n

    def intersection(self) -> MonomialIdeal:
        if self._intersection is None:
            self._intersection = intersect_all(list(self.components))
        return self._intersection

    def max_exponents(self) -> tuple[int, ...]:
        """Coordinatewise max over components; equals the intersection's maxima."""
        return tuple(
            max(c.max_exponents()[j] for c in self.components) for j in range(self.n)
        )

    def validate(self) -> tuple[bool, Optional[Face]]:
        """Re-run the primary checks; returns (ok, offending facet)."""
        for fm, ideal in zip(self.delta.facet_masks, self.components):
            if primary_violation(self.n, fm, ideal) is not None:
                return False, mask_vertices(fm)
        return True, None

    def to_json_dict(self) -> dict:
        return {
            "complex": self.delta.to_json_dict(),
            "components": [
                {"facet": list(f), "generators": [list(g) for g in c.gens]}
                for f, c in zip(self.delta.facets, self.components)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Decomposition":
        try:
            delta = Complex.from_json_dict(data["complex"])
            raw = data["components"]
        except (KeyError, TypeError) as exc:
            raise ValueError(
                f"decomposition JSON needs 'complex' and 'components': {exc}"
            ) from exc
        comp_map = {}
        for entry in raw:
            if "facet" not in entry:
                raise ValueError("each component needs a 'facet' field")
            facet = tuple(int(v) for v in entry["facet"])
            if "generators" in entry:
                ideal = MonomialIdeal(delta.n, entry["generators"])
            elif "power" in entry:
                ideal = prime_power_ideal(delta.n, facet, int(entry["power"]))
            elif "irreducible" in entry:
                ideal = irreducible_ideal(delta.n, facet, entry["irreducible"])
            else:
                raise ValueError(
                    f"component for facet {facet} needs 'generators', 'power' "
                    "or 'irreducible'"
                )
            comp_map[facet] = ideal
        return cls(delta, comp_map)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.delta == other.delta and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.delta, self.components))

    def __repr__(self) -> str:
        return f"Decomposition(delta={self.delta!r}, components={len(self.components)})"


def build_decomposition(delta: Complex, components) -> Decomposition:
    return Decomposition(delta, components)


def validate_unmixed(dec: Decomposition) -> bool:
    ok, _ = dec.validate()
    return ok
