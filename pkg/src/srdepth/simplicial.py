"""Simplicial complexes on the vertex set {1..n}, stored by their facets.

Faces are bitmasks internally (bit j-1 <-> vertex j), so every operation is
set algebra on machine integers; n is capped at 64.  Three kinds of complex
are kept apart because homology conventions differ downstream:

* void        -- no faces at all (not even the empty face),
* irrelevant  -- the single face is the empty set,
* ordinary    -- everything else.

Face enumeration is colexicographic on bitmasks (numeric order of the mask),
which fixes boundary-matrix rows/columns and makes all outputs reproducible.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64

VOID = "void"
IRRELEVANT = "irrelevant"
ORDINARY = "ordinary"

Face = tuple  # sorted tuple of vertices at the API boundary


def face_mask(vertices: Iterable[int], n: int) -> int:
    """Bitmask of a vertex set, validating the 1..n range."""
    m = 0
    for v in vertices:
        v = int(v)
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
        m |= 1 << (v - 1)
    return m


def mask_vertices(mask: int) -> Face:
    """Sorted vertex tuple of a bitmask."""
    verts = []
    v = 1
    while mask:
        if mask & 1:
            verts.append(v)
        mask >>= 1
        v += 1
    return tuple(verts)


def _maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    pool = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    out: list[int] = []
    for m in pool:
        if not any(m & o == m for o in out):
            out.append(m)
    out.sort()
    return tuple(out)


class Complex:
    """Immutable simplicial complex, normalized to its inclusion-maximal faces.

    The constructor accepts any collection of candidate faces (iterables of
    vertices) and keeps the maximal ones; it is idempotent on facet sets.
    """

    __slots__ = ("n", "_fmasks", "kind", "_hash")

    def __init__(self, n: int, faces: Iterable[Iterable[int]]):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        masks = [face_mask(f, n) for f in faces]
        self._init_from_masks(n, masks)

    def _init_from_masks(self, n: int, masks: Iterable[int]) -> None:
        fmasks = _maximal_masks(masks)
        self.n = n
        self._fmasks = fmasks
        if not fmasks:
            self.kind = VOID
        elif fmasks == (0,):
            self.kind = IRRELEVANT
        else:
            self.kind = ORDINARY
        self._hash = hash((n, fmasks))

    @classmethod
    def _from_masks(cls, n: int, masks: Iterable[int]) -> "Complex":
        cx = object.__new__(cls)
        cx._init_from_masks(n, masks)
        return cx

    @classmethod
    def void(cls, n: int) -> "Complex":
        return cls(n, [])

    @classmethod
    def irrelevant(cls, n: int) -> "Complex":
        return cls(n, [()])

    @classmethod
    def full_simplex(cls, n: int) -> "Complex":
        return cls._from_masks(n, [(1 << n) - 1])

    # -- basic queries ------------------------------------------------------

    @property
    def facets(self) -> tuple[Face, ...]:
        return tuple(mask_vertices(m) for m in self._fmasks)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._fmasks

    @property
    def dim(self) -> int:
        """max |F|-1 over facets; -1 for the irrelevant complex.

        The void complex has no faces; -2 is returned as a below-everything
        sentinel.
        """
        if self.kind == VOID:
            return -2
        return max(m.bit_count() for m in self._fmasks) - 1

    @property
    def is_pure(self) -> bool:
        if self.kind == VOID:
            return True
        sizes = {m.bit_count() for m in self._fmasks}
        return len(sizes) == 1

    def has_face_mask(self, mask: int) -> bool:
        return any(mask & fm == mask for fm in self._fmasks)

    def has_face(self, face: Iterable[int]) -> bool:
        return self.has_face_mask(face_mask(face, self.n))

    def face_masks_of_dim(self, i: int) -> list[int]:
        """All i-faces as bitmasks, in colexicographic (numeric) order."""
        if self.kind == VOID:
            return []
        if i < -1 or i > self.dim:
            raise ValueError(f"dimension {i} out of range -1..{self.dim}")
        if i == -1:
            return [0]
        found: set[int] = set()
        for fm in self._fmasks:
            verts = mask_vertices(fm)
            if len(verts) < i + 1:
                continue
            for combo in combinations(verts, i + 1):
                found.add(face_mask(combo, self.n))
        return sorted(found)

    def faces(self, i: int) -> list[Face]:
        """All i-faces as sorted vertex tuples, colex order."""
        return [mask_vertices(m) for m in self.face_masks_of_dim(i)]

    def all_face_masks(self) -> list[int]:
        """Every face, ordered by (dimension, colex)."""
        out: list[int] = []
        if self.kind == VOID:
            return out
        for i in range(-1, self.dim + 1):
            out.extend(self.face_masks_of_dim(i))
        return out

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, ..., f_dim); empty for void/irrelevant complexes."""
        if self.kind != ORDINARY:
            return ()
        return tuple(len(self.face_masks_of_dim(i)) for i in range(self.dim + 1))

    # -- derived complexes --------------------------------------------------

    def link(self, face: Iterable[int]) -> "Complex":
        """Faces G disjoint from `face` with G u face in the complex."""
        m = face_mask(face, self.n)
        stars = [fm for fm in self._fmasks if fm & m == m]
        if not stars:
            raise ValueError(f"{mask_vertices(m)} is not a face")
        return Complex._from_masks(self.n, [fm & ~m for fm in stars])

    def star(self, face: Iterable[int]) -> "Complex":
        """Faces G with G u face in the complex."""
        m = face_mask(face, self.n)
        stars = [fm for fm in self._fmasks if fm & m == m]
        if not stars:
            raise ValueError(f"{mask_vertices(m)} is not a face")
        return Complex._from_masks(self.n, stars)

    def skeleton(self, i: int) -> "Complex":
        """Subcomplex of all faces of dimension <= i."""
        if self.kind == VOID:
            raise ValueError("void complex has no skeleton")
        if not -1 <= i <= self.dim:
            raise ValueError(f"skeleton index {i} out of range -1..{self.dim}")
        if i == self.dim:
            return self
        masks: list[int] = []
        for fm in self._fmasks:
            verts = mask_vertices(fm)
            if len(verts) - 1 <= i:
                masks.append(fm)
            else:
                for combo in combinations(verts, i + 1):
                    masks.append(face_mask(combo, self.n))
        return Complex._from_masks(self.n, masks)

    def facet_subcomplex(self, indices: Iterable[int]) -> "Complex":
        """Complex generated by the selected facets (canonical-order indices)."""
        idx = sorted(set(indices))
        if not idx:
            raise ValueError("facet selection must be nonempty")
        r = len(self._fmasks)
        for i in idx:
            if not 0 <= i < r:
                raise ValueError(f"facet index {i} out of range 0..{r - 1}")
        return Complex._from_masks(self.n, [self._fmasks[i] for i in idx])

    # -- serialization and protocol ----------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Complex":
        try:
            n = int(data["n"])
            facets = data["facets"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"complex JSON needs 'n' and 'facets': {exc}") from exc
        return cls(n, facets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self.n == other.n and self._fmasks == other._fmasks

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.kind == VOID:
            return f"Complex(n={self.n}, void)"
        return f"Complex(n={self.n}, facets={list(self.facets)})"

    def __iter__(self) -> Iterator[Face]:
        return iter(self.facets)
