"""Inequality systems on irreducible exponents that govern depth equality.

For a pure complex, the exponent tuples (a_{ij}) of an irreducible
decomposition for which depth(S/I) equals the radical depth form a finite
union of rational cones.  Each facet selection of depth below t contributes a
conjunction, over tuples of outside-variable choices, of disjunctions of
comparisons a_{ij} >= a_{kj}; expanding to disjunctive normal form and
pruning subsumed conjunctions yields an explicit union of cones, evaluable on
integer points and comparable against the decision procedure on a grid.

Symbols are (facet index, variable) pairs with the variable outside the
facet; facet indices follow the canonical facet order of the complex.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Mapping, Optional, Sequence

from .homology import FieldSpec, RATIONALS, depth_stanley_reisner
from .simplicial import Complex, ORDINARY

Symbol = tuple[int, int]  # (facet index, variable index)
Atom = tuple[int, int]  # (left symbol position, right symbol position): left >= right

DEFAULT_FACET_CAP = 20


def _prune(disjuncts: Sequence[frozenset]) -> tuple[frozenset, ...]:
    """Drop duplicates and any conjunction containing another one."""
    unique = sorted(set(disjuncts), key=lambda d: (len(d), sorted(d)))
    kept: list[frozenset] = []
    for d in unique:
        if not any(k <= d for k in kept):
            kept.append(d)
    return tuple(kept)


@dataclass(frozen=True)
class ConeUnion:
    """Disjunction of conjunctions of comparisons between exponent symbols."""

    n: int
    facets: tuple[tuple[int, ...], ...]
    symbols: tuple[Symbol, ...]
    disjuncts: tuple[frozenset, ...]

    @property
    def is_trivially_true(self) -> bool:
        return any(not d for d in self.disjuncts)

    @property
    def is_unsatisfiable(self) -> bool:
        return not self.disjuncts

    def symbol_index(self, facet_index: int, var: int) -> int:
        try:
            return self.symbols.index((facet_index, var))
        except ValueError:
            raise ValueError(f"no symbol for facet {facet_index}, variable {var}")

    def evaluate(self, assignment: Mapping[Symbol, int]) -> bool:
        """True iff every comparison of some disjunct holds.

        The assignment must give a positive integer to every symbol.
        """
        values = []
        for sym in self.symbols:
            if sym not in assignment:
                raise ValueError(f"assignment misses symbol {sym}")
            v = int(assignment[sym])
            if v < 1:
                raise ValueError(f"exponent for {sym} must be positive, got {v}")
            values.append(v)
        return any(
            all(values[left] >= values[right] for left, right in d)
            for d in self.disjuncts
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "facets": [list(f) for f in self.facets],
            "symbols": [{"facet": i + 1, "var": j} for i, j in self.symbols],
            "disjuncts": [
                [
                    {"left": left, "rel": ">=", "right": right}
                    for left, right in sorted(d)
                ]
                for d in self.disjuncts
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ConeUnion":
        try:
            n = int(data["n"])
            facets = tuple(tuple(int(v) for v in f) for f in data["facets"])
            symbols = tuple(
                (int(s["facet"]) - 1, int(s["var"])) for s in data["symbols"]
            )
            raw = data["disjuncts"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"cone union JSON malformed: {exc}") from exc
        disjuncts = []
        for entry in raw:
            atoms = set()
            for cmp_ in entry:
                left, right = int(cmp_["left"]), int(cmp_["right"])
                rel = cmp_.get("rel", ">=")
                if rel == ">=":
                    atoms.add((left, right))
                elif rel == "<=":
                    atoms.add((right, left))
                elif rel == "=":
                    atoms.add((left, right))
                    atoms.add((right, left))
                else:
                    raise ValueError(f"unknown relation {rel!r}")
            disjuncts.append(frozenset(atoms))
        return cls(n, facets, symbols, _prune(disjuncts))


def _symbols_for(cx: Complex) -> tuple[Symbol, ...]:
    syms = []
    for i, fm in enumerate(cx.facet_masks):
        for j in range(1, cx.n + 1):
            if not fm >> (j - 1) & 1:
                syms.append((i, j))
    return tuple(syms)


def generate_cone_union(
    cx: Complex, field: FieldSpec = RATIONALS, max_facets: int = DEFAULT_FACET_CAP
) -> ConeUnion:
    """Emit the union of cones characterizing depth equality over cx.

    For each facet selection of depth below t, with complement facets
    F_{i_1}..F_{i_s}: for every choice of variables j_q outside F_{i_q}, some
    chosen exponent must dominate a matching exponent of a selected facet,
    a_{i_q j_q} >= a_{k j_q} with j_q outside F_k.  Choices of k for which
    x_{j_q} is a variable of F_k contribute no comparison (membership in that
    component could never be forced through x_{j_q}).
    """
    if cx.kind != ORDINARY or not cx.is_pure:
        raise ValueError("cone generation needs an ordinary pure complex")
    r = len(cx.facet_masks)
    if r > max_facets:
        raise ValueError(f"{r} facets exceed the enumeration cap {max_facets}")
    t = depth_stanley_reisner(cx, field)
    symbols = _symbols_for(cx)
    sym_pos = {s: k for k, s in enumerate(symbols)}
    masks = cx.facet_masks
    outside_vars = [
        [j for j in range(1, cx.n + 1) if not fm >> (j - 1) & 1] for fm in masks
    ]

    dnf: list[frozenset] = [frozenset()]
    for k in range(1, r):
        for selection in combinations(range(r), k):
            gamma = cx.facet_subcomplex(selection)
            if depth_stanley_reisner(gamma, field) >= t:
                continue
            inside = set(selection)
            outside = [i for i in range(r) if i not in inside]
            clauses = []
            for tup in product(*[outside_vars[i] for i in outside]):
                atoms = set()
                for i_q, j_q in zip(outside, tup):
                    for k2 in selection:
                        if not masks[k2] >> (j_q - 1) & 1:
                            atoms.add((sym_pos[(i_q, j_q)], sym_pos[(k2, j_q)]))
                clauses.append(atoms)
            # conjunction of clauses, distributed into the running DNF
            for clause in clauses:
                if not clause:
                    dnf = []
                    break
                dnf = list(
                    _prune([d | {atom} for d in dnf for atom in clause])
                )
            if not dnf:
                break
        if not dnf:
            break
    return ConeUnion(cx.n, cx.facets, symbols, _prune(dnf))


def evaluate(union: ConeUnion, assignment: Mapping[Symbol, int]) -> bool:
    return union.evaluate(assignment)


def grid_equivalence(
    u1: ConeUnion, u2: ConeUnion, bound: int
) -> Optional[dict[Symbol, int]]:
    """Exhaustively compare two unions on {1..bound}^symbols.

    Symbols are matched by (facet vertex set, variable); returns the first
    disagreeing assignment keyed by u1's symbols, or None when equivalent.
    """
    key1 = {(u1.facets[i], j): (i, j) for i, j in u1.symbols}
    key2 = {(u2.facets[i], j): (i, j) for i, j in u2.symbols}
    if set(key1) != set(key2):
        raise ValueError("cone unions are over different symbol sets")
    keys = sorted(key1)
    for values in product(range(1, bound + 1), repeat=len(keys)):
        a1 = {key1[k]: v for k, v in zip(keys, values)}
        a2 = {key2[k]: v for k, v in zip(keys, values)}
        if u1.evaluate(a1) != u2.evaluate(a2):
            return a1
    return None


@dataclass(frozen=True)
class ConvexityReport:
    midpoint: dict
    midpoint_satisfies: bool

    @property
    def convexity_holds(self) -> bool:
        return self.midpoint_satisfies


def convexity_probe(
    union: ConeUnion, p: Mapping[Symbol, int], q: Mapping[Symbol, int]
) -> ConvexityReport:
    """Evaluate the union at the midpoint of two satisfying assignments."""
    if not union.evaluate(p) or not union.evaluate(q):
        raise ValueError("both endpoints must satisfy the union")
    mid = {}
    for sym in union.symbols:
        s = p[sym] + q[sym]
        if s % 2:
            raise ValueError(f"midpoint is not integral at symbol {sym}")
        mid[sym] = s // 2
    return ConvexityReport(mid, union.evaluate(mid))


# -- the 4-cycle reference system -------------------------------------------------

def fourcycle_complex() -> Complex:
    return Complex(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


#: component reading order for the 4-cycle: facets sorted so that their
#: complement variable sets are lexicographic, i.e. the intersection
#: (x1,x2) n (x1,x4) n (x2,x3) n (x3,x4); the eight exponent labels
#: enumerate each component's outside variables in ascending order.
_FOURCYCLE_COMPONENT_FACETS = ((3, 4), (2, 3), (1, 4), (1, 2))


def fourcycle_symbol_order() -> tuple[Symbol, ...]:
    """The eight 4-cycle symbols in component reading order."""
    cx = fourcycle_complex()
    facet_index = {f: i for i, f in enumerate(cx.facets)}
    order = []
    for f in _FOURCYCLE_COMPONENT_FACETS:
        i = facet_index[f]
        for j in range(1, 5):
            if j not in f:
                order.append((i, j))
    return tuple(order)


def fourcycle_assignment(values: Sequence[int]) -> dict[Symbol, int]:
    """Assignment for the 4-cycle from eight exponents in component reading order."""
    order = fourcycle_symbol_order()
    if len(values) != len(order):
        raise ValueError(f"expected {len(order)} exponents, got {len(values)}")
    return dict(zip(order, [int(v) for v in values]))


def fourcycle_reference_system() -> ConeUnion:
    """Hard-coded union of the four inequality systems for the 4-cycle.

    With exponents e1..e8 in component reading order, depth equality holds
    iff one of these conjunctions does:

        (1) e3 <= e1, e2 = e5, e7 <= e6
        (2) e2 <= e5, e6 = e7, e4 <= e8
        (3) e5 <= e2, e1 = e3, e8 <= e4
        (4) e1 <= e3, e4 = e8, e6 <= e7
    """
    cx = fourcycle_complex()
    symbols = _symbols_for(cx)
    sym_pos = {s: k for k, s in enumerate(symbols)}
    order = fourcycle_symbol_order()

    def ge(a: int, b: int) -> Atom:
        return (sym_pos[order[a - 1]], sym_pos[order[b - 1]])

    def eq(a: int, b: int) -> tuple[Atom, Atom]:
        return ge(a, b), ge(b, a)

    systems = [
        frozenset({ge(1, 3), *eq(2, 5), ge(6, 7)}),
        frozenset({ge(5, 2), *eq(6, 7), ge(8, 4)}),
        frozenset({ge(2, 5), *eq(1, 3), ge(4, 8)}),
        frozenset({ge(3, 1), *eq(4, 8), ge(7, 6)}),
    ]
    return ConeUnion(cx.n, cx.facets, symbols, _prune(systems))
