import random
from itertools import product

import pytest

from srdepth.cones import (
    ConeUnion,
    convexity_probe,
    fourcycle_assignment,
    fourcycle_complex,
    fourcycle_reference_system,
    fourcycle_symbol_order,
    generate_cone_union,
    grid_equivalence,
)
from srdepth.criteria import depth_equals_radical
from srdepth.homology import RATIONALS
from srdepth.ideals import Decomposition, irreducible_ideal
from srdepth.simplicial import Complex
from tests.conftest import VEC_EQUAL_1, VEC_EQUAL_2, VEC_MIDPOINT


@pytest.fixture(scope="module")
def reference():
    return fourcycle_reference_system()


@pytest.fixture(scope="module")
def generated():
    return generate_cone_union(fourcycle_complex(), RATIONALS)


# -- reference system ---------------------------------------------------------------

def test_reference_on_named_vectors(reference):
    assert reference.evaluate(fourcycle_assignment(VEC_EQUAL_1))
    assert reference.evaluate(fourcycle_assignment(VEC_EQUAL_2))
    assert not reference.evaluate(fourcycle_assignment(VEC_MIDPOINT))


def test_reference_all_equal_exponents(reference):
    assert reference.evaluate(fourcycle_assignment((2,) * 8))


def test_symbol_order_is_componentwise():
    order = fourcycle_symbol_order()
    cx = fourcycle_complex()
    # eight symbols, each variable outside its facet, components in
    # complement-lex order
    assert len(order) == 8
    for i, j in order:
        assert j not in cx.facets[i]
    comps = [tuple(j for k, j in order[p : p + 2]) for p in range(0, 8, 2)]
    assert comps == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_evaluate_requires_total_positive_assignment(reference):
    asg = fourcycle_assignment(VEC_EQUAL_1)
    missing = dict(list(asg.items())[:-1])
    with pytest.raises(ValueError):
        reference.evaluate(missing)
    bad = dict(asg)
    bad[next(iter(bad))] = 0
    with pytest.raises(ValueError):
        reference.evaluate(bad)


# -- generation ----------------------------------------------------------------------

def test_generated_matches_reference_on_grid(generated, reference):
    assert grid_equivalence(generated, reference, 3) is None


def test_single_condition_differs_from_reference(reference):
    single = ConeUnion(
        reference.n, reference.facets, reference.symbols, (reference.disjuncts[0],)
    )
    assert grid_equivalence(single, reference, 3) is not None


def test_rigid_complex_gives_trivially_true_union(two_big_facets):
    union = generate_cone_union(two_big_facets, RATIONALS)
    assert union.is_trivially_true


def test_depth_one_complex_gives_trivially_true_union():
    cx = Complex(4, [(1, 2), (3, 4)])
    union = generate_cone_union(cx, RATIONALS)
    assert union.is_trivially_true


def test_union_vs_union_self(generated):
    assert grid_equivalence(generated, generated, 2) is None


def test_symbol_mismatch_rejected(generated):
    other = generate_cone_union(Complex(4, [(1, 2), (3, 4)]), RATIONALS)
    with pytest.raises(ValueError):
        grid_equivalence(generated, other, 2)


# -- cone geometry --------------------------------------------------------------------

def test_disjuncts_are_closed_under_scaling_and_addition(generated):
    rng = random.Random(3)
    syms = generated.symbols
    for d in generated.disjuncts:
        sat = []
        while len(sat) < 2:
            v = {s: rng.randint(1, 6) for s in syms}
            if all(v[syms[l]] >= v[syms[r]] for l, r in d):
                sat.append(v)
        p, q = sat
        double = {s: 2 * p[s] for s in syms}
        total = {s: p[s] + q[s] for s in syms}
        assert all(double[syms[l]] >= double[syms[r]] for l, r in d)
        assert all(total[syms[l]] >= total[syms[r]] for l, r in d)


def test_convexity_probe_midpoint_fails(reference):
    rep = convexity_probe(
        reference,
        fourcycle_assignment(VEC_EQUAL_1),
        fourcycle_assignment(VEC_EQUAL_2),
    )
    assert dict(rep.midpoint) == fourcycle_assignment(VEC_MIDPOINT)
    assert not rep.midpoint_satisfies


def test_convexity_probe_same_point(reference):
    p = fourcycle_assignment(VEC_EQUAL_1)
    rep = convexity_probe(reference, p, p)
    assert rep.midpoint_satisfies


def test_convexity_probe_within_one_cone(reference):
    p = fourcycle_assignment((2, 2, 2, 2, 2, 2, 2, 2))
    q = fourcycle_assignment((4, 4, 4, 4, 4, 4, 4, 4))
    assert convexity_probe(reference, p, q).midpoint_satisfies


def test_convexity_probe_validates(reference):
    p = fourcycle_assignment(VEC_EQUAL_1)
    with pytest.raises(ValueError):
        convexity_probe(reference, p, fourcycle_assignment(VEC_MIDPOINT))
    q = fourcycle_assignment(VEC_EQUAL_2)
    odd = dict(q)
    key = next(iter(odd))
    odd[key] += 1  # break the parity at one symbol
    if (p[key] + odd[key]) % 2 and convexity_probe is not None:
        with pytest.raises(ValueError):
            convexity_probe(reference, p, odd)


# -- soundness against the decision procedure --------------------------------------------

def _irreducible_decomposition(cx, union, values):
    per_facet = {i: {} for i in range(len(cx.facets))}
    for (i, j), v in values.items():
        per_facet[i][j] = v
    comps = []
    for i, f in enumerate(cx.facets):
        comp = sorted(per_facet[i])
        comps.append(irreducible_ideal(cx.n, f, [per_facet[i][j] for j in comp]))
    return Decomposition(cx, comps)


@pytest.mark.slow
def test_soundness_against_decision_procedure():
    # every point of the {1..3} grid: cone-union satisfaction must coincide
    # with the depth-equality verdict of the induced irreducible decomposition
    cases = [
        (Complex(3, [(1, 2), (2, 3)]), 3),
        (Complex(4, [(1, 2), (3, 4)]), 3),
        (fourcycle_complex(), 3),
    ]
    for cx, bound in cases:
        union = generate_cone_union(cx, RATIONALS)
        syms = union.symbols
        for values in product(range(1, bound + 1), repeat=len(syms)):
            asg = dict(zip(syms, values))
            dec = _irreducible_decomposition(cx, union, asg)
            assert union.evaluate(asg) == depth_equals_radical(dec, RATIONALS).equal


def test_pruning_preserves_satisfiability(reference):
    # re-adding subsumed disjuncts must not change the satisfiability set
    base = list(reference.disjuncts)
    extra_atom = next(iter(base[1] - base[0]))
    bloated = ConeUnion(
        reference.n,
        reference.facets,
        reference.symbols,
        tuple(base) + (base[0] | {extra_atom}, base[1] | base[0]),
    )
    assert len(bloated.disjuncts) > len(reference.disjuncts)
    assert grid_equivalence(bloated, reference, 3) is None


# -- serialization --------------------------------------------------------------------------

def test_json_round_trip(generated, reference):
    for union in (generated, reference):
        again = ConeUnion.from_json_dict(union.to_json_dict())
        assert again == union


def test_json_relation_sugar(reference):
    data = reference.to_json_dict()
    # rewrite one atom as <= and one pair as =; the parsed union must agree
    # with the original on a grid
    entry = data["disjuncts"][0][0]
    entry["left"], entry["right"], entry["rel"] = entry["right"], entry["left"], "<="
    again = ConeUnion.from_json_dict(data)
    assert grid_equivalence(again, reference, 2) is None
