import random
from itertools import combinations
from pathlib import Path

import pytest

from srdepth import (
    Complex,
    Decomposition,
    MonomialIdeal,
    irreducible_ideal,
    prime_power_ideal,
)
from srdepth.cones import fourcycle_complex

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# the three reference exponent tuples for the 4-cycle, in component reading
# order (x1,x2),(x1,x4),(x2,x3),(x3,x4); the first two give depth equality,
# their componentwise midpoint does not
VEC_EQUAL_1 = (3, 5, 1, 3, 5, 9, 7, 9)
VEC_EQUAL_2 = (1, 3, 1, 1, 7, 11, 11, 1)
VEC_MIDPOINT = (2, 4, 1, 2, 6, 10, 9, 5)

FOURCYCLE_COMPONENT_FACETS = ((3, 4), (2, 3), (1, 4), (1, 2))

RP2_FACETS = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


def fourcycle_decomposition(vec8) -> Decomposition:
    cx = fourcycle_complex()
    comps = {}
    it = iter(vec8)
    for f in FOURCYCLE_COMPONENT_FACETS:
        comps[f] = irreducible_ideal(4, f, (next(it), next(it)))
    return Decomposition(cx, comps)


@pytest.fixture(scope="session")
def fourcycle() -> Complex:
    return fourcycle_complex()


@pytest.fixture(scope="session")
def rp2() -> Complex:
    return Complex(6, RP2_FACETS)


@pytest.fixture(scope="session")
def two_big_facets() -> Complex:
    return Complex(8, [(1, 2, 3, 4, 5), (1, 2, 6, 7, 8)])


# -- seeded random corpora -------------------------------------------------------

def random_pure_complex(rng: random.Random, n_max=7, r_max=5) -> Complex:
    n = rng.randint(2, n_max)
    d = rng.randint(1, max(1, n - 1))
    all_facets = list(combinations(range(1, n + 1), d))
    r = rng.randint(1, min(r_max, len(all_facets)))
    return Complex(n, rng.sample(all_facets, r))


def random_ideal(rng: random.Random, n_max=4, gens_max=6, exp_max=3) -> MonomialIdeal:
    n = rng.randint(1, n_max)
    while True:
        gens = []
        for _ in range(rng.randint(1, gens_max)):
            g = tuple(rng.randint(0, exp_max) for _ in range(n))
            if any(g):
                gens.append(g)
        if gens:
            return MonomialIdeal(n, gens)


def random_primary(rng: random.Random, n: int, facet, exp_max=3) -> MonomialIdeal:
    """Random P_F-primary ideal: mandatory pure powers plus optional extras."""
    comp = [j for j in range(1, n + 1) if j not in set(facet)]
    gens = []
    for j in comp:
        vec = [0] * n
        vec[j - 1] = rng.randint(1, exp_max)
        gens.append(tuple(vec))
    for _ in range(rng.randint(0, 2)):
        vec = [0] * n
        for j in comp:
            vec[j - 1] = rng.randint(0, exp_max)
        if any(vec):
            gens.append(tuple(vec))
    return MonomialIdeal(n, gens)


def random_decomposition(rng: random.Random, n_max=5, r_max=4, exp_max=3) -> Decomposition:
    cx = random_pure_complex(rng, n_max=n_max, r_max=r_max)
    comps = []
    for f in cx.facets:
        style = rng.random()
        if style < 0.4:
            exps = [rng.randint(1, exp_max) for _ in range(cx.n - len(f))]
            comps.append(irreducible_ideal(cx.n, f, exps))
        elif style < 0.7:
            comps.append(prime_power_ideal(cx.n, f, rng.randint(1, exp_max)))
        else:
            comps.append(random_primary(rng, cx.n, f, exp_max))
    return Decomposition(cx, comps)
