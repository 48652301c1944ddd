import numpy as np
import pytest

from posetdim.dimension import dimension, has_dim_at_most, restrict_realizer, verify_realizer
from posetdim.extremal import ex_star_max_dim, greedy_seed, verify_theorem1_instance
from posetdim.invariants import goodwillie_subposet
from posetdim.poset import (
    antichain,
    boolean_lattice,
    chain,
    disjoint_union,
    induced,
    lex_power,
    lex_product,
    standard_example,
)

from conftest import random_corpus
from oracles import brute_ex_star


def certified(p, res):
    sub = induced(p, res.witness)
    return len(res.witness) == res.value and res.certificate.d <= res.d and verify_realizer(sub, res.certificate)


@pytest.mark.parametrize(
    "p, d, value",
    [
        (boolean_lattice(3), 2, 7),
        (standard_example(3), 2, 5),
        (antichain(7), 2, 7),
        (chain(9), 2, 9),
        (boolean_lattice(4), 2, 12),
        (antichain(0), 2, 0),
        (antichain(5), 1, 1),
        (boolean_lattice(3), 1, 4),
    ],
)
def test_examples(p, d, value):
    res = ex_star_max_dim(p, d)
    assert res.exact and res.value == value and certified(p, res)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("d", [3, 4])
def test_standard_example_general_d(m, d):
    # drives the m + d value used by the digit bound for d >= 3
    expected = 2 * m if d >= m else m + d
    res = ex_star_max_dim(standard_example(m), d)
    assert res.exact and res.value == expected and certified(standard_example(m), res)


def test_greedy_seed_examples():
    assert greedy_seed(antichain(5), 2) == (0, 1, 2, 3, 4)
    assert len(greedy_seed(boolean_lattice(3), 2)) >= 6
    assert greedy_seed(chain(4), 2) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        greedy_seed(chain(4), 1)


CORPUS = random_corpus(50, 10, seed=31, n_min=4)


@pytest.mark.parametrize("params, p", CORPUS, ids=[str(c[0]) for c in CORPUS])
def test_greedy_seed_dominates_extraction(params, p):
    for d in (2, 3):
        seed = greedy_seed(p, d)
        assert len(seed) >= len(goodwillie_subposet(p, d).subset)
        assert has_dim_at_most(induced(p, seed), d)[0]


@pytest.mark.parametrize("params, p", CORPUS, ids=[str(c[0]) for c in CORPUS])
def test_matches_exhaustive_maximum(params, p):
    expected = brute_ex_star(p, 2)
    for decompose in (True, False):
        res = ex_star_max_dim(p, 2, decompose=decompose)
        assert res.exact and res.value == expected and certified(p, res)


@pytest.mark.parametrize("params, p", CORPUS[:30], ids=[str(c[0]) for c in CORPUS[:30]])
def test_value_structure(params, p):
    values = [ex_star_max_dim(p, d).value for d in (1, 2, 3)]
    assert values == sorted(values)
    dim = dimension(p)
    for d, v in zip((1, 2, 3), values):
        assert (v == p.n) == (dim <= d)


@pytest.mark.parametrize("params, p", CORPUS[:30], ids=[str(c[0]) for c in CORPUS[:30]])
def test_witness_is_hereditary(params, p):
    res = ex_star_max_dim(p, 2)
    rng = np.random.default_rng(params[2])
    for _ in range(10):
        keep = [i for i in range(res.value) if rng.random() < 0.5]
        sub = induced(p, [res.witness[i] for i in keep])
        assert verify_realizer(sub, restrict_realizer(res.certificate, keep))


@pytest.mark.parametrize(
    "parts",
    [
        (standard_example(3), standard_example(3)),
        (boolean_lattice(3), chain(3)),
        (standard_example(4), boolean_lattice(2), antichain(2)),
    ],
)
def test_disjoint_union_additivity(parts):
    total = sum(ex_star_max_dim(q, 2).value for q in parts)
    u = disjoint_union(*parts)
    assert ex_star_max_dim(u, 2).value == total
    assert ex_star_max_dim(u, 2, decompose=False).value == total


@pytest.mark.parametrize(
    "p",
    [lex_power(standard_example(2), 2), lex_product(standard_example(3), chain(2)), lex_product(chain(2), boolean_lattice(3))],
)
def test_decomposition_agrees_with_plain_search(p):
    a = ex_star_max_dim(p, 2)
    b = ex_star_max_dim(p, 2, decompose=False)
    assert a.exact and b.exact and a.value == b.value
    assert certified(p, a) and certified(p, b)


def test_budget_exhaustion_still_certified():
    p = boolean_lattice(5)
    res = ex_star_max_dim(p, 2, budget=50)
    assert not res.exact
    assert res.value >= len(goodwillie_subposet(p, 2).subset)
    assert certified(p, res)


def test_deterministic_witness():
    a = ex_star_max_dim(boolean_lattice(4), 2)
    b = ex_star_max_dim(boolean_lattice(4), 2)
    assert a.witness == b.witness and a.certificate == b.certificate


def test_theorem1_examples():
    rep = verify_theorem1_instance(chain(2), 2, 3)
    assert rep.lhs.value == 8 and rep.rhs == 8 and rep.holds
    rep = verify_theorem1_instance(standard_example(2), 2, 2)
    assert rep.rhs == 16 and rep.lhs.value <= 16 and rep.holds and rep.lhs.exact
    rep = verify_theorem1_instance(standard_example(3), 2, 2)
    assert rep.rhs == 25 and rep.lhs.exact and rep.holds
