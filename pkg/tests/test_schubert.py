import itertools
import json
import random

import numpy as np
import pytest

import bruteforce as bf
from qgrass.errors import DiscrepancyError
from qgrass.field import make_field
from qgrass.grassmann import (
    Flag,
    enumerate_grassmannian,
    random_flag,
    standard_flag,
)
from qgrass.linalg import Subspace
from qgrass.schubert import (
    SchubertVariety,
    alpha_nc,
    cell_count_polynomial,
    condition_word,
    dual_index_set,
    equal_fast,
    equal_oracle,
    equality_witness,
    polynomial_value,
)

# point counts over GF(2), ambient dimension 4, points of dimension 2,
# one per dimension tuple; frozen from the enumeration oracle below
COUNTS_M4_L2_Q2 = {
    (1, 2): 1,
    (1, 3): 3,
    (1, 4): 7,
    (2, 3): 7,
    (2, 4): 19,
    (3, 4): 35,
}


def test_alpha_nc():
    assert alpha_nc((2, 4)) == (2, 4)
    assert alpha_nc((1, 2, 3)) == (3,)
    assert alpha_nc((1, 3, 4)) == (1, 4)
    assert alpha_nc((2,)) == (2,)
    assert alpha_nc((1, 2, 4, 5, 7)) == (2, 5, 7)


def test_condition_word():
    assert condition_word((2, 4), 4) == (0, 1, 1, 2)
    assert condition_word((1, 3), 4) == (1, 1, 2, 2)
    assert condition_word((1, 2, 3), 3) == (1, 2, 3)


def test_dual_index_set():
    assert dual_index_set((1, 4), 4) == (2, 3)
    assert dual_index_set((2, 3), 4) == (1, 4)
    self_dual = [
        a
        for l in (1, 2, 3)
        for a in itertools.combinations(range(1, 5), l)
        if dual_index_set(a, 4) == a
    ]
    assert self_dual == [(1, 2), (1, 3), (2, 4), (3, 4)]
    # reflection of the complement is an involution
    for l in (1, 2):
        for a in itertools.combinations(range(1, 6), l):
            d = dual_index_set(a, 6)
            assert len(d) == 6 - l
            assert dual_index_set(d, 6) == a


def test_cell_count_polynomial_frozen():
    assert cell_count_polynomial((2, 4), 4) == (1, 1, 2, 1)
    assert polynomial_value((1, 1, 2, 1), 2) == 19
    assert cell_count_polynomial((1, 4), 4) == (1, 1, 1)
    assert cell_count_polynomial((2, 3), 4) == (1, 1, 1)
    # the full variety recovers the whole Grassmannian count
    assert cell_count_polynomial((3, 4), 4) == bf.q_binomial_poly(4, 2)
    assert cell_count_polynomial((2, 3, 4), 4) == bf.q_binomial_poly(4, 3)


@pytest.mark.parametrize("q", [2, 3])
def test_counts_match_enumeration_m4(q):
    gf = make_field(q)
    for alpha in itertools.combinations(range(1, 5), 2):
        omega = SchubertVariety.standard(gf, 4, alpha)
        expect = polynomial_value(cell_count_polynomial(alpha, 4), q)
        assert omega.count_points() == expect
        if q == 2:
            assert expect == COUNTS_M4_L2_Q2[alpha]


def test_point_count_tie_exists():
    # distinct dimension tuples can share a point count: these two do
    assert COUNTS_M4_L2_Q2[(1, 4)] == COUNTS_M4_L2_Q2[(2, 3)] == 7


def test_counts_are_flag_independent(gf2, gf3):
    for gf, seed in [(gf2, 1), (gf3, 2)]:
        for alpha in [(1, 3), (2, 4), (1, 2, 4)]:
            std = SchubertVariety.standard(gf, 4, alpha)
            rnd = SchubertVariety(random_flag(gf, 4, alpha, rng=seed))
            assert std.count_points() == rnd.count_points()


def test_membership_matches_span_set_oracle(gf2):
    omega = SchubertVariety.standard(gf2, 4, (2, 4))
    a1 = bf.span_set([[1, 0, 0, 0], [0, 1, 0, 0]], 2, 4)
    pts = []
    for W in bf.naive_subspaces(4, 2, 2):
        if len(W & a1) >= 2:  # spans meet in dimension >= 1
            pts.append(W)
    assert len(pts) == 19
    got = {
        frozenset(tuple(map(int, v)) for v in W.vectors())
        for W in omega.points()
    }
    assert got == set(pts)


def test_minimal_and_full_conditions_agree(gf2):
    rng = random.Random(13)
    for alpha in [(1, 2), (1, 3), (1, 2, 4), (2, 3, 4)]:
        omega = SchubertVariety(random_flag(gf2, 4, alpha, rng=rng.randrange(2**30)))
        assert len(omega.minimal_conditions()) == len(omega.alpha_nc)
        for W in enumerate_grassmannian(gf2, 4, len(alpha)):
            assert omega.contains(W, "minimal") == omega.contains(W, "all")


def test_contains_validates_input(gf2, gf3):
    omega = SchubertVariety.standard(gf2, 4, (1, 3))
    with pytest.raises(ValueError):
        omega.contains(Subspace.zero(gf2, 4))  # wrong dimension
    with pytest.raises(ValueError):
        omega.contains(Subspace.from_rows(gf3, [[1, 0, 0, 0], [0, 1, 0, 0]], ambient=4))
    with pytest.raises(ValueError):
        omega.contains(next(iter(omega.points())), conditions="bogus")
    with pytest.raises(TypeError):
        omega.contains([[1, 0, 0, 0]])


def test_redundant_member_does_not_matter(gf2):
    a2 = Subspace.from_rows(gf2, [[1, 0, 0, 0], [0, 1, 0, 0]], ambient=4)
    f1 = Flag(gf2, 4, (1, 2), (Subspace.from_rows(gf2, [[1, 0, 0, 0]], ambient=4), a2))
    f2 = Flag(gf2, 4, (1, 2), (Subspace.from_rows(gf2, [[0, 1, 0, 0]], ambient=4), a2))
    o1, o2 = SchubertVariety(f1), SchubertVariety(f2)
    assert o1.flag != o2.flag
    assert equal_fast(o1, o2)
    assert equal_oracle(o1, o2)
    assert equal_fast(o1, o2, defensive=True)
    assert equality_witness(o1, o2) is None
    assert o1.point_set() == frozenset({a2})


def test_nonredundant_member_matters(gf2):
    # same top member, different bottom member at a non-redundant spot
    f1 = standard_flag(gf2, 4, (1, 4))
    moved = Subspace.from_rows(gf2, [[0, 1, 0, 0]], ambient=4)
    f2 = Flag(gf2, 4, (1, 4), (moved, f1[1]))
    o1, o2 = SchubertVariety(f1), SchubertVariety(f2)
    assert not equal_fast(o1, o2)
    assert not equal_oracle(o1, o2)
    W = equality_witness(o1, o2)
    assert W is not None
    assert o1.contains(W) != o2.contains(W)


def test_witness_at_top_condition(gf2):
    f1 = standard_flag(gf2, 4, (1, 3))
    rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    f2 = Flag(gf2, 4, (1, 3), (f1[0], Subspace.from_rows(gf2, rows, ambient=4)))
    o1, o2 = SchubertVariety(f1), SchubertVariety(f2)
    W = equality_witness(o1, o2)
    assert W is not None and W.dim == 2
    assert o1.contains(W) != o2.contains(W)


def test_witness_for_distinct_dimension_tuples(gf2):
    o1 = SchubertVariety.standard(gf2, 4, (1, 2))
    o2 = SchubertVariety.standard(gf2, 4, (1, 3))
    assert not equal_fast(o1, o2)
    W = equality_witness(o1, o2)
    assert o1.contains(W) != o2.contains(W)


def test_defensive_mode_catches_a_lying_fast_path(gf2, monkeypatch):
    f1 = standard_flag(gf2, 4, (1, 4))
    f2 = Flag(
        gf2,
        4,
        (1, 4),
        (Subspace.from_rows(gf2, [[0, 1, 0, 0]], ambient=4), f1[1]),
    )
    o1, o2 = SchubertVariety(f1), SchubertVariety(f2)
    o1.point_set()
    o2.point_set()  # cache honest enumerations before sabotaging
    # sabotage: pretend nothing is non-redundant, so the fast path
    # compares no members at all and wrongly reports equality
    monkeypatch.setattr(type(o1), "alpha_nc", property(lambda self: ()))
    with pytest.raises(DiscrepancyError):
        equal_fast(o1, o2, defensive=True)


def test_variety_json_round_trip(gf3):
    omega = SchubertVariety(random_flag(gf3, 4, (2, 3), rng=8))
    data = omega.to_json_dict()
    text = json.dumps(data, sort_keys=True)
    back = SchubertVariety.from_json_dict(json.loads(text))
    assert back == omega
    # a bare flag payload is accepted too
    back2 = SchubertVariety.from_json_dict(omega.flag.to_json_dict())
    assert back2 == omega
    bad = dict(data)
    bad["alpha"] = [1, 2]
    with pytest.raises(ValueError):
        SchubertVariety.from_json_dict(bad)


def test_descriptor_identity(gf2):
    o1 = SchubertVariety.standard(gf2, 4, (1, 3))
    o2 = SchubertVariety.standard(gf2, 4, (1, 3))
    assert o1 == o2 and hash(o1) == hash(o2)
    o3 = SchubertVariety(random_flag(gf2, 4, (1, 3), rng=3))
    assert o1 != o3 or o1.flag == o3.flag
    with pytest.raises(ValueError):
        SchubertVariety(Flag(gf2, 4, (), ()))
    with pytest.raises(ValueError):
        equal_fast(o1, SchubertVariety.standard(make_field(3), 4, (1, 3)))
