import pytest

from capdiagrams.diagrams import (arrow_diagram, diagram_string,
                                  diagram_to_weight, is_dot_conjugate,
                                  normalise_shift, preceq, preceq_oracle,
                                  preceq_witness, string_to_weight, wall_move)
from capdiagrams.errors import InvalidParams
from capdiagrams.verify import lambda_s1s2, s_param_range
from capdiagrams.weights import to_tuple, weight, weight_size

from oracles import dot_orbit_reachable

LAM5 = weight(7, (3, 2), (2, 1, 1))          # running p=5, n=7, s1=2, s2=3 weight
BELOW5 = [weight(7, (2, 2), (1, 1, 1)), weight(7, (3, 1), (2, 1)),
          weight(7, (2, 1), (1, 1)), weight(7, (3,), (2,)),
          weight(7, (2,), (1,))]


def test_arrow_diagram_44():
    ds = diagram_string(weight(5, (4,), (4,)), 1, 1, 5)
    assert ds.compact() == "OOVOA"
    assert ds.shift == 0 and ds.split == 2


def test_arrow_diagram_24():
    assert diagram_string(weight(5, (2,), (4,)), 1, 1, 5).compact() == "OOXOO"


def test_arrow_diagram_rank7():
    d = arrow_diagram(LAM5, 2, 3, 5)
    assert d.below == (1, 0, 0, 1, 0)          # labels 0 and 3
    assert d.above == (0, 1, 1, 0, 1)          # labels 1, 2 and 4
    ds = normalise_shift(d)
    assert ds.shift == 1 and ds.split == 3
    assert ds.compact() == "VVAVA"
    assert [ds.label_at(k) for k in range(5)] == [1, 2, 3, 4, 0]


def test_arrow_diagram_p17():
    lam = weight(20, (9, 6, 5, 4, 4, 2), (8, 8, 4, 3, 3, 2))
    ds = diagram_string(lam, 8, 7, 17)
    assert ds.shift == 13
    assert ds.compact() == "AAOVAVVAXOAVAOVVA"
    d = arrow_diagram(lam, 8, 7, 17)
    assert [g for g in range(17) if d.below[g] + d.above[g] == 0] == [5, 9, 15]


def test_arrow_diagram_param_guards():
    with pytest.raises(InvalidParams):
        arrow_diagram(LAM5, 1, 3, 5)       # s1 < l(lambda1)
    with pytest.raises(InvalidParams):
        arrow_diagram(weight(4, (1,)), 2, 3, 5)    # s1 + s2 > n


def test_walls_in_same_gap():
    # n = s1 + s2 puts both walls in the boundary gap
    ds = diagram_string(weight(5, (2, 1), (1,)), 2, 3, 5)
    assert ds.split is None


def test_roundtrip_exhaustive():
    for p in (2, 3, 5, 7):
        for n in range(2, 9):
            for s1, s2 in s_param_range(n, p, n):
                for lam in lambda_s1s2(n, s1, s2, p):
                    d = arrow_diagram(lam, s1, s2, p)
                    assert diagram_to_weight(d) == lam
                    assert string_to_weight(normalise_shift(d)) == lam


def test_dot_conjugate_examples():
    a, b = weight(5, (4,), (4,)), weight(5, (2,), (2,))
    assert is_dot_conjugate(a, a, 1, 1, 5)
    assert is_dot_conjugate(a, b, 1, 1, 5)
    assert not is_dot_conjugate(a, weight(5, (3,), (4,)), 1, 1, 5)


def test_dot_conjugate_against_orbit_bfs():
    p = 3
    pool = [w for w in lambda_s1s2(4, 1, 1, p)] + [
        weight(4, (2, 1), (1,)), weight(4, (1, 1), (2,))]
    for lam in pool:
        for mu in pool:
            if len(lam.lambda1) > 1 or len(mu.lambda1) > 1:
                s1 = 2
            else:
                s1 = 1
            if len(lam.lambda2) > 1 or len(mu.lambda2) > 1:
                s2 = 2
            else:
                s2 = 1
            claimed = is_dot_conjugate(lam, mu, s1, s2, p)
            found = dot_orbit_reachable(lam, mu, p, level_bound=2, coord_bound=6)
            assert claimed == found, (lam, mu)


def test_preceq_reflexive_and_size_guard():
    assert preceq(LAM5, LAM5, 2, 3, 5)
    other = weight(7, (3, 2), (2, 2, 1))       # different coordinate sum
    assert weight_size(other) != weight_size(LAM5)
    assert not preceq(other, LAM5, 2, 3, 5)


def test_preceq_strict_lower_set():
    strictly_below = [mu for mu in lambda_s1s2(7, 2, 3, 5)
                      if mu != LAM5 and preceq(mu, LAM5, 2, 3, 5)]
    assert sorted(strictly_below, key=to_tuple) == sorted(BELOW5, key=to_tuple)


def test_preceq_oracle_on_rank7_block():
    assert preceq_oracle(LAM5, LAM5, 5)
    for mu in BELOW5:
        assert preceq_oracle(mu, LAM5, 5)
    assert not preceq_oracle(weight(7, (3, 2), (2, 2, 1)), LAM5, 5)


def test_preceq_matches_oracle_small():
    for p, ns in ((2, (3, 4, 5)), (3, (3, 4, 5)), (7, (4,))):
        for n in ns:
            for s1, s2 in s_param_range(n, p, n):
                pool = list(lambda_s1s2(n, s1, s2, p))
                for lam in pool:
                    for mu in pool:
                        assert (preceq(mu, lam, s1, s2, p)
                                == preceq_oracle(mu, lam, p)), (lam, mu, s1, s2, p)


def test_preceq_implies_conjugate_and_contained():
    for lam in lambda_s1s2(6, 2, 2, 5):
        for mu in lambda_s1s2(6, 2, 2, 5):
            if preceq(mu, lam, 2, 2, 5):
                assert is_dot_conjugate(lam, mu, 2, 2, 5)
                assert weight_size(mu) == weight_size(lam)
                for big, small in ((lam.lambda1, mu.lambda1),
                                   (lam.lambda2, mu.lambda2)):
                    assert all(small[i] <= big[i] for i in range(len(small)))


def test_preceq_witness_chain():
    chain = preceq_witness(weight(7, (2,), (1,)), LAM5, 2, 3, 5)
    assert chain[0] == LAM5 and chain[-1] == weight(7, (2,), (1,))
    for a, b in zip(chain, chain[1:]):
        assert preceq(b, a, 2, 3, 5)
    assert preceq_witness(weight(7, (3, 2), (2, 2, 1)), LAM5, 2, 3, 5) is None


def test_wall_move_below_right():
    lam = weight(7, (3,), (2, 1))
    d = arrow_diagram(lam, 2, 3, 5)
    moved = wall_move(d, "below", "right")
    assert moved is not None and moved.s1 == 1
    assert diagram_to_weight(moved) == lam
    # with the wall flush against the arrows the move is blocked
    assert wall_move(arrow_diagram(LAM5, 2, 3, 5), "below", "right") is None


def test_wall_move_below_left_blocked_at_box_edge():
    lam = weight(7, (3,), (2, 1))              # lambda1_1 = 3 = p - s1
    assert wall_move(arrow_diagram(lam, 2, 3, 5), "below", "left") is None


def test_wall_move_roundtrips_and_preserves_weight():
    for lam in lambda_s1s2(7, 2, 3, 5):
        d = arrow_diagram(lam, 2, 3, 5)
        for which in ("below", "above"):
            for direction in ("left", "right"):
                moved = wall_move(d, which, direction)
                if moved is None:
                    continue
                assert diagram_to_weight(moved) == lam, (lam, which, direction)
                back = wall_move(moved, which,
                                 "left" if direction == "right" else "right")
                assert back == d, (lam, which, direction)
