import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from indsat.graphs import find_induced, path_graph
from indsat.oracles import (QuadValue, RATIONAL_GEOMETRIC_KIND,
                            TORERO_KIND, UP_RIGHT_KIND, Z3_AGREE_KIND,
                            _PI_CONVERGENTS, compare_to_pi, fraction_from_str,
                            fraction_to_str, grid_clique, kind_from_json,
                            kind_to_json, oracle_adjacent, oracle_window,
                            pi_bounds, vertex_from_json, vertex_to_json)

mpmath.mp.dps = 60
_PI = mpmath.pi


def _frac(a, b=1):
    return Fraction(a, b)


class TestQuadValue:
    def test_sign_against_mpmath(self):
        rng = random.Random(5)
        for _ in range(500):
            a = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            b = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            val = mpmath.mpf(a.numerator) / a.denominator + \
                (mpmath.mpf(b.numerator) / b.denominator) * mpmath.sqrt(2)
            want = 0 if val == 0 else (1 if val > 0 else -1)
            assert QuadValue(a, b).sign() == want

    def test_exact_zero(self):
        assert QuadValue(_frac(0), _frac(0)).sign() == 0

    @given(st.fractions(min_value=-10, max_value=10),
           st.fractions(min_value=-10, max_value=10),
           st.fractions(min_value=-10, max_value=10),
           st.fractions(min_value=-10, max_value=10))
    @settings(max_examples=200, deadline=None)
    def test_order_is_strict_total(self, a, b, c, d):
        x, y = QuadValue(a, b), QuadValue(c, d)
        assert (x < y) + (y < x) + (x == y) == 1


class TestPi:
    def test_convergents_alternate_around_pi(self):
        for i, c in enumerate(_PI_CONVERGENTS):
            approx = mpmath.mpf(c.numerator) / c.denominator
            if i % 2 == 0:
                assert approx < _PI
            else:
                assert approx > _PI

    def test_bounds_nest(self):
        lo0, hi0 = pi_bounds(0)
        lo1, hi1 = pi_bounds(1)
        assert lo0 <= lo1 < hi1 <= hi0
        assert Fraction(333, 106) in (lo1, hi1) or lo1 >= Fraction(333, 106)

    def test_compare_examples(self):
        assert compare_to_pi(_frac(3)) == -1
        assert compare_to_pi(_frac(4)) == 1
        assert compare_to_pi(Fraction(355, 113)) == 1
        assert compare_to_pi(Fraction(333, 106)) == -1
        assert compare_to_pi(Fraction(103993, 33102)) == -1

    @given(st.fractions(min_value=0, max_value=10))
    @settings(max_examples=300, deadline=None)
    def test_compare_against_mpmath(self, q):
        want = -1 if mpmath.mpf(q.numerator) / q.denominator < _PI else 1
        assert compare_to_pi(q) == want


class TestAdjacency:
    def test_up_right_examples(self):
        z = (_frac(0), _frac(0))
        assert oracle_adjacent(UP_RIGHT_KIND, z, (_frac(1), _frac(0)))
        assert not oracle_adjacent(UP_RIGHT_KIND, z, (_frac(0), _frac(1)))

    def test_rational_geometric_examples(self):
        assert oracle_adjacent(RATIONAL_GEOMETRIC_KIND, _frac(0), _frac(3))
        assert not oracle_adjacent(RATIONAL_GEOMETRIC_KIND, _frac(0), _frac(4))

    def test_z3_examples(self):
        a = ((0, 1, 3), 0)
        assert oracle_adjacent(Z3_AGREE_KIND, a, ((0, 1, 1), 0))
        assert not oracle_adjacent(Z3_AGREE_KIND, a, ((3, 0, 2), 0))
        # Clones of the same point are adjacent.
        assert oracle_adjacent(Z3_AGREE_KIND, ((1, 0, 1), 0), ((1, 0, 1), 1))

    def test_grid_examples(self):
        k = grid_clique(2)
        assert oracle_adjacent(k, (0, 0), (5, 0))
        assert not oracle_adjacent(k, (0, 0), (1, 1))

    def test_torero(self):
        assert oracle_adjacent(TORERO_KIND, _frac(3, 5), _frac(1, 2))
        assert not oracle_adjacent(TORERO_KIND, _frac(2, 5), _frac(1, 2))

    def test_kind_checking(self):
        with pytest.raises(ValueError):
            oracle_adjacent(TORERO_KIND, _frac(3, 2), _frac(1, 2))  # outside (0,1)
        with pytest.raises(ValueError):
            oracle_adjacent(UP_RIGHT_KIND, _frac(1, 2), _frac(1, 3))
        with pytest.raises(ValueError):
            oracle_adjacent(TORERO_KIND, _frac(1, 2), _frac(1, 2))  # not distinct


class TestWindows:
    def test_torero_window_p4_free_seeded(self):
        from indsat.verifier import sample_window
        rng = random.Random(424)
        p4 = path_graph(4)
        for _ in range(200):
            vals = sample_window(TORERO_KIND, rng.randint(2, 10), rng)
            window, _ = oracle_window(TORERO_KIND, vals)
            assert find_induced(window, p4) is None

    def test_duplicate_vertices_rejected(self):
        with pytest.raises(ValueError):
            oracle_window(TORERO_KIND, [_frac(1, 2), _frac(1, 2)])

    def test_up_right_window_is_permutation_graph_seeded(self):
        from indsat.recognizers import is_permutation_graph
        from indsat.verifier import sample_window
        rng = random.Random(77)
        for _ in range(60):
            vals = sample_window(UP_RIGHT_KIND, rng.randint(2, 8), rng)
            window, _ = oracle_window(UP_RIGHT_KIND, vals)
            assert is_permutation_graph(window) is not None


class TestSerialization:
    def test_fraction_strings(self):
        assert fraction_to_str(_frac(-3, 7)) == "-3/7"
        assert fraction_from_str("-3/7") == _frac(-3, 7)

    def test_vertex_round_trip(self):
        cases = [(UP_RIGHT_KIND, (_frac(1, 2), _frac(-3, 4))),
                 (TORERO_KIND, _frac(2, 5)),
                 (RATIONAL_GEOMETRIC_KIND, _frac(22, 7)),
                 (grid_clique(3), (1, -2, 0)),
                 (Z3_AGREE_KIND, ((0, 1, 3), 2))]
        for kind, v in cases:
            assert vertex_from_json(kind, vertex_to_json(kind, v)) == v

    def test_kind_round_trip(self):
        for kind in (UP_RIGHT_KIND, TORERO_KIND, grid_clique(4), Z3_AGREE_KIND):
            assert kind_from_json(kind_to_json(kind)) == kind
