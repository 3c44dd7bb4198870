"""Graded bases, homogeneity, and even linear maps."""

import random
from fractions import Fraction

import pytest

from homly.errors import DimensionMismatch, EvennessViolation, ValidationError
from homly.field import ScalarDomain, parse_scalar
from homly.superspace import LinearMap, SuperBasis, parity_of
from homly.catalog import OSP_BASIS, SLY31_BASIS, instantiate

Q = ScalarDomain.Q
QL = ScalarDomain.QL


class TestSuperBasis:
    def test_duplicate_names_rejected(self):
        with pytest.raises(ValidationError):
            SuperBasis([("a", 0), ("a", 1)])

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            SuperBasis([])

    def test_bad_parity_rejected(self):
        with pytest.raises(ValidationError):
            SuperBasis([("a", 2)])

    def test_mixed_order_allowed(self):
        basis = SuperBasis([("f", 1), ("a", 0), ("g", 1)])
        assert basis.parities == (1, 0, 1)

    def test_unknown_name(self):
        with pytest.raises(ValidationError):
            OSP_BASIS.index("Z")


class TestParityOf:
    def test_basis_vector_is_homogeneous(self):
        v = OSP_BASIS.vector({"H": "1"}, Q)
        assert parity_of(OSP_BASIS, v) == 0

    def test_zero_vector_is_even_by_convention(self):
        assert parity_of(OSP_BASIS, OSP_BASIS.zero_vector(Q)) == 0

    def test_mixed_vector(self):
        v = OSP_BASIS.vector({"H": "1", "F": "1"}, Q)
        assert parity_of(OSP_BASIS, v) is None

    def test_odd_combination(self):
        v = OSP_BASIS.vector({"F": "2", "G": "-1/3"}, Q)
        assert parity_of(OSP_BASIS, v) == 1


class TestLinearMap:
    def test_evenness_enforced(self):
        with pytest.raises(EvennessViolation):
            LinearMap.from_images(OSP_BASIS, Q, {"H": {"F": "1"}})

    def test_identity_applies_trivially(self):
        ident = LinearMap.identity(OSP_BASIS, Q)
        v = OSP_BASIS.vector({"H": "1", "X": "-2/3"}, Q)
        assert ident.apply(v) == v
        assert ident.is_identity()

    def test_alpha_lambda_on_x(self):
        amap = instantiate("alpha_lambda")
        v = OSP_BASIS.vector({"X": "1"}, QL)
        assert amap.apply(v) == OSP_BASIS.vector({"X": "l^2"}, QL)

    def test_alpha_lambda_at_two_on_f(self):
        amap = instantiate("alpha_lambda", {"l": 2})
        v = OSP_BASIS.vector({"F": "1"}, Q)
        assert amap.apply(v) == OSP_BASIS.vector({"F": "1/2"}, Q)

    def test_dimension_mismatch(self):
        amap = instantiate("alpha_lambda")
        with pytest.raises(DimensionMismatch):
            amap.apply((parse_scalar("1", QL),))

    def test_compose_squares_diagonal(self):
        amap = instantiate("alpha_lambda")
        square = amap.compose(amap)
        v = OSP_BASIS.vector({"X": "1"}, QL)
        assert square.apply(v) == OSP_BASIS.vector({"X": "l^4"}, QL)

    def test_compose_identity_is_neutral(self):
        amap = instantiate("alpha_lambda")
        ident = LinearMap.identity(OSP_BASIS, QL)
        assert ident.compose(amap) == amap
        assert amap.compose(ident) == amap

    def test_power_zero_is_identity(self):
        amap = instantiate("alpha_lambda")
        assert amap.power(0) == LinearMap.identity(OSP_BASIS, QL)

    def test_power_of_identity(self):
        ident = LinearMap.identity(OSP_BASIS, Q)
        assert ident.power(7) == ident

    def test_power_two_on_y(self):
        amap = instantiate("alpha_lambda")
        v = OSP_BASIS.vector({"Y": "1"}, QL)
        assert amap.power(2).apply(v) == OSP_BASIS.vector({"Y": "1/l^4"}, QL)

    def test_power_addition_law(self):
        amap = instantiate("alpha1", {"a": 1, "b": 2, "c": -1})
        rng = random.Random(7)
        for _ in range(5):
            ka, kb = rng.randint(0, 4), rng.randint(0, 4)
            assert amap.power(ka + kb) == amap.power(ka).compose(amap.power(kb))

    def test_commutation(self):
        ident = LinearMap.identity(SLY31_BASIS, Q)
        a = instantiate("alpha1", {"a": 1, "b": 1, "c": 0})
        b = instantiate("alpha1", {"a": 1, "b": 0, "c": 1})
        assert ident.commutes_with(a)
        assert a.commutes_with(a)
        # both shift e3 inside the even block; products agree either way
        assert a.commutes_with(b)
        both = a.compose(b)
        assert both.apply(SLY31_BASIS.vector({"e3": "1"}, Q)) == SLY31_BASIS.vector(
            {"e1": "1", "e2": "1", "e3": "1"}, Q
        )

    def test_evenness_closed_under_composition_and_powers(self):
        rng = random.Random(11)
        basis = SuperBasis([("a", 0), ("f", 1), ("b", 0), ("g", 1)])
        parities = basis.parities

        def random_even_map():
            cols = []
            for j in range(basis.dim):
                col = [
                    Fraction(rng.randint(-3, 3))
                    if parities[i] == parities[j]
                    else Fraction(0)
                    for i in range(basis.dim)
                ]
                cols.append(col)
            return LinearMap(basis, Q, cols)

        for _ in range(10):
            f, g = random_even_map(), random_even_map()
            for result in (f.compose(g), f.power(3)):
                for j, col in enumerate(result.columns):
                    for i, entry in enumerate(col):
                        if parities[i] != parities[j]:
                            assert not entry

    def test_even_maps_preserve_parity(self):
        amap = instantiate("alpha_lambda")
        for name in OSP_BASIS.names:
            v = OSP_BASIS.vector({name: "1"}, QL)
            assert parity_of(OSP_BASIS, amap.apply(v)) == parity_of(OSP_BASIS, v)

    def test_evaluate_and_lift(self):
        amap = instantiate("alpha_lambda")
        at2 = amap.evaluate_at(2)
        assert at2.domain is Q
        assert at2.apply(OSP_BASIS.vector({"G": "1"}, Q)) == OSP_BASIS.vector({"G": "2"}, Q)
        lifted = at2.lift()
        assert lifted.domain is QL
