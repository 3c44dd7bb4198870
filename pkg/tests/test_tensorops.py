"""Structure-constant tensors: evaluation, composition, completion."""

import random
from fractions import Fraction

import pytest

from homly.axioms import is_endomorphism, is_multiplicative
from homly.catalog import OSP_BASIS, SLY31_BASIS, instantiate
from homly.errors import ConflictError, DimensionMismatch, EvennessViolation
from homly.field import ScalarDomain
from homly.superspace import LinearMap, vec_add, vec_scale
from homly.tensorops import (
    BinaryOp,
    TernaryOp,
    binary_from_entries,
    eval2,
    eval3,
    evaluate_algebra,
    lift_algebra,
    op_equal,
    outer2,
    outer3,
    ternary_from_entries,
)

Q = ScalarDomain.Q
QL = ScalarDomain.QL


class TestEval:
    def test_osp12_bracket_xy(self):
        osp = instantiate("osp12")
        x = osp.vector({"X": "1"})
        y = osp.vector({"Y": "1"})
        assert eval2(osp.binary, x, y) == osp.vector({"H": "1"})

    def test_bilinearity_zero(self):
        osp = instantiate("osp12")
        zero = osp.basis.zero_vector(Q)
        assert eval2(osp.binary, zero, osp.vector({"Y": "1"})) == zero

    def test_expand_by_bilinearity(self):
        # (H + X) * Y = [H,Y] + [X,Y] = -2Y + H
        osp = instantiate("osp12")
        hx = osp.vector({"H": "1", "X": "1"})
        assert eval2(osp.binary, hx, osp.vector({"Y": "1"})) == osp.vector(
            {"H": "1", "Y": "-2"}
        )

    def test_sly31_ternary_entry(self):
        alg = instantiate("sly31")
        e1 = alg.vector({"e1": "1"})
        e3 = alg.vector({"e3": "1"})
        assert eval3(alg.ternary, e1, e3, e3) == alg.vector({"e1": "2"})

    def test_trilinearity_zero(self):
        alg = instantiate("sly31")
        zero = alg.basis.zero_vector(Q)
        e3 = alg.vector({"e3": "1"})
        assert eval3(alg.ternary, e3, e3, zero) == zero

    def test_sly12_ternary_entry(self):
        alg = instantiate("sly12_lambda")
        h = alg.vector({"H": "1"})
        x = alg.vector({"X": "1"})
        y = alg.vector({"Y": "1"})
        assert eval3(alg.ternary, h, x, y) == alg.vector({"H": "2"})

    def test_dimension_mismatch(self):
        osp = instantiate("osp12")
        with pytest.raises(DimensionMismatch):
            eval2(osp.binary, (Fraction(1),), (Fraction(1),))


class TestMultilinearityOracle:
    def test_random_vectors_match_basis_expansion(self):
        # eval2/eval3 by contraction vs direct expansion over basis tuples
        osp = instantiate("osp12")
        alg31 = instantiate("sly31")
        rng = random.Random(2024)

        def rand_vec(basis):
            return tuple(
                Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                for _ in range(basis.dim)
            )

        for _ in range(25):
            x, y = rand_vec(OSP_BASIS), rand_vec(OSP_BASIS)
            expected = OSP_BASIS.zero_vector(Q)
            for i in range(OSP_BASIS.dim):
                for j in range(OSP_BASIS.dim):
                    coeff = x[i] * y[j]
                    if coeff:
                        expected = vec_add(
                            expected, vec_scale(coeff, osp.binary.value(i, j))
                        )
            assert eval2(osp.binary, x, y) == expected

        for _ in range(25):
            x, y, z = (rand_vec(SLY31_BASIS) for _ in range(3))
            expected = SLY31_BASIS.zero_vector(Q)
            for i in range(SLY31_BASIS.dim):
                for j in range(SLY31_BASIS.dim):
                    for k in range(SLY31_BASIS.dim):
                        coeff = x[i] * y[j] * z[k]
                        if coeff:
                            expected = vec_add(
                                expected,
                                vec_scale(coeff, alg31.ternary.value(i, j, k)),
                            )
            assert eval3(alg31.ternary, x, y, z) == expected


class TestOuterComposition:
    def test_outer2_identity(self):
        osp = instantiate("osp12")
        ident = LinearMap.identity(OSP_BASIS, Q)
        assert op_equal(outer2(ident, osp.binary), osp.binary)

    def test_outer2_alpha_lambda_on_hf(self):
        # alpha_lambda([H,F]) = alpha_lambda(-F) = -(1/l) F
        osp = lift_algebra(instantiate("osp12"))
        amap = instantiate("alpha_lambda")
        twisted = outer2(amap, osp.binary)
        i, j = OSP_BASIS.index("H"), OSP_BASIS.index("F")
        assert twisted.value(i, j) == OSP_BASIS.vector({"F": "-1/l"}, QL)

    def test_outer3_applies_diagonal_twice(self):
        alg = instantiate("sly12_lambda")
        amap = instantiate("alpha_lambda")
        sq = outer3(amap.compose(amap), alg.ternary)
        idx = tuple(OSP_BASIS.index(n) for n in ("X", "Y", "X"))
        # alpha^2(2 l^4 X) = 2 l^8 X
        assert sq.value(*idx) == OSP_BASIS.vector({"X": "2*l^8"}, QL)

    def test_outer_composition_law(self):
        alg = instantiate("sly12_lambda")
        amap = instantiate("alpha_lambda")
        lhs2 = outer2(amap.compose(amap), alg.binary)
        rhs2 = outer2(amap, outer2(amap, alg.binary))
        assert op_equal(lhs2, rhs2)
        lhs3 = outer3(amap.compose(amap), alg.ternary)
        rhs3 = outer3(amap, outer3(amap, alg.ternary))
        assert op_equal(lhs3, rhs3)

    def test_evenness_preserved_by_outer(self):
        alg = instantiate("sly31")
        beta = instantiate("alpha1", {"a": 2, "b": 1, "c": 1})
        outer2(beta, alg.binary)  # constructor re-checks evenness
        outer3(beta.compose(beta), alg.ternary)


class TestOpEqual:
    def test_reflexive(self):
        osp = instantiate("osp12")
        assert op_equal(osp.binary, osp.binary)

    def test_lambda_family_at_one_matches_base(self):
        base = instantiate("osp12")
        at1 = instantiate("osp12_lambda", {"l": 1})
        assert op_equal(base.binary, at1.binary)

    def test_lambda_family_at_two_differs(self):
        base = instantiate("osp12")
        at2 = instantiate("osp12_lambda", {"l": 2})
        assert not op_equal(base.binary, at2.binary)

    def test_shape_mismatch_raises(self):
        osp = instantiate("osp12")
        alg31 = instantiate("sly31")
        with pytest.raises(DimensionMismatch):
            op_equal(osp.binary, alg31.binary)
        with pytest.raises(DimensionMismatch):
            op_equal(osp.binary, alg31.ternary)


class TestEvenness:
    def test_bad_binary_entry_rejected(self):
        entries = {
            (OSP_BASIS.index("H"), OSP_BASIS.index("X")): OSP_BASIS.vector({"F": "1"}, Q)
        }
        with pytest.raises(EvennessViolation):
            binary_from_entries(OSP_BASIS, Q, entries, skew_complete=False)

    def test_bad_ternary_entry_rejected(self):
        idx = tuple(OSP_BASIS.index(n) for n in ("H", "F", "G"))
        entries = {idx: OSP_BASIS.vector({"F": "1"}, Q)}
        with pytest.raises(EvennessViolation):
            ternary_from_entries(OSP_BASIS, Q, entries, skew_complete=False)


class TestSkewCompletion:
    def test_completion_fills_counterparts(self):
        alg = instantiate("osp12")
        i, j = OSP_BASIS.index("X"), OSP_BASIS.index("H")
        assert alg.binary.value(i, j) == OSP_BASIS.vector({"X": "-2"}, Q)
        # odd-odd pair picks up the plus sign
        f, g = OSP_BASIS.index("F"), OSP_BASIS.index("G")
        assert alg.binary.value(f, g) == alg.binary.value(g, f)

    def test_completion_is_involutive(self):
        alg = instantiate("sly31")
        entries2 = {
            (i, j): alg.binary.value(i, j)
            for i in range(alg.dim)
            for j in range(alg.dim)
            if any(alg.binary.value(i, j))
        }
        assert op_equal(
            binary_from_entries(SLY31_BASIS, Q, entries2), alg.binary
        )
        entries3 = {
            (i, j, k): alg.ternary.value(i, j, k)
            for i in range(alg.dim)
            for j in range(alg.dim)
            for k in range(alg.dim)
            if any(alg.ternary.value(i, j, k))
        }
        assert op_equal(
            ternary_from_entries(SLY31_BASIS, Q, entries3), alg.ternary
        )

    def test_conflicting_pair_rejected(self):
        i, j = SLY31_BASIS.index("e1"), SLY31_BASIS.index("e3")
        entries = {
            (i, j): SLY31_BASIS.vector({"e1": "-1"}, Q),
            (j, i): SLY31_BASIS.vector({"e1": "-1"}, Q),  # skew demands +e1
        }
        with pytest.raises(ConflictError):
            binary_from_entries(SLY31_BASIS, Q, entries)

    def test_even_diagonal_must_vanish(self):
        i = SLY31_BASIS.index("e1")
        entries = {(i, i): SLY31_BASIS.vector({"e1": "1"}, Q)}
        with pytest.raises(ConflictError):
            binary_from_entries(SLY31_BASIS, Q, entries)

    def test_odd_diagonal_allowed(self):
        i = SLY31_BASIS.index("e4")
        entries = {(i, i): SLY31_BASIS.vector({"e1": "1"}, Q)}
        op = binary_from_entries(SLY31_BASIS, Q, entries)
        assert op.value(i, i) == SLY31_BASIS.vector({"e1": "1"}, Q)


class TestMorphismPredicates:
    def test_identity_is_multiplicative(self):
        assert is_multiplicative(instantiate("osp12")).passed
        assert is_multiplicative(instantiate("sly31")).passed

    def test_lambda_family_is_multiplicative_symbolically(self):
        assert is_multiplicative(instantiate("osp12_lambda")).passed

    def test_alpha_lambda_is_endomorphism_of_untwisted_bracket(self):
        # The diagonal map scales every bracket entry consistently: it is a
        # genuine endomorphism of the untwisted algebra, at l = 2 as well.
        osp = lift_algebra(instantiate("osp12"))
        amap = instantiate("alpha_lambda")
        assert is_endomorphism(amap, osp).passed
        osp2 = instantiate("osp12")
        amap2 = instantiate("alpha_lambda", {"l": 2})
        assert is_endomorphism(amap2, osp2).passed

    def test_alpha1_endomorphism_dichotomy(self):
        alg = instantiate("sly31")
        good = instantiate("alpha1", {"a": 1, "b": 1, "c": 3})
        assert is_endomorphism(good, alg).passed
        bad = instantiate("alpha1", {"a": 2, "b": 0, "c": 0})
        rep = is_endomorphism(bad, alg)
        assert not rep.passed
        e4 = SLY31_BASIS.index("e4")
        assert rep.violations[0].indices == (e4, e4)
        # beta([e4,e4]) = a^2(e1+e2) while [beta(e4),beta(e4)] = a^4(e1+e2)
        assert rep.violations[0].residual == SLY31_BASIS.vector(
            {"e1": "-12", "e2": "-12"}, Q
        )


class TestDomainChanges:
    def test_evaluate_algebra_at_point(self):
        alg = instantiate("osp12_lambda")
        at3 = evaluate_algebra(alg, 3)
        i, j = OSP_BASIS.index("H"), OSP_BASIS.index("X")
        assert at3.binary.value(i, j) == OSP_BASIS.vector({"X": "18"}, Q)

    def test_lift_then_evaluate_roundtrip(self):
        base = instantiate("osp12")
        lifted = lift_algebra(base)
        back = evaluate_algebra(lifted, 5)
        assert op_equal(back.binary, base.binary)
