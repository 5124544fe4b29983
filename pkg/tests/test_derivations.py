import itertools

import pytest

from dergrade import (
    AlgebraElement,
    Arrow,
    CentralityError,
    Derivation,
    DerivationTableError,
    FreeAbelian,
    GaussianRational,
    Heisenberg,
    PermutationGroup,
    char_bracket_value,
    char_inner_formula,
    commutator,
    find_inner_witness,
    verify_char_composition,
    verify_leibniz,
)
from dergrade.sampling import Sampler

H = Heisenberg()
Z2 = FreeAbelian(2)


def h(a, b, c):
    return H.element((a, b, c))


def mono(g, coeff=1):
    return AlgebraElement.monomial(g, coeff)


def gr(v):
    return GaussianRational.of(v)


class TestConstructors:
    def test_inner_example(self):
        d = Derivation.inner(mono(h(1, 0, 0)))
        assert d.images[h(0, 1, 0)] == mono(h(1, 1, 0)) - mono(h(1, 1, 1))

    def test_inner_of_identity_is_zero(self):
        assert Derivation.inner(mono(H.identity())).is_zero()

    def test_inner_abelian_is_zero(self):
        sampler = Sampler(Z2, seed=1)
        for _ in range(10):
            assert Derivation.inner(sampler.algebra_element()).is_zero()

    def test_central_example(self):
        d = Derivation.central(H, [2, 3], h(0, 0, 1))
        assert d.images[h(1, 0, 0)] == mono(h(1, 0, 1), 2)
        assert d.images[h(0, 1, 0)] == mono(h(0, 1, 1), 3)

    def test_central_zero_tau(self):
        assert Derivation.central(H, [0, 0], h(0, 0, 2)).is_zero()

    def test_central_z2(self):
        d = Derivation.central(Z2, [1, 0], Z2.element((0, 1)))
        assert d.apply_element(Z2.element((1, 0))) == mono(Z2.element((1, 1)))

    def test_central_rejects_noncentral(self):
        with pytest.raises(CentralityError):
            Derivation.central(H, [1, 0], h(1, 0, 0))

    def test_central_rejects_bad_tau_length(self):
        with pytest.raises(ValueError):
            Derivation.central(H, [1], h(0, 0, 1))

    def test_table_accepts_valid(self):
        base = Derivation.inner(mono(h(1, 1, 0))) + Derivation.central(
            H, [1, -1], h(0, 0, 1)
        )
        rebuilt = Derivation.from_table(H, dict(base.images))
        assert rebuilt == base

    def test_table_rejects_corrupted(self):
        base = Derivation.inner(mono(h(1, 0, 0)))
        images = dict(base.images)
        images[h(1, 0, 0)] = images[h(1, 0, 0)] + mono(h(2, 0, 0))
        with pytest.raises(DerivationTableError):
            Derivation.from_table(H, images)

    def test_corrupted_table_breaks_leibniz(self):
        base = Derivation.inner(mono(h(1, 0, 0)))
        images = dict(base.images)
        images[h(1, 0, 0)] = images[h(1, 0, 0)] + mono(h(2, 0, 0))
        bad = Derivation(H, images, validate=False)
        sampler = Sampler(H, seed=2)
        assert any(
            not verify_leibniz(bad, sampler.algebra_element(), sampler.algebra_element())
            for _ in range(50)
        )


class TestApply:
    def test_inner_on_monomial(self):
        a = mono(h(1, 0, 0)) + mono(h(0, 0, 1), 2)
        d = Derivation.inner(a)
        for g in [h(0, 1, 0), h(2, -1, 3)]:
            assert d.apply(mono(g)) == commutator(mono(g), a)

    def test_identity_maps_to_zero(self):
        sampler = Sampler(H, seed=3)
        for _ in range(10):
            d = sampler.derivation()
            assert not d.apply(mono(H.identity()))

    def test_central_word_expansion(self):
        # tau(g) = 2a + 3b and g*z for g = (1,1,0)
        d = Derivation.central(H, [2, 3], h(0, 0, 1))
        assert d.apply_element(h(1, 1, 0)) == mono(h(1, 1, 1), 5)

    def test_central_closed_form_random(self):
        # extension agrees with tau(g) * g * z everywhere
        d = Derivation.central(H, [2, 3], h(0, 0, 1))
        sampler = Sampler(H, seed=4, box=3)
        for _ in range(100):
            g = sampler.element()
            a, b, _ = g.payload
            assert d.apply_element(g) == mono(g * h(0, 0, 1), 2 * a + 3 * b)

    def test_inverse_rule(self):
        sampler = Sampler(H, seed=5)
        for _ in range(50):
            d = sampler.derivation()
            g = sampler.element()
            gi = mono(g.inverse())
            assert d.apply_element(g.inverse()) == -(gi * d.apply_element(g) * gi)


class TestCharacter:
    def test_inner_source_case(self):
        d = Derivation.inner(mono(h(1, 0, 0)))
        assert d.character(Arrow(h(1, 1, 0), h(0, 1, 0))) == gr(1)

    def test_inner_target_case(self):
        a = h(1, 0, 0)
        v = h(0, 1, 0)
        d = Derivation.inner(mono(a))
        phi = Arrow(a * v, v)  # target(phi) == a
        assert phi.target() == a and phi.source() != a
        assert d.character(phi) == gr(-1)

    def test_off_support_zero(self):
        d = Derivation.inner(mono(h(1, 0, 0)))
        assert d.character(Arrow(h(3, 3, 3), h(0, 1, 0))) == gr(0)

    def test_indicator_formula_cases(self):
        a = h(1, 0, 0)
        v = h(0, 1, 0)
        assert char_inner_formula(a, Arrow(h(1, 1, 0), v)) == gr(1)
        assert char_inner_formula(a, Arrow(a * v, v)) == gr(-1)
        assert char_inner_formula(a, Arrow(h(3, 3, 3), v)) == gr(0)

    def test_overlap_source_equals_target(self):
        # v commutes with a, so S == T == a and the value must be 0
        a = h(0, 0, 2)
        v = h(1, 1, 0)
        d = Derivation.inner(mono(a))
        phi = Arrow(v * a, v)
        assert phi.source() == phi.target() == a
        assert char_inner_formula(a, phi) == gr(0)
        assert d.character(phi) == gr(0)

    def test_indicator_formula_matches_character(self):
        # exhaustive on support arrows with generator v, plus off-support noise
        box = [
            h(a, b, c) for a, b, c in itertools.product(range(-2, 3), repeat=3)
        ]
        sampler = Sampler(H, seed=6, box=4)
        for a in box:
            d = Derivation.inner(mono(a))
            for v in H.generators():
                support = sorted(
                    d.apply_element(v).support(), key=H.sort_key
                )
                arrows = [Arrow(u, v) for u in support]
                arrows += [Arrow(sampler.element(), v) for _ in range(20)]
                for phi in arrows:
                    assert d.character(phi) == char_inner_formula(a, phi)

    def test_additivity(self):
        sampler = Sampler(H, seed=7)
        for _ in range(50):
            d = sampler.derivation()
            p = sampler.derivation()
            phi = sampler.arrow(d)
            total = d + p
            assert total.character(phi) == d.character(phi) + p.character(phi)

    def test_composition_rule(self):
        sampler = Sampler(H, seed=8)
        for _ in range(100):
            d = sampler.derivation()
            phi, psi = sampler.composable_arrows()
            assert verify_char_composition(d, phi, psi)


class TestLieStructure:
    def test_add_scale(self):
        d = Derivation.inner(mono(h(1, 0, 0)))
        assert (d + d.scale(-1)).is_zero()
        assert d.scale(2) == Derivation.inner(mono(h(1, 0, 0), 2))

    def test_bracket_of_inners(self):
        a, b = h(1, 0, 0), h(0, 1, 0)
        da, db = Derivation.inner(mono(a)), Derivation.inner(mono(b))
        expected = Derivation.inner(mono(h(1, 1, 0)) - mono(h(1, 1, 1)))
        assert da.bracket(db) == expected

    def test_bracket_degenerate(self):
        d = Derivation.inner(mono(h(1, 2, 0)))
        assert d.bracket(d).is_zero()
        assert d.bracket(Derivation.zero(H)).is_zero()

    def test_bracket_satisfies_leibniz(self):
        sampler = Sampler(H, seed=9)
        for _ in range(20):
            br = sampler.derivation().bracket(sampler.derivation())
            assert verify_leibniz(
                br, sampler.algebra_element(), sampler.algebra_element()
            )

    def test_jacobi(self):
        sampler = Sampler(H, seed=10, box=1, word_len=3)
        for _ in range(10):
            d, p, q = (sampler.derivation() for _ in range(3))
            total = (
                d.bracket(p.bracket(q))
                + p.bracket(q.bracket(d))
                + q.bracket(d.bracket(p))
            )
            assert total.is_zero()

    def test_inner_ideal_identity(self):
        # [p, inner(a)] == inner(p(a))
        sampler = Sampler(H, seed=11)
        for _ in range(30):
            p = sampler.derivation()
            a = sampler.algebra_element()
            assert p.bracket(Derivation.inner(a)) == Derivation.inner(p.apply(a))


class TestBracketCharacterOracle:
    def test_worked_example(self):
        da = Derivation.inner(mono(h(1, 0, 0)))
        db = Derivation.inner(mono(h(0, 1, 0)))
        phi = Arrow(h(2, 1, 1), h(1, 0, 0))
        assert char_bracket_value(da, db, phi) == gr(2)
        assert da.bracket(db).character(phi) == gr(2)

    def test_zero_argument(self):
        d = Derivation.inner(mono(h(1, 1, 0)))
        phi = Arrow(h(2, 1, 1), h(1, 0, 0))
        assert char_bracket_value(d, Derivation.zero(H), phi) == gr(0)

    @pytest.mark.parametrize("group", [H, Z2], ids=["heisenberg", "z2"])
    def test_matches_operator_route(self, group):
        sampler = Sampler(group, seed=12)
        for _ in range(40):
            d = sampler.derivation()
            p = sampler.derivation()
            br = d.bracket(p)
            for _ in range(10):
                phi = sampler.arrow(br)
                assert char_bracket_value(d, p, phi) == br.character(phi)


class TestLeibniz:
    @pytest.mark.parametrize("group", [H, Z2], ids=["heisenberg", "z2"])
    def test_constructors_satisfy_leibniz(self, group):
        sampler = Sampler(group, seed=13)
        for _ in range(100):
            d = sampler.derivation()
            x = mono(sampler.word_element(6))
            y = mono(sampler.word_element(6))
            assert verify_leibniz(d, x, y)

    def test_finite_group_table_validation(self):
        S4 = PermutationGroup.symmetric(4)
        d = Derivation.inner(mono(S4.element((2, 1, 3, 4))))
        assert Derivation.from_table(S4, dict(d.images)) == d
        images = dict(d.images)
        s = S4.generators()[0]
        images[s] = images[s] + mono(S4.element((2, 3, 4, 1)))
        with pytest.raises(DerivationTableError):
            Derivation.from_table(S4, images)


class TestInnerWitness:
    def test_direct_witness(self):
        sampler = Sampler(H, seed=14)
        for _ in range(20):
            w = sampler.algebra_element()
            assert Derivation.inner(w).is_inner_witness(w)

    def test_zero_with_identity_witness(self):
        assert Derivation.zero(H).is_inner_witness(mono(H.identity()))

    def test_central_not_inner_in_box(self):
        d = Derivation.central(H, [1, 0], h(0, 0, 1))
        box = [
            h(a, b, c) for a, b, c in itertools.product(range(-1, 2), repeat=3)
        ]
        assert not any(d.is_inner_witness(mono(g)) for g in box)
        assert find_inner_witness(d, box) is None

    def test_search_recovers_inner(self):
        box = [
            h(a, b, c) for a, b, c in itertools.product(range(-1, 2), repeat=3)
        ]
        a = mono(h(1, 0, 0)) + mono(h(0, 1, 1), -2)
        d = Derivation.inner(a)
        w = find_inner_witness(d, box)
        assert w is not None and d.is_inner_witness(w)
