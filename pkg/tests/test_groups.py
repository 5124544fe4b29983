import itertools
import random

import pytest
from hypothesis import given, strategies as st

from dergrade import (
    Arrow,
    CompositionError,
    FreeAbelian,
    GroupMismatchError,
    Heisenberg,
    PermutationGroup,
    QuotientError,
    conjugate,
)

H = Heisenberg()
Z2 = FreeAbelian(2)

triples = st.tuples(
    st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)
)


def h(a, b, c):
    return H.element((a, b, c))


class TestHeisenberg:
    def test_mul_examples(self):
        assert (h(1, 0, 0) * h(0, 1, 0)).payload == (1, 1, 1)
        assert (h(0, 1, 0) * h(1, 0, 0)).payload == (1, 1, 0)
        assert (h(3, -2, 7) * H.identity()).payload == (3, -2, 7)

    def test_inv_examples(self):
        assert h(1, 2, 3).inverse().payload == (-1, -2, -1)
        assert H.identity().inverse() == H.identity()
        assert Z2.element((3, -1)).inverse().payload == (-3, 1)

    @given(triples, triples, triples)
    def test_associative(self, p, q, r):
        a, b, c = h(*p), h(*q), h(*r)
        assert (a * b) * c == a * (b * c)

    @given(triples)
    def test_inverse_cancels(self, p):
        g = h(*p)
        assert g * g.inverse() == H.identity()
        assert g.inverse() * g == H.identity()

    def test_mixed_groups_rejected(self):
        with pytest.raises(GroupMismatchError):
            h(0, 0, 0) * Z2.element((0, 0))

    def test_word_reassembles(self):
        rng = random.Random(7)
        for _ in range(200):
            g = h(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4))
            prod = H.identity()
            for letter in H.word(g):
                prod = prod * letter
            assert prod == g


class TestArrows:
    def test_source_target_example(self):
        phi = Arrow(h(1, 1, 0), h(0, 1, 0))
        assert phi.source() == h(1, 0, 0)
        assert phi.target() == h(1, 0, -1)

    def test_identity_v_arrow(self):
        g = h(2, -1, 3)
        phi = Arrow(g, H.identity())
        assert phi.source() == g
        assert phi.target() == g

    def test_abelian_source_equals_target(self):
        phi = Arrow(Z2.element((3, 0)), Z2.element((1, 0)))
        assert phi.source() == phi.target() == Z2.element((2, 0))

    def test_compose_additive_example(self):
        Z1 = FreeAbelian(1)
        phi = Arrow(Z1.element((3,)), Z1.element((1,)))
        psi = Arrow(Z1.element((5,)), Z1.element((3,)))
        out = phi.compose(psi)
        assert (out.u.payload, out.v.payload) == ((6,), (4,))
        assert out.source() == psi.source()
        assert out.target() == phi.target()

    def test_compose_rejects_noncomposable(self):
        Z1 = FreeAbelian(1)
        phi = Arrow(Z1.element((3,)), Z1.element((1,)))
        psi = Arrow(Z1.element((4,)), Z1.element((3,)))
        with pytest.raises(CompositionError) as err:
            phi.compose(psi)
        assert err.value.source == Z1.element((2,))
        assert err.value.target == Z1.element((1,))

    def test_composition_coherence_random(self):
        # S(phi o psi) == S(psi) and T(phi o psi) == T(phi)
        rng = random.Random(11)
        for _ in range(300):
            psi = Arrow(
                h(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)),
                h(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)),
            )
            v2 = h(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3))
            phi = Arrow(v2 * psi.target(), v2)
            out = phi.compose(psi)
            assert out.source() == psi.source()
            assert out.target() == phi.target()


class TestConjugacy:
    def test_conjugate_examples(self):
        assert conjugate(h(0, 1, 0), h(1, 0, 0)) == h(1, 0, -1)
        assert conjugate(h(5, -2, 9), H.identity()) == H.identity()
        for t in [h(1, 2, 3), h(-4, 0, 1)]:
            assert conjugate(t, h(0, 0, 5)) == h(0, 0, 5)

    def test_is_conjugate_examples(self):
        assert H.is_conjugate(h(1, 0, 0), h(1, 0, -1))
        assert not H.is_conjugate(h(0, 0, 1), h(0, 0, 2))
        assert H.is_conjugate(h(2, 3, 1), h(2, 3, 1))

    def test_closed_form_matches_brute_force(self):
        # conjugators in the box |p|,|q|,|r| <= 5 reach every class member of
        # the elements in the box |a|,|b|,|c| <= 2
        conjugators = [
            h(p, q, r)
            for p, q, r in itertools.product(range(-5, 6), repeat=3)
        ]
        box = [
            h(a, b, c) for a, b, c in itertools.product(range(-2, 3), repeat=3)
        ]
        classes = {g: {conjugate(t, g) for t in conjugators} for g in box}
        for a in box:
            for b in box:
                assert H.is_conjugate(a, b) == (b in classes[a])

    def test_class_representative_consistent(self):
        rng = random.Random(3)
        for _ in range(300):
            a = h(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4))
            t = h(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4))
            assert H.class_representative(a) == H.class_representative(
                conjugate(t, a)
            )
            assert H.is_conjugate(a, H.class_representative(a))

    def test_arrows_stay_in_class_heisenberg(self):
        # source and target of any arrow are conjugate
        rng = random.Random(5)
        for _ in range(1000):
            phi = Arrow(
                h(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4)),
                h(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4)),
            )
            assert H.is_conjugate(phi.source(), phi.target())

    def test_arrows_stay_in_class_s4_exhaustive(self):
        S4 = PermutationGroup.symmetric(4)
        elements = S4.finite_elements()
        for u in elements:
            for v in elements:
                phi = Arrow(u, v)
                assert S4.is_conjugate(phi.source(), phi.target())


class TestCentrality:
    def test_examples(self):
        assert H.is_central(h(0, 0, 7))
        assert not H.is_central(h(1, 0, 0))
        assert H.is_central(H.identity())

    def test_z2_all_central(self):
        assert Z2.is_central(Z2.element((4, -1)))


class TestQuotients:
    def test_heisenberg_keys(self):
        q = H.derived_quotient()
        assert q.key(h(3, -2, 17)) == (3, -2)
        assert q.key(h(0, 0, 9)) == q.identity_key() == (0, 0)
        assert q.contains(h(0, 0, -4))
        assert not q.contains(h(1, 0, 0))

    def test_s4_sign_key(self):
        S4 = PermutationGroup.symmetric(4)
        q = S4.derived_quotient()  # N = A4
        transposition = S4.element((2, 1, 3, 4))
        assert q.key_name(q.key(transposition)) == "odd"
        assert q.key_name(q.identity_key()) == "even"

    def test_key_composition_random(self):
        q = H.derived_quotient()
        rng = random.Random(13)
        for _ in range(500):
            g = h(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
            k = h(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
            assert q.key(g * k) == q.combine(q.key(g), q.key(k))

    def test_classes_stay_in_cosets(self):
        q = H.derived_quotient()
        rng = random.Random(17)
        for _ in range(1000):
            a = h(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
            t = h(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
            assert q.key(conjugate(t, a)) == q.key(a)

    def test_s4_mod_v4_rejected_with_counterexample(self):
        S4 = PermutationGroup.symmetric(4)
        v4 = [(1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)]
        with pytest.raises(QuotientError) as err:
            S4.quotient_by(v4)
        diag = err.value.diagnostic
        # some class escapes its coset: 6 transpositions cannot fit in a
        # 4-element coset
        a = S4.element(diag["element"])
        cls = {S4.element(p) for p in diag["conjugacy_class"]}
        coset = {S4.element(p) for p in diag["coset"]}
        assert cls == S4.conjugacy_class(a)
        assert coset == {a * S4.element(n) for n in v4}
        assert not cls <= coset

    def test_transposition_class_escapes_v4_coset(self):
        # the concrete enumeration behind the rejection above
        S4 = PermutationGroup.symmetric(4)
        v4 = [(1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)]
        t = S4.element((2, 1, 3, 4))
        cls = S4.conjugacy_class(t)
        coset = {t * S4.element(n) for n in v4}
        assert len(cls) == 6 and len(coset) == 4
        assert not cls <= coset

    def test_s4_mod_a4_accepted(self):
        S4 = PermutationGroup.symmetric(4)
        a4 = sorted(S4.derived_payloads())
        q = S4.quotient_by(a4)
        g = S4.element((2, 1, 3, 4))
        assert q.key(g) != q.identity_key()

    def test_non_subgroup_rejected(self):
        S4 = PermutationGroup.symmetric(4)
        with pytest.raises(QuotientError):
            S4.quotient_by([(1, 2, 3, 4), (2, 1, 3, 4), (2, 3, 1, 4)])


class TestStem:
    def test_verdicts(self):
        assert H.is_stem()
        assert not Z2.is_stem()
        assert PermutationGroup.symmetric(4).is_stem()
