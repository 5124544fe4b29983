"""Seeded random generators for elements, algebra elements, arrows, and
derivations.  Used by the verification suites and the tests; everything is
deterministic given the seed (set iteration is always sorted first)."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import AlgebraElement
from .coefficients import GaussianRational
from .derivations import Derivation
from .groups import (
    Arrow,
    FreeAbelian,
    Group,
    GroupElement,
    Heisenberg,
    PermutationGroup,
)


class Sampler:
    def __init__(
        self,
        group: Group,
        seed: int = 0,
        *,
        box: int = 2,
        word_len: int = 4,
        coeff_bound: int = 3,
    ):
        self.group = group
        self.rng = random.Random(seed)
        self.box = box
        self.word_len = word_len
        self.coeff_bound = coeff_bound

    # -- scalars -------------------------------------------------------------

    def rational(self) -> Fraction:
        num = self.rng.randint(-self.coeff_bound, self.coeff_bound)
        den = self.rng.randint(1, self.coeff_bound)
        return Fraction(num, den)

    def coefficient(self) -> GaussianRational:
        return GaussianRational(self.rational(), self.rational())

    def nonzero_coefficient(self) -> GaussianRational:
        while True:
            c = self.coefficient()
            if c:
                return c

    # -- group elements --------------------------------------------------------

    def element(self) -> GroupElement:
        g = self.group
        if isinstance(g, Heisenberg):
            return g.element(tuple(self.rng.randint(-self.box, self.box) for _ in range(3)))
        if isinstance(g, FreeAbelian):
            return g.element(tuple(self.rng.randint(-self.box, self.box) for _ in range(g.n)))
        if isinstance(g, PermutationGroup):
            return g.element(self.rng.choice(g._elements))
        raise TypeError(f"no sampler for {g.name}")

    def word_element(self, length: Optional[int] = None) -> GroupElement:
        if length is None:
            length = self.rng.randint(0, self.word_len)
        gens = self.group.generators()
        letters = gens + [s.inverse() for s in gens]
        out = self.group.identity()
        for _ in range(length):
            out = out * self.rng.choice(letters)
        return out

    # -- algebra elements --------------------------------------------------------

    def algebra_element(self, max_terms: int = 3) -> AlgebraElement:
        n_terms = self.rng.randint(1, max_terms)
        return AlgebraElement.from_terms(
            self.group,
            [(self.element(), self.nonzero_coefficient()) for _ in range(n_terms)],
        )

    # -- derivations ----------------------------------------------------------------

    def inner_derivation(self) -> Derivation:
        return Derivation.inner(self.algebra_element(max_terms=2))

    def _central_pick(self) -> Tuple[List[int], GroupElement]:
        g = self.group
        if isinstance(g, Heisenberg):
            tau = [self.rng.randint(-2, 2), self.rng.randint(-2, 2)]
            z = g.element((0, 0, self.rng.randint(-2, 2)))
            return tau, z
        if isinstance(g, FreeAbelian):
            tau = [self.rng.randint(-2, 2) for _ in range(g.n)]
            return tau, self.element()
        raise TypeError(f"no central derivations sampled for {g.name}")

    def central_derivation(self) -> Derivation:
        tau, z = self._central_pick()
        return Derivation.central(self.group, tau, z)

    def has_central(self) -> bool:
        return isinstance(self.group, (Heisenberg, FreeAbelian))

    def tabular_derivation(self) -> Derivation:
        # a valid combination re-entered through the validated table path
        d = self.derivation(allow_table=False)
        return Derivation.from_table(self.group, dict(d.images))

    def derivation(self, allow_table: bool = True) -> Derivation:
        choices = ["inner", "sum"]
        if self.has_central():
            choices += ["central", "mixed"]
        if allow_table:
            choices.append("table")
        kind = self.rng.choice(choices)
        if kind == "inner":
            return self.inner_derivation()
        if kind == "central":
            return self.central_derivation()
        if kind == "sum":
            return self.inner_derivation() + self.inner_derivation().scale(
                self.coefficient()
            )
        if kind == "mixed":
            return self.inner_derivation() + self.central_derivation().scale(
                self.nonzero_coefficient()
            )
        return self.tabular_derivation()

    # -- arrows ----------------------------------------------------------------------

    def arrow(self, d: Optional[Derivation] = None, on_support_bias: float = 0.5) -> Arrow:
        """A random arrow (u, v); when a derivation is given, u is drawn from
        the support of d(v) with the given probability so that nonzero
        character values actually occur."""
        v = self.word_element()
        u: Optional[GroupElement] = None
        if d is not None and self.rng.random() < on_support_bias:
            supp = sorted(d.apply_element(v).support(), key=self.group.sort_key)
            if supp:
                u = self.rng.choice(supp)
        if u is None:
            u = self.word_element()
        return Arrow(u, v)

    def composable_arrows(self) -> Tuple[Arrow, Arrow]:
        """A pair (phi, psi) with source(phi) == target(psi)."""
        psi = Arrow(self.word_element(), self.word_element())
        v2 = self.word_element()
        u2 = v2 * psi.target()
        phi = Arrow(u2, v2)
        return phi, psi
