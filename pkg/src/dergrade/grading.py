"""Grading of the derivation Lie algebra by an abelian quotient G/N.

Support localisation works on generator images: collecting the cosets of
s^-1 k over all generators s and support elements k of d(s) bounds the
character's support, and projecting the generator images coset by coset
yields the direct-sum decomposition.  Bracket closure, the stem-group
localisation of central derivations, and per-coset inner witnesses are
exercised on top of the same machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .algebra import AlgebraElement
from .coefficients import CoeffLike
from .derivations import Derivation
from .groups import (
    CentralityError,
    FreeAbelian,
    Group,
    GroupElement,
    GroupMismatchError,
    Heisenberg,
    QuotientSpec,
)

CosetKey = tuple


class TrivialGradingError(ValueError):
    """The quotient is trivial, so the grading would be trivial as well."""


@dataclass(frozen=True)
class GradingSetup:
    """A group together with a validated quotient giving a non-trivial grading."""

    group: Group
    quotient: QuotientSpec

    @staticmethod
    def default(group: Group) -> "GradingSetup":
        return GradingSetup(group, group.derived_quotient())

    def __post_init__(self):
        if self.quotient.group != self.group:
            raise GroupMismatchError("quotient belongs to a different group")
        identity_key = self.quotient.identity_key()
        if all(
            self.quotient.key(s) == identity_key for s in self.group.generators()
        ):
            raise TrivialGradingError(
                f"quotient of {self.group.name} is trivial: every generator lands "
                "in the identity coset, so the grading has a single component"
            )


def support_cosets(d: Derivation, setup: GradingSetup) -> FrozenSet[CosetKey]:
    """Coset keys that can carry support of d's character.

    Collects key(s^-1 k) over generators s and support elements k of d(s);
    any arrow with a nonzero character value has its source's coset in this
    set, which the property tests check against random arrows.
    """
    if d.group != setup.group:
        raise GroupMismatchError("derivation over a different group")
    keys = set()
    for s in d.group.generators():
        s_inv = s.inverse()
        for k in d.images[s].support():
            keys.add(setup.quotient.key(s_inv * k))
    return frozenset(keys)


def support_classes(d: Derivation) -> FrozenSet[GroupElement]:
    """Canonical representatives of the conjugacy classes that can carry
    support, at class rather than coset granularity."""
    reps = set()
    for s in d.group.generators():
        s_inv = s.inverse()
        for k in d.images[s].support():
            reps.add(d.group.class_representative(s_inv * k))
    return frozenset(reps)


def project(d: Derivation, key: CosetKey, setup: GradingSetup) -> Derivation:
    """The component of d at one coset key: per generator s, the sub-sum of
    d(s) over terms k with key(s^-1 k) == key."""
    if d.group != setup.group:
        raise GroupMismatchError("derivation over a different group")
    images: Dict[GroupElement, AlgebraElement] = {}
    for s in d.group.generators():
        s_inv = s.inverse()
        images[s] = AlgebraElement.from_terms(
            d.group,
            [
                (k, c)
                for k, c in d.images[s].items()
                if setup.quotient.key(s_inv * k) == key
            ],
        )
    return Derivation(d.group, images, validate=False)


@dataclass(frozen=True)
class GradedDecomposition:
    base: Derivation
    setup: GradingSetup
    components: Dict[CosetKey, Derivation]

    def keys(self) -> List[CosetKey]:
        return sorted(self.components)

    def total(self) -> Derivation:
        acc = Derivation.zero(self.base.group)
        for key in self.keys():
            acc = acc + self.components[key]
        return acc


def decompose(d: Derivation, setup: GradingSetup) -> GradedDecomposition:
    """Split d into its nonzero graded components; they sum back to d exactly
    and their support cosets are pairwise disjoint singletons."""
    components: Dict[CosetKey, Derivation] = {}
    for key in sorted(support_cosets(d, setup)):
        component = project(d, key, setup)
        if not component.is_zero():
            components[key] = component
    return GradedDecomposition(d, setup, components)


@dataclass(frozen=True)
class ClosureCheck:
    left_key: CosetKey
    right_key: CosetKey
    expected_key: CosetKey
    observed_keys: FrozenSet[CosetKey]
    ok: bool


@dataclass(frozen=True)
class ClosureReport:
    checks: Tuple[ClosureCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


def check_bracket_closure(
    d: Derivation, p: Derivation, setup: GradingSetup
) -> ClosureReport:
    """For every pair of nonzero component keys (k, l), the bracket of the
    components must have support only at the combined key k*l."""
    left = decompose(d, setup)
    right = decompose(p, setup)
    checks: List[ClosureCheck] = []
    for k in left.keys():
        for l in right.keys():
            bracket = left.components[k].bracket(right.components[l])
            observed = support_cosets(bracket, setup)
            expected = setup.quotient.combine(k, l)
            checks.append(
                ClosureCheck(k, l, expected, observed, observed <= {expected})
            )
    return ClosureReport(tuple(checks))


def is_stem(group: Group) -> bool:
    """True iff the center is contained in the commutator subgroup."""
    return group.is_stem()


def central_component_key(
    tau: Sequence[CoeffLike], z: GroupElement, setup: GradingSetup
) -> CosetKey:
    """The single coset key of a central derivation: the coset of z (every
    support arrow has source z).  For stem groups this is the identity key."""
    if not setup.group.is_central(z):
        raise CentralityError(f"{z!r} is not central in {setup.group.name}")
    return setup.quotient.key(z)


def zder_grading_demo(group: Group) -> dict:
    """Decompose a family of central derivations under the derived-subgroup
    quotient and report where their components land.

    Stem groups localise everything at the identity key; non-stem groups
    (e.g. Z^n) exhibit central derivations at distinct nonzero keys, which is
    the induced grading of the central-derivation subalgebra.
    """
    setup = GradingSetup.default(group)
    basis = group.abelian_basis()
    if isinstance(group, Heisenberg):
        picks = [([1, 0], group.element((0, 0, 1))), ([0, 1], group.element((0, 0, 1)))]
    elif isinstance(group, FreeAbelian):
        picks = [([1] + [0] * (group.n - 1), b) for b in basis]
    else:
        raise CentralityError(
            f"no canonical central-derivation family for {group.name}"
        )
    entries = []
    nonzero_keys = set()
    for tau, z in picks:
        d = Derivation.central(group, tau, z)
        dec = decompose(d, setup)
        keys = dec.keys()
        for key in keys:
            if key != setup.quotient.identity_key():
                nonzero_keys.add(key)
        entries.append(
            {
                "tau": tau,
                "z": group.element_to_json(z),
                "component_keys": [setup.quotient.key_to_json(k) for k in keys],
            }
        )
    return {
        "group": group.name,
        "is_stem": group.is_stem(),
        "entries": entries,
        "distinct_nonzero_keys": len(nonzero_keys),
    }


@dataclass(frozen=True)
class InnerGradedCertificate:
    """A graded decomposition of an inner derivation together with a per-coset
    inner witness for every component."""

    decomposition: GradedDecomposition
    witnesses: Dict[CosetKey, AlgebraElement]
    certified: Dict[CosetKey, bool]

    @property
    def all_certified(self) -> bool:
        return all(self.certified.values())


def inner_graded_decomposition(
    coefficients: Sequence[CoeffLike],
    elements: Sequence[GroupElement],
    setup: GradingSetup,
) -> InnerGradedCertificate:
    """Decompose the inner derivation of sum(c_i * y_i) and certify each
    component inner via the witness collecting the y_i in that coset."""
    if len(coefficients) != len(elements):
        raise ValueError("coefficients and elements must align")
    a = AlgebraElement.from_terms(setup.group, list(zip(elements, coefficients)))
    d = Derivation.inner(a)
    dec = decompose(d, setup)
    witnesses: Dict[CosetKey, AlgebraElement] = {}
    certified: Dict[CosetKey, bool] = {}
    for key in dec.keys():
        witness = AlgebraElement.from_terms(
            setup.group,
            [
                (y, c)
                for c, y in zip(coefficients, elements)
                if setup.quotient.key(y) == key
            ],
        )
        witnesses[key] = witness
        certified[key] = dec.components[key].is_inner_witness(witness)
    return InnerGradedCertificate(dec, witnesses, certified)
