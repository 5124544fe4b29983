"""Derivations of the group algebra and their groupoid characters.

A derivation is stored by its images on the kernel's generating set and
extended to the whole algebra through the Leibniz rule, expanding each group
element along a word in the generators.  The character view is derived: the
value of the character on an arrow (u, v) is the coefficient of u in d(v).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import AlgebraElement, commutator
from .coefficients import CoeffLike, GaussianRational, ZERO, as_coefficient
from .groups import (
    Arrow,
    CentralityError,
    Group,
    GroupElement,
    GroupMismatchError,
)


class DerivationTableError(ValueError):
    """A generator-image table is not consistent with the group's relations."""


class Derivation:
    __slots__ = ("group", "images", "spec", "_cache", "_letter_cache")

    def __init__(
        self,
        group: Group,
        images: Dict[GroupElement, AlgebraElement],
        *,
        validate: bool = True,
        spec: Optional[dict] = None,
    ):
        gens = group.generators()
        if set(images) != set(gens):
            raise DerivationTableError(
                "images must be given on exactly the generating set"
            )
        for s, img in images.items():
            if img.group != group:
                raise GroupMismatchError("generator image over the wrong group")
        self.group = group
        self.images = {s: images[s] for s in gens}
        self.spec = spec
        self._cache: Dict[GroupElement, AlgebraElement] = {
            group.identity(): AlgebraElement.zero(group)
        }
        self._letter_cache: Dict[GroupElement, AlgebraElement] = {}
        if validate:
            self._validate_table()

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(group: Group) -> "Derivation":
        images = {s: AlgebraElement.zero(group) for s in group.generators()}
        return Derivation(group, images, validate=False)

    @staticmethod
    def inner(a: AlgebraElement) -> "Derivation":
        """x -> x*a - a*x, stored via its generator images."""
        group = a.group
        images = {
            s: commutator(AlgebraElement.monomial(s), a) for s in group.generators()
        }
        spec = {"group": group.name, "kind": "inner", "a": a.to_json()}
        return Derivation(group, images, validate=False, spec=spec)

    @staticmethod
    def central(
        group: Group, tau: Sequence[CoeffLike], z: GroupElement
    ) -> "Derivation":
        """g -> tau(g) * g * z for central z and a homomorphism tau to (C, +).

        tau is given by its values on the free basis of the abelianization, so
        it automatically vanishes on the commutator subgroup.
        """
        if not group.is_central(z):
            raise CentralityError(f"{z!r} is not central in {group.name}")
        basis = group.abelian_basis()
        if len(tau) != len(basis):
            raise ValueError(
                f"tau must list {len(basis)} values (one per abelianization basis element)"
            )
        coeffs = [as_coefficient(t) for t in tau]
        images: Dict[GroupElement, AlgebraElement] = {}
        for s in group.generators():
            coords = group.abelian_coords(s)
            tau_s = ZERO
            for t, c in zip(coeffs, coords):
                tau_s = tau_s + t * GaussianRational.of(c)
            images[s] = AlgebraElement.monomial(s * z, tau_s)
        spec = {
            "group": group.name,
            "kind": "central",
            "tau": [t.to_json() for t in coeffs],
            "z": group.element_to_json(z),
        }
        return Derivation(group, images, validate=False, spec=spec)

    @staticmethod
    def from_table(
        group: Group, images: Dict[GroupElement, AlgebraElement]
    ) -> "Derivation":
        return Derivation(group, images, validate=True)

    # -- table validation ----------------------------------------------------

    def _validate_table(self) -> None:
        relators = self.group.relators()
        if relators is not None:
            for rel in relators:
                if self._apply_word(rel):
                    raise DerivationTableError(
                        "generator images violate a defining relation"
                    )
            return
        elements = self.group.finite_elements()
        if elements is None:
            raise DerivationTableError(
                f"{self.group.name} supports no table validation"
            )
        # finite kernel: check the Leibniz rule on all element pairs
        for g in elements:
            for h in elements:
                if not verify_leibniz_elements(self, g, h):
                    raise DerivationTableError(
                        f"generator images violate the Leibniz rule at {g!r}, {h!r}"
                    )

    # -- evaluation ----------------------------------------------------------

    def _letter_image(self, letter: GroupElement) -> AlgebraElement:
        img = self.images.get(letter)
        if img is not None:
            return img
        img = self._letter_cache.get(letter)
        if img is not None:
            return img
        s = letter.inverse()
        base = self.images.get(s)
        if base is None:
            raise ValueError(f"{letter!r} is not a generator letter")
        # d(s^-1) = -s^-1 d(s) s^-1, forced by the Leibniz rule
        li = AlgebraElement.monomial(letter)
        img = -(li * base * li)
        self._letter_cache[letter] = img
        return img

    def _apply_word(self, letters: List[GroupElement]) -> AlgebraElement:
        # d(l1 ... ln) = sum_i prefix_i * d(l_i) * suffix_i; terms are
        # accumulated by translating each image's support directly
        group = self.group
        total = group.identity()
        for letter in letters:
            total = total * letter
        acc: Dict[GroupElement, GaussianRational] = {}
        prefix = group.identity()
        for letter in letters:
            prefix_next = prefix * letter
            suffix = prefix_next.inverse() * total
            for g, c in self._letter_image(letter)._terms.items():
                shifted = prefix * g * suffix
                value = acc.get(shifted)
                acc[shifted] = c if value is None else value + c
            prefix = prefix_next
        return AlgebraElement(group, acc)

    def apply_element(self, g: GroupElement) -> AlgebraElement:
        """d(g) for a single group element, via a word in the generators."""
        cached = self._cache.get(g)
        if cached is None:
            cached = self._apply_word(self.group.word(g))
            self._cache[g] = cached
        return cached

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        if x.group != self.group:
            raise GroupMismatchError("argument over the wrong group")
        result = AlgebraElement.zero(self.group)
        for g, c in x.items():
            result = result + self.apply_element(g).scale(c)
        return result

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return self.apply(x)

    def character(self, arrow: Arrow) -> GaussianRational:
        """chi^d(u, v): the coefficient of u in d(v)."""
        self.group._check(arrow.u, arrow.v)
        return self.apply_element(arrow.v).coefficient(arrow.u)

    # -- Lie algebra structure -------------------------------------------------

    def _check_group(self, other: "Derivation") -> None:
        if self.group != other.group:
            raise GroupMismatchError("derivations over different groups")

    def __add__(self, other: "Derivation") -> "Derivation":
        self._check_group(other)
        images = {s: self.images[s] + other.images[s] for s in self.images}
        return Derivation(self.group, images, validate=False)

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + other.scale(-1)

    def scale(self, coeff: CoeffLike) -> "Derivation":
        images = {s: img.scale(coeff) for s, img in self.images.items()}
        return Derivation(self.group, images, validate=False)

    def bracket(self, other: "Derivation") -> "Derivation":
        """[d, other] as operator commutator on the generator images."""
        self._check_group(other)
        images = {
            s: self.apply(other.images[s]) - other.apply(self.images[s])
            for s in self.images
        }
        return Derivation(self.group, images, validate=False)

    def is_zero(self) -> bool:
        return not any(self.images.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Derivation)
            and self.group == other.group
            and self.images == other.images
        )

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{name} -> {img!r}"
            for name, img in zip(self.group.generator_names(), self.images.values())
        )
        return f"Derivation({self.group.name}: {parts})"

    # -- inner witnesses ---------------------------------------------------------

    def is_inner_witness(self, w: AlgebraElement) -> bool:
        """True iff d agrees with x -> x*w - w*x; checking on the generating
        set suffices because both sides are derivations."""
        if w.group != self.group:
            raise GroupMismatchError("witness over the wrong group")
        return all(
            self.images[s] == commutator(AlgebraElement.monomial(s), w)
            for s in self.images
        )


# ---------------------------------------------------------------------------
# Character formulas and checks
# ---------------------------------------------------------------------------


def char_inner_formula(a: GroupElement, arrow: Arrow) -> GaussianRational:
    """Closed form for the character of the inner derivation at a:
    [a == source] - [a == target].  When source == target == a the indicator
    difference is 0, matching d_a vanishing on commuting elements."""
    a.group._check(arrow.u, arrow.v)
    value = ZERO
    if arrow.source() == a:
        value = value + GaussianRational.of(1)
    if arrow.target() == a:
        value = value - GaussianRational.of(1)
    return value


def char_bracket_value(
    d: Derivation, p: Derivation, arrow: Arrow
) -> GaussianRational:
    """Character of [d, p] at (a, b) via the matrix-product sum
    sum_k chi^d(a,k) chi^p(k,b) - chi^p(a,k) chi^d(k,b).

    Only k in the supports of d(b) and p(b) can contribute: every summand has
    a right factor that vanishes elsewhere.
    """
    d._check_group(p)
    group = d.group
    group._check(arrow.u, arrow.v)
    a, b = arrow.u, arrow.v
    middle = d.apply_element(b).support() | p.apply_element(b).support()
    total = ZERO
    for k in middle:
        total = total + d.character(Arrow(a, k)) * p.character(Arrow(k, b))
        total = total - p.character(Arrow(a, k)) * d.character(Arrow(k, b))
    return total


def verify_leibniz(d: Derivation, x: AlgebraElement, y: AlgebraElement) -> bool:
    return d.apply(x * y) == d.apply(x) * y + x * d.apply(y)


def verify_leibniz_elements(d: Derivation, g: GroupElement, h: GroupElement) -> bool:
    gh = g * h
    lhs = d.apply_element(gh)
    rhs = d.apply_element(g) * AlgebraElement.monomial(h) + AlgebraElement.monomial(
        g
    ) * d.apply_element(h)
    return lhs == rhs


def verify_char_composition(d: Derivation, phi: Arrow, psi: Arrow) -> bool:
    """chi(phi o psi) == chi(phi) + chi(psi) for composable arrows."""
    composite = phi.compose(psi)
    return d.character(composite) == d.character(phi) + d.character(psi)


# ---------------------------------------------------------------------------
# Bounded inner-witness search
# ---------------------------------------------------------------------------


def _solve_rational(rows: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """One solution of A x = b over Q by Gaussian elimination, or None."""
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    n_rows = len(m)
    n_cols = len(rows[0]) if rows else 0
    pivot_cols: List[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if m[i][n_cols]:
            return None
    solution = [Fraction(0)] * n_cols
    for row_idx, c in enumerate(pivot_cols):
        solution[c] = m[row_idx][n_cols]
    return solution


def find_inner_witness(
    d: Derivation, candidates: Iterable[GroupElement]
) -> Optional[AlgebraElement]:
    """Search for w supported on ``candidates`` with d(x) = x*w - w*x.

    Returns a verified witness or None when no witness exists within the
    candidate support box.  This is a bounded search, not an innerness
    decision procedure.
    """
    group = d.group
    cands = sorted(set(candidates), key=group.sort_key)
    if not cands:
        return AlgebraElement.zero(group) if d.is_zero() else None
    # linear system over Q(i): for each generator s and each element h that can
    # appear, sum_g c_g ([s*g == h] - [g*s == h]) == coeff of h in d(s)
    rows: List[List[Fraction]] = []
    rhs_re: List[Fraction] = []
    rhs_im: List[Fraction] = []
    for s in group.generators():
        target = d.images[s]
        elements = set(target.support())
        for g in cands:
            elements.add(s * g)
            elements.add(g * s)
        for h in sorted(elements, key=group.sort_key):
            row = []
            for g in cands:
                coeff = 0
                if s * g == h:
                    coeff += 1
                if g * s == h:
                    coeff -= 1
                row.append(Fraction(coeff))
            rows.append(row)
            value = target.coefficient(h)
            rhs_re.append(value.re)
            rhs_im.append(value.im)
    sol_re = _solve_rational(rows, rhs_re)
    sol_im = _solve_rational(rows, rhs_im)
    if sol_re is None or sol_im is None:
        return None
    witness = AlgebraElement.from_terms(
        group,
        [
            (g, GaussianRational(re, im))
            for g, re, im in zip(cands, sol_re, sol_im)
        ],
    )
    return witness if d.is_inner_witness(witness) else None
