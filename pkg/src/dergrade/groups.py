"""Concrete group kernels with normal forms, the adjoint-action groupoid, and
abelian quotients.

Three kernels are supported, each with a trivially solvable word problem:

* the discrete Heisenberg group (integer unitriangular 3x3 matrices, stored
  as the triple of off-diagonal entries),
* free abelian groups Z^n (integer vectors),
* finite permutation groups (one-line notation), built by closure from a
  generating set.

Elements are immutable values in canonical normal form: for all three kernels
the payload *is* the normal form, so equality is payload equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple


class GroupMismatchError(TypeError):
    """An operation mixed elements of different groups."""


class CompositionError(ValueError):
    """A non-composable arrow pair; carries both boundary values."""

    def __init__(self, source: "GroupElement", target: "GroupElement"):
        super().__init__(
            f"arrows are not composable: source {source!r} != target {target!r}"
        )
        self.source = source
        self.target = target


class CentralityError(ValueError):
    """A central element was required but the argument is not central."""


class CapabilityError(RuntimeError):
    """The group kernel lacks an oracle required by the operation."""


class QuotientError(ValueError):
    """A proposed normal subgroup does not yield a valid abelian quotient.

    ``diagnostic`` optionally carries a counterexample: an element whose
    conjugacy class is not contained in its coset.
    """

    def __init__(self, message: str, diagnostic: Optional[dict] = None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


@dataclass(frozen=True)
class GroupElement:
    group: "Group"
    payload: tuple

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.group.mul(self, other)

    def inverse(self) -> "GroupElement":
        return self.group.inv(self)

    def is_identity(self) -> bool:
        return self.payload == self.group.identity().payload

    def __repr__(self) -> str:
        return f"{self.group.name}{self.payload}"


def conjugate(t: GroupElement, a: GroupElement) -> GroupElement:
    """t * a * t^-1."""
    return t * a * t.inverse()


@dataclass(frozen=True)
class Arrow:
    """An arrow (u, v) of the adjoint-action groupoid.

    Source is v^-1 u, target is u v^-1; source and target of any arrow are
    conjugate, so arrows never leave a conjugacy class.
    """

    u: GroupElement
    v: GroupElement

    def __post_init__(self):
        if self.u.group != self.v.group:
            raise GroupMismatchError("arrow endpoints from different groups")

    def source(self) -> GroupElement:
        return self.v.inverse() * self.u

    def target(self) -> GroupElement:
        return self.u * self.v.inverse()

    def compose(self, other: "Arrow") -> "Arrow":
        """self after other; requires source(self) == target(other)."""
        if self.source() != other.target():
            raise CompositionError(self.source(), other.target())
        return Arrow(self.v * other.u, self.v * other.v)


class Group:
    """Base interface of a group kernel."""

    def __init__(self, name: str, key: tuple):
        self.name = name
        self._key = key

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"<group {self.name}>"

    # -- element construction ------------------------------------------------

    def element(self, payload: Sequence) -> GroupElement:
        raise NotImplementedError

    def identity(self) -> GroupElement:
        raise NotImplementedError

    def _check(self, *elems: GroupElement) -> None:
        for g in elems:
            if g.group != self:
                raise GroupMismatchError(
                    f"element of {g.group.name} used with {self.name}"
                )

    # -- group operations ----------------------------------------------------

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        raise NotImplementedError

    def inv(self, g: GroupElement) -> GroupElement:
        raise NotImplementedError

    # -- generating set and words --------------------------------------------

    def generators(self) -> List[GroupElement]:
        raise NotImplementedError

    def generator_names(self) -> List[str]:
        return [f"g{i + 1}" for i in range(len(self.generators()))]

    def word(self, g: GroupElement) -> List[GroupElement]:
        """Express g as a product of letters, each a generator or the inverse
        of a generator.  The empty list is the identity."""
        raise NotImplementedError

    def relators(self) -> Optional[List[List[GroupElement]]]:
        """Defining relators as letter lists multiplying to the identity, or
        None when the kernel validates derivation tables by enumeration."""
        return None

    def finite_elements(self) -> Optional[List[GroupElement]]:
        """All elements for finite kernels, None for infinite ones."""
        return None

    # -- conjugacy / center oracles -------------------------------------------

    def is_central(self, z: GroupElement) -> bool:
        raise NotImplementedError

    def is_conjugate(self, a: GroupElement, b: GroupElement) -> bool:
        raise NotImplementedError

    def class_representative(self, a: GroupElement) -> GroupElement:
        """Canonical representative of [a]."""
        raise CapabilityError(f"{self.name} has no conjugacy representative oracle")

    # -- abelianization -------------------------------------------------------

    def abelian_basis(self) -> List[GroupElement]:
        """Free basis of G/G', when the abelianization is free abelian."""
        raise CapabilityError(f"{self.name} has no free abelianization basis")

    def abelian_coords(self, g: GroupElement) -> Tuple[int, ...]:
        raise CapabilityError(f"{self.name} has no free abelianization basis")

    # -- quotients -------------------------------------------------------------

    def derived_quotient(self) -> "QuotientSpec":
        """Quotient by the commutator subgroup (the default grading quotient)."""
        raise NotImplementedError

    # -- descriptions -----------------------------------------------------------

    def sort_key(self, g: GroupElement) -> tuple:
        return g.payload

    def element_to_json(self, g: GroupElement) -> list:
        return list(g.payload)

    def element_from_json(self, data) -> GroupElement:
        return self.element(data)

    def center_description(self) -> str:
        raise NotImplementedError

    def commutator_description(self) -> str:
        raise NotImplementedError

    def is_stem(self) -> bool:
        """True iff every central element lies in the commutator subgroup."""
        raise NotImplementedError


# ---------------------------------------------------------------------------
# Discrete Heisenberg group
# ---------------------------------------------------------------------------


class Heisenberg(Group):
    """Integer unitriangular matrices [[1,a,c],[0,1,b],[0,0,1]], stored (a,b,c).

    (a,b,c)*(x,y,z) = (a+x, b+y, c+z+a*y) and (a,b,c)^-1 = (-a,-b,ab-c).
    Generated by x=(1,0,0), y=(0,1,0); their commutator z=(0,0,1) spans the
    center, which equals the commutator subgroup.
    """

    def __init__(self):
        super().__init__("heisenberg", ("heisenberg",))

    def element(self, payload: Sequence) -> GroupElement:
        a, b, c = payload
        if not all(isinstance(v, int) for v in (a, b, c)):
            raise TypeError("Heisenberg entries must be integers")
        return GroupElement(self, (a, b, c))

    def identity(self) -> GroupElement:
        return GroupElement(self, (0, 0, 0))

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check(g, h)
        a, b, c = g.payload
        x, y, z = h.payload
        return GroupElement(self, (a + x, b + y, c + z + a * y))

    def inv(self, g: GroupElement) -> GroupElement:
        self._check(g)
        a, b, c = g.payload
        return GroupElement(self, (-a, -b, a * b - c))

    def generators(self) -> List[GroupElement]:
        return [self.element((1, 0, 0)), self.element((0, 1, 0))]

    def generator_names(self) -> List[str]:
        return ["x", "y"]

    def word(self, g: GroupElement) -> List[GroupElement]:
        # g = x^a y^b z^(c-ab), with z = x y x^-1 y^-1
        a, b, c = g.payload
        x, y = self.generators()
        xi, yi = self.inv(x), self.inv(y)
        letters: List[GroupElement] = []
        letters += [x] * a if a >= 0 else [xi] * (-a)
        letters += [y] * b if b >= 0 else [yi] * (-b)
        m = c - a * b
        z_word = [x, y, xi, yi]
        z_inv_word = [y, x, yi, xi]
        letters += z_word * m if m >= 0 else z_inv_word * (-m)
        return letters

    def relators(self) -> List[List[GroupElement]]:
        # z is central: [x, z] = [y, z] = e, with z spelled out as [x, y]
        x, y = self.generators()
        xi, yi = self.inv(x), self.inv(y)
        z_word = [x, y, xi, yi]
        z_inv_word = [y, x, yi, xi]
        return [
            [x] + z_word + [xi] + z_inv_word,
            [y] + z_word + [yi] + z_inv_word,
        ]

    def is_central(self, z: GroupElement) -> bool:
        self._check(z)
        a, b, _ = z.payload
        return a == 0 and b == 0

    def is_conjugate(self, a: GroupElement, b: GroupElement) -> bool:
        # Conjugating (a,b,c) by (p,q,r) shifts c by p*b - q*a, so the class
        # of a non-central element is {(a, b, c + k*gcd(a,b))}; central
        # elements form singleton classes.  Validated against the brute-force
        # oracle in the test suite.
        self._check(a, b)
        a1, b1, c1 = a.payload
        a2, b2, c2 = b.payload
        if (a1, b1) != (a2, b2):
            return False
        if a1 == 0 and b1 == 0:
            return c1 == c2
        return (c1 - c2) % gcd(a1, b1) == 0

    def class_representative(self, a: GroupElement) -> GroupElement:
        self._check(a)
        p, q, c = a.payload
        if p == 0 and q == 0:
            return a
        return GroupElement(self, (p, q, c % gcd(p, q)))

    def abelian_basis(self) -> List[GroupElement]:
        return self.generators()

    def abelian_coords(self, g: GroupElement) -> Tuple[int, ...]:
        self._check(g)
        a, b, _ = g.payload
        return (a, b)

    def derived_quotient(self) -> "QuotientSpec":
        return HeisenbergDerivedQuotient(self)

    def center_description(self) -> str:
        return "{(0, 0, c) : c in Z} (the c-axis)"

    def commutator_description(self) -> str:
        return "{(0, 0, c) : c in Z} (equals the center)"

    def is_stem(self) -> bool:
        # center == commutator subgroup
        return True


# ---------------------------------------------------------------------------
# Free abelian groups
# ---------------------------------------------------------------------------


class FreeAbelian(Group):
    """Z^n with componentwise addition."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be >= 1")
        super().__init__(f"zn:{n}", ("zn", n))
        self.n = n

    def element(self, payload: Sequence) -> GroupElement:
        vec = tuple(payload)
        if len(vec) != self.n or not all(isinstance(v, int) for v in vec):
            raise TypeError(f"expected an integer vector of length {self.n}")
        return GroupElement(self, vec)

    def identity(self) -> GroupElement:
        return GroupElement(self, (0,) * self.n)

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check(g, h)
        return GroupElement(self, tuple(a + b for a, b in zip(g.payload, h.payload)))

    def inv(self, g: GroupElement) -> GroupElement:
        self._check(g)
        return GroupElement(self, tuple(-a for a in g.payload))

    def generators(self) -> List[GroupElement]:
        gens = []
        for i in range(self.n):
            vec = [0] * self.n
            vec[i] = 1
            gens.append(self.element(vec))
        return gens

    def generator_names(self) -> List[str]:
        return [f"e{i + 1}" for i in range(self.n)]

    def word(self, g: GroupElement) -> List[GroupElement]:
        letters: List[GroupElement] = []
        for i, coord in enumerate(g.payload):
            basis = self.generators()[i]
            letters += [basis] * coord if coord >= 0 else [self.inv(basis)] * (-coord)
        return letters

    def relators(self) -> List[List[GroupElement]]:
        rels = []
        gens = self.generators()
        for i in range(self.n):
            for j in range(i + 1, self.n):
                a, b = gens[i], gens[j]
                rels.append([a, b, self.inv(a), self.inv(b)])
        return rels

    def is_central(self, z: GroupElement) -> bool:
        self._check(z)
        return True

    def is_conjugate(self, a: GroupElement, b: GroupElement) -> bool:
        self._check(a, b)
        return a == b

    def class_representative(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return a

    def abelian_basis(self) -> List[GroupElement]:
        return self.generators()

    def abelian_coords(self, g: GroupElement) -> Tuple[int, ...]:
        self._check(g)
        return g.payload

    def derived_quotient(self) -> "QuotientSpec":
        return FreeAbelianTrivialQuotient(self)

    def center_description(self) -> str:
        return "the whole group (abelian)"

    def commutator_description(self) -> str:
        return "trivial subgroup {0}"

    def is_stem(self) -> bool:
        return False


# ---------------------------------------------------------------------------
# Finite permutation groups
# ---------------------------------------------------------------------------


def _perm_mul(g: tuple, h: tuple) -> tuple:
    # (g h)(i) = g(h(i)), one-line 1-based
    return tuple(g[h[i] - 1] for i in range(len(g)))


def _perm_inv(g: tuple) -> tuple:
    out = [0] * len(g)
    for i, img in enumerate(g):
        out[img - 1] = i + 1
    return tuple(out)


def _perm_parity(g: tuple) -> int:
    seen = [False] * len(g)
    parity = 0
    for i in range(len(g)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = g[j] - 1
            length += 1
        parity ^= (length - 1) & 1
    return parity


class PermutationGroup(Group):
    """A finite permutation group generated by explicit permutations.

    Elements are enumerated by closure from the generating set at
    construction time, which also records a word for every element.
    """

    def __init__(self, name: str, degree: int, generator_payloads: Sequence[tuple]):
        super().__init__(f"perm:{name}", ("perm", name, degree, tuple(generator_payloads)))
        self.degree = degree
        self.short_name = name
        self._generator_payloads = [tuple(p) for p in generator_payloads]
        for p in self._generator_payloads:
            self._validate_payload(p)
        self._elements, self._words = self._close()
        self._derived: Optional[FrozenSet[tuple]] = None

    @staticmethod
    def symmetric(n: int) -> "PermutationGroup":
        if n < 2:
            raise ValueError("degree must be >= 2")
        swap = (2, 1) + tuple(range(3, n + 1))
        cycle = tuple(range(2, n + 1)) + (1,)
        return PermutationGroup(f"s{n}", n, [swap, cycle])

    @staticmethod
    def alternating(n: int) -> "PermutationGroup":
        if n < 3:
            raise ValueError("degree must be >= 3")
        three_cycle = (2, 3, 1) + tuple(range(4, n + 1))
        if n % 2 == 1:
            second = tuple(range(2, n + 1)) + (1,)
        else:
            second = (1,) + tuple(range(3, n + 1)) + (2,)
        group = PermutationGroup(f"a{n}", n, [three_cycle, second])
        expected = 1  # n!/2
        for k in range(3, n + 1):
            expected *= k
        if len(group._elements) != expected:
            raise ValueError(f"generators do not generate A{n}")
        return group

    def _validate_payload(self, p: tuple) -> None:
        if sorted(p) != list(range(1, self.degree + 1)):
            raise TypeError(f"not a permutation of 1..{self.degree}: {p}")

    def _close(self):
        gens = self._generator_payloads
        letters = []
        for p in gens:
            letters.append(p)
        for p in gens:
            inv = _perm_inv(p)
            if inv not in letters:
                letters.append(inv)
        identity = tuple(range(1, self.degree + 1))
        words: Dict[tuple, List[tuple]] = {identity: []}
        frontier = [identity]
        while frontier:
            nxt = []
            for w in frontier:
                for letter in letters:
                    prod = _perm_mul(w, letter)
                    if prod not in words:
                        words[prod] = words[w] + [letter]
                        nxt.append(prod)
            frontier = nxt
        elements = sorted(words)
        return elements, words

    def element(self, payload: Sequence) -> GroupElement:
        p = tuple(payload)
        self._validate_payload(p)
        if p not in self._words:
            raise ValueError(f"{p} is not an element of {self.name}")
        return GroupElement(self, p)

    def identity(self) -> GroupElement:
        return GroupElement(self, tuple(range(1, self.degree + 1)))

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check(g, h)
        return GroupElement(self, _perm_mul(g.payload, h.payload))

    def inv(self, g: GroupElement) -> GroupElement:
        self._check(g)
        return GroupElement(self, _perm_inv(g.payload))

    def generators(self) -> List[GroupElement]:
        return [GroupElement(self, p) for p in self._generator_payloads]

    def word(self, g: GroupElement) -> List[GroupElement]:
        self._check(g)
        return [GroupElement(self, p) for p in self._words[g.payload]]

    def finite_elements(self) -> List[GroupElement]:
        return [GroupElement(self, p) for p in self._elements]

    def is_central(self, z: GroupElement) -> bool:
        self._check(z)
        return all(
            _perm_mul(z.payload, g) == _perm_mul(g, z.payload)
            for g in self._generator_payloads
        )

    def is_conjugate(self, a: GroupElement, b: GroupElement) -> bool:
        self._check(a, b)
        return b.payload in self._class_payloads(a.payload)

    def _class_payloads(self, a: tuple) -> FrozenSet[tuple]:
        return frozenset(
            _perm_mul(_perm_mul(t, a), _perm_inv(t)) for t in self._elements
        )

    def conjugacy_class(self, a: GroupElement) -> FrozenSet[GroupElement]:
        self._check(a)
        return frozenset(GroupElement(self, p) for p in self._class_payloads(a.payload))

    def class_representative(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return GroupElement(self, min(self._class_payloads(a.payload)))

    def center_payloads(self) -> FrozenSet[tuple]:
        return frozenset(
            z for z in self._elements
            if all(_perm_mul(z, g) == _perm_mul(g, z) for g in self._elements)
        )

    def derived_payloads(self) -> FrozenSet[tuple]:
        if self._derived is None:
            comms = {
                _perm_mul(_perm_mul(g, h), _perm_inv(_perm_mul(h, g)))
                for g in self._elements
                for h in self._elements
            }
            closure = set(comms)
            closure.add(tuple(range(1, self.degree + 1)))
            changed = True
            while changed:
                changed = False
                for a in list(closure):
                    for b in comms:
                        prod = _perm_mul(a, b)
                        if prod not in closure:
                            closure.add(prod)
                            changed = True
            self._derived = frozenset(closure)
        return self._derived

    def quotient_by(self, subgroup_payloads: Iterable[tuple]) -> "FiniteQuotient":
        return FiniteQuotient(self, [tuple(p) for p in subgroup_payloads])

    def derived_quotient(self) -> "QuotientSpec":
        return FiniteQuotient(self, sorted(self.derived_payloads()))

    def center_description(self) -> str:
        return "{" + ", ".join(map(str, sorted(self.center_payloads()))) + "}"

    def commutator_description(self) -> str:
        derived = sorted(self.derived_payloads())
        if len(derived) > 12:
            return f"subgroup of order {len(derived)}"
        return "{" + ", ".join(map(str, derived)) + "}"

    def is_stem(self) -> bool:
        return self.center_payloads() <= self.derived_payloads()


# ---------------------------------------------------------------------------
# Quotients with abelian quotient group
# ---------------------------------------------------------------------------


class QuotientSpec:
    """A normal subgroup N of G with abelian G/N, exposed as a key map.

    Keys are canonical coset labels: the key map is constant on cosets,
    injective across cosets, and composes with the group operation.
    """

    def __init__(self, group: Group, description: str):
        self.group = group
        self.description = description

    def key(self, g: GroupElement) -> tuple:
        raise NotImplementedError

    def identity_key(self) -> tuple:
        return self.key(self.group.identity())

    def combine(self, k1: tuple, k2: tuple) -> tuple:
        raise NotImplementedError

    def contains(self, g: GroupElement) -> bool:
        """Membership in N."""
        return self.key(g) == self.identity_key()

    def key_to_json(self, k: tuple):
        return list(k)

    def key_name(self, k: tuple) -> str:
        return str(tuple(k))


class HeisenbergDerivedQuotient(QuotientSpec):
    """H / H' with H' the c-axis; keys are (a, b) in Z + Z."""

    def __init__(self, group: Heisenberg):
        super().__init__(group, "derived subgroup (= center, the c-axis)")

    def key(self, g: GroupElement) -> tuple:
        self.group._check(g)
        a, b, _ = g.payload
        return (a, b)

    def combine(self, k1: tuple, k2: tuple) -> tuple:
        return (k1[0] + k2[0], k1[1] + k2[1])


class FreeAbelianTrivialQuotient(QuotientSpec):
    """Z^n / {0}: the key is the vector itself."""

    def __init__(self, group: FreeAbelian):
        super().__init__(group, "trivial subgroup (derived subgroup of Z^n)")

    def key(self, g: GroupElement) -> tuple:
        self.group._check(g)
        return g.payload

    def combine(self, k1: tuple, k2: tuple) -> tuple:
        return tuple(a + b for a, b in zip(k1, k2))


class FiniteQuotient(QuotientSpec):
    """Quotient of a finite permutation group by an explicit normal subgroup.

    Validated at construction: N must be a subgroup, normal, and G/N must be
    abelian (equivalently G' <= N).  When the abelian check fails the error
    carries a counterexample element whose conjugacy class escapes its coset.
    Keys are the lexicographically minimal coset member.
    """

    def __init__(self, group: PermutationGroup, subgroup_payloads: Sequence[tuple]):
        super().__init__(group, f"normal subgroup of order {len(set(subgroup_payloads))}")
        self._n = frozenset(tuple(p) for p in subgroup_payloads)
        self._validate()
        self._keys: Dict[tuple, tuple] = {}
        for g in group._elements:
            coset = [_perm_mul(g, n) for n in self._n]
            self._keys[g] = min(coset)
        even = frozenset(p for p in group._elements if _perm_parity(p) == 0)
        self._sign_quotient = self._n == even and len(group._elements) == 2 * len(even)

    def _validate(self) -> None:
        group: PermutationGroup = self.group  # type: ignore[assignment]
        identity = tuple(range(1, group.degree + 1))
        if identity not in self._n:
            raise QuotientError("subgroup must contain the identity")
        for p in self._n:
            if p not in group._words:
                raise QuotientError(f"{p} is not an element of {group.name}")
            if _perm_inv(p) not in self._n:
                raise QuotientError(f"not closed under inverses at {p}")
            for q in self._n:
                if _perm_mul(p, q) not in self._n:
                    raise QuotientError(f"not closed under products at {p} * {q}")
        for g in group._elements:
            gi = _perm_inv(g)
            for n in self._n:
                if _perm_mul(_perm_mul(g, n), gi) not in self._n:
                    raise QuotientError(f"subgroup is not normal: conjugating {n} by {g} escapes")
        # abelian quotient <=> every commutator lies in N
        for g in group._elements:
            for h in group._elements:
                comm = _perm_mul(_perm_mul(g, h), _perm_inv(_perm_mul(h, g)))
                if comm not in self._n:
                    raise QuotientError(
                        "quotient is not abelian (a commutator escapes the subgroup)",
                        diagnostic=self._class_vs_coset_counterexample(),
                    )

    def _class_vs_coset_counterexample(self) -> dict:
        """An element whose conjugacy class is not contained in its coset.

        Such an element always exists when the quotient is non-abelian; the
        enumeration makes the failure concrete in the error diagnostic.
        """
        group: PermutationGroup = self.group  # type: ignore[assignment]
        for a in group._elements:
            cls = group._class_payloads(a)
            coset = frozenset(_perm_mul(a, n) for n in self._n)
            if not cls <= coset:
                return {
                    "element": a,
                    "conjugacy_class": sorted(cls),
                    "coset": sorted(coset),
                }
        return {}

    def key(self, g: GroupElement) -> tuple:
        self.group._check(g)
        return self._keys[g.payload]

    def combine(self, k1: tuple, k2: tuple) -> tuple:
        return self._keys[_perm_mul(k1, k2)]

    def subgroup_elements(self) -> FrozenSet[GroupElement]:
        return frozenset(GroupElement(self.group, p) for p in self._n)

    def key_name(self, k: tuple) -> str:
        if self._sign_quotient:
            return "even" if k == self.identity_key() else "odd"
        return str(tuple(k))


_PERM_CACHE: Dict[str, PermutationGroup] = {}


def group_from_name(name: str) -> Group:
    """Resolve a CLI group selector: heisenberg | zn:<n> | perm:<sN|aN>."""
    if name == "heisenberg":
        return Heisenberg()
    if name.startswith("zn:"):
        return FreeAbelian(int(name.split(":", 1)[1]))
    if name.startswith("perm:"):
        short = name.split(":", 1)[1]
        if short not in _PERM_CACHE:
            kind, degree = short[0], int(short[1:])
            if kind == "s":
                _PERM_CACHE[short] = PermutationGroup.symmetric(degree)
            elif kind == "a":
                _PERM_CACHE[short] = PermutationGroup.alternating(degree)
            else:
                raise ValueError(f"unknown permutation group {short!r}")
        return _PERM_CACHE[short]
    raise ValueError(f"unknown group selector {name!r}")
