"""Named property suites over random derivations, arrows, and word pairs.

Each suite draws its inputs from a seeded sampler and counts exact
pass/fail; the CLI `verify` command and the acceptance tests both run these.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .derivations import (
    char_bracket_value,
    verify_char_composition,
    verify_leibniz,
)
from .grading import (
    GradingSetup,
    check_bracket_closure,
    decompose,
    support_cosets,
)
from .groups import Arrow, Group, QuotientSpec
from .sampling import Sampler


@dataclass
class PropertyResult:
    name: str
    passed: int
    failed: int

    @property
    def ok(self) -> bool:
        return self.failed == 0


def check_leibniz(sampler: Sampler, samples: int) -> PropertyResult:
    passed = failed = 0
    for _ in range(samples):
        d = sampler.derivation()
        x = sampler.algebra_element()
        y = sampler.algebra_element()
        if verify_leibniz(d, x, y):
            passed += 1
        else:
            failed += 1
    return PropertyResult("leibniz", passed, failed)


def check_char_composition(sampler: Sampler, samples: int) -> PropertyResult:
    passed = failed = 0
    for _ in range(samples):
        d = sampler.derivation()
        phi, psi = sampler.composable_arrows()
        if verify_char_composition(d, phi, psi):
            passed += 1
        else:
            failed += 1
    return PropertyResult("char-composition", passed, failed)


def check_bracket_equivalence(
    sampler: Sampler, samples: int, arrows_per_pair: int = 10
) -> PropertyResult:
    passed = failed = 0
    for _ in range(samples):
        d = sampler.derivation()
        p = sampler.derivation()
        bracket = d.bracket(p)
        for _ in range(arrows_per_pair):
            arrow = sampler.arrow(bracket)
            if char_bracket_value(d, p, arrow) == bracket.character(arrow):
                passed += 1
            else:
                failed += 1
    return PropertyResult("bracket-equivalence", passed, failed)


def check_closure(
    sampler: Sampler, setup: GradingSetup, samples: int
) -> PropertyResult:
    passed = failed = 0
    for _ in range(samples):
        report = check_bracket_closure(
            sampler.derivation(), sampler.derivation(), setup
        )
        if report.passed:
            passed += 1
        else:
            failed += 1
    return PropertyResult("closure", passed, failed)


def check_direct_sum(
    sampler: Sampler, setup: GradingSetup, samples: int
) -> PropertyResult:
    passed = failed = 0
    for _ in range(samples):
        d = sampler.derivation()
        dec = decompose(d, setup)
        ok = dec.total() == d
        seen = set()
        for key, comp in dec.components.items():
            cosets = support_cosets(comp, setup)
            if not cosets <= {key} or key in seen:
                ok = False
            seen.add(key)
        if ok:
            passed += 1
        else:
            failed += 1
    return PropertyResult("direct-sum", passed, failed)


def run_all(
    group: Group,
    quotient: Optional[QuotientSpec] = None,
    *,
    seed: int = 0,
    samples: int = 25,
    word_len: int = 4,
) -> List[PropertyResult]:
    setup = GradingSetup(group, quotient or group.derived_quotient())
    results = [
        check_leibniz(Sampler(group, seed, word_len=word_len), samples),
        check_char_composition(Sampler(group, seed + 1, word_len=word_len), samples),
        check_bracket_equivalence(
            Sampler(group, seed + 2, word_len=word_len), samples
        ),
        check_closure(Sampler(group, seed + 3, word_len=word_len), setup, samples),
        check_direct_sum(Sampler(group, seed + 4, word_len=word_len), setup, samples),
    ]
    return results
