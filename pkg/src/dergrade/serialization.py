"""JSON codecs for elements, arrows, derivations, and decompositions.

Everything serializes deterministically: coefficients in lowest terms, terms
sorted by the kernel's element order, component keys sorted lexicographically.
"""

from __future__ import annotations

import json
from typing import Optional

from .algebra import AlgebraElement
from .coefficients import GaussianRational
from .derivations import Derivation
from .grading import GradedDecomposition
from .groups import Arrow, Group, group_from_name


class SpecError(ValueError):
    """A malformed derivation / job specification."""


def arrow_to_json(arrow: Arrow) -> dict:
    group = arrow.u.group
    return {"u": group.element_to_json(arrow.u), "v": group.element_to_json(arrow.v)}


def arrow_from_json(group: Group, data) -> Arrow:
    try:
        return Arrow(group.element_from_json(data["u"]), group.element_from_json(data["v"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"bad arrow spec: {exc}") from exc


def derivation_to_json(d: Derivation) -> dict:
    if d.spec is not None:
        return d.spec
    return {
        "group": d.group.name,
        "kind": "table",
        "images": {
            name: d.images[s].to_json()
            for name, s in zip(d.group.generator_names(), d.group.generators())
        },
    }


def derivation_from_json(data, group: Optional[Group] = None) -> Derivation:
    if not isinstance(data, dict):
        raise SpecError("derivation spec must be a JSON object")
    try:
        spec_group = data.get("group")
        if group is None:
            if spec_group is None:
                raise SpecError("derivation spec is missing a group")
            group = group_from_name(spec_group)
        elif spec_group is not None and spec_group != group.name:
            raise SpecError(
                f"derivation spec names group {spec_group!r}, expected {group.name!r}"
            )
        kind = data.get("kind")
        if kind == "inner":
            return Derivation.inner(AlgebraElement.from_json(group, data["a"]))
        if kind == "central":
            tau = [GaussianRational.from_json(t) for t in data["tau"]]
            z = group.element_from_json(data["z"])
            return Derivation.central(group, tau, z)
        if kind == "table":
            by_name = dict(zip(group.generator_names(), group.generators()))
            images = {}
            for name, img in data["images"].items():
                if name not in by_name:
                    raise SpecError(f"unknown generator name {name!r}")
                images[by_name[name]] = AlgebraElement.from_json(group, img)
            for name, s in by_name.items():
                images.setdefault(s, AlgebraElement.zero(group))
            return Derivation.from_table(group, images)
        raise SpecError(f"unknown derivation kind {kind!r}")
    except SpecError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"bad derivation spec: {exc}") from exc


def decomposition_to_json(dec: GradedDecomposition) -> dict:
    quotient = dec.setup.quotient
    return {
        "base": derivation_to_json(dec.base),
        "components": [
            {
                "key": quotient.key_to_json(key),
                "derivation": derivation_to_json(dec.components[key]),
            }
            for key in dec.keys()
        ],
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"
