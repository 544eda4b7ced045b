"""Canonical JSON documents for semigroups, ideals and generation inputs.

Ideal document::

    {"p": 2,
     "ambient": {"gamma": [1, 1], "small": [[0, 0], [1, 1]]},
     "ideal": {"mu": [1, 1], "gammaE": [1, 1], "small": [[1, 1]]}}

A document without ``"ideal"`` stands for the ambient semigroup itself.
Output is canonical: sorted keys, lexicographically sorted point lists and
no optional whitespace, so equal objects serialize to identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .core import GoodIdeal, GoodSemigroup
from .lattice import DimensionError, point


class DocumentError(ValueError):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def points_json(pts) -> list:
    return [list(v) for v in sorted(tuple(map(int, v)) for v in pts)]


def _pt(raw, p, where):
    if not isinstance(raw, list):
        raise DocumentError(f"{where}: expected a list of integers")
    try:
        v = point(raw)
    except (TypeError, OverflowError, DimensionError) as exc:
        raise DocumentError(f"{where}: {exc}") from exc
    if len(v) != p:
        raise DocumentError(f"{where}: expected {p} coordinates, got {len(v)}")
    return v


def _pts(raw, p, where):
    if not isinstance(raw, list):
        raise DocumentError(f"{where}: expected a list of points")
    return frozenset(_pt(v, p, f"{where}[{k}]") for k, v in enumerate(raw))


def semigroup_to_dict(S: GoodSemigroup) -> dict:
    return {"gamma": list(S.gamma), "small": points_json(S.small)}


def ideal_to_dict(E: GoodIdeal) -> dict:
    return {
        "p": E.p,
        "ambient": semigroup_to_dict(E.ambient),
        "ideal": {"mu": list(E.mu), "gammaE": list(E.gammaE), "small": points_json(E.small)},
    }


def ideal_from_dict(doc: dict) -> GoodIdeal:
    """Parse an ideal document.  Structural problems raise DocumentError;
    axiom checks are left to ``validate``."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    extra = set(doc) - {"p", "ambient", "ideal"}
    if extra:
        raise DocumentError(f"unknown keys {sorted(extra)}")
    try:
        p = doc["p"]
        amb = doc["ambient"]
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise DocumentError("p must be a positive integer")
        S = GoodSemigroup(_pt(amb["gamma"], p, "ambient.gamma"), _pts(amb["small"], p, "ambient.small"))
        if "ideal" not in doc:
            return S.as_ideal()
        ide = doc["ideal"]
        return GoodIdeal(S, _pt(ide["mu"], p, "ideal.mu"), _pt(ide["gammaE"], p, "ideal.gammaE"),
                         _pts(ide["small"], p, "ideal.small"))
    except KeyError as exc:
        raise DocumentError(f"missing key {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(str(exc)) from exc


def loads_ideal(text: str) -> GoodIdeal:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return ideal_from_dict(doc)


def load_ideal(path: str) -> GoodIdeal:
    with open(path, encoding="utf-8") as fh:
        return loads_ideal(fh.read())


def dumps_ideal(E: GoodIdeal) -> str:
    return dumps(ideal_to_dict(E))


def generation_input_to_dict(G, ambient: GoodSemigroup) -> dict:
    """``{"p", "ambient", "projections": [{"omit": i, ...ideal document}], "relmax"}``."""
    projs = []
    for J in sorted(G.projections):
        omit = next(i for i in range(G.p) if i not in J)
        projs.append({"omit": omit, **ideal_to_dict(G.projections[J])})
    return {"p": G.p, "ambient": semigroup_to_dict(ambient), "projections": projs,
            "relmax": points_json(G.relmax)}


def generation_input_from_dict(doc: dict):
    """Inverse of ``generation_input_to_dict``; returns (GenerationInput, ambient)."""
    from .generation import GenerationInput

    try:
        p = doc["p"]
        ambient = ideal_from_dict({"p": p, "ambient": doc["ambient"]}).ambient
        projections = {}
        for k, entry in enumerate(doc["projections"]):
            omit = entry["omit"]
            if not isinstance(omit, int) or not 0 <= omit < p:
                raise DocumentError(f"projections[{k}].omit out of range")
            sub = {key: entry[key] for key in ("p", "ambient", "ideal") if key in entry}
            J = tuple(j for j in range(p) if j != omit)
            if J in projections:
                raise DocumentError(f"two projections omit coordinate {omit}")
            projections[J] = ideal_from_dict(sub)
        relmax = _pts(doc["relmax"], p, "relmax")
        return GenerationInput(projections, relmax), ambient
    except KeyError as exc:
        raise DocumentError(f"missing key {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(str(exc)) from exc
