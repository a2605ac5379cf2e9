"""Reading and writing instance files.

An instance file is a JSON object::

    {
      "basis": ["u", "v", "w"],
      "products": [["u", "v", {"w": "1"}]],
      "derivation": {"inner": {"u": "1"}},
      "a": {"u": "1", "v": "1"},
      "bounds": {"nilpotency": 64, "power": 32}
    }

Products list ``[i, j, coords]`` where ``i`` and ``j`` are basis labels or
indices and ``coords`` is a coordinate list or a ``{label: rational}`` map;
omitted products are zero.  ``derivation`` is a list of matrix rows (column
``j`` holds ``d(e_j)``), ``{"matrix": rows}``, ``{"images": {label: element}}``
or ``{"inner": element}``.  Instead of ``basis``/``products`` a file may give
``"generator": "heisenberg"`` or ``"generator": ["free-nilpotent", g, N]``.
Rationals are integers or strings ``"p/q"``; floats are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Dict, List

from .algebra import Algebra, AlgebraElement, free_nilpotent_algebra, heisenberg_algebra
from .derivation import Derivation, derivation_from_images, inner_derivation
from .errors import DiffPolyError, DimensionMismatch
from .rational import to_rational

DEFAULT_BOUNDS = {"nilpotency": 64, "power": 32}


class InputError(DiffPolyError):
    """The file is not a well-formed instance; ``where`` locates the problem."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


@dataclass
class LoadedInstance:
    algebra: Algebra
    derivation: Derivation
    a: AlgebraElement
    nilpotency_bound: int
    power_bound: int


def parse_json(text: str, source: str = "<input>") -> Dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}", exc.msg) from None
    if not isinstance(doc, dict):
        raise InputError("$", "top level must be a JSON object")
    return doc


def read_document(path: str) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(path, exc.strerror or str(exc)) from None
    return parse_json(text, path)


def _scalar(value, where: str):
    if isinstance(value, float):
        raise InputError(where, f"float {value!r} not allowed; write rationals as \"p/q\" strings")
    try:
        return to_rational(value)
    except (TypeError, ValueError) as exc:
        raise InputError(where, str(exc)) from None


def _index(labels: List[str], ref, where: str) -> int:
    if isinstance(ref, bool):
        raise InputError(where, "booleans are not basis references")
    if isinstance(ref, int):
        if not 0 <= ref < len(labels):
            raise InputError(where, f"index {ref} outside basis of size {len(labels)}")
        return ref
    if isinstance(ref, str) and ref in labels:
        return labels.index(ref)
    raise InputError(where, f"unknown basis reference {ref!r}; basis is {labels}")


def _coords(labels: List[str], value, where: str) -> list:
    dim = len(labels)
    if isinstance(value, list):
        if len(value) != dim:
            raise InputError(where, f"expected {dim} coordinates, got {len(value)}")
        return [_scalar(c, f"{where}[{n}]") for n, c in enumerate(value)]
    if isinstance(value, dict):
        out = [to_rational(0)] * dim
        for ref, c in value.items():
            out[_index(labels, ref, f"{where}.{ref}")] += _scalar(c, f"{where}.{ref}")
        return out
    raise InputError(where, "an element is a coordinate list or a {label: rational} object")


def _generated_algebra(directive, where: str) -> Algebra:
    if directive == "heisenberg":
        return heisenberg_algebra()
    if (isinstance(directive, list) and len(directive) == 3 and directive[0] == "free-nilpotent"
            and all(isinstance(v, int) and not isinstance(v, bool) for v in directive[1:])):
        return free_nilpotent_algebra(directive[1], directive[2])
    raise InputError(where, 'expected "heisenberg" or ["free-nilpotent", g, N]')


def build_algebra(doc: Dict[str, Any]) -> Algebra:
    """Algebra described by ``doc``; associativity is validated (and may raise)."""
    if "generator" in doc:
        return _generated_algebra(doc["generator"], "$.generator")
    labels = doc.get("basis")
    if not isinstance(labels, list) or not labels or not all(isinstance(s, str) for s in labels):
        raise InputError("$.basis", "expected a non-empty list of label strings")
    if len(set(labels)) != len(labels):
        raise InputError("$.basis", "labels must be distinct")
    products = {}
    raw = doc.get("products", [])
    if not isinstance(raw, list):
        raise InputError("$.products", "expected a list of [i, j, coords] entries")
    for n, entry in enumerate(raw):
        where = f"$.products[{n}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise InputError(where, "expected [i, j, coords]")
        i = _index(labels, entry[0], f"{where}[0]")
        j = _index(labels, entry[1], f"{where}[1]")
        if (i, j) in products:
            raise InputError(where, f"product {labels[i]}*{labels[j]} given twice")
        products[(i, j)] = _coords(labels, entry[2], f"{where}[2]")
    return Algebra(labels, products)


def build_element(algebra: Algebra, value, where: str) -> AlgebraElement:
    return AlgebraElement(algebra, _coords(list(algebra.labels), value, where))


def build_derivation(algebra: Algebra, value) -> Derivation:
    """Derivation described by ``value``; Leibniz's rule is validated (and may raise)."""
    where = "$.derivation"
    labels = list(algebra.labels)
    if isinstance(value, dict) and set(value) == {"inner"}:
        return inner_derivation(build_element(algebra, value["inner"], f"{where}.inner"))
    if isinstance(value, dict) and set(value) == {"images"}:
        images = value["images"]
        if not isinstance(images, dict):
            raise InputError(f"{where}.images", "expected {label: element}")
        out = [algebra.zero()] * algebra.dim
        for ref, img in images.items():
            out[_index(labels, ref, f"{where}.images.{ref}")] = build_element(
                algebra, img, f"{where}.images.{ref}")
        return derivation_from_images(algebra, out)
    if isinstance(value, dict) and set(value) == {"matrix"}:
        value, where = value["matrix"], f"{where}.matrix"
    if isinstance(value, list):
        if len(value) != algebra.dim:
            raise InputError(where, f"expected {algebra.dim} matrix rows")
        rows = [_coords(labels, row, f"{where}[{n}]") for n, row in enumerate(value)]
        try:
            return Derivation(algebra, rows)
        except DimensionMismatch as exc:
            raise InputError(where, str(exc)) from None
    raise InputError(where, 'expected matrix rows, {"matrix": rows}, {"images": ...} or {"inner": element}')


def _bound(doc: Dict[str, Any], name: str) -> int:
    bounds = doc.get("bounds", {})
    if not isinstance(bounds, dict):
        raise InputError("$.bounds", "expected an object")
    value = bounds.get(name, DEFAULT_BOUNDS[name])
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InputError(f"$.bounds.{name}", "expected a positive integer")
    return value


def load_instance(doc: Dict[str, Any]) -> LoadedInstance:
    """Build the instance; :class:`InputError` for malformed input, other library errors for invalid math."""
    algebra = build_algebra(doc)
    if "derivation" not in doc:
        raise InputError("$", "missing field 'derivation'")
    d = build_derivation(algebra, doc["derivation"])
    a = build_element(algebra, doc["a"], "$.a") if "a" in doc else algebra.basis_element(0)
    return LoadedInstance(algebra, d, a, _bound(doc, "nilpotency"), _bound(doc, "power"))


def _element_map(x: AlgebraElement) -> Dict[str, str]:
    return {label: str(c) for label, c in zip(x.parent.labels, x.coords) if c}


def instance_document(inst: LoadedInstance, derivation: Any = None) -> Dict[str, Any]:
    """Canonical JSON-ready description; ``derivation`` overrides the default images form."""
    algebra = inst.algebra
    products = [
        [algebra.labels[i], algebra.labels[j], {algebra.labels[l]: str(c) for l, c in prod}]
        for (i, j), prod in sorted(algebra.nonzero_products().items())
    ]
    if derivation is None:
        derivation = {"images": {label: _element_map(img)
                                 for label, img in zip(algebra.labels, inst.derivation.images)}}
    return {
        "basis": list(algebra.labels),
        "products": products,
        "derivation": derivation,
        "a": _element_map(inst.a),
        "bounds": {"nilpotency": inst.nilpotency_bound, "power": inst.power_bound},
    }


def generated_instance(kind: str, generators: int = 0, nclass: int = 0) -> Dict[str, Any]:
    """Ready-to-run document: inner derivation by the first generator, ``a`` the second (or the only) one."""
    if kind == "heisenberg":
        algebra = heisenberg_algebra()
        inner, a = algebra.basis_element("u"), algebra.basis_element("u") + algebra.basis_element("v")
    elif kind == "free-nilpotent":
        algebra = free_nilpotent_algebra(generators, nclass)
        inner = algebra.generator(0)
        a = algebra.generator(1 if generators > 1 else 0)
    else:
        raise ValueError(f"unknown instance kind {kind!r}")
    inst = LoadedInstance(algebra, inner_derivation(inner), a,
                          DEFAULT_BOUNDS["nilpotency"], DEFAULT_BOUNDS["power"])
    return instance_document(inst, {"inner": _element_map(inner)})


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"
