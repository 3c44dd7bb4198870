"""Algebra definition files: UTF-8 JSON documents with exact coefficients.

Document layout (field names are part of the format)::

    {
      "name": "osp12",
      "scalars": "rational" | "rational_function",
      "basis": [{"name": "H", "parity": 0}, ...],
      "binary": [{"args": ["H", "X"], "value": [{"basis": "X", "coeff": "2"}]}, ...],
      "ternary": [{"args": ["H", "X", "Y"], "value": [...]}, ...],
      "alpha": [{"arg": "X", "value": [{"basis": "X", "coeff": "l^2"}]}, ...],
      "options": {"auto_skew_complete": true}
    }

Coefficients are strings in the scalar grammar so rationals and l-expressions
share one exact representation.  A missing ``binary``/``ternary`` key means
the operation is absent (at least one must be present); a present key with an
empty list is the zero operation.  A missing ``alpha`` key (or a missing
``arg``) means the identity on those elements.  With ``auto_skew_complete``
the loader fills the skew counterpart of every listed product and rejects
explicit entries that contradict one another.
"""

from __future__ import annotations

import json

from .errors import DomainError, ParseError, ValidationError
from .field import ScalarDomain, format_scalar, parse_scalar, zero
from .superspace import LinearMap, SuperBasis
from .tensorops import Algebra, binary_from_entries, ternary_from_entries

_DOMAINS = {d.value: d for d in ScalarDomain}


def _parse_value(basis: SuperBasis, domain: ScalarDomain, value, where: str) -> tuple:
    if not isinstance(value, list):
        raise ValidationError(f"{where}: 'value' must be a list")
    out = [None] * basis.dim
    for item in value:
        if not isinstance(item, dict) or set(item) != {"basis", "coeff"}:
            raise ValidationError(f"{where}: value items need 'basis' and 'coeff'")
        i = basis.index(str(item["basis"]))
        if out[i] is not None:
            raise ValidationError(f"{where}: duplicate coefficient for {item['basis']}")
        try:
            out[i] = parse_scalar(str(item["coeff"]), domain)
        except (ParseError, DomainError, ZeroDivisionError) as exc:
            raise ValidationError(
                f"{where}: bad coefficient {item['coeff']!r}: {exc}"
            ) from exc
    z = zero(domain)
    return tuple(z if c is None else c for c in out)


def algebra_from_document(doc: dict) -> Algebra:
    """Build an algebra from a parsed document; see the module docstring."""
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    name = str(doc.get("name", "unnamed"))
    try:
        domain = _DOMAINS[doc.get("scalars", "rational")]
    except KeyError:
        raise ValidationError(
            f"'scalars' must be one of {sorted(_DOMAINS)}, got {doc.get('scalars')!r}"
        ) from None
    basis_spec = doc.get("basis")
    if not isinstance(basis_spec, list) or not basis_spec:
        raise ValidationError("'basis' must be a nonempty list")
    entries = []
    for item in basis_spec:
        if not isinstance(item, dict) or "name" not in item or "parity" not in item:
            raise ValidationError("basis items need 'name' and 'parity'")
        entries.append((str(item["name"]), item["parity"]))
    basis = SuperBasis(entries)

    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise ValidationError("'options' must be an object")
    skew = bool(options.get("auto_skew_complete", True))

    def read_op(key: str, arity: int):
        section = doc.get(key)
        if section is None:
            return None
        if not isinstance(section, list):
            raise ValidationError(f"'{key}' must be a list")
        table = {}
        for row in section:
            if not isinstance(row, dict) or "args" not in row or "value" not in row:
                raise ValidationError(f"'{key}' rows need 'args' and 'value'")
            args = row["args"]
            if not isinstance(args, list) or len(args) != arity:
                raise ValidationError(f"'{key}' args must list {arity} basis names")
            idx = tuple(basis.index(str(a)) for a in args)
            if idx in table:
                raise ValidationError(
                    f"'{key}' lists the product {tuple(args)} twice"
                )
            table[idx] = _parse_value(basis, domain, row["value"], f"{key} {tuple(args)}")
        if key == "binary":
            return binary_from_entries(basis, domain, table, skew)
        return ternary_from_entries(basis, domain, table, skew)

    binary = read_op("binary", 2)
    ternary = read_op("ternary", 3)
    if binary is None and ternary is None:
        raise ValidationError("at least one operation (binary or ternary) is required")

    alpha_spec = doc.get("alpha")
    if alpha_spec is None:
        alpha = LinearMap.identity(basis, domain)
    else:
        if not isinstance(alpha_spec, list):
            raise ValidationError("'alpha' must be a list")
        images = {}
        for row in alpha_spec:
            if not isinstance(row, dict) or "arg" not in row or "value" not in row:
                raise ValidationError("'alpha' rows need 'arg' and 'value'")
            arg = str(row["arg"])
            if arg in images:
                raise ValidationError(f"'alpha' lists {arg} twice")
            images[arg] = _parse_value(basis, domain, row["value"], f"alpha {arg}")
        cols = [
            list(images.get(basis.names[j], basis.basis_vector(j, domain)))
            for j in range(basis.dim)
        ]
        alpha = LinearMap(basis, domain, cols)

    return Algebra(name, basis, domain, alpha, binary, ternary)


def algebra_to_document(alg: Algebra) -> dict:
    """Exact document for an algebra; ``load(save(a))`` reproduces its tensors.

    All nonzero entries are written explicitly and skew completion is turned
    off, so tables that deliberately violate skew symmetry survive the trip.
    """
    names = alg.basis.names

    def vec_items(vec):
        return [
            {"basis": names[i], "coeff": format_scalar(c)}
            for i, c in enumerate(vec)
            if c
        ]

    doc = {
        "name": alg.name,
        "scalars": alg.domain.value,
        "basis": [{"name": n, "parity": p} for n, p in alg.basis.entries],
    }
    if alg.binary is not None:
        doc["binary"] = [
            {"args": [names[i], names[j]], "value": vec_items(alg.binary.table[i][j])}
            for i in range(alg.dim)
            for j in range(alg.dim)
            if any(alg.binary.table[i][j])
        ]
    if alg.ternary is not None:
        doc["ternary"] = [
            {
                "args": [names[i], names[j], names[k]],
                "value": vec_items(alg.ternary.table[i][j][k]),
            }
            for i in range(alg.dim)
            for j in range(alg.dim)
            for k in range(alg.dim)
            if any(alg.ternary.table[i][j][k])
        ]
    doc["alpha"] = [
        {"arg": names[j], "value": vec_items(col)}
        for j, col in enumerate(alg.alpha.columns)
    ]
    doc["options"] = {"auto_skew_complete": False}
    return doc


def load_algebra(path) -> Algebra:
    """Load an algebra document from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.pos) from exc
    return algebra_from_document(doc)


def save_algebra(alg: Algebra, path) -> None:
    """Write the algebra's document as pretty-printed JSON."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_to_document(alg), fh, indent=2, sort_keys=False)
        fh.write("\n")
