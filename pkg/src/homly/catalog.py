"""Built-in algebras and twisting maps, with their published tables.

Every entry is constructed from data written down here; partially listed
tables are completed with the graded skew rules, and every product not
listed is zero.  Where a published table disagrees with the construction
that is supposed to produce it, the catalog ships the constructed table and
keeps the published variant around so :func:`cross_check` can report the
differences entry by entry.

Entries: ``osp12`` (the 5-dimensional orthosymplectic Lie superalgebra),
``osp12_lambda`` (its twisted Hom-Lie family, parameter ``l``),
``sly12_lambda`` (the Hom-Lie-Yamaguti family on top of it), ``sly31``
(a 4-dimensional Lie-Yamaguti-type table with one odd generator),
``m11_assoc`` (2x2 matrices with the diagonal/antidiagonal grading), and
the map families ``alpha_lambda``, ``alpha1``, ``alpha2``.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple, Union

from .constructions import hly_from_homlie, yau_twist
from .errors import ConstraintViolation, NoConstructionPath, UnknownEntry
from .field import ScalarDomain
from .reports import CrossCheckReport, TableDiff
from .superspace import LinearMap, SuperBasis
from .tensorops import (
    Algebra,
    BinaryOp,
    TernaryOp,
    binary_from_entries,
    evaluate_algebra,
    lift_algebra,
    outer2,
    outer3,
    ternary_from_entries,
)

SYMBOLIC = "symbolic"


@dataclasses.dataclass(frozen=True)
class Parameter:
    name: str
    kind: str  # "rational" or "rational or symbolic"
    default: str
    note: str = ""


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "algebra" or "map"
    description: str
    parameters: Tuple[Parameter, ...]
    builder: Callable


# --- bases ------------------------------------------------------------------

OSP_BASIS = SuperBasis([("H", 0), ("X", 0), ("Y", 0), ("F", 1), ("G", 1)])
SLY31_BASIS = SuperBasis([("e1", 0), ("e2", 0), ("e3", 0), ("e4", 1)])
M11_BASIS = SuperBasis([("E11", 0), ("E12", 1), ("E21", 1), ("E22", 0)])


def _binary(basis, domain, entries, skew=True) -> BinaryOp:
    table = {
        (basis.index(a), basis.index(b)): basis.vector(value, domain)
        for (a, b), value in entries.items()
    }
    return binary_from_entries(basis, domain, table, skew)


def _ternary(basis, domain, entries, skew=True) -> TernaryOp:
    table = {
        (basis.index(a), basis.index(b), basis.index(c)): basis.vector(value, domain)
        for (a, b, c), value in entries.items()
    }
    return ternary_from_entries(basis, domain, table, skew)


# --- osp(1|2) and its twisted family ----------------------------------------

OSP12_BRACKETS = {
    ("H", "X"): {"X": "2"},
    ("H", "Y"): {"Y": "-2"},
    ("X", "Y"): {"H": "1"},
    ("Y", "G"): {"F": "1"},
    ("X", "F"): {"G": "1"},
    ("H", "F"): {"F": "-1"},
    ("H", "G"): {"G": "1"},
    ("G", "F"): {"H": "1"},
    ("G", "G"): {"X": "-2"},
    ("F", "F"): {"Y": "2"},
}

OSP12_LAMBDA_BRACKETS = {
    ("H", "X"): {"X": "2*l^2"},
    ("H", "Y"): {"Y": "-2/l^2"},
    ("X", "Y"): {"H": "1"},
    ("Y", "G"): {"F": "1/l"},
    ("X", "F"): {"G": "l"},
    ("H", "F"): {"F": "-1/l"},
    ("H", "G"): {"G": "l"},
    ("G", "F"): {"H": "1"},
    ("G", "G"): {"X": "-2*l^2"},
    ("F", "F"): {"Y": "2/l^2"},
}

ALPHA_LAMBDA_IMAGES = {
    "H": {"H": "1"},
    "X": {"X": "l^2"},
    "Y": {"Y": "1/l^2"},
    "F": {"F": "1/l"},
    "G": {"G": "l"},
}

# Published ternary table of the Hom-Lie-Yamaguti family over osp(1|2); the
# catalog ships the table derived from {x,y,z} = [[x,y],alpha(z)] instead,
# and cross_check('sly12_lambda') diffs the two.
SLY12_PRINTED_TERNARY = {
    ("H", "X", "Y"): {"H": "2"},
    ("H", "Y", "X"): {"H": "2"},
    ("H", "F", "G"): {"H": "1"},
    ("H", "G", "F"): {"H": "1"},
    ("X", "F", "F"): {"H": "1"},
    ("Y", "G", "G"): {"H": "-1"},
    ("F", "F", "X"): {"H": "-2"},
    ("H", "X", "H"): {"X": "-4*l^4"},
    ("X", "Y", "X"): {"X": "2*l^4"},
    ("F", "G", "X"): {"X": "-2*l^4"},
    ("H", "G", "G"): {"X": "-2*l^4"},
    ("X", "F", "G"): {"X": "-2*l^4"},
    ("H", "Y", "H"): {"Y": "4/l^4"},
    ("Y", "X", "Y"): {"Y": "2/l^4"},
    ("F", "G", "Y"): {"Y": "2/l^4"},
    ("H", "F", "F"): {"Y": "-2/l^4"},
    ("Y", "G", "F"): {"Y": "2/l^4"},
    ("F", "F", "H"): {"Y": "-4/l^4"},
    ("H", "F", "H"): {"F": "-1/l^2"},
    ("H", "Y", "G"): {"F": "-2/l^2"},
    ("H", "G", "Y"): {"F": "-1/l^2"},
    ("X", "Y", "F"): {"F": "-1/l^2"},
    ("F", "F", "G"): {"F": "2/l^2"},
    ("X", "F", "Y"): {"F": "-1/l^2"},
    ("Y", "G", "H"): {"F": "1/l^2"},
    ("F", "G", "F"): {"F": "1/l^2"},
    ("H", "G", "H"): {"G": "-l^2"},
    ("H", "X", "F"): {"G": "2*l^2"},
    ("H", "F", "X"): {"G": "l^2"},
    ("X", "Y", "G"): {"G": "l^2"},
    ("X", "F", "H"): {"G": "-l^2"},
    ("Y", "G", "X"): {"G": "-l^2"},
    ("F", "G", "G"): {"G": "-l^2"},
}


# --- the 4-dimensional Lie-Yamaguti-type table and its endomorphisms --------

SLY31_BRACKETS = {
    ("e1", "e3"): {"e1": "-1"},
    ("e2", "e3"): {"e2": "2"},
    ("e3", "e4"): {"e4": "-1"},
    ("e4", "e4"): {"e1": "1", "e2": "1"},
}

SLY31_TERNARY = {
    ("e1", "e3", "e3"): {"e1": "2"},
    ("e2", "e3", "e3"): {"e2": "8"},
    ("e3", "e4", "e3"): {"e4": "2"},
    ("e3", "e4", "e4"): {"e1": "1", "e2": "-2"},
    ("e4", "e4", "e3"): {"e1": "-1", "e2": "-4"},
}


def _sly31_printed_twist_tables(a: Fraction):
    """Published tables of the twist of sly31 by alpha1, as functions of a."""
    binary = {
        ("e1", "e3"): {"e1": -(a**2)},
        ("e2", "e3"): {"e2": 2 * a**2},
        ("e3", "e4"): {"e4": -a},
        ("e4", "e4"): {"e1": a**2, "e2": a**2},
    }
    ternary = {
        ("e1", "e3", "e3"): {"e1": 2 * a**4},
        ("e2", "e3", "e3"): {"e2": 8 * a**4},
        ("e3", "e4", "e3"): {"e4": -2 * a**5},
        ("e3", "e4", "e4"): {"e1": a**4, "e2": -2 * a**4},
        ("e4", "e4", "e3"): {"e1": a**4 * (2 * a - 1), "e2": 2 * a**4 * (a + 1)},
    }
    return binary, ternary


# --- M(1|1): 2x2 matrices graded by diagonal / antidiagonal blocks ----------

M11_PRODUCTS = {
    ("E11", "E11"): {"E11": "1"},
    ("E11", "E12"): {"E12": "1"},
    ("E12", "E21"): {"E11": "1"},
    ("E12", "E22"): {"E12": "1"},
    ("E21", "E11"): {"E21": "1"},
    ("E21", "E12"): {"E22": "1"},
    ("E22", "E21"): {"E21": "1"},
    ("E22", "E22"): {"E22": "1"},
}


# --- parameter handling ------------------------------------------------------


def _as_lambda_param(value) -> Union[str, Fraction]:
    if value is None or value == SYMBOLIC:
        return SYMBOLIC
    value = Fraction(value)
    return value


def _as_fraction(name: str, value) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConstraintViolation(f"parameter {name}={value!r} is not a rational") from exc


def _check_params(name: str, params: dict, allowed: Tuple[str, ...]):
    for key in params:
        if key not in allowed:
            raise ConstraintViolation(f"entry {name!r} has no parameter {key!r}")


# --- builders ----------------------------------------------------------------


def _build_osp12(params: dict) -> Algebra:
    _check_params("osp12", params, ())
    domain = ScalarDomain.Q
    return Algebra(
        "osp12",
        OSP_BASIS,
        domain,
        LinearMap.identity(OSP_BASIS, domain),
        binary=_binary(OSP_BASIS, domain, OSP12_BRACKETS),
    )


def _build_alpha_lambda(params: dict) -> LinearMap:
    _check_params("alpha_lambda", params, ("l",))
    point = _as_lambda_param(params.get("l"))
    amap = LinearMap.from_images(OSP_BASIS, ScalarDomain.QL, ALPHA_LAMBDA_IMAGES)
    if point is SYMBOLIC:
        return amap
    if point == 0:
        raise ConstraintViolation("alpha_lambda needs l != 0")
    return amap.evaluate_at(point)


def _build_osp12_lambda(params: dict) -> Algebra:
    _check_params("osp12_lambda", params, ("l",))
    point = _as_lambda_param(params.get("l"))
    domain = ScalarDomain.QL
    alg = Algebra(
        "osp12_lambda",
        OSP_BASIS,
        domain,
        LinearMap.from_images(OSP_BASIS, domain, ALPHA_LAMBDA_IMAGES),
        binary=_binary(OSP_BASIS, domain, OSP12_LAMBDA_BRACKETS),
    )
    if point is SYMBOLIC:
        return alg
    if point == 0:
        raise ConstraintViolation("osp12_lambda needs l != 0")
    return evaluate_algebra(alg, point)


def _build_sly12_lambda(params: dict) -> Algebra:
    _check_params("sly12_lambda", params, ("l",))
    point = _as_lambda_param(params.get("l"))
    alg = hly_from_homlie(_build_osp12_lambda({})).replace(name="sly12_lambda")
    if point is SYMBOLIC:
        return alg
    if point == 0:
        raise ConstraintViolation("sly12_lambda needs l != 0")
    return evaluate_algebra(alg, point)


def _build_sly31(params: dict) -> Algebra:
    _check_params("sly31", params, ())
    domain = ScalarDomain.Q
    return Algebra(
        "sly31",
        SLY31_BASIS,
        domain,
        LinearMap.identity(SLY31_BASIS, domain),
        binary=_binary(SLY31_BASIS, domain, SLY31_BRACKETS),
        ternary=_ternary(SLY31_BASIS, domain, SLY31_TERNARY),
    )


def _build_alpha1(params: dict) -> LinearMap:
    _check_params("alpha1", params, ("a", "b", "c"))
    a = _as_fraction("a", params.get("a", 1))
    b = _as_fraction("b", params.get("b", 0))
    c = _as_fraction("c", params.get("c", 0))
    images = {
        "e1": {"e1": a**2},
        "e2": {"e2": a**2},
        "e3": {"e1": b, "e2": c, "e3": Fraction(1)},
        "e4": {"e4": a**2},
    }
    return LinearMap.from_images(SLY31_BASIS, ScalarDomain.Q, images)


def _build_alpha2(params: dict) -> LinearMap:
    _check_params("alpha2", params, ("b", "c", "d"))
    b = _as_fraction("b", params.get("b", 0))
    c = _as_fraction("c", params.get("c", 0))
    d = _as_fraction("d", params.get("d", 1))
    images = {
        "e3": {"e1": b, "e2": c, "e3": Fraction(1, 2)},
        "e4": {"e4": d},
    }
    return LinearMap.from_images(SLY31_BASIS, ScalarDomain.Q, images)


def _build_m11(params: dict) -> Algebra:
    _check_params("m11_assoc", params, ())
    domain = ScalarDomain.Q
    return Algebra(
        "m11_assoc",
        M11_BASIS,
        domain,
        LinearMap.identity(M11_BASIS, domain),
        binary=_binary(M11_BASIS, domain, M11_PRODUCTS, skew=False),
    )


_ENTRIES: Dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in (
        CatalogEntry(
            "osp12",
            "algebra",
            "5-dimensional orthosymplectic Lie superalgebra osp(1|2)",
            (),
            _build_osp12,
        ),
        CatalogEntry(
            "osp12_lambda",
            "algebra",
            "Hom-Lie superalgebra family: osp(1|2) twisted by alpha_lambda",
            (Parameter("l", "rational or symbolic", SYMBOLIC, "l != 0"),),
            _build_osp12_lambda,
        ),
        CatalogEntry(
            "sly12_lambda",
            "algebra",
            "Hom-Lie-Yamaguti family over osp12_lambda with {x,y,z}=[[x,y],alpha(z)]",
            (Parameter("l", "rational or symbolic", SYMBOLIC, "l != 0"),),
            _build_sly12_lambda,
        ),
        CatalogEntry(
            "sly31",
            "algebra",
            "4-dimensional binary-ternary table with one odd generator",
            (),
            _build_sly31,
        ),
        CatalogEntry(
            "m11_assoc",
            "algebra",
            "associative superalgebra of 2x2 matrices, diagonal/antidiagonal grading",
            (),
            _build_m11,
        ),
        CatalogEntry(
            "alpha_lambda",
            "map",
            "diagonal twisting map of osp(1|2): H->H, X->l^2 X, Y->Y/l^2, F->F/l, G->l G",
            (Parameter("l", "rational or symbolic", SYMBOLIC, "l != 0"),),
            _build_alpha_lambda,
        ),
        CatalogEntry(
            "alpha1",
            "map",
            "endomorphism family of sly31: e1,e2,e4 scaled by a^2, e3 shifted by b,c",
            (
                Parameter("a", "rational", "1"),
                Parameter("b", "rational", "0"),
                Parameter("c", "rational", "0"),
            ),
            _build_alpha1,
        ),
        CatalogEntry(
            "alpha2",
            "map",
            "endomorphism family of sly31: e3 -> b e1 + c e2 + e3/2, e4 -> d e4",
            (
                Parameter("b", "rational", "0"),
                Parameter("c", "rational", "0"),
                Parameter("d", "rational", "1"),
            ),
            _build_alpha2,
        ),
    )
}


def list_entries() -> Tuple[CatalogEntry, ...]:
    """All catalog entries in a stable order."""
    return tuple(_ENTRIES[name] for name in sorted(_ENTRIES))


def instantiate(name: str, params: Optional[dict] = None):
    """Build a catalog algebra or map; parameters default per the entry."""
    try:
        entry = _ENTRIES[name]
    except KeyError:
        raise UnknownEntry(f"no catalog entry named {name!r}") from None
    return entry.builder(dict(params or {}))


# --- cross-checking published tables against their constructions ------------


def _diff_tables(basis, printed_op, computed_op, op_name):
    diffs = []
    n = basis.dim
    if op_name == "binary":
        for i in range(n):
            for j in range(n):
                a, b = printed_op.table[i][j], computed_op.table[i][j]
                if a != b:
                    diffs.append(TableDiff("binary", (i, j), a, b))
    else:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    a, b = printed_op.table[i][j][k], computed_op.table[i][j][k]
                    if a != b:
                        diffs.append(TableDiff("ternary", (i, j, k), a, b))
    return diffs


def cross_check(name: str, params: Optional[dict] = None) -> CrossCheckReport:
    """Compare an entry's published table with an independent construction.

    - ``osp12_lambda``: published twisted brackets vs the twist of osp12 by
      alpha_lambda (expected to agree everywhere).
    - ``sly12_lambda``: published ternary table vs {x,y,z} = [[x,y],alpha(z)]
      over the twisted bracket (known sign differences are reported).
    - ``sly31``: published twisted-by-alpha1 tables vs direct application of
      beta / beta^2 to the base tables, at rational (a, b, c).
    """
    params = dict(params or {})
    if name == "osp12_lambda":
        point = _as_lambda_param(params.get("l"))
        shipped = instantiate("osp12_lambda", params)
        beta = instantiate("alpha_lambda", {})
        twisted = yau_twist(lift_algebra(instantiate("osp12")), beta, 1)
        if point is not SYMBOLIC:
            twisted = evaluate_algebra(twisted, point)
        diffs = _diff_tables(shipped.basis, shipped.binary, twisted.binary, "binary")
        return CrossCheckReport(name, params, shipped.basis, tuple(diffs))
    if name == "sly12_lambda":
        point = _as_lambda_param(params.get("l"))
        printed = _ternary(OSP_BASIS, ScalarDomain.QL, SLY12_PRINTED_TERNARY)
        constructed = instantiate("sly12_lambda", {})  # formula-derived, symbolic
        if point is not SYMBOLIC:
            if point == 0:
                raise ConstraintViolation("sly12_lambda needs l != 0")
            constructed = evaluate_algebra(constructed, point)
            printed_alg = Algebra(
                "printed",
                OSP_BASIS,
                ScalarDomain.QL,
                LinearMap.identity(OSP_BASIS, ScalarDomain.QL),
                ternary=printed,
            )
            printed = evaluate_algebra(printed_alg, point).ternary
        diffs = _diff_tables(OSP_BASIS, printed, constructed.ternary, "ternary")
        return CrossCheckReport(name, params, OSP_BASIS, tuple(diffs))
    if name == "sly31":
        a = _as_fraction("a", params.get("a", 1))
        b = _as_fraction("b", params.get("b", 1))
        c = _as_fraction("c", params.get("c", 3))
        full = {"a": a, "b": b, "c": c}
        base = instantiate("sly31")
        beta = instantiate("alpha1", full)
        computed_binary = outer2(beta, base.binary)
        computed_ternary = outer3(beta.compose(beta), base.ternary)
        printed_b, printed_t = _sly31_printed_twist_tables(a)
        printed_binary = _binary(SLY31_BASIS, ScalarDomain.Q, printed_b)
        printed_ternary = _ternary(SLY31_BASIS, ScalarDomain.Q, printed_t)
        diffs = _diff_tables(SLY31_BASIS, printed_binary, computed_binary, "binary")
        diffs += _diff_tables(SLY31_BASIS, printed_ternary, computed_ternary, "ternary")
        return CrossCheckReport(name, full, SLY31_BASIS, tuple(diffs))
    if name in _ENTRIES:
        raise NoConstructionPath(f"entry {name!r} has no independent construction path")
    raise UnknownEntry(f"no catalog entry named {name!r}")
