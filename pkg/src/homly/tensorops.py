"""Structure-constant tensors for binary and ternary superoperations.

A binary operation is a rank-3 tensor c with c[i][j][k] = coefficient of
basis element k in e_i * e_j; a ternary operation is the rank-4 analogue.
Both enforce parity-evenness at construction: an entry may be nonzero only
when the argument parities sum to the result parity mod 2.  Tables printed
with only one member of each skew pair can be completed automatically with
the graded skew rule x*y = -(-1)^{|x||y|} y*x (and its ternary analogue in
the first two slots).
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import (
    ConflictError,
    DimensionMismatch,
    EvennessViolation,
    MissingOperation,
    ValidationError,
)
from .field import Scalar, ScalarDomain, scalar_eval, to_domain, zero
from .superspace import LinearMap, SuperBasis, vec_add


def _check_even(basis, out_vector, arg_parity, label):
    parities = basis.parities
    for k, entry in enumerate(out_vector):
        if entry and parities[k] != arg_parity:
            raise EvennessViolation(
                f"{label} has parity {arg_parity} arguments but a nonzero "
                f"coefficient on the parity-{parities[k]} element {basis.names[k]}"
            )


class BinaryOp:
    """Bilinear superoperation given by its structure constants."""

    __slots__ = ("basis", "domain", "table")

    def __init__(self, basis: SuperBasis, domain: ScalarDomain, table):
        n = basis.dim
        table = tuple(
            tuple(tuple(to_domain(c, domain) for c in row) for row in plane)
            for plane in table
        )
        if len(table) != n or any(
            len(plane) != n or any(len(row) != n for row in plane) for plane in table
        ):
            raise DimensionMismatch(f"binary table must be {n}x{n}x{n}")
        parities = basis.parities
        for i in range(n):
            for j in range(n):
                _check_even(
                    basis,
                    table[i][j],
                    (parities[i] + parities[j]) % 2,
                    f"product ({basis.names[i]}, {basis.names[j]})",
                )
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryOp is immutable")

    @classmethod
    def zero(cls, basis: SuperBasis, domain: ScalarDomain) -> "BinaryOp":
        z = zero(domain)
        n = basis.dim
        return cls(basis, domain, [[[z] * n] * n] * n)

    @property
    def dim(self) -> int:
        return self.basis.dim

    def value(self, i: int, j: int) -> tuple:
        """The product e_i * e_j as a coordinate vector."""
        return self.table[i][j]

    def __call__(self, x: tuple, y: tuple) -> tuple:
        return eval2(self, x, y)

    def is_zero(self) -> bool:
        return not any(c for plane in self.table for row in plane for c in row)

    def __eq__(self, other):
        return (
            isinstance(other, BinaryOp)
            and self.basis == other.basis
            and self.domain is other.domain
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.basis, self.domain))


class TernaryOp:
    """Trilinear superoperation given by its structure constants."""

    __slots__ = ("basis", "domain", "table")

    def __init__(self, basis: SuperBasis, domain: ScalarDomain, table):
        n = basis.dim
        table = tuple(
            tuple(
                tuple(tuple(to_domain(c, domain) for c in row) for row in plane)
                for plane in block
            )
            for block in table
        )
        ok = len(table) == n and all(
            len(block) == n
            and all(
                len(plane) == n and all(len(row) == n for row in plane)
                for plane in block
            )
            for block in table
        )
        if not ok:
            raise DimensionMismatch(f"ternary table must be {n}^4")
        parities = basis.parities
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    _check_even(
                        basis,
                        table[i][j][k],
                        (parities[i] + parities[j] + parities[k]) % 2,
                        f"product ({basis.names[i]}, {basis.names[j]}, {basis.names[k]})",
                    )
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("TernaryOp is immutable")

    @classmethod
    def zero(cls, basis: SuperBasis, domain: ScalarDomain) -> "TernaryOp":
        z = zero(domain)
        n = basis.dim
        return cls(basis, domain, [[[[z] * n] * n] * n] * n)

    @property
    def dim(self) -> int:
        return self.basis.dim

    def value(self, i: int, j: int, k: int) -> tuple:
        return self.table[i][j][k]

    def __call__(self, x: tuple, y: tuple, z: tuple) -> tuple:
        return eval3(self, x, y, z)

    def is_zero(self) -> bool:
        return not any(
            c for block in self.table for plane in block for row in plane for c in row
        )

    def __eq__(self, other):
        return (
            isinstance(other, TernaryOp)
            and self.basis == other.basis
            and self.domain is other.domain
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.basis, self.domain))


def eval2(op: BinaryOp, x: tuple, y: tuple) -> tuple:
    """Bilinear extension of the structure constants, exact."""
    n = op.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch("vector length does not match the operation")
    acc = [None] * n
    table = op.table
    for i, xi in enumerate(x):
        if not xi:
            continue
        plane = table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            coeff = xi * yj
            for k, ck in enumerate(plane[j]):
                if ck:
                    term = coeff * ck
                    acc[k] = term if acc[k] is None else acc[k] + term
    z = zero(op.domain)
    return tuple(z if a is None else a for a in acc)


def eval3(op: TernaryOp, x: tuple, y: tuple, z: tuple) -> tuple:
    """Trilinear extension of the structure constants, exact."""
    n = op.dim
    if len(x) != n or len(y) != n or len(z) != n:
        raise DimensionMismatch("vector length does not match the operation")
    acc = [None] * n
    table = op.table
    for i, xi in enumerate(x):
        if not xi:
            continue
        block = table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            cij = xi * yj
            plane = block[j]
            for k, zk in enumerate(z):
                if not zk:
                    continue
                coeff = cij * zk
                for m, cm in enumerate(plane[k]):
                    if cm:
                        term = coeff * cm
                        acc[m] = term if acc[m] is None else acc[m] + term
    zz = zero(op.domain)
    return tuple(zz if a is None else a for a in acc)


def outer2(f: LinearMap, op: BinaryOp) -> BinaryOp:
    """Post-compose a binary operation with an even map: (x, y) -> f(x * y)."""
    if f.basis != op.basis:
        raise DimensionMismatch("map and operation live over different bases")
    table = [[f.apply(op.table[i][j]) for j in range(op.dim)] for i in range(op.dim)]
    return BinaryOp(op.basis, op.domain, table)


def outer3(f: LinearMap, op: TernaryOp) -> TernaryOp:
    """Post-compose a ternary operation with an even map."""
    if f.basis != op.basis:
        raise DimensionMismatch("map and operation live over different bases")
    n = op.dim
    table = [
        [[f.apply(op.table[i][j][k]) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return TernaryOp(op.basis, op.domain, table)


def op_equal(a, b) -> bool:
    """Entrywise equality of two operations of the same arity and shape."""
    if type(a) is not type(b):
        raise DimensionMismatch(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension {a.dim} != {b.dim}")
    return a.table == b.table


# --- table input with automatic skew completion ----------------------------


def binary_from_entries(
    basis: SuperBasis,
    domain: ScalarDomain,
    entries: Dict[Tuple[int, int], tuple],
    skew_complete: bool = True,
) -> BinaryOp:
    """Build a binary tensor from sparse {(i, j): output-vector} entries.

    With ``skew_complete`` the missing member of each pair (j, i) is filled
    as -(-1)^{|i||j|} times the (i, j) entry; an explicit entry that
    contradicts the filled value raises ConflictError.  Unlisted products
    are zero.
    """
    n = basis.dim
    parities = basis.parities
    z = zero(domain)
    full: Dict[Tuple[int, int], tuple] = {
        key: tuple(to_domain(c, domain) for c in vec) for key, vec in entries.items()
    }
    if skew_complete:
        for (i, j), vec in sorted(full.items()):
            sign = -1 if (parities[i] and parities[j]) else 1
            implied = tuple(-c if sign > 0 else c for c in vec)
            seen = full.get((j, i))
            if seen is None:
                full[(j, i)] = implied
            elif seen != implied:
                raise ConflictError(
                    f"entries for ({basis.names[i]}, {basis.names[j]}) and "
                    f"({basis.names[j]}, {basis.names[i]}) violate skew symmetry"
                )
    table = [[(z,) * n for _ in range(n)] for _ in range(n)]
    for (i, j), vec in full.items():
        table[i][j] = vec
    return BinaryOp(basis, domain, table)


def ternary_from_entries(
    basis: SuperBasis,
    domain: ScalarDomain,
    entries: Dict[Tuple[int, int, int], tuple],
    skew_complete: bool = True,
) -> TernaryOp:
    """Ternary analogue of :func:`binary_from_entries` (skew in slots 1, 2)."""
    n = basis.dim
    parities = basis.parities
    z = zero(domain)
    full: Dict[Tuple[int, int, int], tuple] = {
        key: tuple(to_domain(c, domain) for c in vec) for key, vec in entries.items()
    }
    if skew_complete:
        for (i, j, k), vec in sorted(full.items()):
            sign = -1 if (parities[i] and parities[j]) else 1
            implied = tuple(-c if sign > 0 else c for c in vec)
            seen = full.get((j, i, k))
            if seen is None:
                full[(j, i, k)] = implied
            elif seen != implied:
                raise ConflictError(
                    f"entries for ({basis.names[i]}, {basis.names[j]}, {basis.names[k]}) "
                    f"and ({basis.names[j]}, {basis.names[i]}, {basis.names[k]}) "
                    "violate skew symmetry"
                )
    table = [[[(z,) * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for (i, j, k), vec in full.items():
        table[i][j][k] = vec
    return TernaryOp(basis, domain, table)


# --- algebras ---------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Algebra:
    """A graded binary-ternary algebra with a twisting map.

    Either operation may be absent: with no ternary this is the data of a
    (Hom-)Lie superalgebra, with no binary a (Hom-)supertriple system, with
    both a (Hom-)Lie-Yamaguti superalgebra.
    """

    name: str
    basis: SuperBasis
    domain: ScalarDomain
    alpha: LinearMap
    binary: Optional[BinaryOp] = None
    ternary: Optional[TernaryOp] = None

    def __post_init__(self):
        if self.binary is None and self.ternary is None:
            raise ValidationError("an algebra needs a binary or a ternary operation")
        for op in (self.binary, self.ternary):
            if op is not None and (op.basis != self.basis or op.domain is not self.domain):
                raise ValidationError("operation basis/domain does not match the algebra")
        if self.alpha.basis != self.basis or self.alpha.domain is not self.domain:
            raise ValidationError("twist map basis/domain does not match the algebra")

    @property
    def dim(self) -> int:
        return self.basis.dim

    def require_binary(self) -> BinaryOp:
        if self.binary is None:
            raise MissingOperation(f"algebra {self.name!r} has no binary operation")
        return self.binary

    def require_ternary(self) -> TernaryOp:
        if self.ternary is None:
            raise MissingOperation(f"algebra {self.name!r} has no ternary operation")
        return self.ternary

    def replace(self, **changes) -> "Algebra":
        return dataclasses.replace(self, **changes)

    def vector(self, coeffs: dict) -> tuple:
        return self.basis.vector(coeffs, self.domain)


def evaluate_algebra(alg: Algebra, point) -> Algebra:
    """Substitute l = point throughout; PoleError if any entry has a pole."""
    point = Fraction(point)

    def ev(c):
        return scalar_eval(c, point)

    binary = ternary = None
    if alg.binary is not None:
        binary = BinaryOp(
            alg.basis,
            ScalarDomain.Q,
            [
                [[ev(c) for c in row] for row in plane]
                for plane in alg.binary.table
            ],
        )
    if alg.ternary is not None:
        ternary = TernaryOp(
            alg.basis,
            ScalarDomain.Q,
            [
                [[[ev(c) for c in row] for row in plane] for plane in block]
                for block in alg.ternary.table
            ],
        )
    alpha = alg.alpha.evaluate_at(point)
    return Algebra(alg.name, alg.basis, ScalarDomain.Q, alpha, binary, ternary)


def lift_algebra(alg: Algebra) -> Algebra:
    """Embed a Q-algebra into Q(l) (rationals become constant functions)."""
    if alg.domain is ScalarDomain.QL:
        return alg

    def up(c):
        return to_domain(c, ScalarDomain.QL)

    binary = ternary = None
    if alg.binary is not None:
        binary = BinaryOp(
            alg.basis,
            ScalarDomain.QL,
            [[[up(c) for c in row] for row in plane] for plane in alg.binary.table],
        )
    if alg.ternary is not None:
        ternary = TernaryOp(
            alg.basis,
            ScalarDomain.QL,
            [
                [[[up(c) for c in row] for row in plane] for plane in block]
                for block in alg.ternary.table
            ],
        )
    return Algebra(alg.name, alg.basis, ScalarDomain.QL, alg.alpha.lift(), binary, ternary)
