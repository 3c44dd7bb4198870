"""Z2-graded vector spaces: named homogeneous bases and even linear maps.

Vectors are plain tuples of scalars, one coordinate per basis entry.  A
:class:`LinearMap` stores its matrix column-major (column j = image of basis
element j) and refuses any entry that mixes parities, so evenness is a
construction-time invariant rather than something checkers must re-derive.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatch, EvennessViolation, ValidationError
from .field import (
    RationalFunction,
    Scalar,
    ScalarDomain,
    format_scalar,
    one,
    parse_scalar,
    scalar_eval,
    to_domain,
    zero,
)

Vector = Tuple[Scalar, ...]


class SuperBasis:
    """Ordered list of named basis elements, each with a fixed parity (0/1)."""

    __slots__ = ("entries", "_index")

    def __init__(self, entries: Iterable[Tuple[str, int]]):
        entries = tuple((str(name), int(parity)) for name, parity in entries)
        if not entries:
            raise ValidationError("a basis needs at least one element")
        names = [name for name, _ in entries]
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate basis names in {names}")
        for name, parity in entries:
            if not name:
                raise ValidationError("basis names must be nonempty")
            if parity not in (0, 1):
                raise ValidationError(f"parity of {name!r} must be 0 or 1, got {parity}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_index", {name: i for i, (name, _) in enumerate(entries)})

    def __setattr__(self, name, value):
        raise AttributeError("SuperBasis is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    @property
    def parities(self) -> Tuple[int, ...]:
        return tuple(parity for _, parity in self.entries)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValidationError(f"unknown basis element {name!r}") from None

    def parity(self, i: int) -> int:
        return self.entries[i][1]

    def __eq__(self, other):
        return isinstance(other, SuperBasis) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        inner = ", ".join(f"{n}|{p}" for n, p in self.entries)
        return f"SuperBasis({inner})"

    def zero_vector(self, domain: ScalarDomain) -> tuple:
        return (zero(domain),) * self.dim

    def basis_vector(self, i: int, domain: ScalarDomain) -> tuple:
        z, o = zero(domain), one(domain)
        return tuple(o if j == i else z for j in range(self.dim))

    def vector(self, coeffs: dict, domain: ScalarDomain) -> tuple:
        """Vector from a {name: coefficient} dict; strings use the text grammar."""
        out = [zero(domain)] * self.dim
        for name, value in coeffs.items():
            if isinstance(value, str):
                value = parse_scalar(value, domain)
            out[self.index(name)] = to_domain(value, domain)
        return tuple(out)


def vec_add(u: tuple, v: tuple) -> tuple:
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u: tuple, v: tuple) -> tuple:
    return tuple(a - b for a, b in zip(u, v))

def vec_neg(u: tuple) -> tuple:
    return tuple(-a for a in u)

def vec_scale(s: Scalar, u: tuple) -> tuple:
    return tuple(s * a for a in u)

def is_zero_vector(u: tuple) -> bool:
    return not any(u)


def parity_of(basis: SuperBasis, v: tuple) -> Optional[int]:
    """Common parity of the nonzero coordinates, or None when mixed.

    The zero vector counts as homogeneous of parity 0.
    """
    if len(v) != basis.dim:
        raise DimensionMismatch(f"vector length {len(v)} != basis dimension {basis.dim}")
    seen = None
    for i, c in enumerate(v):
        if not c:
            continue
        p = basis.parity(i)
        if seen is None:
            seen = p
        elif seen != p:
            return None
    return 0 if seen is None else seen


def format_vector(basis: SuperBasis, v: tuple) -> str:
    parts = []
    for i, c in enumerate(v):
        if not c:
            continue
        text = format_scalar(c)
        if text == "1":
            parts.append(basis.names[i])
        elif text == "-1":
            parts.append(f"-{basis.names[i]}")
        else:
            parts.append(f"({text})*{basis.names[i]}" if "+" in text or "-" in text[1:] else f"{text}*{basis.names[i]}")
    return " + ".join(parts) if parts else "0"


class LinearMap:
    """Even linear self-map given by its matrix, column j = image of e_j."""

    __slots__ = ("basis", "domain", "columns")

    def __init__(self, basis: SuperBasis, domain: ScalarDomain, columns: Sequence[Sequence]):
        columns = tuple(tuple(to_domain(c, domain) for c in col) for col in columns)
        if len(columns) != basis.dim or any(len(col) != basis.dim for col in columns):
            raise DimensionMismatch(
                f"matrix must be {basis.dim}x{basis.dim} for this basis"
            )
        parities = basis.parities
        for j, col in enumerate(columns):
            for i, entry in enumerate(col):
                if entry and parities[i] != parities[j]:
                    raise EvennessViolation(
                        f"map sends the parity-{parities[j]} element "
                        f"{basis.names[j]} into parity-{parities[i]} {basis.names[i]}"
                    )
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "columns", columns)

    def __setattr__(self, name, value):
        raise AttributeError("LinearMap is immutable")

    @classmethod
    def identity(cls, basis: SuperBasis, domain: ScalarDomain) -> "LinearMap":
        z, o = zero(domain), one(domain)
        cols = [[o if i == j else z for i in range(basis.dim)] for j in range(basis.dim)]
        return cls(basis, domain, cols)

    @classmethod
    def from_images(cls, basis: SuperBasis, domain: ScalarDomain, images: dict) -> "LinearMap":
        """Map from {name: {name: coeff}} images; unlisted elements are fixed."""
        cols = [list(basis.basis_vector(j, domain)) for j in range(basis.dim)]
        for name, image in images.items():
            cols[basis.index(name)] = list(basis.vector(image, domain))
        return cls(basis, domain, cols)

    @property
    def dim(self) -> int:
        return self.basis.dim

    def is_identity(self) -> bool:
        o = one(self.domain)
        return all(
            (col[i] == o if i == j else not col[i])
            for j, col in enumerate(self.columns)
            for i in range(self.dim)
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.basis == other.basis
            and self.domain is other.domain
            and self.columns == other.columns
        )

    def __hash__(self):
        return hash((self.basis, self.domain, self.columns))

    def apply(self, v: tuple) -> tuple:
        """Matrix-vector product, exact."""
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector length {len(v)} != map dimension {self.dim}")
        out = list(self.basis.zero_vector(self.domain))
        for j, c in enumerate(v):
            if not c:
                continue
            col = self.columns[j]
            for i, entry in enumerate(col):
                if entry:
                    out[i] = out[i] + c * entry
        return tuple(out)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other (matrix product self * other)."""
        if self.basis != other.basis:
            raise DimensionMismatch("cannot compose maps over different bases")
        cols = [self.apply(col) for col in other.columns]
        return LinearMap(self.basis, self.domain, cols)

    def power(self, k: int) -> "LinearMap":
        """k-th compositional power by repeated squaring; k = 0 gives identity."""
        if k < 0:
            raise ValueError("map power must be nonnegative")
        result = LinearMap.identity(self.basis, self.domain)
        base = self
        while k:
            if k & 1:
                result = result.compose(base)
            base = base.compose(base) if k > 1 else base
            k >>= 1
        return result

    def commutes_with(self, other: "LinearMap") -> bool:
        if self.basis != other.basis:
            raise DimensionMismatch("cannot compare maps over different bases")
        return self.compose(other) == other.compose(self)

    def evaluate_at(self, point) -> "LinearMap":
        """Substitute l = point in every entry (Q-valued map)."""
        point = Fraction(point)
        cols = [[scalar_eval(c, point) for c in col] for col in self.columns]
        return LinearMap(self.basis, ScalarDomain.Q, cols)

    def lift(self) -> "LinearMap":
        """Embed a Q-valued map into Q(l)."""
        if self.domain is ScalarDomain.QL:
            return self
        cols = [[to_domain(c, ScalarDomain.QL) for c in col] for col in self.columns]
        return LinearMap(self.basis, ScalarDomain.QL, cols)

    def __repr__(self):
        images = ", ".join(
            f"{self.basis.names[j]} -> {format_vector(self.basis, col)}"
            for j, col in enumerate(self.columns)
        )
        return f"LinearMap({images})"
