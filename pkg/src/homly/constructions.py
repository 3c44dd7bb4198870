"""Algebra-producing constructions: twisting, derived algebras, and the
standard passages between associative, Lie, triple and Yamaguti structures.

All constructions are pure: they return a new :class:`Algebra` and never
mutate their input.  ``yau_twist`` validates its hypotheses (the twisting
map must be an endomorphism commuting with the algebra's own twist) and
refuses to produce garbage otherwise.
"""

from __future__ import annotations

from .axioms import check_hom_lie, is_endomorphism
from .errors import BadArity, MapsDoNotCommute, NonIdentityTwist, NotEndomorphism, NotHomLie
from .field import ScalarDomain
from .superspace import LinearMap, vec_add, vec_sub
from .tensorops import (
    Algebra,
    BinaryOp,
    TernaryOp,
    eval2,
    lift_algebra,
    outer2,
    outer3,
)


def yau_twist(alg: Algebra, beta: LinearMap, n: int) -> Algebra:
    """Twist by an endomorphism: x*y -> beta^n(x*y), {x,y,z} -> beta^2n({x,y,z}).

    The new twist map is beta^n composed with the old one.  When the input
    satisfies the Hom-Lie-Yamaguti axioms, so does the output, for any n >= 1.
    A Q-valued algebra twisted by a Q(l)-valued map is lifted into Q(l) first.
    """
    if n < 1:
        raise BadArity(f"twist exponent must be >= 1, got {n}")
    if beta.domain is ScalarDomain.QL and alg.domain is ScalarDomain.Q:
        alg = lift_algebra(alg)
    rep = is_endomorphism(beta, alg)
    if not rep.passed:
        raise NotEndomorphism(rep)
    if not beta.commutes_with(alg.alpha):
        raise MapsDoNotCommute("the twisting map must commute with the algebra's twist")
    bn = beta.power(n)
    binary = outer2(bn, alg.binary) if alg.binary is not None else None
    ternary = outer3(beta.power(2 * n), alg.ternary) if alg.ternary is not None else None
    return Algebra(
        f"{alg.name}^twist(n={n})",
        alg.basis,
        alg.domain,
        bn.compose(alg.alpha),
        binary,
        ternary,
    )


def derived2(alg: Algebra, n: int) -> Algebra:
    """n-th derived binary algebra: product alpha^(2^n - 1) o *, twist alpha^(2^n)."""
    if n < 0:
        raise BadArity(f"derived index must be >= 0, got {n}")
    binary = alg.require_binary()
    alpha = alg.alpha
    return alg.replace(
        name=f"{alg.name}^({n})",
        binary=outer2(alpha.power(2**n - 1), binary),
        alpha=alpha.power(2**n),
    )


def derived3(alg: Algebra, n: int) -> Algebra:
    """n-th derived ternary algebra: alpha^(2^(n+1) - 2) o {,,}, twist alpha^(2^n)."""
    if n < 0:
        raise BadArity(f"derived index must be >= 0, got {n}")
    ternary = alg.require_ternary()
    alpha = alg.alpha
    return alg.replace(
        name=f"{alg.name}^({n})",
        ternary=outer3(alpha.power(2 ** (n + 1) - 2), ternary),
        alpha=alpha.power(2**n),
    )


def derived_bt(alg: Algebra, n: int) -> Algebra:
    """n-th derived binary-ternary algebra (both exponent rules, shared twist)."""
    if n < 0:
        raise BadArity(f"derived index must be >= 0, got {n}")
    binary = alg.require_binary()
    ternary = alg.require_ternary()
    alpha = alg.alpha
    return alg.replace(
        name=f"{alg.name}^({n})",
        binary=outer2(alpha.power(2**n - 1), binary),
        ternary=outer3(alpha.power(2 ** (n + 1) - 2), ternary),
        alpha=alpha.power(2**n),
    )


def _supercommutator_table(alg: Algebra) -> BinaryOp:
    binary = alg.require_binary()
    p = alg.basis.parities
    t = binary.table
    n = alg.dim
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            if p[i] and p[j]:
                row.append(vec_add(t[i][j], t[j][i]))
            else:
                row.append(vec_sub(t[i][j], t[j][i]))
        table.append(row)
    return BinaryOp(alg.basis, alg.domain, table)


def supercommutator(alg: Algebra) -> Algebra:
    """Replace the product with [x,y] = x*y - (-1)^{|x||y|} y*x."""
    return alg.replace(
        name=f"sc({alg.name})", binary=_supercommutator_table(alg), ternary=alg.ternary
    )


def sts_from_alg(alg: Algebra) -> Algebra:
    """Supertriple system attached to any binary algebra.

    Ternary product [[x,y],alpha(z)] - as(x,y,z) + (-1)^{|x||y|} as(y,x,z),
    where [,] is the supercommutator and as the twisted associator of the
    original product.  The output always satisfies the supertriple axioms.
    """
    binary = alg.require_binary()
    bracket = _supercommutator_table(alg)
    p = alg.basis.parities
    acols = alg.alpha.columns
    t = binary.table
    n = alg.dim

    def assoc(i, j, k):
        return vec_sub(
            eval2(binary, t[i][j], acols[k]), eval2(binary, acols[i], t[j][k])
        )

    table = []
    for i in range(n):
        block = []
        for j in range(n):
            plane = []
            for k in range(n):
                vec = vec_sub(
                    eval2(bracket, bracket.table[i][j], acols[k]), assoc(i, j, k)
                )
                if p[i] and p[j]:
                    vec = vec_sub(vec, assoc(j, i, k))
                else:
                    vec = vec_add(vec, assoc(j, i, k))
                plane.append(vec)
            block.append(plane)
        table.append(block)
    return alg.replace(
        name=f"sts({alg.name})", ternary=TernaryOp(alg.basis, alg.domain, table)
    )


def hly_from_homlie(alg: Algebra) -> Algebra:
    """Hom-Lie-Yamaguti structure on a multiplicative Hom-Lie superalgebra.

    Adds the ternary product {x,y,z} = [[x,y],alpha(z)].  The input must pass
    the Hom-Lie profile (skew, twisted Jacobi, multiplicativity); NotHomLie
    carries the failing report otherwise.
    """
    binary = alg.require_binary()
    rep = check_hom_lie(alg)
    if not rep.passed:
        raise NotHomLie(rep)
    acols = alg.alpha.columns
    t = binary.table
    n = alg.dim
    table = [
        [[eval2(binary, t[i][j], acols[k]) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return alg.replace(
        name=f"hly({alg.name})", ternary=TernaryOp(alg.basis, alg.domain, table)
    )


def ly_from_malcev(alg: Algebra) -> Algebra:
    """Lie-Yamaguti ternary product on an (untwisted) Malcev-type algebra.

    {x,y,z} = x*(y*z) - (-1)^{|x||y|} y*(x*z) + (x*y)*z.  Stated only for
    identity twist; the output is meant to be confirmed with ``check_ly``.
    """
    binary = alg.require_binary()
    if not alg.alpha.is_identity():
        raise NonIdentityTwist("this construction requires the identity twist map")
    p = alg.basis.parities
    t = binary.table
    n = alg.dim
    units = tuple(alg.basis.basis_vector(i, alg.domain) for i in range(n))
    table = []
    for i in range(n):
        block = []
        for j in range(n):
            plane = []
            for k in range(n):
                vec = eval2(binary, units[i], t[j][k])
                second = eval2(binary, units[j], t[i][k])
                if p[i] and p[j]:
                    vec = vec_add(vec, second)
                else:
                    vec = vec_sub(vec, second)
                vec = vec_add(vec, eval2(binary, t[i][j], units[k]))
                plane.append(vec)
            block.append(plane)
        table.append(block)
    return alg.replace(
        name=f"ly({alg.name})", ternary=TernaryOp(alg.basis, alg.domain, table)
    )
