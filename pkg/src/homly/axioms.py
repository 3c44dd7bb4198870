"""Exact checkers for the graded binary-ternary identity systems.

Every checker sweeps all tuples of basis elements (which suffices by
multilinearity), computes the residual of its identity with the Koszul signs
dictated by the parities, and reports each tuple whose residual is not
exactly zero.  Nothing is short-circuited: the violation list is complete
and ordered first by identity, then lexicographically by tuple.

Two residual families coexist on purpose.  The Lie-Yamaguti forms (SLY*)
use the cyclic weights 1, (-1)^{|x|(|y|+|z|)}, (-1)^{|z|(|x|+|y|)} while the
Hom forms (SHLY5/SHLY6) weight each cyclic term by (-1)^{|x||z|}.  The two
differ tuple-by-tuple only by the overall factor (-1)^{|x||z|}, so their
zero-sets coincide; ``cyclic_core_residual`` exposes both weightings so the
relation can be asserted directly.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, MissingOperation, NotHomogeneous
from .reports import IdentityId, Report, Violation
from .superspace import LinearMap, parity_of, vec_add, vec_neg, vec_sub
from .tensorops import Algebra, eval2, eval3


def _sign(exponent: int) -> int:
    return -1 if exponent & 1 else 1


def _acc(acc, vec, sign=1):
    if acc is None:
        return vec if sign > 0 else vec_neg(vec)
    return vec_add(acc, vec) if sign > 0 else vec_sub(acc, vec)


class _Context:
    """Precomputed data shared by the residual formulas of one sweep."""

    __slots__ = ("alg", "c", "d", "p", "alpha", "acols", "a2cols", "units")

    def __init__(self, alg: Algebra, alpha: Optional[LinearMap] = None):
        self.alg = alg
        self.c = alg.binary
        self.d = alg.ternary
        self.p = alg.basis.parities
        self.alpha = alg.alpha if alpha is None else alpha
        self.acols = self.alpha.columns
        self.a2cols = self.alpha.compose(self.alpha).columns
        self.units = tuple(
            alg.basis.basis_vector(i, alg.domain) for i in range(alg.dim)
        )


# --- residual formulas, one per IdentityId ---------------------------------


def _r_skew2(ctx, i, j):
    c, p = ctx.c.table, ctx.p
    return _acc(c[i][j], c[j][i], _sign(p[i] * p[j]))


def _r_skew3(ctx, i, j, k):
    d, p = ctx.d.table, ctx.p
    return _acc(d[i][j][k], d[j][i][k], _sign(p[i] * p[j]))


def _r_hom_jacobi(ctx, i, j, k):
    c, p, a = ctx.c, ctx.p, ctx.acols
    t = c.table
    r = eval2(c, t[i][j], a[k])
    r = _acc(r, eval2(c, t[j][k], a[i]), _sign(p[i] * (p[j] + p[k])))
    r = _acc(r, eval2(c, t[k][i], a[j]), _sign(p[k] * (p[i] + p[j])))
    return r


def _r_hom_assoc(ctx, i, j, k):
    c, a = ctx.c, ctx.acols
    t = c.table
    return vec_sub(eval2(c, t[i][j], a[k]), eval2(c, a[i], t[j][k]))


def _r_sts_ii(ctx, i, j, k):
    d, p = ctx.d.table, ctx.p
    r = d[i][j][k]
    r = _acc(r, d[j][k][i], _sign(p[i] * (p[j] + p[k])))
    r = _acc(r, d[k][i][j], _sign(p[k] * (p[i] + p[j])))
    return r


def _r_nambu(ctx, x, y, u, v, w):
    d, p, a = ctx.d, ctx.p, ctx.acols
    t = d.table
    r = eval3(d, a[x], a[y], t[u][v][w])
    r = _acc(r, eval3(d, t[x][y][u], a[v], a[w]), -1)
    r = _acc(r, eval3(d, a[u], t[x][y][v], a[w]), -_sign(p[u] * (p[x] + p[y])))
    r = _acc(r, eval3(d, a[u], a[v], t[x][y][w]), -_sign((p[x] + p[y]) * (p[u] + p[v])))
    return r


def _r_mult2(ctx, i, j):
    c, a = ctx.c, ctx.acols
    return vec_sub(ctx.alpha.apply(c.table[i][j]), eval2(c, a[i], a[j]))


def _r_mult3(ctx, i, j, k):
    d, a = ctx.d, ctx.acols
    return vec_sub(ctx.alpha.apply(d.table[i][j][k]), eval3(d, a[i], a[j], a[k]))


def _r_shly5(ctx, i, j, k):
    c, d, p, a = ctx.c, ctx.d, ctx.p, ctx.acols
    tc, td = c.table, d.table
    r = None
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        term = vec_add(eval2(c, tc[x][y], a[z]), td[x][y][z])
        r = _acc(r, term, _sign(p[x] * p[z]))
    return r


def _r_shly6(ctx, i, j, k, u):
    c, d, p, a = ctx.c, ctx.d, ctx.p, ctx.acols
    tc = c.table
    r = None
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        r = _acc(r, eval3(d, tc[x][y], a[z], a[u]), _sign(p[x] * p[z]))
    return r


def _r_shly7(ctx, i, j, u, v):
    c, d, p, a, a2 = ctx.c, ctx.d, ctx.p, ctx.acols, ctx.a2cols
    tc, td = c.table, d.table
    r = eval3(d, a[i], a[j], tc[u][v])
    r = _acc(r, eval2(c, td[i][j][u], a2[v]), -1)
    r = _acc(r, eval2(c, a2[u], td[i][j][v]), -_sign(p[u] * (p[i] + p[j])))
    return r


def _r_shly8(ctx, x, y, u, v, w):
    d, p, a2 = ctx.d, ctx.p, ctx.a2cols
    t = d.table
    r = eval3(d, a2[x], a2[y], t[u][v][w])
    r = _acc(r, eval3(d, t[x][y][u], a2[v], a2[w]), -1)
    r = _acc(r, eval3(d, a2[u], t[x][y][v], a2[w]), -_sign(p[u] * (p[x] + p[y])))
    r = _acc(r, eval3(d, a2[u], a2[v], t[x][y][w]), -_sign((p[x] + p[y]) * (p[u] + p[v])))
    return r


def _r_sly3(ctx, i, j, k):
    c, d, p, e = ctx.c, ctx.d, ctx.p, ctx.units
    tc, td = c.table, d.table
    s1 = _sign(p[i] * (p[j] + p[k]))
    s2 = _sign(p[k] * (p[i] + p[j]))
    r = td[i][j][k]
    r = _acc(r, td[j][k][i], s1)
    r = _acc(r, td[k][i][j], s2)
    r = _acc(r, eval2(c, tc[i][j], e[k]))
    r = _acc(r, eval2(c, tc[j][k], e[i]), s1)
    r = _acc(r, eval2(c, tc[k][i], e[j]), s2)
    return r


def _r_sly4(ctx, i, j, k, u):
    c, d, p, e = ctx.c, ctx.d, ctx.p, ctx.units
    tc = c.table
    r = eval3(d, tc[i][j], e[k], e[u])
    r = _acc(r, eval3(d, tc[j][k], e[i], e[u]), _sign(p[i] * (p[j] + p[k])))
    r = _acc(r, eval3(d, tc[k][i], e[j], e[u]), _sign(p[k] * (p[i] + p[j])))
    return r


def _r_sly5(ctx, i, j, u, v):
    c, d, p, e = ctx.c, ctx.d, ctx.p, ctx.units
    tc, td = c.table, d.table
    r = eval3(d, e[i], e[j], tc[u][v])
    r = _acc(r, eval2(c, td[i][j][u], e[v]), -1)
    r = _acc(r, eval2(c, e[u], td[i][j][v]), -_sign(p[u] * (p[i] + p[j])))
    return r


def _r_sly6(ctx, x, y, u, v, w):
    d, p, e = ctx.d, ctx.p, ctx.units
    t = d.table
    r = eval3(d, e[x], e[y], t[u][v][w])
    r = _acc(r, eval3(d, t[x][y][u], e[v], e[w]), -1)
    r = _acc(r, eval3(d, e[u], t[x][y][v], e[w]), -_sign(p[u] * (p[x] + p[y])))
    r = _acc(r, eval3(d, e[u], e[v], t[x][y][w]), -_sign((p[x] + p[y]) * (p[u] + p[v])))
    return r


_FORMULAS = {
    IdentityId.SKEW2: (2, _r_skew2, "binary"),
    IdentityId.SKEW3: (3, _r_skew3, "ternary"),
    IdentityId.HOM_JACOBI: (3, _r_hom_jacobi, "binary"),
    IdentityId.HOM_ASSOC: (3, _r_hom_assoc, "binary"),
    IdentityId.STS_I: (3, _r_skew3, "ternary"),
    IdentityId.STS_II: (3, _r_sts_ii, "ternary"),
    IdentityId.NAMBU: (5, _r_nambu, "ternary"),
    IdentityId.MULT2: (2, _r_mult2, "binary"),
    IdentityId.MULT3: (3, _r_mult3, "ternary"),
    IdentityId.SLY1: (2, _r_skew2, "binary"),
    IdentityId.SLY2: (3, _r_skew3, "ternary"),
    IdentityId.SLY3: (3, _r_sly3, "both"),
    IdentityId.SLY4: (4, _r_sly4, "both"),
    IdentityId.SLY5: (4, _r_sly5, "both"),
    IdentityId.SLY6: (5, _r_sly6, "ternary"),
    IdentityId.SHLY1: (2, _r_mult2, "binary"),
    IdentityId.SHLY2: (3, _r_mult3, "ternary"),
    IdentityId.SHLY3: (2, _r_skew2, "binary"),
    IdentityId.SHLY4: (3, _r_skew3, "ternary"),
    IdentityId.SHLY5: (3, _r_shly5, "both"),
    IdentityId.SHLY6: (4, _r_shly6, "both"),
    IdentityId.SHLY7: (4, _r_shly7, "both"),
    IdentityId.SHLY8: (5, _r_shly8, "ternary"),
}


def _need(alg: Algebra, needs: str):
    if needs in ("binary", "both"):
        alg.require_binary()
    if needs in ("ternary", "both"):
        alg.require_ternary()


def identity_residual(
    alg: Algebra,
    identity: IdentityId,
    indices: Sequence[int],
    alpha: Optional[LinearMap] = None,
) -> tuple:
    """Residual of one identity at one basis tuple (exact vector)."""
    arity, formula, needs = _FORMULAS[identity]
    _need(alg, needs)
    if len(indices) != arity:
        raise DimensionMismatch(f"{identity.value} takes {arity} indices")
    return formula(_Context(alg, alpha), *indices)


def _sweep(
    alg: Algebra,
    identities: Iterable[IdentityId],
    alpha: Optional[LinearMap] = None,
) -> Report:
    identities = tuple(identities)
    for identity in identities:
        _need(alg, _FORMULAS[identity][2])
    ctx = _Context(alg, alpha)
    n = alg.dim
    violations = []
    for identity in identities:
        arity, formula, _ = _FORMULAS[identity]
        for indices in product(range(n), repeat=arity):
            residual = formula(ctx, *indices)
            if any(residual):
                violations.append(Violation(identity, indices, residual))
    return Report(alg.name, alg.basis, identities, tuple(violations))


# --- checker surface --------------------------------------------------------


def check_skew2(alg: Algebra) -> Report:
    """Graded skew symmetry of the binary operation."""
    return _sweep(alg, (IdentityId.SKEW2,))


def check_skew3(alg: Algebra) -> Report:
    """Graded skew symmetry of the ternary operation in its first two slots."""
    return _sweep(alg, (IdentityId.SKEW3,))


def check_hom_jacobi(alg: Algebra) -> Report:
    """Twisted graded Jacobi identity (cyclic sum of (x*y)*alpha(z))."""
    return _sweep(alg, (IdentityId.HOM_JACOBI,))


def check_hom_assoc(alg: Algebra) -> Report:
    """Twisted associativity: (x*y)*alpha(z) = alpha(x)*(y*z)."""
    return _sweep(alg, (IdentityId.HOM_ASSOC,))


def check_sts(alg: Algebra) -> Report:
    """Supertriple-system axioms: skew in slots 1-2 and graded cyclic sum zero."""
    return _sweep(alg, (IdentityId.STS_I, IdentityId.STS_II))


def check_nambu(alg: Algebra) -> Report:
    """Ternary Hom-Nambu superidentity (twisted derivation property)."""
    return _sweep(alg, (IdentityId.NAMBU,))


def check_hlts(alg: Algebra) -> Report:
    """Hom-Lie supertriple system: supertriple axioms plus the Nambu identity."""
    return _sweep(alg, (IdentityId.STS_I, IdentityId.STS_II, IdentityId.NAMBU))


def check_hly(alg: Algebra) -> Report:
    """The full Hom-Lie-Yamaguti axiom system SHLY1-SHLY8."""
    alg.require_binary()
    alg.require_ternary()
    return _sweep(
        alg,
        (
            IdentityId.SHLY1,
            IdentityId.SHLY2,
            IdentityId.SHLY3,
            IdentityId.SHLY4,
            IdentityId.SHLY5,
            IdentityId.SHLY6,
            IdentityId.SHLY7,
            IdentityId.SHLY8,
        ),
    )


def check_ly(alg: Algebra) -> Report:
    """The untwisted Lie-Yamaguti axiom system SLY1-SLY6 (twist forced to Id)."""
    alg.require_binary()
    alg.require_ternary()
    ident = LinearMap.identity(alg.basis, alg.domain)
    return _sweep(
        alg,
        (
            IdentityId.SLY1,
            IdentityId.SLY2,
            IdentityId.SLY3,
            IdentityId.SLY4,
            IdentityId.SLY5,
            IdentityId.SLY6,
        ),
        alpha=ident,
    )


def check_hom_lie(alg: Algebra) -> Report:
    """Hom-Lie superalgebra profile: skew + Hom-Jacobi + multiplicativity."""
    alg.require_binary()
    return _sweep(alg, (IdentityId.SKEW2, IdentityId.HOM_JACOBI, IdentityId.MULT2))


def check_lie(alg: Algebra) -> Report:
    """Lie superalgebra profile: skew + Jacobi with the twist forced to Id."""
    alg.require_binary()
    ident = LinearMap.identity(alg.basis, alg.domain)
    return _sweep(alg, (IdentityId.SKEW2, IdentityId.HOM_JACOBI), alpha=ident)


def is_multiplicative(alg: Algebra) -> Report:
    """Does the algebra's own twist map commute with its operations?"""
    identities = []
    if alg.binary is not None:
        identities.append(IdentityId.MULT2)
    if alg.ternary is not None:
        identities.append(IdentityId.MULT3)
    return _sweep(alg, identities)


def is_endomorphism(beta: LinearMap, alg: Algebra) -> Report:
    """Is beta a morphism of every operation the algebra carries?"""
    if beta.basis != alg.basis:
        raise DimensionMismatch("endomorphism candidate lives over a different basis")
    identities = []
    if alg.binary is not None:
        identities.append(IdentityId.MULT2)
    if alg.ternary is not None:
        identities.append(IdentityId.MULT3)
    return _sweep(alg, identities, alpha=beta)


PROFILES: dict = {
    "hly": check_hly,
    "ly": check_ly,
    "hom-lie": check_hom_lie,
    "lie": check_lie,
    "hom-assoc": check_hom_assoc,
    "sts": check_sts,
    "hlts": check_hlts,
    "nambu": check_nambu,
    "mult": is_multiplicative,
}


# --- vector-level residuals (oracles and property tests) --------------------


def _parity(alg: Algebra, v: tuple) -> int:
    p = parity_of(alg.basis, v)
    if p is None:
        raise NotHomogeneous("identity residuals need homogeneous arguments")
    return p


def super_jacobian(
    alg: Algebra, x: tuple, y: tuple, z: tuple, alpha: Optional[LinearMap] = None
) -> tuple:
    """J_alpha on homogeneous vectors: the twisted graded cyclic Jacobi sum."""
    c = alg.require_binary()
    a = alg.alpha if alpha is None else alpha
    px, py, pz = _parity(alg, x), _parity(alg, y), _parity(alg, z)
    r = eval2(c, eval2(c, x, y), a.apply(z))
    r = _acc(r, eval2(c, eval2(c, y, z), a.apply(x)), _sign(px * (py + pz)))
    r = _acc(r, eval2(c, eval2(c, z, x), a.apply(y)), _sign(pz * (px + py)))
    return r


def cyclic_core_residual(
    alg: Algebra, x: tuple, y: tuple, z: tuple, weighting: str = "hom"
) -> tuple:
    """Cyclic sum of (x*y)*alpha(z) + {x,y,z} under either weighting.

    ``weighting="hom"`` uses the (-1)^{|x||z|} weights; ``"plain"`` uses the
    Lie-Yamaguti weights 1, (-1)^{|x|(|y|+|z|)}, (-1)^{|z|(|x|+|y|)}.  The two
    results differ exactly by the factor (-1)^{|x||z|}.
    """
    c = alg.require_binary()
    d = alg.require_ternary()
    a = alg.alpha
    args = (x, y, z)
    ps = [_parity(alg, v) for v in args]
    r = None
    for t in range(3):
        vx, vy, vz = args[t], args[(t + 1) % 3], args[(t + 2) % 3]
        px, py, pz = ps[t], ps[(t + 1) % 3], ps[(t + 2) % 3]
        if weighting == "hom":
            sign = _sign(px * pz)
        elif weighting == "plain":
            sign = (1, _sign(ps[0] * (ps[1] + ps[2])), _sign(ps[2] * (ps[0] + ps[1])))[t]
        else:
            raise ValueError(f"unknown weighting {weighting!r}")
        term = vec_add(eval2(c, eval2(c, vx, vy), a.apply(vz)), eval3(d, vx, vy, vz))
        r = _acc(r, term, sign)
    return r
