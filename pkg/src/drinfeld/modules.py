"""Drinfeld modules over F = F_q(T) with A-integral coefficients, and their
reductions modulo primes of A.

A residue field F_p = A/p is realized inside the tower's canonical field of
degree deg(p)*[F_q:prime]; the image of T is the lex-smallest root of p
there, and canonical representatives (degree < deg p) are recovered through a
cached change-of-basis matrix, so reductions round-trip exactly.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import (
    BadReductionError,
    DrinfeldError,
    NotIrreducibleError,
    ZeroInputError,
)
from .fields import FFElem, FieldTower, _FieldCtx
from .polys import Poly, is_irreducible
from .skew import AOverField, SkewPoly


class DrinfeldModule:
    """psi_T = T + g_1 tau + ... + g_r tau^r with g_i in A, g_r nonzero."""

    def __init__(self, tower: FieldTower, coefficients: list[Poly]):
        if not coefficients or coefficients[-1].is_zero():
            raise DrinfeldError("the top coefficient g_r must be nonzero")
        self.tower = tower
        self.base = tower.base_field
        self.g = tuple(coefficients)  # g_1 .. g_r
        self.rank = len(self.g)
        A = AOverField(self.base)
        self.psi_T = SkewPoly(A, (Poly.x(self.base),) + self.g)
        self._residues: dict = {}

    @property
    def base_q(self):
        return self.base.fid

    def __repr__(self):
        return f"DrinfeldModule(q={self.tower.q}, r={self.rank})"


def psi_of(psi: DrinfeldModule, a: Poly) -> SkewPoly:
    """The image psi_a in A{tau}; tau-degree r*deg a, constant term a."""
    if a.is_zero():
        raise ZeroInputError("psi_a of a = 0")
    A = psi.psi_T.ring
    acc = SkewPoly.zero(A)
    for k in range(a.degree(), -1, -1):
        acc = acc * psi.psi_T + SkewPoly(A, (Poly.constant(a[k]),))
    if acc.degree() != psi.rank * a.degree():
        raise DrinfeldError("psi_a has wrong tau-degree")  # unreachable
    if acc[0] != a:
        raise DrinfeldError("psi_a has wrong constant term")  # unreachable
    return acc


def good_reduction_at(psi: DrinfeldModule, p: Poly) -> bool:
    """With A-integral coefficients, good reduction at p means p does not
    divide the top coefficient."""
    if not is_irreducible(p):
        raise NotIrreducibleError("reduction needs a prime modulus")
    return not (psi.g[-1] % p).is_zero()


class ResidueField:
    """F_p = A/pA realized in the tower, with exact lift/reduce maps."""

    def __init__(self, tower: FieldTower, p: Poly):
        p = p.monic()
        self.tower = tower
        self.prime = p
        n = p.degree()
        self.deg_p = n
        e = tower.base_degree
        self.ctx = tower.field(n * e)
        if n * e > tower.base_degree:
            tower.embedding(tower.base_field, self.ctx)
        self.t_image = self._find_t_image()
        # change of basis: columns are vec(y^t * T^j) for the F_q-basis y^t
        m = self.ctx.degree
        cols = np.zeros((m, m), dtype=np.int64)
        y = tower.embed(tower.gen(tower.base_field), self.ctx)
        tj = FFElem(self.ctx, self.ctx.one_coords())
        idx = 0
        for j in range(n):
            yt = tj
            for t in range(e):
                cols[:, idx] = yt.vec()
                yt = yt * y
                idx += 1
            tj = tj * self.t_image
        self._basis = cols
        inv = linalg.solve(cols, np.eye(m, dtype=np.int64), tower.char)
        if inv is None:
            raise DrinfeldError("residue basis is singular")  # unreachable
        self._basis_inv = inv

    def _find_t_image(self) -> FFElem:
        from .polys import roots_in_field

        coeffs = [self.tower.embed(c, self.ctx) for c in self.prime.coeffs]
        roots = roots_in_field(Poly(self.ctx, coeffs))
        if len(roots) != self.deg_p:
            raise DrinfeldError("prime does not split in its residue field")
        return min(roots, key=lambda r: r.int_code())

    def reduce(self, f: Poly) -> FFElem:
        """Image of f in F_p (evaluate at the T-image)."""
        acc = FFElem(self.ctx, self.ctx.zero_coords())
        for c in reversed(f.coeffs):
            acc = acc * self.t_image + self.tower.embed(c, self.ctx)
        return acc

    def lift(self, x: FFElem) -> Poly:
        """Canonical representative in A of degree < deg p."""
        e = self.tower.base_degree
        y = (self._basis_inv @ x.vec()) % self.tower.char
        coeffs = []
        for j in range(self.deg_p):
            block = y[j * e : (j + 1) * e]
            coeffs.append(FFElem(self.tower.base_field, tuple(int(c) for c in block)))
        return Poly(self.tower.base_field, coeffs)

    @property
    def order(self) -> int:
        return self.tower.q**self.deg_p


class ReducedModule:
    """The reduction psi (x) F_p, a Drinfeld module over the residue field."""

    def __init__(self, source: DrinfeldModule, p: Poly):
        if not good_reduction_at(source, p):
            raise BadReductionError(
                f"bad reduction: p divides the top coefficient g_{source.rank}"
            )
        self.source = source
        self.prime = p.monic()
        self.residue = source._residues.get(self.prime.coeffs)
        if self.residue is None:
            self.residue = ResidueField(source.tower, self.prime)
            source._residues[self.prime.coeffs] = self.residue
        ctx = self.residue.ctx
        coeffs = [self.residue.t_image] + [self.residue.reduce(g) for g in source.g]
        self.psibar_T = SkewPoly(ctx, coeffs)
        if self.psibar_T.degree() != source.rank:
            raise BadReductionError("tau-degree dropped under reduction")  # unreachable
        self.rank = source.rank
        self.deg_p = self.prime.degree()

    @property
    def ctx(self) -> _FieldCtx:
        return self.residue.ctx

    def psibar_of(self, a: Poly) -> SkewPoly:
        """Image of a under the reduced module (Horner, all arithmetic in F_p)."""
        ctx = self.residue.ctx
        acc = SkewPoly.zero(ctx)
        if a.is_zero():
            return acc
        for k in range(a.degree(), -1, -1):
            c = self.tower_embed_const(a[k])
            acc = acc * self.psibar_T + SkewPoly(ctx, (c,))
        return acc

    def tower_embed_const(self, c: FFElem) -> FFElem:
        return self.source.tower.embed(c, self.residue.ctx)

    def frobenius_skew(self) -> SkewPoly:
        """The Frobenius endomorphism tau^(deg p) as a skew polynomial."""
        return SkewPoly.tau_power(self.residue.ctx, self.deg_p)


def reduce_at(psi: DrinfeldModule, p: Poly) -> ReducedModule:
    if not is_irreducible(p):
        raise NotIrreducibleError("reduction needs a prime modulus")
    return ReducedModule(psi, p)
