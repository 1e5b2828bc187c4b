"""Frobenius invariants of reductions: Weil polynomials, the rank-2 conductor
b_p and discriminant delta_p, the endomorphism lattice, and its invariant
factors.

Two independent routes exist wherever the theory allows one: the rank-2 Weil
coefficient comes from the closed recursion mod p, while the general-rank
polynomial is rebuilt from torsion Frobenius matrices by CRT; the conductor
comes from skew right-division membership, while the invariant factors come
from the lattice and a Smith normal form.  The cross-checks between the
routes are part of the test suite's acceptance gate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .amatrix import charpoly, discriminant, ring_det, smith_normal_form
from .config import LatticeConfig, WeilConfig
from .errors import (
    ConfigurationError,
    DrinfeldError,
    EvenCharacteristicError,
    InconclusiveBasisError,
    RankError,
)
from .fields import FFElem
from .modules import DrinfeldModule, ReducedModule, reduce_at
from .polys import Poly, enumerate_monic_irreducibles, factorize, crt, powint
from .skew import SkewPoly, skew_right_divmod
from .torsion import torsion_basis_reduced


@dataclass
class WeilPolynomial:
    """P(x) = x^r + c_{r-1} x^{r-1} + ... + c_0 with c_0 = unit * p."""

    prime: Poly
    coeffs: tuple[Poly, ...]  # c_0 .. c_{r-1}
    unit: FFElem

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def x_coeff_list(self) -> list[Poly]:
        field = self.prime.field
        return list(self.coeffs) + [Poly.one(field)]

    @property
    def a_p(self) -> Poly:
        if self.rank != 2:
            raise RankError("a_p is the rank-2 x-coefficient")
        return self.coeffs[1]


@dataclass
class Rank2Invariants:
    a_p: Poly
    u_p: FFElem
    d: Poly  # a_p^2 - 4 u_p p
    b_p: Poly  # monic conductor
    delta_p: Poly  # exact d / b_p^2 (not monic)
    supersingular: bool

    @property
    def delta_monic(self) -> Poly:
        return self.delta_p.monic()


@dataclass
class EndLattice:
    """A-basis of End(psi x F_p) with multiplication tensors, all exact."""

    red: ReducedModule
    basis: list[SkewPoly]
    tensors: list[list[list[Poly]]]  # tensors[i][j][k]: e_i e_j = sum_k t e_k
    pi_coords: list[Poly]
    window: int


@dataclass
class InvariantFactors:
    factors: list[Poly]  # b_1 | b_2 | ... | b_{r-1}, monic


# ---------------------------------------------------------------------------
# rank-2 closed forms


def u_invariant(psi: DrinfeldModule, p: Poly) -> FFElem:
    """(-1)^deg(p) * Norm(g_2 mod p)^(-1) in F_q."""
    if psi.rank != 2:
        raise RankError("u_invariant is a rank-2 invariant")
    red = reduce_at(psi, p)
    return _u_from_reduction(red)


def _u_from_reduction(red: ReducedModule) -> FFElem:
    tower = red.source.tower
    g_top = red.residue.reduce(red.source.g[-1])
    norm = tower.norm_to_base(g_top)
    u = norm.inv()
    if red.deg_p % 2:
        u = -u
    return u


def weil_rank2(psi: DrinfeldModule, p: Poly) -> WeilPolynomial:
    """Weil polynomial x^2 + a_p x + u_p p via the coefficient recursion mod p."""
    if psi.rank != 2:
        raise RankError("weil_rank2 needs rank 2")
    red = reduce_at(psi, p)
    return weil_rank2_reduced(red)


def weil_rank2_reduced(red: ReducedModule) -> WeilPolynomial:
    tower = red.source.tower
    ctx = red.ctx
    n = red.deg_p
    u_p = _u_from_reduction(red)
    g1 = red.residue.reduce(red.source.g[0])
    g2 = red.residue.reduce(red.source.g[1])
    t_img = red.residue.t_image
    s_prev = ctx.one_elem()  # s_0
    s_cur = g1  # s_1
    for k in range(2, n + 1):
        bracket = tower.frobenius_power(t_img, k - 1) - t_img  # [k-1] mod p
        s_next = (
            -bracket * s_prev * tower.frobenius_power(g2, k - 2)
            + s_cur * tower.frobenius_power(g1, k - 1)
        )
        s_prev, s_cur = s_cur, s_next
    a_bar = -tower.embed(u_p, ctx) * s_cur
    a_p = red.residue.lift(a_bar)
    if 2 * a_p.degree() > n:
        raise DrinfeldError(
            "Riemann hypothesis bound violated; this is an implementation bug"
        )
    c0 = red.prime.scale(u_p)
    return WeilPolynomial(prime=red.prime, coeffs=(c0, a_p), unit=u_p)


def weil_identity_holds(red: ReducedModule, weil: WeilPolynomial) -> bool:
    """P(tau^deg p) = 0 in F_p{tau}, checked exactly."""
    n = red.deg_p
    r = len(weil.coeffs)
    acc = SkewPoly.tau_power(red.ctx, n * r)
    for i, c in enumerate(weil.coeffs):
        if c.is_zero():
            continue
        acc = acc + red.psibar_of(c).shift_tau(n * i)
    return acc.is_zero()


# ---------------------------------------------------------------------------
# general rank via torsion + CRT


def _aux_moduli(psi: DrinfeldModule, p: Poly, need: int, cap: int) -> list[Poly]:
    """Pairwise-coprime prime-power moduli avoiding p, total degree >= need.

    Greedy by increment cost, each modulus capped at degree ``cap`` so torsion
    kernels stay desk-sized.
    """
    base = psi.base
    pool: list[Poly] = []
    for d in range(1, cap + 1):
        for ell in enumerate_monic_irreducibles(base, d):
            if ell != p:
                pool.append(ell)
    exps = [0] * len(pool)
    total = 0
    while total < need:
        best = None
        for i, ell in enumerate(pool):
            d = ell.degree()
            if (exps[i] + 1) * d > cap:
                continue
            if best is None or d < pool[best].degree():
                best = i
        if best is None:
            raise ConfigurationError(
                "cannot assemble enough coprime auxiliary moduli within the degree budget"
            )
        exps[best] += 1
        total += pool[best].degree()
    return [powint(ell, e) for ell, e in zip(pool, exps) if e]


def weil_general(
    psi: DrinfeldModule, p: Poly, config: WeilConfig | None = None
) -> WeilPolynomial:
    """Weil polynomial of any rank from torsion Frobenius matrices and CRT."""
    config = config or WeilConfig()
    red = reduce_at(psi, p)
    n = red.deg_p
    r = psi.rank
    base = psi.base
    moduli = _aux_moduli(psi, red.prime, n + 1, config.aux_modulus_degree_cap)
    residues: list[list[Poly]] = []  # residues[i][j]: c_j mod moduli[i]
    for m in moduli:
        tb = torsion_basis_reduced(red, m, config.torsion)
        cp = charpoly(tb.frobenius_matrix, tb.ring.one_elem(), tb.ring.zero_elem())
        residues.append([cp[j].rep for j in range(r)])
    coeffs = []
    for j in range(r):
        c = crt([res[j] for res in residues], moduli)
        if c.degree() > n:
            raise DrinfeldError("reconstructed coefficient exceeds the degree bound")
        coeffs.append(c)
    c0 = coeffs[0]
    quot, rem = divmod(c0, red.prime)
    if not rem.is_zero() or quot.degree() != 0:
        raise DrinfeldError("constant Weil coefficient is not unit * p")
    unit = quot[0]
    weil = WeilPolynomial(prime=red.prime, coeffs=tuple(coeffs), unit=unit)
    if not weil_identity_holds(red, weil):
        raise DrinfeldError("reconstructed Weil polynomial fails the skew identity")
    return weil


# ---------------------------------------------------------------------------
# rank-2 conductor by skew-division membership


def rank2_invariants(psi: DrinfeldModule, p: Poly) -> Rank2Invariants:
    if psi.rank != 2:
        raise RankError("rank-2 invariants need rank 2")
    if psi.tower.q % 2 == 0:
        raise EvenCharacteristicError("rank-2 invariants need odd q")
    red = reduce_at(psi, p)
    return rank2_invariants_reduced(red)


def rank2_invariants_reduced(red: ReducedModule) -> Rank2Invariants:
    from .polys import squarefree_split

    tower = red.source.tower
    base = tower.base_field
    weil = weil_rank2_reduced(red)
    a_p, u_p = weil.coeffs[1], weil.unit
    one = base.one_elem()
    four = one + one + one + one
    d = a_p * a_p - red.prime.scale(u_p * four)
    split = squarefree_split(d)
    b_p = Poly.one(base)
    for ell, mult in factorize(split.conductor_part).factors:
        best = 0
        for e in range(1, mult + 1):
            if _membership(red, a_p, powint(ell, e)):
                best = e
            else:
                break
        if best:
            b_p = b_p * powint(ell, best)
    delta = d.exact_div(b_p * b_p)
    return Rank2Invariants(
        a_p=a_p,
        u_p=u_p,
        d=d,
        b_p=b_p.monic(),
        delta_p=delta,
        supersingular=a_p.is_zero(),
    )


def _membership(red: ReducedModule, a_p: Poly, m: Poly) -> bool:
    """(2 pi + a_p)/m lies in End(psi x F_p), by skew right-division."""
    ctx = red.ctx
    two = red.source.tower.base_field.one_elem()
    two = two + two
    elt = SkewPoly.tau_power(ctx, red.deg_p).scale_left(
        red.source.tower.embed(two, ctx)
    ) + red.psibar_of(a_p)
    _, rem = skew_right_divmod(elt, red.psibar_of(m))
    return rem.is_zero()


# ---------------------------------------------------------------------------
# the endomorphism lattice by centralizer linear algebra


def end_lattice(
    psi: DrinfeldModule, p: Poly, config: LatticeConfig | None = None
) -> EndLattice:
    config = config or LatticeConfig()
    red = reduce_at(psi, p)
    return end_lattice_reduced(red, config)


def _commutant_nullspace(red: ReducedModule, D: int) -> list[SkewPoly]:
    """Solutions e of e psibar_T = psibar_T e with tau-degree <= D."""
    tower = red.source.tower
    ctx = red.ctx
    p0 = tower.char
    e_deg = tower.base_degree
    m = ctx.degree
    r = red.rank
    gbar = list(red.psibar_T.coeffs)  # g_0 .. g_r (g_0 = T image)
    rows = (D + r + 1) * m
    cols = (D + 1) * m
    big = np.zeros((rows, cols), dtype=np.int64)
    for d in range(D + 1):
        fr_d = None
        for j, gj in enumerate(gbar):
            if gj.is_zero():
                continue
            # coefficient at tau^(d+j): e_d * gj^(q^d) - gj * e_d^(q^j)
            twisted = tower.frobenius_power(gj, d)
            block = (
                ctx.mult_matrix(twisted.coords)
                - ctx.mult_matrix(gj.coords) @ ctx.frob_p_matrix((e_deg * j) % m)
            ) % p0
            big[(d + j) * m : (d + j + 1) * m, d * m : (d + 1) * m] += block
    big %= p0
    null = linalg.nullspace(big, p0)
    out = []
    for rowv in null:
        coeffs = []
        for d in range(D + 1):
            coeffs.append(FFElem(ctx, tuple(int(c) for c in rowv[d * m : (d + 1) * m])))
        out.append(SkewPoly(ctx, coeffs))
    out.sort(key=lambda s: (s.degree(), tuple(c.int_code() for c in s.coeffs)))
    return out


class _SpanTracker:
    """Prime row space of the A-span of chosen basis elements up to degree D."""

    def __init__(self, red: ReducedModule, D: int):
        self.red = red
        self.D = D
        tower = red.source.tower
        self.m = red.ctx.degree
        self.dim = (D + 1) * self.m
        self.space = linalg.RowSpace(self.dim, tower.char)
        self.mults: list[list[SkewPoly]] = []

    def vec(self, s: SkewPoly) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for d, c in enumerate(s.coeffs):
            v[d * self.m : (d + 1) * self.m] = c.vec()
        return v

    def add_generator(self, e: SkewPoly):
        red = self.red
        tower = red.source.tower
        ctx = red.ctx
        multiples = []
        cur = e
        while cur.degree() <= self.D:
            multiples.append(cur)
            cur = red.psibar_T * cur
        self.mults.append(multiples)
        zgen = tower.embed(tower.gen(tower.base_field), ctx)
        for s in multiples:
            w = s
            for _ in range(tower.base_degree):
                self.space.add(self.vec(w))
                w = w.scale_left(zgen)

    def contains(self, s: SkewPoly) -> bool:
        return self.space.contains(self.vec(s))


def end_lattice_reduced(red: ReducedModule, config: LatticeConfig | None = None) -> EndLattice:
    config = config or LatticeConfig()
    n = red.deg_p
    r = red.rank
    growth = config.window_growth or 2 * r
    cap = config.hard_cap_factor * (n + r * r)
    D = n + 2 * r

    while True:
        if D > cap:
            raise InconclusiveBasisError(
                f"no stable lattice basis within the window cap {cap}"
            )
        sols = _commutant_nullspace(red, D)
        tracker = _SpanTracker(red, D)
        basis: list[SkewPoly] = [SkewPoly.one(red.ctx)]  # e_1 = 1 always lies in E
        tracker.add_generator(basis[0])
        for s in sols:
            if len(basis) == r:
                break
            if tracker.contains(s):
                continue
            basis.append(s)
            tracker.add_generator(s)
        if len(basis) < r:
            D += growth
            continue
        leftover = [s for s in sols if not tracker.contains(s)]
        if leftover:
            D += growth
            continue
        # stability: one more window of 2r brings nothing new
        D2 = D + 2 * r
        if D2 > cap:
            raise InconclusiveBasisError(
                f"no stable lattice basis within the window cap {cap}"
            )
        sols2 = _commutant_nullspace(red, D2)
        tracker2 = _SpanTracker(red, D2)
        for e in basis:
            tracker2.add_generator(e)
        if any(not tracker2.contains(s) for s in sols2):
            D = D2
            continue
        break

    tensors = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            tensors[i][j] = _express_in_basis(red, basis, basis[i] * basis[j])
    pi = SkewPoly.tau_power(red.ctx, n)
    pi_coords = _express_in_basis(red, basis, pi)
    return EndLattice(red=red, basis=basis, tensors=tensors, pi_coords=pi_coords, window=D)


def _express_in_basis(red: ReducedModule, basis: list[SkewPoly], target: SkewPoly) -> list[Poly]:
    """A-coordinates of target in the basis, exact; raises if not in the span."""
    tower = red.source.tower
    ctx = red.ctx
    p0 = tower.char
    e_deg = tower.base_degree
    m = ctx.degree
    base = tower.base_field
    deg_t = target.degree() if not target.is_zero() else 0
    Dpad = max(deg_t, max(b.degree() for b in basis))
    dim = (Dpad + 1) * m

    def vec(s: SkewPoly) -> np.ndarray:
        v = np.zeros(dim, dtype=np.int64)
        for d, c in enumerate(s.coeffs):
            v[d * m : (d + 1) * m] = c.vec()
        return v

    cols = []
    layout = []  # (basis index, T-power)
    zgen = tower.embed(tower.gen(base), ctx)
    for i, b in enumerate(basis):
        cur = b
        u = 0
        while cur.degree() <= Dpad:
            w = cur
            for t in range(e_deg):
                cols.append(vec(w))
                layout.append((i, u, t))
                w = w.scale_left(zgen)
            cur = red.psibar_T * cur
            u += 1
    mat = np.stack(cols, axis=1)
    sol = linalg.solve(mat, vec(target), p0)
    if sol is None:
        raise InconclusiveBasisError("element does not lie in the A-span of the basis")
    r = len(basis)
    max_u = max(u for _, u, _ in layout) + 1
    acc = [[[0] * e_deg for _ in range(max_u)] for _ in range(r)]
    for val, (i, u, t) in zip(sol, layout):
        acc[i][u][t] = int(val)
    out = []
    for i in range(r):
        coeffs = []
        for u in range(max_u):
            coeffs.append(FFElem(base, tuple(acc[i][u])))
        out.append(Poly(base, coeffs))
    return out


# ---------------------------------------------------------------------------
# invariant factors and the discriminant identity


def _coords_mul(lat: EndLattice, a: list[Poly], b: list[Poly]) -> list[Poly]:
    r = len(lat.basis)
    base = lat.red.source.tower.base_field
    out = [Poly.zero(base) for _ in range(r)]
    for i in range(r):
        if a[i].is_zero():
            continue
        for j in range(r):
            if b[j].is_zero():
                continue
            prod = a[i] * b[j]
            for k in range(r):
                t = lat.tensors[i][j][k]
                if not t.is_zero():
                    out[k] = out[k] + prod * t
    return out


def invariant_factors(psi: DrinfeldModule, p: Poly, config: LatticeConfig | None = None) -> InvariantFactors:
    lat = end_lattice(psi, p, config)
    return invariant_factors_from_lattice(lat)


def invariant_factors_from_lattice(lat: EndLattice) -> InvariantFactors:
    r = len(lat.basis)
    base = lat.red.source.tower.base_field
    coords = [Poly.one(base) if i == 0 else Poly.zero(base) for i in range(r)]
    rows = [list(coords)]
    for _ in range(r - 1):
        coords = _coords_mul(lat, coords, lat.pi_coords)
        rows.append(list(coords))
    factors = smith_normal_form(rows)
    if factors[0].degree() != 0:
        raise DrinfeldError("first invariant factor must be a unit (1 lies in A[pi])")
    return InvariantFactors(factors=[f.monic() for f in factors[1:]])


def disc_check(
    psi: DrinfeldModule, p: Poly, config: LatticeConfig | None = None
) -> tuple[bool, dict]:
    """Discriminant identity disc(P) A = disc(E) (b_1 ... b_{r-1})^2."""
    if psi.rank % psi.tower.char == 0:
        raise DrinfeldError("disc identity needs gcd(r, q) = 1")
    lat = end_lattice(psi, p, config)
    red = lat.red
    base = psi.base
    if psi.rank == 2:
        weil = weil_rank2_reduced(red)
    else:
        weil = weil_general(psi, p)
    disc_p = discriminant(weil.x_coeff_list(), base)
    r = psi.rank
    # trace vector of the regular representation: Tr(e_j) = sum_l t_{j l l}
    trace_vec = []
    for j in range(r):
        acc = Poly.zero(base)
        for l in range(r):
            acc = acc + lat.tensors[j][l][l]
        trace_vec.append(acc)
    gram = [
        [
            sum(
                (lat.tensors[i][j][k] * trace_vec[k] for k in range(r)),
                Poly.zero(base),
            )
            for j in range(r)
        ]
        for i in range(r)
    ]
    disc_e = ring_det(gram)
    bfac = invariant_factors_from_lattice(lat)
    bprod = Poly.one(base)
    for b in bfac.factors:
        bprod = bprod * b
    ok = (
        not disc_p.is_zero()
        and not disc_e.is_zero()
        and disc_p.monic() == (disc_e.monic() * bprod * bprod).monic()
    )
    report = {
        "disc_weil": disc_p,
        "disc_lattice_monic": disc_e.monic() if not disc_e.is_zero() else disc_e,
        "b_factors": bfac.factors,
    }
    return ok, report
