"""Exact arithmetic in F_q (q = p^e) and its extensions, organized in a tower.

Every field is realized as F_p[x]/(m(x)) over the prime field, with m the
lexicographically smallest monic irreducible of the right degree; polynomials
are compared by their coefficient tuples read from the highest degree down,
each coefficient as an integer 0..p-1.  Elements are immutable coordinate
vectors over the prime field.

Two arithmetic regimes coexist behind one element type: fields with at most
``TABLE_LIMIT`` elements get discrete-log tables (constant-time products),
larger fields use numpy convolution against a cached reduction matrix.

Wherever a deterministic element choice is needed (embedding roots, torsion
generators), elements are ordered by their integer codes sum(c_i * p^i).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    DrinfeldError,
    ResourceLimitError,
    RingMismatchError,
    TowerMembershipError,
    ZeroInputError,
)

TABLE_LIMIT = 1 << 14


@dataclass(frozen=True)
class FieldId:
    """Canonical identity of a tower field: characteristic, degree over the
    prime field, and the defining modulus (coefficients low-first)."""

    char: int
    degree: int
    modulus: tuple[int, ...]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# prime-field polynomial helpers (numpy vectors, low degree first)


def _np_trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: int(nz[-1]) + 1] if len(nz) else a[:0]


def _np_divmod(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    a = _np_trim(a % p)
    b = _np_trim(b % p)
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return np.zeros(0, dtype=np.int64), a
    inv_lead = pow(int(b[-1]), p - 2, p)
    q = np.zeros(len(a) - len(b) + 1, dtype=np.int64)
    r = a.copy()
    for i in range(len(a) - len(b), -1, -1):
        top = int(r[len(b) - 1 + i])
        if top:
            c = (top * inv_lead) % p
            q[i] = c
            r[i : i + len(b)] = (r[i : i + len(b)] - c * b) % p
    return q, _np_trim(r)


def _np_gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = _np_trim(a % p)
    b = _np_trim(b % p)
    while len(b):
        a, b = b, _np_divmod(a, b, p)[1]
    if len(a):
        a = (a * pow(int(a[-1]), p - 2, p)) % p
    return a


def _np_mulmod(a: np.ndarray, b: np.ndarray, red: np.ndarray, p: int) -> np.ndarray:
    """a*b mod f for vectors of length d, where red[j] = x^(d+j) mod f."""
    d = red.shape[1]
    c = np.convolve(a, b) % p
    if len(c) <= d:
        out = np.zeros(d, dtype=np.int64)
        out[: len(c)] = c
        return out
    return (c[:d] + c[d:] @ red[: len(c) - d]) % p


def _reduction_rows(f: np.ndarray, p: int) -> np.ndarray:
    """Rows x^(d+j) mod f for j = 0..d-2 (f monic of degree d)."""
    d = len(f) - 1
    rows = np.zeros((max(d - 1, 1), d), dtype=np.int64)
    r = (-f[:d]) % p  # x^d mod f
    rows[0] = r
    for j in range(1, d - 1):
        top = int(r[d - 1])
        r = np.concatenate([[0], r[: d - 1]])
        if top:
            r = (r + top * rows[0]) % p
        rows[j] = r
    return rows


# ---------------------------------------------------------------------------
# lexicographically-smallest irreducible modulus search


def _np_is_irreducible(f: np.ndarray, p: int, small_sieve) -> bool:
    """Deterministic Rabin test for monic f over F_p, with small-factor sieve."""
    d = len(f) - 1
    if d == 0:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    for c in range(p):  # linear factors
        acc = 0
        for co in f[::-1]:
            acc = (acc * c + int(co)) % p
        if acc == 0:
            return False
    if small_sieve:
        for g in small_sieve:
            if len(g) - 1 >= d:
                continue
            if len(_np_divmod(f, g, p)[1]) == 0:
                return False
    red = _reduction_rows(f, p)
    x = np.zeros(d, dtype=np.int64)
    x[1] = 1
    checkpoints = {d // ell for ell in _prime_factors(d)}
    h = x.copy()
    for k in range(1, d + 1):
        # h <- h^p mod f
        acc = np.zeros(d, dtype=np.int64)
        acc[0] = 1
        base = h
        e = p
        while e:
            if e & 1:
                acc = _np_mulmod(acc, base, red, p)
            e >>= 1
            if e:
                base = _np_mulmod(base, base, red, p)
        h = acc
        if k in checkpoints or k == d:
            diff = h.copy()
            diff[1] = (diff[1] - 1) % p
            if k == d:
                if _np_trim(diff).size:
                    return False
            elif len(_np_gcd(diff, f, p)) > 1:
                return False
    return True


_SIEVE_CACHE: dict[int, list[np.ndarray]] = {}
_LEX_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def _small_sieve(p: int) -> list[np.ndarray]:
    if p not in _SIEVE_CACHE:
        max_deg = 4 if p <= 3 else 3
        out = []
        for d in range(2, max_deg + 1):
            for code in range(p**d):
                tail = [(code // p**i) % p for i in range(d)]
                f = np.array(tail + [1], dtype=np.int64)
                if _np_is_irreducible(f, p, None):
                    out.append(f)
        _SIEVE_CACHE[p] = out
    return _SIEVE_CACHE[p]


def lex_irreducible(p: int, d: int) -> tuple[int, ...]:
    """Lex-smallest monic irreducible of degree d over F_p, low-first tuple."""
    if d == 1:
        return (0, 1)
    key = (p, d)
    if key in _LEX_CACHE:
        return _LEX_CACHE[key]
    sieve = [g for g in _small_sieve(p) if len(g) - 1 < d]
    for code in range(p**d):
        # digits from the most significant are the coefficients c_{d-1}..c_0
        tail = [0] * d
        c = code
        for i in range(d):
            tail[i] = c % p  # tail[i] = coefficient of x^i
            c //= p
        if tail[0] == 0:
            continue
        f = np.array(tail + [1], dtype=np.int64)
        if _np_is_irreducible(f, p, sieve):
            result = tuple(int(v) for v in f)
            _LEX_CACHE[key] = result
            return result
    raise DrinfeldError(f"no irreducible of degree {d} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------
# field contexts


class _FieldCtx:
    """Arithmetic context for one tower field (internal)."""

    def __init__(self, tower: "FieldTower", fid: FieldId):
        self.tower = tower
        self.fid = fid
        self.char = fid.char
        self.degree = fid.degree
        self.order = fid.char**fid.degree
        self.modulus = np.array(fid.modulus, dtype=np.int64)
        self._red = _reduction_rows(self.modulus, self.char)
        self._frob_cache: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()
        self._tables = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    # -- encoding -------------------------------------------------------------

    def enc(self, coords: tuple[int, ...]) -> int:
        code = 0
        for c in reversed(coords):
            code = code * self.char + c
        return code

    def dec(self, code: int) -> tuple[int, ...]:
        p = self.char
        out = []
        for _ in range(self.degree):
            out.append(code % p)
            code //= p
        return tuple(out)

    def _vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return _np_mulmod(a, b, self._red, self.char)

    def _vpow(self, a: np.ndarray, k: int) -> np.ndarray:
        out = np.zeros(self.degree, dtype=np.int64)
        out[0] = 1
        base = a
        while k:
            if k & 1:
                out = self._vmul(out, base)
            k >>= 1
            if k:
                base = self._vmul(base, base)
        return out

    def _build_tables(self):
        n = self.order
        one = (1,) + (0,) * (self.degree - 1)
        fac = _prime_factors(n - 1) if n > 2 else []
        gen = None
        for code in range(2, n):
            cand = np.array(self.dec(code), dtype=np.int64)
            if all(
                tuple(int(v) for v in self._vpow(cand, (n - 1) // ell)) != one
                for ell in fac
            ):
                gen = cand
                break
        if gen is None:
            gen = np.array(self.dec(n - 1), dtype=np.int64)  # F_2: generator is 1
        exp = np.zeros(2 * (n - 1), dtype=np.int64)
        log = np.full(n, -1, dtype=np.int64)
        cur = np.zeros(self.degree, dtype=np.int64)
        cur[0] = 1
        for k in range(n - 1):
            code = self.enc(tuple(int(c) for c in cur))
            exp[k] = code
            exp[k + n - 1] = code
            log[code] = k
            cur = self._vmul(cur, gen)
        self._tables = (exp, log)

    # -- raw coordinate operations ----------------------------------------------

    def add(self, a, b):
        p = self.char
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.char
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.char
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        if self._tables is not None:
            exp, log = self._tables
            la, lb = int(log[self.enc(a)]), int(log[self.enc(b)])
            if la < 0 or lb < 0:
                return (0,) * self.degree
            return self.dec(int(exp[la + lb]))
        va = np.array(a, dtype=np.int64)
        vb = np.array(b, dtype=np.int64)
        return tuple(int(c) for c in self._vmul(va, vb))

    def inv(self, a):
        if not any(a):
            raise ZeroInputError("inverse of zero")
        if self._tables is not None:
            exp, log = self._tables
            la = int(log[self.enc(a)])
            return self.dec(int(exp[(self.order - 1 - la) % (self.order - 1)]))
        p = self.char
        r0, r1 = self.modulus.copy(), _np_trim(np.array(a, dtype=np.int64))
        s0 = np.zeros(1, dtype=np.int64)
        s1 = np.ones(1, dtype=np.int64)
        while len(r1):
            q, r = _np_divmod(r0, r1, p)
            qs1 = np.convolve(q, s1) % p if len(q) and len(s1) else np.zeros(1, dtype=np.int64)
            ln = max(len(s0), len(qs1))
            s = np.zeros(ln, dtype=np.int64)
            s[: len(s0)] += s0
            s[: len(qs1)] -= qs1
            r0, r1 = r1, r
            s0, s1 = s1, _np_trim(s % p)
        c = pow(int(r0[-1]), p - 2, p)
        s0 = (s0 * c) % p
        out = np.zeros(self.degree, dtype=np.int64)
        out[: len(s0)] = s0
        return tuple(int(x) for x in out)

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        if k == 0:
            return self.one_coords()
        if self._tables is not None:
            if not any(a):
                return self.zero_coords()
            exp, log = self._tables
            la = int(log[self.enc(a)])
            return self.dec(int(exp[(la * k) % (self.order - 1)]))
        return tuple(int(v) for v in self._vpow(np.array(a, dtype=np.int64), k))

    def frob_p_matrix(self, k: int) -> np.ndarray:
        """Matrix of x -> x^(p^k) as a prime-linear map on coordinates."""
        d = self.degree
        k = k % d
        with self._lock:
            if k in self._frob_cache:
                return self._frob_cache[k]
            if k == 0:
                m = np.eye(d, dtype=np.int64)
            else:
                if 1 not in self._frob_cache:
                    xp = np.array(self.pow(self.x_coords(), self.char), dtype=np.int64)
                    m1 = np.zeros((d, d), dtype=np.int64)
                    cur = np.zeros(d, dtype=np.int64)
                    cur[0] = 1
                    for j in range(d):
                        m1[:, j] = cur
                        if j < d - 1:
                            cur = self._vmul(cur, xp)
                    self._frob_cache[1] = m1
                m = linalg.matpow(self._frob_cache[1], k, self.char) if k > 1 else self._frob_cache[1]
            self._frob_cache[k] = m
            return m

    def mult_matrix(self, coords) -> np.ndarray:
        """Matrix of y -> c*y over the prime field."""
        p, d = self.char, self.degree
        m = np.zeros((d, d), dtype=np.int64)
        cur = np.array(coords, dtype=np.int64)
        for j in range(d):
            m[:, j] = cur
            if j < d - 1:
                top = int(cur[d - 1])
                cur = np.concatenate([[0], cur[: d - 1]])
                if top:
                    cur = (cur + top * self._red[0]) % p
        return m

    def zero_coords(self):
        return (0,) * self.degree

    def one_coords(self):
        return (1,) + (0,) * (self.degree - 1)

    def x_coords(self):
        if self.degree == 1:
            return ((-int(self.modulus[0])) % self.char,)
        return (0, 1) + (0,) * (self.degree - 2)

    # element constructors shared with the generic polynomial layer
    def zero_elem(self) -> "FFElem":
        return FFElem(self, self.zero_coords())

    def one_elem(self) -> "FFElem":
        return FFElem(self, self.one_coords())

    def dec_elem(self, code: int) -> "FFElem":
        return FFElem(self, self.dec(code))

    def elements(self):
        """All elements in deterministic (coordinate-code) order."""
        for code in range(self.order):
            yield FFElem(self, self.dec(code))

    def __repr__(self):
        return f"F({self.char}^{self.degree})" if self.degree > 1 else f"F({self.char})"


class FFElem:
    """Immutable element of a tower field."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: _FieldCtx, coords: tuple[int, ...]):
        self.ctx = ctx
        self.coords = coords

    @property
    def field(self) -> FieldId:
        return self.ctx.fid

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_one(self) -> bool:
        return self.coords == self.ctx.one_coords()

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, FFElem)
            and self.ctx.fid == other.ctx.fid
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.ctx.fid, self.coords))

    def _check(self, other: "FFElem"):
        if self.ctx is not other.ctx and self.ctx.fid != other.ctx.fid:
            raise RingMismatchError(
                f"elements of {self.ctx} and {other.ctx} cannot be combined"
            )

    def __add__(self, other):
        self._check(other)
        return FFElem(self.ctx, self.ctx.add(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return FFElem(self.ctx, self.ctx.sub(self.coords, other.coords))

    def __neg__(self):
        return FFElem(self.ctx, self.ctx.neg(self.coords))

    def __mul__(self, other):
        self._check(other)
        return FFElem(self.ctx, self.ctx.mul(self.coords, other.coords))

    def __truediv__(self, other):
        self._check(other)
        return FFElem(self.ctx, self.ctx.mul(self.coords, self.ctx.inv(other.coords)))

    def __pow__(self, k: int):
        return FFElem(self.ctx, self.ctx.pow(self.coords, k))

    def inv(self) -> "FFElem":
        return FFElem(self.ctx, self.ctx.inv(self.coords))

    def frob(self, k: int = 1) -> "FFElem":
        """q-power Frobenius iterated k times (q from the owning tower)."""
        return self.ctx.tower.frobenius_power(self, k)

    def vec(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def int_code(self) -> int:
        return self.ctx.enc(self.coords)

    def __repr__(self):
        return f"FF{self.coords}@{self.ctx}"


@dataclass(frozen=True)
class Embedding:
    """Prime-linear matrix realizing one field inside a bigger one."""

    sub: FieldId
    sup: FieldId
    matrix: np.ndarray  # d_sup x d_sub, column j = image of x^j

    def apply(self, x: FFElem, sup_ctx: _FieldCtx) -> FFElem:
        v = (self.matrix @ x.vec()) % sup_ctx.char
        return FFElem(sup_ctx, tuple(int(c) for c in v))


class FieldTower:
    """Registry of the fields F_{q^n} with embeddings, based at F_q = F_{p^e}.

    Extensions are created on demand and cached by their degree over the
    prime field; registration is serialized, reads are lock-free.  The cap
    ``max_degree`` bounds the degree over the prime field of any field that
    may be created (default 64).
    """

    def __init__(self, q: int, max_degree: int = 64):
        p, e = _split_prime_power(q)
        self.q = q
        self.char = p
        self.base_degree = e
        self.max_degree = max_degree
        self._fields: dict[int, _FieldCtx] = {}
        self._embeddings: dict[tuple[int, int], Embedding] = {}
        self._lock = threading.RLock()
        self.base_field = self.field(e)
        self._z_cache: FFElem | None = None

    # -- registry ---------------------------------------------------------------

    def field(self, degree: int) -> _FieldCtx:
        """Canonical field of the given degree over the prime field."""
        ctx = self._fields.get(degree)
        if ctx is not None:
            return ctx
        if degree > self.max_degree:
            raise ResourceLimitError(
                f"degree {degree} over the prime field exceeds the cap {self.max_degree}"
            )
        with self._lock:
            if degree not in self._fields:
                fid = FieldId(self.char, degree, lex_irreducible(self.char, degree))
                self._fields[degree] = _FieldCtx(self, fid)
        return self._fields[degree]

    def make_extension(self, base: _FieldCtx, n: int) -> _FieldCtx:
        """The field of degree n over ``base``, registered with its embedding."""
        if n < 1:
            raise DrinfeldError("extension degree must be >= 1")
        ext = self.field(base.degree * n)
        if ext.degree != base.degree:
            self.embedding(base, ext)
        return ext

    def embedding(self, sub: _FieldCtx, sup: _FieldCtx) -> Embedding:
        key = (sub.degree, sup.degree)
        emb = self._embeddings.get(key)
        if emb is not None:
            return emb
        if sup.degree % sub.degree != 0:
            raise TowerMembershipError(
                f"no embedding of degree {sub.degree} into degree {sup.degree}"
            )
        with self._lock:
            emb = self._embeddings.get(key)
            if emb is None:
                emb = self._compute_embedding(sub, sup)
                self._embeddings[key] = emb
            return emb

    def _compute_embedding(self, sub: _FieldCtx, sup: _FieldCtx) -> Embedding:
        if sub.degree == sup.degree:
            return Embedding(sub.fid, sup.fid, np.eye(sub.degree, dtype=np.int64))
        # Compose through the largest registered intermediate field; this keeps
        # every triangle of registered embeddings commutative (the direct map is
        # defined to be the composition whenever a chain already exists).
        mids = [
            d
            for d in sorted(self._fields, reverse=True)
            if d not in (sub.degree, sup.degree)
            and d % sub.degree == 0
            and sup.degree % d == 0
            and (sub.degree, d) in self._embeddings
            and (d, sup.degree) in self._embeddings
        ]
        if mids:
            lo = self._embeddings[(sub.degree, mids[0])]
            hi = self._embeddings[(mids[0], sup.degree)]
            return Embedding(sub.fid, sup.fid, (hi.matrix @ lo.matrix) % self.char)
        root = self._lex_min_root(sub, sup)
        m = np.zeros((sup.degree, sub.degree), dtype=np.int64)
        cur = FFElem(sup, sup.one_coords())
        for j in range(sub.degree):
            m[:, j] = cur.vec()
            if j < sub.degree - 1:
                cur = cur * root
        return Embedding(sub.fid, sup.fid, m)

    def _lex_min_root(self, sub: _FieldCtx, sup: _FieldCtx) -> FFElem:
        from .polys import Poly, roots_in_field  # deferred to avoid an import cycle

        coeffs = [
            FFElem(sup, ((int(c) % self.char,) + (0,) * (sup.degree - 1)))
            for c in sub.fid.modulus
        ]
        rs = roots_in_field(Poly(sup, coeffs))
        if len(rs) != sub.degree:
            raise DrinfeldError("subfield modulus does not split in the superfield")
        return min(rs, key=lambda r: r.int_code())

    # -- element constructors ------------------------------------------------------

    def zero(self, ctx: _FieldCtx | None = None) -> FFElem:
        ctx = ctx or self.base_field
        return FFElem(ctx, ctx.zero_coords())

    def one(self, ctx: _FieldCtx | None = None) -> FFElem:
        ctx = ctx or self.base_field
        return FFElem(ctx, ctx.one_coords())

    def from_int(self, n: int, ctx: _FieldCtx | None = None) -> FFElem:
        ctx = ctx or self.base_field
        return FFElem(ctx, ((n % self.char),) + (0,) * (ctx.degree - 1))

    def gen(self, ctx: _FieldCtx | None = None) -> FFElem:
        """The class of x in the defining quotient F_p[x]/(m)."""
        ctx = ctx or self.base_field
        return FFElem(ctx, ctx.x_coords())

    def z_generator(self) -> FFElem:
        """Lex-smallest multiplicative generator of F_q (text I/O uses it)."""
        if self._z_cache is None:
            ctx = self.base_field
            n = ctx.order
            fac = _prime_factors(n - 1) if n > 2 else []
            for code in range(1, n):
                cand = FFElem(ctx, ctx.dec(code))
                if cand.is_zero():
                    continue
                if all(not (cand ** ((n - 1) // ell)).is_one() for ell in fac):
                    self._z_cache = cand
                    break
        return self._z_cache

    def dlog_z(self, x: FFElem) -> int:
        """Discrete log of x in F_q^x base z (F_q is always table-sized)."""
        if x.is_zero():
            raise ZeroInputError("dlog of zero")
        z = self.z_generator()
        cur = self.one()
        for j in range(self.q - 1):
            if cur == x:
                return j
            cur = cur * z
        raise DrinfeldError("dlog failure")  # unreachable

    # -- maps ------------------------------------------------------------------------

    def embed(self, x: FFElem, sup: _FieldCtx) -> FFElem:
        if x.ctx.fid == sup.fid:
            return FFElem(sup, x.coords)
        return self.embedding(x.ctx, sup).apply(x, sup)

    def project(self, x: FFElem, sub: _FieldCtx) -> FFElem:
        """Inverse of embed, defined on elements of the embedded subfield."""
        if x.ctx.fid == sub.fid:
            return FFElem(sub, x.coords)
        emb = self.embedding(sub, x.ctx)
        y = linalg.solve(emb.matrix, x.vec(), self.char)
        if y is None:
            raise TowerMembershipError("element does not lie in the requested subfield")
        return FFElem(sub, tuple(int(c) for c in y))

    def frobenius_power(self, x: FFElem, k: int) -> FFElem:
        """x^(q^k); q is the tower base order, k may be 0 or negative."""
        ctx = x.ctx
        if ctx.degree % self.base_degree:
            raise TowerMembershipError("field is not an extension of the base field")
        m = ctx.degree // self.base_degree
        kk = k % m
        if kk == 0:
            return x
        mat = ctx.frob_p_matrix(kk * self.base_degree)
        return FFElem(ctx, tuple(int(c) for c in (mat @ x.vec()) % self.char))

    def norm_to_base(self, x: FFElem) -> FFElem:
        ctx = x.ctx
        if ctx.degree % self.base_degree:
            raise TowerMembershipError("element is not in an extension of the base field")
        m = ctx.degree // self.base_degree
        acc, cur = x, x
        for _ in range(m - 1):
            cur = self.frobenius_power(cur, 1)
            acc = acc * cur
        return self.project(acc, self.base_field)

    def trace_to_base(self, x: FFElem) -> FFElem:
        ctx = x.ctx
        if ctx.degree % self.base_degree:
            raise TowerMembershipError("element is not in an extension of the base field")
        m = ctx.degree // self.base_degree
        acc, cur = x, x
        for _ in range(m - 1):
            cur = self.frobenius_power(cur, 1)
            acc = acc + cur
        return self.project(acc, self.base_field)


def _split_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise DrinfeldError("q must be a prime power >= 2")
    n = q
    p = None
    for d in range(2, q + 1):
        if d * d > n and p is None:
            p = n
            break
        if n % d == 0:
            p = d
            break
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise DrinfeldError(f"{q} is not a prime power")
    return p, e


# spec-level free functions


def make_extension(tower: FieldTower, base: _FieldCtx, n: int) -> _FieldCtx:
    return tower.make_extension(base, n)


def frobenius_power(x: FFElem, k: int) -> FFElem:
    return x.ctx.tower.frobenius_power(x, k)


def norm_to_base(x: FFElem) -> FFElem:
    return x.ctx.tower.norm_to_base(x)
