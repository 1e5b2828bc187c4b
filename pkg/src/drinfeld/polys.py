"""Dense univariate polynomials over a finite field, and the ring A = F_q[T].

A polynomial's field may be a tower field (`_FieldCtx`) or any object with the
same small surface (``zero_elem``, ``one_elem``, ``char``, ``order``) whose
elements support ring operators plus ``inv``/``is_zero`` — quotient fields
A/lA reuse all of the machinery below, which is how rational canonical forms
are computed.

deg(0) is the distinguished marker float('-inf'), never an integer.

Factorization is squarefree decomposition, then distinct-degree, then
equal-degree splitting driven by a pseudo-random stream seeded from the input
polynomial bytes, so outputs are reproducible across runs and platforms.
"""

from __future__ import annotations

import hashlib
import random
from typing import Iterable, Iterator

from .errors import (
    DrinfeldError,
    NotMonicError,
    RingMismatchError,
    ZeroInputError,
)

NEG_INF = float("-inf")


def same_field(f1, f2) -> bool:
    if f1 is f2:
        return True
    k1, k2 = getattr(f1, "fid", None), getattr(f2, "fid", None)
    if k1 is not None or k2 is not None:
        return k1 == k2
    k1, k2 = getattr(f1, "key", None), getattr(f2, "key", None)
    return k1 is not None and k1 == k2


class Poly:
    """Immutable dense polynomial, coefficients low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable, normalize: bool = True):
        cs = tuple(coeffs)
        if normalize:
            n = len(cs)
            while n and cs[n - 1].is_zero():
                n -= 1
            cs = cs[:n]
        self.field = field
        self.coeffs = cs

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field, (), normalize=False)

    @classmethod
    def one(cls, field) -> "Poly":
        return cls(field, (field.one_elem(),), normalize=False)

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, (field.zero_elem(), field.one_elem()), normalize=False)

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls(c.ctx if hasattr(c, "ctx") else c.ring, (c,))

    @classmethod
    def from_ints(cls, field, ints: Iterable[int]) -> "Poly":
        one = field.one_elem()
        out = []
        for n in ints:
            c = field.zero_elem()
            step = one if n >= 0 else -one
            for _ in range(abs(n) % field.char):
                c = c + step
            out.append(c)
        return cls(field, out)

    # -- basics ------------------------------------------------------------------

    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def lead(self):
        if not self.coeffs:
            raise ZeroInputError("leading coefficient of zero")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero_elem()

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other: "Poly"):
        if not same_field(self.field, other.field):
            raise RingMismatchError("polynomials over different fields")

    # -- ring operations -------------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(-c for c in self.coeffs), normalize=False)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):  # scalar
            return Poly(self.field, tuple(c * other for c in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        zero = self.field.zero_elem()
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(self.field, out, normalize=False)

    def scale(self, c) -> "Poly":
        return Poly(self.field, tuple(x * c for x in self.coeffs))

    def __pow__(self, k: int) -> "Poly":
        return powint(self, k)

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        zero = self.field.zero_elem()
        return Poly(self.field, (zero,) * k + self.coeffs, normalize=False)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if len(self.coeffs) < len(other.coeffs):
            return Poly.zero(self.field), self
        inv_lead = other.lead().inv()
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        q = [self.field.zero_elem()] * (len(r) - db)
        for i in range(len(r) - db - 1, -1, -1):
            c = r[i + db]
            if c.is_zero():
                continue
            c = c * inv_lead
            q[i] = c
            for j, bc in enumerate(other.coeffs):
                r[i + j] = r[i + j] - c * bc
        return Poly(self.field, q), Poly(self.field, r[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise DrinfeldError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroInputError("monic normalization of zero")
        if self.is_monic():
            return self
        return self.scale(self.lead().inv())

    def derivative(self) -> "Poly":
        if len(self.coeffs) <= 1:
            return Poly.zero(self.field)
        one = self.field.one_elem()
        out = [self.field.zero_elem()] * (len(self.coeffs) - 1)
        kc = self.field.zero_elem()
        for i in range(1, len(self.coeffs)):
            kc = kc + one
            out[i - 1] = self.coeffs[i] * kc
        return Poly(self.field, out)

    def eval(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc if acc is not None else self.field.zero_elem()

    def map_coeffs(self, fn, field=None) -> "Poly":
        return Poly(field or self.field, tuple(fn(c) for c in self.coeffs))

    def lex_key(self) -> tuple:
        """Deterministic sort key: degree, then coefficients from the top down."""
        return (
            len(self.coeffs),
            tuple(c.int_code() for c in reversed(self.coeffs)),
        )

    def __repr__(self):
        from .textio import poly_to_text

        try:
            return f"Poly({poly_to_text(self)})"
        except Exception:
            return f"Poly({self.coeffs})"


# ---------------------------------------------------------------------------
# gcd machinery


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with u*a + v*b = g, g monic (or zero)."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly.zero(f)
    t0, t1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = r0.lead().inv()
    return r0.scale(c), s0.scale(c), t0.scale(c)


def powmod(base: Poly, e: int, modulus: Poly) -> Poly:
    out = Poly.one(base.field)
    base = base % modulus
    while e:
        if e & 1:
            out = (out * base) % modulus
        e >>= 1
        if e:
            base = (base * base) % modulus
    return out


# ---------------------------------------------------------------------------
# irreducibility and factorization


def _poly_seed_rng(f: Poly, salt: bytes = b"") -> random.Random:
    h = hashlib.sha256()
    h.update(salt)
    h.update(str(getattr(f.field, "char", 0)).encode())
    h.update(str(getattr(f.field, "order", 0)).encode())
    for c in f.coeffs:
        h.update(str(c.int_code()).encode())
    return random.Random(int.from_bytes(h.digest()[:8], "big"))


def _random_poly(field, deg_bound: int, rng: random.Random) -> Poly:
    order = field.order
    return Poly(
        field,
        [field.dec_elem(rng.randrange(order)) for _ in range(deg_bound)],
    )


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test over the coefficient field."""
    if f.is_zero():
        raise ZeroInputError("irreducibility of zero")
    d = f.degree()
    if d < 1:
        return False
    if d == 1:
        return True
    f = f.monic()
    if f.coeffs[0].is_zero():
        return False
    q = f.field.order
    x = Poly.x(f.field)
    checkpoints = {d // ell for ell in _int_prime_factors(d)}
    h = x
    for k in range(1, d + 1):
        h = powmod(h, q, f)
        if k in checkpoints:
            if poly_gcd(h - x, f).degree() > 0:
                return False
        if k == d and not (h - x).is_zero():
            return False
    return True


def _int_prime_factors(n: int) -> list[int]:
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


def _pth_root(f: Poly) -> Poly:
    """g with g(x)^p = f(x), for f of the form u(x^p) in characteristic p."""
    p = f.field.char
    root_exp = f.field.order // p
    out = []
    for i, c in enumerate(f.coeffs):
        if i % p == 0:
            out.append(c**root_exp)
        elif not c.is_zero():
            raise DrinfeldError("polynomial is not a p-th power")
    return Poly(f.field, out)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree g_i with multiplicities m_i, f = lc * prod g_i^m_i."""
    if f.is_zero():
        raise ZeroInputError("squarefree decomposition of zero")
    f = f.monic()
    p = f.field.char
    out: dict[int, Poly] = {}
    n = 1
    while f.degree() >= 1:
        df = f.derivative()
        if df.is_zero():
            c = f
        else:
            c = poly_gcd(f, df)
            w = f.exact_div(c)
            i = 1
            while w.degree() >= 1:
                y = poly_gcd(w, c)
                z = w.exact_div(y)
                if z.degree() >= 1:
                    out[i * n] = out.get(i * n, Poly.one(f.field)) * z
                c = c.exact_div(y)
                w = y
                i += 1
        if c.degree() >= 1:
            f = _pth_root(c)
            n *= p
        else:
            break
    items = []
    for m in sorted(out):
        g = out[m]
        if g.degree() >= 1:
            items.append((g.monic(), m))
    return items


class SquarefreeSplit:
    """f = unit * conductor_part^2 * squarefree_part, conductor maximal."""

    __slots__ = ("unit", "conductor_part", "squarefree_part")

    def __init__(self, unit, conductor_part: Poly, squarefree_part: Poly):
        self.unit = unit
        self.conductor_part = conductor_part
        self.squarefree_part = squarefree_part


def squarefree_split(f: Poly) -> SquarefreeSplit:
    if f.is_zero():
        raise ZeroInputError("squarefree split of zero")
    unit = f.lead()
    c = Poly.one(f.field)
    d0 = Poly.one(f.field)
    for g, m in squarefree_decomposition(f):
        if m % 2:
            d0 = d0 * g
        if m // 2:
            c = c * powint(g, m // 2)
    return SquarefreeSplit(unit, c.monic(), d0.monic())


def powint(f: Poly, k: int) -> Poly:
    out = Poly.one(f.field)
    base = f
    while k:
        if k & 1:
            out = out * base
        k >>= 1
        if k:
            base = base * base
    return out


def _equal_degree_split(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split monic squarefree f that is a product of irreducibles of degree d."""
    if f.degree() == d:
        return [f]
    field = f.field
    q = field.order
    p = field.char
    while True:
        t = _random_poly(field, f.degree(), rng)
        if t.degree() < 1:
            continue
        if p == 2:
            # trace map over F_2
            w = q.bit_length() - 1  # q = 2^w
            s = t
            cur = t
            for _ in range(d * w - 1):
                cur = (cur * cur) % f
                s = s + cur
            g = poly_gcd(s, f)
        else:
            s = powmod(t, (q**d - 1) // 2, f) - Poly.one(field)
            g = poly_gcd(s, f)
        if 0 < g.degree() < f.degree():
            return sorted(
                _equal_degree_split(g, d, rng)
                + _equal_degree_split(f.exact_div(g), d, rng),
                key=Poly.lex_key,
            )


class FactorizationA:
    """unit times a sorted list of (monic irreducible, multiplicity)."""

    __slots__ = ("field", "unit", "factors")

    def __init__(self, field, unit, factors: list[tuple[Poly, int]]):
        self.field = field
        self.unit = unit
        self.factors = factors

    def value(self) -> Poly:
        out = Poly.one(self.field)
        for g, m in self.factors:
            out = out * powint(g, m)
        return out.scale(self.unit)


def factorize(f: Poly) -> FactorizationA:
    """Complete factorization into monic irreducibles, deterministic order."""
    if f.is_zero():
        raise ZeroInputError("factorization of zero")
    unit = f.lead()
    rng = _poly_seed_rng(f)
    factors: list[tuple[Poly, int]] = []
    for g, mult in squarefree_decomposition(f):
        # distinct-degree split of the squarefree g
        q = f.field.order
        x = Poly.x(f.field)
        h = x
        k = 0
        rem = g
        while rem.degree() > 0:
            k += 1
            if 2 * k > rem.degree():
                factors.append((rem.monic(), mult))
                break
            h = powmod(h, q, rem)
            gd = poly_gcd(h - x, rem)
            if gd.degree() > 0:
                for irr in _equal_degree_split(gd.monic(), k, rng):
                    factors.append((irr, mult))
                rem = rem.exact_div(gd)
                h = h % rem
    merged: dict = {}
    order = []
    for g, m in factors:
        key = g.coeffs
        if key in merged:
            merged[key] = (g, merged[key][1] + m)
        else:
            merged[key] = (g, m)
            order.append(key)
    out = sorted(merged.values(), key=lambda t: t[0].lex_key())
    return FactorizationA(f.field, unit, out)


def roots_in_field(f: Poly) -> list:
    """All distinct roots of f in its own coefficient field, sorted."""
    if f.is_zero():
        raise ZeroInputError("roots of zero")
    field = f.field
    q = field.order
    x = Poly.x(field)
    h = powmod(x, q, f) - x
    g = poly_gcd(h, f)
    roots = []
    if g.degree() >= 1:
        rng = _poly_seed_rng(f, salt=b"roots")
        for lin in _equal_degree_split(g.monic(), 1, rng):
            roots.append(-lin.coeffs[0])
    return sorted(roots, key=lambda r: r.int_code())


def mobius(m: Poly) -> int:
    """Mobius function on monic polynomials in A."""
    if m.is_zero():
        raise ZeroInputError("mobius of zero")
    if not m.is_monic():
        raise NotMonicError("mobius needs a monic polynomial")
    if m.degree() == 0:
        return 1
    fac = factorize(m)
    if any(mult > 1 for _, mult in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def enumerate_monic_irreducibles(field, deg: int) -> Iterator[Poly]:
    """Monic irreducibles of exact degree ``deg`` in lexicographic order."""
    if deg < 1:
        raise DrinfeldError("degree must be >= 1")
    order = field.order
    for code in range(order**deg):
        tail = []
        c = code
        for _ in range(deg):
            tail.append(field.dec_elem(c % order))
            c //= order
        f = Poly(field, tail + [field.one_elem()], normalize=False)
        if is_irreducible(f):
            yield f


def int_mobius(n: int) -> int:
    out = 1
    for ell in _int_prime_factors(n):
        if n % (ell * ell) == 0:
            return 0
        out = -out
    return out


def count_monic_irreducibles(q: int, d: int) -> int:
    """Necklace formula (1/d) sum_{e|d} mu(e) q^(d/e)."""
    total = sum(int_mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


def crt(residues: list[Poly], moduli: list[Poly]) -> Poly:
    """Canonical representative mod prod(moduli), pairwise coprime moduli."""
    if len(residues) != len(moduli) or not moduli:
        raise DrinfeldError("crt needs matching nonempty residue/modulus lists")
    field = moduli[0].field
    total = Poly.one(field)
    for m in moduli:
        total = total * m
    out = Poly.zero(field)
    for r, m in zip(residues, moduli):
        rest = total.exact_div(m)
        g, u, _ = poly_xgcd(rest, m)
        if g.degree() != 0:
            raise DrinfeldError("crt moduli are not pairwise coprime")
        out = out + rest * u * r
    return out % total
