import random

import pytest

from drinfeld.amatrix import (
    discriminant,
    rational_canonical_form,
    smith_normal_form,
)
from drinfeld.errors import (
    NotIrreducibleError,
    NotMonicError,
    SingularMatrixError,
    ZeroInputError,
)
from drinfeld.polys import (
    NEG_INF,
    Poly,
    count_monic_irreducibles,
    crt,
    enumerate_monic_irreducibles,
    factorize,
    is_irreducible,
    mobius,
    poly_gcd,
    squarefree_split,
)
from drinfeld.textio import poly_to_text, poly_from_text


def T_one(tower):
    F = tower.base_field
    return Poly.x(F), Poly.one(F)


def test_degree_of_zero_is_marker(tower3):
    assert Poly.zero(tower3.base_field).degree() == NEG_INF
    assert NEG_INF < 0


def test_is_irreducible_examples(tower3):
    T, one = T_one(tower3)
    assert is_irreducible(T)
    assert not is_irreducible(T * T)
    assert is_irreducible(T * T + one)
    with pytest.raises(ZeroInputError):
        is_irreducible(Poly.zero(tower3.base_field))


def test_factorize_examples(tower3):
    T, one = T_one(tower3)
    fac = factorize(T * (T + one))
    assert fac.unit.is_one()
    assert [(poly_to_text(g), m) for g, m in fac.factors] == [("T", 1), ("T+1", 1)]
    fac2 = factorize(T.scale(tower3.from_int(2)))
    assert fac2.unit == tower3.from_int(2)
    assert [(poly_to_text(g), m) for g, m in fac2.factors] == [("T", 1)]
    fac3 = factorize(T**4 + T)
    assert [(poly_to_text(g), m) for g, m in fac3.factors] == [("T", 1), ("T+1", 3)]


def test_factorize_roundtrip_random(tower3):
    F = tower3.base_field
    rng = random.Random(11)
    for _ in range(60):
        coeffs = [F.dec_elem(rng.randrange(3)) for _ in range(rng.randrange(1, 9))]
        f = Poly(F, coeffs)
        if f.is_zero():
            continue
        fac = factorize(f)
        assert fac.value() == f
        for g, _ in fac.factors:
            assert is_irreducible(g) and g.is_monic()


def test_squarefree_split_examples(tower3):
    T, one = T_one(tower3)
    s = squarefree_split(T * T * (T + one))
    assert (poly_to_text(s.conductor_part), poly_to_text(s.squarefree_part)) == ("T", "T+1")
    s2 = squarefree_split(T + one)
    assert s2.conductor_part.is_one() and poly_to_text(s2.squarefree_part) == "T+1"
    s3 = squarefree_split(T**6)
    assert (poly_to_text(s3.conductor_part), poly_to_text(s3.squarefree_part)) == ("T^3", "1")


def test_squarefree_split_reconstructs(tower3):
    F = tower3.base_field
    rng = random.Random(5)
    for _ in range(60):
        coeffs = [F.dec_elem(rng.randrange(3)) for _ in range(rng.randrange(1, 10))]
        f = Poly(F, coeffs)
        if f.is_zero():
            continue
        s = squarefree_split(f)
        assert s.conductor_part.is_monic() and s.squarefree_part.is_monic()
        assert f == (s.conductor_part * s.conductor_part * s.squarefree_part).scale(s.unit)
        assert poly_gcd(s.squarefree_part, s.squarefree_part.derivative()).degree() <= 0


def test_mobius(tower3):
    T, one = T_one(tower3)
    assert mobius(one) == 1
    assert mobius(T) == -1
    assert mobius(T * T) == 0
    assert mobius(T * (T + one)) == 1
    with pytest.raises(NotMonicError):
        mobius(T.scale(tower3.from_int(2)))


def test_enumerate_monic_irreducibles(tower3, tower2):
    F3 = tower3.base_field
    deg1 = [poly_to_text(f) for f in enumerate_monic_irreducibles(F3, 1)]
    assert deg1 == ["T", "T+1", "T+2"]
    deg2 = list(enumerate_monic_irreducibles(F3, 2))
    assert len(deg2) == 3 == count_monic_irreducibles(3, 2)
    F2 = tower2.base_field
    deg3 = [poly_to_text(f) for f in enumerate_monic_irreducibles(F2, 3)]
    assert deg3 == ["T^3+T+1", "T^3+T^2+1"]


@pytest.mark.parametrize("q", [2, 3, 5])
def test_necklace_counts(q, tower2, tower3, tower5):
    tower = {2: tower2, 3: tower3, 5: tower5}[q]
    for d in range(1, 7):
        got = sum(1 for _ in enumerate_monic_irreducibles(tower.base_field, d))
        assert got == count_monic_irreducibles(q, d)


def test_divmod_random(tower3):
    F = tower3.base_field
    rng = random.Random(3)
    for _ in range(1000):
        a = Poly(F, [F.dec_elem(rng.randrange(3)) for _ in range(rng.randrange(0, 9))])
        b = Poly(F, [F.dec_elem(rng.randrange(3)) for _ in range(rng.randrange(1, 6))])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert a == q * b + r
        assert r.degree() < b.degree()


def test_crt_random(tower3):
    F = tower3.base_field
    T, one = Poly.x(F), Poly.one(F)
    moduli = [T, T + one, T * T + one]
    rng = random.Random(17)
    for _ in range(50):
        f = Poly(F, [F.dec_elem(rng.randrange(3)) for _ in range(6)])
        rec = crt([f % m for m in moduli], moduli)
        for m in moduli:
            assert (rec - f) % m == Poly.zero(F)
        total = T * (T + one) * (T * T + one)
        assert rec.degree() < total.degree()


def test_poly_text_roundtrip(tower3):
    F = tower3.base_field
    rng = random.Random(23)
    for _ in range(40):
        f = Poly(F, [F.dec_elem(rng.randrange(3)) for _ in range(rng.randrange(1, 7))])
        if f.is_zero():
            continue
        assert poly_from_text(poly_to_text(f), tower3) == f


def test_smith_normal_form_examples(tower3):
    F = tower3.base_field
    T, one, zero = Poly.x(F), Poly.one(F), Poly.zero(F)
    assert [poly_to_text(f) for f in smith_normal_form([[one, zero], [zero, one]])] == ["1", "1"]
    assert [poly_to_text(f) for f in smith_normal_form([[T, zero], [zero, T * T]])] == ["T", "T^2"]
    assert [poly_to_text(f) for f in smith_normal_form([[T, one], [zero, T]])] == ["1", "T^2"]
    with pytest.raises(SingularMatrixError):
        smith_normal_form([[T, T], [T, T]])


def test_smith_normal_form_properties(tower3):
    from drinfeld.amatrix import ring_det

    F = tower3.base_field
    rng = random.Random(31)
    for _ in range(25):
        m = [
            [Poly(F, [F.dec_elem(rng.randrange(3)) for _ in range(3)]) for _ in range(3)]
            for _ in range(3)
        ]
        det = ring_det([row[:] for row in m])
        if det.is_zero():
            continue
        factors = smith_normal_form(m)
        prod = Poly.one(F)
        for i, f in enumerate(factors):
            prod = prod * f
            if i:
                assert (f % factors[i - 1]).is_zero()
        assert prod == det.monic()


def test_rcf_examples(tower3):
    F = tower3.base_field
    T, one, zero = Poly.x(F), Poly.one(F), Poly.zero(F)
    two = Poly.from_ints(F, [2])
    ell = T + one
    # scalar matrix is its own canonical form
    canon, factors = rational_canonical_form([[two, zero], [zero, two]], ell)
    assert len(factors) == 2
    assert canon[0][0].rep == two % ell and canon[1][1].rep == two % ell
    assert canon[0][1].is_zero() and canon[1][0].is_zero()
    # non-semisimple unipotent class: single factor (x-1)^2
    canon2, factors2 = rational_canonical_form([[one, zero], [two, one]], ell)
    assert len(factors2) == 1
    f = factors2[0]
    assert f.degree() == 2
    # (x-1)^2 = x^2 + x + 1 mod 3
    assert [c.rep.coeffs for c in f.coeffs] == [
        (F.one_elem(),),
        (F.one_elem(),),
        (F.one_elem(),),
    ]
    with pytest.raises(NotIrreducibleError):
        rational_canonical_form([[one, zero], [zero, one]], T * T)


def test_rcf_detects_conjugacy(tower3):
    """Brute-force oracle: all GL_2(F_3)-conjugates of a matrix share one form."""
    from drinfeld.quotients import QuotRing, mat_mul

    F = tower3.base_field
    T, one, zero = Poly.x(F), Poly.one(F), Poly.zero(F)
    ell = T + one
    ring = QuotRing(ell)
    els = list(ring.elements())
    mats = [
        [[a, b], [c, d]]
        for a in els
        for b in els
        for c in els
        for d in els
        if (a * d - b * c).is_unit()
    ]
    assert len(mats) == 48  # |GL_2(F_3)|
    uq = [[ring.reduce(one), ring.reduce(zero)], [ring.reduce(Poly.from_ints(F, [2])), ring.reduce(one)]]
    canon0, _ = rational_canonical_form([[e.rep for e in row] for row in uq], ell)
    rng = random.Random(2)
    for g in rng.sample(mats, 40):
        gi = _inv2(g)
        conj = mat_mul(mat_mul(g, uq, ring), gi, ring)
        canon, _ = rational_canonical_form([[e.rep for e in row] for row in conj], ell)
        assert _mat_eq(canon, canon0)


def _inv2(m):
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    di = det.inv()
    return [[m[1][1] * di, (-m[0][1]) * di], [(-m[1][0]) * di, m[0][0] * di]]


def _mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def test_discriminant_rank3_anchor(tower2):
    F = tower2.base_field
    T, one, zero = Poly.x(F), Poly.one(F), Poly.zero(F)
    d = discriminant([T, one, zero, one], F)  # x^3 + x + T over F_2
    assert poly_to_text(d) == "T^2"
