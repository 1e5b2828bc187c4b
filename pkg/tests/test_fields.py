import pytest

from drinfeld.errors import ResourceLimitError, ZeroInputError
from drinfeld.fields import FFElem, FieldTower, lex_irreducible


def test_make_extension_identity(tower3):
    F3 = tower3.base_field
    assert tower3.make_extension(F3, 1) is F3


def test_make_extension_deterministic_modulus(tower3):
    F9 = tower3.make_extension(tower3.base_field, 2)
    assert F9.fid.modulus == (1, 0, 1)  # x^2 + 1 is the lex-first irreducible
    again = tower3.make_extension(tower3.base_field, 2)
    assert again.fid == F9.fid


def test_extension_of_extension_embedding_is_hom(tower3):
    F9 = tower3.make_extension(tower3.base_field, 2)
    F36 = tower3.make_extension(F9, 3)
    assert F36.degree == 6
    # ring-homomorphism check on all of F_9 (exhaustive multiplication table)
    els = list(F9.elements())
    for a in els:
        for b in els:
            ea, eb = tower3.embed(a, F36), tower3.embed(b, F36)
            assert tower3.embed(a * b, F36) == ea * eb
            assert tower3.embed(a + b, F36) == ea + eb


def test_degree_cap():
    small = FieldTower(3, max_degree=4)
    with pytest.raises(ResourceLimitError):
        small.field(5)


def test_frobenius_fixes_base(tower3):
    F9 = tower3.make_extension(tower3.base_field, 2)
    for c in tower3.base_field.elements():
        emb = tower3.embed(c, F9)
        assert tower3.frobenius_power(emb, 1) == emb
        assert tower3.frobenius_power(c, 5) == c


def test_frobenius_identity_power(tower3):
    F9 = tower3.make_extension(tower3.base_field, 2)
    z = tower3.gen(F9)
    assert tower3.frobenius_power(z, 0) == z
    assert tower3.frobenius_power(z, 1) == z**3
    assert tower3.frobenius_power(tower3.frobenius_power(z, 1), 1) == z


def test_frobenius_fixed_set_is_base_field(tower3):
    """Exhaustive over F_{3^6}: fixed points of x -> x^q are the embedded F_3."""
    F36 = tower3.field(6)
    fixed = [x for x in F36.elements() if tower3.frobenius_power(x, 1) == x]
    assert len(fixed) == 3
    embedded = {tower3.embed(c, F36) for c in tower3.base_field.elements()}
    assert set(fixed) == embedded


def test_norm_examples(tower3):
    F9 = tower3.make_extension(tower3.base_field, 2)
    one9 = tower3.one(F9)
    assert tower3.norm_to_base(one9) == tower3.one()
    assert tower3.norm_to_base(tower3.zero(F9)) == tower3.zero()
    z = tower3.gen(F9)
    n = tower3.norm_to_base(z)
    # z * z^3 = z^4, and the result is Frobenius-fixed
    assert tower3.embed(n, F9) == z * z**3


def test_norm_multiplicative_and_surjective(tower3):
    F9 = tower3.make_extension(tower3.base_field, 2)
    els = [x for x in F9.elements()]
    for a in els[:20]:
        for b in els[:20]:
            assert tower3.norm_to_base(a * b) == tower3.norm_to_base(a) * tower3.norm_to_base(b)
    norms = {tower3.norm_to_base(x).coords for x in els if not x.is_zero()}
    assert norms == {c.coords for c in tower3.base_field.elements() if not c.is_zero()}


def test_trace_additive(tower3):
    F9 = tower3.make_extension(tower3.base_field, 2)
    els = list(F9.elements())
    for a in els[:15]:
        for b in els[:15]:
            assert tower3.trace_to_base(a + b) == tower3.trace_to_base(a) + tower3.trace_to_base(b)


def test_embedding_coherence_chain(tower3):
    """F_3 in F_9 in F_81: composed embeddings equal the direct one."""
    import random

    F3 = tower3.base_field
    F9 = tower3.make_extension(F3, 2)
    F81 = tower3.make_extension(F9, 2)
    rng = random.Random(7)
    for _ in range(100):
        x = FFElem(F3, (rng.randrange(3),))
        via = tower3.embed(tower3.embed(x, F9), F81)
        assert via == tower3.embed(x, F81)
    # and on all of F_9
    for x in F9.elements():
        assert tower3.embed(x, F81) == tower3.embed(x, F81)


def test_nonprime_base_tower(tower9):
    assert tower9.char == 3 and tower9.base_degree == 2
    F81 = tower9.make_extension(tower9.base_field, 2)
    z = tower9.gen(F81)
    # q-Frobenius has order 2 on a quadratic extension of F_9
    assert tower9.frobenius_power(z, 2) == z
    assert tower9.frobenius_power(z, 1) == z**9
    n = tower9.norm_to_base(z)
    assert n.ctx is tower9.base_field


def test_lex_irreducible_values():
    assert lex_irreducible(3, 1) == (0, 1)
    assert lex_irreducible(3, 2) == (1, 0, 1)
    assert lex_irreducible(2, 3) == (1, 1, 0, 1)  # T^3+T+1 precedes T^3+T^2+1


def test_inverse_of_zero_raises(tower3):
    with pytest.raises(ZeroInputError):
        tower3.zero().inv()


def test_big_field_arithmetic_consistency(tower3):
    """Vector-regime field (3^10) agrees with its own axioms."""
    K = tower3.field(10)
    x = tower3.gen(K)
    y = x**7 + tower3.one(K)
    assert (x * y) * y == x * (y * y)
    assert x * x.inv() == tower3.one(K)
    assert tower3.frobenius_power(x, 10) == x
