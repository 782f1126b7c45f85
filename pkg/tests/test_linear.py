"""Free-module combinations with Laurent scalars: linearity contracts
and the bilinear extension of key-level products."""
from satake import LaurentPoly, LinComb


def C(n):
    return LaurentPoly.const(n)


def test_zero_scalars_dropped():
    x = LinComb((("a", C(1)), ("a", C(-1))))
    assert x.is_zero()
    assert x == LinComb.zero()


def test_add_identity():
    x = LinComb((("a", C(2)), ("b", LaurentPoly.q())))
    assert x + LinComb.zero() == x
    assert x - x == LinComb.zero()


def test_coefficient_and_support():
    x = LinComb((("a", C(2)), ("b", C(3))))
    assert x.coefficient("a") == C(2)
    assert x.coefficient("missing") == LaurentPoly.zero()
    assert x.support() == frozenset({"a", "b"})
    assert len(x) == 2


def test_scale_and_map_keys():
    x = LinComb((("a", C(2)),))
    assert x.scale(LaurentPoly.q()) == LinComb.unit("a", LaurentPoly.q(1, 2))
    assert x.map_keys(str.upper) == LinComb.unit("A", C(2))


def test_bilinear_unit_key():
    x = LinComb((("a", C(2)), ("b", C(5))))

    def key_mul(k1, k2):
        return LinComb.unit(k1)  # right factor acts as a unit

    assert x.bilinear(LinComb.unit("e"), key_mul) == x


def test_bilinear_structure_constants():
    x = LinComb.unit("k1", C(2))
    y = LinComb.unit("k2", C(3))

    def key_mul(k1, k2):
        assert (k1, k2) == ("k1", "k2")
        return LinComb.unit("k3")

    assert x.bilinear(y, key_mul) == LinComb.unit("k3", C(6))


def test_bilinear_distributes():
    x = LinComb((("a", C(1)), ("b", C(1))))

    def key_mul(k1, k2):
        return LinComb.unit(k1 + k2)

    prod = x.bilinear(x, key_mul)
    assert prod == LinComb((("aa", C(1)), ("ab", C(1)), ("ba", C(1)), ("bb", C(1))))


def test_map_terms():
    x = LinComb((("a", C(2)),))
    doubled = x.map_terms(lambda k, p: LinComb.unit(k, p.scale(2)))
    assert doubled == LinComb.unit("a", C(4))


def test_render():
    x = LinComb((("b", C(2)), ("a", LaurentPoly.one())))
    assert x.render() == "a + 2*b"
    assert LinComb.zero().render() == "0"
