"""Iwahori-Hecke algebra of the extended affine Weyl group, the spherical
Hecke algebra on the indicator basis c_mu, and the Satake transform onto
the quotient of the representation ring of the modified dual group.

Two independent multiplication paths for the spherical algebra are
provided; their exact agreement is the central self-check of the whole
package.
"""
from __future__ import annotations

from functools import lru_cache

from . import root_datum as rdm
from .k0 import ICClass, SatakeK0, satake_k0
from .lattices import Vec, zero_vec
from .laurent import LaurentPoly
from .linear import LinComb
from .rep_ring import G1RepClass, g1_class, g1_ring
from .root_datum import RootDatum
from .weyl import AffineWeylElement, affine_weyl_group


class HeckeError(RuntimeError):
    pass


class IwahoriHecke:
    """The Iwahori-Hecke algebra on the T_w basis, w in the extended
    affine Weyl group, with the standard quadratic relation at q."""

    def __init__(self, rd: RootDatum, length_bound: int = 64):
        self.rd = rd
        self.W = affine_weyl_group(rd)
        self.length_bound = length_bound

    def unit(self) -> LinComb:
        return LinComb.unit(self.W.identity)

    def basis(self, x: AffineWeylElement) -> LinComb:
        return LinComb.unit(x)

    def _mul_simple_right(self, a: LinComb, i: int) -> LinComb:
        """Right multiplication by T_s for the i-th affine simple
        reflection: T_w T_s = T_ws if the length goes up, else
        (q-1) T_w + q T_ws."""
        s = self.W.simple_refs[i]
        qm1 = LaurentPoly(((1, 1), (0, -1)))
        q = LaurentPoly.q()
        out = []
        for w, p in a.items():
            ws = self.W.mul(w, s)
            if self.W.im_length(ws) > self.W.im_length(w):
                out.append((ws, p))
            else:
                out.append((w, p * qm1))
                out.append((ws, p * q))
        return LinComb(out)

    def _mul_omega_right(self, a: LinComb, omega: AffineWeylElement) -> LinComb:
        return a.map_keys(lambda w: self.W.mul(w, omega))

    def mul(self, a: LinComb, b: LinComb) -> LinComb:
        """Product computed by right-multiplying along the reduced word of
        every key of b."""
        for x in list(a.keys()) + list(b.keys()):
            if self.W.im_length(x) > self.length_bound:
                raise HeckeError(f"key length exceeds bound {self.length_bound}")
        out = LinComb.zero()
        for x, p in b.items():
            word, omega = self.W.reduced_word(x)
            cur = a
            for i in word:
                cur = self._mul_simple_right(cur, i)
            cur = self._mul_omega_right(cur, omega)
            out = out + cur.scale(p)
        return out


class SphericalHecke:
    """The spherical Hecke algebra with basis c_mu, with both the
    Iwahori-path and the dual-side multiplication, plus the transform to
    the quotient of the representation ring of the modified dual group."""

    def __init__(self, rd: RootDatum, signed_trace: bool = False):
        self.rd = rd
        self.W = affine_weyl_group(rd)
        self.iwahori = IwahoriHecke(rd)
        self.k0 = SatakeK0(rd, signed_trace=signed_trace)
        self.g1 = g1_ring(rd)
        self.signed_trace = signed_trace
        self._c_mul_cache: dict[tuple[Vec, Vec], LinComb] = {}

    # -- generic helpers ----------------------------------------------

    def unit(self) -> LinComb:
        return LinComb.unit(zero_vec(self.rd.rank))

    def c(self, mu: Vec) -> LinComb:
        return LinComb.unit(rdm.assert_dominant(self.rd, mu))

    def poincare_polynomial(self) -> LaurentPoly:
        return LaurentPoly((w.length, 1) for w in self.W.W0.elements)

    def ic_function(self, mu: Vec, n: int = 0) -> LinComb:
        return self.k0.ic_function(mu, n)

    # -- path 1: through the Iwahori-Hecke algebra ---------------------

    def indicator_from_iwahori(self, mu: Vec) -> LinComb:
        """The bi-invariant double coset indicator as a sum of T_w over
        the spherical double coset of mu, all coefficients 1."""
        coset, _, _ = self.W.spherical_double_coset(mu)
        return LinComb((x, LaurentPoly.one()) for x in coset)

    def c_mul_iwahori(self, mu: Vec, lam: Vec) -> LinComb:
        """c_mu * c_lam through Iwahori multiplication of indicators and
        exact division by the Poincare polynomial of W_0.

        The result of the division must be constant on every spherical
        double coset (bi-invariance); any failure is fatal.
        """
        mu = rdm.assert_dominant(self.rd, mu)
        lam = rdm.assert_dominant(self.rd, lam)
        key = (mu, lam)
        cached = self._c_mul_cache.get(key)
        if cached is not None:
            return cached
        prod = self.iwahori.mul(self.indicator_from_iwahori(mu),
                                self.indicator_from_iwahori(lam))
        pw = self.poincare_polynomial()
        by_coset: dict[Vec, dict] = {}
        for x, p in prod.items():
            nu = self.W.dominant_representative(x.translation)
            by_coset.setdefault(nu, {})[x] = p
        out = []
        for nu, coeffs in sorted(by_coset.items()):
            coset, _, _ = self.W.spherical_double_coset(nu)
            if set(coeffs) != set(coset):
                raise HeckeError(f"product support does not fill the double coset of {nu}")
            values = set(coeffs.values())
            if len(values) != 1:
                raise HeckeError(f"product is not bi-invariant on the double coset of {nu}")
            p = next(iter(values)).divexact(pw)
            out.append((nu, p))
        result = LinComb(out)
        self._c_mul_cache[key] = result
        return result

    # -- path 2: through the dual side ---------------------------------

    def to_ic_basis(self, f: LinComb) -> LinComb:
        """Rewrite a c-basis function in the basis of untwisted
        intersection-motive trace functions, by back-substitution along
        the dominance order (the change of basis is unitriangular)."""
        remaining = f
        out = []
        guard = 0
        while not remaining.is_zero():
            guard += 1
            if guard > 10000:
                raise HeckeError("basis change did not terminate")
            mu = max(remaining.keys(), key=lambda v: (rdm.d_pairing(self.rd, v), v))
            lead = remaining.coefficient(mu)
            sigma = self.k0.sign(mu)
            a = lead if sigma == 1 else lead.scale(-1)
            out.append((mu, a))
            remaining = remaining - self.k0.ic_function(mu).scale(a)
            if mu in remaining.keys():
                raise HeckeError("basis change is not unitriangular")
        return LinComb(out)

    def from_ic_basis(self, g: LinComb) -> LinComb:
        out = LinComb.zero()
        for mu, a in g.items():
            out = out + self.k0.ic_function(mu).scale(a)
        return out

    def c_mul_satake(self, mu: Vec, lam: Vec) -> LinComb:
        """c_mu * c_lam through the dual side: change basis to the trace
        functions, multiply via K0 convolution, change back."""
        return self.convolve(self.c(mu), self.c(lam))

    def convolve(self, f: LinComb, g: LinComb) -> LinComb:
        fi = self.to_ic_basis(f)
        gi = self.to_ic_basis(g)

        def key_mul(mu: Vec, lam: Vec) -> LinComb:
            conv = self.k0.convolve_ic(ICClass(mu, 0), ICClass(lam, 0))
            # express the result back in untwisted trace functions:
            # a twist n on IC_nu contributes a factor q^-n
            return LinComb((cls.mu, p.shift(-cls.n)) for cls, p in conv.items())

        prod_ic = fi.bilinear(gi, key_mul)
        return self.from_ic_basis(prod_ic)

    # -- the transform -------------------------------------------------

    def satake_transform(self, f: LinComb) -> LinComb:
        """Send a spherical function to the quotient normal form of its
        class in the representation ring of the modified dual group."""
        fi = self.to_ic_basis(f)
        out = LinComb.zero()
        for mu, a in fi.items():
            cls = g1_class(self.rd, mu, n=0)
            out = out + self.g1.quotient_normal_form(LinComb.unit(cls, a))
        return out

    def satake_inverse(self, x: LinComb) -> LinComb:
        """Inverse of satake_transform on quotient-normal-form input."""
        nf = self.g1.quotient_normal_form(x)
        out = LinComb.zero()
        for cls, p in nf.items():
            d = rdm.d_pairing(self.rd, cls.mu)
            n = (cls.k + d) // 2
            out = out + self.k0.ic_function(cls.mu, n).scale(p)
        return out


@lru_cache(maxsize=None)
def iwahori_hecke(rd: RootDatum) -> IwahoriHecke:
    return IwahoriHecke(rd)


@lru_cache(maxsize=None)
def spherical_hecke(rd: RootDatum, signed_trace: bool = False) -> SphericalHecke:
    return SphericalHecke(rd, signed_trace=signed_trace)
