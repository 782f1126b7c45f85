"""Characters and weight multiplicities for the dual group, graded
q-analogs of weight multiplicity, and the representation ring of the
modified dual group with its quotient by the twist relation.

All computations happen on the cocharacter lattice of G, which is the
weight lattice of the dual group; the positive roots of the dual group
are the positive coroots of G.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import lattices, root_datum as rdm
from .lattices import Vec, vadd, vsub, zero_vec
from .laurent import LaurentPoly
from .linear import LinComb
from .root_datum import RootDatum
from .weyl import finite_weyl_group


class RepRingError(RuntimeError):
    pass


class RepRing:
    """Character combinatorics of the dual group attached to a root datum."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.W0 = finite_weyl_group(rd)
        cols = rd.simple_coroots
        self._coroot_cols = cols
        # positive coroots expressed in simple-coroot coordinates
        self._pos_coords = []
        for gamma in rd.positive_coroots:
            c = lattices.solve_integer_combination(cols, gamma)
            assert c is not None
            self._pos_coords.append(c)
        self._kostant_cache: dict[tuple, LaurentPoly] = {}
        self._char_cache: dict[Vec, dict[Vec, int]] = {}
        self._tensor_cache: dict[tuple[Vec, Vec], dict[Vec, int]] = {}

    # -- q-Kostant partition function ---------------------------------

    def _to_coroot_coords(self, v: Vec):
        if not self._coroot_cols:
            return None if any(v) else ()
        return lattices.solve_integer_combination(self._coroot_cols, v)

    def kostant_partition(self, v: Vec, q_graded: bool = True) -> LaurentPoly:
        """Sum over multisets of positive coroots with sum v of
        q^(multiset size); zero if v is not a nonnegative combination."""
        coords = self._to_coroot_coords(tuple(v))
        if coords is None or any(c < 0 for c in coords):
            return LaurentPoly.zero()
        p = self._kostant_graded(coords, 0)
        if not q_graded:
            return LaurentPoly.const(p.eval_at_one())
        return p

    def _kostant_graded(self, coords: tuple[int, ...], i: int) -> LaurentPoly:
        if not any(coords):
            return LaurentPoly.one()
        if i == len(self._pos_coords):
            return LaurentPoly.zero()
        key = (coords, i)
        cached = self._kostant_cache.get(key)
        if cached is not None:
            return cached
        gamma = self._pos_coords[i]
        out = LaurentPoly.zero()
        k = 0
        cur = coords
        while all(c >= 0 for c in cur):
            out = out + self._kostant_graded(cur, i + 1).shift(k)
            k += 1
            cur = tuple(c - g for c, g in zip(cur, gamma))
        self._kostant_cache[key] = out
        return out

    # -- weight multiplicities ----------------------------------------

    def _alternating_sum(self, mu: Vec, lam: Vec, graded: bool) -> LaurentPoly:
        """sum_w (-1)^l(w) P(w(mu + rho_hat) - (lam + rho_hat)).

        rho_hat (half-sum of positive coroots) may be half-integral, so
        everything is computed in doubled coordinates.
        """
        rd = self.rd
        two_rho_hat = rd.two_rho_hat()
        dbl_mu = vadd(lattices.vscale(2, tuple(mu)), two_rho_hat)
        dbl_lam = vadd(lattices.vscale(2, tuple(lam)), two_rho_hat)
        total = LaurentPoly.zero()
        for w in self.W0.elements:
            u = vsub(w.apply_cochar(dbl_mu), dbl_lam)
            if any(c % 2 for c in u):
                raise RepRingError("odd doubled coordinate in Kostant sum")
            v = tuple(c // 2 for c in u)
            term = self.kostant_partition(v, q_graded=graded)
            if term.is_zero():
                continue
            total = total + (term if w.length % 2 == 0 else -term)
        return total

    def weight_multiplicity(self, mu: Vec, lam: Vec) -> int:
        """Dimension of the lam weight space of the irreducible dual-group
        representation of highest weight mu (Kostant's formula)."""
        mu = rdm.assert_dominant(self.rd, mu)
        m = self._alternating_sum(mu, tuple(lam), graded=False).eval_at_one()
        if m < 0:
            raise RepRingError(f"negative weight multiplicity for {mu}, {lam}")
        return m

    def lusztig_q_analog(self, mu: Vec, lam: Vec) -> LaurentPoly:
        """The q-graded analog of weight multiplicity; evaluates at q=1 to
        weight_multiplicity(mu, lam), and equals 1 when lam = mu."""
        mu = rdm.assert_dominant(self.rd, mu)
        return self._alternating_sum(mu, tuple(lam), graded=True)

    # -- characters, dimensions, tensor products -----------------------

    def character(self, mu: Vec) -> dict[Vec, int]:
        """All weights of the irreducible with highest weight mu, with
        multiplicities; W_0-invariant by construction."""
        mu = rdm.assert_dominant(self.rd, mu)
        cached = self._char_cache.get(mu)
        if cached is not None:
            return cached
        char: dict[Vec, int] = {}
        aw = self._affine()
        for lam in rdm.dominant_below(self.rd, mu):
            m = self.weight_multiplicity(mu, lam)
            if m == 0:
                continue
            for nu in aw.orbit(lam):
                char[nu] = m
        self._char_cache[mu] = char
        return char

    def _affine(self):
        from .weyl import affine_weyl_group
        return affine_weyl_group(self.rd)

    def weyl_dim(self, mu: Vec) -> int:
        return sum(self.character(mu).values())

    def tensor_decompose(self, mu: Vec, lam: Vec) -> dict[Vec, int]:
        """Decomposition multiplicities of the tensor product of the two
        irreducibles, by character product and greedy highest-weight
        extraction."""
        mu = rdm.assert_dominant(self.rd, mu)
        lam = rdm.assert_dominant(self.rd, lam)
        key = (mu, lam)
        cached = self._tensor_cache.get(key)
        if cached is not None:
            return cached
        prod: dict[Vec, int] = {}
        for v1, m1 in self.character(mu).items():
            for v2, m2 in self.character(lam).items():
                v = vadd(v1, v2)
                prod[v] = prod.get(v, 0) + m1 * m2
        result: dict[Vec, int] = {}
        while prod:
            # a weight of maximal <2rho, -> value is dominance-maximal,
            # hence a highest weight of some constituent
            nu = max(prod, key=lambda v: (rdm.d_pairing(self.rd, v), v))
            n = prod[nu]
            if n <= 0 or not rdm.is_dominant(self.rd, nu):
                raise RepRingError(f"greedy extraction failed at {nu} (mult {n})")
            for v, m in self.character(nu).items():
                rem = prod.get(v, 0) - n * m
                if rem < 0:
                    raise RepRingError(f"negative remainder at {v} in tensor product")
                if rem == 0:
                    prod.pop(v, None)
                else:
                    prod[v] = rem
            result[nu] = n
        self._tensor_cache[key] = result
        return result


@lru_cache(maxsize=None)
def rep_ring(rd: RootDatum) -> RepRing:
    return RepRing(rd)


# ---------------------------------------------------------------------------
# the representation ring of the modified dual group


@dataclass(frozen=True)
class G1RepClass:
    """Basis element of the representation ring of the modified dual
    group: a dominant highest weight together with the central-torus
    weight k, constrained to k = <2rho, mu> mod 2."""

    mu: Vec
    k: int

    def __repr__(self) -> str:
        return f"V[{','.join(map(str, self.mu))};{self.k}]"


def g1_class(rd: RootDatum, mu: Vec, *, n: int | None = None, k: int | None = None) -> G1RepClass:
    """Construct a class either from the twist index n (so that
    k = 2n - <2rho, mu>) or from the central weight k directly."""
    mu = rdm.assert_dominant(rd, mu)
    d = rdm.d_pairing(rd, mu)
    if (n is None) == (k is None):
        raise ValueError("give exactly one of n and k")
    if k is None:
        k = 2 * n - d
    if (k - d) % 2 != 0:
        raise RepRingError(f"central weight {k} violates parity of {mu}")
    return G1RepClass(mu, k)


class G1Ring:
    """The representation ring of the modified dual group, with basis
    G1RepClass, and its quotient by the relation identifying the inverse
    square character with q."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.R = rep_ring(rd)

    def unit(self) -> LinComb:
        return LinComb.unit(G1RepClass(zero_vec(self.rd.rank), 0))

    def class_element(self, mu: Vec, n: int = 0) -> LinComb:
        return LinComb.unit(g1_class(self.rd, mu, n=n))

    def mul(self, a: LinComb, b: LinComb) -> LinComb:
        def key_mul(x: G1RepClass, y: G1RepClass) -> LinComb:
            out = []
            for nu, n in self.R.tensor_decompose(x.mu, y.mu).items():
                cls = g1_class(self.rd, nu, k=x.k + y.k)
                out.append((cls, LaurentPoly.const(n)))
            return LinComb(out)
        return a.bilinear(b, key_mul)

    def quotient_normal_form(self, x: LinComb) -> LinComb:
        """Rewrite every key to central weight in {0, 1}, trading central
        weight -2 for a factor of q; idempotent."""
        out = LinComb.zero()
        for cls, p in x.items():
            kbar = cls.k % 2
            shift = -(cls.k - kbar) // 2
            out = out + LinComb.unit(G1RepClass(cls.mu, kbar), p.shift(shift))
        return out


@lru_cache(maxsize=None)
def g1_ring(rd: RootDatum) -> G1Ring:
    return G1Ring(rd)
