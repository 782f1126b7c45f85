"""Self-verification suites, runnable from the CLI and reused by the
test suite.  Every suite returns (name, passed, detail) triples; all
comparisons are exact.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import root_datum as rdm
from .hecke import SphericalHecke
from .k0 import ICClass, purity_weight
from .lattices import vadd, zero_vec
from .laurent import LaurentPoly
from .linear import LinComb
from .root_datum import RootDatum, catalog


@dataclass
class RunConfig:
    group: str = "PGL(2)"
    bound: int = 6
    signed_trace: bool = False
    json_output: bool = False
    seed: int = 0

    def root_datum(self) -> RootDatum:
        return catalog(self.group)


Result = tuple[str, bool, str]


def _random_element(W, rng: random.Random, max_length: int):
    n = len(W.simple_refs)
    if n == 0:
        # torus: only length-zero translations exist
        return W.translation(tuple(rng.randrange(-2, 3) for _ in range(W.rd.rank)))
    while True:
        word = [rng.randrange(n) for _ in range(rng.randrange(max_length + 1))]
        x = W.word_to_element(word)
        if W.im_length(x) <= max_length:
            return x


def suite_quadratic(sph: SphericalHecke) -> Result:
    iw = sph.iwahori
    qm1 = LaurentPoly(((1, 1), (0, -1)))
    q = LaurentPoly.q()
    for s in sph.W.simple_refs:
        lhs = iw.mul(iw.basis(s), iw.basis(s))
        rhs = LinComb(((s, qm1), (sph.W.identity, q)))
        if lhs != rhs:
            return ("iwahori quadratic relation", False, f"fails at {s!r}")
    return ("iwahori quadratic relation", True, f"{len(sph.W.simple_refs)} simple reflections")


def suite_associativity(sph: SphericalHecke, seed: int, triples: int = 200, max_length: int = 6) -> Result:
    iw = sph.iwahori
    rng = random.Random(seed)
    for t in range(triples):
        x, y, z = (iw.basis(_random_element(sph.W, rng, max_length)) for _ in range(3))
        if iw.mul(iw.mul(x, y), z) != iw.mul(x, iw.mul(y, z)):
            return ("iwahori associativity", False, f"failure at triple {t}")
    return ("iwahori associativity", True, f"{triples} random triples, lengths <= {max_length}")


def dominant_pairs(rd: RootDatum, dmax: int):
    reps = rdm.dominant_reps(rd, dmax)
    for mu in reps:
        for lam in reps:
            if rdm.d_pairing(rd, vadd(mu, lam)) <= dmax:
                yield mu, lam


def suite_cross_path(sph: SphericalHecke, dmax: int) -> tuple[Result, Result]:
    """Path equality and, on the same sweep, purity-weight additivity."""
    rd = sph.rd
    checked = 0
    weight_ok = True
    weight_detail = ""
    for mu, lam in dominant_pairs(rd, dmax):
        p1 = sph.c_mul_iwahori(mu, lam)
        p2 = sph.c_mul_satake(mu, lam)
        if p1 != p2:
            return (("cross-path oracle equality", False, f"mismatch at {mu} * {lam}"),
                    ("purity weight additivity", False, "not reached"))
        a, b = ICClass(mu, 0), ICClass(lam, 0)
        wsum = purity_weight(rd, a) + purity_weight(rd, b)
        for cls, _ in sph.k0.convolve_ic(a, b).items():
            if purity_weight(rd, cls) != wsum:
                weight_ok = False
                weight_detail = f"violation at {mu} * {lam} -> {cls!r}"
        checked += 1
    return (("cross-path oracle equality", True, f"{checked} dominant pairs, d <= {dmax}"),
            ("purity weight additivity", weight_ok, weight_detail or f"{checked} convolutions"))


def suite_kernel(sph: SphericalHecke) -> Result:
    rd = sph.rd
    zero = zero_vec(rd.rank)
    lhs = sph.k0.trace_to_hecke(
        LinComb.unit(ICClass(zero, -1)) - LinComb.unit(ICClass(zero, 0), LaurentPoly.q()))
    ok = lhs.is_zero()
    return ("trace kernel relation", ok, "trace(IC_0(-1) - q*IC_0) = 0" if ok else f"got {lhs!r}")


def suite_parity(sph: SphericalHecke, dmax: int) -> Result:
    rd = sph.rd
    bad = []
    rows = 0
    for mu in rdm.dominant_reps(rd, dmax):
        for row in sph.k0.parity_report(mu):
            rows += 1
            if not row["ok"]:
                bad.append((mu, row["lam"]))
    if bad:
        return ("stalk parity/positivity", False, f"violations at {bad[:3]}")
    return ("stalk parity/positivity", True, f"{rows} stalk rows, d <= {dmax}")


def suite_length_law(sph: SphericalHecke, dmax: int) -> Result:
    rd = sph.rd
    for mu in rdm.dominant_reps(rd, dmax):
        if sph.W.im_length(sph.W.translation(mu)) != rdm.d_pairing(rd, mu):
            return ("translation length law", False, f"fails at {mu}")
    return ("translation length law", True, f"all dominant representatives, d <= {dmax}")


def suite_specialization(sph: SphericalHecke, dmax: int) -> Result:
    """q -> 1 of the graded q-analog against the ungraded Kostant count."""
    R = sph.k0.R
    rd = sph.rd
    for mu in rdm.dominant_reps(rd, dmax):
        for lam in rdm.dominant_below(rd, mu):
            if R.lusztig_q_analog(mu, lam).eval_at_one() != R.weight_multiplicity(mu, lam):
                return ("q=1 specialization", False, f"fails at {mu}, {lam}")
    return ("q=1 specialization", True, f"all dominant pairs, d <= {dmax}")


def suite_dual_group(sph: SphericalHecke) -> Result:
    rd = sph.rd
    dd = rdm.dual(rdm.dual(rd))
    if dd.cartan_matrix() != rd.cartan_matrix():
        return ("dual group data", False, "double dual changed the Cartan matrix")
    e = [tuple(1 if i == j else 0 for j in range(rd.rank)) for i in range(rd.rank)]
    for v in e:
        if rdm.epsilon_value(rd, v) not in (1, -1):
            return ("dual group data", False, "epsilon out of range")
    data = rdm.g1_data(rd)
    if data.epsilon_trivial != data.direct_product:
        return ("dual group data", False, "epsilon/direct-product mismatch")
    return ("dual group data", True,
            f"dual = {rdm.dual(rd).name}, modified dual group = {rdm.g1_description(rd)}")


def suite_transform(sph: SphericalHecke, dmax: int, seed: int) -> Result:
    rd = sph.rd
    rng = random.Random(seed + 1)
    reps = rdm.dominant_reps(rd, dmax)
    # round trips on random elements
    for _ in range(10):
        f = LinComb((rng.choice(reps), LaurentPoly.q(rng.randrange(-2, 3), rng.randrange(-3, 4)))
                    for _ in range(3))
        if sph.satake_inverse(sph.satake_transform(f)) != f:
            return ("satake transform bijection", False, "round trip failed")
    # multiplicativity on small pairs
    for mu, lam in list(dominant_pairs(rd, min(dmax, 4))):
        lhs = sph.satake_transform(sph.c_mul_iwahori(mu, lam))
        rhs = sph.g1.quotient_normal_form(
            sph.g1.mul(sph.satake_transform(sph.c(mu)), sph.satake_transform(sph.c(lam))))
        if lhs != rhs:
            return ("satake transform bijection", False, f"not multiplicative at {mu}, {lam}")
    return ("satake transform bijection", True, "round trips and multiplicativity")


def run_all(config: RunConfig, inject_fault: bool = False) -> list[Result]:
    rd = config.root_datum()
    sph = SphericalHecke(rd, signed_trace=config.signed_trace)
    if inject_fault:
        # negative control: corrupt one stalk polynomial and expect the
        # cross-path oracle to notice
        for mu in rdm.dominant_reps(rd, config.bound):
            below = rdm.dominant_below(rd, mu)
            lams = [l for l in below if l != mu]
            if lams:
                sph.k0._stalk_perturbation = {(mu, lams[0]): LaurentPoly.q()}
                break
        else:
            return [("fault injection", False, "no nontrivial stalk available to corrupt")]

    results = [
        suite_quadratic(sph),
        suite_associativity(sph, config.seed, triples=50),
        *suite_cross_path(sph, config.bound),
        suite_kernel(sph),
        suite_parity(sph, config.bound),
        suite_length_law(sph, config.bound),
        suite_specialization(sph, config.bound),
        suite_dual_group(sph),
        suite_transform(sph, config.bound, config.seed),
    ]
    if inject_fault:
        cross = next(r for r in results if r[0] == "cross-path oracle equality")
        detected = not cross[1]
        results.append(("fault injection negative control", detected,
                        "oracle mismatch detected" if detected else "corruption went unnoticed"))
    return results
