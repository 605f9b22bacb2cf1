"""Weighted partition sums, lattice sums, and the verification registry.

Every registry entry pairs a combinatorial sum side with an independently
built eta-quotient (or closed-form) side and compares truncations
coefficient by coefficient.  All comparisons are exact: a report either
passes at its order or carries the first mismatching coefficient.

Identity inventory (registry order):

=========== =================================================================
NO          Euler product to the power z-1 as a hook sum over all partitions
THM1        power 2t^2+t as a signed hook sum over doubled-distinct partitions
THM2        two-parameter refinement of THM1 over hooks divisible by odd t
HOOK_SYMPL  sum of reciprocal hook products over DD of weight 2n = 1/(2^n n!)
HOOK_GEN    alias of COR_411
MAC_A/C/B/BC lattice-sum expansions of integral powers of the Euler product
GENFUN_HT   generating function of pairs of restricted cores at modulus t
LEMMA42     signed generating function of doubled-distinct t-cores
THM_PAIR    power 2t^2+t as a diagonal-hook ladder sum over SC x DD pairs
THM310      per-pair equivalence of the ladder product and the merged
            partition's hook product, sampled at rational t
COR_*       specializations of THM2 (z=-1, y=1, y^2=-1, coefficient
            extractions, exponential limits)
KOSTANT     sign/nonvanishing of coefficients of Euler-product powers
SC_CCHECK   even-direction expansion over self-conjugate partitions
SIGN_EQ25   diagonal sign times hook-sign product = parity of half weight
=========== =================================================================
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt, prod

from .bijections import (
    delta_weight_product,
    type_a_constant,
    type_b_constant,
    type_bc_constant,
    type_c_constant,
)
from .families import FamilySpec, dd_core_count, enumerate_family
from .partitions import Partition, merged_principal_hooks, nu_to_pair, pair_to_nu
from .series import (
    QQ,
    MultiPoly,
    PolynomialRing,
    PowerSeries,
    eta_product,
    euler_factor,
)

IDENTITY_IDS = (
    "NO",
    "THM1",
    "THM2",
    "HOOK_SYMPL",
    "HOOK_GEN",
    "MAC_A",
    "MAC_C",
    "MAC_B",
    "MAC_BC",
    "GENFUN_HT",
    "LEMMA42",
    "THM_PAIR",
    "THM310",
    "COR_Z1",
    "COR_Z1Y1",
    "COR_Y_I",
    "COR_Y1",
    "COR_ZP1",
    "COR_EXP",
    "COR_T1",
    "COR_411",
    "COR_412",
    "COR_413",
    "KOSTANT",
    "SC_CCHECK",
    "SIGN_EQ25",
)

RATIONAL_T_SAMPLES = (
    Fraction(0),
    Fraction(1),
    Fraction(1, 2),
    Fraction(-1, 3),
    Fraction(2),
    Fraction(5, 2),
    Fraction(-3),
    Fraction(7, 5),
)


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: dict
    order: int
    status: str
    first_mismatch: tuple | None
    ms: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, include_ms: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "params": dict(sorted(self.params.items())),
            "order": self.order,
            "status": self.status,
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
        }
        if include_ms:
            out["ms"] = self.ms
        return out


def _require_odd_t(t: int) -> int:
    t = int(t)
    if t < 1 or t % 2 == 0:
        raise ValueError(
            f"modulus t={t} rejected: this expansion is established for odd t only; "
            "the even direction is the SC_CCHECK identity"
        )
    return t


# --------------------------------------------------------------------------
# sum sides
# --------------------------------------------------------------------------

def nekrasov_okounkov_sum(order: int, ring: PolynomialRing, symbol: str = "z") -> PowerSeries:
    """sum over all partitions of x^|lam| prod (1 - z/h^2)."""
    z = ring.variable(symbol)
    out = PowerSeries.zeros(ring, order)
    for lam in enumerate_family(FamilySpec("ALL", order)):
        term = ring.one
        for h in lam.hook_multiset():
            term = term * (1 - z * Fraction(1, h * h))
        out.coeffs[lam.weight] = out.coeffs[lam.weight] + term
    return out


def dd_hook_sum(order: int, ring: PolynomialRing, symbol: str = "t") -> PowerSeries:
    """sum over doubled-distinct lam of sign * x^(|lam|/2) prod (1 - (2t+2) eps/h)."""
    tsym = ring.variable(symbol)
    m = 2 * tsym + 2
    out = PowerSeries.zeros(ring, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        term = ring.coerce(lam.durfee_sign().sign)
        for s in lam.hook_lengths().values():
            term = term * (1 - m * Fraction(s.eps, s.h))
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + term
    return out


def dd_refined_sum(t: int, order: int, ring: PolynomialRing) -> PowerSeries:
    """THM2 sum side: marks y per hook divisible by t, scaled by 1 - t(2z+2)eps/h."""
    _require_odd_t(t)
    y = ring.variable("y")
    z = ring.variable("z")
    two_z_plus_2 = 2 * z + 2
    out = PowerSeries.zeros(ring, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        stats = lam.hooks_div_t(t)
        term = ring.coerce(lam.durfee_sign().sign) * y ** len(stats)
        for s in stats:
            term = term * (1 - two_z_plus_2 * Fraction(t * s.eps, s.h))
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + term
    return out


def sc_hook_sum(order: int, ring: PolynomialRing, symbol: str = "z") -> PowerSeries:
    """SC_CCHECK sum side: sign * x^|lam| prod (1 - 2z eps/h) over self-conjugates."""
    z = ring.variable(symbol)
    out = PowerSeries.zeros(ring, order)
    for lam in enumerate_family(FamilySpec("SC", order)):
        term = ring.coerce(lam.durfee_sign().sign)
        for s in lam.hook_lengths().values():
            term = term * (1 - 2 * z * Fraction(s.eps, s.h))
        out.coeffs[lam.weight] = out.coeffs[lam.weight] + term
    return out


def hook_ladder(delta, modulus_elem, half_elem):
    """prod over diagonal hooks h of (1 - M/h)(1 - H/h) prod_j (1 - (M/(h+-j))^2).

    M and H are ring elements (numeric or symbolic 2t+2 and t+1); the inner
    sign is + exactly when j is itself one of the diagonal hooks.
    """
    dset = set(int(h) for h in delta)
    out = 1
    for h in dset:
        out = out * (1 - modulus_elem * Fraction(1, h)) * (1 - half_elem * Fraction(1, h))
        for j in range(1, h):
            d = h + (j if j in dset else -j)
            out = out * (1 - (modulus_elem * Fraction(1, d)) ** 2)
    return out


def pair_ladder_sum(order: int, ring: PolynomialRing, symbol: str = "t") -> PowerSeries:
    """THM_PAIR sum side over all SC x DD pairs, symbolic t."""
    tsym = ring.variable(symbol)
    m = 2 * tsym + 2
    half = tsym + 1
    out = PowerSeries.zeros(ring, order)
    for lam, mu in enumerate_family(FamilySpec("SC_x_DD_PAIRS", order)):
        delta = merged_principal_hooks(lam, mu)
        sign = lam.durfee_sign().sign * mu.durfee_sign().sign
        term = ring.coerce(sign) * hook_ladder(delta, m, half)
        w = lam.weight + mu.weight
        out.coeffs[w] = out.coeffs[w] + term
    return out


def dd_mark_sum(t: int, order: int, ring: PolynomialRing, symbol: str = "u") -> PowerSeries:
    """COR_Z1 sum side with u = y^2: sign * x^(|lam|/2) u^(#marked/2)."""
    _require_odd_t(t)
    u = ring.variable(symbol)
    out = PowerSeries.zeros(ring, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        marked = len(lam.hooks_div_t(t))
        if marked % 2:
            raise AssertionError("hooks divisible by odd t pair up on a DD diagram")
        term = ring.coerce(lam.durfee_sign().sign) * u ** (marked // 2)
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + term
    return out


def dd_signed_sum(order: int) -> PowerSeries:
    """COR_Z1Y1 sum side: sign * x^(|lam|/2) over doubled distincts."""
    out = PowerSeries.zeros(QQ, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + lam.durfee_sign().sign
    return out


def dd_quarter_sign_sum(t: int, order: int) -> PowerSeries:
    """COR_Y_I sum side: sign * (-1)^(#marked/2) x^(|lam|/2)."""
    _require_odd_t(t)
    out = PowerSeries.zeros(QQ, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        marked = len(lam.hooks_div_t(t))
        value = lam.durfee_sign().sign * (-1) ** (marked // 2)
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + value
    return out


def dd_scaled_hook_sum(t: int, order: int, ring: PolynomialRing, symbol: str = "z") -> PowerSeries:
    """COR_Y1 sum side: prod over marked hooks of (1 - t(2z+2) eps/h)."""
    _require_odd_t(t)
    z = ring.variable(symbol)
    two_z_plus_2 = 2 * z + 2
    out = PowerSeries.zeros(ring, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        term = ring.coerce(lam.durfee_sign().sign)
        for s in lam.hooks_div_t(t):
            term = term * (1 - two_z_plus_2 * Fraction(t * s.eps, s.h))
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + term
    return out


def dd_principal_recip_sum(t: int, order: int) -> PowerSeries:
    """COR_ZP1 sum side: sign * sum of 1/h over diagonal hooks divisible by t."""
    _require_odd_t(t)
    out = PowerSeries.zeros(QQ, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        inner = sum(
            (Fraction(1, h) for h in lam.principal_hooks() if h % t == 0),
            start=Fraction(0),
        )
        if not inner:
            continue
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + lam.durfee_sign().sign * inner
    return out


def dd_bt_sum(t: int, order: int, ring: PolynomialRing, symbol: str = "b") -> PowerSeries:
    """COR_EXP sum side: sign * (b t)^#marked * prod eps/h over marked hooks."""
    _require_odd_t(t)
    b = ring.variable(symbol)
    out = PowerSeries.zeros(ring, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        stats = lam.hooks_div_t(t)
        coeff = Fraction(lam.durfee_sign().sign) * t ** len(stats)
        for s in stats:
            coeff *= Fraction(s.eps, s.h)
        term = b ** len(stats) * coeff
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + term
    return out


def dd_reciprocal_sum(order: int, ring: PolynomialRing, symbol: str = "b") -> PowerSeries:
    """COR_T1 sum side: x^(|lam|/2) b^|lam| prod 1/h, no signs."""
    b = ring.variable(symbol)
    out = PowerSeries.zeros(ring, order)
    for lam in enumerate_family(FamilySpec("DD", 2 * order)):
        coeff = Fraction(1)
        for h in lam.hook_multiset():
            coeff *= Fraction(1, h)
        term = b ** lam.weight * coeff
        idx = lam.weight // 2
        out.coeffs[idx] = out.coeffs[idx] + term
    return out


def weighted_sum(identity: str, t: int | None, order: int) -> PowerSeries:
    """The sum side of a series identity, built at its natural ring."""
    if identity == "NO":
        return nekrasov_okounkov_sum(order, PolynomialRing(("z",)))
    if identity == "THM1":
        return dd_hook_sum(order, PolynomialRing(("t",)))
    if identity == "THM2":
        return dd_refined_sum(t, order, PolynomialRing(("y", "z")))
    if identity == "THM_PAIR":
        return pair_ladder_sum(order, PolynomialRing(("t",)))
    if identity == "COR_Z1":
        return dd_mark_sum(t, order, PolynomialRing(("u",)))
    if identity == "COR_Z1Y1":
        return dd_signed_sum(order)
    if identity == "COR_Y_I":
        return dd_quarter_sign_sum(t, order)
    if identity == "COR_Y1":
        return dd_scaled_hook_sum(t, order, PolynomialRing(("z",)))
    if identity == "COR_ZP1":
        return dd_principal_recip_sum(t, order)
    if identity == "COR_EXP":
        return dd_bt_sum(t, order, PolynomialRing(("b",)))
    if identity == "COR_T1":
        return dd_reciprocal_sum(order, PolynomialRing(("b",)))
    if identity == "GENFUN_HT":
        return core_pair_genfun(t, order)
    if identity == "LEMMA42":
        return dd_core_signed_sum(t, order)
    if identity == "SC_CCHECK":
        return sc_hook_sum(order, PolynomialRing(("z",)))
    if identity in ("MAC_A", "MAC_C", "MAC_B", "MAC_BC"):
        return macdonald_sum(identity.split("_")[1], t, order)
    raise ValueError(f"{identity} has no series sum side")


def core_pair_genfun(t: int, order: int) -> PowerSeries:
    """Generating function of SC x DD core pairs at modulus t, by weight."""
    if t < 1:
        raise ValueError("t >= 1 required")
    sc = PowerSeries.zeros(QQ, order)
    for lam in enumerate_family(FamilySpec("SC_T_CORE", order, t)):
        sc.coeffs[lam.weight] += 1
    dd = PowerSeries.zeros(QQ, order)
    for mu in enumerate_family(FamilySpec("DD_T_CORE", order, t)):
        dd.coeffs[mu.weight] += 1
    return sc * dd


def dd_core_signed_sum(t: int, order: int) -> PowerSeries:
    """LEMMA42 sum side: sign * x^(|core|/2) over doubled-distinct t-cores."""
    _require_odd_t(t)
    out = PowerSeries.zeros(QQ, order)
    for lam in enumerate_family(FamilySpec("DD_T_CORE", 2 * order, t)):
        idx = lam.weight // 2
        out.coeffs[idx] += lam.durfee_sign().sign
    return out


# --------------------------------------------------------------------------
# lattice sums
# --------------------------------------------------------------------------

_MAC_TYPES = ("A", "C", "B", "BC")


def _mac_parameters(family: str, t: int):
    if family == "A":
        if t < 3 or t % 2 == 0:
            raise ValueError("type A needs odd t >= 3")
        return {
            "residues": tuple(range(t)),
            "modulus": t,
            "scale": 2 * t,
            "offset": Fraction(t * t - 1, 24),
            "constant": type_a_constant(t),
            "dimension": t * t - 1,
        }
    if family == "C":
        if t < 2:
            raise ValueError("type C needs t >= 2")
        return {
            "residues": tuple(range(1, t + 1)),
            "modulus": 2 * t + 2,
            "scale": 4 * t + 4,
            "offset": Fraction(2 * t * t + t, 24),
            "constant": type_c_constant(t),
            "dimension": 2 * t * t + t,
        }
    if family == "B":
        if t < 3:
            raise ValueError("type B needs t >= 3")
        return {
            "residues": tuple(2 * i - 1 for i in range(1, t + 1)),
            "modulus": 4 * t - 2,
            "scale": 8 * (2 * t - 1),
            "offset": Fraction(2 * t * t + t, 24),
            "constant": type_b_constant(t),
            "dimension": 2 * t * t + t,
        }
    if family == "BC":
        if t < 1:
            raise ValueError("type BC needs t >= 1")
        return {
            "residues": tuple(2 * i - 1 for i in range(1, t + 1)),
            "modulus": 4 * t + 2,
            "scale": 8 * (2 * t + 1),
            "offset": Fraction(2 * t * t - t, 24),
            "constant": type_bc_constant(t),
            "dimension": 2 * t * t - t,
        }
    raise ValueError(f"unknown lattice family {family!r} (choose from {_MAC_TYPES})")


def _class_values(residue: int, modulus: int, cap_sq: int, pad: int) -> list[int]:
    """Members of a congruence class with square at most cap_sq (+pad steps)."""
    bound = isqrt(max(cap_sq, 0)) + pad * modulus
    lo = -((bound + residue) // modulus)
    hi = (bound - residue) // modulus
    return [residue + modulus * k for k in range(lo, hi + 1)]


def macdonald_sum(family: str, t: int, order: int, pad: int = 0) -> PowerSeries:
    """Lattice sum side of a power-of-Euler-product expansion.

    Enumerates all admissible vectors whose normalized exponent is at most
    ``order``; the exponent-shift must land every term on a nonnegative
    integer power, which is asserted per vector.  ``pad`` enlarges every
    coordinate box; the result must not change, which the tests verify.
    """
    p = _mac_parameters(family, t)
    residues, modulus, scale = p["residues"], p["modulus"], p["scale"]
    offset, constant = p["offset"], p["constant"]
    cap = int(scale * (order + offset))  # ||v||^2 budget
    min_sq = [min(r % modulus, modulus - r % modulus) ** 2 for r in residues]
    total_min = sum(min_sq)
    free = len(residues) - (1 if family == "A" else 0)
    boxes = [
        _class_values(residues[i], modulus, cap - (total_min - min_sq[i]), pad)
        for i in range(free)
    ]
    out = PowerSeries.zeros(QQ, order)

    def emit(v: tuple[int, ...]) -> None:
        normsq = sum(x * x for x in v)
        exponent = Fraction(normsq, scale) - offset
        if exponent > order:
            return
        if exponent.denominator != 1 or exponent < 0:
            raise AssertionError(
                f"exponent {exponent} of vector {v} is not a nonnegative integer"
            )
        if family == "A":
            weight = prod(v[i] - v[j] for i in range(t) for j in range(i + 1, t))
        elif family in ("C", "B"):
            weight = prod(v) * prod(
                v[i] * v[i] - v[j] * v[j] for i in range(t) for j in range(i + 1, t)
            )
        else:  # BC
            weight = prod(
                v[i] * v[i] - v[j] * v[j] for i in range(t) for j in range(i + 1, t)
            )
            weight *= (-1) ** ((sum(v) - t) // 2)
        if family == "B" and (sum(v) - t * t) % (8 * t - 4):
            return
        idx = int(exponent)
        out.coeffs[idx] += weight

    def walk(i: int, chosen: list[int], normsq: int) -> None:
        if i == free:
            if family == "A":
                last = -sum(chosen)
                if last % modulus != residues[-1] % modulus:
                    return
                emit(tuple(chosen) + (last,))
            else:
                emit(tuple(chosen))
            return
        for value in boxes[i]:
            sq = value * value
            if pad == 0 and normsq + sq + (total_min - sum(min_sq[: i + 1])) > cap:
                continue
            chosen.append(value)
            walk(i + 1, chosen, normsq + sq)
            chosen.pop()

    walk(0, [], 0)
    return out.scale(constant)


# --------------------------------------------------------------------------
# product sides
# --------------------------------------------------------------------------

def euler_power(order: int, exponent, ring=QQ) -> PowerSeries:
    """prod (1 - x^k) raised to a numeric or polynomial exponent."""
    return euler_factor(order, ring).pow_sym(exponent)


def thm2_product(t: int, order: int, ring: PolynomialRing) -> PowerSeries:
    _require_odd_t(t)
    tprime = (t - 1) // 2
    z = ring.variable("z")
    expo = (2 * z + 1) * (t * z + Fraction(3 * (t - 1), 2))
    return eta_product(
        [(1, 0, 1), (t, 0, tprime - 1), (t, 2, expo)], order, ring, symbol="y"
    )


def cor_z1_product(t: int, order: int, ring: PolynomialRing) -> PowerSeries:
    _require_odd_t(t)
    tprime = (t - 1) // 2
    return eta_product(
        [(1, 0, 1), (t, 0, tprime - 1), (t, 1, 1 - tprime)], order, ring, symbol="u"
    )


def cor_y_i_product(t: int, order: int) -> PowerSeries:
    """prod (1-x^k) * prod over odd k of ((1-x^{kt})/(1+x^{kt}))^(t'-1).

    The odd-k restriction is rewritten through plain Euler factors:
    prod_{k odd}(1-x^{kt}) = E(t)/E(2t) and
    prod_{k odd}(1+x^{kt}) = E(2t)^2/(E(t)E(4t)).
    """
    _require_odd_t(t)
    e = (t - 1) // 2 - 1
    return eta_product(
        [(1, 0, 1), (t, 0, 2 * e), (4 * t, 0, e), (2 * t, 0, -3 * e)], order, QQ
    )


def cor_y1_product(t: int, order: int, ring: PolynomialRing) -> PowerSeries:
    _require_odd_t(t)
    z = ring.variable("z")
    expo = (z + 1) * (2 * t * z + 2 * t - 3)
    return eta_product([(1, 0, 1), (t, 0, expo)], order, ring)


def cor_zp1_product(t: int, order: int) -> PowerSeries:
    """-1/(2t) * prod(1-x^k) * sum_m x^{tm} / (m (1 - x^{tm}))."""
    _require_odd_t(t)
    tail = PowerSeries.zeros(QQ, order)
    for m in range(1, order // t + 1):
        j = 1
        while t * m * j <= order:
            tail.coeffs[t * m * j] += Fraction(1, m)
            j += 1
    return (euler_factor(order) * tail).scale(Fraction(-1, 2 * t))


def cor_exp_product(t: int, order: int, ring: PolynomialRing) -> PowerSeries:
    _require_odd_t(t)
    b = ring.variable("b")
    gauss = PowerSeries.zeros(ring, order)
    if t <= order:
        gauss.coeffs[t] = b * b * Fraction(-t, 2)
    tprime = (t - 1) // 2
    return gauss.exp() * eta_product([(1, 0, 1), (t, 0, tprime - 1)], order, ring)


def cor_t1_product(order: int, ring: PolynomialRing) -> PowerSeries:
    b = ring.variable("b")
    gauss = PowerSeries.zeros(ring, order)
    if order >= 1:
        gauss.coeffs[1] = b * b * Fraction(1, 2)
    return gauss.exp()


def genfun_product(t: int, order: int) -> PowerSeries:
    return eta_product([(2, 0, 1), (1, 0, -1), (t, 0, 1), (2 * t, 0, t - 2)], order, QQ)


def lemma42_product(t: int, order: int) -> PowerSeries:
    _require_odd_t(t)
    tprime = (t - 1) // 2
    return eta_product([(1, 0, 1), (t, 0, tprime - 1)], order, QQ)


def sc_ccheck_product(order: int, ring: PolynomialRing) -> PowerSeries:
    z = ring.variable("z")
    return eta_product(
        [(2, 0, (z + 1) * (2 * z - 1)), (1, 0, -(2 * z - 1))], order, ring
    )


# --------------------------------------------------------------------------
# scalar check families
# --------------------------------------------------------------------------

def _dd_of_weight(weight: int) -> list[Partition]:
    return [lam for lam in enumerate_family(FamilySpec("DD", weight)) if lam.weight == weight]


def hook_sympl_checks(n_max: int) -> list[tuple]:
    out = []
    for n in range(1, n_max + 1):
        lhs = Fraction(0)
        for lam in _dd_of_weight(2 * n):
            term = Fraction(1)
            for h in lam.hook_multiset():
                term *= Fraction(1, h)
            lhs += term
        rhs = Fraction(1, 2 ** n * factorial(n))
        out.append((n, lhs == rhs, str(lhs), str(rhs)))
    return out


def _marked_recip_sum(t: int, n: int, weight: int) -> Fraction:
    """sum of sign * prod eps/h over marked hooks, for DD of the given weight
    with exactly 2n hooks divisible by t."""
    total = Fraction(0)
    for lam in _dd_of_weight(weight):
        stats = lam.hooks_div_t(t)
        if len(stats) != 2 * n:
            continue
        term = Fraction(lam.durfee_sign().sign)
        for s in stats:
            term *= Fraction(s.eps, s.h)
        total += term
    return total


def cor411_checks(t: int, n_max: int) -> list[tuple]:
    _require_odd_t(t)
    out = []
    for n in range(1, n_max + 1):
        lhs = _marked_recip_sum(t, n, 2 * t * n)
        rhs = Fraction((-1) ** n, factorial(n) * t ** n * 2 ** n)
        out.append((n, lhs == rhs, str(lhs), str(rhs)))
    return out


def cor412_checks(t: int, n_values, m_values) -> list[tuple]:
    _require_odd_t(t)
    out = []
    for n in n_values:
        for m in m_values:
            lhs = _marked_recip_sum(t, n, 2 * t * n + m)
            rhs = Fraction((-1) ** n * dd_core_count(t, m), factorial(n) * t ** n * 2 ** n)
            out.append((f"n={n},m={m}", lhs == rhs, str(lhs), str(rhs)))
    return out


def cor413_checks(t: int, n_max: int) -> list[tuple]:
    _require_odd_t(t)
    out = []
    for n in range(1, n_max + 1):
        lhs = Fraction(0)
        for lam in _dd_of_weight(2 * t * n):
            stats = lam.hooks_div_t(t)
            if len(stats) != 2 * n:
                continue
            term = Fraction(lam.durfee_sign().sign)
            marked_sum = 0
            for s in stats:
                term *= Fraction(s.eps, s.h)
                marked_sum += s.h * s.eps
            lhs += term * marked_sum
        rhs = Fraction(3 * (-1) ** n, factorial(n - 1) * t ** n * 2 ** n)
        out.append((n, lhs == rhs, str(lhs), str(rhs)))
    return out


def kostant_checks(k_max: int, spot_k_max: int) -> list[tuple]:
    """Sign positivity of (-1)^k f_k(2s^2+s) for sampled s > k-1, plus the
    nonvanishing spot check f_k(m^2-1) != 0."""
    order = max(k_max, spot_k_max)
    log_euler = euler_factor(order).log()
    out = []
    for k in range(1, k_max + 1):
        for s in (k - Fraction(1, 2), Fraction(k), k + Fraction(7, 3), Fraction(3 * k)):
            expo = 2 * s * s + s
            series = log_euler.scale(expo).exp()
            value = (-1) ** k * series.coeff(k)
            out.append((f"k={k},s={s}", value > 0, str(value), "> 0"))
    for k in range(1, spot_k_max + 1):
        for m in range(max(k, 4), k + 4):
            series = log_euler.scale(m * m - 1).exp()
            value = series.coeff(k)
            out.append((f"k={k},m={m}", value != 0, str(value), "!= 0"))
    return out


def sign_eq25_checks(max_weight: int) -> list[tuple]:
    out = []
    for lam in enumerate_family(FamilySpec("DD", max_weight)):
        eps = 1
        for s in lam.hook_lengths().values():
            eps *= s.eps
        lhs = lam.durfee_sign().sign * eps
        rhs = (-1) ** (lam.weight // 2)
        out.append((str(list(lam.parts)), lhs == rhs, str(lhs), str(rhs)))
    return out


def dd_hook_term_at(lam: Partition, t: Fraction) -> Fraction:
    """prod over hooks of (1 - (2t+2) eps/h) at numeric t."""
    term = Fraction(1)
    m = 2 * t + 2
    for s in lam.hook_lengths().values():
        term *= 1 - m * Fraction(s.eps, s.h)
    return term


def thm310_checks(max_weight: int) -> list[tuple]:
    """Per-pair merge checks: doubled diagonal hooks, weight and sign laws,
    round trip, and the ladder/hook product identity at rational t."""
    out = []
    for lam, mu in enumerate_family(FamilySpec("SC_x_DD_PAIRS", max_weight)):
        nu = pair_to_nu(lam, mu)
        delta = merged_principal_hooks(lam, mu)
        label = f"{list(lam.parts)}|{list(mu.parts)}"
        structural = (
            nu.principal_hooks() == tuple(2 * h for h in delta)
            and nu.weight == 2 * (lam.weight + mu.weight)
            and nu.durfee_sign().sign
            == lam.durfee_sign().sign * mu.durfee_sign().sign
            and nu.is_doubled_distinct()
            and nu_to_pair(nu) == (lam, mu)
        )
        if not structural:
            out.append((label, False, "structural merge laws", "violated"))
            continue
        ok = True
        detail = ""
        for t in RATIONAL_T_SAMPLES:
            lhs = delta_weight_product(delta, t)
            rhs = dd_hook_term_at(nu, t)
            if lhs != rhs:
                ok = False
                detail = f"t={t}: {lhs} vs {rhs}"
                break
        out.append((label, ok, detail or "ladder = hook product", "at 8 rational t"))
    return out


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

def _series_runner(identity: str, params: dict, order: int):
    t = params.get("t")
    if identity == "NO":
        ring = PolynomialRing(("z",))
        return nekrasov_okounkov_sum(order, ring), euler_power(order, ring.variable("z") - 1, ring)
    if identity == "THM1":
        ring = PolynomialRing(("t",))
        ts = ring.variable("t")
        return dd_hook_sum(order, ring), euler_power(order, 2 * ts * ts + ts, ring)
    if identity == "THM2":
        ring = PolynomialRing(("y", "z"))
        return dd_refined_sum(t, order, ring), thm2_product(t, order, ring)
    if identity == "THM_PAIR":
        ring = PolynomialRing(("t",))
        ts = ring.variable("t")
        return pair_ladder_sum(order, ring), euler_power(order, 2 * ts * ts + ts, ring)
    if identity in ("MAC_A", "MAC_C", "MAC_B", "MAC_BC"):
        family = identity.split("_")[1]
        dim = _mac_parameters(family, t)["dimension"]
        return macdonald_sum(family, t, order), euler_power(order, dim)
    if identity == "GENFUN_HT":
        return core_pair_genfun(t, order), genfun_product(t, order)
    if identity == "LEMMA42":
        return dd_core_signed_sum(t, order), lemma42_product(t, order)
    if identity == "COR_Z1":
        ring = PolynomialRing(("u",))
        return dd_mark_sum(t, order, ring), cor_z1_product(t, order, ring)
    if identity == "COR_Z1Y1":
        return dd_signed_sum(order), euler_factor(order)
    if identity == "COR_Y_I":
        return dd_quarter_sign_sum(t, order), cor_y_i_product(t, order)
    if identity == "COR_Y1":
        ring = PolynomialRing(("z",))
        return dd_scaled_hook_sum(t, order, ring), cor_y1_product(t, order, ring)
    if identity == "COR_ZP1":
        return dd_principal_recip_sum(t, order), cor_zp1_product(t, order)
    if identity == "COR_EXP":
        ring = PolynomialRing(("b",))
        return dd_bt_sum(t, order, ring), cor_exp_product(t, order, ring)
    if identity == "COR_T1":
        ring = PolynomialRing(("b",))
        return dd_reciprocal_sum(order, ring), cor_t1_product(order, ring)
    if identity == "SC_CCHECK":
        ring = PolynomialRing(("z",))
        return sc_hook_sum(order, ring), sc_ccheck_product(order, ring)
    raise ValueError(f"{identity} is not a series identity")


_SERIES_IDS = {
    "NO", "THM1", "THM2", "THM_PAIR", "MAC_A", "MAC_C", "MAC_B", "MAC_BC",
    "GENFUN_HT", "LEMMA42", "COR_Z1", "COR_Z1Y1", "COR_Y_I", "COR_Y1",
    "COR_ZP1", "COR_EXP", "COR_T1", "SC_CCHECK",
}


def _scalar_runner(identity: str, params: dict, order: int) -> list[tuple]:
    if identity in ("HOOK_SYMPL",):
        return hook_sympl_checks(params.get("n_max", order))
    if identity in ("HOOK_GEN", "COR_411"):
        return cor411_checks(params["t"], params.get("n_max", order))
    if identity == "COR_412":
        return cor412_checks(
            params["t"], params.get("n_values", (1, 2)), params.get("m_values", (0, 2, 4))
        )
    if identity == "COR_413":
        return cor413_checks(params["t"], params.get("n_max", order))
    if identity == "KOSTANT":
        return kostant_checks(params.get("k_max", 12), params.get("spot_k_max", 10))
    if identity == "SIGN_EQ25":
        return sign_eq25_checks(params.get("max_weight", order))
    if identity == "THM310":
        return thm310_checks(params.get("max_weight", order))
    raise ValueError(f"unknown identity {identity!r}")


# quick profile: symbolic orders 8, numeric orders 30, reduced scalar ranges;
# full profile: the acceptance orders.
_REGISTRY: dict[str, dict] = {
    "NO": {
        "summary": "all-partition hook expansion of the Euler product power z-1",
        "quick": [({}, 8)],
        "full": [({}, 12)],
    },
    "THM1": {
        "summary": "doubled-distinct hook expansion of the power 2t^2+t",
        "quick": [({}, 8)],
        "full": [({}, 12)],
    },
    "THM2": {
        "summary": "(y,z)-refined expansion over hooks divisible by odd t",
        "quick": [({"t": 3}, 8)],
        "full": [({"t": 1}, 10), ({"t": 3}, 10), ({"t": 5}, 10)],
    },
    "HOOK_SYMPL": {
        "summary": "reciprocal hook products over DD of weight 2n sum to 1/(2^n n!)",
        "quick": [({"n_max": 5}, 5)],
        "full": [({"n_max": 8}, 8)],
    },
    "HOOK_GEN": {
        "summary": "marked reciprocal hook sums at modulus t (alias of COR_411)",
        "quick": [({"t": 1, "n_max": 2}, 2), ({"t": 3, "n_max": 2}, 2)],
        "full": [({"t": 1, "n_max": 4}, 4), ({"t": 3, "n_max": 4}, 4)],
    },
    "MAC_A": {
        "summary": "zero-sum lattice expansion of the power t^2-1 (odd t)",
        "quick": [({"t": 3}, 30), ({"t": 5}, 30)],
        "full": [({"t": 3}, 20), ({"t": 5}, 20)],
    },
    "MAC_C": {
        "summary": "lattice expansion of the power 2t^2+t at modulus 2t+2",
        "quick": [({"t": 2}, 30), ({"t": 3}, 30), ({"t": 4}, 30)],
        "full": [({"t": 2}, 20), ({"t": 3}, 20), ({"t": 4}, 20)],
    },
    "MAC_B": {
        "summary": "lattice expansion of the power 2t^2+t at modulus 4t-2",
        "quick": [({"t": 3}, 30), ({"t": 4}, 30)],
        "full": [({"t": 3}, 20), ({"t": 4}, 20)],
    },
    "MAC_BC": {
        "summary": "signed lattice expansion of the power 2t^2-t at modulus 4t+2",
        "quick": [({"t": 1}, 30), ({"t": 2}, 30), ({"t": 3}, 30)],
        "full": [({"t": 1}, 20), ({"t": 2}, 20), ({"t": 3}, 20)],
    },
    "GENFUN_HT": {
        "summary": "generating function of restricted core pairs at modulus t",
        "quick": [({"t": 2}, 30), ({"t": 3}, 30)],
        "full": [({"t": 2}, 30), ({"t": 3}, 30), ({"t": 4}, 30), ({"t": 5}, 30)],
    },
    "LEMMA42": {
        "summary": "signed generating function of doubled-distinct t-cores",
        "quick": [({"t": 3}, 30)],
        "full": [({"t": 3}, 30), ({"t": 5}, 30), ({"t": 7}, 30)],
    },
    "THM_PAIR": {
        "summary": "diagonal-hook ladder sum over SC x DD pairs, symbolic t",
        "quick": [({}, 6)],
        "full": [({}, 10)],
    },
    "THM310": {
        "summary": "pair merge: doubled hooks, weight/sign laws, ladder = hook product",
        "quick": [({"max_weight": 8}, 8)],
        "full": [({"max_weight": 15}, 15)],
    },
    "COR_Z1": {
        "summary": "mark count generating function (z=-1), symbolic u=y^2",
        "quick": [({"t": 3}, 8)],
        "full": [({"t": 3}, 10), ({"t": 5}, 10)],
    },
    "COR_Z1Y1": {
        "summary": "signed DD half-weight sum equals the Euler product",
        "quick": [({}, 30)],
        "full": [({}, 10)],
    },
    "COR_Y_I": {
        "summary": "quarter-turn sign specialization via u=y^2=-1",
        "quick": [({"t": 5}, 30)],
        "full": [({"t": 3}, 10), ({"t": 5}, 10)],
    },
    "COR_Y1": {
        "summary": "y=1 specialization with symbolic z exponent",
        "quick": [({"t": 3}, 8)],
        "full": [({"t": 3}, 10), ({"t": 5}, 10)],
    },
    "COR_ZP1": {
        "summary": "linear-in-(z+1) coefficient: diagonal reciprocal marks",
        "quick": [({"t": 3}, 30)],
        "full": [({"t": 3}, 10), ({"t": 5}, 10)],
    },
    "COR_EXP": {
        "summary": "exponential limit with symbolic b over marked hooks",
        "quick": [({"t": 3}, 8)],
        "full": [({"t": 3}, 10), ({"t": 5}, 10)],
    },
    "COR_T1": {
        "summary": "all-hook reciprocal sum equals exp(b^2 x / 2)",
        "quick": [({}, 8)],
        "full": [({}, 10)],
    },
    "COR_411": {
        "summary": "empty-core marked reciprocal hook sums at modulus t",
        "quick": [({"t": 1, "n_max": 2}, 2), ({"t": 3, "n_max": 2}, 2)],
        "full": [({"t": 1, "n_max": 4}, 4), ({"t": 3, "n_max": 4}, 4)],
    },
    "COR_412": {
        "summary": "core-weight refinement counting DD t-cores of weight m",
        "quick": [({"t": 1, "n_values": (1,), "m_values": (0, 2)}, 1),
                  ({"t": 3, "n_values": (1,), "m_values": (0, 2)}, 1)],
        "full": [({"t": 1, "n_values": (1, 2), "m_values": (0, 2, 4)}, 2),
                 ({"t": 3, "n_values": (1, 2), "m_values": (0, 2, 4)}, 2)],
    },
    "COR_413": {
        "summary": "marked hook sums weighted by sum of h*eps",
        "quick": [({"t": 1, "n_max": 2}, 2), ({"t": 3, "n_max": 2}, 2)],
        "full": [({"t": 1, "n_max": 4}, 4), ({"t": 3, "n_max": 4}, 4)],
    },
    "KOSTANT": {
        "summary": "sign and nonvanishing of Euler-product power coefficients",
        "quick": [({"k_max": 6, "spot_k_max": 6}, 6)],
        "full": [({"k_max": 12, "spot_k_max": 10}, 12)],
    },
    "SC_CCHECK": {
        "summary": "self-conjugate hook expansion for the even direction",
        "quick": [({}, 8)],
        "full": [({}, 12)],
    },
    "SIGN_EQ25": {
        "summary": "diagonal sign times hook-sign product = (-1)^(|lam|/2) on DD",
        "quick": [({"max_weight": 16}, 16)],
        "full": [({"max_weight": 30}, 30)],
    },
}

assert tuple(_REGISTRY) == IDENTITY_IDS


def registry_summaries() -> list[tuple[str, str]]:
    return [(name, _REGISTRY[name]["summary"]) for name in IDENTITY_IDS]


def default_config(identity: str, profile: str = "full") -> tuple[dict, int]:
    if identity not in _REGISTRY:
        raise ValueError(f"unknown identity {identity!r}")
    return _REGISTRY[identity][profile][0]


def verify(identity: str, params: dict | None = None, order: int | None = None) -> VerificationReport:
    """Build both sides of one identity instance and compare exactly."""
    if identity not in _REGISTRY:
        raise ValueError(f"unknown identity {identity!r}")
    base_params, base_order = default_config(identity)
    if params is None:
        params = base_params
    if order is None:
        order = base_order
    started = time.perf_counter()
    if identity in _SERIES_IDS:
        lhs, rhs = _series_runner(identity, params, order)
        n = lhs.first_difference(rhs)
        mismatch = None if n is None else (n, str(lhs.coeff(n)), str(rhs.coeff(n)))
    else:
        checks = _scalar_runner(identity, params, order)
        mismatch = None
        for label, ok, lhs_repr, rhs_repr in checks:
            if not ok:
                mismatch = (label, lhs_repr, rhs_repr)
                break
    ms = int((time.perf_counter() - started) * 1000)
    return VerificationReport(
        identity=identity,
        params=dict(params),
        order=order,
        status="pass" if mismatch is None else "fail",
        first_mismatch=mismatch,
        ms=ms,
    )


def profile_configs(profile: str, only: str | None = None) -> list[tuple[str, dict, int]]:
    if profile not in ("quick", "full"):
        raise ValueError("profile must be 'quick' or 'full'")
    out = []
    for name in IDENTITY_IDS:
        if only and only not in name:
            continue
        for params, order in _REGISTRY[name][profile]:
            out.append((name, params, order))
    return out


def _run_config(config: tuple[str, dict, int]) -> VerificationReport:
    identity, params, order = config
    return verify(identity, params, order)


def default_jobs() -> int:
    env = os.environ.get("ETAFORGE_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise ValueError(f"ETAFORGE_JOBS must be an integer, got {env!r}") from exc
    return os.cpu_count() or 1


def run_all(profile: str = "quick", jobs: int | None = None, only: str | None = None) -> list[VerificationReport]:
    """Run every registry instance of the profile, in registry order."""
    configs = profile_configs(profile, only)
    if not configs:
        raise ValueError(f"no identities match filter {only!r}")
    jobs = jobs or default_jobs()
    if jobs <= 1 or len(configs) == 1:
        return [_run_config(c) for c in configs]
    with ProcessPoolExecutor(max_workers=min(jobs, len(configs))) as pool:
        return list(pool.map(_run_config, configs))
