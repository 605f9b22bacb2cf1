"""Bijections between restricted cores and integer vectors.

The modulus-t core of a partition corresponds to a zero-sum vector of t
integers (one boundary level per word section).  Restricting to
self-conjugate or doubled-distinct cores halves the vector, and pairing one
of each at modulus t+1 gives a bijection with all of Z^t that carries the
quadratic weight law (t+1)*||n||^2 + (1,...,t).n and tracks the maxima of
the diagonal hooks in each congruence class mod 2t+2.

The compact-set machinery at the bottom feeds the telescoping product
identity used to collapse vector-side products into hook products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .partitions import Partition
from .words import partition_from_levels, section_levels, to_word


@dataclass(frozen=True)
class ChargeVector:
    """Zero-sum level vector of a modulus-t core."""

    components: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if len(self.components) != self.modulus:
            raise ValueError("component count must equal the modulus")
        if sum(self.components) != 0:
            raise ValueError(f"components must sum to zero, got {self.components}")

    def weight(self) -> Fraction:
        t = self.modulus
        n = self.components
        return Fraction(t, 2) * sum(v * v for v in n) + sum(i * v for i, v in enumerate(n))

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "components": list(self.components)}


@dataclass(frozen=True)
class PairVector:
    """Image of a self-conjugate/doubled-distinct core pair in Z^t."""

    components: tuple[int, ...]
    t: int

    def __post_init__(self):
        if len(self.components) != self.t:
            raise ValueError(f"expected {self.t} components")

    @property
    def sigma(self) -> tuple[int, ...]:
        return tuple(1 if v >= 0 else -1 for v in self.components)

    def weight(self) -> int:
        n = self.components
        return (self.t + 1) * sum(v * v for v in n) + sum(i * v for i, v in enumerate(n, start=1))

    def to_json(self) -> dict:
        return {"modulus_base": self.t, "components": list(self.components)}


@dataclass(frozen=True)
class DeltaProfile:
    """Per-class maxima of a diagonal-hook set modulo 2t+2.

    values[i-1] is the largest member of the class +-i - (t+1), with the
    fallback i - t - 1 when the class is empty; coords and sigmas solve
    t + 1 + value = sigma * ((2t+2) * coord + i).
    """

    values: tuple[int, ...]
    sigmas: tuple[int, ...]
    coords: tuple[int, ...]
    modulus: int


def gks_phi(lam: Partition, t: int) -> ChargeVector:
    """Level vector of a t-core (word sections are already sorted)."""
    if t < 2:
        raise ValueError("modulus must be >= 2")
    if not lam.is_t_core(t):
        raise ValueError(f"{lam!r} is not a {t}-core")
    return ChargeVector(tuple(section_levels(to_word(lam), t)), t)


def gks_phi_inverse(vector, t: int) -> Partition:
    vec = vector.components if isinstance(vector, ChargeVector) else tuple(vector)
    vec = ChargeVector(tuple(int(v) for v in vec), t)  # validates zero sum
    return partition_from_levels(vec.components, t)


def gks_phi_exposed(lam: Partition, t: int) -> ChargeVector:
    """Slow construction from the extended residue diagram.

    Labels box (i, j) with (j - i) mod t, includes the infinite column 0,
    and takes per-label maxima of the region index of row-end boxes.  Used
    as an independent oracle for gks_phi.
    """
    if not lam.is_t_core(t):
        raise ValueError(f"{lam!r} is not a {t}-core")
    best: dict[int, int] = {}
    contents = [lam.parts[r] - (r + 1) for r in range(len(lam.parts))]
    for c in contents:
        label = c % t
        region = c // t + 1
        if label not in best or best[label] < region:
            best[label] = region
    # rows below the diagram expose the column-0 box of content -r
    ell = len(lam.parts)
    for label in range(t):
        r = ell + 1
        while (-r) % t != label:
            r += 1
        region = (-r) // t + 1
        if label not in best or best[label] < region:
            best[label] = region
    return ChargeVector(tuple(best[i] for i in range(t)), t)


def _phi1_constraint(full: tuple[int, ...], t: int) -> bool:
    return all(full[i] == -full[t - 1 - i] for i in range(t))


def _phi2_constraint(full: tuple[int, ...], t: int) -> bool:
    if full[0] != 0:
        return False
    return all(full[i] == -full[t - i] for i in range(1, t))


def phi1(lam: Partition, t: int) -> tuple[int, ...]:
    """Half vector of a self-conjugate t-core: the last floor(t/2) levels."""
    if not lam.is_self_conjugate():
        raise ValueError(f"{lam!r} is not self-conjugate")
    full = gks_phi(lam, t).components
    if not _phi1_constraint(full, t):
        raise AssertionError(f"level vector {full} lost the mirror symmetry")
    return full[t - t // 2:]


def phi1_inverse(vector, t: int) -> Partition:
    vec = tuple(int(v) for v in vector)
    if len(vec) != t // 2:
        raise ValueError(f"expected {t // 2} components")
    full = [0] * t
    for j, v in enumerate(vec):
        idx = t - t // 2 + j
        full[idx] = v
        full[t - 1 - idx] = -v
    lam = gks_phi_inverse(full, t)
    if not lam.is_self_conjugate():
        raise AssertionError("reconstruction is not self-conjugate")
    return lam


def phi2(mu: Partition, t: int) -> tuple[int, ...]:
    """Half vector of a doubled-distinct t-core: the last floor((t-1)/2) levels."""
    if not mu.is_doubled_distinct():
        raise ValueError(f"{mu!r} is not doubled distinct")
    full = gks_phi(mu, t).components
    if not _phi2_constraint(full, t):
        raise AssertionError(f"level vector {full} lost the anti-symmetry")
    return full[t - (t - 1) // 2:]


def phi2_inverse(vector, t: int) -> Partition:
    vec = tuple(int(v) for v in vector)
    if len(vec) != (t - 1) // 2:
        raise ValueError(f"expected {(t - 1) // 2} components")
    full = [0] * t
    for j, v in enumerate(vec):
        idx = t - (t - 1) // 2 + j
        full[idx] = v
        full[t - idx] = -v
    mu = gks_phi_inverse(full, t)
    if not mu.is_doubled_distinct():
        raise AssertionError("reconstruction is not doubled distinct")
    return mu


def _validate_pair(lam: Partition, mu: Partition, t: int) -> None:
    if t < 2:
        raise ValueError("t must be >= 2")
    if not lam.is_self_conjugate():
        raise ValueError(f"{lam!r} is not self-conjugate")
    if not mu.is_doubled_distinct():
        raise ValueError(f"{mu!r} is not doubled distinct")
    if not lam.is_t_core(t + 1):
        raise ValueError(f"{lam!r} is not a {t + 1}-core")
    if not mu.is_t_core(t + 1):
        raise ValueError(f"{mu!r} is not a {t + 1}-core")


def varphi(lam: Partition, mu: Partition, t: int) -> PairVector:
    """Interleave the half vectors of an SC/DD pair of (t+1)-cores into Z^t."""
    _validate_pair(lam, mu, t)
    a = phi1(lam, t + 1)
    b = phi2(mu, t + 1)
    n = [0] * (t + 1)  # 1-indexed slots
    if (t + 1) % 2:
        evens, odds = a, b
    else:
        evens, odds = b, a
    for j, v in enumerate(evens):
        n[2 * (j + 1)] = v
    for j, v in enumerate(odds):
        n[2 * j + 1] = v
    return PairVector(tuple(n[1:]), t)


def varphi_inverse(vector, t: int) -> tuple[Partition, Partition]:
    """Rebuild the pair by planting diagonal hooks coordinate by coordinate.

    Each unit step of coordinate i away from zero adds one diagonal hook of
    length (t+1)(2k-1)+i (positive direction) or (t+1)(2k-1)-i (negative);
    the hook's parity decides which partition receives it.
    """
    vec = vector.components if isinstance(vector, PairVector) else tuple(int(v) for v in vector)
    if len(vec) != t:
        raise ValueError(f"expected {t} components")
    odd_hooks: list[int] = []
    even_hooks: list[int] = []
    for i, target in enumerate(vec, start=1):
        for k in range(1, abs(target) + 1):
            length = (t + 1) * (2 * k - 1) + (i if target > 0 else -i)
            (odd_hooks if length % 2 else even_hooks).append(length)
    lam = Partition.sc_from_principal_hooks(odd_hooks) if odd_hooks else Partition()
    mu = Partition.dd_from_principal_hooks(even_hooks) if even_hooks else Partition()
    return lam, mu


def delta_profile(delta, t: int) -> DeltaProfile:
    """Class maxima of a diagonal-hook set modulo 2t+2, with fallbacks."""
    m = 2 * t + 2
    dset = set(int(h) for h in delta)
    values = []
    sigmas = []
    coords = []
    for i in range(1, t + 1):
        candidates = [h for h in dset if h % m in ((i - t - 1) % m, (-i - t - 1) % m)]
        value = max(candidates, default=i - t - 1)
        values.append(value)
        v = t + 1 + value
        if v % m == i % m:
            sig, coord = 1, (v - i) // m
        elif (-v) % m == i % m:
            sig, coord = -1, -((v + i) // m)
        else:
            raise AssertionError(f"class maximum {value} fits neither sign branch")
        sigmas.append(sig)
        coords.append(coord)
    return DeltaProfile(tuple(values), tuple(sigmas), tuple(coords), m)


class CompactSet:
    """Finite integer set with full negative ramp and per-class downward closure.

    Contains -1 .. -(2t+1); every other element is positive, avoids
    multiples of 2t+2, and comes with its whole positive congruence ladder
    below it.  The set is determined by its per-class maxima.
    """

    __slots__ = ("modulus", "maxima")

    def __init__(self, modulus: int, maxima):
        self.modulus = modulus
        self.maxima = tuple(sorted(int(e) for e in maxima))

    def positives(self) -> list[int]:
        out = []
        for e in self.maxima:
            while e > 0:
                out.append(e)
                e -= self.modulus
        return sorted(out)

    def elements(self) -> list[int]:
        return sorted(range(-(self.modulus - 1), 0)) + self.positives()

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "maxima": list(self.maxima)}


def compact_set(maximal_elements, t: int) -> CompactSet:
    """The unique compact set with the given per-class maxima."""
    m = 2 * t + 2
    elems = tuple(int(e) for e in maximal_elements)
    if len(elems) != 2 * t + 1:
        raise ValueError(f"expected {2 * t + 1} maxima, got {len(elems)}")
    residues = set()
    for e in elems:
        if e % m == 0:
            raise ValueError(f"maximum {e} is a multiple of {m}")
        if e < 0 and e < -(2 * t + 1):
            raise ValueError(f"negative maximum {e} below -(2t+1)")
        residues.add(e % m)
    if len(residues) != 2 * t + 1:
        raise ValueError("maxima must cover distinct congruence classes")
    return CompactSet(m, elems)


def lemma35_check(cs: CompactSet) -> tuple[Fraction, Fraction]:
    """Both sides of the telescoping identity over a compact set."""
    m = cs.modulus
    lhs = prod((Fraction(a + m, a) for a in cs.maxima), start=Fraction(1))
    rhs = -prod(
        (1 - Fraction(m, a) ** 2 for a in cs.positives()), start=Fraction(1)
    )
    return lhs, rhs


def set_E(delta, h11: int, t: int) -> tuple[frozenset[int], frozenset[int]]:
    """Maximal set attached to the largest diagonal hook, and its positive ladder.

    Returns (E, positives) where E collects the cross terms h11 +- Delta_j
    shifted into range plus the three anchor elements, and positives is
    {h11 + m : m a diagonal hook below h11} united with {h11 - m : m not}.
    """
    dset = set(int(h) for h in delta)
    if h11 != max(dset):
        raise ValueError("h11 must be the largest diagonal hook")
    prof = delta_profile(dset, t)
    m = 2 * t + 2
    i0 = None
    for i in range(1, t + 1):
        if prof.values[i - 1] == h11:
            i0 = i
            break
    if i0 is None:
        raise ValueError("h11 is not a class maximum of its own set")
    elems = {h11 - t - 1, h11 - m, 2 * h11 - m}
    for i in range(1, t + 1):
        if i == i0:
            continue
        dj = prof.values[i - 1]
        elems.add(h11 + dj)
        elems.add(h11 - dj - m)
    positives = frozenset(
        h11 + (mm if mm in dset else -mm) for mm in range(1, h11)
    )
    return frozenset(elems), positives


# --- normalization constants for the lattice sums --------------------------

def type_a_constant(t: int) -> Fraction:
    """1 / (1! 2! ... (t-1)!) with sign (-1)^((t-1)/2); odd t only."""
    if t < 3 or t % 2 == 0:
        raise ValueError("odd t >= 3 required")
    return Fraction((-1) ** ((t - 1) // 2), prod(factorial(k) for k in range(1, t)))


def type_c_constant(t: int) -> Fraction:
    """1 / (1! 3! ... (2t-1)!) with sign (-1)^floor(t/2).

    Equivalently the reciprocal of prod(i) * prod_{i<j}(i^2 - j^2), which is
    how the value is pinned in the tests.
    """
    if t < 1:
        raise ValueError("t >= 1 required")
    return Fraction((-1) ** (t // 2), prod(factorial(2 * k - 1) for k in range(1, t + 1)))


def type_b_constant(t: int) -> Fraction:
    """Type-C constant scaled by 2^(t(t-1)): reciprocal of the minimal term."""
    if t < 3:
        raise ValueError("t >= 3 required")
    return type_c_constant(t) / 2 ** (t * (t - 1))


def type_bc_constant(t: int) -> Fraction:
    """1 / (2^(t(t-1)) * 2! 4! ... (2t-2)!): reciprocal of the minimal term."""
    if t < 1:
        raise ValueError("t >= 1 required")
    return Fraction(1, 2 ** (t * (t - 1)) * prod(factorial(2 * k) for k in range(1, t)))


def pair_vector_product(vector: PairVector) -> int:
    """prod(v_i) * prod_{i<j}(v_i^2 - v_j^2) for v_i = (2t+2) n_i + i."""
    t = vector.t
    v = [(2 * t + 2) * n + i for i, n in enumerate(vector.components, start=1)]
    out = prod(v)
    for i in range(t):
        for j in range(i + 1, t):
            out *= v[i] * v[i] - v[j] * v[j]
    return out


def delta_weight_product(delta, t) -> Fraction:
    """Hook-ladder product over a diagonal-hook set at numeric t.

    prod over h of (1 - (2t+2)/h)(1 - (t+1)/h) * prod_{j<h}(1 - ((2t+2)/(h + tau_j j))^2)
    with tau_j = +1 exactly when j is itself a diagonal hook.
    """
    dset = set(int(h) for h in delta)
    tt = Fraction(t)
    out = Fraction(1)
    for h in dset:
        out *= (1 - (2 * tt + 2) / h) * (1 - (tt + 1) / h)
        for j in range(1, h):
            denom = h + (j if j in dset else -j)
            out *= 1 - ((2 * tt + 2) / denom) ** 2
    return out


def lemma38_check(lam: Partition, mu: Partition, t: int) -> tuple[Fraction, Fraction]:
    """Vector-side product vs hook-ladder product for a core pair at numeric t."""
    from .partitions import merged_principal_hooks

    vector = varphi(lam, mu, t)
    lhs = Fraction(pair_vector_product(vector))
    sign = lam.durfee_sign().sign * mu.durfee_sign().sign
    delta = merged_principal_hooks(lam, mu)
    rhs = Fraction(sign) / type_c_constant(t) * delta_weight_product(delta, t)
    return lhs, rhs
