"""Integer partitions and their Ferrers-diagram statistics.

Conventions used throughout the package (French convention, row 1 at the
bottom): the box (i, j) sits in row i, column j; a box is *strictly above
the diagonal* when i > j, and its hook sign ``eps`` is -1 there and +1
everywhere else.  The Durfee length D is the side of the largest square
inside the diagram, and the diagram sign is (-1)^D.

All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HookStat:
    """Hook data of one box: coordinates, length, and diagonal sign."""

    i: int
    j: int
    h: int
    eps: int
    on_diagonal: bool

    def to_record(self) -> dict:
        return {"i": self.i, "j": self.j, "h": self.h, "eps": self.eps}


@dataclass(frozen=True)
class PrincipalProfile:
    """Diagonal hook lengths, Durfee length, and the sign (-1)^D."""

    delta: tuple[int, ...]
    durfee: int
    sign: int


@dataclass(frozen=True)
class PartitionFlags:
    is_self_conjugate: bool
    is_doubled_distinct: bool
    is_t_core: bool | None


class Partition:
    """A non-increasing tuple of positive parts with cached weight."""

    __slots__ = ("parts", "weight")

    def __init__(self, parts=()):
        cleaned = tuple(int(p) for p in parts)
        for idx, p in enumerate(cleaned):
            if p < 1:
                raise ValueError(f"part {p} at index {idx} is not positive")
            if idx and cleaned[idx - 1] < p:
                raise ValueError(
                    f"parts must be non-increasing: index {idx} has {p} after {cleaned[idx - 1]}"
                )
        object.__setattr__(self, "parts", cleaned)
        object.__setattr__(self, "weight", sum(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return (self.weight, self.parts) < (other.weight, other.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def to_json(self) -> list[int]:
        return list(self.parts)

    # --- diagram geometry ------------------------------------------------

    def conjugate(self) -> "Partition":
        parts = self.parts
        if not parts:
            return Partition()
        cols = [0] * parts[0]
        for p in parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def hook(self, i: int, j: int, conj: "Partition | None" = None) -> int:
        if not self.contains(i, j):
            raise ValueError(f"box ({i},{j}) is outside the diagram")
        conj = conj or self.conjugate()
        return self.parts[i - 1] - j + conj.parts[j - 1] - i + 1

    def hook_lengths(self) -> dict[tuple[int, int], HookStat]:
        """Hook statistics of every box, keyed by (row, column)."""
        conj = self.conjugate()
        out: dict[tuple[int, int], HookStat] = {}
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                h = row - j + conj.parts[j - 1] - i + 1
                out[(i, j)] = HookStat(i, j, h, -1 if i > j else 1, i == j)
        return out

    def hook_multiset(self) -> list[int]:
        conj = self.conjugate()
        hooks = []
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                hooks.append(row - j + conj.parts[j - 1] - i + 1)
        return sorted(hooks)

    def durfee(self) -> int:
        d = 0
        for i, p in enumerate(self.parts, start=1):
            if p >= i:
                d = i
            else:
                break
        return d

    def principal_hooks(self) -> tuple[int, ...]:
        """Hook lengths of the diagonal boxes (i, i), strictly decreasing."""
        conj = self.conjugate()
        return tuple(
            self.parts[i - 1] - i + conj.parts[i - 1] - i + 1
            for i in range(1, self.durfee() + 1)
        )

    def durfee_sign(self) -> PrincipalProfile:
        delta = self.principal_hooks()
        d = len(delta)
        return PrincipalProfile(delta, d, -1 if d % 2 else 1)

    # --- structural predicates -------------------------------------------

    def is_self_conjugate(self) -> bool:
        return self.parts == self.conjugate().parts

    def is_doubled_distinct(self) -> bool:
        conj = self.conjugate()
        return all(
            self.parts[i] == conj.parts[i] + 1 for i in range(self.durfee())
        )

    def is_t_core(self, t: int) -> bool:
        if t < 1:
            raise ValueError("modulus must be >= 1")
        return not self.hooks_div_t(t)

    def hooks_div_t(self, t: int) -> list[HookStat]:
        """Hook statistics whose length is a multiple of t (all, for t=1)."""
        if t < 1:
            raise ValueError("modulus must be >= 1")
        return [s for s in self.hook_lengths().values() if s.h % t == 0]

    # --- ribbon removal ---------------------------------------------------

    def remove_ribbon(self, i: int, j: int) -> "Partition":
        """Remove the border ribbon of the box (i, j)."""
        conj = self.conjugate()
        leg = conj.parts[j - 1] - i
        parts = list(self.parts)
        for r in range(i, i + leg):
            parts[r - 1] = parts[r] - 1
        parts[i + leg - 1] = j - 1
        return Partition([p for p in parts if p > 0])

    def t_core(self, t: int) -> "Partition":
        """Remove length-t ribbons from the diagram until none remain.

        Works directly on the Ferrers diagram (the word/abacus route in
        ``words`` is the independent implementation used to cross-check).
        """
        if t < 2:
            raise ValueError("ribbon length must be >= 2")
        current = self
        while True:
            conj = current.conjugate()
            target = None
            for i, row in enumerate(current.parts, start=1):
                for j in range(1, row + 1):
                    if row - j + conj.parts[j - 1] - i + 1 == t:
                        target = (i, j)
                        break
                if target:
                    break
            if target is None:
                return current
            nxt = current.remove_ribbon(*target)
            if nxt.weight != current.weight - t:
                raise AssertionError("ribbon removal lost the wrong number of boxes")
            current = nxt

    # --- Frobenius coordinates --------------------------------------------

    def to_frobenius(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Arm and leg lengths of the diagonal boxes."""
        conj = self.conjugate()
        d = self.durfee()
        arms = tuple(self.parts[i] - (i + 1) for i in range(d))
        legs = tuple(conj.parts[i] - (i + 1) for i in range(d))
        return arms, legs

    @classmethod
    def from_frobenius(cls, arms, legs) -> "Partition":
        arms = tuple(arms)
        legs = tuple(legs)
        if len(arms) != len(legs):
            raise ValueError("arm and leg lists must have equal length")
        d = len(arms)
        for seq in (arms, legs):
            if any(seq[i] <= seq[i + 1] for i in range(d - 1)):
                raise ValueError("Frobenius coordinates must strictly decrease")
            if any(v < 0 for v in seq):
                raise ValueError("Frobenius coordinates must be nonnegative")
        parts = [arms[i] + i + 1 for i in range(d)]
        for row in range(d + 1, (legs[0] + 1 if d else 0) + 1):
            width = sum(1 for i in range(d) if legs[i] + i + 1 >= row)
            if width:
                parts.append(width)
        return cls(parts)

    @classmethod
    def sc_from_principal_hooks(cls, delta) -> "Partition":
        """The self-conjugate partition with the given (odd) diagonal hooks."""
        delta = tuple(sorted(delta, reverse=True))
        if any(h % 2 == 0 or h < 1 for h in delta):
            raise ValueError("self-conjugate principal hooks must be odd")
        arms = tuple((h - 1) // 2 for h in delta)
        return cls.from_frobenius(arms, arms)

    @classmethod
    def dd_from_principal_hooks(cls, delta) -> "Partition":
        """The doubled-distinct partition with the given (even) diagonal hooks."""
        delta = tuple(sorted(delta, reverse=True))
        if any(h % 2 or h < 2 for h in delta):
            raise ValueError("doubled-distinct principal hooks must be even")
        arms = tuple(h // 2 for h in delta)
        legs = tuple(h // 2 - 1 for h in delta)
        return cls.from_frobenius(arms, legs)


def classify(lam: Partition, t: int | None = None) -> PartitionFlags:
    return PartitionFlags(
        is_self_conjugate=lam.is_self_conjugate(),
        is_doubled_distinct=lam.is_doubled_distinct(),
        is_t_core=lam.is_t_core(t) if t is not None else None,
    )


def dd_double(mu0: Partition) -> Partition:
    """Shift a distinct-part partition and reflect it into its double."""
    parts = mu0.parts
    if any(parts[i] == parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be distinct")
    if not parts:
        return Partition()
    return Partition.dd_from_principal_hooks(tuple(2 * p for p in parts))


def dd_undouble(mu: Partition) -> Partition:
    if not mu.is_doubled_distinct():
        raise ValueError(f"{mu!r} is not doubled distinct")
    d = mu.durfee()
    return Partition(tuple(mu.parts[i] - (i + 1) for i in range(d)))


def dd_symmetry_check(mu: Partition) -> bool:
    """Check the three hook symmetries of a doubled-distinct diagram."""
    if not mu.is_doubled_distinct():
        raise ValueError(f"{mu!r} is not doubled distinct")
    d = mu.durfee()
    conj = mu.conjugate()
    hook = lambda i, j: mu.hook(i, j, conj)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if hook(i, j) != hook(j, i):
                return False
    for i in range(1, d + 1):
        if hook(i, i) != 2 * hook(i, d + 1):
            return False
    for i in range(d + 1, len(mu.parts) + 1):
        for j in range(1, min(d, mu.parts[i - 1]) + 1):
            if hook(i, j) != hook(j, i + 1):
                return False
    return True


def merged_principal_hooks(lam: Partition, mu: Partition) -> tuple[int, ...]:
    """Union of the diagonal hooks of a self-conjugate / doubled-distinct pair."""
    if not lam.is_self_conjugate():
        raise ValueError(f"{lam!r} is not self-conjugate")
    if not mu.is_doubled_distinct():
        raise ValueError(f"{mu!r} is not doubled distinct")
    return tuple(sorted(lam.principal_hooks() + mu.principal_hooks(), reverse=True))


def pair_to_nu(lam: Partition, mu: Partition) -> Partition:
    """Merge an SC/DD pair into the doubled-distinct partition with doubled hooks."""
    delta = merged_principal_hooks(lam, mu)
    if not delta:
        return Partition()
    return Partition.dd_from_principal_hooks(tuple(2 * h for h in delta))


def nu_to_pair(nu: Partition) -> tuple[Partition, Partition]:
    """Split a doubled-distinct partition back into its SC/DD pair."""
    if not nu.is_doubled_distinct():
        raise ValueError(f"{nu!r} is not doubled distinct")
    halves = [h // 2 for h in nu.principal_hooks()]
    odds = [h for h in halves if h % 2]
    evens = [h for h in halves if h % 2 == 0]
    lam = Partition.sc_from_principal_hooks(odds) if odds else Partition()
    mu = Partition.dd_from_principal_hooks(evens) if evens else Partition()
    return lam, mu
