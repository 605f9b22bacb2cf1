"""Exact truncated power series in x over rational or polynomial coefficients.

Coefficients are either `fractions.Fraction` (ring ``QQ``) or sparse
multivariate polynomials with Fraction coefficients (``PolynomialRing``).
All arithmetic is exact; nothing here ever touches floating point.

A series of order N stores coefficients for x^0 .. x^N and never reads or
writes beyond that index.  Symbolic exponents are handled through
``f ** s := exp(s * log f)``, which is exact on truncations because log/exp
only divide by integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class MultiPoly:
    """Sparse polynomial in a fixed ordered tuple of symbols over Fraction.

    ``terms`` maps exponent tuples to nonzero Fractions; the zero polynomial
    has an empty mapping.
    """

    __slots__ = ("symbols", "terms")

    def __init__(self, symbols: tuple[str, ...], terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.symbols = tuple(symbols)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            width = len(self.symbols)
            for exps, coeff in terms.items():
                if len(exps) != width:
                    raise ValueError(f"exponent tuple {exps!r} does not match symbols {self.symbols!r}")
                c = Fraction(coeff)
                if c:
                    clean[tuple(int(e) for e in exps)] = c
        self.terms = clean

    @classmethod
    def constant(cls, symbols: tuple[str, ...], value: Scalar) -> "MultiPoly":
        value = Fraction(value)
        if not value:
            return cls(symbols)
        return cls(symbols, {(0,) * len(symbols): value})

    @classmethod
    def variable(cls, symbols: tuple[str, ...], name: str, power: int = 1) -> "MultiPoly":
        if name not in symbols:
            raise ValueError(f"unknown symbol {name!r} (have {symbols!r})")
        exps = tuple(power if s == name else 0 for s in symbols)
        return cls(symbols, {exps: Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        """The constant coefficient; fails if any symbol actually occurs."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.symbols != self.symbols:
                raise ValueError(f"symbol mismatch: {self.symbols!r} vs {other.symbols!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.symbols, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return MultiPoly(self.symbols, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.symbols, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return MultiPoly(self.symbols)
            return MultiPoly(self.symbols, {e: c * q for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, Fraction(0)) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MultiPoly(self.symbols, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("MultiPoly powers must be nonnegative integers")
        result = MultiPoly.constant(self.symbols, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.symbols, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.symbols == other.symbols and self.terms == other.terms

    def __hash__(self):
        return hash((self.symbols, frozenset(self.terms.items())))

    def substitute(self, assignments: Mapping[str, Scalar]):
        """Evaluate some symbols at Fractions.

        Returns a MultiPoly over the remaining symbols, or a Fraction when
        every symbol has been assigned.
        """
        for name in assignments:
            if name not in self.symbols:
                raise ValueError(f"unknown symbol {name!r}")
        keep = tuple(s for s in self.symbols if s not in assignments)
        values = {s: Fraction(v) for s, v in assignments.items()}
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            c = coeff
            rest = []
            for sym, e in zip(self.symbols, exps):
                if sym in values:
                    c *= values[sym] ** e
                else:
                    rest.append(e)
            key = tuple(rest)
            s = acc.get(key, Fraction(0)) + c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        if keep:
            return MultiPoly(keep, acc)
        return acc.get((), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # canonical order: total degree descending, then exponent tuple descending
        keys = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        chunks: list[str] = []
        for exps in keys:
            coeff = self.terms[exps]
            monos = [
                sym if e == 1 else f"{sym}^{e}"
                for sym, e in zip(self.symbols, exps)
                if e
            ]
            body = "*".join(monos)
            if not body:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = body
            else:
                text = f"{abs(coeff)}*{body}"
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, text))  # type: ignore[arg-type]
        first_sign, first_text = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in chunks[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


class RationalRing:
    """Coefficient ring of exact rationals."""

    name = "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, MultiPoly):
            return value.constant_value()
        return Fraction(value)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PolynomialRing:
    """Ring of MultiPoly coefficients over a fixed symbol tuple."""

    def __init__(self, symbols: Iterable[str]):
        self.symbols = tuple(symbols)
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbols")
        self.name = "QQ[" + ",".join(self.symbols) + "]"

    @property
    def zero(self) -> MultiPoly:
        return MultiPoly(self.symbols)

    @property
    def one(self) -> MultiPoly:
        return MultiPoly.constant(self.symbols, 1)

    def coerce(self, value) -> MultiPoly:
        if isinstance(value, MultiPoly):
            if value.symbols != self.symbols:
                raise ValueError(f"symbol mismatch: {value.symbols!r} vs {self.symbols!r}")
            return value
        return MultiPoly.constant(self.symbols, value)

    def variable(self, name: str, power: int = 1) -> MultiPoly:
        return MultiPoly.variable(self.symbols, name, power)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolynomialRing) and other.symbols == self.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return self.name


QQ = RationalRing()


class PowerSeries:
    """Truncated series sum_{n<=N} c_n x^n with exact coefficients."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order: int, coeffs: Iterable | None = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.ring = ring
        self.order = order
        if coeffs is None:
            self.coeffs = [ring.zero for _ in range(order + 1)]
        else:
            data = [ring.coerce(c) for c in coeffs]
            if len(data) > order + 1:
                raise ValueError("more coefficients than the order allows")
            data.extend(ring.zero for _ in range(order + 1 - len(data)))
            self.coeffs = data

    @classmethod
    def zeros(cls, ring, order: int) -> "PowerSeries":
        return cls(ring, order)

    @classmethod
    def one(cls, ring, order: int) -> "PowerSeries":
        s = cls(ring, order)
        s.coeffs[0] = ring.one
        return s

    @classmethod
    def monomial(cls, ring, order: int, exponent: int, coeff=1) -> "PowerSeries":
        s = cls(ring, order)
        if exponent <= order:
            s.coeffs[exponent] = ring.coerce(coeff)
        return s

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def _check_compatible(self, other: "PowerSeries") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries(self.ring, self.order, [other])
        self._check_compatible(other)
        out = PowerSeries(self.ring, self.order)
        out.coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return out

    __radd__ = __add__

    def __neg__(self):
        out = PowerSeries(self.ring, self.order)
        out.coeffs = [-a for a in self.coeffs]
        return out

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries(self.ring, self.order, [other])
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        self._check_compatible(other)
        N = self.order
        zero = self.ring.zero
        out = [zero for _ in range(N + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(N + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        result = PowerSeries(self.ring, N)
        result.coeffs = out
        return result

    __rmul__ = __mul__

    def scale(self, factor) -> "PowerSeries":
        c = self.ring.coerce(factor)
        out = PowerSeries(self.ring, self.order)
        out.coeffs = [a * c if a else self.ring.zero for a in self.coeffs]
        return out

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by x^k (coefficients beyond the order fall off)."""
        if k < 0:
            raise ValueError("negative shifts are not defined on truncations")
        out = PowerSeries(self.ring, self.order)
        for n in range(self.order + 1 - k):
            out.coeffs[n + k] = self.coeffs[n]
        return out

    def invert(self) -> "PowerSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        a0 = self.coeffs[0]
        if isinstance(a0, MultiPoly):
            lead = a0.constant_value()  # raises unless constant
        else:
            lead = a0
        if not lead:
            raise ValueError("constant term is not invertible")
        inv0 = self.ring.coerce(Fraction(1) / Fraction(lead))
        N = self.order
        out = [self.ring.zero for _ in range(N + 1)]
        out[0] = inv0
        for n in range(1, N + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a:
                    b = out[n - k]
                    if b:
                        acc = acc + a * b
            out[n] = -(acc * inv0) if acc else self.ring.zero
        result = PowerSeries(self.ring, N)
        result.coeffs = out
        return result

    def exp(self) -> "PowerSeries":
        """exp of a series with zero constant term."""
        if self.coeffs[0]:
            raise ValueError("exp needs constant term 0")
        N = self.order
        out = [self.ring.zero for _ in range(N + 1)]
        out[0] = self.ring.one
        for n in range(1, N + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a:
                    b = out[n - k]
                    if b:
                        acc = acc + (a * k) * b
            out[n] = acc * Fraction(1, n) if acc else self.ring.zero
        result = PowerSeries(self.ring, N)
        result.coeffs = out
        return result

    def log(self) -> "PowerSeries":
        """log of a series with constant term 1."""
        if self.coeffs[0] != self.ring.one:
            raise ValueError("log needs constant term 1")
        N = self.order
        out = [self.ring.zero for _ in range(N + 1)]
        for n in range(1, N + 1):
            acc = self.ring.zero
            for k in range(1, n):
                b = out[k]
                if b:
                    a = self.coeffs[n - k]
                    if a:
                        acc = acc + (b * k) * a
            out[n] = self.coeffs[n] - acc * Fraction(1, n) if acc else self.coeffs[n]
        result = PowerSeries(self.ring, N)
        result.coeffs = out
        return result

    def pow_sym(self, exponent) -> "PowerSeries":
        """f ** s = exp(s * log f) for a numeric or polynomial exponent s."""
        s = self.ring.coerce(exponent)
        if not s:
            return PowerSeries.one(self.ring, self.order)
        return (self.log().scale(s)).exp()

    def substitute(self, assignments: Mapping[str, Scalar]) -> "PowerSeries":
        """Evaluate ring symbols at rationals, shrinking the coefficient ring."""
        if not isinstance(self.ring, PolynomialRing):
            raise ValueError("substitute only applies to polynomial coefficients")
        keep = tuple(s for s in self.ring.symbols if s not in assignments)
        target = PolynomialRing(keep) if keep else QQ
        out = PowerSeries(target, self.order)
        out.coeffs = [
            target.coerce(c.substitute(assignments)) if c else target.zero
            for c in self.coeffs
        ]
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return None  # type: ignore[return-value]

    def first_difference(self, other: "PowerSeries") -> int | None:
        """Smallest exponent where the two series disagree, or None."""
        self._check_compatible(other)
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None

    def to_records(self) -> list[dict]:
        """JSON-friendly dump: nonzero coefficients in exponent order."""
        return [
            {"exponent": n, "coefficient": str(c)}
            for n, c in enumerate(self.coeffs)
            if c
        ]

    def __repr__(self) -> str:
        head = ", ".join(f"x^{n}: {c}" for n, c in enumerate(self.coeffs[:5]) if c)
        return f"PowerSeries(order={self.order}, {head or '0'}, ...)"


def eta_product(factors, order: int, ring=QQ, symbol: str = "y") -> PowerSeries:
    """Product over k >= 1 of (1 - x^{scale*k} * Y^{p*k}) ** e per factor.

    Each factor is a (scale, p, e) triple: a positive x-step ``scale``, an
    exponent step ``p`` for the auxiliary ring variable (0 for pure-x
    factors), and an exponent ``e`` that may be an int, Fraction, or a
    polynomial of the coefficient ring.  The whole product is assembled as
    exp of the accumulated logarithms, which stays exact on truncations.
    """
    log_acc = PowerSeries.zeros(ring, order)
    for scale, ypow, expo in factors:
        if scale < 1:
            raise ValueError("factor scale must be >= 1")
        e = ring.coerce(expo)
        if not e:
            continue
        piece = PowerSeries.zeros(ring, order)
        for k in range(1, order // scale + 1):
            m = 1
            while scale * k * m <= order:
                weight = Fraction(-1, m)
                if ypow:
                    term = MultiPoly.variable(ring.symbols, symbol, ypow * k * m) * weight
                else:
                    term = ring.coerce(weight)
                piece.coeffs[scale * k * m] = piece.coeffs[scale * k * m] + term
                m += 1
        log_acc = log_acc + piece.scale(e)
    return log_acc.exp()


def euler_factor(order: int, ring=QQ) -> PowerSeries:
    """prod_{k>=1} (1 - x^k), truncated."""
    return eta_product([(1, 0, 1)], order, ring)
