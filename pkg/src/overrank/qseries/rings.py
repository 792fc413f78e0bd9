"""Exact coefficient rings for q-series: Laurent polynomials in zeta and Z[zeta_c].

Ring elements are immutable and use the ordinary arithmetic operators, so
they can live inside numpy object arrays. Binary operators return
``NotImplemented`` for unknown operand types so that numpy can broadcast.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from math import gcd

import numpy as np

from ..errors import ConsistencyError, DomainError, RingError


class LaurentPoly:
    """Laurent polynomial sum_k c[k] * zeta**(lo + k) with integer coefficients.

    Stored canonically: no leading or trailing zero coefficients, and the
    zero polynomial has ``lo == 0`` and an empty coefficient tuple.
    """

    __slots__ = ("lo", "c")

    def __init__(self, lo: int = 0, c=()):
        c = [int(v) for v in c]
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        if start == end:
            self.lo, self.c = 0, ()
        else:
            self.lo, self.c = lo + start, tuple(c[start:end])

    @classmethod
    def from_dict(cls, coeffs: dict) -> "LaurentPoly":
        coeffs = {m: v for m, v in coeffs.items() if v}
        if not coeffs:
            return cls()
        lo, hi = min(coeffs), max(coeffs)
        return cls(lo, [coeffs.get(m, 0) for m in range(lo, hi + 1)])

    @classmethod
    def monomial(cls, m: int, coeff: int = 1) -> "LaurentPoly":
        return cls(m, (coeff,))

    @property
    def hi(self) -> int:
        return self.lo + len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, m: int) -> int:
        k = m - self.lo
        return self.c[k] if 0 <= k < len(self.c) else 0

    def to_dict(self) -> dict:
        return {self.lo + k: v for k, v in enumerate(self.c) if v}

    def is_palindromic(self) -> bool:
        return self.c == self.c[::-1] and (not self.c or self.lo == -self.hi)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by zeta**k."""
        return LaurentPoly(self.lo + k, self.c) if self.c else self

    def evaluate(self, zeta: complex) -> complex:
        if not self.c:
            return 0j
        acc = 0j
        for v in reversed(self.c):
            acc = acc * zeta + v
        return acc * zeta ** self.lo

    def substitute(self, w):
        """Evaluate at a ring element ``w`` that is a unit of its ring."""
        if not self.c:
            return w * 0
        winv = w.unit_inverse()
        base = winv ** (-self.lo) if self.lo < 0 else w ** self.lo
        acc = w * 0
        for v in reversed(self.c):
            acc = acc * w + v
        return acc * base

    def unit_inverse(self) -> "LaurentPoly":
        if len(self.c) == 1 and self.c[0] in (1, -1):
            return LaurentPoly(-self.lo, self.c)
        raise RingError(f"{self!r} is not a unit of Z[zeta, 1/zeta]")

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return LaurentPoly(0, (int(other),))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.c:
            return self
        if not self.c:
            return o
        lo = min(self.lo, o.lo)
        hi = max(self.hi, o.hi)
        out = [0] * (hi - lo + 1)
        for k, v in enumerate(self.c):
            out[self.lo - lo + k] += v
        for k, v in enumerate(o.c):
            out[o.lo - lo + k] += v
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.lo, [-v for v in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.c or not o.c:
            return LaurentPoly()
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    out[i + j] += a * b
        return LaurentPoly(self.lo + o.lo, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.unit_inverse() ** (-k)
        out = LaurentPoly(0, (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.lo == o.lo and self.c == o.c

    def __hash__(self):
        return hash((self.lo, self.c))

    def __repr__(self):
        return f"LaurentPoly({self.lo}, {list(self.c)})"

    def __str__(self):
        if not self.c:
            return "0"
        terms = []
        for m, v in self.to_dict().items():
            if m == 0:
                terms.append(str(v))
            else:
                power = "ζ" if m == 1 else f"ζ^{m}"
                terms.append(power if v == 1 else f"{v}{power}")
        return " + ".join(terms)


ZETA = LaurentPoly.monomial(1)


@lru_cache(maxsize=None)
def cyclotomic_poly(c: int) -> tuple:
    """Coefficients (constant term first) of the c-th cyclotomic polynomial."""
    if c < 1:
        raise DomainError("cyclotomic index must be positive")
    # x^c - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (c - 1) + [1]
    for d in range(1, c):
        if c % d == 0:
            num = _exact_divide(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_divide(num: list, den: tuple) -> list:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(quot) - 1, -1, -1):
        coef = num[k + dd]  # den is monic
        quot[k] = coef
        if coef:
            for j, v in enumerate(den):
                num[k + j] -= coef * v
    if any(num[:dd]):
        raise ConsistencyError("cyclotomic division left a remainder")
    return quot


def totient(c: int) -> int:
    return len(cyclotomic_poly(c)) - 1


@lru_cache(maxsize=None)
def _power_table(c: int, upto: int) -> tuple:
    """x**k mod Phi_c as coefficient tuples, for 0 <= k < upto."""
    phi = cyclotomic_poly(c)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1) if d else []
    for _ in range(upto):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [v - top * p for v, p in zip(cur, phi[:d])]
    return tuple(rows)


class CyclotomicInt:
    """Element of Z[zeta_c] = Z[x]/(Phi_c), stored as its reduced coefficients.

    Reduction modulo the monic Phi_c is canonical, so equality of ring
    elements is equality of ``rep`` tuples.
    """

    __slots__ = ("c", "rep")

    def __init__(self, c: int, coeffs=()):
        d = totient(c)
        coeffs = [int(v) for v in coeffs]
        if len(coeffs) > d:
            table = _power_table(c, len(coeffs))
            red = [0] * d
            for k, v in enumerate(coeffs):
                if v:
                    for j, t in enumerate(table[k]):
                        red[j] += v * t
            coeffs = red
        else:
            coeffs = coeffs + [0] * (d - len(coeffs))
        self.c = c
        self.rep = tuple(coeffs)

    @classmethod
    def zeta(cls, c: int, power: int = 1) -> "CyclotomicInt":
        return cls(c, _power_table(c, c)[power % c])

    @classmethod
    def from_int(cls, c: int, v: int) -> "CyclotomicInt":
        return cls(c, [v])

    def _coerce(self, other):
        if isinstance(other, CyclotomicInt):
            if other.c != self.c:
                raise RingError(f"cannot mix Z[zeta_{self.c}] with Z[zeta_{other.c}]")
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return CyclotomicInt(self.c, [int(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInt(self.c, [a + b for a, b in zip(self.rep, o.rep)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.c, [-a for a in self.rep])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInt(self.c, [a - b for a, b in zip(self.rep, o.rep)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = len(self.rep)
        prod = [0] * max(2 * d - 1, 1)
        for i, a in enumerate(self.rep):
            if a:
                for j, b in enumerate(o.rep):
                    prod[i + j] += a * b
        return CyclotomicInt(self.c, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.unit_inverse() ** (-k)
        out = CyclotomicInt.from_int(self.c, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash((self.c, self.rep))

    def __repr__(self):
        return f"CyclotomicInt({self.c}, {list(self.rep)})"

    def is_rational(self) -> bool:
        return not any(self.rep[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ConsistencyError(f"{self!r} is not a rational integer")
        return self.rep[0]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.c)
        acc = 0j
        for v in reversed(self.rep):
            acc = acc * z + v
        return acc

    def galois(self, j: int) -> "CyclotomicInt":
        """Automorphism zeta_c -> zeta_c**j (requires gcd(j, c) == 1)."""
        if gcd(j, self.c) != 1:
            raise DomainError(f"zeta -> zeta^{j} is not an automorphism of Z[zeta_{self.c}]")
        table = _power_table(self.c, self.c)
        out = [0] * len(self.rep)
        for k, v in enumerate(self.rep):
            if v:
                for i, t in enumerate(table[(k * j) % self.c]):
                    out[i] += v * t
        return CyclotomicInt(self.c, out)

    def unit_inverse(self) -> "CyclotomicInt":
        one = CyclotomicInt.from_int(self.c, 1)
        for k in range(self.c):
            w = CyclotomicInt.zeta(self.c, k)
            prod = self * w
            if prod == one:
                return w
            if prod == -one:
                return -w
        raise RingError(f"{self!r} is not a root-of-unity unit")


def embed(x: CyclotomicInt, c: int) -> CyclotomicInt:
    """Embed Z[zeta_d] into Z[zeta_c] (d | c) via zeta_d -> zeta_c**(c/d)."""
    if c % x.c:
        raise DomainError(f"{x.c} does not divide {c}")
    g = c // x.c
    table = _power_table(c, c)
    out = [0] * totient(c)
    for k, v in enumerate(x.rep):
        if v:
            for i, t in enumerate(table[(k * g) % c]):
                out[i] += v * t
    return CyclotomicInt(c, out)


# Ring descriptors. Each supplies the element substituted for zeta together
# with the additive and multiplicative identities.


class LaurentRing:
    name = "laurent"

    def __init__(self):
        self.zeta = ZETA
        self.zeta_inv = LaurentPoly.monomial(-1)
        self.one = LaurentPoly.monomial(0)
        self.zero = LaurentPoly()

    def __repr__(self):
        return "LaurentRing()"


class CyclotomicRing:
    name = "cyclotomic"

    def __init__(self, c: int, power: int = 1):
        if c < 3 or c % 2 == 0:
            raise DomainError(f"cyclotomic ring needs odd c >= 3, got {c}")
        self.c = c
        self.power = power % c
        self.zeta = CyclotomicInt.zeta(c, power)
        self.zeta_inv = CyclotomicInt.zeta(c, -power)
        self.one = CyclotomicInt.from_int(c, 1)
        self.zero = CyclotomicInt.from_int(c, 0)

    def __repr__(self):
        return f"CyclotomicRing({self.c}, power={self.power})"


class ComplexRing:
    name = "complex"

    def __init__(self, z: float):
        self.z = z
        self.zeta = cmath.exp(2j * math.pi * z)
        self.zeta_inv = 1 / self.zeta
        self.one = 1 + 0j
        self.zero = 0j

    def __repr__(self):
        return f"ComplexRing({self.z!r})"


class IntegerRing:
    """zeta = 1: the specialisation that recovers overpartition counts."""

    name = "integer"

    def __init__(self):
        self.zeta = 1
        self.zeta_inv = 1
        self.one = 1
        self.zero = 0

    def __repr__(self):
        return "IntegerRing()"


class IntLinearMap:
    """Integer matrix acting on the last axis of object arrays.

    Used by the vectorised kernels: multiplication by a fixed element of
    Z[zeta_c] and Galois actions are linear on the coefficient vectors.
    """

    def __init__(self, matrix):
        self.matrix = [[int(v) for v in row] for row in matrix]
        n_in = len(self.matrix)
        n_out = len(self.matrix[0]) if n_in else 0
        # out[:, k] = sum_j M[j][k] * in[:, j]
        self.columns = [[(j, self.matrix[j][k]) for j in range(n_in) if self.matrix[j][k]] for k in range(n_out)]

    def __call__(self, block: np.ndarray) -> np.ndarray:
        out = np.zeros(block.shape[:-1] + (len(self.columns),), dtype=object)
        for k, terms in enumerate(self.columns):
            acc = None
            for j, v in terms:
                col = block[..., j]
                if v == 1:
                    term = col
                elif v == -1:
                    term = -col
                else:
                    term = col * v
                acc = term if acc is None else acc + term
            if acc is not None:
                out[..., k] = acc
        return out

    @classmethod
    def multiplication(cls, x: CyclotomicInt) -> "IntLinearMap":
        d = totient(x.c)
        rows = []
        for j in range(d):
            basis = CyclotomicInt(x.c, [0] * j + [1])
            rows.append((basis * x).rep)
        return cls(rows)

    @classmethod
    def galois(cls, c: int, j: int) -> "IntLinearMap":
        d = totient(c)
        return cls([CyclotomicInt(c, [0] * k + [1]).galois(j).rep for k in range(d)])

    @classmethod
    def embedding(cls, d: int, c: int) -> "IntLinearMap":
        return cls([embed(CyclotomicInt(d, [0] * k + [1]), c).rep for k in range(totient(d))])
