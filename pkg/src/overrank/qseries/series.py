"""Truncated power series in q over an exact (or complex) coefficient ring."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError, RingError


def _unit_inverse(u):
    if isinstance(u, (int, np.integer)):
        if u in (1, -1):
            return int(u)
        raise RingError(f"constant term {u} is not a unit of Z")
    if isinstance(u, complex) or isinstance(u, float):
        if u == 0:
            raise RingError("constant term is zero")
        return 1 / u
    if hasattr(u, "unit_inverse"):
        return u.unit_inverse()
    raise RingError(f"cannot invert constant term {u!r}")


class FormalSeries:
    """sum_{n < trunc} coeffs[n] q**n, exact modulo q**trunc.

    Coefficients sit in a numpy object array so that ring operations
    vectorise over any element type implementing ``+`` and ``*``.
    """

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs, zero=0):
        arr = np.empty(len(coeffs), dtype=object)
        arr[:] = list(coeffs)
        self.coeffs = arr
        self.zero = zero

    @classmethod
    def _wrap(cls, arr: np.ndarray, zero) -> "FormalSeries":
        out = cls.__new__(cls)
        out.coeffs = arr
        out.zero = zero
        return out

    @classmethod
    def constant(cls, value, trunc: int, zero=0) -> "FormalSeries":
        arr = np.empty(trunc, dtype=object)
        arr[:] = [zero] * trunc
        if trunc:
            arr[0] = value
        return cls._wrap(arr, zero)

    @classmethod
    def monomial(cls, value, k: int, trunc: int, zero=0) -> "FormalSeries":
        out = cls.constant(zero, trunc, zero)
        if k < trunc:
            out.coeffs[k] = value
        return out

    @property
    def trunc(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def tolist(self) -> list:
        return list(self.coeffs)

    def _check(self, other: "FormalSeries"):
        if other.trunc != self.trunc:
            raise DomainError(f"truncation mismatch: {self.trunc} vs {other.trunc}")

    def __add__(self, other):
        if isinstance(other, FormalSeries):
            self._check(other)
            return FormalSeries._wrap(self.coeffs + other.coeffs, self.zero)
        out = self.coeffs.copy()
        if len(out):
            out[0] = out[0] + other
        return FormalSeries._wrap(out, self.zero)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries._wrap(-self.coeffs, self.zero)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return FormalSeries._wrap(self.coeffs * other, self.zero)
        self._check(other)
        n = self.trunc
        out = np.empty(n, dtype=object)
        out[:] = [self.zero] * n
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a == self.zero:
                continue
            out[i:] = out[i:] + b[: n - i] * a
        return FormalSeries._wrap(out, self.zero)

    def __rmul__(self, other):
        return FormalSeries._wrap(self.coeffs * other, self.zero)

    def shift(self, k: int) -> "FormalSeries":
        """Multiply by q**k (k >= 0), discarding terms past the truncation."""
        if k < 0:
            raise DomainError("negative q-shifts leave the power-series ring")
        out = np.empty(self.trunc, dtype=object)
        out[:] = [self.zero] * self.trunc
        if k < self.trunc:
            out[k:] = self.coeffs[: self.trunc - k]
        return FormalSeries._wrap(out, self.zero)

    def mul_binomial(self, a, k: int) -> "FormalSeries":
        """Multiply by (1 + a q**k)."""
        out = self.coeffs.copy()
        if k == 0:
            return FormalSeries._wrap(out + out * a, self.zero)
        if k < self.trunc:
            out[k:] = out[k:] + self.coeffs[: self.trunc - k] * a
        return FormalSeries._wrap(out, self.zero)

    def div_binomial(self, a, k: int) -> "FormalSeries":
        """Divide by (1 - a q**k), k >= 1: b[i] = s[i] + a b[i-k]."""
        if k < 1:
            raise DomainError("only q-powers k >= 1 give an invertible binomial")
        out = self.coeffs.copy()
        n = self.trunc
        for start in range(k, n, k):
            stop = min(start + k, n)
            out[start:stop] = out[start:stop] + out[start - k : stop - k] * a
        return FormalSeries._wrap(out, self.zero)

    def inverse(self) -> "FormalSeries":
        """Multiplicative inverse modulo q**trunc; constant term must be a unit."""
        n = self.trunc
        if n == 0:
            return self
        u_inv = _unit_inverse(self.coeffs[0])
        out = np.empty(n, dtype=object)
        out[:] = [self.zero] * n
        out[0] = u_inv
        a = self.coeffs
        for i in range(1, n):
            acc = np.dot(a[1 : i + 1], out[i - 1 :: -1])
            out[i] = -(acc * u_inv)
        return FormalSeries._wrap(out, self.zero)

    def __truediv__(self, other: "FormalSeries") -> "FormalSeries":
        return self * other.inverse()

    def map(self, f, zero=None) -> "FormalSeries":
        return FormalSeries([f(v) for v in self.coeffs], self.zero if zero is None else zero)

    def truncate(self, trunc: int) -> "FormalSeries":
        return FormalSeries._wrap(self.coeffs[:trunc].copy(), self.zero)

    def evaluate(self, q: complex) -> complex:
        acc = 0j
        for v in reversed(self.coeffs):
            acc = acc * q + complex(v)
        return acc

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.trunc == other.trunc and all(x == y for x, y in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        head = ", ".join(repr(v) for v in self.coeffs[:6])
        more = ", ..." if self.trunc > 6 else ""
        return f"FormalSeries([{head}{more}], trunc={self.trunc})"


def pochhammer_series(a, offset: int, trunc: int, n=None, step: int = 1, one=1, zero=0) -> FormalSeries:
    """(a q**offset; q**step)_n truncated at q**trunc.

    The product runs over 0 <= j < n of (1 - a q**(offset + step*j)); with
    ``n=None`` it is the infinite product, which is finite below q**trunc
    provided ``offset + step*j`` eventually exceeds the truncation.
    """
    if trunc < 1:
        raise DomainError("trunc must be >= 1")
    if step < 1 or offset < 0:
        raise DomainError("q-exponents must start nonnegative and grow")
    if n is None:
        n = max(0, -(-(trunc - offset) // step))
    out = FormalSeries.constant(one, trunc, zero)
    for j in range(n):
        e = offset + step * j
        if e >= trunc:
            break
        out = out.mul_binomial(-a, e)
    return out
