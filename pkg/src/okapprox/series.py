"""Truncated complex Taylor series and exact polynomials.

The inner product is linear in the FIRST argument and conjugate-linear
in the second:  <f, g> = sum_k f_k conj(g_k) omega_k.  Every identity in
the package is stated under this convention; with it the reproducing
property of the kernels reads <g, k_w> = g(w).

Truncation policy: a series is trusted through its stored degree and no
further.  Products of two series therefore truncate to the shorter
operand; sums extend to the longer one.  ``tail_bound``, when present,
bounds the l1 mass sum_{k > degree} |a_k| of the discarded true tail
(0.0 marks an exact polynomial, None means no certificate).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .weights import WeightSequence


def _combine_tails(*tails: float | None) -> float | None:
    if any(t is None for t in tails):
        return None
    return float(sum(tails))


def _as_complex_array(coeffs) -> np.ndarray:
    arr = np.array(coeffs, dtype=complex)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("coefficients must form a nonempty 1-d sequence")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class TaylorSeries:
    """Coefficients a_0..a_N of an analytic function, trusted through N."""

    coeffs: np.ndarray
    tail_bound: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_complex_array(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value: complex, degree: int = 0) -> "TaylorSeries":
        c = np.zeros(degree + 1, dtype=complex)
        c[0] = value
        return cls(c, tail_bound=0.0)

    def truncate(self, degree: int) -> "TaylorSeries":
        """Drop coefficients above ``degree`` (folding them into the tail)."""
        if degree >= self.degree:
            return self
        dropped = float(np.sum(np.abs(self.coeffs[degree + 1 :])))
        tail = None if self.tail_bound is None else self.tail_bound + dropped
        return TaylorSeries(self.coeffs[: degree + 1], tail_bound=tail)

    def shift_by_z_power(self, j: int) -> "TaylorSeries":
        """Multiply by z^j at fixed truncation: prepend j zeros, drop the top j."""
        if j < 0:
            raise ValueError("shift must be nonnegative")
        if j == 0:
            return self
        out = np.zeros(len(self.coeffs), dtype=complex)
        out[j:] = self.coeffs[: len(self.coeffs) - j]
        dropped = float(np.sum(np.abs(self.coeffs[len(self.coeffs) - j :])))
        tail = None if self.tail_bound is None else self.tail_bound + dropped
        return TaylorSeries(out, tail_bound=tail)

    def scale(self, factor: complex) -> "TaylorSeries":
        tail = None if self.tail_bound is None else abs(factor) * self.tail_bound
        return TaylorSeries(self.coeffs * factor, tail_bound=tail)

    def evaluate(self, z: complex) -> complex:
        """Horner partial sum; defined on the open unit disk only."""
        if abs(z) >= 1.0:
            raise ValueError(f"evaluation point {z} is outside the open unit disk")
        acc = 0.0 + 0.0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return complex(acc)

    def __add__(self, other: "TaylorSeries") -> "TaylorSeries":
        return add(self, other)

    def __sub__(self, other: "TaylorSeries") -> "TaylorSeries":
        return add(self, other.scale(-1.0))

    def __neg__(self) -> "TaylorSeries":
        return self.scale(-1.0)

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
            "degree": self.degree,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TaylorSeries":
        coeffs = np.array([complex(re, im) for re, im in obj["coeffs"]])
        degree = int(obj.get("degree", len(coeffs) - 1))
        if degree != len(coeffs) - 1:
            raise ValueError("degree field inconsistent with coefficient count")
        return cls(coeffs)


def add(f: TaylorSeries, g: TaylorSeries) -> TaylorSeries:
    """Coefficientwise sum, extended to the longer operand."""
    n = max(len(f.coeffs), len(g.coeffs))
    out = np.zeros(n, dtype=complex)
    out[: len(f.coeffs)] += f.coeffs
    out[: len(g.coeffs)] += g.coeffs
    return TaylorSeries(out, tail_bound=_combine_tails(f.tail_bound, g.tail_bound))


def multiply(f: TaylorSeries, g: TaylorSeries, degree: int | None = None) -> TaylorSeries:
    """Cauchy product, truncated to min(deg f, deg g) unless overridden.

    Passing ``degree`` above the default min is only sound when the
    shorter operand is an exact polynomial (its missing high-order
    coefficients are genuinely zero); callers owning that knowledge may
    override, up to the longer operand's degree.
    """
    default = min(f.degree, g.degree)
    if degree is None:
        degree = default
    if degree > max(f.degree, g.degree):
        raise ValueError("cannot extend a product beyond both operands")
    full = np.convolve(f.coeffs, g.coeffs)
    out = full[: degree + 1]
    if len(out) < degree + 1:
        out = np.pad(out, (0, degree + 1 - len(out)))
    tail = None
    if f.tail_bound == 0.0 and g.tail_bound == 0.0 and degree >= f.degree + g.degree:
        tail = 0.0
    return TaylorSeries(out, tail_bound=tail)


def inner_product(f: TaylorSeries, g: TaylorSeries, w: WeightSequence) -> complex:
    """<f, g> = sum a_k conj(b_k) omega_k over the common trusted range."""
    n = min(len(f.coeffs), len(g.coeffs))
    om = w.array(n - 1)
    return complex(np.sum(f.coeffs[:n] * np.conj(g.coeffs[:n]) * om))


def norm(f: TaylorSeries, w: WeightSequence) -> float:
    """Weighted norm; rejects a self inner product with a real imaginary part."""
    ip = inner_product(f, f, w)
    if abs(ip.imag) > 1e-14 * max(ip.real, 1e-300):
        raise ArithmeticError(f"self inner product {ip} is not numerically real")
    return float(np.sqrt(ip.real))


def series_exp(h: TaylorSeries) -> TaylorSeries:
    """exp(h) as a truncated series via the derivative recurrence.

    g_0 = exp(h_0) and k g_k = sum_{m=1..k} m h_m g_{k-m}; a nonzero
    constant term only scales the result by exp(h_0).
    """
    n = h.degree
    hc = h.coeffs
    g = np.zeros(n + 1, dtype=complex)
    g[0] = np.exp(hc[0])
    mh = np.arange(n + 1) * hc
    for k in range(1, n + 1):
        g[k] = np.dot(mh[1 : k + 1], g[k - 1 :: -1][:k]) / k
    return TaylorSeries(g)


@dataclass(frozen=True)
class Polynomial:
    """Exact polynomial; trailing zero coefficients are normalized away."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a nonempty 1-d sequence")
        last = len(arr)
        while last > 1 and arr[last - 1] == 0:
            last -= 1
        arr = arr[:last].copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return complex(acc)

    def as_series(self, degree: int | None = None) -> TaylorSeries:
        degree = self.degree if degree is None else degree
        if degree < self.degree:
            raise ValueError("cannot represent a polynomial below its degree")
        out = np.zeros(degree + 1, dtype=complex)
        out[: len(self.coeffs)] = self.coeffs
        return TaylorSeries(out, tail_bound=0.0)

    def multiply_series(self, f: TaylorSeries) -> TaylorSeries:
        """Exact-polynomial times series, valid through f's full degree."""
        out = np.convolve(self.coeffs, f.coeffs)[: f.degree + 1]
        if len(out) < f.degree + 1:
            out = np.pad(out, (0, f.degree + 1 - len(out)))
        tail = None
        if f.tail_bound is not None:
            # (pf)_k for k > N involves f_m with m > N - deg p; bound those
            # known coefficients explicitly and the unknown ones by f's tail.
            absf = np.abs(f.coeffs)
            tail = 0.0
            for i, p in enumerate(np.abs(self.coeffs)):
                known = float(np.sum(absf[max(0, f.degree + 1 - i) :])) if i > 0 else 0.0
                tail += p * (known + f.tail_bound)
        return TaylorSeries(out, tail_bound=tail)
