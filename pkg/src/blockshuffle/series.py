"""Truncated one-variable power series with exact rational coefficients."""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from math import factorial


class FormalSeries:
    """Coefficients a_0 .. a_D of a power series, everything above x^D discarded.

    Series used as Psi_f / f_bullet arguments have a_0 = 0; general series
    (e.g. Poincare series) are allowed for arithmetic.
    """

    __slots__ = ("_c", "degree")

    def __init__(self, coeffs: Iterable[Fraction | int] | Mapping[int, Fraction | int], degree: int | None = None):
        if isinstance(coeffs, Mapping):
            top = max(coeffs, default=0)
            degree = top if degree is None else degree
            c = [Fraction(0)] * (degree + 1)
            for k, v in coeffs.items():
                if k < 0:
                    raise ValueError("negative degree")
                if k <= degree:
                    c[k] = Fraction(v)
        else:
            c = [Fraction(v) for v in coeffs]
            if degree is None:
                degree = len(c) - 1
            c = (c + [Fraction(0)] * (degree + 1))[: degree + 1]
        if degree < 0:
            raise ValueError("degree bound must be >= 0")
        self._c = c
        self.degree = degree

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k <= self.degree:
            return self._c[k]
        if k < 0:
            raise IndexError(k)
        raise IndexError(f"coefficient {k} is beyond the truncation degree {self.degree}")

    def c(self, k: int) -> Fraction:
        return self[k]

    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Nonzero coefficients by degree."""
        return {k: v for k, v in enumerate(self._c) if v}

    def as_list(self) -> list[Fraction]:
        return list(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        d = min(self.degree, other.degree)
        return self._c[: d + 1] == other._c[: d + 1]

    def __repr__(self) -> str:
        return f"FormalSeries({self.coeffs}, degree={self.degree})"

    def truncate(self, degree: int) -> FormalSeries:
        return FormalSeries(self._c[: degree + 1], degree)

    # -- ring operations --------------------------------------------------------
    def _pad(self, other: FormalSeries) -> int:
        return min(self.degree, other.degree)

    def __add__(self, other: FormalSeries) -> FormalSeries:
        d = self._pad(other)
        return FormalSeries([self._c[k] + other._c[k] for k in range(d + 1)], d)

    def __sub__(self, other: FormalSeries) -> FormalSeries:
        d = self._pad(other)
        return FormalSeries([self._c[k] - other._c[k] for k in range(d + 1)], d)

    def __neg__(self) -> FormalSeries:
        return FormalSeries([-v for v in self._c], self.degree)

    def __mul__(self, other) -> FormalSeries:
        if not isinstance(other, FormalSeries):
            return FormalSeries([v * other for v in self._c], self.degree)
        d = self._pad(other)
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self._c[: d + 1]):
            if a:
                for j in range(d + 1 - i):
                    out[i + j] += a * other._c[j]
        return FormalSeries(out, d)

    __rmul__ = __mul__

    def reciprocal(self) -> FormalSeries:
        if not self._c[0]:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv0 = 1 / self._c[0]
        out = [inv0]
        for n in range(1, self.degree + 1):
            s = sum(self._c[k] * out[n - k] for k in range(1, n + 1))
            out.append(-s * inv0)
        return FormalSeries(out, self.degree)

    def __truediv__(self, other) -> FormalSeries:
        if isinstance(other, FormalSeries):
            return self * other.reciprocal()
        return FormalSeries([v / other for v in self._c], self.degree)

    def derivative(self) -> FormalSeries:
        return FormalSeries([k * self._c[k] for k in range(1, self.degree + 1)], max(self.degree - 1, 0))

    def integral(self) -> FormalSeries:
        """Antiderivative with zero constant term; gains one degree of precision."""
        return FormalSeries([0] + [v / (k + 1) for k, v in enumerate(self._c)], self.degree + 1)

    def compose(self, g: FormalSeries) -> FormalSeries:
        """self(g(x)); requires g(0) = 0."""
        if g._c[0]:
            raise ValueError("inner series must have zero constant term")
        d = self._pad(g)
        result = FormalSeries([self._c[d]], d)
        for k in range(d - 1, -1, -1):
            result = result * g + FormalSeries([self._c[k]], d)
        return result

    def compose_inverse(self) -> FormalSeries:
        return series_compose_inverse(self)

    def is_invertible(self) -> bool:
        return self._c[0] == 0 and self.degree >= 1 and self._c[1] != 0


def identity_series(degree: int) -> FormalSeries:
    return FormalSeries({1: 1}, degree)


def _exp_like(degree: int, parity: int | None) -> FormalSeries:
    return FormalSeries(
        [Fraction(1, factorial(k)) if parity is None or k % 2 == parity else 0 for k in range(degree + 1)],
        degree,
    )


def series_exp(degree: int) -> FormalSeries:
    return _exp_like(degree, None)


def series_sinh(degree: int) -> FormalSeries:
    return _exp_like(degree, 1)


def series_cosh(degree: int) -> FormalSeries:
    return _exp_like(degree, 0)


def series_tanh(degree: int) -> FormalSeries:
    return series_sinh(degree) / series_cosh(degree)


def series_atanh(degree: int) -> FormalSeries:
    # integrate 1/(1 - x^2)
    one_minus_x2 = FormalSeries({0: 1, 2: -1}, max(degree - 1, 0))
    return one_minus_x2.reciprocal().integral().truncate(degree)


def series_expm1(degree: int) -> FormalSeries:
    s = series_exp(degree)
    return s - FormalSeries([1], degree)


def series_log1p(degree: int) -> FormalSeries:
    one_plus_x = FormalSeries({0: 1, 1: 1}, max(degree - 1, 0))
    return one_plus_x.reciprocal().integral().truncate(degree)


SERIES = {
    "tanh": series_tanh,
    "atanh": series_atanh,
    "exp": series_expm1,
    "expm1": series_expm1,
    "log": series_log1p,
    "log1p": series_log1p,
    "identity": identity_series,
}


def named_series(name: str, degree: int) -> FormalSeries:
    try:
        return SERIES[name](degree)
    except KeyError:
        raise ValueError(f"unknown series {name!r}; expected one of {sorted(SERIES)}") from None


def series_compose_inverse(f: FormalSeries) -> FormalSeries:
    """The compositional inverse g with f(g(x)) = x up to f's truncation degree."""
    if f.degree < 1 or f[0] != 0:
        raise ValueError("series must have zero constant term and degree >= 1")
    c1 = f[1]
    if not c1:
        raise ValueError("series with c_1 = 0 has no compositional inverse")
    d = f.degree
    b = [Fraction(0), 1 / c1]
    for n in range(2, d + 1):
        trial = FormalSeries(b + [Fraction(0)], n)
        residual = f.truncate(n).compose(trial)[n]
        b.append(-residual / c1)
    return FormalSeries(b, d)
