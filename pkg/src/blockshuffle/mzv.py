"""Numerical evaluation of multiple zeta values.

Convention: zeta(n_1, ..., n_r) = sum over 1 <= k_1 < ... < k_r of
1 / (k_1^n_1 ... k_r^n_r), convergent iff n_r >= 2.  The empty index is 1.

Two independent routes:

* ``direct``: nested partial sums up to k_r <= N with a rigorous tail bound.
  Cheap, but the tail decays only like log(N)^a / N^(n_r - 1).
* ``convolution`` (default): split the iterated integral over [0, 1] at 1/2.
  Both halves are nested sums weighted by 2^-k, so a few hundred terms give
  full double precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MZVIndex = tuple[int, ...]

METHODS = ("convolution", "direct")


class DivergentIndexError(ValueError):
    pass


class PrecisionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class EvalParams:
    N: int = 10**6
    method: str = "convolution"
    # conservative: tail bounds are upper bounds, never estimates
    tail_policy: str = "conservative"

    def __post_init__(self):
        if self.N < 10:
            raise ValueError("summation cutoff N must be >= 10")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.tail_policy != "conservative":
            raise ValueError("only the conservative tail policy is supported")


def is_convergent(idx: MZVIndex) -> bool:
    return all(n >= 1 for n in idx) and (not idx or idx[-1] >= 2)


def _check(idx) -> MZVIndex:
    idx = tuple(int(n) for n in idx)
    if any(n < 1 for n in idx):
        raise ValueError(f"MZV entries must be positive: {idx}")
    if idx and idx[-1] < 2:
        raise DivergentIndexError(f"zeta{idx} diverges (last entry must be >= 2)")
    return idx


# -- direct nested sums --------------------------------------------------------------

def _tail_integral(a: int, s: int, N: int) -> float:
    # int_N^inf (1 + ln x)^a x^-s dx, exact for integer a >= 0, s > 1
    L = math.log(N)
    total = 0.0
    for j in range(a + 1):
        total += math.perm(a, j) * (1 + L) ** (a - j) / (s - 1) ** (j + 1)
    return math.exp(-(s - 1) * L) * total


@lru_cache(maxsize=64)
def _direct(idx: MZVIndex, N: int) -> tuple[float, float]:
    k = np.arange(1, N + 1, dtype=np.longdouble)
    term = k ** -idx[0]
    for n in idx[1:]:
        inner = np.concatenate(([0], np.cumsum(term)[:-1]))
        term = inner * k ** -n
    value = float(np.sum(term))
    # every inner sum below k is at most zeta(n_i), or 1 + ln k when n_i = 1
    const, logs = 1.0, 0
    for n in idx[:-1]:
        if n == 1:
            logs += 1
        else:
            const *= _zeta_single(n)
    tail = const * _tail_integral(logs, idx[-1], N)
    rounding = 64 * np.finfo(np.longdouble).eps * N * abs(value)
    return value, tail + float(rounding)


def _zeta_single(s: int) -> float:
    # upper bound for the single zeta value, used only inside tail bounds
    return 1.0 + 1.0 / (s - 1)


# -- convolution at 1/2 ------------------------------------------------------------

_TERMS = 240


def _word(idx: MZVIndex) -> tuple[int, ...]:
    # letters of the iterated integral from 0 upwards: 1 = dt/(1-t), 0 = dt/t
    out: list[int] = []
    for n in idx:
        out.append(1)
        out.extend([0] * (n - 1))
    return tuple(out)


def _groups(word: tuple[int, ...]) -> MZVIndex:
    if word and word[0] != 1:
        raise ValueError("word must start with the letter 1")
    out: list[int] = []
    for a in word:
        if a == 1:
            out.append(1)
        else:
            out[-1] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _half_sum(word: tuple[int, ...]) -> tuple[float, float]:
    """Iterated integral of ``word`` over [0, 1/2]: sum_{k_1<...<k_d} 2^-k_d / prod k_i^m_i."""
    if not word:
        return 1.0, 0.0
    idx = _groups(word)
    k = np.arange(1, _TERMS + 1, dtype=np.float64)
    term = k ** -float(idx[0])
    for m in idx[1:]:
        inner = np.concatenate(([0.0], np.cumsum(term)[:-1]))
        term = inner * k ** -float(m)
    weights = np.exp2(-k)
    value = math.fsum(term * weights)
    # inner sums are at most (1 + ln k)^(d-1); geometric tail beyond _TERMS
    d = len(idx)
    tail = 2.0 * (1 + math.log(2 * _TERMS)) ** (d - 1) * 2.0 ** -_TERMS
    return value, tail + 1e-16 * value


def _dual(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(1 - a for a in reversed(word))


@lru_cache(maxsize=None)
def _convolution(idx: MZVIndex) -> tuple[float, float]:
    w = _word(idx)
    parts = []
    bound = 0.0
    for j in range(len(w) + 1):
        a, ta = _half_sum(w[:j])
        b, tb = _half_sum(_dual(w[j:]))
        parts.append(a * b)
        bound += ta * b + a * tb + ta * tb
    value = math.fsum(parts)
    return value, bound + 4e-16 * abs(value) * len(parts)


def mzv_eval(idx, params: EvalParams | None = None) -> tuple[float, float]:
    """Return (value, tail_bound) for a convergent index."""
    idx = _check(idx)
    params = params or EvalParams()
    if not idx:
        return 1.0, 0.0
    if params.method == "direct":
        return _direct(idx, params.N)
    return _convolution(idx)


def mzv(idx, params: EvalParams | None = None) -> float:
    return mzv_eval(idx, params)[0]


def zeta_twos_closed_form(m: int):
    """zeta({2}^m) = pi^(2m) / (2m + 1)!; returns the rational coefficient of pi^(2m)."""
    from fractions import Fraction

    if m < 0:
        raise ValueError("m must be >= 0")
    return Fraction(1, math.factorial(2 * m + 1))


def pi_multiple(coef, power: int) -> float:
    """Float value of coef * pi^power with coef an exact rational."""
    return float(coef) * math.pi**power
