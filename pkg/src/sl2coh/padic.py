"""Base-p digits, small integer sequences and certified real bound constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from mpmath import iv, mp

DEFAULT_PREC = 96


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % q for q in range(3, isqrt(p) + 1, 2))


def check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be a prime, got {p!r}")


def check_odd_prime(p: int, what: str = "this computation") -> None:
    check_prime(p)
    if p == 2:
        raise ValueError(f"{what} requires an odd prime p (p = 2 is not supported)")


@dataclass(frozen=True)
class PAdicExpansion:
    """Digits c_0, c_1, ..., c_r of ``m`` in base ``p`` (least significant first)."""

    p: int
    m: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= c < self.p for c in self.digits):
            raise ValueError("digits must lie in [0, p-1]")
        if sum(c * self.p**i for i, c in enumerate(self.digits)) != self.m:
            raise ValueError("digits do not reassemble to m")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("top digit must be nonzero")

    @property
    def height(self) -> int:
        return sum(self.digits)

    @property
    def top(self) -> int:
        """Index of the top digit (r_m); 0 when m < p."""
        return len(self.digits) - 1

    @property
    def inner_zeros(self) -> int:
        """Number of zeros among c_1, ..., c_r (s_m)."""
        return sum(1 for c in self.digits[1:] if c == 0)

    @property
    def nonzero_positions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.digits) if c)

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, i):
        return self.digits[i]


def digits_of(m: int, p: int) -> tuple[int, ...]:
    # unchecked fast path used inside sweeps
    if m == 0:
        return (0,)
    out = []
    while m:
        m, c = divmod(m, p)
        out.append(c)
    return tuple(out)


def expand(m: int, p: int) -> PAdicExpansion:
    check_prime(p)
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return PAdicExpansion(p, m, digits_of(m, p))


def height(m: int, p: int) -> int:
    return sum(expand(m, p).digits)


def r_s_stats(m: int, p: int) -> tuple[int, int]:
    """Return ``(r_m, s_m)``: top digit index and zeros among c_1..c_{r_m}."""
    if m < 1:
        raise ValueError("r_m is undefined for m = 0")
    e = expand(m, p)
    return e.top, e.inner_zeros


def fibonacci(n: int) -> int:
    if n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _exact(x) -> Fraction:
    man, exp = x.man_exp
    return Fraction(int(man)) * Fraction(2) ** int(exp)


@dataclass(frozen=True)
class BoundConstant:
    """An irrational bound enclosed in ``[lower, value]``.

    ``value`` is rounded upward.  ``admits`` only reports a count as
    within the bound when it is below the *lower* end, so an enclosure
    that is too wide shows up as a violation rather than a silent pass.
    """

    name: str
    n: int
    lower: Fraction
    value: Fraction

    def admits(self, count: int, strict: bool = False) -> bool:
        return count < self.lower if strict else count <= self.lower

    def __float__(self):
        return float(self.value)

    def scaled(self, factor: int) -> "BoundConstant":
        if factor < 0:
            raise ValueError("scale factor must be non-negative")
        return BoundConstant(self.name, self.n, self.lower * factor, self.value * factor)

    def __add__(self, other: "BoundConstant") -> "BoundConstant":
        return BoundConstant(f"{self.name}+{other.name}", self.n,
                             self.lower + other.lower, self.value + other.value)


def _enclose(name: str, n: int, build, prec: int) -> BoundConstant:
    # iv has no workprec context manager; precision is a context attribute
    saved = iv.prec
    iv.prec = prec
    try:
        x = build()
    finally:
        iv.prec = saved
    with mp.workprec(prec):
        lo, hi = mp.mpf(x.a), mp.mpf(x.b)
    return BoundConstant(name, n, _exact(lo), _exact(hi))


@lru_cache(maxsize=None)
def bound_C(n: int, prec: int = DEFAULT_PREC) -> BoundConstant:
    """n * 4^n * exp(2 pi n / sqrt 3)."""
    if n < 1:
        raise ValueError(f"bound_C requires n >= 1, got {n}")
    return _enclose("C", n, lambda: iv.mpf(n) * iv.mpf(4) ** n
                    * iv.exp(2 * iv.pi * n / iv.sqrt(3)), prec)


@lru_cache(maxsize=None)
def hardy_ramanujan_bound(n: int, prec: int = DEFAULT_PREC) -> BoundConstant:
    """exp(pi * sqrt(2n/3)), an upper bound for the partition number p(n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _enclose("HR", n, lambda: iv.exp(iv.pi * iv.sqrt(iv.mpf(2 * n) / 3)), prec)


@lru_cache(maxsize=None)
def power_partition_bound(n: int, prec: int = DEFAULT_PREC) -> BoundConstant:
    """exp(2 pi n / sqrt 3) * 2^n, the bound on partitions into n powers of p."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _enclose("PA", n, lambda: iv.exp(2 * iv.pi * n / iv.sqrt(3)) * iv.mpf(2) ** n, prec)
