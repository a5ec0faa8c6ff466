"""Ext^n between simple modules of SL2(p^s) by counting Carlson's tuples.

A simple module is named by an s-tuple of restricted weights.  For labels
d, f the dimension of Ext^n(L_d, L_f) is the number of (a, b, k) with

    (1) 2 sum(a) + sum(b) = n
    (2) b_i in {0, 1}
    (3) a_i = b_i = 0 when d_i or f_i is p - 1
    (4) k_i in a window depending on b_i and whether a_i > 0
    (5) 2(p sum a_i p^(i-1) + sum b_i p^(i-1))
            == sum (d_i - f_i + 2 k_i - 2 b_i d_i) p^(i-1)   mod p^s - 1
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .padic import bound_C, check_odd_prime, digits_of
from .report import RunReport


@dataclass(frozen=True)
class SimpleLabel:
    p: int
    s: int
    weights: tuple[int, ...]

    def __post_init__(self):
        check_odd_prime(self.p, "SL2(p^s) labels")
        if self.s < 1:
            raise ValueError("s must be >= 1")
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.weights) != self.s:
            raise ValueError(f"expected {self.s} weights, got {len(self.weights)}")
        if any(not 0 <= w <= self.p - 1 for w in self.weights):
            raise ValueError(f"weights must be restricted, 0 <= w <= {self.p - 1}")

    @classmethod
    def zero(cls, p: int, s: int) -> "SimpleLabel":
        return cls(p, s, (0,) * s)

    @classmethod
    def of_weight(cls, m: int, p: int, s: int) -> "SimpleLabel":
        """Label of L(m) via Steinberg's tensor product, for m < p^s."""
        if not 0 <= m < p**s:
            raise ValueError(f"need 0 <= m < p^s = {p ** s}, got m={m}")
        c = digits_of(m, p) if m else (0,)
        return cls(p, s, tuple(c) + (0,) * (s - len(c)))


@dataclass(frozen=True)
class CarlsonSolution:
    a: tuple[int, ...]
    b: tuple[int, ...]
    k: tuple[int, ...]


def all_labels(p: int, s: int) -> Iterator[SimpleLabel]:
    for w in product(range(p), repeat=s):
        # first coordinate varies slowest; reversed for little-endian digits
        yield SimpleLabel(p, s, tuple(reversed(w)))


def _check_labels(d: SimpleLabel, f: SimpleLabel, n: int) -> None:
    if (d.p, d.s) != (f.p, f.s):
        raise ValueError(f"labels disagree on (p, s): {(d.p, d.s)} vs {(f.p, f.s)}")
    if n < 0:
        raise ValueError("n must be >= 0")


def k_window(di: int, fi: int, ai: int, bi: int, p: int) -> range:
    """Admissible k_i under condition (4)."""
    if bi == 0:
        hi = fi if ai == 0 else min(fi, p - di - 2)
        return range(max(0, fi - di), hi + 1)
    return range(max(0, di + fi + 2 - p), min(di, fi) + 1)


def _weak_compositions(total: int, slots: list[int], s: int) -> Iterator[tuple[int, ...]]:
    # total spread over the allowed coordinates, zeros elsewhere
    a = [0] * s

    def rec(idx: int, rest: int):
        if idx == len(slots) - 1:
            a[slots[idx]] = rest
            yield tuple(a)
            a[slots[idx]] = 0
            return
        for x in range(rest, -1, -1):
            a[slots[idx]] = x
            yield from rec(idx + 1, rest - x)
        a[slots[idx]] = 0

    if total == 0:
        yield (0,) * s
    elif slots:
        yield from rec(0, total)


def _residue(a, b, k, d, f, p, s) -> int:
    q = p**s - 1
    lhs = 2 * (p * sum(x * p**i for i, x in enumerate(a)) + sum(x * p**i for i, x in enumerate(b)))
    rhs = sum((d[i] - f[i] + 2 * k[i] - 2 * b[i] * d[i]) * p**i for i in range(s))
    return (lhs - rhs) % q


def iter_carlson_solutions(n: int, d: SimpleLabel, f: SimpleLabel) -> Iterator[CarlsonSolution]:
    """b outermost, then a over the remaining budget, then the k windows."""
    _check_labels(d, f, n)
    p, s, dw, fw = d.p, d.s, d.weights, f.weights
    free = [i for i in range(s) if dw[i] != p - 1 and fw[i] != p - 1]
    for bf in product((0, 1), repeat=len(free)):
        b = [0] * s
        for i, x in zip(free, bf):
            b[i] = x
        rest = n - sum(b)
        if rest < 0 or rest % 2:
            continue
        b = tuple(b)
        for a in _weak_compositions(rest // 2, free, s):
            windows = [k_window(dw[i], fw[i], a[i], b[i], p) for i in range(s)]
            for k in product(*windows):
                if _residue(a, b, k, dw, fw, p, s) == 0:
                    yield CarlsonSolution(a, b, k)


def dim_ext_finite(n: int, d: SimpleLabel, f: SimpleLabel) -> int:
    """dim Ext^n_{SL2(p^s)}(L_d, L_f) as the raw count of Carlson tuples."""
    return sum(1 for _ in iter_carlson_solutions(n, d, f))


def dim_ext_finite_kfirst(n: int, d: SimpleLabel, f: SimpleLabel) -> int:
    """Second enumerator: k over the box [0, f_i] first, then (a, b) coordinatewise.

    Shares no loop structure with :func:`dim_ext_finite`; used as a
    cross-check only.
    """
    _check_labels(d, f, n)
    p, s, dw, fw = d.p, d.s, d.weights, f.weights
    q = p**s - 1
    count = 0
    for k in product(*[range(x + 1) for x in fw]):
        rhs = sum((dw[i] - fw[i] + 2 * k[i]) * p**i for i in range(s))
        # per-coordinate options (a_i, b_i) with a_i <= n // 2
        opts = []
        for i in range(s):
            o = []
            for bi in (0, 1):
                for ai in range(n // 2 + 1):
                    if (ai or bi) and (dw[i] == p - 1 or fw[i] == p - 1):
                        continue
                    if k[i] in k_window(dw[i], fw[i], ai, bi, p):
                        o.append((ai, bi))
            opts.append(o)
        for choice in product(*opts):
            if sum(2 * ai + bi for ai, bi in choice) != n:
                continue
            lhs = sum(2 * (p * ai + bi * (1 + dw[i])) * p**i for i, (ai, bi) in enumerate(choice))
            if (lhs - rhs) % q == 0:
                count += 1
    return count


def dim_H_finite(n: int, f: SimpleLabel) -> int:
    """dim H^n(SL2(p^s), L_f)."""
    return dim_ext_finite(n, SimpleLabel.zero(f.p, f.s), f)


def wrap_multiplier(sol: CarlsonSolution, d: SimpleLabel, f: SimpleLabel) -> int:
    """The integer t with LHS = sum (d_i - f_i + 2k_i) p^(i-1) + t (p^s - 1)."""
    p, s = d.p, d.s
    lhs = 2 * sum((p * sol.a[i] + sol.b[i] * (1 + d.weights[i])) * p**i for i in range(s))
    rhs = sum((d.weights[i] - f.weights[i] + 2 * sol.k[i]) * p**i for i in range(s))
    t, r = divmod(lhs - rhs, p**s - 1)
    assert r == 0
    return t


def finite_bound_factor(n: int, d: SimpleLabel, f: SimpleLabel) -> int:
    """(2n + 2 max d_i + 7) * prod(min(d_i, f_i) + 1); multiply by C_n."""
    prod_k = 1
    for x, y in zip(d.weights, f.weights):
        prod_k *= min(x, y) + 1
    return (2 * n + 2 * max(d.weights) + 7) * prod_k


def verify_finite_bound(p: int, s_values: Iterable[int], n_max: int,
                        pairs=None, cross_check: bool = True) -> RunReport:
    """Check the finite-group bound on every (d, f) in ``pairs`` (default: all).

    For n >= 1 each count must sit below (2n + 2 max d + 7) C_n prod(min + 1)
    and, when d = 0, below (2n + 7) C_n.  The constant C_0 is 0, so n = 0
    is counted but not bounded.  Also records the observed wrap multipliers
    t against the window of 2n + 2 max d + 7 values and, optionally, the
    agreement of the two enumerators.
    """
    check_odd_prime(p)
    s_values = list(s_values)
    rep = RunReport("verify-finite-bounds", {"p": p, "s": s_values, "n_max": n_max})
    worst = 0.0
    checked = 0
    for s in s_values:
        todo = pairs(s) if callable(pairs) else pairs
        if todo is None:
            labels = list(all_labels(p, s))
            todo = [(d, f) for d in labels for f in labels]
        for d, f in todo:
            for n in range(n_max + 1):
                sols = list(iter_carlson_solutions(n, d, f))
                dim = len(sols)
                checked += 1
                if cross_check and dim != dim_ext_finite_kfirst(n, d, f):
                    rep.violation(check="double-enumeration", p=p, s=s, n=n,
                                  d=_fmt(d), f=_fmt(f), dim=dim)
                ts = {wrap_multiplier(x, d, f) for x in sols}
                window = 2 * n + 2 * max(d.weights) + 7
                if ts and (min(ts) < -3 or len(ts) > window):
                    rep.violation(check="t-window", p=p, s=s, n=n, d=_fmt(d), f=_fmt(f),
                                  t_min=min(ts), t_count=len(ts))
                if n == 0:
                    continue
                bound = bound_C(n).scaled(finite_bound_factor(n, d, f))
                if not bound.admits(dim):
                    rep.violation(check="finite-bound", p=p, s=s, n=n, d=_fmt(d), f=_fmt(f), dim=dim)
                if not any(d.weights) and not bound_C(n).scaled(2 * n + 7).admits(dim):
                    rep.violation(check="H-bound", p=p, s=s, n=n, f=_fmt(f), dim=dim)
                worst = max(worst, dim / float(bound))
    rep.summary.update(checked=checked, max_ratio=worst)
    return rep


def _fmt(label: SimpleLabel) -> str:
    return ",".join(map(str, label.weights))


def generic_stabilization_probe(n: int, m: int, p: int, s_min: int, s_max: int) -> RunReport:
    """dim H^n(SL2(p^s), L(m)) for s in [s_min, s_max].

    Exploratory: reports the values and whether the last two agree.  No
    claim is made about s beyond the window.
    """
    check_odd_prime(p)
    if s_min < 1 or s_max < s_min:
        raise ValueError("need 1 <= s_min <= s_max")
    if not 0 <= m < p**s_min:
        raise ValueError(f"need 0 <= m < p^s_min = {p ** s_min}")
    rep = RunReport("probe-stabilization", {"p": p, "n": n, "m": m, "s_min": s_min, "s_max": s_max})
    vals = []
    for s in range(s_min, s_max + 1):
        v = dim_H_finite(n, SimpleLabel.of_weight(m, p, s))
        vals.append(v)
        rep.rows.append({"p": p, "s": s, "n": n, "m": m, "dim": v})
    stable_from = s_max
    while stable_from > s_min and vals[stable_from - 1 - s_min] == vals[-1]:
        stable_from -= 1
    rep.summary.update(tail_constant=len(vals) >= 2 and vals[-1] == vals[-2],
                       constant_from_s=stable_from)
    return rep
