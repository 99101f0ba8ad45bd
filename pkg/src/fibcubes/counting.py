"""Exact counting of independent sets of path and cycle powers.

Everything here is closed-form or recurrence-based integer arithmetic; the
brute-force enumeration lives in :mod:`fibcubes.enumeration` so the two can
cross-check each other.

Conventions used throughout:

* A "gap" parameter h >= 0 means vertices at (circular) index distance <= h
  are adjacent, so 1-bits of an independent-set string are more than h apart.
* Binomial coefficients follow the subset-counting convention: C(m, 0) = 1
  for every m (including negative m), and C(m, k) = 0 whenever k < 0, or
  m < 0 < k, or k > m.  This is exactly what makes the closed forms vanish
  outside their support.
* All results are Python ints, so nothing ever overflows.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

__all__ = [
    "binom",
    "path_count_k",
    "path_count",
    "path_count_rec",
    "cycle_count_k",
    "cycle_count",
    "cycle_count_rec",
    "HSequence",
    "FIBONACCI",
    "LUCAS",
    "EXTENDED_FIBONACCI",
    "EXTENDED_LUCAS",
    "fibonacci_sequence",
    "lucas_sequence",
    "h_fibonacci",
    "h_lucas",
    "extended_fib",
    "extended_lucas",
    "convolve",
    "path_edges",
    "path_edges_conv",
    "cycle_edges",
    "cycle_edges_closed",
    "cycle_edges_conv",
    "t_count",
    "CountTable",
    "count_table",
    "max_subset_size",
    "clear_caches",
]


def binom(m: int, k: int) -> int:
    """Number of k-subsets of an m-set (0 when the selection is impossible).

    Unlike the signed generalized binomial, C(-1, 1) is 0 here, not -1: a
    negative-size set has no nonempty subsets, but it does have the empty one.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if m < 0 or k > m:
        return 0
    return math.comb(m, k)


def max_subset_size(n: int, h: int) -> int:
    """Largest k for which a power-of-path/cycle on n vertices can have an
    independent k-subset: ceil(n / (h+1))."""
    return -(-n // (h + 1))


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------

def path_count_k(n: int, h: int, k: int) -> int:
    """Number of independent k-subsets of the h-power of the n-path.

    Closed form C(n - h*k + h, k): placing k chosen vertices with gaps > h is
    the same as choosing k items from n - h*(k-1) slots.
    """
    return binom(n - h * k + h, k)


def path_count(n: int, h: int) -> int:
    """Total number of independent sets of the h-power of the n-path."""
    bound = max_subset_size(n, h)
    total = sum(path_count_k(n, h, k) for k in range(bound + 1))
    # Terms past the structural bound must vanish; a nonzero one means the
    # binomial convention is broken.
    assert path_count_k(n, h, bound + 1) == 0, (n, h, bound + 1)
    return total


_PATH_REC: dict[int, list[int]] = {}
_CYCLE_REC: dict[int, list[int]] = {}
_REC_LOCK = threading.Lock()


def path_count_rec(n: int, h: int) -> int:
    """path_count via its recurrence p(n) = p(n-1) + p(n-h-1), p(n) = n+1 for
    n <= h+1.  Independent route from the closed form, kept for cross-checks.
    """
    with _REC_LOCK:
        seq = _PATH_REC.setdefault(h, [])
        while len(seq) <= n:
            m = len(seq)
            seq.append(m + 1 if m <= h + 1 else seq[m - 1] + seq[m - h - 1])
        return seq[n]


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------

def cycle_count_k(n: int, h: int, k: int) -> int:
    """Number of independent k-subsets of the h-power of the n-cycle.

    For k >= 2 this is (n/k) * C(n - h*k - 1, k - 1); the division is exact
    because the formula counts each subset once per element before dividing.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if k == 1:
        return n
    num = n * binom(n - h * k - 1, k - 1)
    assert num % k == 0, f"inexact division for cycle count n={n} h={h} k={k}"
    return num // k


def cycle_count(n: int, h: int) -> int:
    """Total number of independent sets of the h-power of the n-cycle."""
    bound = max_subset_size(n, h)
    total = sum(cycle_count_k(n, h, k) for k in range(bound + 1))
    assert cycle_count_k(n, h, bound + 1) == 0, (n, h, bound + 1)
    return total


def cycle_count_rec(n: int, h: int) -> int:
    """cycle_count via c(n) = c(n-1) + c(n-h-1), c(n) = n+1 for n <= 2h+1."""
    with _REC_LOCK:
        seq = _CYCLE_REC.setdefault(h, [])
        while len(seq) <= n:
            m = len(seq)
            seq.append(m + 1 if m <= 2 * h + 1 else seq[m - 1] + seq[m - h - 1])
        return seq[n]


# ---------------------------------------------------------------------------
# Delayed Fibonacci / Lucas sequences
# ---------------------------------------------------------------------------

FIBONACCI = "fibonacci"
LUCAS = "lucas"
EXTENDED_FIBONACCI = "extended-fibonacci"
EXTENDED_LUCAS = "extended-lucas"

_KINDS = (FIBONACCI, LUCAS, EXTENDED_FIBONACCI, EXTENDED_LUCAS)


def _fib_base(h: int, n: int) -> int:
    # First h+1 terms of the delayed Fibonacci recurrence are all 1.
    return 1


def _lucas_base(h: int, n: int) -> int:
    # Delayed Lucas starts h+1, then a run of h ones.
    return h + 1 if n == 1 else 1


def _ext_fib_base(h: int, n: int) -> int:
    return 1 if n == -h else 0


def _ext_lucas_base(h: int, n: int) -> int:
    if n == -h:
        return h + 1
    if n == -h + 1:
        return -h
    return 0


class HSequence:
    """A lazily extended integer sequence t(n) = t(n-1) + t(n-h-1).

    Four kinds share the recurrence and differ only in base cases:

    * ``fibonacci``: t(1..h+1) = 1 (indexed from 1)
    * ``lucas``: t(1) = h+1, t(2..h+1) = 1 (indexed from 1)
    * ``extended-fibonacci``: t(-h) = 1, t(-h+1..0) = 0 (indexed from -h,
      needs h >= 2)
    * ``extended-lucas``: t(-h) = h+1, t(-h+1) = -h, then 0 up to t(0)
      (indexed from -h, needs h >= 2; the one kind that can go negative)

    The cache is append-only and grows monotonically, so concurrent readers
    always see a consistent prefix.
    """

    def __init__(self, kind: str, h: int):
        if kind not in _KINDS:
            raise ValueError(f"unknown sequence kind {kind!r}")
        if h < 0:
            raise ValueError("h must be nonnegative")
        if kind in (EXTENDED_FIBONACCI, EXTENDED_LUCAS) and h < 2:
            raise ValueError(f"{kind} sequences are only defined for h >= 2")
        self.kind = kind
        self.h = h
        self.min_index = -h if kind in (EXTENDED_FIBONACCI, EXTENDED_LUCAS) else 1
        self._terms: list[int] = []
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"HSequence({self.kind!r}, h={self.h})"

    def _base(self, n: int) -> int | None:
        """Base-case value at index n, or None if n is in the recurrence range."""
        h = self.h
        if self.kind == FIBONACCI:
            return _fib_base(h, n) if n <= h + 1 else None
        if self.kind == LUCAS:
            return _lucas_base(h, n) if n <= h + 1 else None
        if self.kind == EXTENDED_FIBONACCI:
            return _ext_fib_base(h, n) if n <= 0 else None
        return _ext_lucas_base(h, n) if n <= 0 else None

    def term(self, n: int) -> int:
        """The n-th term; n counts from ``min_index`` (1, or -h when extended)."""
        if n < self.min_index:
            raise ValueError(
                f"index {n} below first index {self.min_index} of {self.kind} sequence"
            )
        lo = self.min_index
        pos = n - lo
        terms = self._terms
        if pos < len(terms):
            return terms[pos]
        with self._lock:
            while len(terms) <= pos:
                i = lo + len(terms)
                base = self._base(i)
                if base is not None:
                    terms.append(base)
                else:
                    terms.append(terms[i - 1 - lo] + terms[i - self.h - 1 - lo])
        return terms[pos]

    __call__ = term

    def prefix(self, n: int) -> list[int]:
        """Terms from ``min_index`` through n inclusive."""
        self.term(n)
        return self._terms[: n - self.min_index + 1]


_SEQUENCES: dict[tuple[str, int], HSequence] = {}
_SEQ_LOCK = threading.Lock()


def _sequence(kind: str, h: int) -> HSequence:
    key = (kind, h)
    seq = _SEQUENCES.get(key)
    if seq is None:
        with _SEQ_LOCK:
            seq = _SEQUENCES.setdefault(key, HSequence(kind, h))
    return seq


def fibonacci_sequence(h: int) -> HSequence:
    """The shared, memoized delayed-Fibonacci sequence for gap h."""
    return _sequence(FIBONACCI, h)


def lucas_sequence(h: int) -> HSequence:
    """The shared, memoized delayed-Lucas sequence for gap h."""
    return _sequence(LUCAS, h)


def h_fibonacci(h: int, n: int) -> int:
    """n-th delayed-Fibonacci number for gap h (n >= 1)."""
    return _sequence(FIBONACCI, h).term(n)


def h_lucas(h: int, n: int) -> int:
    """n-th delayed-Lucas number for gap h (n >= 1)."""
    return _sequence(LUCAS, h).term(n)


def extended_fib(h: int, n: int) -> int:
    """Delayed-Fibonacci extended down to index -h (h >= 2).

    Agrees with h_fibonacci for every n >= 1.
    """
    return _sequence(EXTENDED_FIBONACCI, h).term(n)


def extended_lucas(h: int, n: int) -> int:
    """Delayed-Lucas extended down to index -h (h >= 2); t(-h+1) = -h < 0.

    Agrees with h_lucas for every n >= 1.
    """
    return _sequence(EXTENDED_LUCAS, h).term(n)


def convolve(a: HSequence, b: HSequence, n: int) -> int:
    """Discrete convolution sum_{i=1..n} a(i) * b(n-i+1) (n >= 1)."""
    if a.h != b.h:
        raise ValueError(f"cannot convolve sequences with h={a.h} and h={b.h}")
    if n < 1:
        raise ValueError("convolution index must be >= 1")
    return sum(a.term(i) * b.term(n - i + 1) for i in range(1, n + 1))


def clear_caches() -> None:
    """Drop all memoized sequences and recurrence prefixes.

    Only needed when base-case behavior is deliberately altered (fault
    injection in tests); normal use never requires it.
    """
    with _REC_LOCK:
        _PATH_REC.clear()
        _CYCLE_REC.clear()
    with _SEQ_LOCK:
        _SEQUENCES.clear()


# ---------------------------------------------------------------------------
# Edge counts of the inclusion diagrams
# ---------------------------------------------------------------------------

def path_edges(n: int, h: int) -> int:
    """Edges of the inclusion diagram over independent sets of the path
    power: every k-subset covers exactly k subsets, so this is
    sum_k k * path_count_k(n, h, k)."""
    bound = max_subset_size(n, h)
    return sum(k * path_count_k(n, h, k) for k in range(1, bound + 1))


def path_edges_conv(n: int, h: int) -> int:
    """path_edges computed the other way: the delayed-Fibonacci sequence
    convolved with itself."""
    if n == 0:
        return 0
    f = _sequence(FIBONACCI, h)
    return convolve(f, f, n)


def cycle_edges(n: int, h: int) -> int:
    """Edges of the inclusion diagram over independent sets of the cycle
    power: sum_k k * cycle_count_k(n, h, k).

    Defined for every n, h >= 0.  For 0 < n <= h the diagram is the star of
    n singletons below the empty set, giving n edges.
    """
    bound = max_subset_size(n, h)
    return sum(k * cycle_count_k(n, h, k) for k in range(1, bound + 1))


def cycle_edges_closed(n: int, h: int) -> int:
    """cycle_edges as n * F(n-h) with F the delayed-Fibonacci sequence.

    Only valid for n > h (each singleton's neighborhood must leave a path).
    """
    if n <= h:
        raise ValueError(f"closed form needs n > h, got n={n} h={h}")
    return n * h_fibonacci(h, n - h)


def cycle_edges_conv(n: int, h: int) -> int:
    """cycle_edges as the Fibonacci-with-Lucas convolution at index n-h;
    also only valid for n > h."""
    if n <= h:
        raise ValueError(f"convolution form needs n > h, got n={n} h={h}")
    return convolve(_sequence(FIBONACCI, h), _sequence(LUCAS, h), n - h)


# ---------------------------------------------------------------------------
# Per-vertex subset counts
# ---------------------------------------------------------------------------

def _path_count_k_clamped(n: int, h: int, k: int) -> int:
    """path_count_k with negative n clamped to the n=0 row (1 at k=0, else 0)."""
    return path_count_k(max(n, 0), h, k)


def path_count_clamped(n: int, h: int) -> int:
    """path_count with negative n clamped to the empty graph (value 1)."""
    return path_count(max(n, 0), h)


def t_count(n: int, h: int, k: int, i: int) -> int:
    """Independent k-subsets of the h-power of the n-path that contain
    vertex i (1-based).

    Splits at vertex i: anything else in the subset lies in the segment left
    of i-h or right of i+h, and the two sides are counted independently.
    """
    if not 1 <= i <= n:
        raise ValueError(f"vertex index {i} out of range 1..{n}")
    if k < 1:
        raise ValueError("subset size k must be >= 1")
    return sum(
        _path_count_k_clamped(i - h - 1, h, r) * _path_count_k_clamped(n - i - h, h, k - 1 - r)
        for r in range(k)
    )


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountTable:
    """A (n, k) -> count table for one graph family and gap h."""

    kind: str  # "path" or "cycle"
    h: int
    n_max: int
    k_max: int
    entries: dict[tuple[int, int], int] = field(repr=False)

    def value(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def row_total(self, n: int) -> int:
        """Sum over k of the column at n; equals the family's total count."""
        return sum(self.entries[(n, k)] for k in range(self.k_max + 1))


def count_table(kind: str, h: int, n_max: int, k_max: int | None = None) -> CountTable:
    """Tabulate path or cycle per-size counts for 0 <= n <= n_max."""
    if kind not in ("path", "cycle"):
        raise ValueError(f"kind must be 'path' or 'cycle', got {kind!r}")
    if k_max is None:
        k_max = max_subset_size(n_max, h)
    cell = path_count_k if kind == "path" else cycle_count_k
    entries = {
        (n, k): cell(n, h, k)
        for n in range(n_max + 1)
        for k in range(k_max + 1)
    }
    return CountTable(kind, h, n_max, k_max, entries)
