"""Brute-force enumeration of independent sets as bit strings.

Everything counting-related in :mod:`fibcubes.counting` can be re-derived
here by exhaustion, which is the whole point: this module is the oracle the
closed forms are checked against, so it stays as literal as possible.

Bit convention: an independent set of v_1..v_n is a length-n binary string
b_1..b_n with b_i = 1 iff v_i is in the set.  In the integer encoding b_1 is
the least significant bit, so "numeric order" of masks is well defined and
the string reads left to right as b_1..b_n.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graphs import CYCLE, GapGraph

__all__ = [
    "DEFAULT_CAP",
    "CapacityError",
    "VertexMask",
    "is_independent",
    "gap_check",
    "iter_masks",
    "enumerate_independent",
    "count_by_size",
    "bijection_f",
    "bijection_f_inv",
    "avoids_substrings",
]

DEFAULT_CAP = 24


class CapacityError(Exception):
    """Raised when an enumeration would exceed the configured size cap."""


@dataclass(frozen=True)
class VertexMask:
    """A length-n bit string encoding a vertex subset (bit i-1 <-> v_i)."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("mask length must be nonnegative")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} out of range for length {self.n}")

    @classmethod
    def from_string(cls, s: str) -> "VertexMask":
        """Parse a b_1..b_n string of '0'/'1' characters."""
        bits = 0
        for pos, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << pos
            elif ch != "0":
                raise ValueError(f"invalid mask character {ch!r}")
        return cls(len(s), bits)

    @classmethod
    def from_vertices(cls, n: int, vertices) -> "VertexMask":
        """Build from 1-based vertex indices."""
        bits = 0
        for v in vertices:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} out of range 1..{n}")
            bits |= 1 << (v - 1)
        return cls(n, bits)

    def to_string(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))

    __str__ = to_string

    def vertices(self) -> tuple[int, ...]:
        """Set vertices as ascending 1-based indices."""
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    def size(self) -> int:
        return self.bits.bit_count()


def is_independent(g: GapGraph, mask: VertexMask) -> bool:
    """Whether no two set bits of the mask index adjacent vertices of g."""
    if mask.n != g.n:
        raise ValueError(f"mask length {mask.n} does not match graph order {g.n}")
    vs = mask.vertices()
    return not any(g.is_edge(vs[a], vs[b]) for a in range(len(vs)) for b in range(a + 1, len(vs)))


def gap_check(mask: VertexMask, h: int, circular: bool = False) -> bool:
    """Whether all 1-bits are more than h apart (also around the wrap when
    circular).  Equivalent to independence in the matching gap graph."""
    vs = mask.vertices()
    n = mask.n
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            d = vs[b] - vs[a]
            if d <= h:
                return False
            if circular and n - d <= h:
                return False
    return True


def _path_mask_ints(n: int, h: int) -> list[int]:
    """All gap-valid masks for a path, ascending as integers.

    Grown bottom-up: masks using bits [0, m) are the masks using [0, m-1)
    followed by bit m-1 OR-ed onto every mask whose bits stop below m-1-h.
    The growing list is its own table of prefixes, so nothing is recomputed.
    """
    out = [0]
    sizes = [1]  # sizes[m] = number of valid masks with all bits below m
    for m in range(1, n + 1):
        b = m - 1
        hi = 1 << b
        limit = sizes[max(b - h, 0)]
        out.extend(hi | out[i] for i in range(limit))
        sizes.append(len(out))
    return out


def _wraps_ok(bits: int, n: int, h: int) -> bool:
    # Gap between the extreme set bits measured the short way around.
    if bits.bit_count() < 2:
        return True
    span = bits.bit_length() - 1 - ((bits & -bits).bit_length() - 1)
    return n - span > h


def iter_masks(g: GapGraph, cap: int = DEFAULT_CAP) -> list[int]:
    """Integer encodings of all independent sets of g, ascending.

    Paths are enumerated by gap-pruned construction; cycles additionally
    filter on the wrap-around gap.  Raises CapacityError above the cap.
    """
    if g.n > cap:
        raise CapacityError(f"refusing to enumerate n={g.n} (cap {cap})")
    masks = _path_mask_ints(g.n, g.h)
    if g.kind == CYCLE:
        n, h = g.n, g.h
        masks = [m for m in masks if _wraps_ok(m, n, h)]
    return masks


def enumerate_independent(g: GapGraph, cap: int = DEFAULT_CAP) -> list[VertexMask]:
    """All independent sets of g as VertexMasks, in ascending numeric order."""
    return [VertexMask(g.n, bits) for bits in iter_masks(g, cap)]


def count_by_size(g: GapGraph, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Histogram of independent-set sizes, by exhaustive enumeration."""
    return dict(sorted(Counter(m.bit_count() for m in iter_masks(g, cap)).items()))


def bijection_f(subset, n: int, h: int) -> VertexMask:
    """Spread a k-subset of {1..n-hk+h} into an independent set of the path
    power: the j-th smallest index is shifted up by (j-1)*h."""
    idx = list(subset)
    k = len(idx)
    top = n - h * k + h
    if top < 0:
        raise ValueError(f"no {k}-subsets exist for n={n} h={h}")
    bits = 0
    prev = 0
    for j, i in enumerate(idx, start=1):
        if not prev < i <= top:
            raise ValueError(f"indices must be strictly increasing within 1..{top}")
        prev = i
        bits |= 1 << (i + (j - 1) * h - 1)
    return VertexMask(n, bits)


def bijection_f_inv(mask: VertexMask, h: int) -> list[int]:
    """Inverse of bijection_f: shift the j-th set position down by (j-1)*h."""
    if not gap_check(mask, h, circular=False):
        raise ValueError("mask violates the gap condition; not in the image")
    return [p - (j - 1) * h for j, p in enumerate(mask.vertices(), start=1)]


def avoids_substrings(mask: VertexMask, h: int, circular: bool = False) -> bool:
    """Whether the mask's string contains none of 11, 101, ..., 1 0^{h-1} 1.

    With ``circular`` the string is read around the wrap (patterns longer
    than the string cannot occur).  For h >= 1 this is yet another phrasing
    of the gap condition.
    """
    if h < 1:
        raise ValueError("substring characterization needs h >= 1")
    s = mask.to_string()
    n = mask.n
    doubled = s + s
    for gap in range(1, h + 1):
        pat = "1" + "0" * (gap - 1) + "1"
        if pat in s:
            return False
        if circular and len(pat) <= n and any(
            doubled[i : i + len(pat)] == pat for i in range(n)
        ):
            return False
    return True
