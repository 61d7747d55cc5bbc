"""Brauer diagrams and the monoid of scaled diagrams.

A diagram on ``2r`` dots is a fixed-point-free pairing.  Dots are labelled
``0..r-1`` (top row, left to right) and ``r..2r-1`` (bottom row); the text
format uses the one-based ``1..r`` / ``1'..r'`` convention.  Concatenation
stacks one diagram on top of another, deletes closed loops and reports their
number; the scaled monoid keeps the loop count as an exponent of the
parameter delta.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Iterator

from .partitions import Partition, check_partition


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0..n-1}; composition is left-to-right."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images) -> "Permutation":
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "Permutation":
        """Cycles given in one-based notation, e.g. from_cycles(3, (1, 2, 3))."""
        images = list(range(n))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                images[a - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """self then other."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def cycle_type(self) -> Partition:
        seen = [False] * self.n
        parts = []
        for i in range(self.n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            parts.append(length)
        return tuple(sorted(parts, reverse=True))

    def order(self) -> int:
        return reduce(lcm, self.cycle_type(), 1)


@dataclass(frozen=True)
class BrauerDiagram:
    """Fixed-point-free involution on 2r dots."""

    r: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        n = 2 * self.r
        if self.r < 1 or len(self.pairing) != n:
            raise ValueError("pairing must have length 2r")
        for x, y in enumerate(self.pairing):
            if not 0 <= y < n or y == x or self.pairing[y] != x:
                raise ValueError(f"not a fixed-point-free involution: {self.pairing!r}")

    def partner(self, x: int) -> int:
        return self.pairing[x]

    def is_top(self, x: int) -> bool:
        return x < self.r

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in enumerate(self.pairing) if x < y]

    def top_arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in self.edges() if y < self.r]

    def bottom_arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in self.edges() if x >= self.r]

    def through_arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in self.edges() if x < self.r <= y]

    def is_permutation(self) -> bool:
        return len(self.through_arcs()) == self.r

    def to_permutation(self) -> Permutation:
        if not self.is_permutation():
            raise ValueError("diagram has horizontal arcs")
        return Permutation(tuple(self.pairing[i] - self.r for i in range(self.r)))

    def to_text(self) -> str:
        def token(x: int) -> str:
            return str(x + 1) if x < self.r else f"{x - self.r + 1}'"

        pairs = sorted(self.edges())
        body = ", ".join(f"{token(x)}-{token(y)}" for x, y in pairs)
        return f"r={self.r}; {body}"

    @classmethod
    def from_text(cls, text: str) -> "BrauerDiagram":
        m = re.fullmatch(r"\s*r\s*=\s*(\d+)\s*;(.*)", text, re.DOTALL)
        if not m:
            raise ValueError(f"cannot parse diagram: {text!r}")
        r = int(m.group(1))
        if r < 1:
            raise ValueError("r must be >= 1")

        def dot(tok: str) -> int:
            tok = tok.strip()
            mm = re.fullmatch(r"(\d+)(')?", tok)
            if not mm:
                raise ValueError(f"bad dot token {tok!r}")
            i = int(mm.group(1))
            if not 1 <= i <= r:
                raise ValueError(f"dot {tok!r} out of range for r={r}")
            return i - 1 + (r if mm.group(2) else 0)

        pairing = [-1] * (2 * r)
        for chunk in m.group(2).split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            left, sep, right = chunk.partition("-")
            if not sep:
                raise ValueError(f"bad pair {chunk!r}")
            x, y = dot(left), dot(right)
            if x == y or pairing[x] != -1 or pairing[y] != -1:
                raise ValueError(f"dot repeated or self-paired in {chunk!r}")
            pairing[x], pairing[y] = y, x
        if -1 in pairing:
            missing = [i for i, v in enumerate(pairing) if v == -1]
            raise ValueError(f"unpaired dots: {missing}")
        return cls(r, tuple(pairing))

    def __str__(self) -> str:
        return self.to_text()


def from_pairs(r: int, pairs) -> BrauerDiagram:
    """Build a diagram from 0-based dot pairs."""
    pairing = [-1] * (2 * r)
    for x, y in pairs:
        pairing[x], pairing[y] = y, x
    return BrauerDiagram(r, tuple(pairing))


def identity_diagram(r: int) -> BrauerDiagram:
    return BrauerDiagram(r, tuple((x + r) % (2 * r) for x in range(2 * r)))


def embed_permutation(sigma: Permutation) -> BrauerDiagram:
    """Permutation diagram: top i joined to bottom sigma(i)."""
    r = sigma.n
    pairing = [0] * (2 * r)
    for i in range(r):
        pairing[i] = r + sigma(i)
        pairing[r + sigma(i)] = i
    return BrauerDiagram(r, tuple(pairing))


def concat(a: BrauerDiagram, b: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack a over b; return the composed diagram and the number of deleted loops."""
    if a.r != b.r:
        raise ValueError(f"rank mismatch: {a.r} != {b.r}")
    r = a.r
    # boundary dots: 0..r-1 result top (= a top), r..2r-1 result bottom (= b bottom)
    pairing = [-1] * (2 * r)
    seen_mid = [False] * r
    for x in range(2 * r):
        if pairing[x] != -1:
            continue
        y = _trace(a, b, x, seen_mid)
        pairing[x], pairing[y] = y, x

    loops = 0
    for mid in range(r):
        if seen_mid[mid]:
            continue
        loops += 1
        cur, in_a = mid, True
        while not seen_mid[cur]:
            seen_mid[cur] = True
            y = a.partner(cur + r) if in_a else b.partner(cur)
            cur = y - r if in_a else y
            in_a = not in_a
    return BrauerDiagram(r, tuple(pairing)), loops


def _trace(a: BrauerDiagram, b: BrauerDiagram, start: int, seen_mid) -> int:
    """Walk from a boundary dot of the stacked picture to its partner boundary dot.

    Result top dots live in a's top row, result bottom dots in b's bottom row;
    interface dots (a's bottom row identified with b's top row) are marked in
    seen_mid along the way.
    """
    r = a.r
    in_a = start < r
    x = start if in_a else start
    while True:
        y = a.partner(x) if in_a else b.partner(x)
        if in_a and y < r:
            return y
        if not in_a and y >= r:
            return y
        mid = (y - r) if in_a else y
        seen_mid[mid] = True
        if in_a:
            in_a, x = False, mid  # continue from b's top dot
        else:
            in_a, x = True, mid + r  # continue from a's bottom dot


@dataclass(frozen=True)
class DeltaSpec:
    """Multiplicative order of the parameter: generic, finite order n, or zero."""

    kind: str  # "generic" | "order" | "zero"
    n: int | None = None

    def __post_init__(self):
        if self.kind not in ("generic", "order", "zero"):
            raise ValueError(f"bad kind {self.kind!r}")
        if self.kind == "order" and (self.n is None or self.n < 1):
            raise ValueError("finite order requires n >= 1")
        if self.kind != "order" and self.n is not None:
            raise ValueError("n only allowed for finite order")

    @classmethod
    def generic(cls) -> "DeltaSpec":
        return cls("generic")

    @classmethod
    def finite_order(cls, n: int) -> "DeltaSpec":
        return cls("order", n)

    @classmethod
    def zero(cls) -> "DeltaSpec":
        return cls("zero")

    @classmethod
    def parse(cls, text: str) -> "DeltaSpec":
        text = text.strip().lower()
        if text == "generic":
            return cls.generic()
        if text == "zero":
            return cls.zero()
        m = re.fullmatch(r"order:(\d+)", text)
        if m:
            return cls.finite_order(int(m.group(1)))
        raise ValueError(f"bad delta spec {text!r} (expected generic|zero|order:N)")

    def __str__(self) -> str:
        return self.kind if self.kind != "order" else f"order:{self.n}"

    def normalize(self, h: "HElement") -> "HElement":
        if h.is_zero:
            if self.kind != "zero":
                raise ValueError("zero element only exists when delta is zero")
            return h
        if self.kind == "order":
            return HElement(h.diagram, h.exponent % self.n)
        if self.kind == "zero" and h.exponent > 0:
            return HElement.zero_element()
        return h

    def exponents_equal(self, k: int, m: int) -> bool:
        if self.kind == "order":
            return (k - m) % self.n == 0
        return k == m


@dataclass(frozen=True)
class HElement:
    """Element delta^k * d of the scaled-diagram monoid, or the zero element."""

    diagram: BrauerDiagram | None
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be >= 0")
        if self.diagram is None and self.exponent != 0:
            raise ValueError("zero element carries no exponent")

    @classmethod
    def of(cls, d: BrauerDiagram, k: int = 0) -> "HElement":
        return cls(d, k)

    @classmethod
    def zero_element(cls) -> "HElement":
        return cls(None, 0)

    @property
    def is_zero(self) -> bool:
        return self.diagram is None

    @property
    def r(self) -> int | None:
        return None if self.diagram is None else self.diagram.r

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        prefix = "" if self.exponent == 0 else f"d^{self.exponent} * "
        return prefix + self.diagram.to_text()


def h_mul(x: HElement, y: HElement, spec: DeltaSpec) -> HElement:
    """Product in H under the given delta spec."""
    x, y = spec.normalize(x), spec.normalize(y)
    if x.is_zero or y.is_zero:
        return HElement.zero_element()
    if x.diagram.r != y.diagram.r:
        raise ValueError("rank mismatch")
    d, loops = concat(x.diagram, y.diagram)
    return spec.normalize(HElement(d, x.exponent + y.exponent + loops))


def h_power(x: HElement, j: int, spec: DeltaSpec) -> HElement:
    if j < 1:
        raise ValueError("power must be >= 1")
    acc = x
    for _ in range(j - 1):
        acc = h_mul(acc, x, spec)
    return acc


def tensor(a: BrauerDiagram, b: BrauerDiagram) -> BrauerDiagram:
    """Place a and b side by side; a occupies the first a.r columns."""
    r = a.r + b.r

    def shift_a(x: int) -> int:
        return x if x < a.r else x + b.r

    pairing = [-1] * (2 * r)
    for x, y in a.edges():
        u, v = shift_a(x), shift_a(y)
        pairing[u], pairing[v] = v, u
    for x, y in b.edges():
        u = a.r + x if x < b.r else r + a.r + (x - b.r)
        v = a.r + y if y < b.r else r + a.r + (y - b.r)
        pairing[u], pairing[v] = v, u
    return BrauerDiagram(r, tuple(pairing))


def tensor_all(diagrams) -> BrauerDiagram:
    return reduce(tensor, diagrams)


def make_e() -> BrauerDiagram:
    """One horizontal arc in each row (two columns)."""
    return from_pairs(2, [(0, 1), (2, 3)])


def make_gamma(k: int) -> BrauerDiagram:
    """Permutation diagram of the k-cycle (1,2,...,k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return embed_permutation(Permutation.from_cycles(k, tuple(range(1, k + 1))))


def make_gamma_partition(lam: Partition) -> BrauerDiagram:
    lam = check_partition(lam)
    if not lam:
        raise ValueError("empty partition has no diagram")
    return tensor_all(make_gamma(part) for part in lam)


def make_h_t(t: int, sigma: Permutation, r: int) -> BrauerDiagram:
    """Arc ladder with t top/bottom arcs wrapped around the permutation sigma."""
    f = r - 2 * t
    if t < 0 or f < 0:
        raise ValueError("need 0 <= 2t <= r")
    if sigma.n != f:
        raise ValueError(f"permutation must act on r-2t = {f} letters")
    pairs = []
    for i in range(t):
        pairs.append((2 * i, 2 * i + 1))  # top arc 2i+1 - 2i+2 (one-based)
        pairs.append((r + 2 * i + 1, r + 2 * i + 2))  # bottom arc 2i+2 - 2i+3
    for i in range(f):
        img = sigma(i)
        bottom = r if img == 0 else r + 2 * t + img
        pairs.append((2 * t + i, bottom))
    return from_pairs(r, pairs)


def make_loop(r: int) -> BrauerDiagram:
    """Single closed cycle through all columns using horizontal arcs only."""
    if r < 2 or r % 2 != 0:
        raise ValueError("loop diagram needs even r >= 2")
    pairs = [(2 * i, 2 * i + 1) for i in range(r // 2)]
    pairs += [(r + (2 * i + 1) % r, r + (2 * i + 2) % r) for i in range(r // 2)]
    return from_pairs(r, pairs)


def canonical_diagram(mu, r: int) -> BrauerDiagram:
    """Reference diagram of cycle type mu: arc ladder around the largest cycle,
    the remaining cycles side by side, and one two-column arc pair per zero.

    A cycle type with no non-zero part is realized by a single horizontal-arc
    cycle spanning the spare columns, padded with arc pairs.
    """
    mu = tuple(mu)
    if not mu or any(p < 0 for p in mu) or any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"bad cycle type {mu!r}")
    nz = tuple(p for p in mu if p > 0)
    m0 = len(mu) - len(nz)
    spare = r - sum(nz)
    if spare < 0 or spare % 2 != 0 or m0 > spare // 2:
        raise ValueError(f"cycle type {mu!r} is not valid for rank {r}")
    if not nz:
        body = make_loop(r - 2 * (m0 - 1))
        return tensor_all([body] + [make_e()] * (m0 - 1))
    t = spare // 2 - m0
    sigma = Permutation.from_cycles(nz[0], tuple(range(1, nz[0] + 1)))
    parts = [make_h_t(t, sigma, nz[0] + 2 * t)]
    parts += [make_gamma(p) for p in nz[1:]]
    parts += [make_e()] * m0
    return tensor_all(parts)


def flip(d: BrauerDiagram) -> BrauerDiagram:
    """Exchange top and bottom rows."""
    r = d.r

    def mirror(x: int) -> int:
        return x + r if x < r else x - r

    pairing = [0] * (2 * r)
    for x in range(2 * r):
        pairing[mirror(x)] = mirror(d.partner(x))
    return BrauerDiagram(r, tuple(pairing))


def enumerate_diagrams(r: int) -> Iterator[BrauerDiagram]:
    """All (2r-1)!! diagrams, smallest unpaired dot matched with each larger dot."""
    if r < 1:
        raise ValueError("r must be >= 1")
    n = 2 * r
    pairing = [-1] * n

    def rec(free: list[int]) -> Iterator[BrauerDiagram]:
        if not free:
            yield BrauerDiagram(r, tuple(pairing))
            return
        x = free[0]
        for i in range(1, len(free)):
            y = free[i]
            pairing[x], pairing[y] = y, x
            yield from rec(free[1:i] + free[i + 1 :])
            pairing[x] = pairing[y] = -1

    yield from rec(list(range(n)))


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out
