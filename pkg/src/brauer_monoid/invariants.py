"""Cycle type and generalized cycle type of a diagram.

Both invariants arise from one traversal: join every top dot to the bottom
dot below it by a connector edge and walk the closed components, alternating
between diagram edges and connectors.  Each traversed diagram edge records a
letter (U upper arc, L lower arc, T through arc); through arcs also record
the direction they were crossed in.  The cycle type keeps, per component,
the absolute difference of upward and downward crossings (zeros count); the
generalized cycle type keeps the whole letter string up to rotation and
reversal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import BrauerDiagram, HElement

CycleType = tuple[int, ...]

_CANON_ORDER = str.maketrans("ULT", "abc")  # U < L < T


def check_cycle_type(mu) -> CycleType:
    mu = tuple(mu)
    if not mu:
        raise ValueError("a cycle type has at least one part")
    if any(p < 0 for p in mu) or any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"parts must be non-increasing and >= 0: {mu!r}")
    return mu


def nonzero_prefix(mu: CycleType) -> tuple[int, ...]:
    return tuple(p for p in mu if p > 0)


def zero_count(mu: CycleType) -> int:
    return sum(1 for p in mu if p == 0)


def cycle_type_str(mu: CycleType) -> str:
    return "(" + ",".join(str(p) for p in mu) + ")"


def parse_cycle_type(text: str) -> CycleType:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle type {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    return tuple(int(tok) for tok in body.split(","))


def valid_cycle_type_for_rank(mu: CycleType, r: int) -> bool:
    """Non-zero parts form a partition of r-2k and the zeros fit the spare arcs."""
    nz = nonzero_prefix(mu)
    if len(mu) == 0:
        return False
    spare = r - sum(nz)
    if spare < 0 or spare % 2 != 0:
        return False
    return zero_count(mu) <= spare // 2


def _traverse(d: BrauerDiagram):
    """Yield (letters, net) per connected component, leftmost-top start."""
    r = d.r

    def mate(x: int) -> int:
        return x + r if x < r else x - r

    seen = [False] * (2 * r)
    for start in range(2 * r):
        if seen[start]:
            continue
        letters: list[str] = []
        net = 0
        cur = start
        while True:
            seen[cur] = True
            nxt = d.partner(cur)
            seen[nxt] = True
            if cur < r and nxt < r:
                letters.append("U")
            elif cur >= r and nxt >= r:
                letters.append("L")
            else:
                letters.append("T")
                net += 1 if cur >= r else -1
            cur = mate(nxt)
            if cur == start:
                break
        yield "".join(letters), net


def cycle_type(d: BrauerDiagram) -> CycleType:
    """Ram's partition-with-zeros invariant."""
    parts = sorted((abs(net) for _, net in _traverse(d)), reverse=True)
    return tuple(parts)


def canon_string(s: str) -> str:
    """Lexicographic minimum (U < L < T) over all rotations of s and of its reversal."""
    if not s:
        raise ValueError("empty string")
    best = None
    for base in (s, s[::-1]):
        for k in range(len(base)):
            cand = base[k:] + base[:k]
            if best is None or cand.translate(_CANON_ORDER) < best.translate(_CANON_ORDER):
                best = cand
    return best


@dataclass(frozen=True)
class GCT:
    """Multiset of canonical component strings."""

    strings: tuple[str, ...]

    @classmethod
    def of(cls, strings) -> "GCT":
        return cls(tuple(sorted(canon_string(s) for s in strings)))

    def __str__(self) -> str:
        return "{" + ",".join(self.strings) + "}"

    @classmethod
    def parse(cls, text: str) -> "GCT":
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"bad GCT {text!r}")
        parts = [p.strip() for p in text[1:-1].split(",") if p.strip()]
        if not parts:
            raise ValueError("empty GCT")
        for p in parts:
            if set(p) - set("ULT"):
                raise ValueError(f"bad letters in {p!r}")
        return cls.of(parts)


def gct(d: BrauerDiagram) -> GCT:
    return GCT.of(s for s, _ in _traverse(d))


def gct_equivalent(g1: GCT, g2: GCT) -> bool:
    return GCT.of(g1.strings) == GCT.of(g2.strings)


def _validate_gct_string(s: str) -> None:
    if not s:
        raise ValueError("empty component string")
    if set(s) - set("ULT"):
        raise ValueError(f"bad letters in {s!r}")
    anchors = [c for c in s if c != "T"]
    if len(anchors) % 2 != 0:
        raise ValueError(f"U/L letters cannot alternate in {s!r}")
    for i, c in enumerate(anchors):
        if c == anchors[i - 1]:
            raise ValueError(f"U/L letters do not alternate in {s!r}")


def string_net(s: str) -> int:
    """Signed through-arc count: T after U goes up, T after L goes down."""
    _validate_gct_string(s)
    if "U" not in s:
        return len(s)  # pure through cycle
    net = 0
    n = len(s)
    for i, c in enumerate(s):
        if c != "T":
            continue
        j = (i - 1) % n
        while s[j] == "T":
            j = (j - 1) % n
        net += 1 if s[j] == "U" else -1
    return net


def ct_from_gct(g: GCT) -> CycleType:
    """Recover the cycle type of any diagram realizing g."""
    parts = sorted((abs(string_net(s)) for s in g.strings), reverse=True)
    return tuple(parts)


def p_prime_part(mu: CycleType, p: int) -> CycleType:
    """Replace every non-zero part divisible by p by that many ones."""
    if p != 0 and not _is_prime(p):
        raise ValueError(f"p must be 0 or prime, got {p}")
    if p == 0:
        return tuple(mu)
    parts: list[int] = []
    for part in mu:
        if part > 0 and part % p == 0:
            parts.extend([1] * part)
        else:
            parts.append(part)
    return tuple(sorted(parts, reverse=True))


def cycle_type_h(h: HElement) -> CycleType:
    """Cycle type of delta^k d: the diagram's cycle type with k extra zeros."""
    if h.is_zero:
        raise ValueError("the zero element has no cycle type")
    return tuple(sorted(cycle_type(h.diagram) + (0,) * h.exponent, reverse=True))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True
