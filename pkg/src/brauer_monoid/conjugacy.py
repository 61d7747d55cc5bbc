"""The three conjugacy relations on the scaled-diagram monoid.

Deciders evaluate closed-form criteria on the invariants; the brute-force
oracles build the actual relations (conjugation orbits, transitive closure
of the trade relation uv ~ vu) so the criteria can be checked against them
at small rank.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagrams import (
    BrauerDiagram,
    DeltaSpec,
    HElement,
    Permutation,
    concat,
    double_factorial,
    embed_permutation,
    enumerate_diagrams,
)
from .invariants import (
    GCT,
    CycleType,
    cycle_type,
    cycle_type_h,
    gct,
    gct_equivalent,
    nonzero_prefix,
    p_prime_part,
    zero_count,
)

_PRIME_CAP = 97


def _check_p(p: int) -> None:
    if p == 0:
        return
    if p > _PRIME_CAP:
        raise ValueError(f"p too large (max {_PRIME_CAP})")
    if p < 2 or any(p % i == 0 for i in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p must be 0 or prime, got {p}")


def _check_ranks(h1: HElement, h2: HElement) -> None:
    if h1.is_zero or h2.is_zero:
        return
    if h1.diagram.r != h2.diagram.r:
        raise ValueError("rank mismatch")


def sigma_conjugate(h1: HElement, h2: HElement, spec: DeltaSpec) -> bool:
    """Conjugacy by permutation units: equal exponents and equivalent GCTs."""
    _check_ranks(h1, h2)
    h1, h2 = spec.normalize(h1), spec.normalize(h2)
    if h1.is_zero or h2.is_zero:
        return h1.is_zero and h2.is_zero
    return spec.exponents_equal(h1.exponent, h2.exponent) and gct_equivalent(
        gct(h1.diagram), gct(h2.diagram)
    )


def _split_ct(h: HElement) -> tuple[tuple[int, ...], int]:
    """Non-zero parts and total zero count of the cycle type of h."""
    ct = cycle_type_h(h)
    return nonzero_prefix(ct), zero_count(ct)


def _zero_reachable(alpha: tuple[int, ...], zeros: int) -> bool:
    """Whether delta = 0 collapses the element's class onto the zero element.

    One zero can be traded for a scalar factor only when the smaller cycle
    type still has a part; a bare (0) is stuck with its single component.
    """
    return zeros >= 1 and (bool(alpha) or zeros >= 2)


def uvvu_conjugate(h1: HElement, h2: HElement, spec: DeltaSpec) -> bool:
    """Transitive closure of {uv ~ vu}: controlled by the cycle type."""
    _check_ranks(h1, h2)
    h1, h2 = spec.normalize(h1), spec.normalize(h2)
    if spec.kind == "zero":
        zr1 = True if h1.is_zero else _zero_reachable(*_split_ct(h1))
        zr2 = True if h2.is_zero else _zero_reachable(*_split_ct(h2))
        if zr1 or zr2:
            return zr1 and zr2
        return cycle_type_h(h1) == cycle_type_h(h2)
    a1, z1 = _split_ct(h1)
    a2, z2 = _split_ct(h2)
    if spec.kind == "order":
        return a1 == a2 and (z1 - z2) % spec.n == 0
    return a1 == a2 and z1 == z2


def chi_conjugate(h1: HElement, h2: HElement, spec: DeltaSpec, p: int) -> bool:
    """Equality of all representation traces: the p'-part criterion."""
    _check_p(p)
    _check_ranks(h1, h2)
    h1, h2 = spec.normalize(h1), spec.normalize(h2)
    if spec.kind == "zero":
        zeroish1 = h1.is_zero or _split_ct(h1)[1] >= 1
        zeroish2 = h2.is_zero or _split_ct(h2)[1] >= 1
        if zeroish1 or zeroish2:
            return zeroish1 and zeroish2
        return p_prime_part(_split_ct(h1)[0], p) == p_prime_part(_split_ct(h2)[0], p)
    a1, z1 = _split_ct(h1)
    a2, z2 = _split_ct(h2)
    if p_prime_part(a1, p) != p_prime_part(a2, p):
        return False
    if spec.kind == "order":
        return (z1 - z2) % spec.n == 0
    return z1 == z2


def sigma_classes(r: int) -> list[tuple[GCT, int]]:
    """Census of all diagrams by canonical GCT; sizes sum to (2r-1)!!."""
    counts: dict[GCT, int] = {}
    for d in enumerate_diagrams(r):
        key = gct(d)
        counts[key] = counts.get(key, 0) + 1
    assert sum(counts.values()) == double_factorial(2 * r - 1)
    return sorted(counts.items(), key=lambda kv: (len(kv[0].strings), str(kv[0])))


def sigma_orbit_partition(r: int) -> dict[BrauerDiagram, int]:
    """Orbits under explicit conjugation by all permutations (oracle)."""
    diagrams = list(enumerate_diagrams(r))
    index = {d: i for i, d in enumerate(diagrams)}
    uf = UnionFind(len(diagrams))
    perms = [embed_permutation(Permutation(images)) for images in itertools.permutations(range(r))]
    inverses = [
        embed_permutation(Permutation(images).inverse())
        for images in itertools.permutations(range(r))
    ]
    for d in diagrams:
        for s, s_inv in zip(perms, inverses):
            left, _ = concat(s_inv, d)
            moved, _ = concat(left, s)
            uf.union(index[d], index[moved])
    return {d: uf.find(i) for d, i in index.items()}


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


ZERO_STATE = ("zero",)


@dataclass
class UvvuOracleResult:
    """Partition of the window {(exponent, diagram)} (plus the zero element)."""

    classes: tuple[frozenset, ...]
    stabilized: bool | None  # None when the state space is already finite

    def same_class(self, s1, s2) -> bool:
        for cls in self.classes:
            if s1 in cls:
                return s2 in cls
        raise KeyError(f"state {s1!r} outside the window")


def oracle_uvvu_classes(
    r: int, spec: DeltaSpec, exponent_cap: int = 6, max_rank: int = 4
) -> UvvuOracleResult:
    """Transitive closure of the trade relation, restricted to a window.

    Under the generic spec exponents are unbounded, so the closure runs with
    caps K and 2K and reports whether the partition restricted to K agreed
    (`stabilized`).  Finite-order and zero specs have finite state spaces.
    """
    if r > max_rank:
        raise ValueError(f"rank {r} exceeds the oracle budget {max_rank}")
    diagrams = list(enumerate_diagrams(r))
    idx = {d: i for i, d in enumerate(diagrams)}
    pair_data = []
    for a in diagrams:
        for b in diagrams:
            ab, l1 = concat(a, b)
            ba, l2 = concat(b, a)
            pair_data.append((idx[ab], l1, idx[ba], l2))

    if spec.kind == "zero":
        states = [ZERO_STATE] + [(0, i) for i in range(len(diagrams))]
        state_index = {s: j for j, s in enumerate(states)}
        uf = UnionFind(len(states))
        for iab, l1, iba, l2 in pair_data:
            s1 = ZERO_STATE if l1 > 0 else (0, iab)
            s2 = ZERO_STATE if l2 > 0 else (0, iba)
            uf.union(state_index[s1], state_index[s2])
        return UvvuOracleResult(_collect(states, uf), None)

    if spec.kind == "order":
        n = spec.n
        states = [(k, i) for k in range(n) for i in range(len(diagrams))]
        state_index = {s: j for j, s in enumerate(states)}
        uf = UnionFind(len(states))
        for iab, l1, iba, l2 in pair_data:
            for c in range(n):
                uf.union(
                    state_index[((c + l1) % n, iab)],
                    state_index[((c + l2) % n, iba)],
                )
        return UvvuOracleResult(_collect(states, uf), None)

    def closure(cap: int):
        states = [(k, i) for k in range(cap + 1) for i in range(len(diagrams))]
        state_index = {s: j for j, s in enumerate(states)}
        uf = UnionFind(len(states))
        for iab, l1, iba, l2 in pair_data:
            for c in range(cap + 1):
                k1, k2 = c + l1, c + l2
                if k1 <= cap and k2 <= cap:
                    uf.union(state_index[(k1, iab)], state_index[(k2, iba)])
        return states, uf

    def window_partition(states, uf, cap):
        groups: dict[int, set] = {}
        index = {s: j for j, s in enumerate(states)}
        for s in states:
            if s[0] <= cap:
                groups.setdefault(uf.find(index[s]), set()).add(s)
        return {frozenset(g) for g in groups.values()}

    states_k, uf_k = closure(exponent_cap)
    states_2k, uf_2k = closure(2 * exponent_cap)
    part_k = window_partition(states_k, uf_k, exponent_cap)
    part_2k = window_partition(states_2k, uf_2k, exponent_cap)
    stable = part_k == part_2k
    return UvvuOracleResult(tuple(sorted(part_k, key=_class_key)), stable)


def _collect(states, uf) -> tuple[frozenset, ...]:
    groups: dict[int, set] = {}
    for j, s in enumerate(states):
        groups.setdefault(uf.find(j), set()).add(s)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=_class_key))


def _class_key(cls: frozenset):
    return sorted(str(s) for s in cls)


def diagram_state(d_index: int, exponent: int = 0):
    return (exponent, d_index)
