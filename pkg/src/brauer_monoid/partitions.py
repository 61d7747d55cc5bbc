"""Integer partitions and symmetric-group character values.

Partitions are plain tuples of positive integers in non-increasing order;
the empty partition is ``()``.  Character values are computed by the
Murnaghan-Nakayama recursion over border strips.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def is_p_singular(lam: Partition, p: int) -> bool:
    """p consecutive equal parts somewhere; every partition is 0-regular."""
    if p == 0:
        return False
    k = len(lam)
    return any(
        lam[i] == lam[i + p - 1] for i in range(k - p + 1)
    )


def is_p_regular(lam: Partition, p: int) -> bool:
    return not is_p_singular(lam, p)


def is_p_special(lam: Partition, p: int) -> bool:
    """No part divisible by p; every partition is 0-special."""
    if p == 0:
        return True
    return all(part % p != 0 for part in lam)


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    n = sum(lam)
    denom = 1
    for row in hook_lengths(lam):
        for h in row:
            denom *= h
    value, rem = divmod(factorial(n), denom)
    assert rem == 0
    return value


def _border_strips(lam: Partition, size: int):
    """Yield (new_shape, height) for each removable border strip of given size.

    Works on the beta-set {lam_i + k - i}: removing a strip of the given size
    replaces one beta-number b by b - size, provided that stays distinct.
    """
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    beta_set = set(beta)
    for b in beta:
        c = b - size
        if c < 0 or c in beta_set:
            continue
        new_beta = sorted((beta_set - {b}) | {c}, reverse=True)
        shape = tuple(nb - (k - 1 - i) for i, nb in enumerate(new_beta))
        height = sum(1 for x in beta_set if c < x < b)
        yield tuple(p for p in shape if p > 0), height


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric-group character value chi^lam at class mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if not lam:
        return 1
    value = 0
    head, rest = mu[0], mu[1:]
    for new_shape, height in _border_strips(lam, head):
        value += (-1) ** height * mn_character(new_shape, rest)
    return value
