"""Cell-module characters, character tables, and the semisimplicity test.

The character of a scaled diagram on the module S^lam (x) V_{r,t} is a sum
over the partial diagrams the diagram fixes: each fixed partial diagram
contributes delta^(loops) times a symmetric-group character value of the
permutation induced on its free dots.  Everything is exact: values are
integer polynomials in delta.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .deltapoly import DeltaPoly
from .diagrams import (
    BrauerDiagram,
    DeltaSpec,
    HElement,
    Permutation,
    canonical_diagram,
    double_factorial,
    h_mul,
)
from .invariants import CycleType
from .partitions import Partition, check_partition, mn_character, partitions, syt_count


@dataclass(frozen=True)
class PartialDiagram:
    """One row of r dots with t disjoint arcs; unpaired dots are free."""

    r: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        used = [x for arc in self.arcs for x in arc]
        if len(set(used)) != len(used) or any(not 0 <= x < self.r for x in used):
            raise ValueError(f"bad arcs {self.arcs!r}")
        if any(x >= y for x, y in self.arcs) or list(self.arcs) != sorted(self.arcs):
            raise ValueError("arcs must be sorted pairs")

    @classmethod
    def of(cls, r: int, arcs) -> "PartialDiagram":
        return cls(r, tuple(sorted(tuple(sorted(a)) for a in arcs)))

    @property
    def t(self) -> int:
        return len(self.arcs)

    def free_dots(self) -> tuple[int, ...]:
        used = {x for arc in self.arcs for x in arc}
        return tuple(x for x in range(self.r) if x not in used)


def enumerate_partial_diagrams(r: int, t: int) -> tuple[PartialDiagram, ...]:
    """All C(r,2t)(2t-1)!! partial diagrams with t arcs, deterministic order."""
    if t < 0 or 2 * t > r:
        raise ValueError("need 0 <= 2t <= r")
    out = []

    def matchings(dots):
        if not dots:
            yield ()
            return
        x = dots[0]
        for i in range(1, len(dots)):
            y = dots[i]
            for rest in matchings(dots[1:i] + dots[i + 1 :]):
                yield ((x, y),) + rest

    for support in itertools.combinations(range(r), 2 * t):
        for arcs in matchings(list(support)):
            out.append(PartialDiagram.of(r, arcs))
    return tuple(out)


def partial_dim(r: int, t: int) -> int:
    return comb(r, 2 * t) * double_factorial(2 * t - 1)


def partial_action(v: PartialDiagram, a: BrauerDiagram):
    """Act on a partial diagram by stacking it on top of a.

    Returns None when the arc count would grow (the product is zero), else
    (w, loops, pi) with w the resulting partial diagram, loops the number of
    closed cycles deleted, and pi the permutation joining free dots of v to
    free dots of w (both numbered left to right).
    """
    if v.r != a.r:
        raise ValueError("rank mismatch")
    r = v.r
    varc = {}
    for x, y in v.arcs:
        varc[x], varc[y] = y, x
    free_v = v.free_dots()

    # walk from a bottom dot up through a and v until we land on a bottom dot
    # again (an arc of w) or a free dot of v (a through connection)
    def climb(start_bottom: int):
        x = r + start_bottom  # a's label for the bottom dot
        while True:
            y = a.partner(x)
            if y >= r:
                return ("bottom", y - r)
            if y in varc:
                x = varc[y]  # across v's arc, then back down through a
            else:
                return ("free", y)

    w_arcs = []
    joins = {}  # free dot of v -> bottom dot
    seen_bottom = set()
    for i in range(r):
        if i in seen_bottom:
            continue
        kind, land = climb(i)
        if kind == "bottom":
            seen_bottom.update((i, land))
            w_arcs.append((i, land))
        else:
            seen_bottom.add(i)
            if land in joins:  # two bottom dots reach the same free dot: impossible
                raise AssertionError("path reused")
            joins[land] = i
    if len(w_arcs) > v.t:
        return None
    # loops: cycles alternating v's arcs with a's top arcs
    visited = set()
    loops = 0
    for x in range(r):
        if x in visited or x not in varc:
            continue
        cur = x
        is_loop = False
        chain = []
        while True:
            chain.append(cur)
            nxt = varc[cur]
            chain.append(nxt)
            down = a.partner(nxt)
            if down >= r or down not in varc or down in visited:
                break
            if down == x:
                is_loop = True
                break
            cur = down
        visited.update(chain)
        if is_loop:
            loops += 1
    w = PartialDiagram.of(r, w_arcs)
    free_w = w.free_dots()
    pos_w = {dot: i for i, dot in enumerate(free_w)}
    images = [0] * len(free_v)
    for i, dot in enumerate(free_v):
        images[i] = pos_w[joins[dot]]
    return w, loops, Permutation(tuple(images))


def cell_character(lam: Partition, t: int, h: HElement) -> DeltaPoly:
    """Trace of h on the cell module S^lam (x) V_{r,t}, as a polynomial in delta."""
    lam = check_partition(lam)
    if h.is_zero:
        return DeltaPoly()
    a = h.diagram
    if sum(lam) != a.r - 2 * t:
        raise ValueError(f"shape mismatch: |{lam}| != {a.r} - 2*{t}")
    total = DeltaPoly()
    for v in enumerate_partial_diagrams(a.r, t):
        act = partial_action(v, a)
        if act is None:
            continue
        w, loops, pi = act
        if w != v:
            continue
        value = mn_character(lam, pi.cycle_type())
        total = total + DeltaPoly.delta_power(h.exponent + loops, value)
    return total


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def cell_labels(r: int) -> tuple[Partition, ...]:
    """Partitions of r, r-2, ... in the block ordering: larger size first,
    descending lexicographic within a size."""
    out: list[Partition] = []
    size = r
    while size >= 0:
        out.extend(partitions(size))
        size -= 2
    return tuple(out)


def p_regular_labels(r: int, p: int) -> tuple[Partition, ...]:
    from .partitions import is_p_regular

    return tuple(lam for lam in cell_labels(r) if is_p_regular(lam, p))


def p_special_labels(r: int, p: int) -> tuple[Partition, ...]:
    from .partitions import is_p_special

    return tuple(lam for lam in cell_labels(r) if is_p_special(lam, p))


def partition_str(lam: Partition) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


@dataclass(frozen=True)
class CharTable:
    """Rows and columns labelled by partitions; entries delta polynomials."""

    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[DeltaPoly, ...], ...]

    def entry(self, lam: Partition, mu: Partition) -> DeltaPoly:
        return self.entries[self.rows.index(tuple(lam))][self.cols.index(tuple(mu))]

    def submatrix(self, rows, cols) -> "CharTable":
        rows = tuple(tuple(x) for x in rows)
        cols = tuple(tuple(x) for x in cols)
        ri = [self.rows.index(x) for x in rows]
        ci = [self.cols.index(x) for x in cols]
        return CharTable(
            rows, cols, tuple(tuple(self.entries[i][j] for j in ci) for i in ri)
        )

    def to_csv(self) -> str:
        lines = ["," + ",".join(f'"{partition_str(c)}"' for c in self.cols)]
        for lam, row in zip(self.rows, self.entries):
            lines.append(
                f'"{partition_str(lam)}",' + ",".join(str(e) for e in row)
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "rows": [list(lam) for lam in self.rows],
                "cols": [list(mu) for mu in self.cols],
                "entries": [[str(e) for e in row] for row in self.entries],
            }
        )


def character_value(lam: Partition, r: int, mu: CycleType) -> DeltaPoly:
    """Delta-free table value of the cell character at a zero-free cycle type.

    The value at (mu, 0^k) is delta^k times this one.  The empty cycle type
    is handled through its minimal realization with a single zero part.
    """
    lam = check_partition(lam)
    mu = tuple(mu)
    t = (r - sum(lam)) // 2
    if mu:
        d = canonical_diagram(mu, r)
        return cell_character(lam, t, HElement.of(d))
    d = canonical_diagram((0,), r)
    return cell_character(lam, t, HElement.of(d)).divexact_delta_power(1)


def cell_char_table(r: int) -> CharTable:
    labels = cell_labels(r)
    entries = tuple(
        tuple(character_value(lam, r, mu) for mu in labels) for lam in labels
    )
    return CharTable(labels, labels, entries)


def load_dprime(text: str) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """Decomposition-matrix input: JSON {order: [partitions], rows: [[int]]}."""
    data = json.loads(text)
    order = tuple(tuple(lam) for lam in data["order"])
    rows = tuple(tuple(int(x) for x in row) for row in data["rows"])
    if len(rows) != len(order) or any(len(row) != len(order) for row in rows):
        raise ValueError("decomposition matrix must be square over its labels")
    return order, rows


def check_unitriangular(rows) -> None:
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 1:
            raise ValueError("diagonal entries must be 1")
        for j in range(i + 1, n):
            if rows[i][j] != 0:
                raise ValueError("matrix must be lower triangular")


def invert_unitriangular(rows) -> list[list[int]]:
    n = len(rows)
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            s = sum(rows[i][k] * inv[k][j] for k in range(j, i))
            inv[i][j] = -s
    return inv


def simple_char_table(r: int, dprime=None, p: int = 0) -> CharTable:
    """Character table of the simple modules: (D')^-1 times the cell table.

    dprime is (labels, rows) over the p-regular labels in table order; the
    identity matrix (semisimple case) is used when omitted.
    """
    row_labels = p_regular_labels(r, p)
    if dprime is None:
        order = row_labels
        rows = tuple(
            tuple(1 if i == j else 0 for j in range(len(order)))
            for i in range(len(order))
        )
    else:
        order, rows = dprime
    if tuple(order) != tuple(row_labels):
        raise ValueError(
            f"decomposition matrix labels must match the table order {row_labels}"
        )
    check_unitriangular(rows)
    inv = invert_unitriangular(rows)
    cols = cell_labels(r)
    cell_rows = [
        [character_value(lam, r, mu) for mu in cols] for lam in row_labels
    ]
    entries = tuple(
        tuple(
            _int_combo(inv[i], [cell_rows[k][j] for k in range(len(row_labels))])
            for j in range(len(cols))
        )
        for i in range(len(row_labels))
    )
    return CharTable(tuple(row_labels), cols, entries)


def _int_combo(coeffs, polys) -> DeltaPoly:
    total = DeltaPoly()
    for c, poly in zip(coeffs, polys):
        if c:
            total = total + poly.scale(c)
    return total


def power_trace_charpoly(lam: Partition, t: int, h: HElement, spec: DeltaSpec):
    """Characteristic polynomial of the cell-module action via Newton's identities.

    Only meaningful over a characteristic-0 function field, so the generic
    spec is required.  Returns coefficients by descending power as exact
    integer polynomials in delta (leading coefficient 1).
    """
    if spec.kind != "generic":
        raise ValueError("characteristic polynomial reconstruction needs the generic spec")
    lam = check_partition(lam)
    if h.is_zero:
        raise ValueError("zero element has no cell action")
    r = h.diagram.r
    dim = (syt_count(lam) if lam else 1) * partial_dim(r, t)
    power_sums = []
    acc = h
    for j in range(1, dim + 1):
        power_sums.append(cell_character(lam, t, acc))
        if j < dim:
            acc = h_mul(acc, h, spec)
    # Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i, over Q[delta]
    elem = [{0: Fraction(1)}]
    for k in range(1, dim + 1):
        total: dict[int, Fraction] = {}
        for i in range(1, k + 1):
            p_i = power_sums[i - 1]
            for e_pow, e_coef in elem[k - i].items():
                for d_pow, d_coef in enumerate(p_i.coeffs):
                    if d_coef == 0:
                        continue
                    sign = 1 if (i - 1) % 2 == 0 else -1
                    key = e_pow + d_pow
                    total[key] = total.get(key, Fraction(0)) + sign * e_coef * d_coef
        elem.append({k2: v / k for k2, v in total.items() if v})
    out = []
    for k in range(dim + 1):
        coeffs = [Fraction(0)] * (max(elem[k], default=0) + 1)
        for pow_, val in elem[k].items():
            coeffs[pow_] = val if k % 2 == 0 else -val
        if any(c.denominator != 1 for c in coeffs):
            raise AssertionError("characteristic polynomial must have integer coefficients")
        out.append(DeltaPoly.of(int(c) for c in coeffs))
    return tuple(out)


def is_semisimple(r: int, delta, p: int = 0) -> bool:
    """Semisimplicity of the rank-r algebra at the given parameter value.

    delta is an integer, the string "generic", or the string "zero" / 0.
    The characteristic condition reads p as not dividing r! (p = 0 or p > r).
    """
    if p != 0 and not _is_prime(p):
        raise ValueError("p must be 0 or prime")
    if r < 1:
        raise ValueError("r must be >= 1")
    char_ok = p == 0 or p > r
    if delta == "zero" or delta == 0:
        return r in (1, 3, 5) and char_ok
    if delta == "generic":
        return char_ok
    if not isinstance(delta, int):
        raise ValueError(f"bad delta descriptor {delta!r}")
    excluded = set(range(4 - 2 * r, r - 2 + 1)) - {
        i for i in range(4 - 2 * r + 1, 3 - r + 1) if i % 2 != 0
    }
    return delta not in excluded and char_ok


def bareiss_det(matrix: list[list[DeltaPoly]]) -> DeltaPoly:
    """Fraction-free determinant over the polynomial ring."""
    n = len(matrix)
    if n == 0:
        return DeltaPoly.const(1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = DeltaPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if swap is None:
                return DeltaPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det.scale(sign)
