"""Modular characters: eigenvalue profiles, lifting, and simple-module tables.

The action of a diagram with cycle type (mu', 0^m0) on a cell module has
eigenvalues 0 or delta^m0 times an l-th root of unity, l the order of a
permutation with cycle type mu'.  Traces of the first l powers are exact
monomials c_j * delta^(j*m0); a discrete Fourier inversion over Z[zeta_l]
recovers the multiplicity of each root.  The modular character is the sum of
the lifted non-zero eigenvalues with the parameter kept formal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

from .cyclotomic import CycloValue, GFElement, reduce_mod_p as _reduce_value
from .deltapoly import DeltaPoly
from .diagrams import BrauerDiagram, DeltaSpec, HElement, canonical_diagram, h_mul
from .invariants import CycleType, cycle_type, nonzero_prefix, zero_count
from .ordinary import (
    CharTable,
    cell_character,
    cell_labels,
    check_unitriangular,
    invert_unitriangular,
    p_regular_labels,
    p_special_labels,
    partial_dim,
    partition_str,
)
from .partitions import Partition, check_partition, is_p_special, syt_count

_GENERIC = DeltaSpec.generic()


@dataclass(frozen=True)
class EigenProfile:
    """Multiplicities of the eigenvalues delta^m0 * zeta_l^a, plus the kernel."""

    l: int
    m0: int
    mult: tuple[int, ...]  # index a = 0..l-1
    zero_mult: int

    def multiplicity(self, a: int) -> int:
        return self.mult[a % self.l]

    @property
    def dimension(self) -> int:
        return self.zero_mult + sum(self.mult)


class ProfileError(AssertionError):
    """Divisibility or integrality failed: the inversion premises are broken."""


def eigen_profile(lam: Partition, t: int, d: BrauerDiagram) -> EigenProfile:
    """Eigenvalue multiplicities of the cell-module action of a diagram."""
    lam = check_partition(lam)
    ct = cycle_type(d)
    m0 = zero_count(ct)
    l = reduce(lcm, nonzero_prefix(ct), 1)
    dim = syt_count(lam) * partial_dim(d.r, t)
    constants = []
    acc = HElement.of(d)
    for j in range(1, l + 1):
        tj = cell_character(lam, t, acc)
        try:
            constants.append(tj.monomial_value(j * m0))
        except ValueError as exc:
            raise ProfileError(
                f"trace of power {j} is {tj}, not an integer multiple of d^{j * m0}"
            ) from exc
        if j < l:
            acc = h_mul(acc, HElement.of(d), _GENERIC)
    mult = []
    for a in range(l):
        total = CycloValue.zero(l)
        for j, c in enumerate(constants, start=1):
            total = total + CycloValue.root_of_unity(l, (-a * j) % l).scale(c)
        try:
            value = total.divexact_int(l).as_integer()
        except ValueError as exc:
            raise ProfileError(f"multiplicity of root {a} is not an integer") from exc
        if value < 0:
            raise ProfileError(f"multiplicity of root {a} is negative: {value}")
        mult.append(value)
    zero_mult = dim - sum(mult)
    if zero_mult < 0:
        raise ProfileError("non-zero eigenvalues exceed the dimension")
    return EigenProfile(l, m0, tuple(mult), zero_mult)


def lift_root(a: int, l: int) -> CycloValue:
    """Lift of the chosen l-th root of unity to the a-th power."""
    return CycloValue.root_of_unity(l, a)


def reduce_mod_p(value: CycloValue, p: int, delta_residue: int) -> GFElement:
    """Reduce a lifted value into GF(p^k); p must not divide the conductor."""
    return _reduce_value(value, p, delta_residue)


def modular_cell_character(lam: Partition, t: int, h: HElement, p: int) -> CycloValue:
    """Sum of lifted non-zero eigenvalues of h on the cell module.

    Requires the non-zero parts of the cycle type to be p-special, so the
    roots of unity involved lift uniquely.  The formal parameter power
    accounts for all zero parts, including the stored exponent of h.
    """
    if h.is_zero:
        return CycloValue.zero()
    ct = cycle_type(h.diagram)
    if not is_p_special(nonzero_prefix(ct), p):
        raise ValueError(f"cycle type {ct} is not {p}-special")
    profile = eigen_profile(lam, t, h.diagram)
    if p != 0 and gcd(profile.l, p) != 1:
        raise ValueError(f"p = {p} divides the eigenvalue order {profile.l}")
    total = CycloValue.zero(profile.l)
    for a, m in enumerate(profile.mult):
        if m:
            total = total + CycloValue.root_of_unity(profile.l, a).scale(m)
    return total.shift_dhat(profile.m0 + h.exponent)


def modular_character_value(lam: Partition, r: int, mu: CycleType, p: int) -> CycloValue:
    """Table value at a zero-free p-special cycle type (formal power stripped)."""
    lam = check_partition(lam)
    mu = tuple(mu)
    t = (r - sum(lam)) // 2
    if mu:
        value = modular_cell_character(lam, t, HElement.of(canonical_diagram(mu, r)), p)
        assert value.is_zero or value.dhat_exp == 0
        return value
    value = modular_cell_character(lam, t, HElement.of(canonical_diagram((0,), r)), p)
    assert value.is_zero or value.dhat_exp == 1
    return CycloValue(value.conductor, value.coeffs, 0)


@dataclass(frozen=True)
class ModularTable:
    """Rows: partitions; columns: p-special partitions; entries in Z[zeta_L]."""

    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[CycloValue, ...], ...]

    def entry(self, lam, mu) -> CycloValue:
        return self.entries[self.rows.index(tuple(lam))][self.cols.index(tuple(mu))]

    def submatrix(self, rows, cols) -> "ModularTable":
        rows = tuple(tuple(x) for x in rows)
        cols = tuple(tuple(x) for x in cols)
        ri = [self.rows.index(x) for x in rows]
        ci = [self.cols.index(x) for x in cols]
        return ModularTable(
            rows, cols, tuple(tuple(self.entries[i][j] for j in ci) for i in ri)
        )

    def conductor(self) -> int:
        return reduce(lcm, (e.conductor for row in self.entries for e in row), 1)

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "conductor": self.conductor(),
                "rows": [list(lam) for lam in self.rows],
                "cols": [list(mu) for mu in self.cols],
                "entries": [[str(e) for e in row] for row in self.entries],
            }
        )

    def to_csv(self) -> str:
        lines = ["," + ",".join(f'"{partition_str(c)}"' for c in self.cols)]
        for lam, row in zip(self.rows, self.entries):
            lines.append(
                f'"{partition_str(lam)}",' + ",".join(f'"{e}"' for e in row)
            )
        return "\n".join(lines) + "\n"


def _eigen_order(mu: CycleType) -> int:
    return reduce(lcm, nonzero_prefix(mu), 1)


def modular_cell_table(r: int, p: int) -> ModularTable:
    """Lifted character table of the cell modules on p-special columns."""
    rows = cell_labels(r)
    cols = p_special_labels(r, p)
    conductor = reduce(lcm, (_eigen_order(mu) for mu in cols), 1)
    entries = tuple(
        tuple(
            modular_character_value(lam, r, mu, p).to_conductor(conductor)
            for mu in cols
        )
        for lam in rows
    )
    return ModularTable(rows, cols, entries)


def modular_simple_table(r: int, p: int, dprime_p=None) -> ModularTable:
    """Modular character table of the simple modules: (D'_p)^{-1} X_{p'}."""
    row_labels = p_regular_labels(r, p)
    if dprime_p is None:
        order = row_labels
        rows = tuple(
            tuple(1 if i == j else 0 for j in range(len(order)))
            for i in range(len(order))
        )
    else:
        order, rows = dprime_p
    if tuple(order) != tuple(row_labels):
        raise ValueError(f"decomposition labels must match {row_labels}")
    check_unitriangular(rows)
    inv = invert_unitriangular(rows)
    cell = modular_cell_table(r, p)
    cell_rows = [cell.entries[cell.rows.index(lam)] for lam in row_labels]
    conductor = cell.conductor()
    entries = []
    for i in range(len(row_labels)):
        row = []
        for j in range(len(cell.cols)):
            total = CycloValue.zero(conductor)
            for k in range(len(row_labels)):
                if inv[i][k]:
                    total = total + cell_rows[k][j].scale(inv[i][k])
            row.append(total)
        entries.append(tuple(row))
    return ModularTable(tuple(row_labels), cell.cols, tuple(entries))


def verify_xi_dphi(xi_pprime: ModularTable, dec_matrix, phi: ModularTable) -> bool:
    """Check the factorization (lifted cell table) = D * Phi, rectangles allowed.

    dec_matrix rows are labelled by xi_pprime.rows, columns by phi.rows.
    """
    if xi_pprime.cols != phi.cols:
        raise ValueError("column labels differ")
    if len(dec_matrix) != len(xi_pprime.rows) or any(
        len(row) != len(phi.rows) for row in dec_matrix
    ):
        raise ValueError("decomposition matrix shape mismatch")
    for i in range(len(xi_pprime.rows)):
        for j in range(len(xi_pprime.cols)):
            total = CycloValue.zero(phi.conductor())
            for k in range(len(phi.rows)):
                if dec_matrix[i][k]:
                    total = total + phi.entries[k][j].scale(dec_matrix[i][k])
            if not total.eq_value(xi_pprime.entries[i][j]):
                return False
    return True


def table_det_nonzero_mod_p(table: ModularTable, p: int) -> bool:
    """Determinant test over GF(p^k) for a square modular table."""
    if len(table.rows) != len(table.cols):
        raise ValueError("table must be square")
    conductor = table.conductor()
    from .cyclotomic import field_with_root

    field, _ = field_with_root(p, conductor)
    mat = [
        [reduce_mod_p(e.to_conductor(conductor), p, 1) for e in row]
        for row in table.entries
    ]
    n = len(mat)
    det = field.one()
    for col in range(n):
        piv = next((i for i in range(col, n) if not mat[i][col].is_zero), None)
        if piv is None:
            return False
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det = det * mat[col][col]
        inv = mat[col][col].inverse()
        for i in range(col + 1, n):
            if mat[i][col].is_zero:
                continue
            factor = mat[i][col] * inv
            mat[i] = [a - factor * b for a, b in zip(mat[i], mat[col])]
    return not det.is_zero
