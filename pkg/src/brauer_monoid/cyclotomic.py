"""Exact cyclotomic integers and reduction into finite fields.

Values live in Z[zeta_L] for an explicit conductor L, reduced modulo the
L-th cyclotomic polynomial, optionally multiplied by a formal power of the
lifted parameter (written ``dhat``).  Reduction modulo a prime p sends
zeta_L to a fixed root of an irreducible factor of the cyclotomic polynomial
over GF(p) and the lifted parameter to a chosen residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Monic integer coefficients of the n-th cyclotomic polynomial, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    # (x^n - 1) divided by the product of the proper cyclotomic factors
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    out = [0] * (len(num) - len(den) + 1)
    rem = num[:]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(rem[i + len(den) - 1], den[-1])
        assert r == 0
        out[i] = q
        for j, c in enumerate(den):
            rem[i + j] -= q * c
    assert not any(rem)
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _root_power_table(conductor: int) -> tuple[tuple[int, ...], ...]:
    """zeta^e for e = 0..2*conductor as coefficient vectors of length phi."""
    phi = euler_phi(conductor)
    mod = cyclotomic_poly(conductor)
    powers = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(2 * conductor + 1):
        powers.append(tuple(cur))
        cur = [0] + cur
        while len(cur) > phi:
            lead = cur[-1]
            if lead:
                for j in range(len(mod) - 1):
                    cur[len(cur) - len(mod) + j] -= lead * mod[j]
            cur.pop()
    return tuple(powers)


@dataclass(frozen=True)
class CycloValue:
    """dhat^dhat_exp times an element of Z[zeta_conductor]."""

    conductor: int
    coeffs: tuple[int, ...]
    dhat_exp: int = 0

    def __post_init__(self):
        phi = max(euler_phi(self.conductor), 1)
        if len(self.coeffs) != phi:
            raise ValueError(f"need {phi} coefficients for conductor {self.conductor}")
        if self.dhat_exp < 0:
            raise ValueError("dhat exponent must be >= 0")
        if self.is_zero and self.dhat_exp != 0:
            raise ValueError("zero values carry no dhat power")

    @classmethod
    def integer(cls, c: int, conductor: int = 1, dhat_exp: int = 0) -> "CycloValue":
        phi = max(euler_phi(conductor), 1)
        coeffs = (c,) + (0,) * (phi - 1)
        return cls(conductor, coeffs, dhat_exp if c != 0 else 0)

    @classmethod
    def zero(cls, conductor: int = 1) -> "CycloValue":
        return cls.integer(0, conductor)

    @classmethod
    def root_of_unity(cls, conductor: int, exp: int, dhat_exp: int = 0) -> "CycloValue":
        vec = _root_power_table(conductor)[exp % conductor]
        return cls(conductor, vec, dhat_exp)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def scale(self, c: int) -> "CycloValue":
        if c == 0:
            return CycloValue.zero(self.conductor)
        return CycloValue(
            self.conductor, tuple(a * c for a in self.coeffs), self.dhat_exp
        )

    def shift_dhat(self, k: int) -> "CycloValue":
        if self.is_zero:
            return self
        return CycloValue(self.conductor, self.coeffs, self.dhat_exp + k)

    def to_conductor(self, big: int) -> "CycloValue":
        if big == self.conductor:
            return self
        if big % self.conductor != 0:
            raise ValueError(f"{self.conductor} does not divide {big}")
        step = big // self.conductor
        phi = max(euler_phi(big), 1)
        out = [0] * phi
        table = _root_power_table(big)
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            vec = table[(e * step) % big] if euler_phi(big) > 0 else (1,)
            for j, v in enumerate(vec):
                out[j] += c * v
        if not any(out):
            return CycloValue.zero(big)
        return CycloValue(big, tuple(out), self.dhat_exp)

    def _match(self, other: "CycloValue") -> tuple["CycloValue", "CycloValue"]:
        L = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.to_conductor(L), other.to_conductor(L)

    def __add__(self, other: "CycloValue") -> "CycloValue":
        a, b = self._match(other)
        if a.is_zero:
            return b
        if b.is_zero:
            return a
        if a.dhat_exp != b.dhat_exp:
            raise ValueError("cannot add values with different dhat powers")
        coeffs = tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
        if not any(coeffs):
            return CycloValue.zero(a.conductor)
        return CycloValue(a.conductor, coeffs, a.dhat_exp)

    def __neg__(self) -> "CycloValue":
        return self.scale(-1)

    def __sub__(self, other: "CycloValue") -> "CycloValue":
        return self + (-other)

    def __mul__(self, other: "CycloValue") -> "CycloValue":
        a, b = self._match(other)
        if a.is_zero or b.is_zero:
            return CycloValue.zero(a.conductor)
        L = a.conductor
        table = _root_power_table(L)
        out = [0] * max(euler_phi(L), 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y == 0:
                    continue
                for k, v in enumerate(table[i + j]):
                    out[k] += x * y * v
        if not any(out):
            return CycloValue.zero(L)
        return CycloValue(L, tuple(out), a.dhat_exp + b.dhat_exp)

    def eq_value(self, other: "CycloValue") -> bool:
        a, b = self._match(other)
        return a.coeffs == b.coeffs and (a.is_zero or a.dhat_exp == b.dhat_exp)

    def is_rational_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_integer(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def divexact_int(self, n: int) -> "CycloValue":
        if any(c % n for c in self.coeffs):
            raise ValueError(f"{self} is not divisible by {n}")
        out = tuple(c // n for c in self.coeffs)
        return CycloValue(self.conductor, out, self.dhat_exp if any(out) else 0)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                body = str(c)
            else:
                var = "z" if e == 1 else f"z^{e}"
                body = var if c == 1 else (f"-{var}" if c == -1 else f"{c}*{var}")
            terms.append(body)
        core = " + ".join(terms).replace("+ -", "- ")
        if self.dhat_exp == 0:
            return core
        prefix = "dhat" if self.dhat_exp == 1 else f"dhat^{self.dhat_exp}"
        return f"{prefix} * ({core})"


def lift_root(a: int, l: int) -> CycloValue:
    """The lift of the chosen l-th root of unity to the a-th power."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return CycloValue.root_of_unity(l, a)


# --- finite fields GF(p^k) presented as GF(p)[x]/(g) ------------------------


def _poly_mod_p(coeffs, p):
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mul_mod(a, b, modulus, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _poly_rem(out, modulus, p)


def _poly_rem(a, modulus, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    dm = len(modulus) - 1
    inv_lead = pow(modulus[-1], -1, p)
    while len(a) - 1 >= dm and any(a):
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for j, c in enumerate(modulus):
            a[shift + j] = (a[shift + j] - factor * c) % p
        while a and a[-1] == 0:
            a.pop()
    return a


@dataclass(frozen=True)
class GField:
    """GF(p^k) with modulus the first monic irreducible divisor found."""

    p: int
    modulus: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.modulus) - 1

    def element(self, coeffs) -> "GFElement":
        return GFElement(self, tuple(_poly_rem(list(coeffs), list(self.modulus), self.p)))

    def from_int(self, c: int) -> "GFElement":
        return self.element([c])

    def zero(self) -> "GFElement":
        return self.element([])

    def one(self) -> "GFElement":
        return self.element([1])

    def x(self) -> "GFElement":
        return self.element([0, 1])


@dataclass(frozen=True)
class GFElement:
    field: GField
    coeffs: tuple[int, ...]

    def scale(self, c: int) -> "GFElement":
        return self.field.element([a * c for a in self.coeffs])

    def __add__(self, other: "GFElement") -> "GFElement":
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, c in enumerate(b):
            a[i] += c
        return self.field.element(a)

    def __neg__(self) -> "GFElement":
        return self.scale(-1)

    def __sub__(self, other: "GFElement") -> "GFElement":
        return self + (-other)

    def __mul__(self, other: "GFElement") -> "GFElement":
        p = self.field.p
        prod = _poly_mul_mod(list(self.coeffs), list(other.coeffs), list(self.field.modulus), p)
        return GFElement(self.field, tuple(prod))

    def __pow__(self, e: int) -> "GFElement":
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "GFElement":
        """Extended Euclid in GF(p)[x]."""
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        p = self.field.p
        a = list(self.field.modulus)
        b = list(self.coeffs)
        s0, s1 = [], [1]
        while b:
            q, r = _poly_divmod_p(a, b, p)
            a, b = b, r
            s0, s1 = s1, _poly_sub_p(s0, _poly_mul_p(q, s1, p), p)
        assert len(a) == 1  # gcd must be a unit
        inv_gcd = pow(a[0], -1, p)
        return self.field.element([c * inv_gcd for c in s0])

    def __truediv__(self, other: "GFElement") -> "GFElement":
        return self * other.inverse()

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "+".join(
            (f"{c}" if e == 0 else (f"{c}*x^{e}" if e > 1 else f"{c}*x"))
            for e, c in enumerate(self.coeffs)
            if c
        )


def _poly_divmod_p(a, b, p):
    a = [c % p for c in a]
    b = [c % p for c in b]
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        factor = (a[-1] * inv) % p
        q[shift] = factor
        for j, c in enumerate(b):
            a[shift + j] = (a[shift + j] - factor * c) % p
        while a and a[-1] == 0:
            a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_sub_p(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mul_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    out = [c % p for c in out]
    while out and out[-1] == 0:
        out.pop()
    return out


def multiplicative_order(p: int, l: int) -> int:
    if gcd(p, l) != 1:
        raise ValueError(f"{p} divides {l}")
    k, acc = 1, p % l
    while acc != 1:
        acc = (acc * p) % l
        k += 1
    return k


@lru_cache(maxsize=None)
def field_with_root(p: int, l: int) -> tuple[GField, GFElement]:
    """Smallest field GF(p^k) containing a primitive l-th root of unity.

    The root is a fixed zero of the lexicographically first irreducible
    factor of the l-th cyclotomic polynomial mod p.
    """
    if p < 2:
        raise ValueError("p must be a prime")
    if gcd(p, l) != 1:
        raise ValueError(f"p = {p} divides l = {l}")
    k = multiplicative_order(p, l) if l > 1 else 1
    phi_l = _poly_mod_p(list(cyclotomic_poly(l)), p)
    if k == len(phi_l) - 1:
        g = phi_l
    else:
        g = _first_irreducible_factor(phi_l, k, p)
    field = GField(p, tuple(g))
    root = field.x() if l > 1 else field.one()
    return field, root


def _first_irreducible_factor(poly, k, p):
    import itertools

    for tail in itertools.product(range(p), repeat=k):
        cand = list(tail) + [1]
        _, rem = _poly_divmod_p(list(poly), cand, p)
        if not rem and _is_irreducible(cand, p):
            return cand
    raise AssertionError("no factor found")


def _is_irreducible(poly, p):
    k = len(poly) - 1
    if k == 1:
        return True
    # no factor of degree d | k, d < k, and x^(p^k) = x mod poly
    for d in range(1, k):
        if k % d != 0:
            continue
        xp = _pow_x_mod(p**d, poly, p)
        test = _poly_sub_p(xp, [0, 1], p)
        if len(_poly_gcd_p(poly, test, p)) > 1:
            return False
    xp = _pow_x_mod(p**k, poly, p)
    return not _poly_sub_p(xp, [0, 1], p)


def _pow_x_mod(e, modulus, p):
    result = [1]
    base = [0, 1]
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, modulus, p)
        base = _poly_mul_mod(base, base, modulus, p)
        e >>= 1
    return result


def _poly_gcd_p(a, b, p):
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod_p(a, b, p)
        a, b = b, r
    return a if a else [0]


def reduce_mod_p(value: CycloValue, p: int, delta_residue: int) -> GFElement:
    """Image of a lifted value in GF(p^k): zeta_L to the chosen root, dhat to
    the given residue of the parameter."""
    if p < 2:
        raise ValueError("p must be a prime")
    if gcd(value.conductor, p) != 1:
        raise ValueError(f"p = {p} divides the conductor {value.conductor}")
    field, root = field_with_root(p, value.conductor)
    out = field.zero()
    for e, c in enumerate(value.coeffs):
        if c:
            out = out + (root**e).scale(c)
    return out * field.from_int(delta_residue) ** value.dhat_exp
