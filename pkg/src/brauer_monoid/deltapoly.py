"""Integer polynomials in the parameter delta (written ``d`` in text output)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DeltaPoly:
    """Coefficients by ascending power, normalized (no trailing zeros)."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficients not normalized")

    @classmethod
    def of(cls, coeffs) -> "DeltaPoly":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @classmethod
    def const(cls, c: int) -> "DeltaPoly":
        return cls.of([c])

    @classmethod
    def delta_power(cls, k: int, c: int = 1) -> "DeltaPoly":
        return cls.of([0] * k + [c])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: "DeltaPoly") -> "DeltaPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DeltaPoly.of(out)

    def __neg__(self) -> "DeltaPoly":
        return DeltaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "DeltaPoly") -> "DeltaPoly":
        return self + (-other)

    def __mul__(self, other: "DeltaPoly") -> "DeltaPoly":
        if self.is_zero or other.is_zero:
            return DeltaPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DeltaPoly.of(out)

    def scale(self, c: int) -> "DeltaPoly":
        return DeltaPoly.of(a * c for a in self.coeffs)

    def shift(self, k: int) -> "DeltaPoly":
        """Multiply by delta^k."""
        if self.is_zero:
            return self
        return DeltaPoly((0,) * k + self.coeffs)

    def divexact_delta_power(self, k: int) -> "DeltaPoly":
        if self.is_zero:
            return self
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"{self} is not divisible by d^{k}")
        return DeltaPoly(self.coeffs[k:])

    def divexact(self, other: "DeltaPoly") -> "DeltaPoly":
        """Exact division; raises if the remainder is non-zero."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        den = other.coeffs
        if len(rem) < len(den):
            if self.is_zero:
                return DeltaPoly()
            raise ValueError("not divisible")
        out = [0] * (len(rem) - len(den) + 1)
        for i in range(len(out) - 1, -1, -1):
            q, r = divmod(rem[i + len(den) - 1], den[-1])
            if r != 0:
                raise ValueError("not divisible")
            out[i] = q
            for j, c in enumerate(den):
                rem[i + j] -= q * c
        if any(rem):
            raise ValueError("not divisible")
        return DeltaPoly.of(out)

    def monomial_value(self, k: int) -> int:
        """The constant c with self == c * delta^k; raises otherwise."""
        if self.is_zero:
            return 0
        if self.degree() != k or any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"{self} is not a multiple of d^{k} alone")
        return self.coeffs[k]

    def eval_int(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def eval_ring(self, x, one):
        """Horner evaluation at a ring element; the ring must support .scale(int)."""
        out = one.scale(0)
        for c in reversed(self.coeffs):
            out = out * x + one.scale(c)
        return out

    def reduce_coeffs(self, p: int) -> "DeltaPoly":
        return DeltaPoly.of(c % p for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "d" if k == 1 else f"d^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else ("+" if terms else "")
            terms.append(sign + body)
        return "".join(terms)

    @classmethod
    def parse(cls, text: str) -> "DeltaPoly":
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        coeffs: dict[int, int] = {}
        token = ""
        chunks = []
        for i, ch in enumerate(text):
            if ch in "+-" and i > 0:
                chunks.append(token)
                token = ch
            else:
                token += ch
        chunks.append(token)
        for chunk in chunks:
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:]
            elif chunk.startswith("+"):
                chunk = chunk[1:]
            if "d" in chunk:
                coef_s, _, pow_s = chunk.partition("d")
                coef = int(coef_s.rstrip("*")) if coef_s.rstrip("*") else 1
                power = int(pow_s.lstrip("^")) if pow_s else 1
            else:
                coef, power = int(chunk), 0
            coeffs[power] = coeffs.get(power, 0) + sign * coef
        size = max(coeffs) + 1
        out = [0] * size
        for k, c in coeffs.items():
            out[k] = c
        return cls.of(out)
