"""Exact coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class Field:
    """An exact field.  Elements are ``Fraction`` (QQ) or ``int`` in ``[0, p)``."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str = "QQ", modulus: int | None = None):
        if kind == "QQ":
            if modulus is not None:
                raise ValueError("QQ takes no modulus")
        elif kind == "Fp":
            if modulus is None or not _is_prime(modulus) or modulus >= 2**31:
                raise ValueError(f"Fp needs a prime modulus below 2^31, got {modulus}")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.modulus = modulus

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``QQ``, ``Fp(101)`` or ``Fp:101``."""
        t = text.strip()
        if t == "QQ":
            return cls("QQ")
        for prefix, suffix in (("Fp(", ")"), ("Fp:", "")):
            if t.startswith(prefix) and t.endswith(suffix):
                body = t[len(prefix): len(t) - len(suffix)]
                try:
                    return cls("Fp", int(body))
                except ValueError:
                    break
        raise ValueError(f"bad field {text!r}; expected QQ or Fp(<p>)")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fp"

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == "Fp" else 0

    def __eq__(self, other):
        return isinstance(other, Field) and (self.kind, self.modulus) == (other.kind, other.modulus)

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return "QQ" if self.kind == "QQ" else f"Fp({self.modulus})"

    __str__ = __repr__

    # element operations
    def __call__(self, value):
        """Coerce an int, Fraction or field element."""
        if self.kind == "QQ":
            return Fraction(value)
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
        return int(value) % self.modulus

    @property
    def zero(self):
        return Fraction(0) if self.kind == "QQ" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "QQ" else 1

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "QQ":
            return 1 / a
        return pow(a, -1, self.modulus)

    def reduce(self, a):
        """Canonical representative of a raw ring result (mod p for prime fields)."""
        return a % self.modulus if self.modulus else a

    def fmt(self, a) -> str:
        if self.kind == "QQ":
            return str(a)
        return str(a)

    def elements(self):
        """Iterate over a prime field (used by brute-force scans)."""
        if self.kind != "Fp":
            raise ValueError("QQ is infinite")
        return range(self.modulus)

    def random_element(self, rng, nonzero: bool = False):
        if self.kind == "Fp":
            lo = 1 if nonzero else 0
            return rng.randrange(lo, self.modulus)
        while True:
            v = Fraction(rng.randint(-9, 9))
            if v or not nonzero:
                return v


QQ = Field("QQ")


def GF(p: int) -> Field:
    return Field("Fp", p)
