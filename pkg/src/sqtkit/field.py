"""Ground fields: the rationals and prime fields GF(p).

Scalars are plain Python objects: :class:`fractions.Fraction` over the
rationals and ``int`` residues in ``[0, p)`` over GF(p).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class FieldMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


_MOD_RE = re.compile(r"^\s*(-?\d+)\s*mod\s*(\d+)\s*$")


@dataclass(frozen=True)
class Field:
    """Field descriptor. ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not is_prime(p):
            raise ValueError(f"GF({p}): {p} is not prime")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __call__(self, x):
        return self.scalar(x)

    def scalar(self, x):
        """Coerce ``x`` (int, Fraction, or string) into this field."""
        if isinstance(x, str):
            return self.parse(x)
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"{x} has no image in GF({p})")
        return x.numerator * pow(x.denominator, -1, p) % p

    def parse(self, text: str):
        text = text.strip()
        m = _MOD_RE.match(text)
        if m:
            value, modulus = int(m.group(1)), int(m.group(2))
            if modulus != self.characteristic:
                raise FieldMismatch(f"scalar {text!r} is not in {self}")
            return value % modulus
        try:
            return self.scalar(Fraction(text))
        except ValueError:
            raise ValueError(f"cannot parse scalar {text!r} in {self}") from None

    def format(self, x) -> str:
        if self.characteristic == 0:
            return str(Fraction(x))
        return f"{int(x) % self.characteristic} mod {self.characteristic}"

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.characteristic)

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    @classmethod
    def from_string(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("QQ", "Q", "rationals"):
            return QQ
        m = re.match(r"^GF\((\d+)\)$", text)
        if not m:
            raise ValueError(f"unknown field {text!r}")
        return cls(int(m.group(1)))


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
