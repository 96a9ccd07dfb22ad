"""Exact scalar arithmetic: the rationals and prime fields F_p.

Scalars are plain Python numbers. Over Q they are ``int`` or
``fractions.Fraction`` (always reduced, positive denominator); over F_p they
are ``int`` residues in ``[0, p)``.  Ordinary ``+ - *`` work on both kinds;
the :class:`Field` object supplies what genuinely depends on the field:
normalization, inversion, and coercion of rational literals.  No floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The field Q (``p is None``) or F_p for a prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return self.p or 0

    def norm(self, x):
        """Canonical representative of x (reduces mod p; identity over Q)."""
        if self.p is not None:
            return x % self.p
        return x

    def of(self, n: int):
        return n % self.p if self.p is not None else n

    def of_fraction(self, fr: Fraction):
        """Coerce a rational literal; the denominator must be invertible."""
        if self.p is None:
            return fr
        den = fr.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(
                f"denominator {fr.denominator} not invertible in F_{self.p}")
        return fr.numerator * pow(den, -1, self.p) % self.p

    def inv(self, x):
        if self.p is not None:
            x %= self.p
            if x == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(x, -1, self.p)
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return Fraction(1, 1) / Fraction(x)

    def div(self, a, b):
        return self.norm(a * self.inv(b))

    def divides(self, n: int) -> bool:
        """Whether char(K) divides n (false in characteristic zero)."""
        return self.p is not None and n % self.p == 0

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def describe(self) -> str:
        """Short descriptor used in the CLI and reports ("q" or "p:<prime>")."""
        return "q" if self.p is None else f"p:{self.p}"


QQ = Field(None)


def field_from_descriptor(text: str) -> Field:
    """Parse "q" (rationals) or "p:<prime>" into a Field."""
    if text == "q":
        return QQ
    if text.startswith("p:"):
        try:
            p = int(text[2:])
        except ValueError:
            raise ValueError(f"bad field descriptor {text!r}") from None
        return Field(p)
    raise ValueError(f"bad field descriptor {text!r} (want 'q' or 'p:<prime>')")
