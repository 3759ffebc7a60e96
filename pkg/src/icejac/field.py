"""Exact scalar fields: the rationals and prime fields."""

from fractions import Fraction

import gmpy2
from gmpy2 import mpq


class Rationals:
    """The field Q, backed by gmpy2 rationals."""

    name = "Q"
    characteristic = 0
    exact = True

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __call__(self, x):
        if isinstance(x, str):
            return mpq(Fraction(x))
        return mpq(x)

    @staticmethod
    def norm(x):
        return x

    @staticmethod
    def inv(x):
        return 1 / x

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def descriptor(self):
        return "Q"


class PrimeField:
    """The field F_p; elements are plain ints in [0, p)."""

    characteristic = None
    exact = False

    def __init__(self, p):
        p = int(p)
        if p < 2 or not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not a prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, int):
            return x % self.p
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def norm(self, x):
        return x % self.p

    def inv(self, x):
        return pow(x, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def descriptor(self):
        return f"Fp {self.p}"


QQ = Rationals()
DEFAULT_PRIME = 32003


def GF(p=DEFAULT_PRIME):
    return PrimeField(p)

