"""
Exact arithmetic in cyclotomic fields.

An element of Q(zeta_N) is stored by its coordinates in the power basis
1, zeta_N, ..., zeta_N^(phi(N)-1), i.e. as a polynomial reduced modulo the
N-th cyclotomic polynomial.  Values of different conductors are combined in
Q(zeta_lcm).  Rationals live at conductor 1 and take a fast path through
every operation, which matters because almost all Jacobi coefficients in
practice are rational.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero

__all__ = [
    "CycNumber",
    "cyc",
    "root_of_unity",
    "sqrt_integer",
    "euler_phi",
    "cyclotomic_poly",
    "frac_str",
    "parse_frac",
]


def lcm(a, b):
    return a // gcd(a, b) * b


def frac_str(x):
    """Canonical exact string ``"p/q"`` for a rational."""
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_frac(s):
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if not isinstance(s, str) or "." in s or "e" in s.lower():
        raise ValueError("expected an exact fraction string, got %r" % (s,))
    return Fraction(s)


@lru_cache(maxsize=None)
def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num, den):
    # integer polynomials, low degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n):
    """Coordinates of x^j modulo Phi_n for 0 <= j < n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    vec = [1] + [0] * (deg - 1)
    table = []
    for _ in range(n):
        table.append(tuple(vec))
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for j in range(deg):
                vec[j] -= top * phi[j]
    return tuple(table)


def _solve_rational(columns, target):
    """Solve sum_j y_j columns[j] = target over Q; None if inconsistent."""
    nrows = len(target)
    ncols = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if aug[i][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for i in range(nrows):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    if any(aug[i][ncols] for i in range(row, nrows)):
        return None
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = aug[i][ncols]
    return sol


_ZERO = Fraction(0)
_ONE = Fraction(1)


class CycNumber:
    """An exact element of Q(zeta_N).

    >>> i = CycNumber.zeta(4)
    >>> i * i == -1
    True
    """

    __slots__ = ("conductor", "coords", "_hash")

    def __init__(self, coords=(0,), conductor=1):
        conductor = int(conductor)
        if conductor < 1:
            raise ValueError("conductor must be positive")
        coords = [Fraction(c) for c in coords]
        deg = euler_phi(conductor)
        if len(coords) > deg:
            coords = _reduce(coords, conductor)
        coords += [_ZERO] * (deg - len(coords))
        self.conductor = conductor
        self.coords = tuple(coords)
        self._hash = None

    @classmethod
    def _make(cls, coords, conductor):
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.coords = coords
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, x):
        return cls._make((Fraction(x),), 1)

    @classmethod
    def zeta(cls, n, e=1):
        """The root of unity zeta_n^e = exp(2 pi i e / n)."""
        e %= n
        return cls._make(tuple(Fraction(c) for c in _power_table(n)[e]), n)

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def is_rational(self):
        if self.conductor == 1:
            return True
        return self.minimal().conductor == 1

    def to_fraction(self):
        m = self.minimal()
        if m.conductor != 1:
            raise ValueError("%r is not rational" % (self,))
        return m.coords[0]

    def to_conductor(self, n):
        """Embed into Q(zeta_n); the current conductor must divide n."""
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError("conductor %d does not divide %d" % (self.conductor, n))
        if self.conductor == 1:
            c0 = self.coords[0]
            return CycNumber._make((c0,) + (_ZERO,) * (euler_phi(n) - 1), n)
        step = n // self.conductor
        table = _power_table(n)
        out = [_ZERO] * euler_phi(n)
        for j, c in enumerate(self.coords):
            if c:
                for i, t in enumerate(table[(j * step) % n]):
                    if t:
                        out[i] += c * t
        return CycNumber._make(tuple(out), n)

    def restrict(self, d):
        """Express self inside Q(zeta_d) for d dividing the conductor.

        Raises ValueError when self does not lie in that subfield.
        """
        if d == self.conductor:
            return self
        if self.conductor % d:
            raise ValueError("%d does not divide the conductor %d" % (d, self.conductor))
        basis = [CycNumber.zeta(d, j).to_conductor(self.conductor).coords
                 for j in range(euler_phi(d))]
        sol = _solve_rational(basis, self.coords)
        if sol is None:
            raise ValueError("element does not lie in Q(zeta_%d)" % d)
        return CycNumber._make(tuple(sol), d)

    def minimal(self):
        """The same number written over its smallest possible conductor."""
        if self.conductor == 1:
            return self
        if not any(self.coords[1:]):
            return CycNumber._make((self.coords[0],), 1)
        for d in _divisors(self.conductor):
            if d % 4 == 2:
                continue
            try:
                return self.restrict(d)
            except ValueError:
                pass
        return self

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^-1."""
        n = self.conductor
        if n == 1:
            return self
        table = _power_table(n)
        out = [_ZERO] * len(self.coords)
        for j, c in enumerate(self.coords):
            if c:
                for i, t in enumerate(table[(-j) % n]):
                    if t:
                        out[i] += c * t
        return CycNumber._make(tuple(out), n)

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.conductor)
        return complex(sum(float(c) * z ** j for j, c in enumerate(self.coords)))

    # -- arithmetic ----------------------------------------------------------

    def _merge(self, other):
        if self.conductor == other.conductor:
            return self, other
        n = lcm(self.conductor, other.conductor)
        return self.to_conductor(n), other.to_conductor(n)

    def __add__(self, other):
        if not isinstance(other, CycNumber):
            if isinstance(other, (int, Fraction)):
                c = self.coords
                return CycNumber._make((c[0] + other,) + c[1:], self.conductor)
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CycNumber._make((self.coords[0] + other.coords[0],), 1)
        a, b = self._merge(other)
        return CycNumber._make(tuple(x + y for x, y in zip(a.coords, b.coords)), a.conductor)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._make(tuple(-x for x in self.coords), self.conductor)

    def __sub__(self, other):
        if not isinstance(other, (CycNumber, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycNumber):
            if isinstance(other, (int, Fraction)):
                return CycNumber._make(tuple(x * other for x in self.coords), self.conductor)
            return NotImplemented
        if self.conductor == 1:
            s = self.coords[0]
            return CycNumber._make(tuple(s * x for x in other.coords), other.conductor)
        if other.conductor == 1:
            s = other.coords[0]
            return CycNumber._make(tuple(x * s for x in self.coords), self.conductor)
        a, b = self._merge(other)
        n = a.conductor
        prod = {}
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        prod[i + j] = prod.get(i + j, _ZERO) + x * y
        table = _power_table(n)
        out = [_ZERO] * len(a.coords)
        for e, c in prod.items():
            for i, t in enumerate(table[e % n]):
                if t:
                    out[i] += c * t
        return CycNumber._make(tuple(out), n)

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.coords):
            raise DivisionByZero("division by zero in Q(zeta_%d)" % self.conductor)
        n = self.conductor
        if n == 1:
            return CycNumber._make((1 / self.coords[0],), 1)
        deg = len(self.coords)
        # columns: self * zeta^j; solve for the coordinates of 1 / self
        cols = [(self * CycNumber.zeta(n, j)).coords for j in range(deg)]
        sol = _solve_rational(cols, (1,) + (0,) * (deg - 1))
        return CycNumber._make(tuple(sol), n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNumber._make((_ONE,), 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coords[0] == other and not any(self.coords[1:])
        if not isinstance(other, CycNumber):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coords == other.coords
        a, b = self._merge(other)
        return a.coords == b.coords

    def __hash__(self):
        if self._hash is None:
            m = self.minimal()
            if m.conductor == 1:
                self._hash = hash(m.coords[0])
            else:
                self._hash = hash((m.conductor, m.coords))
        return self._hash

    def __repr__(self):
        if self.conductor == 1:
            return "CycNumber(%s)" % self.coords[0]
        return "CycNumber(%s, conductor=%d)" % ([str(c) for c in self.coords], self.conductor)

    def __str__(self):
        if self.conductor == 1:
            return str(self.coords[0])
        terms = []
        for j, c in enumerate(self.coords):
            if c:
                terms.append(str(c) if j == 0 else "%s*z%d^%d" % (c, self.conductor, j))
        return " + ".join(terms) or "0"

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {"conductor": self.conductor, "coords": [frac_str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, obj):
        n = int(obj["conductor"])
        coords = [parse_frac(c) for c in obj["coords"]]
        if len(coords) != euler_phi(n):
            raise ValueError("expected %d coordinates for conductor %d" % (euler_phi(n), n))
        return cls._make(tuple(coords), n)


def _reduce(coords, n):
    table = _power_table(n)
    out = [_ZERO] * euler_phi(n)
    for e, c in enumerate(coords):
        if c:
            for i, t in enumerate(table[e % n]):
                if t:
                    out[i] += c * t
    return out


ZERO = CycNumber.rational(0)
ONE = CycNumber.rational(1)


def cyc(x):
    """Coerce an int, Fraction or CycNumber to a CycNumber."""
    if isinstance(x, CycNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNumber._make((Fraction(x),), 1)
    raise TypeError("cannot interpret %r as a cyclotomic number" % (x,))


def root_of_unity(x):
    """exp(2 pi i x) for rational x, as an exact CycNumber."""
    x = Fraction(x)
    return CycNumber.zeta(x.denominator, x.numerator).minimal() if x.denominator > 1 else ONE


def _squarefree_split(n):
    square, rest, p = 1, n, 2
    while p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
            square *= p
        p += 1
    return square, rest


def sqrt_integer(n):
    """Exact positive square root of a positive integer inside a cyclotomic field.

    Uses the quadratic Gauss sum sum_{x mod 4c} e(x^2 / 4c) = (1 + i) 2 sqrt(c).
    """
    if n <= 0:
        raise ValueError("sqrt_integer needs a positive integer")
    square, c = _squarefree_split(n)
    if c == 1:
        return cyc(square)
    g = ZERO
    for x in range(4 * c):
        g = g + CycNumber.zeta(4 * c, x * x)
    root = g / (2 * (1 + CycNumber.zeta(4)))
    return root * square
