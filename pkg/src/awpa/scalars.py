"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A scalar is stored as a coordinate vector of rationals in the power basis
1, z, ..., z^(phi(m)-1) of Q(zeta_m), reduced modulo the m-th cyclotomic
polynomial.  All arithmetic is exact; there is no floating point anywhere.

Scalars of different conductors compare and combine by embedding both into
Q(zeta_lcm) via zeta_m = zeta_lcm^(lcm/m).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def euler_phi(m: int) -> int:
    count = 0
    for k in range(1, m + 1):
        if gcd(k, m) == 1:
            count += 1
    return count


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (lists of coeffs, low degree first)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c, r = divmod(num[k + len(den) - 1], den[-1])
        assert r == 0, "nonexact division while building cyclotomic polynomial"
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


_CYCLO_CACHE: dict[int, list[int]] = {}


def cyclotomic_polynomial(m: int) -> list[int]:
    """Integer coefficients of Phi_m, lowest degree first (monic)."""
    if m in _CYCLO_CACHE:
        return _CYCLO_CACHE[m]
    # Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert rem == [0]
    _CYCLO_CACHE[m] = poly
    return poly


_POWER_CACHE: dict[int, list[tuple[Fraction, ...]]] = {}


def _zeta_powers(m: int) -> list[tuple[Fraction, ...]]:
    """zeta_m^k for k = 0..m-1 as reduced coordinate vectors."""
    if m in _POWER_CACHE:
        return _POWER_CACHE[m]
    phi = euler_phi(m)
    cyc = cyclotomic_polynomial(m)
    powers: list[tuple[Fraction, ...]] = []
    for k in range(phi):
        vec = [_ZERO] * phi
        vec[k] = _ONE
        powers.append(tuple(vec))
    # z^phi = -(cyc[0] + cyc[1] z + ...), then multiply up by z repeatedly.
    for _ in range(phi, m):
        prev = powers[-1]
        shifted = [_ZERO] + list(prev[:-1])
        top = prev[-1]
        if top:
            for i in range(phi):
                shifted[i] -= top * cyc[i]
        powers.append(tuple(shifted))
    _POWER_CACHE[m] = powers
    return powers


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class CycScalar:
    """An element of Q(zeta_m), held in canonical reduced form."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        self.coeffs = tuple(coeffs)
        assert len(self.coeffs) == euler_phi(m)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(value, m: int = 1) -> CycScalar:
        vec = [_ZERO] * euler_phi(m)
        vec[0] = Fraction(value)
        return CycScalar(m, vec)

    @staticmethod
    def zero(m: int = 1) -> CycScalar:
        return CycScalar.from_rational(0, m)

    @staticmethod
    def one(m: int = 1) -> CycScalar:
        return CycScalar.from_rational(1, m)

    # -- conductor handling ------------------------------------------------

    def lift(self, big: int) -> CycScalar:
        """Embed into Q(zeta_big); requires m | big."""
        if big == self.m:
            return self
        assert big % self.m == 0
        step = big // self.m
        powers = _zeta_powers(big)
        phi = euler_phi(big)
        vec = [_ZERO] * phi
        for k, a in enumerate(self.coeffs):
            if a:
                pw = powers[(k * step) % big]
                for i in range(phi):
                    if pw[i]:
                        vec[i] += a * pw[i]
        return CycScalar(big, vec)

    @staticmethod
    def _unify(a: CycScalar, b: CycScalar) -> tuple[CycScalar, CycScalar]:
        if a.m == b.m:
            return a, b
        big = lcm(a.m, b.m)
        return a.lift(big), b.lift(big)

    @staticmethod
    def _coerce(value, m: int = 1) -> CycScalar:
        if isinstance(value, CycScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return CycScalar.from_rational(value, m)
        raise TypeError(f"cannot interpret {value!r} as a scalar")

    @staticmethod
    def _try_coerce(value):
        if isinstance(value, CycScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return CycScalar.from_rational(value, 1)
        return None

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_part(self) -> Fraction:
        """The value as a Fraction; only meaningful if is_rational()."""
        return self.coeffs[0]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> CycScalar:
        other = CycScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        a, b = CycScalar._unify(self, other)
        return CycScalar(a.m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar(self.m, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> CycScalar:
        other = CycScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycScalar:
        other = CycScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> CycScalar:
        other = CycScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        a, b = CycScalar._unify(self, other)
        phi = len(a.coeffs)
        if phi == 1:
            return CycScalar(a.m, (a.coeffs[0] * b.coeffs[0],))
        # convolve, then fold exponents >= phi back down via the power table
        conv = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        vec = list(conv[:phi])
        powers = _zeta_powers(a.m)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                pw = powers[k % a.m]
                for i in range(phi):
                    if pw[i]:
                        vec[i] += c * pw[i]
        return CycScalar(a.m, vec)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        phi = len(self.coeffs)
        if phi == 1:
            return CycScalar(self.m, (1 / self.coeffs[0],))
        # extended Euclid in Q[x]: s * self + t * Phi_m = 1
        cyc = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r0, r1 = cyc, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while len(r1) > 1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, r = _frac_poly_divmod(r0, r1)
            s = _frac_poly_sub(s0, _frac_poly_mul(q, s1))
            r0, s0, r1, s1 = r1, s1, r, s
        inv = [c / r1[0] for c in s1]
        vec = [_ZERO] * phi
        powers = _zeta_powers(self.m)
        for k, c in enumerate(inv):
            if c:
                if k < phi:
                    vec[k] += c
                else:
                    pw = powers[k % self.m]
                    for i in range(phi):
                        vec[i] += c * pw[i]
        return CycScalar(self.m, vec)

    def __truediv__(self, other) -> CycScalar:
        other = CycScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> CycScalar:
        other = CycScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> CycScalar:
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycScalar):
            return NotImplemented
        a, b = CycScalar._unify(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses conductors; do not use as dict keys

    # -- text form -----------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    terms.append(z)
                elif c == -1:
                    terms.append(f"-{z}")
                else:
                    terms.append(f"{c}*{z}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self) -> str:
        return f"CycScalar({self.m}, {self})"


def _frac_poly_divmod(num, den):
    num = list(num)
    q = [_ZERO] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _frac_poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    out = list(a) + [_ZERO] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return out


def root_of_unity(m: int, power: int = 1) -> CycScalar:
    """zeta_m^power as an element of Q(zeta_m)."""
    if m < 1:
        raise ValueError("conductor must be >= 1")
    return CycScalar(m, _zeta_powers(m)[power % m])


_TERM_RE = re.compile(
    r"""^\s*
    (?P<num>[+-]?\d+)?              # optional integer part
    (?:/(?P<den>\d+))?              # optional denominator
    (?P<star>\s*\*\s*)?             # optional '*'
    (?P<z>z(\^(?P<exp>\d+))?)?      # optional power of z
    \s*$""",
    re.VERBOSE,
)


def parse_scalar(text: str, conductor: int = 1) -> CycScalar:
    """Parse the textual form produced by str(): "p/q", "p/q*z^k + ...".

    ``z`` denotes zeta_conductor.
    """
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        balanced = True
        for i, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(text) - 1:
                balanced = False
                break
        if not balanced:
            break
        text = text[1:-1].strip()
    pieces = re.split(r"\s*([+-])\s*", "+" + text)
    total = CycScalar.zero(conductor)
    sign = 1
    saw_term = False
    for piece in pieces:
        if piece == "":
            continue
        if piece == "+":
            continue
        if piece == "-":
            sign = -sign
            continue
        mt = _TERM_RE.match(piece)
        if not mt or (mt.group("num") is None and mt.group("z") is None):
            raise ParseError(f"bad scalar term {piece!r} in {text!r}")
        num = Fraction(int(mt.group("num") if mt.group("num") is not None else 1))
        if mt.group("den"):
            num /= int(mt.group("den"))
        term = CycScalar.from_rational(sign * num, conductor)
        if mt.group("z"):
            exp = int(mt.group("exp") or 1)
            term = term * root_of_unity(conductor, exp)
        total = total + term
        sign = 1
        saw_term = True
    if not saw_term:
        raise ParseError(f"empty scalar {text!r}")
    return total
