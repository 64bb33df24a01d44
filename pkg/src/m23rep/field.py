"""Exact arithmetic in GF(2^n): polynomials over GF(2) modulo an irreducible polynomial.

Elements are stored as integer bitsets (bit i = coefficient of X^i) and
printed MSB-first, so the display string of X^2+1 over GF(2^11) is
"00000000101".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

DEFAULT_DEGREE = 11
DEFAULT_MODULUS = (1 << 11) | (1 << 2) | 1  # x^11 + x^2 + 1


def poly_degree(bits: int) -> int:
    """Degree of a GF(2) polynomial bitset; -1 for the zero polynomial."""
    return bits.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carryless product of two GF(2) polynomials (no reduction)."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of GF(2) polynomial long division."""
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = poly_degree(b)
    quot = 0
    while poly_degree(a) >= db:
        shift = poly_degree(a) - db
        quot ^= 1 << shift
        a ^= b << shift
    return quot, a


def irreducibility_witness(poly: int) -> int | None:
    """Trial-divide by every polynomial of degree 1..deg/2.

    Returns a nontrivial divisor if one exists (smallest as an integer),
    or None when the polynomial is irreducible.
    """
    deg = poly_degree(poly)
    if deg < 1:
        raise ValueError(f"need degree >= 1, got polynomial of degree {deg}")
    for d in range(1, deg // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if poly_divmod(poly, cand)[1] == 0:
                return cand
    return None


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(2^degree): the reduction modulus and derived constants."""

    degree: int = DEFAULT_DEGREE
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self) -> None:
        if self.degree < 2:
            raise ValueError(f"degree must be at least 2, got {self.degree}")
        if poly_degree(self.modulus) != self.degree:
            raise ValueError(
                f"modulus has degree {poly_degree(self.modulus)}, expected {self.degree}"
            )
        if not self.modulus & 1:
            raise ValueError("modulus must have constant term 1")
        factor = irreducibility_witness(self.modulus)
        if factor is not None:
            raise ValueError(
                f"modulus {polynomial_string(self.modulus, 'x')} is reducible: "
                f"divisible by {polynomial_string(factor, 'x')}"
            )

    @property
    def multiplicative_order(self) -> int:
        return (1 << self.degree) - 1

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    @property
    def x(self) -> FieldElement:
        """The residue class of x, written X."""
        return FieldElement(2, self)

    def element(self, bits: int) -> FieldElement:
        return FieldElement(bits, self)


DEFAULT_FIELD = FieldSpec()


def _mul_bits(a: int, b: int, spec: FieldSpec) -> int:
    mask = 1 << spec.degree
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & mask:
            a ^= spec.modulus
    return out


@dataclass(frozen=True)
class FieldElement:
    """A field element as a width-n coefficient bitset tied to its FieldSpec."""

    bits: int
    spec: FieldSpec

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << self.spec.degree):
            raise ValueError(
                f"coefficient bits {self.bits:#x} out of range for degree {self.spec.degree}"
            )

    def _check_spec(self, other: FieldElement) -> None:
        if self.spec != other.spec:
            raise ValueError("elements belong to different field specs")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check_spec(other)
        return FieldElement(self.bits ^ other.bits, self.spec)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check_spec(other)
        return FieldElement(_mul_bits(self.bits, other.bits, self.spec), self.spec)

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            raise ValueError(f"negative exponent {k}; use inverse() instead")
        if self.bits == 0:
            if k == 0:
                raise ValueError("0^0 is undefined")
            return self.spec.zero
        k %= self.spec.multiplicative_order
        result = 1
        base = self.bits
        while k:
            if k & 1:
                result = _mul_bits(result, base, self.spec)
            base = _mul_bits(base, base, self.spec)
            k >>= 1
        return FieldElement(result, self.spec)

    def inverse(self) -> FieldElement:
        if self.bits == 0:
            raise ValueError("division by zero: 0 has no multiplicative inverse")
        return self ** (self.spec.multiplicative_order - 1)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self) -> str:
        return to_binary_string(self)


def verify_primitive(spec: FieldSpec) -> bool:
    """Check that X generates the full multiplicative group.

    X^(2^n - 1) = 1 always holds, so it suffices that X^((2^n-1)/p) != 1
    for every prime p dividing 2^n - 1; for n = 11 these are exactly the
    checks X^23 != 1 and X^89 != 1.
    """
    order = spec.multiplicative_order
    one = spec.one
    return all(spec.x ** (order // p) != one for p in prime_factors(order))


class LogTable:
    """Discrete-log table for X: exponent -> element and back, both total."""

    def __init__(self, spec: FieldSpec):
        if not verify_primitive(spec):
            raise ValueError("X is not primitive for this field spec")
        self.spec = spec
        order = spec.multiplicative_order
        exp_to_bits = [0] * order
        bits_to_exp: dict[int, int] = {}
        acc = 1
        for k in range(order):
            if acc in bits_to_exp:
                raise ValueError(f"X^{k} repeats X^{bits_to_exp[acc]}: X is not primitive")
            exp_to_bits[k] = acc
            bits_to_exp[acc] = k
            acc = _mul_bits(acc, 2, spec)
        if acc != 1:
            raise ValueError(f"X^{order} != 1: modulus does not define a field")
        self.exp_to_bits = tuple(exp_to_bits)
        self.bits_to_exp = bits_to_exp

    def exp(self, k: int) -> FieldElement:
        """X^k as a field element (k taken mod 2^n - 1)."""
        return self.spec.element(self.exp_to_bits[k % len(self.exp_to_bits)])

    def log(self, a: FieldElement) -> int:
        """The k in 0..2^n-2 with X^k = a; zero has no logarithm."""
        if a.bits == 0:
            raise ValueError("zero has no discrete logarithm")
        return self.bits_to_exp[a.bits]


@lru_cache(maxsize=None)
def build_log_table(spec: FieldSpec) -> LogTable:
    return LogTable(spec)


def to_binary_string(a: FieldElement) -> str:
    """MSB-first coefficient string: leftmost character is the X^(n-1) coefficient."""
    return format(a.bits, f"0{a.spec.degree}b")


def parse_binary_string(text: str, spec: FieldSpec = DEFAULT_FIELD) -> FieldElement:
    if len(text) != spec.degree:
        raise ValueError(f"expected exactly {spec.degree} characters, got {len(text)}")
    if set(text) - {"0", "1"}:
        raise ValueError(f"non-binary character in {text!r}")
    return spec.element(int(text, 2))


def polynomial_string(bits: int, symbol: str = "X") -> str:
    """Render a polynomial bitset as a sum of powers, e.g. "X^3+X^2+1"."""
    if bits == 0:
        return "0"
    terms = []
    for e in range(poly_degree(bits), -1, -1):
        if bits >> e & 1:
            terms.append("1" if e == 0 else symbol if e == 1 else f"{symbol}^{e}")
    return "+".join(terms)


def parse_polynomial(text: str) -> int:
    """Parse a polynomial given as an MSB-first binary string or as a
    comma-separated exponent list ("11,2,0" for x^11+x^2+1)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if "," in text or not set(text) <= {"0", "1"}:
        bits = 0
        for part in text.split(","):
            try:
                e = int(part.strip())
            except ValueError:
                raise ValueError(f"bad exponent {part.strip()!r} in polynomial {text!r}") from None
            if e < 0:
                raise ValueError(f"negative exponent {e} in polynomial {text!r}")
            bits ^= 1 << e
        return bits
    return int(text, 2)
