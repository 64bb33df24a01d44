"""The order-23 multiplicative subgroup C of GF(2^11) and its two bases.

C is generated by alpha = X^89 (2^11 - 1 = 2047 = 23 * 89); beta = alpha^5
is the generator under which the studied permutations extend linearly.
Exponents of C live in 1..23 with 23 standing for the identity, mirroring
the cycle notation on the 23 symbols.  Basis A is {1, alpha, ..., alpha^10}
and basis chi is {1, X, ..., X^10}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from typing import Sequence

from .bitmatrix import BitMatrix, mat_inverse, mat_vec, rank
from .field import DEFAULT_FIELD, FieldElement, FieldSpec, prime_factors


@dataclass(frozen=True)
class SubgroupSpec:
    """Exponent conventions for C: which power of X is alpha, which power
    of alpha is beta, and the subgroup order."""

    field: FieldSpec = dataclass_field(default_factory=FieldSpec)
    alpha_exp: int = 89
    beta_exp: int = 5
    order: int = 23

    def __post_init__(self) -> None:
        m = self.field.multiplicative_order
        if self.order < 2 or m % self.order:
            raise ValueError(f"order {self.order} does not divide {m}")
        if self.alpha_exp * self.order % m or any(
            self.alpha_exp * (self.order // p) % m == 0 for p in prime_factors(self.order)
        ):
            raise ValueError(
                f"X^{self.alpha_exp} does not have multiplicative order {self.order}"
            )
        if math.gcd(self.beta_exp, self.order) != 1 or self.beta_exp % self.order == 0:
            raise ValueError(f"beta exponent {self.beta_exp} is not a unit mod {self.order}")

    @property
    def alpha(self) -> FieldElement:
        return self.field.x ** self.alpha_exp

    @property
    def beta(self) -> FieldElement:
        return self.alpha ** self.beta_exp


DEFAULT_SUBGROUP = SubgroupSpec()


def normalize_exponent(k: int, order: int = 23) -> int:
    """Reduce an exponent of C into 1..order, with order naming the identity."""
    return k % order or order


def alpha_power(k: int, sub: SubgroupSpec = DEFAULT_SUBGROUP) -> FieldElement:
    return sub.field.x ** (sub.alpha_exp * (k % sub.order))


def beta_power(j: int, sub: SubgroupSpec = DEFAULT_SUBGROUP) -> FieldElement:
    return alpha_power(j * sub.beta_exp, sub)


def beta_to_alpha(j: int, sub: SubgroupSpec = DEFAULT_SUBGROUP) -> int:
    """The k in 1..order with beta^j = alpha^k."""
    return normalize_exponent(j * sub.beta_exp, sub.order)


def alpha_to_beta(k: int, sub: SubgroupSpec = DEFAULT_SUBGROUP) -> int:
    """The j in 1..order with alpha^k = beta^j."""
    return normalize_exponent(k * pow(sub.beta_exp, -1, sub.order), sub.order)


def frobenius_exponent(j: int, order: int = 23) -> int:
    """Squaring doubles exponents in C."""
    return normalize_exponent(2 * j, order)


def doubling_orbit(j: int, order: int = 23) -> frozenset[int]:
    """Orbit of an exponent under repeated doubling mod the subgroup order."""
    out = {normalize_exponent(j, order)}
    p = frobenius_exponent(j, order)
    while p not in out:
        out.add(p)
        p = frobenius_exponent(p, order)
    return frozenset(out)


@lru_cache(maxsize=None)
def c_elements(sub: SubgroupSpec = DEFAULT_SUBGROUP) -> tuple[FieldElement, ...]:
    """alpha^1 .. alpha^order, in exponent order (the last entry is 1)."""
    return tuple(alpha_power(k, sub) for k in range(1, sub.order + 1))


@lru_cache(maxsize=None)
def _alpha_dlogs(sub: SubgroupSpec) -> dict[int, int]:
    return {elem.bits: k for k, elem in enumerate(c_elements(sub), start=1)}


def in_c(a: FieldElement, sub: SubgroupSpec = DEFAULT_SUBGROUP) -> bool:
    return a.bits in _alpha_dlogs(sub)


def dlog_alpha(a: FieldElement, sub: SubgroupSpec = DEFAULT_SUBGROUP) -> int:
    """The k in 1..order with alpha^k = a; rejects elements outside C."""
    try:
        return _alpha_dlogs(sub)[a.bits]
    except KeyError:
        raise ValueError(f"element {a} is not in the order-{sub.order} subgroup") from None


def dlog_beta(a: FieldElement, sub: SubgroupSpec = DEFAULT_SUBGROUP) -> int:
    return alpha_to_beta(dlog_alpha(a, sub), sub)


def check_independence(elements: Sequence[FieldElement]) -> bool:
    """True when the elements are linearly independent over GF(2)."""
    return rank(e.bits for e in elements) == len(elements)


@dataclass(frozen=True)
class OrderedBasis:
    """An ordered GF(2)-basis of the field, tagged with a display label."""

    label: str
    elements: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        degree = self.elements[0].spec.degree if self.elements else 0
        if len(self.elements) != degree:
            raise ValueError(f"need {degree} basis elements, got {len(self.elements)}")
        if not check_independence(self.elements):
            raise ValueError(f"basis {self.label!r} is linearly dependent")

    @property
    def spec(self) -> FieldSpec:
        return self.elements[0].spec


@lru_cache(maxsize=None)
def basis_a(sub: SubgroupSpec = DEFAULT_SUBGROUP) -> OrderedBasis:
    """{1, alpha, alpha^2, ..., alpha^10}."""
    one = sub.field.one
    return OrderedBasis("A", (one,) + tuple(alpha_power(k, sub) for k in range(1, sub.field.degree)))


@lru_cache(maxsize=None)
def basis_chi(spec: FieldSpec = DEFAULT_FIELD) -> OrderedBasis:
    """{1, X, X^2, ..., X^10}."""
    return OrderedBasis("chi", tuple(spec.element(1 << i) for i in range(spec.degree)))


@dataclass(frozen=True)
class CoordVector:
    """Coordinates in a named ordered basis; bit i multiplies basis element i."""

    bits: int
    basis_label: str

    def __str__(self) -> str:
        return format(self.bits, "011b")


@lru_cache(maxsize=None)
def _basis_matrix(basis: OrderedBasis) -> BitMatrix:
    """Matrix whose column j holds basis element j's coefficient bits."""
    return BitMatrix.from_columns(tuple(e.bits for e in basis.elements))


@lru_cache(maxsize=None)
def _basis_inverse(basis: OrderedBasis) -> BitMatrix:
    return mat_inverse(_basis_matrix(basis))


def express_in_basis(a: FieldElement, basis: OrderedBasis) -> CoordVector:
    """The unique coordinates of a in the basis (Gauss-eliminated once per
    basis and applied as a matrix, so output is deterministic)."""
    if a.spec != basis.spec:
        raise ValueError("element and basis belong to different field specs")
    return CoordVector(mat_vec(_basis_inverse(basis), a.bits), basis.label)


def reconstruct(coords: CoordVector, basis: OrderedBasis) -> FieldElement:
    """Sum of the basis elements selected by the coordinate bits."""
    acc = basis.spec.zero
    for i, e in enumerate(basis.elements):
        if coords.bits >> i & 1:
            acc = acc + e
    return acc


def change_of_basis(frm: OrderedBasis, to: OrderedBasis) -> BitMatrix:
    """Matrix P with P * coords_frm(a) = coords_to(a) for every element a."""
    if frm.spec != to.spec:
        raise ValueError("bases belong to different field specs")
    return BitMatrix.from_columns(tuple(express_in_basis(e, to).bits for e in frm.elements))


def expression_string(coords: CoordVector, symbol: str = "a") -> str:
    """Render coordinates as a sum of basis powers, e.g. "a9+a7+a6+1"."""
    if coords.bits == 0:
        return "0"
    terms = []
    for e in range(coords.bits.bit_length() - 1, -1, -1):
        if coords.bits >> e & 1:
            terms.append("1" if e == 0 else symbol if e == 1 else f"{symbol}{e}")
    return "+".join(terms)


def parse_expression(text: str, symbol: str = "a") -> CoordVector:
    """Inverse of expression_string (accepts "a9+a7+1", label left generic)."""
    if text.strip() == "0":
        return CoordVector(0, "A")
    bits = 0
    for term in text.split("+"):
        term = term.strip()
        if term == "1":
            bits ^= 1
        elif term == symbol:
            bits ^= 2
        elif term.startswith(symbol) and term[len(symbol):].isdigit():
            bits ^= 1 << int(term[len(symbol):])
        else:
            raise ValueError(f"bad term {term!r} in basis expression {text!r}")
    return CoordVector(bits, "A")
