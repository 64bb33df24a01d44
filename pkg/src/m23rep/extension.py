"""Extending permutations of the order-23 subgroup to linear maps.

A permutation sigma of the exponents 1..23 (acting on C by beta^j -> beta^sigma(j))
determines at most one GF(2)-linear map of the field agreeing with it on C,
because the first eleven powers of alpha form a basis.  ``extend`` builds that
candidate map column by column and then checks it against the twelve remaining
elements of C; the result is either the matrix or a concrete counterexample.
``search_beta`` repeats the attempt for every admissible choice of beta, and
``m24_test`` runs the analogous consistency check for a permutation of 24
points whose 24th point has no assigned field element.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from .bitmatrix import BitMatrix, mat_inverse, mat_vec
from .field import FieldElement, to_binary_string
from .perm import Permutation
from .subgroup import (
    DEFAULT_SUBGROUP,
    CoordVector,
    OrderedBasis,
    SubgroupSpec,
    alpha_power,
    alpha_to_beta,
    basis_a,
    basis_chi,
    beta_power,
    change_of_basis,
    dlog_beta,
    doubling_orbit,
    express_in_basis,
    in_c,
    normalize_exponent,
    reconstruct,
)


@dataclass(frozen=True)
class ExtensionCandidate:
    """A permutation of C together with the exponent defining beta = alpha^beta_exp."""

    sigma: Permutation
    beta_exp: int = 5

    def __post_init__(self) -> None:
        if self.sigma.degree != 23:
            raise ValueError(f"candidate permutation must act on 23 points, got {self.sigma.degree}")
        if not 1 <= self.beta_exp <= 22:
            raise ValueError(f"beta exponent {self.beta_exp} is outside 1..22")


@dataclass(frozen=True)
class FailureWitness:
    """The first element of C where the candidate linear map contradicts sigma.

    ``c_exponent`` names the checked element by its exponent, ``expected_beta_exp``
    is the exponent its image was required to have, ``computed`` is the element
    the linear map actually produced, and ``in_c`` records whether that element
    even lies in the subgroup.
    """

    c_exponent: int
    expected_beta_exp: int
    computed: FieldElement
    in_c: bool

    def as_dict(self) -> dict[str, object]:
        return {
            "c_exponent": self.c_exponent,
            "expected_beta_exp": self.expected_beta_exp,
            "computed": to_binary_string(self.computed),
            "in_c": self.in_c,
        }


@dataclass(frozen=True)
class ExtensionReport:
    """Outcome of one extension attempt: the matrix in basis A, or a witness."""

    success: bool
    matrix_a: BitMatrix | None = None
    witness: FailureWitness | None = None

    def __post_init__(self) -> None:
        if self.success != (self.matrix_a is not None) or self.success != (self.witness is None):
            raise ValueError("report must carry exactly one of matrix / witness")

    def as_dict(self) -> dict[str, object]:
        if self.success:
            assert self.matrix_a is not None
            return {"success": True, "matrix_a_rows": self.matrix_a.to_text().splitlines()}
        assert self.witness is not None
        return {"success": False, "witness": self.witness.as_dict()}


def _with_beta(base: SubgroupSpec, beta_exp: int) -> SubgroupSpec:
    return base if base.beta_exp == beta_exp else replace(base, beta_exp=beta_exp)


def extend(candidate: ExtensionCandidate, base: SubgroupSpec = DEFAULT_SUBGROUP) -> ExtensionReport:
    """Attempt to extend sigma to a linear map, in the basis {1, alpha, ..., alpha^10}.

    Columns are forced: basis element alpha^i equals beta^j for a known j, so its
    image must be beta^sigma(j).  Linearity then determines the map everywhere,
    and it agrees with sigma on C if and only if it agrees on alpha^11..alpha^22.
    """
    sub = _with_beta(base, candidate.beta_exp)
    sigma = candidate.sigma
    basis = basis_a(sub)

    def image_of(k: int) -> FieldElement:
        return beta_power(sigma(alpha_to_beta(normalize_exponent(k, sub.order), sub)), sub)

    columns = tuple(express_in_basis(image_of(i), basis).bits for i in range(sub.field.degree))
    matrix = BitMatrix.from_columns(columns)

    for k in range(sub.field.degree, sub.order):
        coords = express_in_basis(alpha_power(k, sub), basis)
        computed = reconstruct(CoordVector(mat_vec(matrix, coords.bits), basis.label), basis)
        expected_exp = sigma(alpha_to_beta(k, sub))
        if computed != beta_power(expected_exp, sub):
            witness = FailureWitness(
                c_exponent=k,
                expected_beta_exp=expected_exp,
                computed=computed,
                in_c=in_c(computed, sub),
            )
            return ExtensionReport(success=False, witness=witness)
    return ExtensionReport(success=True, matrix_a=matrix)


def multiplication_matrix(m: FieldElement, basis: OrderedBasis) -> BitMatrix:
    """Matrix of x -> m*x in the given basis; invertible whenever m is nonzero."""
    if m.is_zero:
        raise ValueError("multiplication by zero is not invertible")
    return BitMatrix.from_columns(
        tuple(express_in_basis(m * e, basis).bits for e in basis.elements)
    )


def matrix_in_chi(matrix_a: BitMatrix, sub: SubgroupSpec = DEFAULT_SUBGROUP) -> BitMatrix:
    """Conjugate a matrix written in basis A into the power basis {1, X, ..., X^10}."""
    p = change_of_basis(basis_a(sub), basis_chi(sub.field))
    return p * matrix_a * mat_inverse(p)


def restriction_to_c(
    matrix: BitMatrix, sub: SubgroupSpec = DEFAULT_SUBGROUP, basis: OrderedBasis | None = None
) -> Permutation:
    """The permutation of beta-exponents induced by a C-preserving matrix.

    Raises ValueError if the matrix moves some element of C outside C.
    """
    basis = basis_a(sub) if basis is None else basis
    images = []
    for j in range(1, sub.order + 1):
        coords = express_in_basis(beta_power(j, sub), basis)
        image = reconstruct(CoordVector(mat_vec(matrix, coords.bits), basis.label), basis)
        images.append(dlog_beta(image, sub))
    return Permutation(tuple(images))


def preserves_c(
    matrix: BitMatrix, sub: SubgroupSpec = DEFAULT_SUBGROUP, basis: OrderedBasis | None = None
) -> bool:
    """True when the matrix maps every element of C back into C."""
    basis = basis_a(sub) if basis is None else basis
    for j in range(1, sub.order + 1):
        coords = express_in_basis(beta_power(j, sub), basis)
        image = reconstruct(CoordVector(mat_vec(matrix, coords.bits), basis.label), basis)
        if not in_c(image, sub):
            return False
    return True


@dataclass(frozen=True)
class BetaVerdict:
    """Extension outcome for one choice of beta, tagged by its doubling orbit."""

    beta_exp: int
    success: bool
    orbit_min: int


def search_beta(
    sigma: Permutation, base: SubgroupSpec = DEFAULT_SUBGROUP
) -> tuple[BetaVerdict, ...]:
    """Run the extension attempt for beta = alpha^k, every k in 1..22.

    Each verdict carries the smallest exponent of its doubling orbit
    (k -> 2k mod 23), so the verdicts can be read orbit by orbit.
    """
    verdicts = []
    for k in range(1, base.order):
        report = extend(ExtensionCandidate(sigma, beta_exp=k), base)
        verdicts.append(BetaVerdict(k, report.success, min(doubling_orbit(k, base.order))))
    return tuple(verdicts)


@dataclass(frozen=True)
class M24Verdict:
    """Result of the 24-point consistency experiment for one choice of beta."""

    beta_exp: int
    consistent: bool
    defining_exponents: tuple[int, ...]
    checked_count: int
    witness: FailureWitness | None

    def as_dict(self) -> dict[str, object]:
        return {
            "beta_exp": self.beta_exp,
            "consistent": self.consistent,
            "defining_exponents": list(self.defining_exponents),
            "checked_count": self.checked_count,
            "witness": None if self.witness is None else self.witness.as_dict(),
        }


def m24_test(
    h: Permutation, beta_exp: int = 5, base: SubgroupSpec = DEFAULT_SUBGROUP
) -> M24Verdict:
    """Check whether a 24-point permutation could act linearly on the field.

    Points 1..23 stand for beta^1..beta^23; point 24 has no field element
    assigned.  Points 1 and 24 are therefore excluded on both sides: the test
    uses only points j with j != 1, h(j) != 1 and h(j) != 24.  Eleven
    independent usable elements pin down the only possible linear map, and the
    verdict reports whether the remaining usable elements obey it.
    """
    if h.degree != 24:
        raise ValueError(f"expected a permutation of 24 points, got degree {h.degree}")
    sub = _with_beta(base, beta_exp)

    usable = [j for j in range(2, 24) if h(j) != 1 and h(j) != 24]
    defining: list[int] = []
    span: dict[int, int] = {}

    def reduce(v: int) -> int:
        for pivot in sorted(span, reverse=True):
            if v >> pivot & 1:
                v ^= span[pivot]
        return v

    for j in usable:
        residue = reduce(beta_power(j, sub).bits)
        if residue and len(defining) < sub.field.degree:
            span[residue.bit_length() - 1] = residue
            defining.append(j)
    if len(defining) < sub.field.degree:
        raise ValueError("usable points do not span the field; cannot build a defining set")

    basis_mat = BitMatrix.from_columns(tuple(beta_power(j, sub).bits for j in defining))
    image_mat = BitMatrix.from_columns(tuple(beta_power(h(j), sub).bits for j in defining))
    matrix = image_mat * mat_inverse(basis_mat)

    checked = 0
    for j in usable:
        if j in defining:
            continue
        checked += 1
        computed = sub.field.element(mat_vec(matrix, beta_power(j, sub).bits))
        if computed != beta_power(h(j), sub):
            witness = FailureWitness(
                c_exponent=j,
                expected_beta_exp=h(j),
                computed=computed,
                in_c=in_c(computed, sub),
            )
            return M24Verdict(beta_exp, False, tuple(defining), checked, witness)
    return M24Verdict(beta_exp, True, tuple(defining), checked, None)
