"""3-matrix factorizations via LU decomposition over the fraction field.

A certified MF2 factor is split as L*U (Doolittle: unit diagonal on L;
Crout: unit diagonal on U), turning (P, Q) into a certified triple such as
(L, U, Q). Pivots are exact zero tests; optional row pivoting takes the
first usable row and the transposed permutation is absorbed into the
L-side factor so the triple certificate survives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import same_context
from .errors import (
    ContextError,
    DimensionError,
    SingularPivotError,
    StructurallySingularError,
)
from .matrix import PermutationMatrix, RatMatrix
from .mf2 import MF2, check_product_is_scalar
from .poly import Polynomial
from .ratfunc import RationalFunction

DOOLITTLE = "doolittle"
CROUT = "crout"
_METHODS = (DOOLITTLE, CROUT)


@dataclass(frozen=True)
class Provenance:
    method: str
    decomposed: str
    pivoted: bool


class MF3:
    """A certified triplet of square matrices with A1*A2*A3 = target*I."""

    __slots__ = ("_a1", "_a2", "_a3", "_target", "_size", "provenance")

    def __init__(
        self,
        A1: RatMatrix,
        A2: RatMatrix,
        A3: RatMatrix,
        target: Polynomial,
        provenance: Provenance | None = None,
    ):
        if not (
            A1.is_square
            and A1.shape == A2.shape == A3.shape
        ):
            raise DimensionError(
                f"factors must be square and equal-sized, got "
                f"{A1.shape}, {A2.shape}, {A3.shape}"
            )
        same_context(A1, A2, A3, target)
        check_product_is_scalar("A1*A2*A3", A1 @ A2 @ A3, target)
        self._a1 = A1
        self._a2 = A2
        self._a3 = A3
        self._target = target
        self._size = A1.rows
        self.provenance = provenance

    @property
    def A1(self) -> RatMatrix:
        return self._a1

    @property
    def A2(self) -> RatMatrix:
        return self._a2

    @property
    def A3(self) -> RatMatrix:
        return self._a3

    @property
    def components(self) -> tuple[RatMatrix, RatMatrix, RatMatrix]:
        return self._a1, self._a2, self._a3

    @property
    def target(self) -> Polynomial:
        return self._target

    @property
    def size(self) -> int:
        return self._size

    @property
    def context(self):
        return self._target.context

    def direct_sum(self, other: MF3) -> MF3:
        """Componentwise block-diagonal sum of two factorizations of the same f."""
        if self.context != other.context:
            raise ContextError("factorizations from different variable contexts")
        if self._target != other._target:
            raise ValueError(
                f"direct sum needs equal targets, got {self._target} and {other._target}"
            )
        return MF3(
            self._a1.direct_sum(other._a1),
            self._a2.direct_sum(other._a2),
            self._a3.direct_sum(other._a3),
            self._target,
        )

    def __eq__(self, other):
        if not isinstance(other, MF3):
            return NotImplemented
        return (
            self._target == other._target
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.components, self._target))

    def __repr__(self):
        return f"MF3(size={self._size}, target={self._target})"


@dataclass(frozen=True)
class LUResult:
    L: RatMatrix
    U: RatMatrix
    permutation: PermutationMatrix | None  # L @ U = permutation applied to the input
    method: str

    @property
    def pivoted(self) -> bool:
        return self.permutation is not None


def lu_decompose(A: RatMatrix, method: str = DOOLITTLE, pivot: bool = False) -> LUResult:
    """Exact LU decomposition of a square matrix over the fraction field.

    Returns L, U with L @ U == A, or L @ U == P @ A when pivoting had to
    permute rows (P is reported so A == P.transpose() @ L @ U). A zero
    pivot raises SingularPivotError unless pivot=True, in which case the
    first lower row with a nonzero entry in the pivot column is used;
    if no row qualifies the matrix is singular.
    """
    if method not in _METHODS:
        raise ValueError(f"unknown LU method {method!r}")
    if not A.is_square:
        raise DimensionError(f"LU decomposition needs a square matrix, got {A.shape}")
    ctx = A.context
    n = A.rows
    zero = RationalFunction.zero(ctx)
    one = RationalFunction.one(ctx)
    work = A.row_lists()
    lower = [[one if i == j else zero for j in range(n)] for i in range(n)]
    order = list(range(n))
    swapped = False
    for k in range(n):
        if work[k][k].is_zero:
            if not pivot:
                raise SingularPivotError(k + 1)
            found = next(
                (r for r in range(k + 1, n) if not work[r][k].is_zero), None
            )
            if found is None:
                raise StructurallySingularError(k)
            work[k], work[found] = work[found], work[k]
            order[k], order[found] = order[found], order[k]
            for j in range(k):
                lower[k][j], lower[found][j] = lower[found][j], lower[k][j]
            swapped = True
        pivot_entry = work[k][k]
        for i in range(k + 1, n):
            if work[i][k].is_zero:
                continue
            factor = work[i][k] / pivot_entry
            lower[i][k] = factor
            work[i][k] = zero
            for j in range(k + 1, n):
                work[i][j] = work[i][j] - factor * work[k][j]
    upper = [
        [work[i][j] if j >= i else zero for j in range(n)] for i in range(n)
    ]
    if method == CROUT:
        # rescale the unique L(unit)*U decomposition into L*U(unit)
        diag = [upper[i][i] for i in range(n)]
        lower = [
            [lower[i][j] * diag[j] if j <= i else zero for j in range(n)]
            for i in range(n)
        ]
        upper = [
            [upper[i][j] / diag[i] if j >= i else zero for j in range(n)]
            for i in range(n)
        ]
    L = RatMatrix(ctx, n, n, [e for row in lower for e in row])
    U = RatMatrix(ctx, n, n, [e for row in upper for e in row])
    permutation = PermutationMatrix(order) if swapped else None
    return LUResult(L, U, permutation, method)


def promote(
    X: MF2,
    which: str = "first",
    method: str = DOOLITTLE,
    pivot: bool = False,
) -> MF3:
    """Expand a certified pair into a certified triple by LU-splitting one factor.

    which="first" decomposes P, giving (L, U, Q); which="second" decomposes
    Q, giving (P, L, U). With pivoting, L @ U = Perm @ factor, so the triple
    uses Perm.transpose() @ L in place of L and the certificate still holds.
    """
    if which not in ("first", "second"):
        raise ValueError(f"which must be 'first' or 'second', got {which!r}")
    factor = X.P if which == "first" else X.Q
    result = lu_decompose(factor, method=method, pivot=pivot)
    L = result.L
    if result.permutation is not None:
        L = result.permutation.transpose().apply_rows(L)
    if which == "first":
        triple = (L, result.U, X.Q)
    else:
        triple = (X.P, L, result.U)
    provenance = Provenance(method, which, result.pivoted)
    return MF3(*triple, X.target, provenance=provenance)
