"""2-matrix factorizations: certified pairs (P, Q) with P*Q = f*I.

The recursive sum construction combines a factorization of f1 and one of
f2 into a factorization of f1 + f2 of size 2*n1*n2, doubling on each added
summand, so a sum of k products factors at size 2^(k-1) starting from the
1x1 base pairs ([left], [right]).
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import same_context
from .errors import CertificateError, ContextError, DimensionError
from .matrix import RatMatrix, first_difference
from .poly import Monomial, Polynomial


def check_product_is_scalar(label: str, product: RatMatrix, f: Polynomial):
    """Raise CertificateError at the first entry where product != f*I."""
    expected = RatMatrix.scalar(product.context, product.rows, f)
    spot = first_difference(product, expected)
    if spot is not None:
        i, j = spot
        raise CertificateError(label, i, j, product[i, j], expected[i, j])


class MF2:
    """A certified pair of square matrices with P*Q = target*I."""

    __slots__ = ("_p", "_q", "_target", "_size")

    def __init__(self, P: RatMatrix, Q: RatMatrix, target: Polynomial):
        if not (P.is_square and Q.is_square and P.rows == Q.rows):
            raise DimensionError(
                f"factors must be square and equal-sized, got {P.shape} and {Q.shape}"
            )
        same_context(P, Q, target)
        check_product_is_scalar("P*Q", P @ Q, target)
        self._p = P
        self._q = Q
        self._target = target
        self._size = P.rows

    @property
    def P(self) -> RatMatrix:
        return self._p

    @property
    def Q(self) -> RatMatrix:
        return self._q

    @property
    def target(self) -> Polynomial:
        return self._target

    @property
    def size(self) -> int:
        return self._size

    @property
    def context(self):
        return self._target.context

    def is_two_sided(self) -> bool:
        """Whether Q*P = target*I as well (automatic when target != 0)."""
        try:
            check_product_is_scalar("Q*P", self._q @ self._p, self._target)
        except CertificateError:
            return False
        return True

    def __eq__(self, other):
        if not isinstance(other, MF2):
            return NotImplemented
        return (
            self._target == other._target
            and self._p == other._p
            and self._q == other._q
        )

    def __hash__(self):
        return hash((self._p, self._q, self._target))

    def __repr__(self):
        return f"MF2(size={self._size}, target={self._target})"


@dataclass(frozen=True)
class TermSplit:
    """One summand of the target written as left * right, left a single term."""

    left: Polynomial
    right: Polynomial

    def __post_init__(self):
        same_context(self.left, self.right)
        if not self.left.is_single_term:
            raise ValueError(f"split left factor must be a single term, got {self.left}")

    @property
    def summand(self) -> Polynomial:
        return self.left * self.right

    def base_factorization(self) -> MF2:
        return MF2(
            RatMatrix.from_rows(self.left.context, [[self.left]]),
            RatMatrix.from_rows(self.right.context, [[self.right]]),
            self.summand,
        )


def split_term(term: Polynomial) -> TermSplit:
    """Default split of a single term: the lowest-ordered variable at its full
    exponent carries the coefficient; the remaining monomial is the right side."""
    if not term.is_single_term:
        raise ValueError("default splits apply to single-term polynomials")
    ctx = term.context
    (mono, coeff), = term.terms().items()
    if mono.is_one():
        return TermSplit(term, Polynomial.one(ctx))
    powers = mono.powers
    i0, e0 = powers[0]
    left = Polynomial(ctx, {Monomial(((i0, e0),)): coeff})
    right = Polynomial(ctx, {Monomial(powers[1:]): 1})
    return TermSplit(left, right)


def default_splits(f: Polynomial) -> list[TermSplit]:
    """One split per term of f, in graded-lex order (largest term first)."""
    ctx = f.context
    return [
        split_term(Polynomial(ctx, {mono: coeff})) for mono, coeff in f.terms_grlex()
    ]


def splits_from_factors(summands: list[list[Polynomial]]) -> list[TermSplit]:
    """Build TermSplits from the product structure of parsed summands.

    The first single-term factor becomes the left side; everything else
    multiplies into the right side.
    """
    splits = []
    for factors in summands:
        pick = next((i for i, p in enumerate(factors) if p.is_single_term), None)
        if pick is None:
            raise ValueError(
                "split term has no single-term factor: "
                + " * ".join(f"({p})" for p in factors)
            )
        left = factors[pick]
        right = Polynomial.one(left.context)
        for i, p in enumerate(factors):
            if i != pick:
                right = right * p
        splits.append(TermSplit(left, right))
    return splits


def add_factorizations(x1: MF2, x2: MF2) -> MF2:
    """Combine factorizations of f1 and f2 into one of f1 + f2.

    Blocks:
        P = [[P1 kron I,  -(I kron P2)], [I kron Q2,  Q1 kron I]]
        Q = [[Q1 kron I,    I kron P2 ], [-(I kron Q2), P1 kron I]]

    The output is certified; size is 2 * n1 * n2.
    """
    if x1.context != x2.context:
        raise ContextError("factorizations from different variable contexts")
    i1 = RatMatrix.identity(x1.context, x1.size)
    i2 = RatMatrix.identity(x2.context, x2.size)
    p1i = x1.P.kron(i2)
    q1i = x1.Q.kron(i2)
    ip2 = i1.kron(x2.P)
    iq2 = i1.kron(x2.Q)
    top_p = _hstack(p1i, -ip2)
    bot_p = _hstack(iq2, q1i)
    top_q = _hstack(q1i, ip2)
    bot_q = _hstack(-iq2, p1i)
    P = _vstack(top_p, bot_p)
    Q = _vstack(top_q, bot_q)
    return MF2(P, Q, x1.target + x2.target)


def standard_method(f: Polynomial, splits: list[TermSplit] | None = None) -> MF2:
    """Factor f presented as a sum of products, doubling size per summand.

    With splits=None each graded-lex term of f is split by the default rule.
    Explicit splits must multiply and sum back to f exactly.
    """
    if splits is None:
        if f.is_zero:
            raise ValueError(
                "cannot split the zero polynomial; build the pair ([0], [1]) directly"
            )
        splits = default_splits(f)
    if not splits:
        raise ValueError("at least one split is required")
    total = Polynomial.zero(f.context)
    for s in splits:
        total = total + s.summand
    if total != f:
        raise ValueError(f"splits sum to {total}, not to {f}")
    result = splits[0].base_factorization()
    for s in splits[1:]:
        result = add_factorizations(result, s.base_factorization())
    return result


def _hstack(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.rows != b.rows:
        raise DimensionError("row mismatch in block assembly")
    entries = []
    for i in range(a.rows):
        entries.extend(a.row(i))
        entries.extend(b.row(i))
    return RatMatrix(a.context, a.rows, a.cols + b.cols, entries)


def _vstack(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.cols:
        raise DimensionError("column mismatch in block assembly")
    entries = []
    for i in range(a.rows):
        entries.extend(a.row(i))
    for i in range(b.rows):
        entries.extend(b.row(i))
    return RatMatrix(a.context, a.rows + b.rows, a.cols, entries)
