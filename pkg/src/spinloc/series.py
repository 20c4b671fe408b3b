"""Exact truncated power series in one variable s with integer coefficients.

Coefficients are plain Python ints, so every operation is exact at any
size.  A series of order N stores the coefficients of s^0 .. s^N and
discards (never approximates) everything above; binary operations truncate
to the smaller operand order, which keeps truncation composable.

The variable s is a formal square root of the localization indeterminate t
(t = s^2).  Fixed-point contributions to the equivariant A-hat genus carry
half-integer powers t^(w/2); written in s they become plain monomials s^w,
so the whole calculation stays inside this integer series ring.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TruncatedSeries:
    """Dense integer power series, truncated inclusively at a fixed order.

    ``coeffs[k]`` is the coefficient of s^k; the order is ``len(coeffs) - 1``.
    Instances are immutable and safe to share across threads.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the s^0 coefficient")
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValueError(f"coefficients must be plain integers, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        """Inclusive truncation degree."""
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        """The zero series of the given order."""
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        return cls((0,) * (order + 1))

    @classmethod
    def monomial(cls, coeff: int, exponent: int, order: int) -> TruncatedSeries:
        """coeff * s^exponent as a series of the given order.

        Negative exponents are rejected: this ring has no Laurent part.
        """
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        if exponent < 0:
            raise ValueError(f"exponent must be non-negative, got {exponent}")
        if exponent > order:
            raise ValueError(f"exponent {exponent} exceeds order {order}")
        coeffs = [0] * (order + 1)
        coeffs[exponent] = coeff
        return cls(tuple(coeffs))

    def truncate(self, order: int) -> TruncatedSeries:
        """Discard all coefficients above ``order`` (which must not exceed
        the current order; truncation never invents coefficients)."""
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to order {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def lowest_term(self) -> tuple[int, int] | None:
        """Smallest exponent carrying a nonzero coefficient, with that
        coefficient; None if the series vanishes up to its order."""
        for k, c in enumerate(self.coeffs):
            if c:
                return (k, c)
        return None

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self.coeffs[k] + other.coeffs[k] for k in range(order + 1))
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        """Cauchy product, truncated at the smaller operand order."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(order - i + 1):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))


def geometric(weight: int, order: int) -> TruncatedSeries:
    """Expansion of 1/(1 - s^(2*weight)): coefficient 1 at every exponent
    that is a non-negative multiple of 2*weight, 0 elsewhere.

    One such factor appears per tangent weight once a fixed-point
    contribution is cleared of its denominators.
    """
    if weight < 1:
        raise ValueError(f"weight must be a positive integer, got {weight}")
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    for k in range(0, order + 1, 2 * weight):
        coeffs[k] = 1
    return TruncatedSeries(tuple(coeffs))
