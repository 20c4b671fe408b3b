"""Equivariant A-hat localization series and the weight-sum spin obstruction.

For a circle action with isolated fixed points, each fixed point p with
weights w_1 .. w_n and orientation sign eps(p) contributes

    eps(p) * prod_i t^(w_i / 2) / (1 - t^(w_i))

to the equivariant A-hat genus.  Substituting t = s^2 clears the
half-integer exponents and turns the contribution into the integer series

    eps(p) * s^(w_1 + ... + w_n) * prod_i 1/(1 - s^(2 w_i)),

so the sum over all fixed points is computable exactly to any order.  On a
spin manifold that sum vanishes identically; a nonzero expansion therefore
rules out a spin structure.  The cheapest certificate of non-vanishing is a
fixed point whose total weight is strictly below that of every fixed point
of the opposite sign: nothing can reach its leading exponent with the
opposite sign, so the leading coefficient survives.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .fixedpoints import FixedPoint, FixedPointData, cp_standard_action, fixed_point_data
from .series import TruncatedSeries, geometric


class Verdict(str, Enum):
    """Outcome of the weight-sum obstruction test.

    The test is one-directional: NOT_SPIN is a proof, INCONCLUSIVE means
    only that this particular criterion does not decide.
    """

    NOT_SPIN = "NOT_SPIN"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ObstructionReport:
    verdict: Verdict
    witness: str | None
    min_sum_plus: int | None
    min_sum_minus: int | None
    detail: str


@dataclass(frozen=True)
class VanishingReport:
    order: int
    is_zero: bool
    lowest_term: tuple[int, int] | None


@dataclass(frozen=True)
class CrossValidationReport:
    n: int
    order: int
    spin_by_parity: bool
    series_is_zero: bool
    lowest_term: tuple[int, int] | None
    verdict: Verdict
    witness: str | None
    consistent: bool
    detail: str


def default_order(data: FixedPointData) -> int:
    """Default truncation order: twice the largest total weight plus one,
    enough to show the leading term and one echo of each geometric factor."""
    return 2 * max(p.weight_sum for p in data.points) + 1


def ahat_equivariant_series(data: FixedPointData, order: int) -> TruncatedSeries:
    """Expand the localization sum over all fixed points to the given order.

    A point whose total weight exceeds the order contributes nothing below
    the truncation and is skipped; the result is still exact to ``order``.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    total = TruncatedSeries.zero(order)
    for p in data.points:
        shift = p.weight_sum
        if shift > order:
            continue
        term = TruncatedSeries.monomial(p.sign, shift, order)
        for w in p.weights:
            term = term * geometric(w, order)
        total = total + term
    return total


def _first_with_sum(points: list[FixedPoint], value: int) -> FixedPoint:
    # ties among same-sign minimal points break by input order
    return next(p for p in points if p.weight_sum == value)


def spin_obstruction_check(data: FixedPointData) -> ObstructionReport:
    """Compare the minimal total weight of the two sign classes.

    A strictly smaller minimum on one side names a witness point whose
    leading series term cannot cancel, hence NOT_SPIN.  With only one sign
    present the comparison is vacuous and the minimal point itself is the
    witness.  Equal minima decide nothing.
    """
    if not data.points:
        raise ValueError("fixed-point data has no points")
    plus = [p for p in data.points if p.sign == 1]
    minus = [p for p in data.points if p.sign == -1]
    min_plus = min((p.weight_sum for p in plus), default=None)
    min_minus = min((p.weight_sum for p in minus), default=None)

    if min_plus is None or min_minus is None:
        pool = plus if min_minus is None else minus
        best = min(p.weight_sum for p in pool)
        witness = _first_with_sum(pool, best)
        detail = (
            f"every fixed point has sign {witness.sign:+d}; {witness.label} attains the "
            f"minimal total weight {best} and there is no opposite-sign point to cancel it"
        )
        return ObstructionReport(Verdict.NOT_SPIN, witness.label, min_plus, min_minus, detail)

    if min_plus == min_minus:
        detail = (
            f"both sign classes attain the same minimal total weight {min_plus}; "
            "the weight-sum comparison does not decide"
        )
        return ObstructionReport(Verdict.INCONCLUSIVE, None, min_plus, min_minus, detail)

    if min_plus < min_minus:
        witness = _first_with_sum(plus, min_plus)
        smaller, larger = min_plus, min_minus
    else:
        witness = _first_with_sum(minus, min_minus)
        smaller, larger = min_minus, min_plus
    detail = (
        f"{witness.label} has total weight {smaller}, strictly below the minimum {larger} "
        "over fixed points of the opposite sign, so its leading term survives"
    )
    return ObstructionReport(Verdict.NOT_SPIN, witness.label, min_plus, min_minus, detail)


def is_cpn_spin(n: int) -> bool:
    """Classical parity rule: CP^n is spin exactly when n is odd (the first
    Chern class is n+1 times a generator, and its mod-2 reduction must die)."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return n % 2 == 1


def verify_vanishing(data: FixedPointData, order: int) -> VanishingReport:
    """Expand the localization series and report whether it vanishes up to
    the given order, with the surviving lowest term when it does not."""
    series = ahat_equivariant_series(data, order)
    lowest = series.lowest_term()
    return VanishingReport(order=order, is_zero=lowest is None, lowest_term=lowest)


def cross_validate(n: int, order: int | None = None) -> CrossValidationReport:
    """Run three independent signals on the standard action on CP^n and
    check that they agree: the parity rule, vanishing of the localization
    series, and the weight-sum obstruction verdict.

    Expected: odd n gives a zero series and an INCONCLUSIVE verdict; even n
    gives a nonzero series and NOT_SPIN.  Disagreement is reported, not
    raised.
    """
    data = fixed_point_data(cp_standard_action(n))
    if order is None:
        order = default_order(data)
    spin = is_cpn_spin(n)
    vanishing = verify_vanishing(data, order)
    obstruction = spin_obstruction_check(data)

    consistent = (vanishing.is_zero == spin) and (
        (obstruction.verdict == Verdict.INCONCLUSIVE) == spin
    )

    parity_text = f"parity: n={n} is {'odd' if spin else 'even'}, so CP^{n} is {'spin' if spin else 'not spin'}"
    if vanishing.is_zero:
        series_text = f"series: identically zero up to order {order}"
    else:
        exponent, coefficient = vanishing.lowest_term
        series_text = f"series: nonzero, lowest term ({exponent}, {coefficient}) at order {order}"
    verdict_text = f"obstruction: {obstruction.verdict.value}"
    if obstruction.witness is not None:
        verdict_text += f" with witness {obstruction.witness}"
    agreement = "all signals agree" if consistent else "SIGNALS DISAGREE"
    detail = "; ".join([parity_text, series_text, verdict_text, agreement])

    return CrossValidationReport(
        n=n,
        order=order,
        spin_by_parity=spin,
        series_is_zero=vanishing.is_zero,
        lowest_term=vanishing.lowest_term,
        verdict=obstruction.verdict,
        witness=obstruction.witness,
        consistent=consistent,
        detail=detail,
    )
