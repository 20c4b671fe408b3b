"""Isolated fixed-point data of circle actions, with generators for linear
actions on complex projective space.

A fixed point is abstracted into its positive tangent rotation weights plus
an orientation sign; a dataset is the full fixed-point list of one action
on a 2n-dimensional oriented manifold.  For the linear action

    g . [z_0 : ... : z_n] = [g^(a_0) z_0 : ... : g^(a_n) z_n]

with pairwise distinct integer exponents a_i, the fixed points are the
coordinate axes p_0 .. p_n.  In local coordinates around p_i the circle
rotates the j-th direction with speed a_j - a_i, so the oriented weights
are the absolute differences |a_j - a_i| and the orientation sign is -1 to
the number of negative differences.

Datasets are plain values: any (weights, sign) collection is accepted,
whether or not some manifold realizes it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


def _plain_int(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class FixedPoint:
    """One isolated fixed point: label, orientation sign, positive weights.

    Weights form a multiset; the constructor sorts them ascending so that
    equal multisets compare equal.
    """

    label: str
    sign: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if _plain_int(self.sign, "sign") not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        weights = tuple(self.weights)
        if not weights:
            raise ValueError(f"fixed point {self.label!r} has no weights")
        for w in weights:
            if _plain_int(w, "weight") < 1:
                raise ValueError(f"weights must be positive integers, got {w!r}")
        object.__setattr__(self, "weights", tuple(sorted(weights)))

    @property
    def weight_sum(self) -> int:
        """Total rotation weight at this point."""
        return sum(self.weights)


@dataclass(frozen=True)
class FixedPointData:
    """The fixed-point set of a circle action on a 2*half_dim manifold."""

    half_dim: int
    points: tuple[FixedPoint, ...]

    def __post_init__(self) -> None:
        if _plain_int(self.half_dim, "half_dim") < 1:
            raise ValueError(f"half_dim must be a positive integer, got {self.half_dim!r}")
        points = tuple(self.points)
        if not points:
            raise ValueError("fixed-point data needs at least one point")
        for p in points:
            if len(p.weights) != self.half_dim:
                raise ValueError(
                    f"point {p.label!r} has {len(p.weights)} weights, expected {self.half_dim}"
                )
        labels = [p.label for p in points]
        if len(set(labels)) != len(labels):
            raise ValueError("fixed-point labels must be pairwise distinct")
        object.__setattr__(self, "points", points)


@dataclass(frozen=True)
class LinearAction:
    """A linear circle action on CP^n, given by the exponent of g on each
    homogeneous coordinate.  Exponents must be pairwise distinct, otherwise
    the fixed points are not isolated."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exponents = tuple(_plain_int(a, "exponent") for a in self.exponents)
        if len(exponents) < 2:
            raise ValueError("a linear action needs at least two exponents")
        if len(set(exponents)) != len(exponents):
            raise ValueError(f"exponents must be pairwise distinct, got {exponents}")
        object.__setattr__(self, "exponents", exponents)


def cp_standard_action(n: int) -> LinearAction:
    """The standard linear action on CP^n: coordinate z_i rotates with
    speed i, i.e. exponents (0, 1, ..., n)."""
    if _plain_int(n, "n") < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return LinearAction(tuple(range(n + 1)))


def fixed_point_data(action: LinearAction) -> FixedPointData:
    """Fixed-point data of a linear circle action on CP^n.

    Point p_i has oriented weights {|a_j - a_i| : j != i} and sign
    (-1)^(number of j with a_j < a_i).
    """
    exponents = action.exponents
    points = []
    for i, a_i in enumerate(exponents):
        weights = tuple(abs(a_j - a_i) for j, a_j in enumerate(exponents) if j != i)
        below = sum(1 for a_j in exponents if a_j < a_i)
        points.append(FixedPoint(label=f"p_{i}", sign=(-1) ** below, weights=weights))
    return FixedPointData(half_dim=len(exponents) - 1, points=tuple(points))


def weight_sum(point: FixedPoint) -> int:
    """Total rotation weight at a fixed point."""
    return point.weight_sum


def cp_weight_sum_formula(m: int, k: int) -> int:
    """Closed form m*(m+1) + k^2 for the total weight at point p_(m+k) of
    the standard action on CP^(2m), valid for -m <= k <= m."""
    if _plain_int(m, "m") < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if abs(_plain_int(k, "k")) > m:
        raise ValueError(f"offset k must satisfy |k| <= m, got k={k} with m={m}")
    return m * (m + 1) + k * k


def serialize_fixed_point_data(data: FixedPointData) -> str:
    """Render data as the JSON document format: points in input order,
    weights ascending.  Deterministic, so equal data gives equal text."""
    doc = {
        "half_dim": data.half_dim,
        "points": [
            {"label": p.label, "sign": p.sign, "weights": list(p.weights)}
            for p in data.points
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_fixed_point_data(document: str) -> FixedPointData:
    """Parse the JSON document format, validating every invariant.

    Unknown fields are ignored, so documents enriched with derived fields
    (e.g. per-point weight sums) still parse.
    """
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ValueError(f"fixed-point document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("fixed-point document must be a JSON object")
    if "half_dim" not in doc:
        raise ValueError("fixed-point document is missing 'half_dim'")
    half_dim = _plain_int(doc["half_dim"], "half_dim")
    raw_points = doc.get("points")
    if not isinstance(raw_points, list):
        raise ValueError("fixed-point document needs a 'points' array")
    points = []
    for idx, entry in enumerate(raw_points):
        if not isinstance(entry, dict):
            raise ValueError(f"points[{idx}] must be an object")
        for key in ("label", "sign", "weights"):
            if key not in entry:
                raise ValueError(f"points[{idx}] is missing {key!r}")
        label = entry["label"]
        if not isinstance(label, str):
            raise ValueError(f"points[{idx}].label must be a string, got {label!r}")
        weights = entry["weights"]
        if not isinstance(weights, list):
            raise ValueError(f"points[{idx}].weights must be an array")
        points.append(
            FixedPoint(label=label, sign=entry["sign"], weights=tuple(weights))
        )
    return FixedPointData(half_dim=half_dim, points=tuple(points))
