"""
Model-based localization: RSSI -> distance through the path-loss model,
then the linearized circle-intersection system solved by least squares.
"""

from dataclasses import dataclass
import numpy as np
import scipy.linalg
from .. import locus_errors
from ..locus_collections import Anchor, Position
from ..pathloss_object import pathloss_model

DEGENERATE_DET = 1e-10  # determinant threshold on the normal matrix


@dataclass(frozen=True)
class RangedAnchor:
    anchor: Anchor
    distance: float  # meters, > 0

    def __post_init__(self):
        if not np.isfinite(self.distance) or self.distance <= 0:
            raise locus_errors.NonPositiveDistance("Error! Range to anchor %s must be > 0 m, got %s" %
                                                   (self.anchor.id, self.distance))


def build_linear_system(ranges):
    """
    Subtract the first anchor's circle equation from every other one.
    Row i: 2(x_i - x_0) x + 2(y_i - y_0) y = d_0^2 - d_i^2 + x_i^2 - x_0^2 + y_i^2 - y_0^2

    :returns: A (N-1 x 2), b (N-1)
    """
    x0, y0 = ranges[0].anchor.position.x, ranges[0].anchor.position.y
    d0 = ranges[0].distance
    A, b = [], []
    for item in ranges[1:]:
        xi, yi, di = item.anchor.position.x, item.anchor.position.y, item.distance
        A.append([2 * (xi - x0), 2 * (yi - y0)])
        b.append(d0**2 - di**2 + xi**2 - x0**2 + yi**2 - y0**2)
    return np.array(A), np.array(b)


def trilaterate(ranges) -> Position:
    """
    :param ranges: list of RangedAnchor, at least 3, not all collinear. The first one is the linearization reference.
    :returns: Position, the least-squares solution
    """
    if len(ranges) < 3:
        raise locus_errors.TooFewAnchors("Error! Trilateration needs at least 3 ranged anchors, got %d." %
                                         len(ranges))
    A, b = build_linear_system(ranges)
    if abs(np.linalg.det(A.T @ A)) < DEGENERATE_DET:
        raise locus_errors.DegenerateGeometry("Error! Anchors %s are collinear." %
                                              ", ".join(r.anchor.id for r in ranges))
    solution, _, _, _ = scipy.linalg.lstsq(A, b)
    return Position(solution[0], solution[1])


def locate_trilateration(scan, anchors, models) -> Position:
    """
    Convert every heard anchor's RSSI to a distance and trilaterate over the heard subset.
    Anchors are used in AnchorSet order.

    :param scan: ScanVector
    :param anchors: AnchorSet
    :param models: dict of anchor_id -> PathLossModel
    """
    ranges = []
    for anchor in anchors:
        if anchor.id in scan and anchor.id in models:
            distance = pathloss_model.invert_distance(models[anchor.id], scan[anchor.id])
            ranges.append(RangedAnchor(anchor=anchor, distance=distance))
    if len(ranges) < 3:
        raise locus_errors.TooFewAnchors("Error! Only %d heard anchors have a position and a path-loss model." %
                                         len(ranges))
    return trilaterate(ranges)
