# Definitions of objects shared by every part of this project

from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType
import numpy as np
from . import locus_errors

RSSI_MIN, RSSI_MAX = -120.0, 0.0  # dBm, validity range of any reading


class Rssi(float):
    """
    A received signal strength reading in dBm. Behaves as a float.
    Rejects NaN, +/- infinity, and values outside [-120, 0] dBm.
    """
    def __new__(cls, value, line_no=None):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise locus_errors.InvalidRssi("Error! RSSI value %r is not a number" % (value,), line_no)
        if not np.isfinite(value):
            raise locus_errors.InvalidRssi("Error! RSSI value %s is not finite" % value, line_no)
        if value < RSSI_MIN or value > RSSI_MAX:
            raise locus_errors.InvalidRssi("Error! RSSI value %s dBm outside [%.0f, %.0f] dBm" %
                                           (value, RSSI_MIN, RSSI_MAX), line_no)
        return super().__new__(cls, value)

    def __repr__(self):
        return "Rssi(%s)" % float.__repr__(self)


def validate_anchor_id(anchor_id):
    if not isinstance(anchor_id, str) or anchor_id.strip() == "":
        raise locus_errors.InvalidAnchorId("Error! Anchor id must be a non-empty string, got %r" % (anchor_id,))
    return anchor_id


@dataclass(frozen=True)
class Position:
    """A 2D point in meters."""
    x: float  # meters
    y: float  # meters

    def __post_init__(self):
        object.__setattr__(self, 'x', float(self.x))
        object.__setattr__(self, 'y', float(self.y))
        if not (np.isfinite(self.x) and np.isfinite(self.y)):
            raise locus_errors.InvalidPosition("Error! Position (%s, %s) is not finite" % (self.x, self.y))

    def distance_to(self, other) -> float:
        return float(np.hypot(self.x - other.x, self.y - other.y))

    def translated(self, dx, dy):
        return Position(self.x + dx, self.y + dy)

    def __str__(self):
        return "(%f, %f)" % (self.x, self.y)


@dataclass(frozen=True)
class Anchor:
    """A transmitter at a known fixed position."""
    id: str
    position: Position

    def __post_init__(self):
        validate_anchor_id(self.id)


class AnchorSet:
    """
    Ordered collection of anchors with distinct ids. Iteration order is insertion order.
    """
    def __init__(self, anchors):
        anchors = tuple(anchors)
        if len(anchors) == 0:
            raise locus_errors.TooFewAnchors("Error! An AnchorSet needs at least one anchor.")
        by_id = {}
        for anchor in anchors:
            if anchor.id in by_id:
                raise locus_errors.DuplicateAnchor("Error! Anchor id %s appears twice." % anchor.id)
            by_id[anchor.id] = anchor
        self._anchors = anchors
        self._by_id = MappingProxyType(by_id)

    def __iter__(self):
        return iter(self._anchors)

    def __len__(self):
        return len(self._anchors)

    def __contains__(self, anchor_id):
        return anchor_id in self._by_id

    def __eq__(self, other):
        return isinstance(other, AnchorSet) and self._anchors == other._anchors

    def __hash__(self):
        return hash(self._anchors)

    def __repr__(self):
        return "AnchorSet(%s)" % ", ".join(a.id for a in self._anchors)

    def get(self, anchor_id) -> Anchor:
        if anchor_id not in self._by_id:
            raise locus_errors.UnknownAnchor("Error! Anchor %s is not part of this deployment." % anchor_id)
        return self._by_id[anchor_id]

    def ids(self):
        return [a.id for a in self._anchors]

    def translated(self, dx, dy):
        return AnchorSet([Anchor(a.id, a.position.translated(dx, dy)) for a in self._anchors])


class ScanVector(Mapping):
    """
    Averaged RSSI readings for one location: AnchorId -> Rssi.
    Anchors absent from the map were not heard. Built from a mapping or from (anchor_id, rssi) pairs;
    a repeated anchor id in the pairs is rejected.
    """
    def __init__(self, readings=()):
        items = readings.items() if isinstance(readings, Mapping) else readings
        values = {}
        for anchor_id, rssi in items:
            validate_anchor_id(anchor_id)
            if anchor_id in values:
                raise locus_errors.DuplicateAnchor("Error! Anchor %s appears twice in one scan." % anchor_id)
            values[anchor_id] = rssi if isinstance(rssi, Rssi) else Rssi(rssi)
        self._values = MappingProxyType(values)

    def __getitem__(self, anchor_id):
        return self._values[anchor_id]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __hash__(self):
        return hash(frozenset(self._values.items()))

    def __repr__(self):
        return "ScanVector({%s})" % ", ".join("%s: %s" % (k, float(v)) for k, v in self._values.items())

    def check_within(self, anchor_set):
        """Raise if the scan mentions an anchor outside the deployment."""
        for anchor_id in self._values:
            anchor_set.get(anchor_id)
        return self

    def shifted(self, anchor_id, offset_db):
        """Return a new scan with one anchor's reading offset by offset_db."""
        values = dict(self._values)
        values[anchor_id] = Rssi(values[anchor_id] + offset_db)
        return ScanVector(values)


@dataclass(frozen=True)
class LabeledScan:
    """A scan taken at a known ground-truth position."""
    position: Position
    scan: ScanVector
