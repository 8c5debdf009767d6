"""
The fingerprint database: surveyed reference points with per-anchor RSSI statistics.
Fingerprints keep insertion order; that order breaks every tie downstream.
"""

from dataclasses import dataclass
from types import MappingProxyType
import numpy as np
from .. import locus_errors


@dataclass(frozen=True)
class AnchorStats:
    mean: float  # dBm
    variance: float  # dB^2, population variance of the survey readings
    sample_count: int

    def __post_init__(self):
        if not np.isfinite(self.mean) or not np.isfinite(self.variance) or self.variance < 0:
            raise locus_errors.DomainError("Error! Bad anchor statistics: mean %s, variance %s" %
                                           (self.mean, self.variance))
        if int(self.sample_count) != self.sample_count or self.sample_count < 1:
            raise locus_errors.DomainError("Error! Sample count must be a positive integer, got %s" %
                                           self.sample_count)


class Fingerprint:
    """
    A reference point: position plus per-anchor statistics (anchor_id -> AnchorStats).
    """
    def __init__(self, position, stats):
        if len(stats) == 0:
            raise locus_errors.EmptySurvey("Error! Fingerprint at %s has no anchor entries." % position)
        self.position = position
        self.stats = MappingProxyType(dict(stats))

    def __eq__(self, other):
        return (isinstance(other, Fingerprint) and self.position == other.position and
                dict(self.stats) == dict(other.stats))

    def __repr__(self):
        return "Fingerprint(%s, anchors=%s)" % (self.position, ",".join(self.stats))

    def means(self):
        return {anchor_id: s.mean for anchor_id, s in self.stats.items()}


class FingerprintDatabase:
    def __init__(self, anchor_set, fingerprints):
        fingerprints = tuple(fingerprints)
        if len(fingerprints) == 0:
            raise locus_errors.EmptySurvey("Error! A fingerprint database needs at least one fingerprint.")
        seen = set()
        for fp in fingerprints:
            if fp.position in seen:
                raise locus_errors.DuplicatePosition("Error! Two fingerprints at position %s" % fp.position)
            seen.add(fp.position)
            for anchor_id in fp.stats:
                anchor_set.get(anchor_id)
        self.anchor_set = anchor_set
        self.fingerprints = fingerprints

    def __len__(self):
        return len(self.fingerprints)

    def __iter__(self):
        return iter(self.fingerprints)

    def __eq__(self, other):
        return (isinstance(other, FingerprintDatabase) and self.anchor_set == other.anchor_set and
                self.fingerprints == other.fingerprints)

    @property
    def size(self):
        return len(self.fingerprints)

    def get(self, index) -> Fingerprint:
        return self.fingerprints[index]

    def positions(self):
        return [fp.position for fp in self.fingerprints]

    def print_summary(self):
        print("Fingerprint database: %d fingerprints, %d anchors (%s)" %
              (self.size, len(self.anchor_set), ", ".join(self.anchor_set.ids())))
        return


def compute_anchor_stats(readings) -> AnchorStats:
    values = np.array([float(r) for r in readings])
    return AnchorStats(mean=float(np.mean(values)), variance=float(np.var(values)), sample_count=len(values))


def build_database(anchor_set, surveys) -> FingerprintDatabase:
    """
    Per position and anchor: mean and population variance over every reading of that anchor in the survey's scans.
    Anchors never heard at a position are absent from its fingerprint.

    :param anchor_set: AnchorSet
    :param surveys: list of (Position, list of ScanVector)
    """
    fingerprints, seen = [], set()
    for position, scans in surveys:
        if len(scans) == 0:
            raise locus_errors.EmptySurvey("Error! Survey at %s has no scans." % position)
        if position in seen:
            raise locus_errors.DuplicatePosition("Error! Position %s surveyed twice." % position)
        seen.add(position)
        readings = {}
        for scan in scans:
            for anchor_id, rssi in scan.items():
                anchor_set.get(anchor_id)
                readings.setdefault(anchor_id, []).append(rssi)
        stats = {a.id: compute_anchor_stats(readings[a.id]) for a in anchor_set if a.id in readings}
        fingerprints.append(Fingerprint(position, stats))
    return FingerprintDatabase(anchor_set, fingerprints)
