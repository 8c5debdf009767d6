"""
K-nearest-neighbor matching in RSSI space.
Distance: Euclidean over the anchors heard in the scan AND stored in the fingerprint.
Estimate: unweighted mean of the k nearest fingerprint positions.
"""

from dataclasses import dataclass
import numpy as np
from .. import locus_errors
from ..locus_collections import Position

DEFAULT_K = 4


@dataclass(frozen=True)
class KnnConfig:
    k: int = DEFAULT_K

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise locus_errors.ConfigInvalid("Error! k must be a positive integer, got %s" % self.k)

    def check_database(self, db):
        if self.k > db.size:
            raise locus_errors.ConfigInvalid("Error! k=%d exceeds the database size %d" % (self.k, db.size))
        return self


def common_anchors(scan, fp, anchor_set=None):
    """Anchors present in both the scan and the fingerprint, in deployment order when anchor_set is given."""
    order = anchor_set.ids() if anchor_set is not None else list(scan)
    return [anchor_id for anchor_id in order if anchor_id in scan and anchor_id in fp.stats]


def rssi_distance(scan, fp, anchor_set=None) -> float:
    """
    :param scan: ScanVector
    :param fp: Fingerprint
    :param anchor_set: AnchorSet, fixes the summation order
    :returns: float, dB
    """
    shared = common_anchors(scan, fp, anchor_set)
    if not shared:
        raise locus_errors.NoCommonAnchors("Error! Scan and fingerprint at %s share no anchor." % fp.position)
    diffs = np.array([fp.stats[anchor_id].mean - scan[anchor_id] for anchor_id in shared])
    return float(np.sqrt(np.sum(np.square(diffs))))


def rank_fingerprints(db, scan):
    """
    :returns: list of (rssi_distance, index) for every comparable fingerprint, nearest first, ties by index
    """
    ranked = []
    for index, fp in enumerate(db):
        try:
            ranked.append((rssi_distance(scan, fp, db.anchor_set), index))
        except locus_errors.NoCommonAnchors:
            continue
    ranked.sort()
    return ranked


def knn_locate(db, scan, cfg=KnnConfig()) -> Position:
    """
    :param db: FingerprintDatabase
    :param scan: ScanVector
    :param cfg: KnnConfig
    """
    ranked = rank_fingerprints(db, scan)
    if len(ranked) < cfg.k:
        raise locus_errors.InsufficientMatches("Error! Only %d fingerprints comparable with the scan; k=%d" %
                                               (len(ranked), cfg.k))
    nearest = [db.get(index).position for _, index in ranked[:cfg.k]]
    return Position(np.mean([p.x for p in nearest]), np.mean([p.y for p in nearest]))
