"""
Brute-force reference implementations of the fingerprint estimators.
Plain Python loops and decimal arithmetic only; nothing here calls the fingerprint_object code,
so agreement between the two is evidence for both.
"""

import math
from decimal import Decimal, localcontext
from .. import locus_errors
from ..locus_collections import Position

ORACLE_PRECISION = 60  # decimal digits


def oracle_knn(db, scan, k) -> Position:
    """Sort every comparable fingerprint by RSSI distance (ties by index) and average the first k positions."""
    candidates = []
    for index in range(len(db.fingerprints)):
        fp = db.fingerprints[index]
        total, shared = 0.0, 0
        for anchor in db.anchor_set:
            if anchor.id in scan and anchor.id in fp.stats:
                diff = fp.stats[anchor.id].mean - float(scan[anchor.id])
                total = total + diff * diff
                shared = shared + 1
        if shared > 0:
            candidates.append((math.sqrt(total), index))
    candidates = sorted(candidates)
    if len(candidates) < k:
        raise locus_errors.InsufficientMatches("Error! Only %d comparable fingerprints for k=%d" %
                                               (len(candidates), k))
    xs = [db.fingerprints[index].position.x for _, index in candidates[:k]]
    ys = [db.fingerprints[index].position.y for _, index in candidates[:k]]
    return Position(sum(xs) / k, sum(ys) / k)


def _gaussian_density(value, mean, variance):
    value, mean, variance = Decimal(value), Decimal(mean), Decimal(variance)
    two_pi = 2 * Decimal(math.pi)
    exponent = -((value - mean) ** 2) / (2 * variance)
    return exponent.exp() / (two_pi * variance).sqrt()


def oracle_bayes(db, scan, variance_floor=1.0):
    """
    Per scanned anchor: Gaussian likelihood times a uniform prior, normalized over the fingerprints holding
    that anchor. Each fingerprint's score is the average of its per-anchor posteriors.

    :returns: dict fingerprint index -> score (float)
    """
    with localcontext() as ctx:
        ctx.prec = ORACLE_PRECISION
        prior = Decimal(1) / Decimal(len(db.fingerprints))
        collected = {}
        for anchor in db.anchor_set:
            if anchor.id not in scan:
                continue
            joint = {}
            for index in range(len(db.fingerprints)):
                stats = db.fingerprints[index].stats.get(anchor.id)
                if stats is None:
                    continue
                variance = stats.variance if stats.variance > variance_floor else variance_floor
                joint[index] = _gaussian_density(float(scan[anchor.id]), stats.mean, variance) * prior
            evidence = sum(joint.values(), Decimal(0))
            for index in joint:
                collected.setdefault(index, []).append(joint[index] / evidence)
        if not collected:
            raise locus_errors.NoCommonAnchors("Error! The scan shares no anchor with any fingerprint.")
        return {index: float(sum(collected[index], Decimal(0)) / len(collected[index]))
                for index in sorted(collected)}
