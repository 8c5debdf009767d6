"""
Naive Bayes estimation over the fingerprint database.

For each anchor heard in the scan, P(y_i | S_j) = P(S_j | y_i) P(y_i) / sum_i P(S_j | y_i) P(y_i),
with a Gaussian likelihood from the fingerprint's (mean, variance) and a uniform prior.
A fingerprint's score is the mean of its per-anchor posteriors; the estimate is the top-scoring position.
Computed in log space so that scans far from every fingerprint do not underflow.
"""

import numpy as np
from scipy import stats
from scipy.special import logsumexp
from .. import locus_errors

VARIANCE_FLOOR = 1.0  # dB^2


def anchor_posteriors(db, scan, variance_floor=VARIANCE_FLOOR):
    """
    :param db: FingerprintDatabase
    :param scan: ScanVector
    :param variance_floor: float, dB^2, lower bound on the Gaussian variance
    :returns: dict anchor_id -> {fingerprint index: posterior}; each inner dict sums to 1
    """
    log_prior = -np.log(db.size)
    posteriors = {}
    for anchor in db.anchor_set:
        if anchor.id not in scan:
            continue
        indices, means, variances = [], [], []
        for index, fp in enumerate(db):
            anchor_stats = fp.stats.get(anchor.id)
            if anchor_stats is None:
                continue
            indices.append(index)
            means.append(anchor_stats.mean)
            variances.append(max(anchor_stats.variance, variance_floor))
        if not indices:
            continue
        log_joint = stats.norm.logpdf(float(scan[anchor.id]), loc=means, scale=np.sqrt(variances)) + log_prior
        posterior = np.exp(log_joint - logsumexp(log_joint))
        posteriors[anchor.id] = dict(zip(indices, posterior.tolist()))
    return posteriors


def bayes_posteriors(db, scan, variance_floor=VARIANCE_FLOOR):
    """
    Average of per-anchor posteriors for every fingerprint sharing at least one anchor with the scan.

    :returns: dict fingerprint index -> score in [0, 1], ordered by index
    """
    per_anchor = anchor_posteriors(db, scan, variance_floor)
    collected = {}
    for anchor_id, by_index in per_anchor.items():
        for index, posterior in by_index.items():
            collected.setdefault(index, []).append(posterior)
    if not collected:
        raise locus_errors.NoCommonAnchors("Error! The scan shares no anchor with any fingerprint.")
    return {index: float(np.mean(collected[index])) for index in sorted(collected)}


def bayes_locate(db, scan, variance_floor=VARIANCE_FLOOR):
    """Position of the highest-scoring fingerprint; ties go to the lowest index."""
    scores = bayes_posteriors(db, scan, variance_floor)
    best_index, best_score = None, -np.inf
    for index, score in scores.items():
        if score > best_score:
            best_index, best_score = index, score
    return db.get(best_index).position
