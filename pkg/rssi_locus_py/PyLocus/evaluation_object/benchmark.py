"""
Benchmark runner: every technique on every labeled test scan, then per-technique error statistics.
A technique that fails on a test records an exclusion instead of an error sample.
"""

from dataclasses import dataclass, field
from enum import Enum
import numpy as np
from .. import locus_errors
from ..fingerprint_object import knn, naive_bayes
from ..trilateration_object import trilateration
from .compute_errors import localization_error, summarize, empirical_cdf


class TechniqueTag(Enum):
    TRILATERATION = "Trilateration"
    KNN = "KNN"
    NAIVE_BAYES = "NaiveBayes"


@dataclass(frozen=True)
class ErrorSample:
    technique: TechniqueTag
    error: float  # meters
    test_index: int

    def __post_init__(self):
        if not np.isfinite(self.error) or self.error < 0:
            raise locus_errors.DomainError("Error! Localization error must be finite and >= 0, got %s" % self.error)


@dataclass(frozen=True)
class Exclusion:
    technique: TechniqueTag
    test_index: int
    error_type: str  # exception class name, e.g. DegenerateGeometry


@dataclass
class EvaluationReport:
    samples: list  # ErrorSample, ordered by technique then test_index
    exclusions: list  # Exclusion
    scenario_name: str = ""
    technology: str = ""
    database_size: int = 0
    anchor_count: int = 0
    test_count: int = 0
    metadata: dict = field(default_factory=dict)

    def errors(self, technique):
        return [s.error for s in self.samples if s.technique == technique]

    def n_excluded(self, technique):
        return len([e for e in self.exclusions if e.technique == technique])

    def summary(self, technique):
        """(mean error, population variance) for one technique"""
        return summarize(self.errors(technique))

    def cdf(self, technique):
        return empirical_cdf(self.errors(technique))

    def techniques_without_estimates(self):
        return [t for t in TechniqueTag if len(self.errors(t)) == 0]

    def print_summary(self):
        print("Evaluation of %s (%s): %d tests, %d fingerprints, %d anchors" %
              (self.scenario_name or "unnamed scenario", self.technology or "no technology label", self.test_count,
               self.database_size, self.anchor_count))
        print("  %-14s %12s %12s %8s %8s %9s" % ("technique", "mean err (m)", "var (m^2)", "p50", "p95",
                                                 "excluded"))
        for technique in TechniqueTag:
            if len(self.errors(technique)) == 0:
                print("  %-14s %12s %12s %8s %8s %9d" % (technique.value, "--", "--", "--", "--",
                                                         self.n_excluded(technique)))
                continue
            mean, variance = self.summary(technique)
            cdf = self.cdf(technique)
            print("  %-14s %12.4f %12.4f %8.3f %8.3f %9d" % (technique.value, mean, variance, cdf.quantile(0.5),
                                                             cdf.quantile(0.95), self.n_excluded(technique)))
        return


def _estimate(technique, db, anchors, models, scan, cfg, variance_floor):
    if technique == TechniqueTag.TRILATERATION:
        return trilateration.locate_trilateration(scan, anchors, models)
    if technique == TechniqueTag.KNN:
        return knn.knn_locate(db, scan, cfg)
    return naive_bayes.bayes_locate(db, scan, variance_floor)


def run_benchmark(db, anchors, models, tests, cfg=knn.KnnConfig(), trilat_scans=None, scenario_name="",
                  technology="", variance_floor=naive_bayes.VARIANCE_FLOOR) -> EvaluationReport:
    """
    :param db: FingerprintDatabase
    :param anchors: AnchorSet
    :param models: dict of anchor_id -> PathLossModel
    :param tests: list of LabeledScan
    :param cfg: KnnConfig
    :param trilat_scans: optional list of ScanVector aligned with tests (e.g. Kalman-reduced) for trilateration
    :returns: EvaluationReport
    """
    if len(tests) == 0:
        raise locus_errors.EmptyTestSet("Error! The benchmark needs at least one labeled test scan.")
    if trilat_scans is not None and len(trilat_scans) != len(tests):
        raise locus_errors.ConfigInvalid("Error! %d trilateration scans for %d tests" % (len(trilat_scans),
                                                                                         len(tests)))
    cfg.check_database(db)
    samples, exclusions = [], []
    for technique in TechniqueTag:
        for test_index, test in enumerate(tests):
            scan = test.scan
            if technique == TechniqueTag.TRILATERATION and trilat_scans is not None:
                scan = trilat_scans[test_index]
            try:
                estimate = _estimate(technique, db, anchors, models, scan, cfg, variance_floor)
            except locus_errors.DomainError as e:
                exclusions.append(Exclusion(technique, test_index, type(e).__name__))
                continue
            samples.append(ErrorSample(technique, localization_error(estimate, test.position), test_index))
    return EvaluationReport(samples=samples, exclusions=exclusions, scenario_name=scenario_name,
                            technology=technology, database_size=db.size, anchor_count=len(anchors),
                            test_count=len(tests))


def sweep_k(db, tests, k_values):
    """
    KNN error statistics for several k, the experiment used to pick k.

    :returns: dict k -> (mean error, variance); k values with no successful estimate are left out
    """
    results = {}
    for k in k_values:
        cfg = knn.KnnConfig(k).check_database(db)
        errors = []
        for test in tests:
            try:
                errors.append(localization_error(knn.knn_locate(db, test.scan, cfg), test.position))
            except locus_errors.DomainError:
                continue
        if errors:
            results[k] = summarize(errors)
    return results


def average_summaries(reports):
    """
    Average the per-technique summaries of several reports (technologies within a scenario, or scenarios overall).

    :returns: dict TechniqueTag -> (mean of mean errors, mean of variances)
    """
    if len(reports) == 0:
        raise locus_errors.EmptyList("Error! No reports to average.")
    averaged = {}
    for technique in TechniqueTag:
        summaries = [r.summary(technique) for r in reports if len(r.errors(technique)) > 0]
        if summaries:
            averaged[technique] = (float(np.mean([s[0] for s in summaries])),
                                   float(np.mean([s[1] for s in summaries])))
    return averaged


def group_by_technology(reports):
    """dict technology label -> list of reports, labels in order of first appearance"""
    grouped = {}
    for report in reports:
        grouped.setdefault(report.technology, []).append(report)
    return grouped
