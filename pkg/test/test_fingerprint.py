# Testing the fingerprint database, KNN, and Naive Bayes

import os
import tempfile
import unittest
import numpy as np
from scipy.spatial import ConvexHull
from rssi_locus_py.PyLocus import locus_errors
from rssi_locus_py.PyLocus.locus_collections import Anchor, AnchorSet, Position, ScanVector
from rssi_locus_py.PyLocus.fingerprint_object import fingerprint_db, knn, naive_bayes, io_database
from rssi_locus_py.PyLocus.fingerprint_object.fingerprint_db import AnchorStats, Fingerprint, FingerprintDatabase

ANCHORS = AnchorSet([Anchor("A", Position(0, 0)), Anchor("B", Position(5, 0)), Anchor("C", Position(0, 5))])


def make_fingerprint(x, y, means, variance=4.0):
    return Fingerprint(Position(x, y), {a: AnchorStats(m, variance, 100) for a, m in means.items()})


def square_database():
    """Four corners of a unit square, each with distinct mean readings."""
    fps = [make_fingerprint(0, 0, {"A": -50, "B": -60}), make_fingerprint(1, 0, {"A": -52, "B": -58}),
           make_fingerprint(0, 1, {"A": -48, "B": -62}), make_fingerprint(1, 1, {"A": -50, "B": -56})]
    return FingerprintDatabase(ANCHORS, fps)


class Tests(unittest.TestCase):

    def test_build_database(self):
        db = fingerprint_db.build_database(ANCHORS, [(Position(1, 1), [ScanVector({"A": -50}),
                                                                      ScanVector({"A": -52})])])
        stats = db.get(0).stats["A"]
        self.assertEqual((stats.mean, stats.variance, stats.sample_count), (-51.0, 1.0, 2))
        self.assertNotIn("B", db.get(0).stats)  # never heard at this position
        return

    def test_build_database_counts(self):
        rng = np.random.default_rng(1)
        scans = [ScanVector({"A": -50 + rng.normal(), "B": -60 + rng.normal()}) for _ in range(100)]
        db = fingerprint_db.build_database(ANCHORS, [(Position(0, 0), scans), (Position(1, 0), scans[:40])])
        self.assertEqual(db.size, 2)
        self.assertEqual(db.get(0).stats["A"].sample_count, 100)
        self.assertEqual(db.get(1).stats["B"].sample_count, 40)
        self.assertAlmostEqual(db.get(0).stats["B"].variance, np.var([float(s["B"]) for s in scans]))
        self.assertEqual(list(db.get(0).stats), ["A", "B"])
        return

    def test_build_database_errors(self):
        with self.assertRaises(locus_errors.EmptySurvey):
            fingerprint_db.build_database(ANCHORS, [(Position(0, 0), [])])
        with self.assertRaises(locus_errors.DuplicatePosition):
            fingerprint_db.build_database(ANCHORS, [(Position(0, 0), [ScanVector({"A": -50})]),
                                                    (Position(0, 0), [ScanVector({"A": -51})])])
        with self.assertRaises(locus_errors.UnknownAnchor):
            fingerprint_db.build_database(ANCHORS, [(Position(0, 0), [ScanVector({"Z": -50})])])
        with self.assertRaises(locus_errors.EmptySurvey):
            FingerprintDatabase(ANCHORS, [])
        with self.assertRaises(locus_errors.DomainError):
            AnchorStats(-50, -1.0, 3)
        return

    def test_rssi_distance(self):
        fp = make_fingerprint(0, 0, {"A": -53, "B": -56})
        self.assertAlmostEqual(knn.rssi_distance(ScanVector({"A": -50, "B": -60}), fp, ANCHORS), 5.0)
        self.assertEqual(knn.rssi_distance(ScanVector({"A": -53, "B": -56}), fp, ANCHORS), 0.0)
        with self.assertRaises(locus_errors.NoCommonAnchors):
            knn.rssi_distance(ScanVector({"A": -50}), make_fingerprint(0, 0, {"B": -60}), ANCHORS)
        # anchors missing on either side are skipped
        self.assertAlmostEqual(knn.rssi_distance(ScanVector({"A": -50, "C": -70}), fp, ANCHORS), 3.0)
        return

    def test_knn_exact_match(self):
        db = square_database()
        for fp in db:
            self.assertEqual(knn.knn_locate(db, ScanVector(fp.means()), knn.KnnConfig(1)), fp.position)
        return

    def test_knn_centroid(self):
        db = FingerprintDatabase(ANCHORS, [make_fingerprint(0, 0, {"A": -48}), make_fingerprint(1, 0, {"A": -52}),
                                           make_fingerprint(0, 1, {"A": -52}), make_fingerprint(1, 1, {"A": -48})])
        result = knn.knn_locate(db, ScanVector({"A": -50}), knn.KnnConfig(4))
        self.assertAlmostEqual(result.x, 0.5)
        self.assertAlmostEqual(result.y, 0.5)
        return

    def test_knn_ties_go_to_lowest_index(self):
        db = FingerprintDatabase(ANCHORS, [make_fingerprint(3, 3, {"A": -48}), make_fingerprint(1, 0, {"A": -52}),
                                           make_fingerprint(2, 2, {"A": -48})])
        self.assertEqual(knn.knn_locate(db, ScanVector({"A": -50}), knn.KnnConfig(1)), Position(3, 3))
        result = knn.knn_locate(db, ScanVector({"A": -50}), knn.KnnConfig(2))
        self.assertEqual((result.x, result.y), (2.0, 1.5))
        return

    def test_knn_inside_convex_hull(self):
        rng = np.random.default_rng(14)
        fps = [make_fingerprint(x, y, {"A": rng.uniform(-80, -40), "B": rng.uniform(-80, -40)})
               for x, y in rng.uniform(0, 6, size=(25, 2))]
        db = FingerprintDatabase(ANCHORS, fps)
        hull = ConvexHull(np.array([[p.x, p.y] for p in db.positions()]))
        for _ in range(200):
            scan = ScanVector({"A": rng.uniform(-90, -30), "B": rng.uniform(-90, -30)})
            estimate = knn.knn_locate(db, scan, knn.KnnConfig(int(rng.integers(1, 8))))
            margins = hull.equations[:, :2] @ np.array([estimate.x, estimate.y]) + hull.equations[:, 2]
            self.assertTrue(np.all(margins <= 1e-9))
        return

    def test_knn_errors(self):
        db = FingerprintDatabase(ANCHORS, [make_fingerprint(0, 0, {"A": -50}), make_fingerprint(1, 0, {"A": -52}),
                                           make_fingerprint(2, 0, {"B": -52})])
        with self.assertRaises(locus_errors.InsufficientMatches):
            knn.knn_locate(db, ScanVector({"A": -50}), knn.KnnConfig(3))
        with self.assertRaises(locus_errors.ConfigInvalid):
            knn.KnnConfig(0)
        with self.assertRaises(locus_errors.ConfigInvalid):
            knn.KnnConfig(4).check_database(db)
        self.assertEqual(knn.KnnConfig().k, 4)
        return

    def test_bayes_normalization(self):
        db = square_database()
        scan = ScanVector({"A": -49.3, "B": -58.7, "C": -70})
        per_anchor = naive_bayes.anchor_posteriors(db, scan)
        self.assertEqual(sorted(per_anchor), ["A", "B"])  # C is stored in no fingerprint
        for posteriors in per_anchor.values():
            self.assertAlmostEqual(sum(posteriors.values()), 1.0, delta=1e-9)
        scores = naive_bayes.bayes_posteriors(db, scan)
        self.assertEqual(list(scores), [0, 1, 2, 3])
        self.assertTrue(all(0 <= s <= 1 for s in scores.values()))
        return

    def test_bayes_locate(self):
        db = square_database()
        for fp in db:
            self.assertEqual(naive_bayes.bayes_locate(db, ScanVector(fp.means())), fp.position)
        with self.assertRaises(locus_errors.NoCommonAnchors):
            naive_bayes.bayes_posteriors(db, ScanVector({"C": -60}))
        return

    def test_bayes_far_scan_and_zero_variance(self):
        fps = [make_fingerprint(0, 0, {"A": -40}, variance=0.0), make_fingerprint(1, 0, {"A": -45}, variance=0.0)]
        db = FingerprintDatabase(ANCHORS, fps)
        scores = naive_bayes.bayes_posteriors(db, ScanVector({"A": -119}))
        self.assertTrue(all(np.isfinite(s) for s in scores.values()))
        self.assertAlmostEqual(sum(scores.values()), 1.0, delta=1e-9)
        self.assertEqual(naive_bayes.bayes_locate(db, ScanVector({"A": -119})), Position(1, 0))
        return

    def test_bayes_ties_go_to_lowest_index(self):
        db = FingerprintDatabase(ANCHORS, [make_fingerprint(5, 5, {"A": -48}), make_fingerprint(1, 1, {"A": -52})])
        self.assertEqual(naive_bayes.bayes_locate(db, ScanVector({"A": -50})), Position(5, 5))
        return

    def test_bayes_symmetric_pair(self):
        db = FingerprintDatabase(ANCHORS, [make_fingerprint(0, 0, {"A": -48}), make_fingerprint(1, 0, {"A": -52})])
        scores = naive_bayes.bayes_posteriors(db, ScanVector({"A": -50}))
        self.assertAlmostEqual(scores[0], 0.5, delta=1e-9)
        self.assertAlmostEqual(scores[1], 0.5, delta=1e-9)
        return

    def test_insertion_order_matters_only_on_ties(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            fps = [make_fingerprint(i % 5, i // 5, {"A": rng.uniform(-90, -40), "B": rng.uniform(-90, -40),
                                                     "C": rng.uniform(-90, -40)}, variance=rng.uniform(0.5, 9))
                   for i in range(15)]
            shuffled = [fps[i] for i in rng.permutation(len(fps))]
            db, db_shuffled = FingerprintDatabase(ANCHORS, fps), FingerprintDatabase(ANCHORS, shuffled)
            scan = ScanVector({"A": rng.uniform(-90, -40), "B": rng.uniform(-90, -40), "C": rng.uniform(-90, -40)})
            cfg = knn.KnnConfig(int(rng.integers(1, 6)))
            first, second = knn.knn_locate(db, scan, cfg), knn.knn_locate(db_shuffled, scan, cfg)
            self.assertAlmostEqual(first.x, second.x, delta=1e-12)
            self.assertAlmostEqual(first.y, second.y, delta=1e-12)
            self.assertEqual(naive_bayes.bayes_locate(db, scan), naive_bayes.bayes_locate(db_shuffled, scan))
        # with an exact tie the first inserted fingerprint wins
        twins = [make_fingerprint(0, 0, {"A": -50}), make_fingerprint(3, 3, {"A": -50})]
        scan = ScanVector({"A": -55})
        for order in (twins, twins[::-1]):
            db = FingerprintDatabase(ANCHORS, order)
            self.assertEqual(knn.knn_locate(db, scan, knn.KnnConfig(1)), order[0].position)
            self.assertEqual(naive_bayes.bayes_locate(db, scan), order[0].position)
        return

    def test_anchor_offset_leaves_selection_unchanged(self):
        db = square_database()
        offset = -5.0
        moved = FingerprintDatabase(ANCHORS, [
            Fingerprint(fp.position, {a: AnchorStats(s.mean + offset if a == "A" else s.mean, s.variance,
                                                     s.sample_count) for a, s in fp.stats.items()}) for fp in db])
        scan = ScanVector({"A": -49.1, "B": -58.3})
        moved_scan = scan.shifted("A", offset)
        for fp, moved_fp in zip(db, moved):
            self.assertAlmostEqual(knn.rssi_distance(scan, fp, ANCHORS),
                                   knn.rssi_distance(moved_scan, moved_fp, ANCHORS), places=9)
        for k in range(1, 5):
            self.assertEqual(knn.knn_locate(db, scan, knn.KnnConfig(k)),
                             knn.knn_locate(moved, moved_scan, knn.KnnConfig(k)))
        return

    def test_database_round_trip(self):
        rng = np.random.default_rng(12)
        surveys = [(Position(x * 0.1, 1 / 3), [ScanVector({"A": -50 + rng.normal(0, 2), "C": -70 + rng.normal()})
                                               for _ in range(10)]) for x in range(7)]
        db = fingerprint_db.build_database(ANCHORS, surveys)
        with tempfile.TemporaryDirectory() as tmpdir:
            first = os.path.join(tmpdir, "db1.txt")
            second = os.path.join(tmpdir, "db2.txt")
            io_database.write_database(db, first)
            loaded = io_database.read_database(first, ANCHORS)
            io_database.write_database(loaded, second)
            with open(first) as f1, open(second) as f2:
                self.assertEqual(f1.read(), f2.read())
        self.assertEqual(loaded, db)
        return

    def test_database_format_errors(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            filename = os.path.join(tmpdir, "db.txt")
            with open(filename, 'w') as ofile:
                ofile.write("some-other-format\n0,0,A:-50:1:2\n")
            with self.assertRaises(locus_errors.DatabaseFormatError):
                io_database.read_database(filename, ANCHORS)
            with open(filename, 'w') as ofile:
                ofile.write("rssi-locus-db v1\n0,0,A:-50:1:2\n1,0,A:-50:1\n")
            with self.assertRaises(locus_errors.DatabaseFormatError) as cm:
                io_database.read_database(filename, ANCHORS)
            self.assertEqual(cm.exception.line_no, 3)
            with open(filename, 'w') as ofile:
                ofile.write("rssi-locus-db v1\n0,0,A:-50:-1:2\n")
            with self.assertRaises(locus_errors.DatabaseFormatError):
                io_database.read_database(filename, ANCHORS)
        return


if __name__ == "__main__":
    unittest.main()
