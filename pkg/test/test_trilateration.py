# Testing Kalman smoothing and least-squares trilateration

import unittest
import numpy as np
from rssi_locus_py.PyLocus import locus_errors
from rssi_locus_py.PyLocus.locus_collections import Anchor, AnchorSet, Position, ScanVector
from rssi_locus_py.PyLocus.pathloss_object.pathloss_model import PathLossModel, predict_rssi
from rssi_locus_py.PyLocus.scenario_object.synthesize import sample_rssi
from rssi_locus_py.PyLocus.trilateration_object.kalman import KalmanParams, kalman_smooth, smooth_scan_streams
from rssi_locus_py.PyLocus.trilateration_object.trilateration import (RangedAnchor, trilaterate,
                                                                      locate_trilateration)


def make_anchors(coords):
    return AnchorSet([Anchor("A%d" % (i + 1), Position(x, y)) for i, (x, y) in enumerate(coords)])


def exact_ranges(anchors, target):
    return [RangedAnchor(a, a.position.distance_to(target)) for a in anchors]


class Tests(unittest.TestCase):

    def test_kalman_constant_input(self):
        smoothed = kalman_smooth([-50, -50, -50, -50])
        self.assertEqual(len(smoothed), 4)
        self.assertAlmostEqual(float(smoothed[-1]), -50.0, delta=1e-9)
        errors = [abs(float(s) + 50) for s in smoothed]
        self.assertTrue(all(later <= earlier for earlier, later in zip(errors, errors[1:])))
        return

    def test_kalman_single_reading(self):
        self.assertEqual([float(v) for v in kalman_smooth([-60])], [-60.0])
        return

    def test_kalman_alternating(self):
        readings = [-50 if i % 2 == 0 else -60 for i in range(200)]
        smoothed = kalman_smooth(readings, KalmanParams(process_noise_q=0.008, measurement_noise_r=4.0))
        self.assertLess(abs(float(smoothed[-1]) + 55), 1.0)
        return

    def test_kalman_recurrence(self):
        # reference recurrence written out by hand
        q, r, p0 = 0.01, 2.0, 1.0
        readings = [-62.0, -58.0, -61.0, -57.5, -60.0]
        x, p, expected = readings[0], p0, [readings[0]]
        for z in readings[1:]:
            p = p + q
            gain = p / (p + r)
            x = x + gain * (z - x)
            p = (1 - gain) * p
            expected.append(x)
        smoothed = kalman_smooth(readings, KalmanParams(q, r, p0))
        np.testing.assert_allclose([float(v) for v in smoothed], expected, atol=1e-12)
        return

    def test_kalman_causal(self):
        rng = np.random.default_rng(5)
        readings = list(rng.uniform(-80, -40, size=30))
        full = kalman_smooth(readings)
        for k in (1, 5, 17):
            self.assertEqual([float(v) for v in kalman_smooth(readings[:k])], [float(v) for v in full[:k]])
        return

    def test_kalman_errors(self):
        with self.assertRaises(locus_errors.EmptySequence):
            kalman_smooth([])
        for bad in (dict(process_noise_q=0), dict(measurement_noise_r=-1), dict(initial_variance_p0=0)):
            with self.assertRaises(locus_errors.ConfigInvalid):
                KalmanParams(**bad)
        return

    def test_smooth_scan_streams(self):
        scan = smooth_scan_streams({"A1": [-50, -50, -50], "A2": [-70]})
        self.assertIsInstance(scan, ScanVector)
        self.assertAlmostEqual(float(scan["A1"]), -50.0)
        self.assertEqual(float(scan["A2"]), -70.0)
        return

    def test_trilaterate_exact(self):
        anchors = make_anchors([(0, 0), (4, 0), (0, 4)])
        ranges = [RangedAnchor(a, d) for a, d in zip(anchors, [np.sqrt(2), np.sqrt(10), np.sqrt(10)])]
        result = trilaterate(ranges)
        self.assertAlmostEqual(result.x, 1.0, delta=1e-9)
        self.assertAlmostEqual(result.y, 1.0, delta=1e-9)
        return

    def test_trilaterate_errors(self):
        anchors = make_anchors([(0, 0), (1, 0), (2, 0)])
        with self.assertRaises(locus_errors.DegenerateGeometry):
            trilaterate([RangedAnchor(a, 1.0) for a in anchors])
        with self.assertRaises(locus_errors.TooFewAnchors):
            trilaterate([RangedAnchor(a, 1.0) for a in list(anchors)[:2]])
        with self.assertRaises(locus_errors.NonPositiveDistance):
            RangedAnchor(list(anchors)[0], 0.0)
        return

    def test_trilaterate_perturbed(self):
        anchors = make_anchors([(0, 0), (6, 0), (0, 5.5)])
        target = Position(3, 2)
        ranges = [RangedAnchor(r.anchor, r.distance + 0.1) for r in exact_ranges(anchors, target)]
        self.assertLess(trilaterate(ranges).distance_to(target), 0.35)
        return

    def test_trilaterate_random_geometries(self):
        rng = np.random.default_rng(2024)
        tested = 0
        while tested < 1000:
            coords = rng.uniform(0, 10, size=(rng.integers(3, 6), 2))
            a, b, c = coords[0], coords[1], coords[2]
            area = 0.5 * abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]))
            if area < 1.0:
                continue
            anchors = make_anchors(coords)
            target = Position(*rng.uniform(0, 10, size=2))
            result = trilaterate(exact_ranges(anchors, target))
            self.assertLess(result.distance_to(target), 1e-9)
            tested = tested + 1
        return

    def test_trilaterate_translation_equivariant(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            anchors = make_anchors([(0, 0), (6, 0), (0, 5.5), (6, 5.5)])
            target = Position(*rng.uniform(0.5, 5, size=2))
            dx, dy = rng.uniform(-50, 50, size=2)
            base = trilaterate(exact_ranges(anchors, target))
            moved = trilaterate(exact_ranges(anchors.translated(dx, dy), target.translated(dx, dy)))
            self.assertAlmostEqual(moved.x, base.x + dx, delta=1e-9)
            self.assertAlmostEqual(moved.y, base.y + dy, delta=1e-9)
        return

    def test_locate_noiseless(self):
        anchors = make_anchors([(0, 0), (6, 0), (0, 5.5)])
        model = PathLossModel(2.935, -50.33)
        models = {a.id: model for a in anchors}
        for target in (Position(3, 2), Position(1.2, 4.1), Position(5.5, 0.3)):
            scan = ScanVector([(a.id, predict_rssi(model, a.position.distance_to(target))) for a in anchors])
            self.assertLess(locate_trilateration(scan, anchors, models).distance_to(target), 1e-6)
        return

    def test_locate_too_few_anchors(self):
        anchors = make_anchors([(0, 0), (6, 0), (0, 5.5)])
        models = {a.id: PathLossModel(2, -40) for a in anchors}
        with self.assertRaises(locus_errors.TooFewAnchors):
            locate_trilateration(ScanVector({"A1": -50, "A2": -55}), anchors, models)
        with self.assertRaises(locus_errors.TooFewAnchors):  # heard, but without a model
            locate_trilateration(ScanVector({"A1": -50, "A2": -55, "A3": -52}), anchors,
                                 {"A1": models["A1"], "A2": models["A2"]})
        return

    def test_locate_noisy_monte_carlo(self):
        anchors = make_anchors([(0, 0), (6, 0), (0, 5.5)])
        model = PathLossModel(2.271, -75.48)
        models = {a.id: model for a in anchors}
        rng = np.random.default_rng(42)
        errors = []
        for _ in range(100):
            target = Position(rng.uniform(0.5, 5.5), rng.uniform(0.5, 5.0))
            scan = ScanVector([(a.id, sample_rssi(model, a.position.distance_to(target), 3.0, rng)) for a in anchors])
            estimate = locate_trilateration(scan, anchors, models)
            self.assertTrue(np.isfinite(estimate.x) and np.isfinite(estimate.y))
            errors.append(estimate.distance_to(target))
        self.assertTrue(1.0 <= np.mean(errors) <= 6.0)
        return


if __name__ == "__main__":
    unittest.main()
