# Testing scan-log parsing, moving averages, and aggregation into scans

import os
import tempfile
import unittest
import numpy as np
import pandas as pd
from rssi_locus_py.PyLocus import locus_errors
from rssi_locus_py.PyLocus.locus_collections import Anchor, AnchorSet, Position
from rssi_locus_py.PyLocus.ingest_object import io_scan_log, preprocessing, io_anchors
from rssi_locus_py.PyLocus.ingest_object.io_scan_log import RawScanRecord, SCAN_LOG_COLUMNS

fixture_dir = os.path.dirname(os.path.abspath(__file__))
HEADER = ",".join(SCAN_LOG_COLUMNS)


def read_fixture_log():
    return io_scan_log.read_scan_log(os.path.join(fixture_dir, "example_scan_log.csv"))


class Tests(unittest.TestCase):

    def test_parse_rows(self):
        lines = [HEADER, "0,A1,-50,1.0,2.0,BLE", "0,A2,-61.5,1.0,2.0,", "", "1,A1,-49,,,"]
        records = io_scan_log.parse_scan_log(lines)
        self.assertEqual(len(records), 3)
        self.assertEqual(records[0], RawScanRecord(0, "A1", -50.0, Position(1, 2), "BLE"))
        self.assertIsNone(records[1].technology)
        self.assertIsNone(records[2].position)
        return

    def test_parse_errors_name_line(self):
        with self.assertRaises(locus_errors.InvalidRssi) as cm:
            io_scan_log.parse_scan_log([HEADER, "0,A1,-50,,,", "1,A1,+10,,,"])
        self.assertEqual(cm.exception.line_no, 3)
        with self.assertRaises(locus_errors.UnknownColumns) as cm:
            io_scan_log.parse_scan_log(["seq,beacon,rssi", "0,A1,-50"])
        self.assertEqual(cm.exception.line_no, 1)
        for bad_row in ("0,A1,-50,,", "x,A1,-50,,,", "0,,-50,,,", "0,A1,-50,1.0,,", "0,A1,-50,one,2,"):
            with self.assertRaises(locus_errors.MalformedRow) as cm:
                io_scan_log.parse_scan_log([HEADER, bad_row])
            self.assertEqual(cm.exception.line_no, 2)
        with self.assertRaises(locus_errors.MalformedRow):
            io_scan_log.parse_scan_log([])
        return

    def test_scan_log_round_trip(self):
        rng = np.random.default_rng(6)
        records = [RawScanRecord(i, "A%d" % (i % 3), rng.uniform(-90, -30), Position(i * 0.1, 1 / 3), "WiFi")
                   for i in range(30)] + [RawScanRecord(30, "A0", -70.25)]
        with tempfile.TemporaryDirectory() as tmpdir:
            filename = os.path.join(tmpdir, "scans.csv")
            io_scan_log.write_scan_log(records, filename)
            self.assertEqual(io_scan_log.read_scan_log(filename), records)
        return

    def test_moving_average(self):
        self.assertEqual([float(v) for v in preprocessing.moving_average([-50, -50, -50], 2)], [-50.0] * 3)
        averaged = preprocessing.moving_average([-40, -50, -60, -70], 2)
        self.assertEqual([float(v) for v in averaged], [-40.0, -45.0, -55.0, -65.0])
        self.assertEqual([float(v) for v in preprocessing.moving_average([-40, -50, -60], 1)], [-40.0, -50.0, -60.0])
        self.assertEqual([float(v) for v in preprocessing.moving_average([-40, -50, -60], 10)], [-40.0, -45.0, -50.0])
        with self.assertRaises(locus_errors.EmptySeries):
            preprocessing.moving_average([], 3)
        with self.assertRaises(locus_errors.ConfigInvalid):
            preprocessing.moving_average([-40], 0)
        with self.assertRaises(locus_errors.ConfigInvalid):
            preprocessing.reduce_stream([-40], 3, "median")
        return

    def test_moving_average_bounded(self):
        rng = np.random.default_rng(31)
        for _ in range(300):
            series = list(rng.uniform(-110, -20, size=int(rng.integers(1, 60))))
            averaged = [float(v) for v in preprocessing.moving_average(series, int(rng.integers(1, 15)))]
            self.assertEqual(len(averaged), len(series))
            self.assertTrue(all(min(series) - 1e-9 <= v <= max(series) + 1e-9 for v in averaged))
        return

    def test_aggregate_matches_golden(self):
        records = read_fixture_log()
        self.assertEqual(len(records), 60)
        golden = pd.read_csv(os.path.join(fixture_dir, "example_aggregated_golden.csv"))
        for reduction in ("final", "mean"):
            scans = preprocessing.aggregate_scans(records, window=10, reduction=reduction)
            self.assertEqual(len(scans), 1)
            position, scan = scans[0]
            self.assertEqual(position, Position(1.0, 1.0))
            self.assertEqual(list(scan), ["A1", "A2", "A3"])
            for row in golden[golden.reduction == reduction].itertuples(index=False):
                self.assertAlmostEqual(float(scan[row.anchor_id]), row.rssi_dbm, places=9)
        return

    def test_aggregate_ignores_record_order(self):
        records = read_fixture_log()
        reference = preprocessing.aggregate_scans(records)
        rng = np.random.default_rng(2)
        for _ in range(20):
            shuffled = [records[i] for i in rng.permutation(len(records))]
            self.assertEqual(preprocessing.aggregate_scans(shuffled), reference)
        return

    def test_aggregate_partitions_positions(self):
        records = read_fixture_log()
        moved = [RawScanRecord(r.sequence_number + 100, r.anchor_id, r.rssi - 10, Position(3, 3), r.technology)
                 for r in records]
        scans = preprocessing.aggregate_scans(records + moved)
        self.assertEqual([p for p, _ in scans], [Position(1, 1), Position(3, 3)])
        self.assertEqual(scans[0], preprocessing.aggregate_scans(records)[0])
        self.assertAlmostEqual(float(scans[1][1]["A1"]), float(scans[0][1]["A1"]) - 10, places=9)
        return

    def test_aggregate_kalman(self):
        records = [RawScanRecord(i, "A1", -60.0, Position(0, 1)) for i in range(5)]
        (_, scan), = preprocessing.aggregate_scans(records, reduction="kalman")
        self.assertAlmostEqual(float(scan["A1"]), -60.0, places=9)
        return

    def test_missing_labels(self):
        records = [RawScanRecord(0, "A1", -50.0, Position(0, 0)), RawScanRecord(1, "A1", -52.0)]
        with self.assertRaises(locus_errors.MissingPositionLabel):
            preprocessing.aggregate_scans(records)
        scans = preprocessing.query_scans([RawScanRecord(0, "A1", -50.0), RawScanRecord(1, "A1", -52.0),
                                           RawScanRecord(0, "A2", -70.0)], window=2)
        self.assertEqual(len(scans), 1)
        position, scan = scans[0]
        self.assertIsNone(position)
        self.assertEqual((float(scan["A1"]), float(scan["A2"])), (-51.0, -70.0))
        return

    def test_survey_scans(self):
        surveys = preprocessing.survey_scans(read_fixture_log(), window=1)
        self.assertEqual(len(surveys), 1)
        position, scans = surveys[0]
        self.assertEqual(len(scans), 20)
        self.assertEqual((float(scans[0]["A1"]), float(scans[0]["A3"])), (-50.0, -70.0))
        self.assertEqual(float(scans[-1]["A2"]), -56.0)
        with self.assertRaises(locus_errors.DuplicateAnchor):
            preprocessing.survey_scans([RawScanRecord(0, "A1", -50.0, Position(0, 0)),
                                        RawScanRecord(0, "A1", -51.0, Position(0, 0))])
        return

    def test_anchors_file(self):
        anchors = io_anchors.read_anchors(os.path.join(fixture_dir, "example_anchors.csv"))
        self.assertEqual(anchors, AnchorSet([Anchor("A1", Position(0, 0)), Anchor("A2", Position(4, 0)),
                                             Anchor("A3", Position(0, 4))]))
        with tempfile.TemporaryDirectory() as tmpdir:
            filename = os.path.join(tmpdir, "anchors.csv")
            moved = anchors.translated(0.1, 1 / 3)
            io_anchors.write_anchors(moved, filename)
            self.assertEqual(io_anchors.read_anchors(filename), moved)
            with open(filename, 'w') as ofile:
                ofile.write("id,x,y\nA1,0,0\n")
            with self.assertRaises(locus_errors.UnknownColumns):
                io_anchors.read_anchors(filename)
            with open(filename, 'w') as ofile:
                ofile.write("anchor_id,x_m,y_m\nA1,0,0\nA2,four,0\n")
            with self.assertRaises(locus_errors.MalformedRow) as cm:
                io_anchors.read_anchors(filename)
            self.assertEqual(cm.exception.line_no, 3)
        return


if __name__ == "__main__":
    unittest.main()
