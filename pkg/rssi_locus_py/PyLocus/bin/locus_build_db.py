#!/usr/bin/env python

"""
Build a fingerprint database from a labeled survey scan log.
Each anchor stream is moving-averaged, then mean and variance are taken per position and anchor.
"""

import sys
import rssi_locus_py.PyLocus as PyLocus
from rssi_locus_py.PyLocus import cli_utilities


def welcome_and_parse_runstring(argv=None):
    print("\nBuild an RSSI fingerprint database. ")
    parser = cli_utilities.make_parser('Build a fingerprint database from a labeled scan log')
    parser.add_argument('scans', type=str, help='labeled scan log (seq,anchor_id,rssi_dbm,x_m,y_m,tech). Required.')
    parser.add_argument('output', type=str, help='database file to write. Required.')
    parser.add_argument('--anchors', type=str, required=True, help='anchors CSV (anchor_id,x_m,y_m). Required.')
    parser.add_argument('--window', type=int, default=PyLocus.ingest_object.preprocessing.DEFAULT_WINDOW,
                        help='moving-average window in readings (default 10; 1 keeps raw readings).')
    args = parser.parse_args(argv)
    return args


def drive_build_db(scan_file, anchors_file, outfile, window):
    records = PyLocus.ingest_object.io_scan_log.read_scan_log(scan_file)
    anchors = PyLocus.ingest_object.io_anchors.read_anchors(anchors_file)
    surveys = PyLocus.ingest_object.preprocessing.survey_scans(records, window)
    db = PyLocus.fingerprint_object.fingerprint_db.build_database(anchors, surveys)
    db.print_summary()
    PyLocus.fingerprint_object.io_database.write_database(db, outfile)
    return db


def run(argv=None):
    my_args = welcome_and_parse_runstring(argv)
    return cli_utilities.run_and_report(drive_build_db, my_args.scans, my_args.anchors, my_args.output,
                                        my_args.window)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
