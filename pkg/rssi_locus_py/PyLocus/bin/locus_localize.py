#!/usr/bin/env python

"""
Estimate one position per scan with trilateration, KNN, or Naive Bayes.
Labeled rows are grouped by their position label; unlabeled rows form a single scan.
"""

import sys
import rssi_locus_py.PyLocus as PyLocus
from rssi_locus_py.PyLocus import cli_utilities, locus_errors

LOCALIZE_COLUMNS = "scan,x_m,y_m"


def welcome_and_parse_runstring(argv=None):
    print("\nLocalize RSSI scans. ")
    parser = cli_utilities.make_parser('Estimate positions from RSSI scans')
    parser.add_argument('scans', type=str, help='scan log (seq,anchor_id,rssi_dbm,x_m,y_m,tech). Required.')
    parser.add_argument('--anchors', type=str, required=True, help='anchors CSV (anchor_id,x_m,y_m). Required.')
    parser.add_argument('--db', type=str, default=None, help='fingerprint database, for knn and bayes.')
    parser.add_argument('--models', type=str, default=None, help='path-loss model file, for trilat.')
    parser.add_argument('--technique', type=str, choices=PyLocus.configure_locus.TECHNIQUE_FLAGS, default=None,
                        help='trilat, knn, or bayes (default knn).')
    parser.add_argument('--k', type=int, default=None, help='number of neighbors for knn (default 4).')
    parser.add_argument('--window', type=int, default=None, help='moving-average window (default 10).')
    parser.add_argument('--reduction', type=str, choices=PyLocus.ingest_object.preprocessing.REDUCTIONS,
                        default=None, help='per-anchor reduction for knn and bayes (default final).')
    parser.add_argument('--trilat-reduction', type=str, choices=PyLocus.ingest_object.preprocessing.REDUCTIONS,
                        default=None, help='per-anchor reduction for trilat (default kalman).')
    parser.add_argument('--kalman-q', type=float, default=None, help='Kalman process noise, dB^2.')
    parser.add_argument('--kalman-r', type=float, default=None, help='Kalman measurement noise, dB^2.')
    parser.add_argument('--kalman-p0', type=float, default=None, help='Kalman initial variance, dB^2.')
    parser.add_argument('--output', type=str, default=None, help='also write the estimates into this CSV.')
    cli_utilities.add_config_flag(parser)
    args = parser.parse_args(argv)
    return args


def locate_scans(params, scans, anchors, db=None, models=None):
    """
    :param params: Params
    :param scans: list of ScanVector
    :returns: list of Position
    """
    if params.technique == "trilat":
        if models is None:
            raise locus_errors.ConfigInvalid("Error! Trilateration needs a path-loss model file (--models).")
        return [PyLocus.trilateration_object.trilateration.locate_trilateration(scan, anchors, models)
                for scan in scans]
    if db is None:
        raise locus_errors.ConfigInvalid("Error! %s needs a fingerprint database (--db)." % params.technique)
    if params.technique == "knn":
        cfg = params.knn_config.check_database(db)
        return [PyLocus.fingerprint_object.knn.knn_locate(db, scan, cfg) for scan in scans]
    return [PyLocus.fingerprint_object.naive_bayes.bayes_locate(db, scan, params.variance_floor) for scan in scans]


def write_positions(positions, outfile):
    print("Writing file %s " % outfile)
    with open(outfile, 'w', newline='\n') as ofile:
        ofile.write(LOCALIZE_COLUMNS + "\n")
        for i, position in enumerate(positions):
            ofile.write("%d,%r,%r\n" % (i, position.x, position.y))
    return


def drive_localize(params, scan_file, anchors_file, db_file=None, models_file=None, outfile=None):
    anchors = PyLocus.ingest_object.io_anchors.read_anchors(anchors_file)
    db = None if db_file is None else PyLocus.fingerprint_object.io_database.read_database(db_file, anchors)
    models = None if models_file is None else PyLocus.pathloss_object.io_pathloss.read_models(models_file, anchors)
    records = PyLocus.ingest_object.io_scan_log.read_scan_log(scan_file)
    reduction = params.trilat_reduction if params.technique == "trilat" else params.reduction
    grouped = PyLocus.ingest_object.preprocessing.query_scans(records, params.window, reduction, params.kalman_params)
    positions = locate_scans(params, [scan.check_within(anchors) for _, scan in grouped], anchors, db, models)
    print(LOCALIZE_COLUMNS)
    for i, position in enumerate(positions):
        print("%d,%r,%r" % (i, position.x, position.y))
    if outfile is not None:
        write_positions(positions, outfile)
    return positions


def _drive_from_args(my_args):
    params = cli_utilities.get_params(my_args, technique=my_args.technique, k=my_args.k, window=my_args.window,
                                      reduction=my_args.reduction, trilat_reduction=my_args.trilat_reduction,
                                      kalman_q=my_args.kalman_q, kalman_r=my_args.kalman_r,
                                      kalman_p0=my_args.kalman_p0)
    params.print_summary()
    return drive_localize(params, my_args.scans, my_args.anchors, my_args.db, my_args.models, my_args.output)


def run(argv=None):
    my_args = welcome_and_parse_runstring(argv)
    return cli_utilities.run_and_report(_drive_from_args, my_args)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
