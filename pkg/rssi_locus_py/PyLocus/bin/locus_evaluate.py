#!/usr/bin/env python

"""
Benchmark trilateration, KNN and Naive Bayes on labeled test scans.
Writes per-test errors, a summary table (mean error, variance, p50, p95, exclusions) and the empirical CDFs.
"""

import sys
import rssi_locus_py.PyLocus as PyLocus
from rssi_locus_py.PyLocus import cli_utilities, locus_errors


def welcome_and_parse_runstring(argv=None):
    print("\nEvaluate RSSI localization techniques. ")
    parser = cli_utilities.make_parser('Compare trilateration, KNN and Naive Bayes on labeled test scans')
    parser.add_argument('db', type=str, help='fingerprint database. Required.')
    parser.add_argument('tests', type=str, help='labeled test scan log. Required.')
    parser.add_argument('models', type=str, help='path-loss model file. Required.')
    parser.add_argument('report_dir', type=str, help='directory for the report files. Required.')
    parser.add_argument('--anchors', type=str, required=True, help='anchors CSV (anchor_id,x_m,y_m). Required.')
    parser.add_argument('--k', type=int, default=None, help='number of neighbors for knn (default 4).')
    parser.add_argument('--window', type=int, default=None, help='moving-average window (default 10).')
    parser.add_argument('--reduction', type=str, choices=PyLocus.ingest_object.preprocessing.REDUCTIONS,
                        default=None, help='per-anchor reduction for the fingerprint techniques (default final).')
    parser.add_argument('--trilat-reduction', type=str, choices=PyLocus.ingest_object.preprocessing.REDUCTIONS,
                        default=None, help='per-anchor reduction for trilateration (default kalman).')
    parser.add_argument('--kalman-q', type=float, default=None, help='Kalman process noise, dB^2.')
    parser.add_argument('--kalman-r', type=float, default=None, help='Kalman measurement noise, dB^2.')
    parser.add_argument('--kalman-p0', type=float, default=None, help='Kalman initial variance, dB^2.')
    parser.add_argument('--scenario-name', type=str, default=None, help='label written into the report.')
    parser.add_argument('--technology', type=str, default=None,
                        help='technology label (default: taken from the tech column of the tests).')
    cli_utilities.add_config_flag(parser)
    args = parser.parse_args(argv)
    return args


def technology_label(records):
    labels = sorted(set(r.technology for r in records if r.technology is not None))
    return "+".join(labels)


def drive_evaluate(params, db_file, tests_file, models_file, report_dir, anchors_file):
    preprocessing = PyLocus.ingest_object.preprocessing
    anchors = PyLocus.ingest_object.io_anchors.read_anchors(anchors_file)
    db = PyLocus.fingerprint_object.io_database.read_database(db_file, anchors)
    models = PyLocus.pathloss_object.io_pathloss.read_models(models_file, anchors)
    records = PyLocus.ingest_object.io_scan_log.read_scan_log(tests_file)
    fingerprint_scans = preprocessing.aggregate_scans(records, params.window, params.reduction, params.kalman_params)
    trilat_scans = preprocessing.aggregate_scans(records, params.window, params.trilat_reduction,
                                                 params.kalman_params)
    tests = [PyLocus.locus_collections.LabeledScan(position, scan.check_within(anchors))
             for position, scan in fingerprint_scans]
    if not params.technology:
        params = params.modify_params_object(technology=technology_label(records))
    report = PyLocus.evaluation_object.benchmark.run_benchmark(db, anchors, models, tests, params.knn_config,
                                                               trilat_scans=[scan for _, scan in trilat_scans],
                                                               scenario_name=params.scenario_name,
                                                               technology=params.technology,
                                                               variance_floor=params.variance_floor)
    report.metadata.update({"k": params.k, "window": params.window, "reduction": params.reduction,
                            "trilat_reduction": params.trilat_reduction})
    report.print_summary()
    failed = report.techniques_without_estimates()
    if failed:
        raise locus_errors.DomainError("Error! No successful estimate for %s; nothing written." %
                                       ", ".join(t.value for t in failed))
    PyLocus.evaluation_object.output_manager.write_report(report, report_dir, params)
    return report


def _drive_from_args(my_args):
    params = cli_utilities.get_params(my_args, k=my_args.k, window=my_args.window, reduction=my_args.reduction,
                                      trilat_reduction=my_args.trilat_reduction, kalman_q=my_args.kalman_q,
                                      kalman_r=my_args.kalman_r, kalman_p0=my_args.kalman_p0,
                                      scenario_name=my_args.scenario_name, technology=my_args.technology)
    params.print_summary()
    return drive_evaluate(params, my_args.db, my_args.tests, my_args.models, my_args.report_dir, my_args.anchors)


def run(argv=None):
    my_args = welcome_and_parse_runstring(argv)
    return cli_utilities.run_and_report(_drive_from_args, my_args)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
