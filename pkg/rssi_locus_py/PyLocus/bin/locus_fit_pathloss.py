#!/usr/bin/env python

"""
Fit the log-distance path-loss model RSSI = -10 n log10(d) + C to a calibration run
and write the fitted (n, C, R2) into a model file.
"""

import sys
import rssi_locus_py.PyLocus as PyLocus
from rssi_locus_py.PyLocus import cli_utilities


def welcome_and_parse_runstring(argv=None):
    print("\nFit a path-loss model from calibration samples. ")
    parser = cli_utilities.make_parser('Fit a log-distance path-loss model to distance_m,rssi_dbm samples')
    parser.add_argument('calibration', type=str, help='calibration CSV (distance_m,rssi_dbm). Required.')
    parser.add_argument('output', type=str, help='model file to write. Required.')
    parser.add_argument('--anchor', type=str, default=PyLocus.pathloss_object.io_pathloss.DEFAULT_ANCHOR,
                        help="anchor id the model belongs to (default '*', every anchor).")
    parser.add_argument('--keep-zero-distance', action='store_true',
                        help='reject rows measured at 0 m instead of dropping them.')
    args = parser.parse_args(argv)
    return args


def drive_fit_pathloss(calibration_file, outfile, anchor_id="*", keep_zero_distance=False):
    samples = PyLocus.pathloss_object.io_pathloss.read_calibration_csv(calibration_file,
                                                                      drop_zero_distance=not keep_zero_distance)
    model = PyLocus.pathloss_object.pathloss_model.fit_path_loss(samples)
    print(model)
    PyLocus.pathloss_object.io_pathloss.write_models({anchor_id: model}, outfile)
    return model


def run(argv=None):
    my_args = welcome_and_parse_runstring(argv)
    return cli_utilities.run_and_report(drive_fit_pathloss, my_args.calibration, my_args.output, my_args.anchor,
                                        my_args.keep_zero_distance)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
