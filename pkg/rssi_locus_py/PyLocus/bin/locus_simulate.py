#!/usr/bin/env python

"""
Generate a synthetic dataset from a scenario config: a fingerprint survey, labeled test scans,
the anchor positions, the true path-loss models, and one simulated calibration run.
"""

import os
import sys
import rssi_locus_py.PyLocus as PyLocus
from rssi_locus_py.PyLocus import cli_utilities


def welcome_and_parse_runstring(argv=None):
    print("\nSimulate an RSSI survey of a synthetic room. ")
    parser = cli_utilities.make_parser('Write a synthetic RSSI dataset from a scenario config')
    parser.add_argument('config', type=str, help='scenario config file. Required.')
    parser.add_argument('output_dir', type=str, help='directory for the generated CSVs. Required.')
    parser.add_argument('--seed', type=int, default=None, help='random seed (overrides the config).')
    parser.add_argument('--sigma', type=float, default=None, help='shadowing sigma in dB (overrides the config).')
    parser.add_argument('--test-points', type=int, default=None, help='number of test points (overrides the config).')
    args = parser.parse_args(argv)
    return args


def drive_simulate(config_file, output_dir, seed=None, sigma=None, test_points=None):
    scenario = PyLocus.scenario_object.scenario_config
    config = scenario.read_scenario_config(config_file)
    config = scenario.modify_scenario_config(config, seed=seed, sigma=sigma, test_point_count=test_points)
    dataset = PyLocus.scenario_object.synthesize.generate_scenario(config)
    print("--> Generated %d fingerprints and %d test points " % (dataset.fingerprint_count(), len(dataset.tests)))
    os.makedirs(output_dir, exist_ok=True)
    scenario.write_scenario_config(config, os.path.join(output_dir, "used_scenario_config.txt"))
    PyLocus.ingest_object.io_anchors.write_anchors(config.anchors, os.path.join(output_dir, "anchors.csv"))
    PyLocus.pathloss_object.io_pathloss.write_models(config.models, os.path.join(output_dir, "models.csv"))
    PyLocus.pathloss_object.io_pathloss.write_calibration_csv(dataset.calibration,
                                                              os.path.join(output_dir, "calibration.csv"))
    PyLocus.ingest_object.io_scan_log.write_scan_log(dataset.survey_records(), os.path.join(output_dir, "survey.csv"))
    PyLocus.ingest_object.io_scan_log.write_scan_log(dataset.test_records(), os.path.join(output_dir, "tests.csv"))
    return dataset


def run(argv=None):
    my_args = welcome_and_parse_runstring(argv)
    return cli_utilities.run_and_report(drive_simulate, my_args.config, my_args.output_dir, my_args.seed,
                                        my_args.sigma, my_args.test_points)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
