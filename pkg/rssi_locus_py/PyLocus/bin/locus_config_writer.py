#!/usr/bin/env python

# A simple script to write valid config templates in a particular directory
# Call this from a new experiment directory to get a scenario config and a locate config

import sys
import rssi_locus_py.PyLocus as PyLocus
from rssi_locus_py.PyLocus import cli_utilities


def welcome_and_parse_runstring(argv=None):
    print("\nWrite default config files for rssi_locus_py. ")
    parser = cli_utilities.make_parser('Write a scenario config and a locate config into a specified directory')
    parser.add_argument('directory', type=str, help='name of directory. Required.')
    parser.add_argument('--replica', type=int, default=1, choices=(1, 2, 3),
                        help='which survey room the scenario template replicates (default 1).')
    parser.add_argument('--technology', type=str, default="Zigbee",
                        choices=PyLocus.pathloss_object.presets.TECHNOLOGIES,
                        help='technology whose fitted path-loss the template uses (default Zigbee).')
    args = parser.parse_args(argv)
    return args


def drive_config_writer(directory, replica, technology):
    PyLocus.scenario_object.scenario_config.write_valid_config_file(directory, replica, technology)
    PyLocus.configure_locus.write_valid_config_file(directory)
    return


def run(argv=None):
    my_args = welcome_and_parse_runstring(argv)
    return cli_utilities.run_and_report(drive_config_writer, my_args.directory, my_args.replica, my_args.technology)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
