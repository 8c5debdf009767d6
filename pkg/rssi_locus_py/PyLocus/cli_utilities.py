# Shared plumbing for the command-line drivers: argument parsers and the error-to-exit-code mapping

import argparse
import sys
from . import locus_errors, configure_locus

EXIT_SUCCESS, EXIT_DOMAIN_ERROR, EXIT_INPUT_ERROR = 0, 1, 2
EPILOG = '\U0001f4e1 \U0001f4e1 \U0001f4e1 '


def make_parser(description):
    return argparse.ArgumentParser(description=description, epilog=EPILOG)


def report_error(e):
    print("%s: %s" % (type(e).__name__, e), file=sys.stderr)
    return


def run_and_report(drive_function, *args, **kwargs):
    """
    Call a driver and translate its failure into an exit code.
    0: artifact fully written. 1: domain error. 2: malformed input or unreadable file.
    """
    try:
        drive_function(*args, **kwargs)
    except locus_errors.DomainError as e:
        report_error(e)
        return EXIT_DOMAIN_ERROR
    except (locus_errors.InputError, OSError, UnicodeDecodeError) as e:
        report_error(e)
        return EXIT_INPUT_ERROR
    return EXIT_SUCCESS


def get_params(args, **overrides):
    """Params from --config when given, else defaults; explicit command-line flags win."""
    params = configure_locus.Params() if args.config is None else configure_locus.configure_localization(args.config)
    return params.modify_params_object(**overrides)


def add_config_flag(parser):
    parser.add_argument('--config', type=str, default=None, help='locate-config file with run parameters.')
    return parser
