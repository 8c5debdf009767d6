# Writing evaluation reports as plain CSV tables into a report directory

import os
import pandas as pd
from .benchmark import TechniqueTag

ERRORS_COLUMNS = ["technique", "test_index", "error_m"]
SUMMARY_COLUMNS = ["technique", "mean_m", "variance_m2", "p50", "p95", "n_excluded"]
CDF_COLUMNS = ["technique", "error_m", "cum_fraction"]
EXCLUSION_COLUMNS = ["technique", "test_index", "error_type"]
FLOAT_FORMAT = '%.17g'


def _write_table(rows, columns, filename):
    print("Writing file %s " % filename)
    pd.DataFrame(rows, columns=columns).to_csv(filename, index=False, float_format=FLOAT_FORMAT,
                                               lineterminator='\n')
    return


def errors_table(report):
    return [(s.technique.value, s.test_index, s.error) for s in report.samples]


def summary_table(report):
    rows = []
    for technique in TechniqueTag:
        if len(report.errors(technique)) == 0:
            continue
        mean, variance = report.summary(technique)
        cdf = report.cdf(technique)
        rows.append((technique.value, mean, variance, cdf.quantile(0.5), cdf.quantile(0.95),
                     report.n_excluded(technique)))
    return rows


def cdf_table(report):
    rows = []
    for technique in TechniqueTag:
        if len(report.errors(technique)) == 0:
            continue
        rows.extend([(technique.value, e, f) for e, f in report.cdf(technique).cdf_table()])
    return rows


def write_report_info(report, filename):
    print("Writing file %s " % filename)
    with open(filename, 'w', newline='\n') as ofile:
        ofile.write("scenario: %s\n" % report.scenario_name)
        ofile.write("technology: %s\n" % report.technology)
        ofile.write("tests: %d\n" % report.test_count)
        ofile.write("database_size: %d\n" % report.database_size)
        ofile.write("anchor_count: %d\n" % report.anchor_count)
        for key in sorted(report.metadata):
            ofile.write("%s: %s\n" % (key, report.metadata[key]))
        ofile.write("mean_m: mean error (literature: MSE), the average Euclidean distance between estimate and truth, "
                    "not a squared error\n")
        ofile.write("variance_m2: population variance of the errors (divide by N)\n")
        ofile.write("p50, p95: right-continuous empirical quantiles of the errors\n")
        ofile.write("n_excluded: tests on which the technique raised an error; see exclusions.csv\n")
    return


def write_report(report, report_dir, params=None):
    """
    Produce errors.csv, summary.csv, cdf.csv, exclusions.csv and report_info.txt in report_dir.
    With params, the run configuration is also saved as used_config.txt.
    """
    os.makedirs(report_dir, exist_ok=True)
    if params is not None:
        params.write_params_into_config(os.path.join(report_dir, "used_config.txt"))  # for record-keeping
    _write_table(errors_table(report), ERRORS_COLUMNS, os.path.join(report_dir, "errors.csv"))
    _write_table(summary_table(report), SUMMARY_COLUMNS, os.path.join(report_dir, "summary.csv"))
    _write_table(cdf_table(report), CDF_COLUMNS, os.path.join(report_dir, "cdf.csv"))
    _write_table([(e.technique.value, e.test_index, e.error_type) for e in report.exclusions], EXCLUSION_COLUMNS,
                 os.path.join(report_dir, "exclusions.csv"))
    write_report_info(report, os.path.join(report_dir, "report_info.txt"))
    return
