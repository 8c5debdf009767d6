"""
Read/write calibration samples and fitted path-loss models.

* calibration CSV: distance_m,rssi_dbm
* model file CSV: anchor_id,exponent_n,intercept_c,r_squared  (17 significant digits)
  anchor_id '*' is a default model for every anchor without its own row.
"""

from .. import locus_errors, io_tables
from ..locus_collections import Rssi
from .pathloss_model import CalibrationSample, PathLossModel

CALIBRATION_COLUMNS = ["distance_m", "rssi_dbm"]
MODEL_COLUMNS = ["anchor_id", "exponent_n", "intercept_c", "r_squared"]
DEFAULT_ANCHOR = "*"


def read_calibration_csv(filename, drop_zero_distance=True):
    """
    :param filename: string
    :param drop_zero_distance: bool. Rows measured at 0 m cannot enter the log-distance fit; drop them.
    :returns: list of CalibrationSample
    """
    table = io_tables.read_table(filename, CALIBRATION_COLUMNS)
    samples, dropped = [], 0
    for i, row in enumerate(table.itertuples(index=False)):
        line_no = i + 2
        try:
            distance = float(row.distance_m)
        except ValueError:
            raise locus_errors.MalformedRow("Error! Bad distance %r in %s" % (row.distance_m, filename), line_no)
        if distance == 0 and drop_zero_distance:
            dropped = dropped + 1
            continue
        samples.append(CalibrationSample(distance=distance, rssi=Rssi(row.rssi_dbm, line_no)))
    if dropped:
        print("--> Dropped %d calibration rows measured at 0 m" % dropped)
    print("--> Read %d calibration samples " % len(samples))
    return samples


def write_calibration_csv(samples, filename):
    print("Writing file %s " % filename)
    with open(filename, 'w', newline='\n') as ofile:
        ofile.write(",".join(CALIBRATION_COLUMNS) + "\n")
        for sample in samples:
            ofile.write("%.17g,%.17g\n" % (sample.distance, sample.rssi))
    return


def write_models(models, filename):
    """
    :param models: dict of anchor_id -> PathLossModel
    :param filename: string
    """
    print("Writing file %s " % filename)
    with open(filename, 'w', newline='\n') as ofile:
        ofile.write(",".join(MODEL_COLUMNS) + "\n")
        for anchor_id, model in models.items():
            ofile.write("%s,%.17g,%.17g,%.17g\n" % (anchor_id, model.exponent_n, model.intercept_c,
                                                    model.r_squared))
    return


def read_models(filename, anchor_set=None):
    """
    :param filename: string
    :param anchor_set: optional AnchorSet used to expand the '*' default row
    :returns: dict of anchor_id -> PathLossModel
    """
    table = io_tables.read_table(filename, MODEL_COLUMNS)
    models = {}
    for i, row in enumerate(table.itertuples(index=False)):
        line_no = i + 2
        if row.anchor_id in models:
            raise locus_errors.MalformedRow("Error! Anchor %s has two models in %s" % (row.anchor_id, filename),
                                            line_no)
        try:
            model = PathLossModel(exponent_n=float(row.exponent_n), intercept_c=float(row.intercept_c),
                                  r_squared=float(row.r_squared))
        except ValueError as e:
            raise locus_errors.MalformedRow("Error! Bad model row in %s: %s" % (filename, e), line_no)
        models[row.anchor_id] = model
    if anchor_set is not None and DEFAULT_ANCHOR in models:
        default_model = models.pop(DEFAULT_ANCHOR)
        for anchor in anchor_set:
            models.setdefault(anchor.id, default_model)
    print("--> Read %d path-loss models " % len(models))
    return models
