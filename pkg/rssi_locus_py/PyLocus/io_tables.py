# Reading small headed CSV tables (anchors, calibration runs, path-loss models) with pandas

import pandas as pd
from . import locus_errors


def read_table(filename, expected_columns):
    """
    Read every cell as text. Short rows come back padded with empty strings.

    :param filename: string
    :param expected_columns: list of strings, the exact header
    :returns: pandas DataFrame
    """
    print("Reading file %s " % filename)
    try:
        table = pd.read_csv(filename, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise locus_errors.UnknownColumns("Error! %s is empty, expected header %s" %
                                          (filename, ",".join(expected_columns)), 1)
    except pd.errors.ParserError as e:
        raise locus_errors.MalformedRow("Error! Could not parse %s: %s" % (filename, str(e).strip()))
    except UnicodeDecodeError:
        raise locus_errors.MalformedRow("Error! %s is not UTF-8 text" % filename)
    if list(table.columns) != expected_columns:
        raise locus_errors.UnknownColumns("Error! Expected columns %s in %s, found %s" %
                                          (",".join(expected_columns), filename, ",".join(table.columns)), 1)
    return table.fillna("")
