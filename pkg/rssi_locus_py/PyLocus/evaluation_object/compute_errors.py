# Positional error metrics: per-point Euclidean error, mean/variance summaries, empirical CDF

import numpy as np
from .. import locus_errors


def localization_error(calc, real) -> float:
    """
    Euclidean distance between an estimated position and the true position, in meters.
    Averaging these over test points gives the "mean error" (named MSE in the localization literature).
    """
    return float(np.hypot(calc.x - real.x, calc.y - real.y))


def summarize(errors):
    """
    :param errors: list of floats, meters
    :returns: (mean, population variance) in meters and m^2
    """
    if len(errors) == 0:
        raise locus_errors.EmptyList("Error! Cannot summarize an empty list of errors.")
    values = np.sort(np.array(errors, dtype=float))  # sorted so the sums do not depend on input order
    return float(np.mean(values)), float(np.var(values))


class EmpiricalCdf:
    """
    Sorted errors with the right-continuous inverse CDF.
    quantile(p) is the smallest error e with fraction(errors <= e) >= p.
    """
    def __init__(self, errors):
        if len(errors) == 0:
            raise locus_errors.EmptyList("Error! Cannot build a CDF from an empty list of errors.")
        self.values = np.sort(np.array(errors, dtype=float))
        self.fractions = np.arange(1, len(self.values) + 1) / len(self.values)

    def __len__(self):
        return len(self.values)

    def quantile(self, p) -> float:
        if not 0 <= p <= 1:
            raise locus_errors.DomainError("Error! Quantile level %s outside [0, 1]" % p)
        index = int(np.searchsorted(self.fractions, p, side='left'))
        return float(self.values[min(index, len(self.values) - 1)])

    def fraction_below(self, e) -> float:
        """Fraction of errors <= e."""
        return float(np.searchsorted(self.values, e, side='right')) / len(self.values)

    def cdf_table(self):
        """list of (error_m, cumulative fraction), one row per error"""
        return list(zip(self.values.tolist(), self.fractions.tolist()))


def empirical_cdf(errors) -> EmpiricalCdf:
    return EmpiricalCdf(errors)
