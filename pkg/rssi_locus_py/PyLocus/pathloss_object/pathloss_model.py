"""
Log-distance path-loss model: RSSI = -10 n log10(d) + C.
n is the path-loss exponent, C the 1-meter intercept in dBm.
The fit is ordinary least squares of RSSI on log10(d), where the model is linear.
"""

from dataclasses import dataclass
import numpy as np
from scipy import stats
from .. import locus_errors
from ..locus_collections import Rssi, RSSI_MIN, RSSI_MAX


@dataclass(frozen=True)
class CalibrationSample:
    distance: float  # meters, > 0
    rssi: Rssi  # dBm

    def __post_init__(self):
        if not np.isfinite(self.distance) or self.distance <= 0:
            raise locus_errors.NonPositiveDistance("Error! Calibration distance must be > 0 m, got %s" %
                                                   self.distance)
        if not isinstance(self.rssi, Rssi):
            object.__setattr__(self, 'rssi', Rssi(self.rssi))


@dataclass(frozen=True)
class PathLossModel:
    exponent_n: float  # dimensionless, > 0
    intercept_c: float  # dBm at 1 m
    r_squared: float = 1.0  # coefficient of determination of the fit

    def __post_init__(self):
        if not np.isfinite(self.exponent_n) or self.exponent_n <= 0:
            raise locus_errors.NonPositiveExponent("Error! Path-loss exponent must be > 0, got %s" % self.exponent_n)
        if not np.isfinite(self.intercept_c):
            raise locus_errors.ModelOutOfRange("Error! Path-loss intercept is not finite.")
        if not 0 <= self.r_squared <= 1:
            raise locus_errors.ModelOutOfRange("Error! R-squared of %s outside [0, 1]" % self.r_squared)

    def __str__(self):
        return "PathLossModel: n=%.4f, C=%.4f dBm, R2=%.4f" % (self.exponent_n, self.intercept_c, self.r_squared)


def _check_distance(distance):
    if not np.isfinite(distance) or distance <= 0:
        raise locus_errors.NonPositiveDistance("Error! Distance must be > 0 m, got %s" % distance)


def model_rssi(model, distance) -> float:
    """Evaluate the model without the range check. Used by the simulator before clamping."""
    _check_distance(distance)
    return -10 * model.exponent_n * np.log10(distance) + model.intercept_c


def fit_path_loss(samples):
    """
    Fit (n, C) by linear regression of rssi on log10(distance): slope = -10n, intercept = C.

    :param samples: list of CalibrationSample
    :returns: PathLossModel with r_squared against the mean-RSSI baseline
    """
    distances = np.array([s.distance for s in samples], dtype=float)
    rssi = np.array([float(s.rssi) for s in samples], dtype=float)
    if np.any(distances <= 0):
        raise locus_errors.NonPositiveDistance("Error! Calibration distances must be > 0 m.")
    if len(samples) < 2 or len(np.unique(distances)) < 2:
        raise locus_errors.TooFewSamples("Error! Fitting needs at least 2 distinct distances, got %d." %
                                         len(np.unique(distances)))
    log_d = np.log10(distances)
    regression = stats.linregress(log_d, rssi)
    exponent_n = -regression.slope / 10
    if exponent_n <= 0:
        raise locus_errors.NonPositiveExponent("Error! Fitted path-loss exponent %f is not positive." % exponent_n)
    residuals = rssi - (regression.slope * log_d + regression.intercept)
    ss_res = np.sum(np.square(residuals))
    ss_tot = np.sum(np.square(rssi - np.mean(rssi)))
    r_squared = 1.0 - ss_res / ss_tot
    r_squared = float(np.clip(r_squared, 0.0, 1.0))  # numerical residue only
    return PathLossModel(exponent_n=float(exponent_n), intercept_c=float(regression.intercept), r_squared=r_squared)


def predict_rssi(model, distance) -> Rssi:
    """Expected RSSI at a distance. Raises ModelOutOfRange when the prediction leaves [-120, 0] dBm."""
    value = model_rssi(model, distance)
    if value < RSSI_MIN or value > RSSI_MAX:
        raise locus_errors.ModelOutOfRange("Error! Predicted RSSI %f dBm at %f m outside [%.0f, %.0f] dBm" %
                                           (value, distance, RSSI_MIN, RSSI_MAX))
    return Rssi(value)


def invert_distance(model, rssi) -> float:
    """Distance in meters at which the model predicts this RSSI. Always > 0; ModelOutOfRange when not representable."""
    rssi = rssi if isinstance(rssi, Rssi) else Rssi(rssi)
    exponent = (model.intercept_c - rssi) / (10 * model.exponent_n)
    with np.errstate(over='ignore', under='ignore'):
        distance = float(np.power(10.0, exponent))
    if not np.isfinite(distance) or distance <= 0:
        raise locus_errors.ModelOutOfRange("Error! %s dBm inverts to a distance of 10^%g m under %s" %
                                           (float(rssi), exponent, model))
    return distance
