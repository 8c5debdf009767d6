"""
Scalar Kalman filter for slowly varying RSSI streams.
State is the true RSSI; the transition is identity.
"""

from dataclasses import dataclass
import numpy as np
from .. import locus_errors
from ..locus_collections import Rssi, RSSI_MIN, RSSI_MAX, ScanVector


@dataclass(frozen=True)
class KalmanParams:
    process_noise_q: float = 0.008  # dB^2
    measurement_noise_r: float = 4.0  # dB^2
    initial_variance_p0: float = 1.0  # dB^2

    def __post_init__(self):
        for name in ('process_noise_q', 'measurement_noise_r', 'initial_variance_p0'):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise locus_errors.ConfigInvalid("Error! Kalman parameter %s must be > 0, got %s" % (name, value))


class ScalarKalman:
    """One filter per RSSI stream. Initialized at the first reading with variance p0."""
    def __init__(self, params):
        self.params = params
        self.x = None  # current estimate, dBm
        self.p = None  # current variance, dB^2

    def filter(self, z) -> float:
        if self.x is None:
            self.x, self.p = float(z), self.params.initial_variance_p0
            return self.x
        p_pred = self.p + self.params.process_noise_q
        gain = p_pred / (p_pred + self.params.measurement_noise_r)
        self.x = self.x + gain * (float(z) - self.x)
        self.p = (1 - gain) * p_pred
        return self.x


def kalman_smooth(readings, params=KalmanParams()):
    """
    Causal, length-preserving filtering of one RSSI stream.

    :param readings: ordered sequence of Rssi
    :param params: KalmanParams
    :returns: list of Rssi, filtered estimates
    """
    if len(readings) == 0:
        raise locus_errors.EmptySequence("Error! Cannot filter an empty RSSI sequence.")
    kf = ScalarKalman(params)
    # convex combinations of valid readings stay valid; the clip only absorbs rounding
    return [Rssi(np.clip(kf.filter(z), RSSI_MIN, RSSI_MAX)) for z in readings]


def smooth_scan_streams(streams, params=KalmanParams()) -> ScanVector:
    """
    Filter each anchor's stream independently and keep the terminal estimate.

    :param streams: dict of anchor_id -> ordered list of Rssi
    :param params: KalmanParams
    """
    return ScanVector([(anchor_id, kalman_smooth(series, params)[-1]) for anchor_id, series in streams.items()])
