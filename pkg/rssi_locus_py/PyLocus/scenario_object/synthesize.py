"""
Propagation simulator and synthetic dataset generator.
Noise is log-normal shadowing: Gaussian in dB around the path-loss prediction.
Random draws come from numpy's default_rng (PCG64) seeded from the config, in this order:
fingerprints in layout order, scans in order, anchors in AnchorSet order; then test positions; then test scans;
then the calibration run.
"""

from dataclasses import dataclass
import numpy as np
from .. import locus_errors
from ..locus_collections import Rssi, RSSI_MIN, RSSI_MAX, Position, ScanVector, LabeledScan
from ..pathloss_object.pathloss_model import CalibrationSample, model_rssi
from ..ingest_object import preprocessing
from ..ingest_object.io_scan_log import RawScanRecord
from ..trilateration_object import kalman

# 0.1 m steps up to 1 m, then 0.5 m steps up to 5 m; the 0 m reading cannot enter a log-distance fit
CALIBRATION_DISTANCES = tuple(round(0.1 * i, 1) for i in range(1, 11)) + tuple(0.5 * i for i in range(3, 11))
GRID_TOLERANCE = 1e-9
GRID_DECIMALS = 9


def sample_rssi(model, distance, sigma, rng) -> Rssi:
    """
    One noisy reading: the path-loss prediction plus a Gaussian(0, sigma^2) draw, clamped to [-120, 0] dBm.

    :param model: PathLossModel
    :param distance: float, meters, > 0
    :param sigma: float, dB, >= 0
    :param rng: numpy Generator
    """
    if sigma < 0:
        raise locus_errors.ConfigInvalid("Error! Shadowing sigma must be >= 0 dB, got %s" % sigma)
    value = model_rssi(model, distance) + rng.normal(0.0, sigma)
    return Rssi(np.clip(value, RSSI_MIN, RSSI_MAX))


def _axis_count(extent, spacing):
    return int(np.floor(extent / spacing + GRID_TOLERANCE)) + 1


def _axis_values(start, stop, spacing, count):
    """count coordinates from start in steps of spacing, rounded and capped at stop"""
    values = np.minimum(np.round(start + spacing * np.arange(count), GRID_DECIMALS), stop)
    return [float(v) for v in values]


def grid_positions(region, spacing):
    """Regular grid anchored at the region's lower-left corner, rows along x."""
    xs = _axis_values(region.x_min, region.x_max, spacing, _axis_count(region.x_max - region.x_min, spacing))
    ys = _axis_values(region.y_min, region.y_max, spacing, _axis_count(region.y_max - region.y_min, spacing))
    return [Position(x, y) for y in ys for x in xs]


def alternating_positions(region, spacing):
    """Rows at the grid spacing; every other row shifted by half a spacing along x."""
    ys = _axis_values(region.y_min, region.y_max, spacing, _axis_count(region.y_max - region.y_min, spacing))
    positions = []
    for j, y in enumerate(ys):
        offset = spacing / 2 if j % 2 == 1 else 0.0
        nx = _axis_count(region.x_max - region.x_min - offset, spacing)
        positions.extend([Position(x, y) for x in _axis_values(region.x_min + offset, region.x_max, spacing, nx)])
    return positions


def fingerprint_positions(config):
    if config.layout == "alternating":
        return alternating_positions(config.region, config.grid_spacing)
    return grid_positions(config.region, config.grid_spacing)


def simulate_scans(config, position, count, rng):
    """count scans at one position, every anchor heard in each scan"""
    distances = []
    for anchor in config.anchors:
        distance = anchor.position.distance_to(position)
        if distance <= 0:
            raise locus_errors.ConfigInvalid("Error! Position %s coincides with anchor %s" % (position, anchor.id))
        distances.append(distance)
    scans = []
    for _ in range(count):
        scans.append(ScanVector([(anchor.id, sample_rssi(config.models[anchor.id], d, config.shadowing_sigma, rng))
                                 for anchor, d in zip(config.anchors, distances)]))
    return scans


def generate_calibration(model, sigma, rng, distances=CALIBRATION_DISTANCES):
    """One simulated calibration run: a reading at each distance. Returns a list of CalibrationSample."""
    return [CalibrationSample(distance=float(d), rssi=sample_rssi(model, d, sigma, rng)) for d in distances]


@dataclass(frozen=True)
class SyntheticDataset:
    config: object  # ScenarioConfig
    surveys: tuple  # (Position, list of ScanVector), one per fingerprint
    tests: tuple  # (Position, list of ScanVector), raw scans at each test point
    calibration: tuple  # CalibrationSample, first anchor's simulated calibration run

    def fingerprint_count(self):
        return len(self.surveys)

    def labeled_tests(self, reduction="final", window=preprocessing.DEFAULT_WINDOW,
                      kalman_params=kalman.KalmanParams()):
        """Reduce each test point's scans to one LabeledScan, per anchor stream, like aggregate_scans does."""
        labeled = []
        for position, scans in self.tests:
            streams = {}
            for scan in scans:
                for anchor_id, rssi in scan.items():
                    streams.setdefault(anchor_id, []).append(rssi)
            scan = ScanVector([(anchor_id, preprocessing.reduce_stream(series, window, reduction, kalman_params))
                               for anchor_id, series in streams.items()])
            labeled.append(LabeledScan(position, scan))
        return labeled

    def _records(self, groups, technology):
        records, seq = [], 0
        for position, scans in groups:
            for scan in scans:
                for anchor_id, rssi in scan.items():
                    records.append(RawScanRecord(seq, anchor_id, rssi, position, technology))
                seq = seq + 1
        return records

    def survey_records(self):
        """Fingerprint survey as labeled RawScanRecords; one sequence number per scan."""
        return self._records(self.surveys, self.config.technology or None)

    def test_records(self):
        return self._records(self.tests, self.config.technology or None)


def generate_scenario(config) -> SyntheticDataset:
    """
    :param config: ScenarioConfig
    :returns: SyntheticDataset, bit-identical for identical configs
    """
    rng = np.random.default_rng(config.seed)
    surveys = []
    for position in fingerprint_positions(config):
        if not config.inside_room(position):
            raise locus_errors.ConfigInvalid("Error! Fingerprint %s falls outside the room" % position)
        surveys.append((position, simulate_scans(config, position, config.scans_per_fingerprint, rng)))
    r = config.region
    points = rng.uniform(low=[r.x_min, r.y_min], high=[r.x_max, r.y_max], size=(config.test_point_count, 2))
    test_positions = [Position(x, y) for x, y in points]
    tests = [(p, simulate_scans(config, p, config.test_scans_per_point, rng)) for p in test_positions]
    first_anchor = next(iter(config.anchors))
    calibration = generate_calibration(config.models[first_anchor.id], config.shadowing_sigma, rng)
    return SyntheticDataset(config=config, surveys=tuple(surveys), tests=tuple(tests), calibration=tuple(calibration))
