"""
Moving-average preprocessing and the reduction of raw RSSI records into scans.
Streams are grouped per position and per anchor; within a stream, readings are ordered by sequence number.
"""

import numpy as np
import pandas as pd
from .. import locus_errors
from ..locus_collections import Rssi, ScanVector
from ..trilateration_object import kalman

DEFAULT_WINDOW = 10
REDUCTIONS = ("final", "mean", "kalman")


def moving_average(series, window=DEFAULT_WINDOW):
    """
    Trailing moving average, shorter at the start of the series. Length preserving.

    :param series: ordered list of Rssi
    :param window: int >= 1
    :returns: list of Rssi
    """
    if len(series) == 0:
        raise locus_errors.EmptySeries("Error! Cannot average an empty RSSI series.")
    if int(window) != window or window < 1:
        raise locus_errors.ConfigInvalid("Error! Moving-average window must be a positive integer, got %s" % window)
    averaged = pd.Series([float(v) for v in series]).rolling(window=int(window), min_periods=1).mean()
    return [Rssi(v) for v in averaged]


def reduce_stream(series, window=DEFAULT_WINDOW, reduction="final", kalman_params=kalman.KalmanParams()) -> Rssi:
    """
    One representative value for one anchor's stream.
    final: last moving-average output. mean: mean of all readings. kalman: terminal Kalman estimate.
    """
    if reduction == "final":
        return moving_average(series, window)[-1]
    if reduction == "mean":
        if len(series) == 0:
            raise locus_errors.EmptySeries("Error! Cannot average an empty RSSI series.")
        return Rssi(np.mean([float(v) for v in series]))
    if reduction == "kalman":
        return kalman.kalman_smooth(series, kalman_params)[-1]
    raise locus_errors.ConfigInvalid("Error! Unknown reduction %r (choose one of %s)" %
                                     (reduction, ", ".join(REDUCTIONS)))


def group_streams(records, require_labels=True):
    """
    :param records: list of RawScanRecord
    :param require_labels: bool, raise MissingPositionLabel on unlabeled records
    :returns: dict position (or None) -> dict anchor_id -> list of (seq, Rssi), each list sorted by seq
    """
    groups = {}
    for record in records:
        if record.position is None and require_labels:
            raise locus_errors.MissingPositionLabel("Error! Record seq=%d from anchor %s has no position label." %
                                                    (record.sequence_number, record.anchor_id))
        anchors = groups.setdefault(record.position, {})
        anchors.setdefault(record.anchor_id, []).append((record.sequence_number, record.rssi))
    for anchors in groups.values():
        for anchor_id in anchors:
            anchors[anchor_id] = sorted(anchors[anchor_id], key=lambda item: item[0])
    return groups


def _reduce_groups(groups, window, reduction, kalman_params):
    scans = []
    for position, anchors in groups.items():
        scan = ScanVector([(anchor_id, reduce_stream([v for _, v in stream], window, reduction, kalman_params))
                           for anchor_id, stream in sorted(anchors.items())])
        scans.append((position, scan))
    return scans


def aggregate_scans(records, window=DEFAULT_WINDOW, reduction="final", kalman_params=kalman.KalmanParams()):
    """
    Group labeled records by position then anchor and reduce each anchor stream to one value.

    :param records: list of RawScanRecord, all carrying position labels
    :param window: int, moving-average window
    :param reduction: 'final', 'mean', or 'kalman'
    :returns: list of (Position, ScanVector), positions in order of first appearance
    """
    return _reduce_groups(group_streams(records, require_labels=True), window, reduction, kalman_params)


def query_scans(records, window=DEFAULT_WINDOW, reduction="final", kalman_params=kalman.KalmanParams()):
    """
    Group test-time records into scans: labeled records by position, unlabeled records into a single scan.

    :returns: list of (Position or None, ScanVector)
    """
    return _reduce_groups(group_streams(records, require_labels=False), window, reduction, kalman_params)


def survey_scans(records, window=DEFAULT_WINDOW):
    """
    Regroup labeled records into individual scans after per-anchor moving averaging.
    Readings sharing a sequence number at a position form one scan.

    :returns: list of (Position, list of ScanVector), the input of build_database
    """
    surveys = []
    for position, anchors in group_streams(records, require_labels=True).items():
        by_seq = {}
        for anchor_id, stream in sorted(anchors.items()):
            smoothed = moving_average([v for _, v in stream], window)
            for (seq, _), value in zip(stream, smoothed):
                readings = by_seq.setdefault(seq, [])
                if anchor_id in (a for a, _ in readings):
                    raise locus_errors.DuplicateAnchor("Error! Anchor %s read twice in scan seq=%d at %s" %
                                                       (anchor_id, seq, position))
                readings.append((anchor_id, value))
        surveys.append((position, [ScanVector(by_seq[seq]) for seq in sorted(by_seq)]))
    return surveys
