"""
Read/write the canonical scan CSV:

seq,anchor_id,rssi_dbm,x_m,y_m,tech

x_m,y_m are blank for unlabeled (test-time) scans; tech is an optional technology label.
UTF-8, '.' decimal separator, LF line endings. Every row parses or raises an error naming its line.
"""

from dataclasses import dataclass
from typing import Optional
from .. import locus_errors
from ..locus_collections import Position, Rssi

SCAN_LOG_COLUMNS = ["seq", "anchor_id", "rssi_dbm", "x_m", "y_m", "tech"]


@dataclass(frozen=True)
class RawScanRecord:
    sequence_number: int
    anchor_id: str
    rssi: Rssi  # dBm
    position: Optional[Position] = None  # ground-truth label, meters
    technology: Optional[str] = None  # e.g. 'Zigbee', 'BLE', 'WiFi'


def _parse_row(fields, line_no) -> RawScanRecord:
    if len(fields) != len(SCAN_LOG_COLUMNS):
        raise locus_errors.MalformedRow("Error! Expected %d fields, found %d" % (len(SCAN_LOG_COLUMNS), len(fields)),
                                        line_no)
    seq, anchor_id, rssi, x, y, tech = [f.strip() for f in fields]
    try:
        seq = int(seq)
    except ValueError:
        raise locus_errors.MalformedRow("Error! Bad sequence number %r" % seq, line_no)
    if anchor_id == "":
        raise locus_errors.MalformedRow("Error! Empty anchor id", line_no)
    rssi = Rssi(rssi, line_no)
    if x == "" and y == "":
        position = None
    elif x == "" or y == "":
        raise locus_errors.MalformedRow("Error! Position label needs both x_m and y_m", line_no)
    else:
        try:
            position = Position(float(x), float(y))
        except ValueError:
            raise locus_errors.MalformedRow("Error! Bad position label %r,%r" % (x, y), line_no)
    return RawScanRecord(sequence_number=seq, anchor_id=anchor_id, rssi=rssi, position=position,
                         technology=tech if tech != "" else None)


def parse_scan_log(lines):
    """
    :param lines: iterable of text lines (an open file works), header first
    :returns: list of RawScanRecord
    """
    records = []
    line_iter = iter(lines)
    header = next(line_iter, None)
    if header is None:
        raise locus_errors.MalformedRow("Error! Empty scan log, expected header %s" % ",".join(SCAN_LOG_COLUMNS), 1)
    columns = [c.strip() for c in header.rstrip('\r\n').split(',')]
    if columns != SCAN_LOG_COLUMNS:
        raise locus_errors.UnknownColumns("Error! Expected columns %s, found %s" %
                                          (",".join(SCAN_LOG_COLUMNS), ",".join(columns)), 1)
    for line_no, line in enumerate(line_iter, start=2):
        line = line.rstrip('\r\n')
        if line.strip() == "":
            continue
        records.append(_parse_row(line.split(','), line_no))
    return records


def read_scan_log(filename):
    print("Reading scan log %s " % filename)
    with open(filename, 'r', encoding='utf-8') as ifile:
        records = parse_scan_log(ifile)
    print("--> Read %d RSSI records " % len(records))
    return records


def format_record(record) -> str:
    x = repr(record.position.x) if record.position is not None else ""
    y = repr(record.position.y) if record.position is not None else ""
    tech = record.technology if record.technology is not None else ""
    return "%d,%s,%s,%s,%s,%s" % (record.sequence_number, record.anchor_id, repr(float(record.rssi)), x, y, tech)


def write_scan_log(records, filename):
    """Write records in the canonical form (shortest round-trip float text)."""
    print("Writing file %s " % filename)
    with open(filename, 'w', encoding='utf-8', newline='\n') as ofile:
        ofile.write(",".join(SCAN_LOG_COLUMNS) + "\n")
        for record in records:
            ofile.write(format_record(record) + "\n")
    return
