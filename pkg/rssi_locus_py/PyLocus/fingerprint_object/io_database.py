"""
Read/write the fingerprint database text format:

rssi-locus-db v1
x,y,anchor_id:mean:variance:count,anchor_id:mean:variance:count,...

Floats are written with 17 significant digits so a write/read cycle is bit-exact.
Anchor positions are not part of the format; reading needs the deployment's AnchorSet.
"""

from .. import locus_errors
from ..locus_collections import Position
from .fingerprint_db import AnchorStats, Fingerprint, FingerprintDatabase

DB_HEADER = "rssi-locus-db v1"


def _check_id(anchor_id):
    if ',' in anchor_id or ':' in anchor_id:
        raise locus_errors.DatabaseFormatError("Error! Anchor id %r contains a reserved separator" % anchor_id)
    return anchor_id


def format_fingerprint(fp) -> str:
    fields = ["%.17g" % fp.position.x, "%.17g" % fp.position.y]
    for anchor_id, s in fp.stats.items():
        fields.append("%s:%.17g:%.17g:%d" % (_check_id(anchor_id), s.mean, s.variance, s.sample_count))
    return ",".join(fields)


def write_database(db, filename):
    """
    :param db: FingerprintDatabase
    :param filename: string
    """
    print("Writing file %s " % filename)
    with open(filename, 'w', newline='\n') as ofile:
        ofile.write(DB_HEADER + "\n")
        for fp in db:
            ofile.write(format_fingerprint(fp) + "\n")
    return


def parse_fingerprint(line, line_no) -> Fingerprint:
    fields = line.split(',')
    if len(fields) < 3:
        raise locus_errors.DatabaseFormatError("Error! A fingerprint line needs x, y, and one anchor field", line_no)
    try:
        position = Position(float(fields[0]), float(fields[1]))
    except ValueError:
        raise locus_errors.DatabaseFormatError("Error! Bad position %s,%s" % (fields[0], fields[1]), line_no)
    stats = {}
    for field in fields[2:]:
        parts = field.split(':')
        if len(parts) != 4:
            raise locus_errors.DatabaseFormatError("Error! Bad anchor field %r" % field, line_no)
        anchor_id = parts[0]
        if anchor_id in stats:
            raise locus_errors.DatabaseFormatError("Error! Anchor %s repeated" % anchor_id, line_no)
        try:
            stats[anchor_id] = AnchorStats(mean=float(parts[1]), variance=float(parts[2]), sample_count=int(parts[3]))
        except ValueError:
            raise locus_errors.DatabaseFormatError("Error! Bad anchor statistics %r" % field, line_no)
    return Fingerprint(position, stats)


def read_database(filename, anchor_set) -> FingerprintDatabase:
    """
    :param filename: string
    :param anchor_set: AnchorSet every fingerprint is validated against
    """
    print("Reading fingerprint database %s " % filename)
    fingerprints = []
    with open(filename, 'r') as ifile:
        header = ifile.readline().rstrip('\n')
        if header != DB_HEADER:
            raise locus_errors.DatabaseFormatError("Error! Expected header %r, found %r" % (DB_HEADER, header), 1)
        for line_no, line in enumerate(ifile, start=2):
            line = line.rstrip('\n')
            if line.strip() == "":
                continue
            fingerprints.append(parse_fingerprint(line, line_no))
    db = FingerprintDatabase(anchor_set, fingerprints)
    print("--> Read %d fingerprints " % db.size)
    return db
