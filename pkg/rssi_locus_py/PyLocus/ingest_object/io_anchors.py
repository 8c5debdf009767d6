"""
Anchor positions file: anchor_id,x_m,y_m
"""

from .. import locus_errors, io_tables
from ..locus_collections import Anchor, AnchorSet, Position

ANCHOR_COLUMNS = ["anchor_id", "x_m", "y_m"]


def read_anchors(filename) -> AnchorSet:
    table = io_tables.read_table(filename, ANCHOR_COLUMNS)
    anchors = []
    for i, row in enumerate(table.itertuples(index=False)):
        try:
            anchors.append(Anchor(row.anchor_id.strip(), Position(float(row.x_m), float(row.y_m))))
        except ValueError:
            raise locus_errors.MalformedRow("Error! Bad anchor row %s,%s,%s" % (row.anchor_id, row.x_m, row.y_m),
                                            i + 2)
    print("--> Read %d anchors " % len(anchors))
    return AnchorSet(anchors)


def write_anchors(anchor_set, filename):
    print("Writing file %s " % filename)
    with open(filename, 'w', newline='\n') as ofile:
        ofile.write(",".join(ANCHOR_COLUMNS) + "\n")
        for anchor in anchor_set:
            ofile.write("%s,%.17g,%.17g\n" % (anchor.id, anchor.position.x, anchor.position.y))
    return
