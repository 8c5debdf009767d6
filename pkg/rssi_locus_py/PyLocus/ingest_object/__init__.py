from . import io_scan_log
from . import preprocessing
from . import io_anchors
