from . import locus_errors
from . import locus_collections
from . import io_tables
from . import configure_locus
from . import cli_utilities
from . import pathloss_object
from . import trilateration_object
from . import fingerprint_object
from . import ingest_object
from . import evaluation_object
from . import scenario_object
