from . import compute_errors
from . import benchmark
from . import output_manager
