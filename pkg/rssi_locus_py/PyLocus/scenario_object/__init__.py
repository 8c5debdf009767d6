from . import scenario_config
from . import synthesize
from . import oracles
