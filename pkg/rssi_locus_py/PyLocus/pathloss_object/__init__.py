from . import pathloss_model
from . import io_pathloss
from . import presets
