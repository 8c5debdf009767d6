from . import kalman
from . import trilateration
