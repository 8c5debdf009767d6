"""
Path-loss parameters fitted in the three survey rooms, per radio technology.
Keys: room number (1: small/low interference, 2: small/high interference, 3: lab/average interference),
then technology label. Values are (exponent_n, intercept_c, r_squared).
"""

from .. import locus_errors
from .pathloss_model import PathLossModel

TECHNOLOGIES = ("Zigbee", "BLE", "WiFi")

ROOM_PATH_LOSS = {
    1: {"Zigbee": (2.935, -50.33, 0.9051), "BLE": (2.271, -75.48, 0.85), "WiFi": (2.162, -45.73, 0.7177)},
    2: {"Zigbee": (1.912, -52.73, 0.7689), "BLE": (1.999, -62.27, 0.9274), "WiFi": (2.018, -37.37, 0.7091)},
    3: {"Zigbee": (2.085, -48.52, 0.9006), "BLE": (2.442, -62.5, 0.9317), "WiFi": (2.563, -33.75, 0.9294)},
}


def get_room_model(room, technology) -> PathLossModel:
    if room not in ROOM_PATH_LOSS:
        raise locus_errors.ConfigInvalid("Error! No path-loss parameters for room %s (choose 1, 2, or 3)." % room)
    if technology not in ROOM_PATH_LOSS[room]:
        raise locus_errors.ConfigInvalid("Error! Unknown technology %s (choose one of %s)." %
                                         (technology, ", ".join(TECHNOLOGIES)))
    n, c, r2 = ROOM_PATH_LOSS[room][technology]
    return PathLossModel(exponent_n=n, intercept_c=c, r_squared=r2)
