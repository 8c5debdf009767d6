"""
Configuration of a synthetic room: geometry, anchors with their true path-loss, noise, and fingerprint layout.

Scenario config files are configparser text:

[scenario-config]
name = scenario1
technology = Zigbee
room_width = 6.0
room_height = 5.5
layout = dense-grid
grid_spacing = 0.5
region = 1.5 4.5 1.5 4.5
shadowing_sigma = 2.0
test_point_count = 10
scans_per_fingerprint = 100
test_scans_per_point = 1
seed = 42

[anchors]
A1 = 1.0 0.75 2.935 -50.33

Each anchor line is: x_m y_m exponent_n intercept_c [r_squared].
region is x_min x_max y_min y_max, the part of the room that is fingerprinted and tested.
"""

import os
import configparser
from dataclasses import dataclass
import numpy as np
from .. import locus_errors
from ..locus_collections import Anchor, AnchorSet, Position
from ..pathloss_object import presets
from ..pathloss_object.pathloss_model import PathLossModel

LAYOUTS = ("dense-grid", "sparse-grid", "alternating")


@dataclass(frozen=True)
class Region:
    x_min: float  # meters
    x_max: float
    y_min: float
    y_max: float

    def contains(self, position) -> bool:
        return self.x_min <= position.x <= self.x_max and self.y_min <= position.y <= self.y_max


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    room_width: float  # meters
    room_height: float  # meters
    anchors: AnchorSet
    models: dict  # anchor_id -> PathLossModel, the true propagation of the room
    shadowing_sigma: float  # dB
    grid_spacing: float  # meters
    layout: str  # dense-grid, sparse-grid, or alternating
    region: Region
    test_point_count: int = 10
    seed: int = 0
    scans_per_fingerprint: int = 100
    test_scans_per_point: int = 1
    technology: str = ""

    def __post_init__(self):
        if not (self.room_width > 0 and self.room_height > 0):
            raise locus_errors.ConfigInvalid("Error! Room dimensions must be positive, got %s x %s" %
                                             (self.room_width, self.room_height))
        for anchor in self.anchors:
            if not self.inside_room(anchor.position):
                raise locus_errors.ConfigInvalid("Error! Anchor %s at %s is outside the %s x %s m room" %
                                                 (anchor.id, anchor.position, self.room_width, self.room_height))
            if anchor.id not in self.models:
                raise locus_errors.ConfigInvalid("Error! Anchor %s has no path-loss model" % anchor.id)
        if not np.isfinite(self.shadowing_sigma) or self.shadowing_sigma < 0:
            raise locus_errors.ConfigInvalid("Error! Shadowing sigma must be >= 0 dB, got %s" % self.shadowing_sigma)
        if not (self.grid_spacing > 0):
            raise locus_errors.ConfigInvalid("Error! Grid spacing must be > 0 m, got %s" % self.grid_spacing)
        if self.layout not in LAYOUTS:
            raise locus_errors.ConfigInvalid("Error! Unknown layout %r (choose one of %s)" %
                                             (self.layout, ", ".join(LAYOUTS)))
        r = self.region
        if not (0 <= r.x_min <= r.x_max <= self.room_width and 0 <= r.y_min <= r.y_max <= self.room_height):
            raise locus_errors.ConfigInvalid("Error! Region %s is not inside the room" % (r,))
        for name in ('test_point_count', 'scans_per_fingerprint', 'test_scans_per_point'):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise locus_errors.ConfigInvalid("Error! %s must be a positive integer, got %s" % (name, value))

    def inside_room(self, position) -> bool:
        return 0 <= position.x <= self.room_width and 0 <= position.y <= self.room_height

    def print_summary(self):
        print("Scenario %s: %.2f x %.2f m room, %d anchors, layout %s at %.2f m, sigma %.1f dB, seed %d" %
              (self.name, self.room_width, self.room_height, len(self.anchors), self.layout, self.grid_spacing,
               self.shadowing_sigma, self.seed))
        return


# Approximate layouts of the three survey rooms. Anchor coordinates are plausible placements, not measured ones.
REPLICAS = {
    1: dict(name="scenario1", room_width=6.0, room_height=5.5, layout="dense-grid", grid_spacing=0.5,
            region=Region(1.5, 4.5, 1.5, 4.5), shadowing_sigma=2.0, test_point_count=10,
            anchors=(("A1", 1.0, 0.75), ("A2", 5.0, 0.75), ("A3", 1.0, 4.75))),
    2: dict(name="scenario2", room_width=5.8, room_height=5.3, layout="sparse-grid", grid_spacing=1.1,
            region=Region(1.0, 4.3, 1.0, 4.3), shadowing_sigma=4.0, test_point_count=6,
            anchors=(("A1", 0.5, 0.5), ("A2", 5.3, 0.5), ("A3", 2.9, 4.8))),
    3: dict(name="scenario3", room_width=10.8, room_height=7.3, layout="alternating", grid_spacing=0.9,
            region=Region(3.4, 7.45, 0.5, 6.8), shadowing_sigma=3.0, test_point_count=16,
            anchors=(("A1", 2.0, 0.5), ("A2", 9.0, 0.5), ("A3", 5.4, 6.9))),
}


def replica_config(scenario_number, technology="Zigbee", sigma=None, seed=42, test_point_count=None) -> ScenarioConfig:
    """
    Synthetic replica of one of the three survey rooms, every anchor using that room's fitted path-loss parameters.

    :param scenario_number: 1, 2, or 3
    :param technology: 'Zigbee', 'BLE', or 'WiFi'
    :param sigma: shadowing sigma in dB; default is the room's interference level (2, 4, 3 dB)
    """
    if scenario_number not in REPLICAS:
        raise locus_errors.ConfigInvalid("Error! No replica for scenario %s (choose 1, 2, or 3)." % scenario_number)
    replica = REPLICAS[scenario_number]
    model = presets.get_room_model(scenario_number, technology)
    anchors = AnchorSet([Anchor(a_id, Position(x, y)) for a_id, x, y in replica["anchors"]])
    return ScenarioConfig(name=replica["name"], room_width=replica["room_width"], room_height=replica["room_height"],
                          anchors=anchors, models={a.id: model for a in anchors},
                          shadowing_sigma=replica["shadowing_sigma"] if sigma is None else sigma,
                          grid_spacing=replica["grid_spacing"], layout=replica["layout"], region=replica["region"],
                          test_point_count=replica["test_point_count"] if test_point_count is None
                          else test_point_count, seed=seed, technology=technology)


def modify_scenario_config(config, seed=None, sigma=None, test_point_count=None) -> ScenarioConfig:
    """Copy of the config with some fields replaced. By default nothing is altered."""
    return ScenarioConfig(name=config.name, room_width=config.room_width, room_height=config.room_height,
                          anchors=config.anchors, models=config.models,
                          shadowing_sigma=config.shadowing_sigma if sigma is None else sigma,
                          grid_spacing=config.grid_spacing, layout=config.layout, region=config.region,
                          test_point_count=config.test_point_count if test_point_count is None
                          else test_point_count, seed=config.seed if seed is None else seed,
                          scans_per_fingerprint=config.scans_per_fingerprint,
                          test_scans_per_point=config.test_scans_per_point, technology=config.technology)


def _parse_anchor_line(anchor_id, text):
    fields = text.split()
    if len(fields) not in (4, 5):
        raise locus_errors.ConfigInvalid("Error! Anchor %s needs 'x y n C [R2]', got %r" % (anchor_id, text))
    try:
        values = [float(f) for f in fields]
        model = PathLossModel(exponent_n=values[2], intercept_c=values[3],
                              r_squared=values[4] if len(values) == 5 else 1.0)
        anchor = Anchor(anchor_id, Position(values[0], values[1]))
    except ValueError as e:
        raise locus_errors.ConfigInvalid("Error! Bad anchor line %s = %r: %s" % (anchor_id, text, e))
    return anchor, model


def read_scenario_config(config_file) -> ScenarioConfig:
    if not os.path.isfile(config_file):
        raise FileNotFoundError("Error! Scenario config file %s not found." % config_file)
    print("Reading scenario config %s " % config_file)
    configobj = configparser.ConfigParser()
    configobj.optionxform = str  # make the config file case-sensitive
    try:
        configobj.read(config_file)
        section = 'scenario-config'
        region = [float(v) for v in configobj.get(section, 'region').split()]
        if len(region) != 4:
            raise locus_errors.ConfigInvalid("Error! region needs x_min x_max y_min y_max")
        anchors, models = [], {}
        for anchor_id, text in configobj.items('anchors'):
            anchor, model = _parse_anchor_line(anchor_id, text)
            anchors.append(anchor)
            models[anchor_id] = model
        config = ScenarioConfig(
            name=configobj.get(section, 'name'),
            room_width=configobj.getfloat(section, 'room_width'),
            room_height=configobj.getfloat(section, 'room_height'),
            anchors=AnchorSet(anchors), models=models,
            shadowing_sigma=configobj.getfloat(section, 'shadowing_sigma'),
            grid_spacing=configobj.getfloat(section, 'grid_spacing'),
            layout=configobj.get(section, 'layout'),
            region=Region(*region),
            test_point_count=configobj.getint(section, 'test_point_count'),
            seed=configobj.getint(section, 'seed'),
            scans_per_fingerprint=configobj.getint(section, 'scans_per_fingerprint', fallback=100),
            test_scans_per_point=configobj.getint(section, 'test_scans_per_point', fallback=1),
            technology=configobj.get(section, 'technology', fallback=""))
    except (configparser.Error, locus_errors.DomainError) as e:
        raise locus_errors.ConfigInvalid("Error! Invalid scenario config %s: %s" % (config_file, e))
    except locus_errors.InputError:
        raise
    except ValueError as e:
        raise locus_errors.ConfigInvalid("Error! Invalid value in scenario config %s: %s" % (config_file, e))
    config.print_summary()
    return config


def write_scenario_config(config, outfile):
    configobj = configparser.ConfigParser()
    configobj.optionxform = str
    configobj["scenario-config"] = {}
    scenario = configobj["scenario-config"]
    scenario["name"] = config.name
    scenario["technology"] = config.technology
    scenario["room_width"] = repr(float(config.room_width))
    scenario["room_height"] = repr(float(config.room_height))
    scenario["layout"] = config.layout
    scenario["grid_spacing"] = repr(float(config.grid_spacing))
    scenario["region"] = " ".join(repr(float(v)) for v in (config.region.x_min, config.region.x_max,
                                                           config.region.y_min, config.region.y_max))
    scenario["shadowing_sigma"] = repr(float(config.shadowing_sigma))
    scenario["test_point_count"] = str(config.test_point_count)
    scenario["scans_per_fingerprint"] = str(config.scans_per_fingerprint)
    scenario["test_scans_per_point"] = str(config.test_scans_per_point)
    scenario["seed"] = str(config.seed)
    configobj["anchors"] = {}
    for anchor in config.anchors:
        model = config.models[anchor.id]
        configobj["anchors"][anchor.id] = "%r %r %r %r %r" % (anchor.position.x, anchor.position.y, model.exponent_n,
                                                              model.intercept_c, model.r_squared)
    print("Writing file %s " % outfile)
    with open(outfile, 'w') as ofile:
        configobj.write(ofile)
    return


def write_valid_config_file(directory, scenario_number=1, technology="Zigbee"):
    config_filename = os.path.join(directory, "my_scenario_config.txt")
    write_scenario_config(replica_config(scenario_number, technology), config_filename)
    return config_filename
