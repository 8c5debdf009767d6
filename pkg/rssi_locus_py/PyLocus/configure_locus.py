# Configures a localization or evaluation run

import os
import configparser
from . import locus_errors
from .fingerprint_object import knn, naive_bayes
from .ingest_object import preprocessing
from .trilateration_object import kalman

TECHNIQUE_FLAGS = ("trilat", "knn", "bayes")


class Params:
    """
    k and variance_floor drive the fingerprint estimators. window and reduction control how raw scan streams
    become one reading per anchor; trilateration streams use trilat_reduction (Kalman by default).
    """

    def __init__(self, config_file=None, technique="knn", k=knn.DEFAULT_K, window=preprocessing.DEFAULT_WINDOW,
                 reduction="final", trilat_reduction="kalman", kalman_q=0.008, kalman_r=4.0, kalman_p0=1.0,
                 variance_floor=naive_bayes.VARIANCE_FLOOR, scenario_name="", technology=""):
        self.config_file = config_file  # string, filename
        self.technique = technique  # string, trilat, knn, or bayes
        self.k = k  # int, number of neighbors
        self.window = window  # int, moving-average window in readings
        self.reduction = reduction  # string, final, mean, or kalman
        self.trilat_reduction = trilat_reduction  # string, reduction applied to trilateration streams
        self.kalman_q = kalman_q  # float, dB^2
        self.kalman_r = kalman_r  # float, dB^2
        self.kalman_p0 = kalman_p0  # float, dB^2
        self.variance_floor = variance_floor  # float, dB^2
        self.scenario_name = scenario_name  # string, report metadata
        self.technology = technology  # string, report metadata
        if self.technique not in TECHNIQUE_FLAGS:
            raise locus_errors.ConfigInvalid("Error! Unknown technique %r (choose one of %s)" %
                                             (self.technique, ", ".join(TECHNIQUE_FLAGS)))
        for reduction_name in (self.reduction, self.trilat_reduction):
            if reduction_name not in preprocessing.REDUCTIONS:
                raise locus_errors.ConfigInvalid("Error! Unknown reduction %r (choose one of %s)" %
                                                 (reduction_name, ", ".join(preprocessing.REDUCTIONS)))
        if int(self.window) != self.window or self.window < 1:
            raise locus_errors.ConfigInvalid("Error! Moving-average window must be a positive integer.")
        if not self.variance_floor > 0:
            raise locus_errors.ConfigInvalid("Error! Variance floor must be > 0 dB^2.")
        self.knn_config = knn.KnnConfig(self.k)
        self.kalman_params = kalman.KalmanParams(self.kalman_q, self.kalman_r, self.kalman_p0)

    def print_summary(self):
        print("Configuring with the following Params:")
        print("  -Config file: %s " % str(self.config_file))
        print("  -Technique: %s, k=%d " % (self.technique, self.k))
        print("  -Moving-average window: %d readings, reduction: %s " % (self.window, self.reduction))
        print("  -Trilateration reduction: %s, Kalman q=%g r=%g p0=%g " % (self.trilat_reduction, self.kalman_q,
                                                                           self.kalman_r, self.kalman_p0))
        print("  -Bayes variance floor: %g dB^2 " % self.variance_floor)
        return

    def write_params_into_config(self, outfile):
        """
        Write an output file from the param object. First you must unpack Params into a ConfigParser.
        """
        configobj = configparser.ConfigParser()
        configobj.optionxform = str
        configobj["locate-config"] = {}
        locateconfig = configobj["locate-config"]
        locateconfig["technique"] = self.technique
        locateconfig["k"] = str(self.k)
        locateconfig["window"] = str(self.window)
        locateconfig["reduction"] = self.reduction
        locateconfig["trilat_reduction"] = self.trilat_reduction
        locateconfig["kalman_q"] = repr(float(self.kalman_q))
        locateconfig["kalman_r"] = repr(float(self.kalman_r))
        locateconfig["kalman_p0"] = repr(float(self.kalman_p0))
        locateconfig["variance_floor"] = repr(float(self.variance_floor))
        locateconfig["scenario_name"] = self.scenario_name
        locateconfig["technology"] = self.technology
        print("Writing file %s " % outfile)
        with open(outfile, 'w') as ofile:
            configobj.write(ofile)
        return

    def modify_params_object(self, technique=None, k=None, window=None, reduction=None, trilat_reduction=None,
                             kalman_q=None, kalman_r=None, kalman_p0=None, variance_floor=None, scenario_name=None,
                             technology=None):
        """
        Set the fields in a Params object. By default, none of the properties will be altered.
        """
        return Params(config_file=self.config_file,
                      technique=self.technique if technique is None else technique,
                      k=self.k if k is None else k,
                      window=self.window if window is None else window,
                      reduction=self.reduction if reduction is None else reduction,
                      trilat_reduction=self.trilat_reduction if trilat_reduction is None else trilat_reduction,
                      kalman_q=self.kalman_q if kalman_q is None else kalman_q,
                      kalman_r=self.kalman_r if kalman_r is None else kalman_r,
                      kalman_p0=self.kalman_p0 if kalman_p0 is None else kalman_p0,
                      variance_floor=self.variance_floor if variance_floor is None else variance_floor,
                      scenario_name=self.scenario_name if scenario_name is None else scenario_name,
                      technology=self.technology if technology is None else technology)


def configure_localization(config_file):
    if not os.path.isfile(config_file):
        raise FileNotFoundError("Error! Config file %s not found." % config_file)
    configobj = configparser.ConfigParser()
    configobj.optionxform = str  # make the config file case-sensitive
    try:
        configobj.read(config_file)
        section = 'locate-config'
        defaults = Params()
        MyParams = Params(config_file=config_file,
                          technique=configobj.get(section, 'technique', fallback=defaults.technique),
                          k=configobj.getint(section, 'k', fallback=defaults.k),
                          window=configobj.getint(section, 'window', fallback=defaults.window),
                          reduction=configobj.get(section, 'reduction', fallback=defaults.reduction),
                          trilat_reduction=configobj.get(section, 'trilat_reduction',
                                                         fallback=defaults.trilat_reduction),
                          kalman_q=configobj.getfloat(section, 'kalman_q', fallback=defaults.kalman_q),
                          kalman_r=configobj.getfloat(section, 'kalman_r', fallback=defaults.kalman_r),
                          kalman_p0=configobj.getfloat(section, 'kalman_p0', fallback=defaults.kalman_p0),
                          variance_floor=configobj.getfloat(section, 'variance_floor',
                                                            fallback=defaults.variance_floor),
                          scenario_name=configobj.get(section, 'scenario_name', fallback=""),
                          technology=configobj.get(section, 'technology', fallback=""))
    except configparser.Error as e:
        raise locus_errors.ConfigInvalid("Error! Invalid config file %s: %s" % (config_file, e))
    except locus_errors.LocusError:
        raise
    except ValueError as e:
        raise locus_errors.ConfigInvalid("Error! Invalid value in config file %s: %s" % (config_file, e))
    MyParams.print_summary()
    return MyParams


def write_valid_config_file(directory):
    config_filename = os.path.join(directory, "my_locate_config.txt")
    Params().write_params_into_config(config_filename)
    return config_filename
