"""
The vqss decoding module.

Handles decoding experiment configs and density matrix files.

Attributes:
    CONFIG_TYPES: Value type of every accepted config key.
    REQUIRED_KEYS: Keys a config must define.

"""
import logging

import numpy as np

from ..errors import vqss_errors
from ..experiment import ExperimentConfig
from ..linalg.states import DensityMatrix


CONFIG_TYPES = {
    'model': str,
    'sites': int,
    'v': float,
    'g': float,
    'jx': float,
    'jy': float,
    'jz': float,
    'hx': float,
    'hy': float,
    'hz': float,
    'gamma': float,
    'ancillas': int,
    'layers': int,
    'seed': int,
    'restarts': int,
    'max_iter_multiplier': int,
    'max_evaluations': int,
    'fidelity_log_stride': int,
    'xatol': float,
    'fatol': float,
    'restart_from_incumbent': bool,
    'workers': int,
    'output_dir': str,
}

REQUIRED_KEYS = ('model', 'sites', 'gamma')

COEFFICIENT_KEYS = ('v', 'g', 'jx', 'jy', 'jz', 'hx', 'hy', 'hz')

TRUE_WORDS = ('true', 'yes', 'on', '1')
FALSE_WORDS = ('false', 'no', 'off', '0')


class VqssDecoder:
    """
    The vqss decoding class.

    Turns config text into an ExperimentConfig and density matrix
    dictionaries into DensityMatrix instances.
    """

    def __init__(self):
        """
        Initialize VqssDecoder.

        Initializes the VqssDecoder class.
        """
        self.vqss_log = logging.getLogger(__name__)
        self.vqss_log.addHandler(logging.NullHandler())

    def _convert(self, key, raw, line_number):
        kind = CONFIG_TYPES[key]
        if kind is bool:
            word = raw.lower()
            if word in TRUE_WORDS:
                return True
            if word in FALSE_WORDS:
                return False
            raise vqss_errors.InvalidConfigException(
                "key '{}' expects a boolean, got '{}'".format(key, raw), line=line_number)
        try:
            return kind(raw)
        except ValueError:
            raise vqss_errors.InvalidConfigException(
                "key '{}' expects {}, got '{}'".format(key, kind.__name__, raw), line=line_number)

    def parse_config(self, text):
        """
        Parse config text into typed key values.

        Args:
            text: the config file contents.

        Returns:
            Tuple of (values, line_numbers) dictionaries keyed by config key.

        Raises:
            InvalidConfigException: malformed line, unknown key, duplicate
                key or value of the wrong type.

        """
        values = {}
        line_numbers = {}
        for line_number, line in enumerate(text.splitlines(), start=1):
            content = line.split('#', 1)[0].strip()
            if not content:
                continue
            if '=' not in content:
                raise vqss_errors.InvalidConfigException(
                    "expected 'key = value', got '{}'".format(content), line=line_number)
            key, raw = (part.strip() for part in content.split('=', 1))
            if key not in CONFIG_TYPES:
                raise vqss_errors.InvalidConfigException(
                    "unknown key '{}'".format(key), line=line_number)
            if key in values:
                raise vqss_errors.InvalidConfigException(
                    "duplicate key '{}' (first set on line {})".format(key, line_numbers[key]),
                    line=line_number)
            if not raw:
                raise vqss_errors.InvalidConfigException(
                    "key '{}' has no value".format(key), line=line_number)
            values[key] = self._convert(key, raw, line_number)
            line_numbers[key] = line_number
        return values, line_numbers

    def decode_config(self, text, overrides=None):
        """
        Decode an experiment config.

        Parses the key value text, applies the overrides and validates the
        result. Validation errors name the line of the offending key when
        it was read from the text.

        Args:
            text: the config file contents.
            overrides: dictionary of keys replacing parsed values, None
                entries are ignored. (default: {None})

        Returns:
            ExperimentConfig.

        Raises:
            InvalidConfigException: the config is malformed or invalid.

        """
        values, line_numbers = self.parse_config(text)
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value
                line_numbers.pop(key, None)

        for key in REQUIRED_KEYS:
            if key not in values:
                raise vqss_errors.InvalidConfigException("missing required key '{}'".format(key))

        coefficients = {key: values.pop(key) for key in COEFFICIENT_KEYS if key in values}
        try:
            config = ExperimentConfig(coefficients=coefficients, **values)
        except vqss_errors.InvalidConfigException as e:
            line = line_numbers.get(e.key)
            if line is None:
                raise
            raise vqss_errors.InvalidConfigException(e.detail, line=line, key=e.key)

        self.vqss_log.debug("Config decoded: {}".format(config.as_dict()))
        return config

    def decode_density_matrix(self, json_data):
        """
        Decode a density matrix dictionary.

        Args:
            json_data: dictionary with keys "n", "re" and "im".

        Returns:
            DensityMatrix, not validated beyond shape.

        Raises:
            InvalidMatrixException: keys are missing or the parts do not
                form a 2**n square matrix.

        """
        try:
            n = int(json_data['n'])
            real = np.array(json_data['re'], dtype=np.float64)
            imag = np.array(json_data['im'], dtype=np.float64)
        except (KeyError, TypeError, ValueError) as e:
            raise vqss_errors.InvalidMatrixException(
                "malformed density matrix document: {}".format(e))
        dimension = 2 ** n
        if real.shape != (dimension, dimension) or imag.shape != (dimension, dimension):
            raise vqss_errors.InvalidMatrixException(
                "expected {0}x{0} parts for n={1}, got {2} and {3}".format(
                    dimension, n, real.shape, imag.shape))
        matrix = np.empty((dimension, dimension), dtype=complex)
        matrix.real = real
        matrix.imag = imag
        return DensityMatrix(matrix, validate=False)
