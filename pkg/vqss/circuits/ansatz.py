"""
The ansatz module.

Stores the layered circuit shape and its parameter vector, and builds the
purification state U(theta)|0...0>.

Parameters are laid out layer-major, then qubit, then the four angles of
that qubit: the Rz, Rx, Rz rotation angles and the angle of the CRY gate the
qubit controls.
"""
import logging

import numpy as np

from ..errors import vqss_errors
from ..linalg.states import StateVector
from . import gates


PARAMS_PER_QUBIT = 4


class AnsatzConfig:
    """
    Shape of the layered circuit.

    n_system system qubits followed by m_ancilla ancillas, repeated over
    `layers` blocks of rotations and a CRY ring.
    """

    def __init__(self, n_system, m_ancilla, layers):
        """
        Initialize the AnsatzConfig class.

        Args:
            n_system: number of system qubits, at least 1.
            m_ancilla: number of ancilla qubits, 0 <= m_ancilla <= n_system.
            layers: number of repeated blocks, at least 1.

        Raises:
            InvalidAnsatzConfigException: invariants do not hold.

        """
        self.vqss_log = logging.getLogger(__name__)
        self.vqss_log.addHandler(logging.NullHandler())
        if n_system < 1:
            raise vqss_errors.InvalidAnsatzConfigException(
                "n_system must be positive, got {}".format(n_system))
        if not 0 <= m_ancilla <= n_system:
            raise vqss_errors.InvalidAnsatzConfigException(
                "m_ancilla must be in [0, n_system={}], got {}".format(n_system, m_ancilla))
        if layers < 1:
            raise vqss_errors.InvalidAnsatzConfigException(
                "layers must be positive, got {}".format(layers))
        self.n_system = int(n_system)
        self.m_ancilla = int(m_ancilla)
        self.layers = int(layers)

    @property
    def total_qubits(self):
        """Return N = n_system + m_ancilla."""
        return self.n_system + self.m_ancilla

    def param_count(self):
        """Return 4 * layers * total_qubits."""
        return param_count(self)

    def __eq__(self, other):
        """Compare shapes."""
        return (isinstance(other, AnsatzConfig)
                and (self.n_system, self.m_ancilla, self.layers)
                == (other.n_system, other.m_ancilla, other.layers))

    def __repr__(self):
        """Return a short description."""
        return "AnsatzConfig(n_system={}, m_ancilla={}, layers={})".format(
            self.n_system, self.m_ancilla, self.layers)


class ParameterVector:
    """Read-only circuit angles in radians, checked against an AnsatzConfig."""

    def __init__(self, values, cfg):
        """
        Initialize the ParameterVector class.

        Args:
            values: 1D array-like of 4 * layers * total_qubits angles.
            cfg: AnsatzConfig the angles belong to.

        Raises:
            ParameterLengthException: wrong number of values.

        """
        values = np.array(values, dtype=float).reshape(-1)
        expected = param_count(cfg)
        if values.size != expected:
            raise vqss_errors.ParameterLengthException(
                "Expected {} parameters for {}, got {}".format(expected, cfg, values.size))
        values.setflags(write=False)
        self.values = values
        self.cfg = cfg

    def __len__(self):
        """Return the number of angles."""
        return self.values.size


def param_count(cfg):
    """
    Number of circuit parameters.

    Args:
        cfg: AnsatzConfig.

    Returns:
        4 * layers * total_qubits.

    """
    return PARAMS_PER_QUBIT * cfg.layers * cfg.total_qubits


def random_parameters(cfg, rng):
    """
    Draw angles uniformly in [0, 2 pi).

    Args:
        cfg: AnsatzConfig.
        rng: numpy Generator.

    Returns:
        ParameterVector.

    """
    return ParameterVector(rng.uniform(0.0, 2 * np.pi, size=param_count(cfg)), cfg)


def _angles(params, cfg):
    if isinstance(params, ParameterVector):
        values = params.values
    else:
        values = np.asarray(params, dtype=float).reshape(-1)
    expected = param_count(cfg)
    if values.size != expected:
        raise vqss_errors.ParameterLengthException(
            "Expected {} parameters for {}, got {}".format(expected, cfg, values.size))
    return values.reshape(cfg.layers, cfg.total_qubits, PARAMS_PER_QUBIT)


def build_ansatz_state(params, cfg):
    """
    Build U(theta)|0...0>.

    Each layer applies Rz, Rx, Rz to every qubit, then the CRY ring
    control j -> target (j + 1) mod N for j = 0..N-1 in ascending order,
    each CRY with its own angle. A single-qubit register has no ring, its
    entangler angles are inert.

    Args:
        params: ParameterVector or array-like of 4 * M * N angles.
        cfg: AnsatzConfig.

    Returns:
        Normalized StateVector on cfg.total_qubits qubits.

    Raises:
        ParameterLengthException: wrong number of angles.

    """
    angles = _angles(params, cfg)
    num_qubits = cfg.total_qubits
    amplitudes = np.zeros(2 ** num_qubits, dtype=complex)
    amplitudes[0] = 1.0
    for layer in angles:
        for qubit in range(num_qubits):
            theta_1, theta_2, theta_3, _ = layer[qubit]
            gate = gates.zxz_matrix(theta_1, theta_2, theta_3)
            gates.apply_gate_inplace(amplitudes, gate, qubit, num_qubits)
        if num_qubits < 2:
            continue
        for control in range(num_qubits):
            target = (control + 1) % num_qubits
            gates.apply_controlled_inplace(
                amplitudes, gates.ry_matrix(layer[control][3]), control, target, num_qubits)
    return StateVector(amplitudes, check_norm=False)
