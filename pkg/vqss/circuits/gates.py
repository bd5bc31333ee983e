"""
The gates module.

Rotation gates and the statevector kernels that apply them. Qubit 0 is the
leftmost tensor factor, i.e. the most significant bit of the basis index.

Attributes:
    PAULI: The Pauli matrices keyed by axis name.
    UNITARY_TOL: Frobenius distance allowed between G^dagger G and I.

"""
import numpy as np

from ..errors import vqss_errors
from ..linalg.states import StateVector, as_complex_matrix


UNITARY_TOL = 1e-10

PAULI = {
    'x': np.array([[0, 1], [1, 0]], dtype=complex),
    'y': np.array([[0, -1j], [1j, 0]], dtype=complex),
    'z': np.array([[1, 0], [0, -1]], dtype=complex),
}


def rotation_gate(axis, theta):
    """
    Single-qubit rotation exp(-i theta sigma_axis / 2).

    Args:
        axis: one of 'x', 'y', 'z'.
        theta: angle in radians.

    Returns:
        2x2 unitary ComplexMatrix.

    Raises:
        InvalidGateException: unknown axis.

    """
    try:
        pauli = PAULI[axis]
    except KeyError:
        raise vqss_errors.InvalidGateException("Unknown rotation axis: {}".format(axis))
    return np.cos(theta / 2) * np.eye(2, dtype=complex) - 1j * np.sin(theta / 2) * pauli


def ry_matrix(theta):
    """Return the real 2x2 RY(theta) matrix."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def zxz_matrix(theta_1, theta_2, theta_3):
    """
    Fused Rz(theta_1), Rx(theta_2), Rz(theta_3) sequence.

    The gates are applied in that order, so the matrix is
    Rz(theta_3) Rx(theta_2) Rz(theta_1).

    Returns:
        2x2 unitary ComplexMatrix.

    """
    c, s = np.cos(theta_2 / 2), np.sin(theta_2 / 2)
    a = np.exp(-0.5j * (theta_1 + theta_3))
    b = np.exp(0.5j * (theta_1 - theta_3))
    return np.array([[a * c, -1j * s * b],
                     [-1j * s * np.conj(b), np.conj(a) * c]], dtype=complex)


def check_qubit(index, num_qubits):
    """
    Validate a qubit index.

    Raises:
        QubitIndexException: index outside [0, num_qubits).

    """
    if not 0 <= index < num_qubits:
        raise vqss_errors.QubitIndexException(
            "Qubit {} out of range for {} qubits".format(index, num_qubits))


def check_unitary(gate, tol=UNITARY_TOL):
    """
    Validate a gate matrix.

    Raises:
        NonUnitaryGateException: the gate is not square or G^dagger G
            differs from I by more than tol.

    """
    gate = as_complex_matrix(gate)
    if gate.shape[0] != gate.shape[1]:
        raise vqss_errors.NonUnitaryGateException(
            "Gate must be square, got shape {}".format(gate.shape))
    error = np.linalg.norm(gate.conj().T @ gate - np.eye(gate.shape[0]))
    if error > tol:
        raise vqss_errors.NonUnitaryGateException(
            "Gate is not unitary: ||G^dagger G - I||_F = {}".format(error))
    return gate


def apply_gate_inplace(amplitudes, gate, target, num_qubits):
    """
    Apply a 2x2 gate to one qubit of a raw amplitude buffer.

    No validation; used by the circuit builder on its private buffer.

    Args:
        amplitudes: complex array of length 2**num_qubits, updated in place.
        gate: 2x2 matrix.
        target: qubit index.
        num_qubits: register size.

    """
    view = amplitudes.reshape(2 ** target, 2, 2 ** (num_qubits - target - 1))
    view[...] = np.einsum('ab,ibj->iaj', gate, view)


def apply_controlled_inplace(amplitudes, gate, control, target, num_qubits):
    """
    Apply a 2x2 gate to target on the control=|1> subspace of a raw buffer.

    Args:
        amplitudes: complex array of length 2**num_qubits, updated in place.
        gate: 2x2 matrix.
        control: control qubit index.
        target: target qubit index, different from control.
        num_qubits: register size.

    """
    tensor = amplitudes.reshape([2] * num_qubits)
    index = [slice(None)] * num_qubits
    index[control] = 1
    index = tuple(index)
    sub = tensor[index]
    axis = target if target < control else target - 1
    rotated = np.tensordot(gate, sub, axes=([1], [axis]))
    tensor[index] = np.moveaxis(rotated, 0, axis)


def apply_single_qubit_gate(psi, gate, target):
    """
    Apply a single-qubit gate.

    Args:
        psi: StateVector.
        gate: 2x2 unitary ComplexMatrix.
        target: qubit index.

    Returns:
        A new StateVector; psi is left untouched.

    Raises:
        QubitIndexException: target out of range.
        NonUnitaryGateException: gate is not unitary.

    """
    check_qubit(target, psi.num_qubits)
    gate = check_unitary(gate)
    if gate.shape != (2, 2):
        raise vqss_errors.NonUnitaryGateException(
            "Expected a 2x2 gate, got {}".format(gate.shape))
    amplitudes = np.array(psi.amplitudes)
    apply_gate_inplace(amplitudes, gate, target, psi.num_qubits)
    return StateVector(amplitudes)


def apply_cry(psi, theta, control, target):
    """
    Apply a controlled-RY gate.

    Args:
        psi: StateVector.
        theta: rotation angle in radians.
        control: control qubit index.
        target: target qubit index.

    Returns:
        A new StateVector with RY(theta) applied to target where control
        is |1>.

    Raises:
        QubitIndexException: an index is out of range or control = target.

    """
    check_qubit(control, psi.num_qubits)
    check_qubit(target, psi.num_qubits)
    if control == target:
        raise vqss_errors.QubitIndexException(
            "Control and target are both qubit {}".format(control))
    amplitudes = np.array(psi.amplitudes)
    apply_controlled_inplace(amplitudes, ry_matrix(theta), control, target, psi.num_qubits)
    return StateVector(amplitudes)
