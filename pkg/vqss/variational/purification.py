"""
The purification module.

The ansatz density matrix is the reduced state of the circuit output after
tracing out the ancillas; the loss is the squared Frobenius norm of the
Liouvillian applied to it.
"""
import numpy as np

from ..circuits.ansatz import build_ansatz_state
from ..errors import vqss_errors
from ..lindblad.liouvillian import apply_liouvillian
from ..linalg.matrix_ops import frobenius_norm_sq, partial_trace_ancilla, psd_sqrt, trace_sqrt
from ..linalg.states import DensityMatrix


def ansatz_density(params, cfg):
    """
    Ansatz density matrix rho(theta) = Tr_E |Psi(theta)><Psi(theta)|.

    Args:
        params: ParameterVector or array-like of 4 * M * N angles.
        cfg: AnsatzConfig.

    Returns:
        DensityMatrix on cfg.n_system qubits.

    Raises:
        ParameterLengthException: wrong number of angles.

    """
    psi = build_ansatz_state(params, cfg)
    return partial_trace_ancilla(psi, cfg.n_system, cfg.m_ancilla)


def loss(params, model, cfg):
    """
    Stationarity loss ||L rho(theta)||_F^2.

    Args:
        params: ParameterVector or array-like of angles.
        model: LindbladModel on cfg.n_system qubits.
        cfg: AnsatzConfig.

    Returns:
        Non-negative float.

    Raises:
        DimensionMismatchException: model and ansatz sizes differ.

    """
    if model.n_system != cfg.n_system:
        raise vqss_errors.DimensionMismatchException(
            "Model has {} qubits, ansatz has {} system qubits".format(model.n_system, cfg.n_system))
    return frobenius_norm_sq(apply_liouvillian(model, ansatz_density(params, cfg).matrix))


class LossFunction:
    """
    Loss bound to a model and an ansatz shape.

    Callable on raw angle arrays, as the optimizer expects. Stateless apart
    from its immutable inputs, so it is safe to call from several threads.
    """

    def __init__(self, model, cfg):
        """
        Initialize the LossFunction class.

        Args:
            model: LindbladModel.
            cfg: AnsatzConfig with the same number of system qubits.

        Raises:
            DimensionMismatchException: model and ansatz sizes differ.

        """
        if model.n_system != cfg.n_system:
            raise vqss_errors.DimensionMismatchException(
                "Model has {} qubits, ansatz has {} system qubits".format(
                    model.n_system, cfg.n_system))
        self.model = model
        self.cfg = cfg

    def __call__(self, params):
        """Return the loss at params."""
        return loss(params, self.model, self.cfg)


def fidelity(sigma, rho):
    """
    State fidelity F = (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2.

    Args:
        sigma: DensityMatrix.
        rho: DensityMatrix of the same dimension.

    Returns:
        Float in [0, 1] up to round-off.

    Raises:
        DimensionMismatchException: dimensions differ.

    """
    sigma_matrix = sigma.matrix if isinstance(sigma, DensityMatrix) else np.asarray(sigma)
    rho_matrix = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    if sigma_matrix.shape != rho_matrix.shape:
        raise vqss_errors.DimensionMismatchException(
            "Fidelity of {} and {} matrices".format(sigma_matrix.shape, rho_matrix.shape))
    root = psd_sqrt(sigma_matrix)
    return trace_sqrt(root @ rho_matrix @ root) ** 2
