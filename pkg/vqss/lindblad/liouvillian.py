"""
The Liouvillian module.

Applies the Lindblad generator

    L rho = -i[H, rho] + sum_i gamma_i (c_i rho c_i^dagger
            - 1/2 c_i^dagger c_i rho - 1/2 rho c_i^dagger c_i)

directly, and builds its matrix in column-stacking vectorization,
vec(A X B) = (B^T (x) A) vec(X).
"""
import numpy as np

from ..errors import vqss_errors
from ..linalg.states import DensityMatrix, as_complex_matrix


def apply_liouvillian(model, rho):
    """
    Apply the Lindblad generator to a matrix.

    Args:
        model: LindbladModel.
        rho: square ComplexMatrix (or DensityMatrix) of the model dimension;
            Hermiticity is not required.

    Returns:
        L rho as a ComplexMatrix.

    Raises:
        DimensionMismatchException: rho does not match the model.

    """
    if isinstance(rho, DensityMatrix):
        rho = rho.matrix
    else:
        rho = as_complex_matrix(rho)
    if rho.shape != model.hamiltonian.shape:
        raise vqss_errors.DimensionMismatchException(
            "Matrix of shape {} does not match model dimension {}".format(
                rho.shape, model.dimension))
    hamiltonian = model.hamiltonian
    result = -1j * (hamiltonian @ rho - rho @ hamiltonian)
    if model.rates:
        jumped = model.jump_stack @ rho @ model.jump_dagger_stack
        anticommutator = model.decay_stack @ rho + rho @ model.decay_stack
        result += np.sum(model.rate_column * (jumped - 0.5 * anticommutator), axis=0)
    return result


def vec(matrix):
    """Column-stack a matrix into a vector."""
    return np.asarray(matrix).reshape(-1, order='F')


def unvec(vector, dimension):
    """Undo vec for a dimension x dimension matrix."""
    return np.asarray(vector).reshape(dimension, dimension, order='F')


def superoperator_matrix(model):
    """
    Matrix of the Lindblad generator acting on vec(rho).

    Returns:
        The 4**n x 4**n ComplexMatrix
        -i(I (x) H - H^T (x) I)
        + sum_i gamma_i [conj(c_i) (x) c_i - 1/2 I (x) c_i^dagger c_i
        - 1/2 (c_i^dagger c_i)^T (x) I].

    """
    identity = np.eye(model.dimension, dtype=complex)
    hamiltonian = model.hamiltonian
    superop = -1j * (np.kron(identity, hamiltonian) - np.kron(hamiltonian.T, identity))
    for rate, op, decay in zip(model.rates, model.jump_stack, model.decay_stack):
        if rate == 0:
            continue
        superop += rate * (np.kron(op.conj(), op)
                           - 0.5 * np.kron(identity, decay)
                           - 0.5 * np.kron(decay.T, identity))
    return superop
