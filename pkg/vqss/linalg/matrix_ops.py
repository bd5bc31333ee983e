"""
The matrix operations module.

Kronecker products, the ancilla partial trace, Hermitian eigendecomposition,
the PSD square root, Frobenius norms and SVD null vectors. All functions are
pure and work on dense complex128 arrays.

Attributes:
    EIGENVALUE_FLOOR: Eigenvalues of a PSD matrix at or below this value are
        treated as zero when taking square roots.

"""
import logging
import math

import numpy as np
import scipy.linalg as la

from ..errors import vqss_errors
from .states import DensityMatrix, HERMITIAN_TOL, PSD_TOL, as_complex_matrix


EIGENVALUE_FLOOR = 1e-14

vqss_log = logging.getLogger(__name__)
vqss_log.addHandler(logging.NullHandler())


def _as_array(rho):
    if isinstance(rho, DensityMatrix):
        return rho.matrix
    return as_complex_matrix(rho)


def kron(a, b):
    """
    Kronecker product.

    Args:
        a: ComplexMatrix of shape (ra, ca).
        b: ComplexMatrix of shape (rb, cb).

    Returns:
        The (ra*rb, ca*cb) Kronecker product a (x) b.

    """
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def kron_all(factors):
    """Kronecker product of a sequence of matrices, left to right."""
    result = np.ones((1, 1), dtype=complex)
    for factor in factors:
        result = np.kron(result, factor)
    return result


def partial_trace_ancilla(psi, n_system, m_ancilla):
    """
    Trace the trailing ancilla qubits out of a pure state.

    System qubits are the first n_system tensor factors, ancillas the last
    m_ancilla. The amplitudes are reshaped into a 2**n x 2**m matrix A and
    A A^dagger is returned.

    Args:
        psi: StateVector on n_system + m_ancilla qubits.
        n_system: number of system qubits.
        m_ancilla: number of ancilla qubits.

    Returns:
        The reduced DensityMatrix on the system qubits.

    Raises:
        DimensionMismatchException: psi has the wrong number of qubits.

    """
    amplitudes = psi.amplitudes
    if amplitudes.size != 2 ** (n_system + m_ancilla):
        raise vqss_errors.DimensionMismatchException(
            "State of {} amplitudes does not split into {} system and {} ancilla qubits".format(
                amplitudes.size, n_system, m_ancilla))
    a = amplitudes.reshape(2 ** n_system, 2 ** m_ancilla)
    return DensityMatrix(a @ a.conj().T, validate=False)


def check_hermitian(h, tol=HERMITIAN_TOL):
    """
    Check Hermiticity.

    Args:
        h: square ComplexMatrix.
        tol: allowed Frobenius norm of h - h^dagger. (default: {HERMITIAN_TOL})

    Raises:
        NotHermitianException: the check fails.

    """
    h = as_complex_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise vqss_errors.NotHermitianException("Matrix of shape {} is not square".format(h.shape))
    error = np.linalg.norm(h - h.conj().T)
    if error > tol:
        raise vqss_errors.NotHermitianException(
            "Matrix is not Hermitian: ||h - h^dagger||_F = {}".format(error))
    return h


def eigh(h):
    """
    Hermitian eigendecomposition.

    Args:
        h: Hermitian ComplexMatrix.

    Returns:
        Tuple of ascending real eigenvalues and a matrix whose columns are
        the orthonormal eigenvectors.

    Raises:
        NotHermitianException: h is not Hermitian within HERMITIAN_TOL.

    """
    h = check_hermitian(h)
    return la.eigh((h + h.conj().T) / 2)


def _psd_sqrt_array(matrix):
    eigenvalues, vectors = la.eigh((matrix + matrix.conj().T) / 2)
    if eigenvalues[0] < -PSD_TOL:
        vqss_log.warning("Clamping eigenvalue {} below PSD tolerance".format(eigenvalues[0]))
    roots = np.sqrt(np.where(eigenvalues > EIGENVALUE_FLOOR, eigenvalues, 0.0))
    return (vectors * roots) @ vectors.conj().T


def psd_sqrt(rho):
    """
    Square root of a positive semidefinite matrix.

    Returns V diag(sqrt(max(lambda, 0))) V^dagger; eigenvalues at or below
    EIGENVALUE_FLOOR are clamped to 0.

    Args:
        rho: DensityMatrix (or PSD array).

    Returns:
        The PSD square root as a ComplexMatrix.

    """
    return _psd_sqrt_array(_as_array(rho))


def trace_sqrt(matrix):
    """Return Tr sqrt(matrix) for a PSD matrix, clamping round-off eigenvalues."""
    matrix = _as_array(matrix)
    eigenvalues = la.eigh((matrix + matrix.conj().T) / 2, eigvals_only=True)
    return float(np.sum(np.sqrt(np.where(eigenvalues > EIGENVALUE_FLOOR, eigenvalues, 0.0))))


def frobenius_norm_sq(a):
    """
    Squared entrywise 2-norm.

    Args:
        a: ComplexMatrix.

    Returns:
        sum |a_ij|^2, exactly rounded so the value does not depend on the
        entry order.

    """
    a = np.asarray(a)
    return math.fsum((a.real ** 2 + a.imag ** 2).ravel())


def singular_tail(mat):
    """
    Smallest singular triplet of a square matrix.

    Args:
        mat: square ComplexMatrix.

    Returns:
        Tuple of the unit right-singular vector of the smallest singular
        value and all singular values in ascending order.

    Raises:
        DimensionMismatchException: mat is not square.

    """
    mat = as_complex_matrix(mat)
    if mat.shape[0] != mat.shape[1]:
        raise vqss_errors.DimensionMismatchException(
            "Null vector needs a square matrix, got {}".format(mat.shape))
    _, singular_values, vh = la.svd(mat)
    vector = vh[-1].conj()
    return vector / np.linalg.norm(vector), singular_values[::-1]


def null_vector(mat):
    """
    SVD null vector.

    Args:
        mat: square ComplexMatrix.

    Returns:
        Tuple of the unit right-singular vector of the smallest singular
        value and that singular value.

    """
    vector, singular_values = singular_tail(mat)
    return vector, float(singular_values[0])
