"""
The states module.

Stores the StateVector and DensityMatrix containers and the tolerance ladder
used to check them.

Attributes:
    HERMITIAN_TOL: Frobenius distance allowed between a matrix and its adjoint.
    TRACE_TOL: Distance allowed between a density matrix trace and 1.
    PSD_TOL: Most negative eigenvalue tolerated in a density matrix.
    NORM_TOL: Distance allowed between a state vector norm and 1.

"""
import numpy as np
import scipy.linalg as la

from ..errors import vqss_errors


HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9
NORM_TOL = 1e-12


def as_complex_matrix(a):
    """
    Coerce input into a ComplexMatrix.

    Args:
        a: array-like 2D input.

    Returns:
        A complex128 numpy array.

    Raises:
        InvalidMatrixException: input is not 2D or holds NaN/Inf.

    """
    matrix = np.asarray(a, dtype=complex)
    if matrix.ndim != 2 or matrix.size == 0:
        raise vqss_errors.InvalidMatrixException(
            "Expected a non-empty 2D matrix, got shape {}".format(matrix.shape))
    if not np.all(np.isfinite(matrix)):
        raise vqss_errors.InvalidMatrixException("Matrix holds NaN or Inf entries")
    return matrix


def qubits_for_dimension(dimension):
    """
    Number of qubits of a Hilbert space dimension.

    Args:
        dimension: a power of two.

    Returns:
        log2 of the dimension.

    Raises:
        DimensionMismatchException: dimension is not a power of two.

    """
    num_qubits = int(dimension).bit_length() - 1
    if dimension < 1 or 2 ** num_qubits != dimension:
        raise vqss_errors.DimensionMismatchException(
            "Dimension {} is not a power of two".format(dimension))
    return num_qubits


class StateVector:
    """
    Pure state of a qubit register.

    Qubit 0 is the most significant bit of the basis index. The amplitudes are
    stored read-only, so instances can be shared freely.
    """

    def __init__(self, amplitudes, check_norm=True):
        """
        Initialize the StateVector class.

        Args:
            amplitudes: 1D array-like of length 2**num_qubits.
            check_norm: verify the unit norm (default: {True})

        Raises:
            InvalidStateVectorException: wrong length or norm.

        """
        amplitudes = np.array(amplitudes, dtype=complex).reshape(-1)
        try:
            self.num_qubits = qubits_for_dimension(amplitudes.size)
        except vqss_errors.DimensionMismatchException as dme:
            raise vqss_errors.InvalidStateVectorException(str(dme))
        if check_norm:
            norm_sq = float(np.vdot(amplitudes, amplitudes).real)
            if abs(norm_sq - 1.0) > NORM_TOL:
                raise vqss_errors.InvalidStateVectorException(
                    "State vector norm^2 is {}".format(norm_sq))
        amplitudes.setflags(write=False)
        self.amplitudes = amplitudes

    @classmethod
    def zero_state(cls, num_qubits):
        """
        Build |0...0>.

        Args:
            num_qubits: register size.

        Returns:
            The all-zero computational basis state.

        """
        amplitudes = np.zeros(2 ** num_qubits, dtype=complex)
        amplitudes[0] = 1.0
        return cls(amplitudes, check_norm=False)

    def norm(self):
        """Return the 2-norm of the amplitudes."""
        return float(np.linalg.norm(self.amplitudes))

    def __len__(self):
        """Return the number of amplitudes."""
        return self.amplitudes.size


class DensityMatrix:
    """
    Density matrix of a qubit register.

    A Hermitian, unit-trace, positive semidefinite matrix of dimension
    2**num_qubits. The matrix is stored read-only.
    """

    def __init__(self, matrix, validate=True):
        """
        Initialize the DensityMatrix class.

        Args:
            matrix: square array-like of dimension 2**num_qubits.
            validate: check Hermiticity, trace and positivity.
                (default: {True})

        Raises:
            InvalidDensityMatrixException: invariants do not hold.

        """
        matrix = np.array(as_complex_matrix(matrix))
        if matrix.shape[0] != matrix.shape[1]:
            raise vqss_errors.InvalidDensityMatrixException(
                "Density matrix must be square, got {}".format(matrix.shape))
        try:
            self.num_qubits = qubits_for_dimension(matrix.shape[0])
        except vqss_errors.DimensionMismatchException as dme:
            raise vqss_errors.InvalidDensityMatrixException(str(dme))
        matrix.setflags(write=False)
        self.matrix = matrix
        if validate:
            self.validate()

    @classmethod
    def maximally_mixed(cls, num_qubits):
        """Return I / 2**num_qubits."""
        dimension = 2 ** num_qubits
        return cls(np.eye(dimension, dtype=complex) / dimension, validate=False)

    @classmethod
    def from_state(cls, psi):
        """Return the projector |psi><psi| of a StateVector."""
        return cls(np.outer(psi.amplitudes, psi.amplitudes.conj()), validate=False)

    @property
    def dimension(self):
        """Return the Hilbert space dimension."""
        return self.matrix.shape[0]

    def trace(self):
        """Return the (complex) trace."""
        return complex(np.trace(self.matrix))

    def hermiticity_error(self):
        """Return the Frobenius norm of rho - rho^dagger."""
        return float(np.linalg.norm(self.matrix - self.matrix.conj().T))

    def eigenvalues(self):
        """Return the eigenvalues of the Hermitian part, ascending."""
        hermitian = (self.matrix + self.matrix.conj().T) / 2
        return la.eigh(hermitian, eigvals_only=True)

    def min_eigenvalue(self):
        """Return the smallest eigenvalue."""
        return float(self.eigenvalues()[0])

    def purity(self):
        """Return Tr(rho^2)."""
        return float(np.real(np.sum(self.matrix * self.matrix.T)))

    def rank(self, tol=1e-10):
        """
        Numerical rank.

        Args:
            tol: eigenvalues above this count as non-zero. (default: {1e-10})

        Returns:
            Number of eigenvalues above tol.

        """
        return int(np.sum(self.eigenvalues() > tol))

    def validate(self):
        """
        Check all density matrix invariants.

        Raises:
            InvalidDensityMatrixException: the first invariant that fails.

        """
        hermiticity_error = self.hermiticity_error()
        if hermiticity_error > HERMITIAN_TOL:
            raise vqss_errors.InvalidDensityMatrixException(
                "Not Hermitian: ||rho - rho^dagger||_F = {}".format(hermiticity_error))
        trace = self.trace()
        if abs(trace - 1.0) > TRACE_TOL:
            raise vqss_errors.InvalidDensityMatrixException(
                "Trace is {}, expected 1".format(trace))
        min_eigenvalue = self.min_eigenvalue()
        if min_eigenvalue < -PSD_TOL:
            raise vqss_errors.InvalidDensityMatrixException(
                "Not positive semidefinite: smallest eigenvalue {}".format(min_eigenvalue))
        return True

    def __repr__(self):
        """Return a short description."""
        return "DensityMatrix(num_qubits={})".format(self.num_qubits)
