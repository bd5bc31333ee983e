"""
The steady state module.

Two oracles for the stationary state L rho_ss = 0: the exact one, which
takes the SVD null vector of the superoperator matrix, and fixed-step RK4
integration of d rho / dt = L rho towards its long-time limit.

Attributes:
    DEGENERACY_TOL: Two singular values below this mark a degenerate
        stationary space.
    RESIDUAL_TOL: Oracle residuals above this fail the solve.
    TRACE_DRIFT_TOL: Trace drift per RK4 step that signals a too large dt.

"""
import logging
import math

import numpy as np

from ..errors import vqss_errors
from ..linalg.matrix_ops import singular_tail
from ..linalg.states import DensityMatrix
from .liouvillian import apply_liouvillian, superoperator_matrix, unvec


DEGENERACY_TOL = 1e-10
RESIDUAL_TOL = 1e-8
TRACE_DRIFT_TOL = 1e-6
RANK_TOL = 1e-10

vqss_log = logging.getLogger(__name__)
vqss_log.addHandler(logging.NullHandler())


def min_ancillas(rho, tol=RANK_TOL):
    """
    Smallest ancilla count able to purify rho.

    A rank n0 state needs m >= log2(n0) ancillas.

    Args:
        rho: DensityMatrix.
        tol: eigenvalues above this count towards the rank. (default: {RANK_TOL})

    Returns:
        ceil(log2(rank)), 0 for a pure state.

    """
    rank = max(rho.rank(tol), 1)
    return int(math.ceil(math.log2(rank)))


class SteadyStateReport:
    """Result of the exact oracle with the numbers needed to trust it."""

    def __init__(self, rho, residual, singular_values):
        """
        Initialize the SteadyStateReport class.

        Args:
            rho: the stationary DensityMatrix.
            residual: ||L rho||_F.
            singular_values: the two smallest singular values of the
                superoperator, ascending.

        """
        self.rho = rho
        self.residual = float(residual)
        self.singular_values = tuple(float(value) for value in singular_values)
        self.rank = rho.rank(RANK_TOL)
        self.min_ancillas = min_ancillas(rho)

    def as_dict(self):
        """Return the report numbers as a plain dictionary."""
        return {
            'residual': self.residual,
            'trace': self.rho.trace().real,
            'min_eigenvalue': self.rho.min_eigenvalue(),
            'singular_values': list(self.singular_values),
            'rank': self.rank,
            'min_ancillas': self.min_ancillas,
        }


def solve_steady_state(model):
    """
    Exact stationary state with diagnostics.

    Takes the null vector of the superoperator matrix, reshapes it to a
    matrix, divides by its trace (removing the arbitrary phase), Hermitizes
    with (rho + rho^dagger) / 2 and renormalizes.

    Args:
        model: LindbladModel with a unique stationary state.

    Returns:
        SteadyStateReport.

    Raises:
        DegenerateSteadyStateException: the two smallest singular values are
            both below DEGENERACY_TOL.
        SteadyStateNotConvergedException: the residual exceeds RESIDUAL_TOL.

    """
    vector, singular_values = singular_tail(superoperator_matrix(model))
    smallest = singular_values[:2]
    if len(smallest) > 1 and smallest[1] < DEGENERACY_TOL:
        raise vqss_errors.DegenerateSteadyStateException(
            "Stationary state of {} is not unique: smallest singular values {}".format(
                model, list(smallest)), smallest)

    matrix = unvec(vector, model.dimension)
    trace = np.trace(matrix)
    if abs(trace) < DEGENERACY_TOL:
        raise vqss_errors.SteadyStateNotConvergedException(
            "Null vector of {} is traceless".format(model), float('inf'))
    matrix = matrix / trace
    matrix = (matrix + matrix.conj().T) / 2
    matrix = matrix / np.trace(matrix).real
    rho = DensityMatrix(matrix, validate=False)

    residual = float(np.linalg.norm(apply_liouvillian(model, rho)))
    if residual > RESIDUAL_TOL:
        raise vqss_errors.SteadyStateNotConvergedException(
            "Oracle residual {} above {}".format(residual, RESIDUAL_TOL), residual)
    vqss_log.info("Steady state of {} solved, residual {:.3e}".format(model, residual))
    return SteadyStateReport(rho, residual, smallest)


def steady_state_exact(model):
    """
    Exact stationary state.

    Args:
        model: LindbladModel with a unique stationary state.

    Returns:
        The stationary DensityMatrix.

    Raises:
        DegenerateSteadyStateException: stationary state not unique.
        SteadyStateNotConvergedException: residual above RESIDUAL_TOL.

    """
    return solve_steady_state(model).rho


def evolve_fixed_step(model, rho0, dt, steps):
    """
    Integrate the master equation with classical RK4.

    After every step the state is Hermitized with (rho + rho^dagger) / 2 and
    its trace renormalized to 1.

    Args:
        model: LindbladModel.
        rho0: initial DensityMatrix.
        dt: positive step size.
        steps: number of steps, at least 1.

    Returns:
        DensityMatrix at time steps * dt.

    Raises:
        IntegrationException: invalid dt/steps, trace drift above
            TRACE_DRIFT_TOL or a state leaving the unit Frobenius ball,
            both of which mean dt is too large.

    """
    if dt <= 0 or steps < 1:
        raise vqss_errors.IntegrationException(
            "Need dt > 0 and steps >= 1, got dt={} steps={}".format(dt, steps))
    rho = np.array(rho0.matrix)
    for step in range(steps):
        k1 = apply_liouvillian(model, rho)
        k2 = apply_liouvillian(model, rho + (dt / 2) * k1)
        k3 = apply_liouvillian(model, rho + (dt / 2) * k2)
        k4 = apply_liouvillian(model, rho + dt * k3)
        rho = rho + (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
        rho = (rho + rho.conj().T) / 2

        trace = np.trace(rho).real
        norm = np.linalg.norm(rho)
        if not np.isfinite(norm) or abs(trace - 1.0) > TRACE_DRIFT_TOL or norm > 1.0 + TRACE_DRIFT_TOL:
            raise vqss_errors.IntegrationException(
                "Step {}: trace {} norm {}, dt={} is too large".format(step, trace, norm, dt))
        rho = rho / trace
    return DensityMatrix(rho, validate=False)
