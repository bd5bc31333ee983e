"""
The solver module.

Optimizes the purification ansatz against the stationarity loss with
restarted Nelder-Mead, logging the loss every cycle and the fidelity to the
exact steady state every fidelity_log_stride cycles. The fidelity is only
recorded, the optimizer never sees it.
"""
import logging
import time

import numpy as np

from ..circuits.ansatz import AnsatzConfig, ParameterVector, param_count, random_parameters
from ..errors import vqss_errors
from ..lindblad.steady_state import solve_steady_state
from ..optimizer.nelder_mead import NmOptions, restarted_minimize
from .purification import LossFunction, ansatz_density, fidelity


class SolveConfig:
    """Settings of one variational solve."""

    def __init__(
        self,
        ansatz,
        restarts=3,
        max_iter_multiplier=200,
        seed=0,
        fidelity_log_stride=50,
        convergence_ftol=1e-8,
        xatol=1e-8,
        max_evaluations=None,
        restart_from_incumbent=True,
        workers=1
    ):
        """
        Initialize the SolveConfig class.

        Args:
            ansatz: AnsatzConfig.
            restarts: number of Nelder-Mead runs. (default: {3})
            max_iter_multiplier: cycle cap per run is this times the
                parameter count. (default: {200})
            seed: seed of the initial angles. (default: {0})
            fidelity_log_stride: cycles between fidelity records.
                (default: {50})
            convergence_ftol: function spread tolerance. (default: {1e-8})
            xatol: simplex size tolerance. (default: {1e-8})
            max_evaluations: loss evaluation budget over all runs, None is
                unlimited. (default: {None})
            restart_from_incumbent: restart around the best point; False
                draws fresh random angles for each restart. (default: {True})
            workers: threads for batched loss evaluations. (default: {1})

        Raises:
            InvalidOptionsException: invariants do not hold.

        """
        if not isinstance(ansatz, AnsatzConfig):
            raise vqss_errors.InvalidOptionsException("ansatz must be an AnsatzConfig")
        if restarts < 1 or max_iter_multiplier < 1 or fidelity_log_stride < 1:
            raise vqss_errors.InvalidOptionsException(
                "restarts, max_iter_multiplier and fidelity_log_stride must be >= 1")
        if seed < 0:
            raise vqss_errors.InvalidOptionsException("seed must be unsigned, got {}".format(seed))
        self.ansatz = ansatz
        self.restarts = int(restarts)
        self.max_iter_multiplier = int(max_iter_multiplier)
        self.seed = int(seed)
        self.fidelity_log_stride = int(fidelity_log_stride)
        self.convergence_ftol = convergence_ftol
        self.xatol = xatol
        self.max_evaluations = max_evaluations
        self.restart_from_incumbent = restart_from_incumbent
        self.workers = workers

    def nm_options(self):
        """Return the NmOptions of one run."""
        return NmOptions(
            max_iterations=self.max_iter_multiplier * param_count(self.ansatz),
            xatol=self.xatol,
            fatol=self.convergence_ftol,
            max_evaluations=self.max_evaluations,
            workers=self.workers
        )


class RunResult:
    """Outcome of a variational solve. Built once and not modified."""

    def __init__(self, best_params, best_loss, loss_trace, fidelity_trace, final_rho,
                 oracle_rho, total_iterations, wall_time_seconds, evaluations=0,
                 restarts=1, termination=None, oracle_report=None):
        """
        Initialize the RunResult class.

        Args:
            best_params: ParameterVector of the best loss.
            best_loss: loss at best_params.
            loss_trace: list of (iteration, best loss so far).
            fidelity_trace: list of (iteration, fidelity of the incumbent).
            final_rho: ansatz DensityMatrix at best_params.
            oracle_rho: exact steady state DensityMatrix.
            total_iterations: simplex cycles over all runs.
            wall_time_seconds: elapsed time of the solve.
            evaluations: loss evaluations. (default: {0})
            restarts: Nelder-Mead runs performed. (default: {1})
            termination: termination flag of the last run. (default: {None})
            oracle_report: SteadyStateReport of the oracle. (default: {None})

        """
        self.best_params = best_params
        self.best_loss = best_loss
        self.loss_trace = loss_trace
        self.fidelity_trace = fidelity_trace
        self.final_rho = final_rho
        self.oracle_rho = oracle_rho
        self.total_iterations = total_iterations
        self.wall_time_seconds = wall_time_seconds
        self.evaluations = evaluations
        self.restarts = restarts
        self.termination = termination
        self.oracle_report = oracle_report

    @property
    def final_fidelity(self):
        """Return the fidelity of final_rho with oracle_rho."""
        return fidelity(self.oracle_rho, self.final_rho)


def solve(model, cfg, oracle_report=None):
    """
    Find the stationary state variationally.

    Angles start uniformly in [0, 2 pi) from cfg.seed. Each run is capped at
    max_iter_multiplier * d cycles; the next run rebuilds the simplex around
    the incumbent (or fresh random angles), cfg.restarts runs in total.

    Args:
        model: LindbladModel.
        cfg: SolveConfig whose ansatz matches the model size.
        oracle_report: precomputed SteadyStateReport; solved here when
            None. (default: {None})

    Returns:
        RunResult.

    Raises:
        DimensionMismatchException: model and ansatz sizes differ.
        DegenerateSteadyStateException: the oracle state is not unique.
        SteadyStateNotConvergedException: the oracle solve failed.

    """
    vqss_log = logging.getLogger(__name__)
    vqss_log.addHandler(logging.NullHandler())
    started = time.perf_counter()
    objective = LossFunction(model, cfg.ansatz)
    if oracle_report is None:
        oracle_report = solve_steady_state(model)
    oracle_rho = oracle_report.rho
    if cfg.ansatz.m_ancilla < oracle_report.min_ancillas:
        vqss_log.warning("{} ancillas cannot purify a rank {} steady state".format(
            cfg.ansatz.m_ancilla, oracle_report.rank))

    rng = np.random.default_rng(cfg.seed)
    x0 = random_parameters(cfg.ansatz, rng).values
    fidelities = {}
    stride = cfg.fidelity_log_stride

    def record_fidelity(iteration, point, value):
        if iteration % stride == 0:
            fidelities[iteration] = fidelity(oracle_rho, ansatz_density(point, cfg.ansatz))
            vqss_log.debug("Iteration {}: loss {:.6e}, fidelity {:.6f}".format(
                iteration, value, fidelities[iteration]))

    def restart_point(run, incumbent):
        vqss_log.info("Run {} starts from fresh random angles".format(run + 1))
        return rng.uniform(0.0, 2 * np.pi, size=incumbent.size)

    outcome = restarted_minimize(
        objective,
        x0,
        cfg.nm_options(),
        restarts=cfg.restarts,
        callback=record_fidelity,
        restart_point=None if cfg.restart_from_incumbent else restart_point
    )

    best_params = ParameterVector(outcome.best_point, cfg.ansatz)
    final_rho = ansatz_density(best_params, cfg.ansatz)
    final_iteration = outcome.history[-1][0]
    fidelities[final_iteration] = fidelity(oracle_rho, final_rho)
    wall_time = time.perf_counter() - started
    vqss_log.info("Solve finished: loss {:.6e}, fidelity {:.6f}, {} iterations, {:.1f} s".format(
        outcome.best_value, fidelities[final_iteration], outcome.iterations_used, wall_time))

    return RunResult(
        best_params=best_params,
        best_loss=outcome.best_value,
        loss_trace=list(outcome.history),
        fidelity_trace=sorted(fidelities.items()),
        final_rho=final_rho,
        oracle_rho=oracle_rho,
        total_iterations=outcome.iterations_used,
        wall_time_seconds=wall_time,
        evaluations=outcome.evaluations,
        restarts=outcome.runs,
        termination=outcome.termination,
        oracle_report=oracle_report
    )
