"""
Nelder-Mead module.

Simplex minimizer with the usual reflection, expansion, contraction and
shrink steps, an iteration cap of 200 * d cycles by default, and a restart
driver that rebuilds the simplex around the incumbent best point.

One iteration is one simplex update cycle, not one function evaluation.

Attributes:
    MAX_ITER: Termination flag, iteration cap reached.
    MAX_EVALS: Termination flag, evaluation budget used up.
    XATOL: Termination flag, converged with the simplex size the last
        criterion to drop below its tolerance.
    FATOL: Termination flag, converged with the value spread the last
        criterion to drop below its tolerance.
    ITERATIONS_PER_DIMENSION: Default cap multiplier.

"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..errors import vqss_errors


MAX_ITER = "max_iter"
MAX_EVALS = "max_evals"
XATOL = "xatol"
FATOL = "fatol"

ITERATIONS_PER_DIMENSION = 200
NONZERO_DELTA = 0.05
ZERO_DELTA = 0.00025

vqss_log = logging.getLogger(__name__)
vqss_log.addHandler(logging.NullHandler())


class NmOptions:
    """Nelder-Mead coefficients, tolerances and caps."""

    def __init__(
        self,
        max_iterations=None,
        xatol=1e-8,
        fatol=1e-8,
        reflection=1.0,
        expansion=2.0,
        contraction=0.5,
        shrink=0.5,
        max_evaluations=None,
        workers=1
    ):
        """
        Initialize the NmOptions class.

        Args:
            max_iterations: cycle cap per run; None means 200 * d.
                (default: {None})
            xatol: simplex size tolerance. (default: {1e-8})
            fatol: function spread tolerance. (default: {1e-8})
            reflection: reflection coefficient. (default: {1.0})
            expansion: expansion coefficient. (default: {2.0})
            contraction: contraction coefficient. (default: {0.5})
            shrink: shrink coefficient. (default: {0.5})
            max_evaluations: objective evaluation budget, shared by all
                restarts; None is unlimited. (default: {None})
            workers: threads used for batched evaluations. (default: {1})

        Raises:
            InvalidOptionsException: coefficients or caps out of range.

        """
        if max_iterations is not None and max_iterations < 1:
            raise vqss_errors.InvalidOptionsException(
                "max_iterations must be positive, got {}".format(max_iterations))
        if max_evaluations is not None and max_evaluations < 1:
            raise vqss_errors.InvalidOptionsException(
                "max_evaluations must be positive, got {}".format(max_evaluations))
        if reflection <= 0:
            raise vqss_errors.InvalidOptionsException("reflection must be > 0")
        if expansion <= max(1.0, reflection):
            raise vqss_errors.InvalidOptionsException("expansion must exceed max(1, reflection)")
        if not 0 < contraction < 1:
            raise vqss_errors.InvalidOptionsException("contraction must be in (0, 1)")
        if not 0 < shrink < 1:
            raise vqss_errors.InvalidOptionsException("shrink must be in (0, 1)")
        if xatol <= 0 or fatol <= 0:
            raise vqss_errors.InvalidOptionsException("xatol and fatol must be positive")
        if workers < 1:
            raise vqss_errors.InvalidOptionsException("workers must be positive")
        self.max_iterations = max_iterations
        self.xatol = xatol
        self.fatol = fatol
        self.reflection = reflection
        self.expansion = expansion
        self.contraction = contraction
        self.shrink = shrink
        self.max_evaluations = max_evaluations
        self.workers = workers

    def resolve_max_iterations(self, dimension):
        """Return the cycle cap for a problem of the given dimension."""
        if self.max_iterations is not None:
            return self.max_iterations
        return ITERATIONS_PER_DIMENSION * dimension


class NmOutcome:
    """Result of a Nelder-Mead run."""

    def __init__(self, best_point, best_value, iterations_used, termination, history,
                 evaluations, runs=1):
        """
        Initialize the NmOutcome class.

        Args:
            best_point: best vertex found.
            best_value: objective at best_point.
            iterations_used: number of simplex cycles.
            termination: one of MAX_ITER, MAX_EVALS, XATOL, FATOL.
            history: list of (iteration, best value so far).
            evaluations: number of objective evaluations.
            runs: number of Nelder-Mead runs aggregated. (default: {1})

        """
        self.best_point = best_point
        self.best_value = best_value
        self.iterations_used = iterations_used
        self.termination = termination
        self.history = history
        self.evaluations = evaluations
        self.runs = runs


class _Evaluator:
    """Counts evaluations, enforces the budget and rejects non-finite values."""

    def __init__(self, objective, max_evaluations, executor=None):
        self.objective = objective
        self.max_evaluations = max_evaluations
        self.executor = executor
        self.count = 0

    def _evaluate(self, point):
        value = float(self.objective(np.array(point)))
        if not np.isfinite(value):
            msg = "Objective returned {} at {}".format(value, list(point))
            vqss_log.error(msg)
            raise vqss_errors.NonFiniteObjectiveException(msg, np.array(point), value)
        return value

    def __call__(self, point):
        self.count += 1
        return self._evaluate(point)

    def batch(self, points):
        self.count += len(points)
        if self.executor is None:
            values = [self._evaluate(point) for point in points]
        else:
            values = list(self.executor.map(self._evaluate, points))
        return np.array(values, dtype=float)

    def exhausted(self):
        return self.max_evaluations is not None and self.count >= self.max_evaluations


def initial_simplex(x0):
    """
    Build the starting simplex.

    Vertex 0 is x0; vertex k moves coordinate k-1 by 5% of its value, or to
    0.00025 when that coordinate is zero.

    Args:
        x0: starting point of dimension d >= 1.

    Returns:
        (d + 1, d) array of vertices.

    Raises:
        InvalidOptionsException: x0 is empty.

    """
    x0 = np.asarray(x0, dtype=float).reshape(-1)
    if x0.size == 0:
        raise vqss_errors.InvalidOptionsException("Nelder-Mead needs a non-empty starting point")
    simplex = np.tile(x0, (x0.size + 1, 1))
    for k in range(x0.size):
        if x0[k] != 0:
            simplex[k + 1, k] = (1 + NONZERO_DELTA) * x0[k]
        else:
            simplex[k + 1, k] = ZERO_DELTA
    return simplex


def _sorted(simplex, values):
    order = np.argsort(values, kind='stable')
    return simplex[order], values[order]


def _minimize(evaluate, x0, opts, callback, iteration_offset):
    simplex = initial_simplex(x0)
    dimension = simplex.shape[1]
    max_iterations = opts.resolve_max_iterations(dimension)
    rho, chi = opts.reflection, opts.expansion
    psi, sigma = opts.contraction, opts.shrink

    values = evaluate.batch(simplex)
    simplex, values = _sorted(simplex, values)
    history = [(iteration_offset, values[0])]
    if callback is not None:
        callback(iteration_offset, simplex[0].copy(), values[0])

    iterations = 0
    x_converged = False
    while True:
        if iterations >= max_iterations:
            termination = MAX_ITER
            break
        if evaluate.exhausted():
            termination = MAX_EVALS
            break
        x_spread = np.max(np.abs(simplex[1:] - simplex[0]))
        f_spread = np.max(np.abs(values[1:] - values[0]))
        if x_spread <= opts.xatol and f_spread <= opts.fatol:
            termination = FATOL if x_converged else XATOL
            break
        x_converged = x_spread <= opts.xatol

        centroid = np.add.reduce(simplex[:-1], 0) / dimension
        worst = simplex[-1]
        reflected = (1 + rho) * centroid - rho * worst
        f_reflected = evaluate(reflected)
        shrink = False

        if f_reflected < values[0]:
            expanded = (1 + rho * chi) * centroid - rho * chi * worst
            f_expanded = evaluate(expanded)
            if f_expanded < f_reflected:
                simplex[-1], values[-1] = expanded, f_expanded
            else:
                simplex[-1], values[-1] = reflected, f_reflected
        elif f_reflected <= values[-2]:
            # ties go to the reflected point
            simplex[-1], values[-1] = reflected, f_reflected
        elif f_reflected < values[-1]:
            contracted = (1 + psi * rho) * centroid - psi * rho * worst
            f_contracted = evaluate(contracted)
            if f_contracted <= f_reflected:
                simplex[-1], values[-1] = contracted, f_contracted
            else:
                shrink = True
        else:
            contracted = (1 - psi) * centroid + psi * worst
            f_contracted = evaluate(contracted)
            if f_contracted < values[-1]:
                simplex[-1], values[-1] = contracted, f_contracted
            else:
                shrink = True

        if shrink:
            simplex[1:] = simplex[0] + sigma * (simplex[1:] - simplex[0])
            values[1:] = evaluate.batch(simplex[1:])

        simplex, values = _sorted(simplex, values)
        iterations += 1
        history.append((iteration_offset + iterations, values[0]))
        if callback is not None:
            callback(iteration_offset + iterations, simplex[0].copy(), values[0])

    return NmOutcome(simplex[0].copy(), float(values[0]), iterations, termination,
                     [(iteration, float(value)) for iteration, value in history],
                     evaluate.count)


def _executor(opts):
    if opts.workers > 1:
        return ThreadPoolExecutor(max_workers=opts.workers)
    return None


def nelder_mead(objective, x0, opts=None, callback=None):
    """
    Minimize an objective with the Nelder-Mead simplex method.

    Args:
        objective: callable mapping a 1D float array to a float; must be
            reentrant when opts.workers > 1.
        x0: starting point.
        opts: NmOptions. (default: {NmOptions()})
        callback: optional callable(iteration, best_point, best_value)
            invoked after the initial simplex and every cycle.

    Returns:
        NmOutcome. The run is deterministic given objective, x0 and opts.

    Raises:
        NonFiniteObjectiveException: the objective returned NaN or Inf.

    """
    opts = opts or NmOptions()
    executor = _executor(opts)
    try:
        evaluate = _Evaluator(objective, opts.max_evaluations, executor)
        return _minimize(evaluate, x0, opts, callback, 0)
    finally:
        if executor is not None:
            executor.shutdown()


def restarted_minimize(objective, x0, opts=None, restarts=1, callback=None, restart_point=None):
    """
    Run Nelder-Mead several times, restarting around the incumbent.

    The iteration counter keeps increasing across runs; the initial simplex
    of run r > 0 shares its iteration number with the last cycle of run
    r - 1. History entries hold the best value seen so far over all runs.

    Args:
        objective: callable mapping a 1D float array to a float.
        x0: starting point of the first run.
        opts: NmOptions; max_evaluations is shared by all runs.
            (default: {NmOptions()})
        restarts: number of runs, at least 1. (default: {1})
        callback: optional callable(iteration, best_point, best_value)
            receiving the overall best. (default: {None})
        restart_point: optional callable(run_index, incumbent_point)
            returning the starting point of run_index > 0; None restarts
            from the incumbent. (default: {None})

    Returns:
        NmOutcome with the overall best point.

    Raises:
        InvalidOptionsException: restarts < 1.
        NonFiniteObjectiveException: the objective returned NaN or Inf.

    """
    if restarts < 1:
        raise vqss_errors.InvalidOptionsException("restarts must be >= 1, got {}".format(restarts))
    opts = opts or NmOptions()
    executor = _executor(opts)
    evaluate = _Evaluator(objective, opts.max_evaluations, executor)
    best = {'point': None, 'value': np.inf}

    def track(iteration, point, value):
        if value < best['value']:
            best['point'], best['value'] = point, value
        if callback is not None:
            callback(iteration, best['point'], best['value'])

    history = []
    iterations = 0
    runs = 0
    start = np.asarray(x0, dtype=float)
    try:
        for run in range(restarts):
            if run > 0:
                if restart_point is None:
                    start = best['point']
                else:
                    start = np.asarray(restart_point(run, best['point'].copy()), dtype=float)
            outcome = _minimize(evaluate, start, opts, track, iterations)
            runs += 1
            for iteration, value in outcome.history:
                if history and history[-1][0] == iteration:
                    history[-1] = (iteration, min(history[-1][1], value))
                else:
                    previous = history[-1][1] if history else np.inf
                    history.append((iteration, min(previous, value)))
            iterations += outcome.iterations_used
            vqss_log.info("Run {}/{} finished after {} iterations ({}), best {:.6e}".format(
                run + 1, restarts, outcome.iterations_used, outcome.termination, best['value']))
            if outcome.termination == MAX_EVALS:
                break
    finally:
        if executor is not None:
            executor.shutdown()

    return NmOutcome(best['point'].copy(), float(best['value']), iterations, outcome.termination,
                     history, evaluate.count, runs)
