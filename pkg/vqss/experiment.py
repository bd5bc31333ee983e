"""
The experiment module.

Stores the ExperimentConfig class: one validated run description that knows
how to build its Lindblad model, ansatz and solver settings.

Attributes:
    MODELS: Supported model names.
    MODEL_KEYS: Coefficient keys each model accepts.

"""
import logging
import math

from .circuits.ansatz import AnsatzConfig
from .errors import vqss_errors
from .lindblad import model as model_module
from .variational.solver import SolveConfig


MODELS = ("tfim", "xyz", "custom")

MODEL_KEYS = {
    "tfim": ("v", "g"),
    "xyz": ("jx", "jy", "jz"),
    "custom": ("hx", "hy", "hz", "jx", "jy", "jz"),
}


class ExperimentConfig:
    """
    Experiment configuration instance.

    Stores the model choice and coefficients, the ansatz shape and the
    optimizer settings of one run.
    """

    def __init__(
        self,
        model,
        sites,
        gamma,
        coefficients=None,
        ancillas=None,
        layers=4,
        seed=0,
        restarts=3,
        max_iter_multiplier=200,
        max_evaluations=None,
        fidelity_log_stride=50,
        xatol=1e-8,
        fatol=1e-8,
        restart_from_incumbent=True,
        workers=1,
        output_dir="results"
    ):
        """
        Initialize the ExperimentConfig class.

        Args:
            model: one of MODELS.
            sites: number of spins.
            gamma: dissipation rate of every lowering channel.
            coefficients: dictionary of model coefficients, keys from
                MODEL_KEYS[model]; missing ones are 0. (default: {None})
            ancillas: ancilla qubits; None uses one per site.
                (default: {None})
            layers: circuit layers. (default: {4})
            seed: seed of the initial angles. (default: {0})
            restarts: Nelder-Mead runs. (default: {3})
            max_iter_multiplier: cycle cap per parameter per run.
                (default: {200})
            max_evaluations: loss evaluation budget. (default: {None})
            fidelity_log_stride: cycles between fidelity records.
                (default: {50})
            xatol: simplex size tolerance. (default: {1e-8})
            fatol: function spread tolerance. (default: {1e-8})
            restart_from_incumbent: restart around the best point.
                (default: {True})
            workers: evaluation threads. (default: {1})
            output_dir: directory of the result files.
                (default: {"results"})

        Raises:
            InvalidConfigException: a value breaks the config invariants.

        """
        self.vqss_log = logging.getLogger(__name__)
        self.vqss_log.addHandler(logging.NullHandler())
        if model not in MODELS:
            raise vqss_errors.InvalidConfigException(
                "model must be one of {}, got '{}'".format(", ".join(MODELS), model), key="model")
        coefficients = dict(coefficients or {})
        unknown = sorted(set(coefficients) - set(MODEL_KEYS[model]))
        if unknown:
            raise vqss_errors.InvalidConfigException(
                "key '{}' does not apply to model '{}'".format(unknown[0], model), key=unknown[0])
        for key in sorted(coefficients):
            if not math.isfinite(coefficients[key]):
                raise vqss_errors.InvalidConfigException(
                    "{} must be finite, got {}".format(key, coefficients[key]), key=key)
        minimum_sites = 1 if model == "custom" else 2
        if sites < minimum_sites:
            raise vqss_errors.InvalidConfigException(
                "model '{}' needs sites >= {}, got {}".format(model, minimum_sites, sites), key="sites")
        if sites == 1 and any(coefficients.get(key) for key in ("jx", "jy", "jz")):
            raise vqss_errors.InvalidConfigException(
                "couplings need sites >= 2, got sites = 1", key="sites")
        if ancillas is None:
            ancillas = sites
        if not 0 <= ancillas <= sites:
            raise vqss_errors.InvalidConfigException(
                "ancillas must be in [0, sites={}], got {}".format(sites, ancillas), key="ancillas")
        if not math.isfinite(gamma) or gamma < 0:
            raise vqss_errors.InvalidConfigException(
                "gamma must be finite and >= 0, got {}".format(gamma), key="gamma")
        for key, value in (("layers", layers), ("restarts", restarts),
                           ("max_iter_multiplier", max_iter_multiplier),
                           ("fidelity_log_stride", fidelity_log_stride), ("workers", workers)):
            if value < 1:
                raise vqss_errors.InvalidConfigException(
                    "{} must be >= 1, got {}".format(key, value), key=key)
        if seed < 0:
            raise vqss_errors.InvalidConfigException("seed must be >= 0, got {}".format(seed), key="seed")
        if max_evaluations is not None and max_evaluations < 1:
            raise vqss_errors.InvalidConfigException(
                "max_evaluations must be >= 1, got {}".format(max_evaluations), key="max_evaluations")
        for key, value in (("xatol", xatol), ("fatol", fatol)):
            if not math.isfinite(value) or value <= 0:
                raise vqss_errors.InvalidConfigException(
                    "{} must be finite and > 0, got {}".format(key, value), key=key)

        self.model = model
        self.sites = sites
        self.gamma = gamma
        self.coefficients = {key: float(coefficients.get(key, 0.0)) for key in MODEL_KEYS[model]}
        self.ancillas = ancillas
        self.layers = layers
        self.seed = seed
        self.restarts = restarts
        self.max_iter_multiplier = max_iter_multiplier
        self.max_evaluations = max_evaluations
        self.fidelity_log_stride = fidelity_log_stride
        self.xatol = xatol
        self.fatol = fatol
        self.restart_from_incumbent = restart_from_incumbent
        self.workers = workers
        self.output_dir = output_dir

        msg = "ExperimentConfig debug: {}".format(self.as_dict())
        self.vqss_log.debug(msg)

    def build_model(self):
        """
        Build the Lindblad model.

        Returns:
            LindbladModel of the configured chain.

        """
        if self.model == "tfim":
            return model_module.tfim_model(self.sites, gamma=self.gamma, **self.coefficients)
        if self.model == "xyz":
            return model_module.xyz_model(self.sites, gamma=self.gamma, **self.coefficients)
        return model_module.custom_model(self.sites, self.gamma, **self.coefficients)

    def ansatz_config(self):
        """Return the AnsatzConfig of the run."""
        return AnsatzConfig(self.sites, self.ancillas, self.layers)

    def solve_config(self):
        """Return the SolveConfig of the run."""
        return SolveConfig(
            self.ansatz_config(),
            restarts=self.restarts,
            max_iter_multiplier=self.max_iter_multiplier,
            seed=self.seed,
            fidelity_log_stride=self.fidelity_log_stride,
            convergence_ftol=self.fatol,
            xatol=self.xatol,
            max_evaluations=self.max_evaluations,
            restart_from_incumbent=self.restart_from_incumbent,
            workers=self.workers
        )

    def as_dict(self):
        """
        Flat dictionary of the config.

        Returns:
            Dictionary using the config file keys, echoed in summary.json.

        """
        encoded = {
            'model': self.model,
            'sites': self.sites,
            'gamma': self.gamma,
            'ancillas': self.ancillas,
            'layers': self.layers,
            'seed': self.seed,
            'restarts': self.restarts,
            'max_iter_multiplier': self.max_iter_multiplier,
            'max_evaluations': self.max_evaluations,
            'fidelity_log_stride': self.fidelity_log_stride,
            'xatol': self.xatol,
            'fatol': self.fatol,
            'restart_from_incumbent': self.restart_from_incumbent,
            'workers': self.workers,
            'output_dir': self.output_dir,
        }
        encoded.update(self.coefficients)
        return encoded
