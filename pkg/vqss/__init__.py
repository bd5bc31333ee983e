"""
Variational stationary-state solver for Lindblad open quantum systems.

Stores the Vqss class functionality.
"""

import inspect
import logging
import os

from . import status
from .data_operation import data_manager
from .errors import vqss_errors
from .lindblad.steady_state import solve_steady_state
from .variational.solver import solve


class Vqss:
    """
    The main package class.

    Loads an experiment config, builds its Lindblad model, checks the exact
    steady state and runs the variational solve, saving every output file.
    """
    __version__ = "0.3.0"

    def __init__(
        self,
        config_file_name,
        abs_config_path=None,
        seed=None,
        output_dir=None
    ):
        """
        Initialize vqss class.

        Reads and validates the experiment config. The model is built on
        first use.

        Args:
            config_file_name: name of a key value experiment config file.
            abs_config_path: The absolute path relative config names resolve
                against. If none is given, it will be set to where it was
                imported from. (default: {None})
            seed: replaces the config seed. (default: {None})
            output_dir: replaces the config output_dir. (default: {None})

        Raises:
            FileNotFoundError: the config file does not exist.
            InvalidConfigException: the config is malformed or invalid.

        """
        self.vqss_log = logging.getLogger(__name__)
        self.vqss_log.addHandler(logging.NullHandler())

        stack = inspect.stack()[1][1]
        if abs_config_path:
            self.path_to_calling_file = abs_config_path
        else:
            self.path_to_calling_file = os.path.dirname(os.path.abspath(stack))

        self.status = status.Status()
        self.model = None
        self.oracle_report = None
        self.written_files = []
        self.status.set_status(status.LOADING)
        try:
            self.data_manager = data_manager.DataManager(
                config_file_name=config_file_name,
                path_to_calling_file=self.path_to_calling_file,
                overrides={'seed': seed, 'output_dir': output_dir}
            )
        except (FileNotFoundError, vqss_errors.InvalidConfigException) as e:
            self.vqss_log.error("Failed to load config: {}".format(e))
            self.status.set_status(status.FAILED)
            raise e

    def get_status(self):
        """
        Vqss status.

        Retrieves the status class instance which is set to different statuses
        throughout the experiment.

        Returns:
            A reference to the status object instance.

        """
        return self.status

    def get_config(self):
        """
        Experiment config.

        Returns:
            A reference to the ExperimentConfig instance.

        """
        return self.data_manager.config

    def get_model(self):
        """
        Lindblad model of the experiment.

        Builds the model on the first call.

        Returns:
            A reference to the LindbladModel instance.

        """
        if self.model is None:
            self.status.set_status(status.BUILDING_MODEL)
            self.model = self.get_config().build_model()
            self.vqss_log.info("Built {}".format(self.model))
        return self.model

    def set_status_callback(self, callback):
        """
        Sets the callback for status.

        Sets the callback attribute, called with the Status instance on
        every phase change.

        Args:
            callback: Callback reference.

        Raises:
            CallbackNotCallableException: Custom exception to signify invalid
            callback.

        """
        self.status.set_callback(callback)

    def _solve_oracle(self):
        if self.oracle_report is None:
            model = self.get_model()
            self.status.set_status(status.SOLVING_ORACLE)
            self.oracle_report = solve_steady_state(model)
            self.vqss_log.info("Oracle solved: residual {:.3e}, rank {}".format(
                self.oracle_report.residual, self.oracle_report.rank))
        return self.oracle_report

    def verify_oracle(self):
        """
        Solve and check the exact steady state.

        Returns:
            SteadyStateReport of the configured model.

        Raises:
            DegenerateSteadyStateException: the steady state is not unique.
            SteadyStateNotConvergedException: the residual is too large.

        """
        try:
            report = self._solve_oracle()
        except vqss_errors.VqssException as e:
            self.vqss_log.error("Oracle failed: {}".format(e))
            self.status.set_status(status.FAILED)
            raise e
        self.status.set_status(status.DONE)
        return report

    def run(self):
        """
        Run the experiment.

        Solves the oracle, optimizes the ansatz and saves the trace, both
        density matrices, the summary and four heatmaps to the output
        directory.

        Returns:
            RunResult of the solve.

        Raises:
            VqssException: a phase failed; the status is set to FAILED.

        """
        try:
            report = self._solve_oracle()
            self.status.set_status(status.OPTIMIZING)
            result = solve(self.get_model(), self.get_config().solve_config(), oracle_report=report)
            self.status.set_status(status.SAVING)
            self.written_files = self.data_manager.save_run(result, self.__version__)
        except vqss_errors.VqssException as e:
            self.vqss_log.error("Run failed: {}".format(e))
            self.status.set_status(status.FAILED)
            raise e
        self.status.set_status(status.DONE)
        return result
