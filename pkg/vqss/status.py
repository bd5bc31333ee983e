"""
Status module for the vqss module.

Status module to keep track of which phase an experiment is in.

Attributes:
    LOADING: Config loading phase status.
    BUILDING_MODEL: Model and ansatz construction phase status.
    SOLVING_ORACLE: Exact steady state phase status.
    OPTIMIZING: Variational optimization phase status.
    SAVING: Result writing phase status.
    DONE: Finished phase status.
    FAILED: Aborted phase status.

"""
import logging
from .errors import vqss_errors


LOADING = "Loading"
BUILDING_MODEL = "Building Model"
SOLVING_ORACLE = "Solving Oracle"
OPTIMIZING = "Optimizing"
SAVING = "Saving"
DONE = "Done"
FAILED = "Failed"


class Status:
    """
    Status tracking class.

    Tracks the phase of an experiment and notifies an optional callback on
    every change.
    """

    def __init__(self):
        """
        Initialize the Status class.

        Initializes the Status class, which handles changing the experiment's
        status flag.

        """
        self.vqss_log = logging.getLogger(__name__)
        self.vqss_log.addHandler(logging.NullHandler())
        self.callback = None
        self.current_status = None

    def set_callback(self, callback):
        """
        Set the callback.

        Sets the callback attribute.

        Args:
            callback: Callback reference, called with this Status instance.

        Raises:
            CallbackNotCallableException: Custom exception to signify invalid
            callback.

        """
        if not callable(callback):
            msg = "Status callback must be callable, got {!r}".format(callback)
            self.vqss_log.error("Error setting callback: {}".format(msg))
            raise vqss_errors.CallbackNotCallableException(msg)
        self.callback = callback
        self.vqss_log.debug("Callback {} has been set.".format(callback))
        return True

    def is_running(self):
        """
        Checks if an experiment phase is in progress.

        Returns:
            True, if a phase between LOADING and SAVING is active,
            False, Otherwise.
        """
        return self.current_status in (LOADING, BUILDING_MODEL, SOLVING_ORACLE, OPTIMIZING, SAVING)

    def is_optimizing(self):
        """
        Checks if the status is optimizing.

        Returns:
            True, if state is "OPTIMIZING",
            False, Otherwise.
        """
        return self.current_status == OPTIMIZING

    def is_done(self):
        """
        Checks if the status is done.

        Returns:
            True, if state is "DONE",
            False, Otherwise.
        """
        return self.current_status == DONE

    def is_failed(self):
        """
        Checks if the status is failed.

        Returns:
            True, if state is "FAILED",
            False, Otherwise.
        """
        return self.current_status == FAILED

    def get_status(self):
        """
        Current phase of the experiment.

        Returns:
            One of the phase constants, None before the first phase.

        """
        return self.current_status

    def set_status(self, status):
        """
        Set the current status.

        Stores one of the phase constants and notifies the callback.

        Args:
            status: one of the phase constants of this module.

        """
        self.current_status = status
        self.vqss_log.debug("Status: {}".format(status))
        if self.callback is not None:
            self.callback(self)
