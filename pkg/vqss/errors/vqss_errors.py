"""
Custom Exception module.

This module contains custom exceptions used throughout the vqss module.
"""


class VqssException(Exception):
    """
    Base exception of the vqss module.

    Every other custom exception extends this one, so a caller can catch all
    failures raised by the package with a single except clause.

    """

    pass


class InvalidMatrixException(VqssException):
    """Exception to signify a matrix that is not 2D or holds NaN/Inf."""

    pass


class DimensionMismatchException(VqssException):
    """Exception to signify incompatible shapes or qubit counts."""

    pass


class NotHermitianException(VqssException):
    """Exception to signify a matrix that should be Hermitian but is not."""

    pass


class InvalidDensityMatrixException(VqssException):
    """
    Exception to signify a broken density matrix.

    Raised when a matrix is not Hermitian, does not have unit trace or has
    an eigenvalue below the PSD tolerance.

    """

    pass


class InvalidStateVectorException(VqssException):
    """Exception to signify a state vector of wrong length or norm."""

    pass


class QubitIndexException(VqssException):
    """Exception to signify a qubit index out of range or control = target."""

    pass


class NonUnitaryGateException(VqssException):
    """Exception to signify a gate matrix that is not unitary."""

    pass


class InvalidGateException(VqssException):
    """Exception to signify an unknown gate description."""

    pass


class InvalidAnsatzConfigException(VqssException):
    """Exception to signify an ansatz shape that breaks its invariants."""

    pass


class ParameterLengthException(VqssException):
    """Exception to signify a parameter vector of the wrong length."""

    pass


class InvalidModelException(VqssException):
    """Exception to signify an inconsistent Lindblad model description."""

    pass


class DegenerateSteadyStateException(VqssException):
    """
    Exception to signify that the steady state is not unique.

    Attributes:
        singular_values: the two smallest singular values of the
            superoperator, ascending.

    """

    def __init__(self, message, singular_values):
        """
        Initialize DegenerateSteadyStateException.

        Args:
            message: human readable description.
            singular_values: the two smallest singular values, ascending.

        """
        super().__init__(message)
        self.singular_values = tuple(singular_values)


class SteadyStateNotConvergedException(VqssException):
    """
    Exception to signify an oracle solve with a too large residual.

    Attributes:
        residual: Frobenius norm of the Liouvillian applied to the result.

    """

    def __init__(self, message, residual):
        """
        Initialize SteadyStateNotConvergedException.

        Args:
            message: human readable description.
            residual: the offending residual.

        """
        super().__init__(message)
        self.residual = residual


class IntegrationException(VqssException):
    """Exception to signify an unstable fixed-step integration (dt too large)."""

    pass


class InvalidOptionsException(VqssException):
    """Exception to signify optimizer or solver options breaking invariants."""

    pass


class NonFiniteObjectiveException(VqssException):
    """
    Exception to signify an objective returning NaN or Inf.

    Attributes:
        point: the point the objective was evaluated at.
        value: the returned value.

    """

    def __init__(self, message, point, value):
        """
        Initialize NonFiniteObjectiveException.

        Args:
            message: human readable description.
            point: the offending point.
            value: the non-finite value.

        """
        super().__init__(message)
        self.point = point
        self.value = value


class InvalidConfigException(VqssException):
    """
    Exception to signify an invalid experiment configuration.

    Attributes:
        line: 1-based line number of the offending line, or None when the
            problem is not tied to a single line.
        key: config key the problem belongs to, or None.
        detail: the message without the line prefix.

    """

    def __init__(self, message, line=None, key=None):
        """
        Initialize InvalidConfigException.

        Args:
            message: human readable description.
            line: 1-based line number. (default: {None})
            key: offending config key. (default: {None})

        """
        self.detail = message
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)
        self.line = line
        self.key = key


class OutputWriteException(VqssException):
    """Exception to signify a failure writing result files."""

    pass


class CallbackNotCallableException(VqssException):
    """
    Exception to signify Callback not being callable.

    This custom Exception extends the VqssException class and implements no
    custom methods.

    """

    pass
