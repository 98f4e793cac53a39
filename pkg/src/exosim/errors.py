"""Exception types shared across the package.

The CLI maps these onto process exit codes: configuration and schema
problems exit with 2, numerical failures with 3, I/O failures with 4.
"""


class ExosimError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(ExosimError):
    """A parameter or argument violates its documented precondition."""


class NonFiniteInputError(ExosimError):
    """A signal sample or state variable is NaN or infinite."""


class ConfigError(ExosimError):
    """A configuration file is malformed or contains unknown/invalid keys."""


class CsvSchemaError(ExosimError):
    """An input CSV does not match the expected schema.

    ``line`` is the 1-based line number of the offending row (header is
    line 1), or None when the problem is not tied to a single line.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NoFeasiblePointError(ExosimError):
    """Every point of a gain-tuning grid violated the quality constraint."""
