import logging
from collections.abc import Callable
from functools import wraps
from typing import Any

from colorweight.schemas import CheckResult, VerificationReport

# ============================================================================
# Suite Abstraction
# ============================================================================


class BaseSuite:
    """
    Base class for verification suites.

    Provides common functionality:
    - Dynamic parameter management (set_params/get_params)
    - A named list of checks run in order into one ``VerificationReport``

    Subclasses fill ``checks`` with ``(name, bound_method)`` pairs; every method returns a
    ``CheckResult`` (or a whole ``VerificationReport``, which is flattened) and must not raise
    on a failed identity.
    """

    name: str = "suite"

    def __init__(self, max_order: int = 4):
        self.max_order = max_order
        self.checks: list[tuple[str, Callable[[], CheckResult | VerificationReport]]] = []
        self.logger = logging.getLogger(__name__)

    def set_params(self, **params):
        """
        Set parameters dynamically on the suite instance.

        Args:
            **params: Key-value pairs of parameters to set
        """
        for k, v in params.items():
            if hasattr(self, k):
                setattr(self, k, v)

    def get_params(self):
        """
        Get all public parameters from the suite instance.

        Returns:
            Dict of parameter names and values (excludes private attributes starting with _)
        """
        return {
            key: value
            for key, value in self.__dict__.items()
            if not key.startswith("_") and key not in ("checks", "logger")
        }

    def __call__(self) -> VerificationReport:
        """Run every registered check and collect the results."""
        if not self.checks:
            raise NotImplementedError(f"{self.__class__.__name__} registers no checks")
        results = []
        for name, check in self.checks:
            outcome = check()
            found = outcome.checks if isinstance(outcome, VerificationReport) else [outcome]
            for result in found:
                if not result.passed:
                    level = logging.ERROR if result.assertive else logging.WARNING
                    self.logger.log(level, f"{self.name}: {name} failed on {result.failure}")
            results.extend(found)
        return VerificationReport(suite=self.name, checks=results)


# ============================================================================
# Utility Decorators
# ============================================================================


class Verboser:
    """
    Decorator class controlling how much a check logs.

    Usage:
            @Verboser(verbosity_level=2)
            def check_something(self) -> CheckResult:
                    ...

    Verbosity levels:
            0: No verbosity
            1: Log start and finish
            2: Log start and finish, plus arguments and outcome at debug level
    """

    def __init__(self, verbosity_level: int = 1):
        self.verbosity_level = verbosity_level

    @staticmethod
    def logging_verbosity(func=None, *, debug=False):
        """
        Decorator to log the start and finish of a method using self.__class__.__name__.
        If debug=True, also logs the arguments and the result.
        """

        def decorator(inner_func):
            @wraps(inner_func)
            def wrapper(self, *args, **kwargs):
                logger = logging.getLogger(__name__)
                label = f"{self.__class__.__name__}.{inner_func.__name__}"
                logger.info(f"{label} started")
                if debug:
                    logger.debug(f"{label} input args: {args}, kwargs: {kwargs}")
                result = inner_func(self, *args, **kwargs)
                if debug:
                    logger.debug(f"{label} output: {_summary(result)}")
                logger.info(f"{label} finished")
                return result

            return wrapper

        if func is None:
            return decorator
        else:
            return decorator(func)

    def __call__(self, func):
        """Apply decorators based on verbosity level."""
        if self.verbosity_level == 0:
            return func
        elif self.verbosity_level == 1:
            return self.logging_verbosity(func)
        elif self.verbosity_level >= 2:
            return self.logging_verbosity(func, debug=True)
        return func


def _summary(result: Any) -> str:
    if isinstance(result, CheckResult):
        verdict = "passed" if result.passed else f"failed ({result.failure})"
        return f"{result.name} {verdict} over {result.instances} instances"
    return repr(result)
