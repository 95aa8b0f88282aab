"""
Exception and warning types raised by the geoline package.

The CLI maps :class:`DomainError` to exit code 2 and :class:`SolverError` to
exit code 3; the HTTP API maps them to 422 and 409.
"""

from __future__ import annotations


class GeolineError(Exception):
    """Base class of every error raised by geoline."""


class DomainError(GeolineError, ValueError):
    """A parameter lies outside the domain of the reduction."""


class SingularityError(DomainError):
    """The latitude limit reaches the branch point τ = b."""


class UnsupportedIndexError(GeolineError, ValueError):
    """No reduction exists for the requested (β, k) or (s, k) indices."""


class QuadratureError(GeolineError, RuntimeError):
    """Adaptive quadrature hit its subdivision limit."""


class SolverError(GeolineError, RuntimeError):
    """The inverse problem could not be solved."""


class NoBracketError(SolverError):
    """The target longitude difference is not attainable on [0, c_upper]."""


class ConvergenceError(SolverError):
    """Newton/bisection did not converge within the iteration budget."""


class SeriesConvergenceWarning(UserWarning):
    """The last retained order of an altitude series is not small."""
