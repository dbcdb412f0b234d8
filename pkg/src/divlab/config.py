"""Resource budgets and the exception hierarchy.

Symbolic computations can blow up; every potentially unbounded loop in the
Groebner kernel is guarded by a Budget.  Hitting a limit raises
ResourceLimitError -- a hard, reported error, never a silently truncated
answer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_PAIRS = "DIVLAB_MAX_PAIRS"
ENV_MAX_DEGREE = "DIVLAB_MAX_DEGREE"

DEFAULT_MAX_PAIRS = 200_000
DEFAULT_MAX_DEGREE = 120

HIGH_MAX_PAIRS = 5_000_000
HIGH_MAX_DEGREE = 400


class DivlabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DivlabError):
    """Syntax error in polynomial input; carries the offending position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PreconditionError(DivlabError):
    """An operation's stated precondition is violated (e.g. non-reduced f)."""


class ResourceLimitError(DivlabError):
    """A configured resource limit (pair count / degree bound) was exceeded."""


class NotDivisibleError(DivlabError):
    """Raised by operations that require an exact polynomial quotient."""


@dataclass(frozen=True)
class Budget:
    """Limits for a single symbolic computation.

    max_pairs counts critical-pair reductions across one Buchberger run;
    max_degree bounds the total degree of any polynomial created during
    reduction.  Defaults are generous: the whole non-expensive catalog fits
    well inside them.
    """

    max_pairs: int = DEFAULT_MAX_PAIRS
    max_degree: int = DEFAULT_MAX_DEGREE

    def check_degree(self, degree, context=""):
        if degree > self.max_degree:
            raise ResourceLimitError(
                f"degree limit exceeded: {degree} > {self.max_degree}"
                + (f" while {context}" if context else "")
            )


def default_budget() -> Budget:
    """Budget from the environment (DIVLAB_MAX_PAIRS / DIVLAB_MAX_DEGREE).

    Command-line flags override these; see the cli module.
    """
    return Budget(
        max_pairs=int(os.environ.get(ENV_MAX_PAIRS, DEFAULT_MAX_PAIRS)),
        max_degree=int(os.environ.get(ENV_MAX_DEGREE, DEFAULT_MAX_DEGREE)),
    )


def high_budget() -> Budget:
    return Budget(max_pairs=HIGH_MAX_PAIRS, max_degree=HIGH_MAX_DEGREE)
