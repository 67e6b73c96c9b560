"""Exception hierarchy shared by all modules.

Exit-code mapping used by the CLI lives in cli.py; library code raises
these and never calls sys.exit.
"""


class GKZError(Exception):
    """Base class for all library errors."""


class ConfigurationError(GKZError):
    """Input matrix violates the standing hypotheses (rank, distinct
    columns, homogeneity) or a JSON payload is malformed."""


class ParseError(GKZError):
    """Expression text is not in the grammar.  Carries a position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(GKZError):
    """An operation was called outside its mathematical domain, e.g.
    factorial of a negative argument or division by the zero polynomial."""


class BudgetExceeded(GKZError):
    """A step budget (Groebner reduction steps, search nodes) ran out."""


class SearchSpaceExceeded(BudgetExceeded):
    """The combinatorial search space is too large for the configured cap."""


class DegenerateInstance(GKZError):
    """A residue/resultant instance has a forbidden common zero or a pole
    on the torus boundary."""
