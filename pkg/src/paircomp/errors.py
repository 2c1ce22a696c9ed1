"""Exception hierarchy shared by all paircomp modules.

Every error carries a stable machine-readable ``code`` (its class name) so
the CLI and the HTTP service can surface it without string matching.
"""

from __future__ import annotations


class PaircompError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# -- group / orderability ----------------------------------------------------

class UnknownGroup(PaircompError):
    pass


class MembershipError(PaircompError):
    """Value is not a member of the given multiplicative structure."""


class NotTotallyOrdered(PaircompError):
    """The supplied comparator is undefined on a sampled pair."""


# -- matrix validation -------------------------------------------------------

class DiagonalNotIdentity(PaircompError):
    pass


class ReciprocityViolation(PaircompError):
    def __init__(self, i: int, j: int, message: str | None = None):
        self.i, self.j = i, j
        super().__init__(message or f"entry ({j},{i}) is not the inverse of entry ({i},{j})")


class StrictModeViolation(PaircompError):
    pass


class NonMember(PaircompError):
    pass


class UndefinedForGroup(PaircompError):
    """Operation defined only over positive reals was asked of another carrier."""


# -- tree completion ---------------------------------------------------------

class NotATree(PaircompError):
    pass


class DuplicateEdge(PaircompError):
    pass


# -- solvers -----------------------------------------------------------------

class NoRealRoot(PaircompError):
    """Even-degree real root of a negative product does not exist; use branch enumeration."""


class ComplexEntries(PaircompError):
    """Real-branch solver got complex entries; use branch enumeration."""


class NotPositive(PaircompError):
    pass


class NoConvergence(PaircompError):
    def __init__(self, iterations: int):
        self.iterations = iterations
        super().__init__(f"no convergence after {iterations} iterations")


class NotSymmetric(PaircompError):
    pass


class ZeroWeight(PaircompError):
    pass


class NotOrderable(PaircompError):
    """Ranking refused: weights do not live in a linearly orderable carrier."""


# -- transforms --------------------------------------------------------------

class ZeroEntry(PaircompError):
    pass


# -- fixtures / io -----------------------------------------------------------

class UnknownFixture(PaircompError):
    pass


class ParseError(PaircompError):
    pass


# -- elicitation sessions ----------------------------------------------------

class UnknownSession(PaircompError):
    pass


class SelfComparison(PaircompError):
    pass


class NonPositiveValue(PaircompError):
    pass


class DuplicateLabels(PaircompError):
    pass


class BadSize(PaircompError):
    pass
