"""Exception types shared across the package.

Plain argument validation (bad lengths, out-of-range ids, wrong counts)
raises ``ValueError``; the classes below mark conditions a caller may
reasonably want to catch and handle separately.
"""


class MultipleEssentialClasses(ValueError):
    """The uniform walk has no unique stationary distribution."""


class NonConvergence(RuntimeError):
    """An iteration hit its cap before reaching tolerance."""


class MixingTimeout(RuntimeError):
    """A mixing-time scan exceeded the step cap (slow or periodic chain)."""


class InconsistentReset(ValueError):
    """The queried vector is not a PageRank for the given reset vector."""


class AllZeroMin(ValueError):
    """Entrywise minimum of the vectors is identically zero."""


class AllZeroMedian(ValueError):
    """Entrywise median of the vectors is identically zero."""


class IncoherentCenters(ValueError):
    """Center set has no common reachable vertex."""


class EmptyTrustedSet(ValueError):
    """A ranking algorithm was invoked with no trusted vertices."""


class DegenerateCost(ValueError):
    """No rank mass is purchasable, so the cost function is undefined."""


class TrustedPurchase(ValueError):
    """An attack attempted to purchase a trusted vertex."""


class InvalidBase(ValueError):
    """The base graph does not have the shape the attack requires."""


class MissingEdge(ValueError):
    """The named edge is not present in the graph."""


class UnknownSuite(ValueError):
    """No verification suite is registered under the given name."""
