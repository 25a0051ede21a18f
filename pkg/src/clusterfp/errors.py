"""Exception types raised by the library.

Every contract violation gets its own class so callers (and the CLI) can tell
input mistakes apart from genuine verification failures.
"""


class ClusterError(Exception):
    """Base class for all library-specific errors."""


# matrix / type validation

class NotSkewSymmetrizable(ClusterError):
    """No positive integer diagonal D makes DB skew-symmetric."""


class NotClassicalType(ClusterError):
    """The matrix is not an orientation of an A/B/C/D Dynkin diagram."""


class NotAcyclic(ClusterError):
    """The quiver of the matrix contains an oriented cycle."""


# Laurent arithmetic

class NotDivisible(ClusterError):
    """Exact division failed: the quotient is not a Laurent polynomial over Z."""


class NegativeExponentOnNonMonomial(ClusterError):
    """Substitution needs the inverse of an image that is not a unit monomial."""


# seed mutation / enumeration

class LaurentPhenomenonViolation(ClusterError):
    """A mutated cluster variable failed to be a Laurent polynomial."""


class NotPolynomial(ClusterError):
    """Expected an ordinary polynomial but found negative exponents."""


class NoConstantTerm(ClusterError):
    """Expected constant term 1 and found something else."""


class AmbiguousGVector(ClusterError):
    """The coefficient-free part of a cluster variable is not a single monomial."""


class CapExceeded(ClusterError):
    """Exchange-graph search outgrew the configured seed cap."""


class MissingRoot(ClusterError):
    """Enumeration produced no cluster variable for some expected denominator."""


class ExtraRoot(ClusterError):
    """Enumeration produced a denominator outside the expected root list."""


# closed formulas

class RootNotInType(ClusterError):
    """The requested denominator vector is not a positive root of the type."""


# folding

class NotInvariant(ClusterError):
    """The matrix is not invariant under the symmetry group action."""


class WrongType(ClusterError):
    """Operation defined only for specific Cartan families."""


class NotAdmissible(ClusterError):
    """Orbit mutation attempted at an orbit with arrows inside it."""


class NoUnfoldedRoot(ClusterError):
    """No root of the unfolded type projects onto the requested one."""


# polygon model

class NotARoot(ClusterError):
    """A crossing vector fell outside the positive root list."""


class QuadrilateralNotFound(ClusterError):
    """A diagonal of a maximal set did not bound two triangles."""
