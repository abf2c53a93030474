"""Exception hierarchy shared by all pcortho modules."""


class PcorthoError(Exception):
    """Base class for all errors raised by this package."""


class MatrixFormatError(PcorthoError):
    """Input file could not be parsed into a square numeric matrix."""


class ShapeMismatch(PcorthoError):
    """Operands have incompatible shapes or orders."""


class LengthMismatch(PcorthoError):
    """Half-vector length is not triangular / does not match the stated order."""


class OrderTooSmall(PcorthoError):
    """Matrix order below the supported minimum (n >= 2)."""


class NotReciprocal(PcorthoError):
    """A pairwise comparison matrix violates m_ij * m_ji = 1 beyond tolerance."""


class NotConsistent(PcorthoError):
    """A matrix expected to be (additively) consistent is not, within tolerance."""


class NonPositiveWeight(PcorthoError):
    """A weight vector entry is zero or negative."""


class NotSymmetric(PcorthoError):
    """A matrix required to be symmetric is not, within tolerance."""


class NotPositiveDefinite(PcorthoError):
    """A weight matrix failed the positive-definiteness check."""


class ZeroMatrix(PcorthoError):
    """An operation is undefined for the zero matrix."""


class DegenerateElement(PcorthoError):
    """Gram-Schmidt residual collapsed: the input family is linearly dependent."""


class SingularGram(PcorthoError):
    """The Gram matrix of a basis is numerically singular."""
