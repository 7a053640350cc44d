"""Exception classes shared across the package.

Every error raised on purpose derives from :class:`Co0Error`, so callers
(the CLI in particular) can separate input problems from bugs.
"""


class Co0Error(Exception):
    """Base class for all library errors."""


# cyclo
class NotExact(Co0Error):
    """Polynomial division left a nonzero remainder."""


class NotRational(Co0Error):
    """A cyclotomic number expected to be rational was not."""


# chartab
class SchemaError(Co0Error):
    pass


class ValidationError(Co0Error):
    pass


class TableMismatch(Co0Error):
    pass


class NotACharacter(Co0Error):
    pass


class MissingPowerMap(Co0Error):
    pass


class MissingFusionEntry(Co0Error):
    pass


class ConflictingFusion(Co0Error):
    pass


class MissingOrder(Co0Error):
    pass


# frame
class NotCyclotomicProduct(Co0Error):
    pass


class BadConstantTerm(Co0Error):
    pass


class NonUnitDeterminant(Co0Error):
    pass


class VirtualShape(Co0Error):
    """Some eigenvalue multiplicity recovered from a Frame shape is negative."""


class NotCoprime(Co0Error):
    pass


class ParseError(Co0Error):
    pass


# chern
class OddSelfConjugate(Co0Error):
    pass


class NoSpinFactorization(Co0Error):
    pass


class Not24Torsion(Co0Error):
    pass


# mckay
class Inconsistent(Co0Error):
    """Traces do not come from a genuine representation."""


class NotSpinDecomposable(Co0Error):
    pass


# golay
class NotInCode(Co0Error):
    pass


class SignsNotInCode(Co0Error):
    pass


class DimensionOverflow(Co0Error):
    pass


class IdentificationFailure(Co0Error):
    pass


class NotALattice(Co0Error):
    pass


# anomaly / conway
class NotBalanced(Co0Error):
    pass


class NotDivisibleBy3(Co0Error):
    pass


class Unsolvable(Co0Error):
    pass


class NotUnique(Co0Error):
    pass


class NotFound(Co0Error):
    pass
