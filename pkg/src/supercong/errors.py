"""Exception types shared across the package."""


class SupercongError(Exception):
    """Base class for package-specific errors."""


class InvalidPrime(SupercongError):
    """Value is not an odd prime >= 5."""


class NotPAdicInteger(SupercongError):
    """Rational has the working prime in its denominator."""


class PrecisionMismatch(SupercongError):
    """Arithmetic between residues of different precision, or an unsupported precision."""


class NonUnitDivisor(SupercongError):
    """Inversion or division by a residue that is not a unit."""


class WrongResidueClass(SupercongError):
    """Prime lies outside the residue class the operation requires."""


class WeightZero(SupercongError):
    """Weighted point count requested with weight exponent 0."""


class BudgetExceeded(SupercongError):
    """A run used up its time budget before finishing."""


class UnknownId(SupercongError):
    """Family or identity id not present in the catalog."""
