"""Exception hierarchy.

Input errors derive from :class:`InputError` (CLI exit code 2), cost-cap
violations from :class:`BudgetExceeded` (exit 3) and internal consistency
violations from :class:`InvariantFailure` (exit 4).
"""


class HessianError(Exception):
    pass


class InputError(HessianError, ValueError):
    pass


class InvariantFailure(HessianError, RuntimeError):
    pass


class BudgetExceeded(HessianError):
    pass


class CharacteristicTooSmall(InputError):
    pass


class NotPrime(InputError):
    pass


class FieldTooLarge(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class LevelMismatch(InputError):
    pass


class NotCoprime(InputError):
    pass


class BadResidue(InputError):
    pass


class NotInG(InputError):
    pass


class InfinityModelUnavailable(InputError):
    pass


class IntegralityFailure(InvariantFailure):
    pass


class FunctionalEquationFailure(InvariantFailure):
    pass


class RankMismatch(InvariantFailure):
    pass


class SpecialValueMismatch(InvariantFailure):
    pass
