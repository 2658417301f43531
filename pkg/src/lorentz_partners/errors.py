"""Exception hierarchy.

Every error raised by the kernel derives from :class:`LorentzCurveError` and
carries an ``exit_code`` used by the command line front end: 2 for usage
problems (bad names, inadmissible cases), 3 for numerical failures.
"""


class LorentzCurveError(Exception):
    exit_code = 3


class UsageError(LorentzCurveError):
    exit_code = 2


class NumericalError(LorentzCurveError):
    exit_code = 3


# lorentz_core
class NullVectorError(NumericalError):
    pass


# curve_model
class LightlikeTangentError(NumericalError):
    pass


class NonMonotoneError(NumericalError):
    pass


class GridTooSmall(NumericalError):
    pass


class NonUnitFieldError(NumericalError):
    pass


# frenet
class FrameUndefinedError(NumericalError):
    pass


class LightlikeNormalError(NumericalError):
    pass


class MixedTypeError(NumericalError):
    pass


# direction_curves
class CaseMismatchError(UsageError):
    pass


class DegenerateKappaBarError(NumericalError):
    pass


class RadicandNegativeError(NumericalError):
    pass


class GridMismatchError(NumericalError):
    pass


# characterization
class DegenerateKappaError(NumericalError):
    pass


class NoApplicableVariantError(NumericalError):
    pass


# catalog / cli
class UnknownCurveError(UsageError):
    pass


class ParamOutOfRangeError(UsageError):
    pass


class IoError(LorentzCurveError):
    exit_code = 3
