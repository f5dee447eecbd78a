"""Exception hierarchy shared by every module of the package."""


class JJError(Exception):
    """Base class for all library errors."""


class DivisionByZero(JJError, ZeroDivisionError):
    pass


class FieldMismatch(JJError):
    pass


class NotEnumerable(JJError):
    pass


class NonPrimeModulus(JJError, ValueError):
    pass


class ClassificationCharUnsupported(JJError):
    """Raised by classification routines that need characteristic != 2, 3."""


class DimensionMismatch(JJError, ValueError):
    pass


class NotContained(JJError):
    pass


class NotCommutative(JJError):
    pass


class NotJacobiJordan(JJError):
    pass


class NotAModule(JJError):
    pass


class ActionNotAnticommuting(JJError):
    pass


class InvalidCrossedSystem(JJError):
    def __init__(self, message, failures=None):
        super().__init__(message)
        self.failures = failures or {}


class InvalidSemidirectSystem(InvalidCrossedSystem):
    pass


class NotAlgebraMap(JJError):
    pass


class NotSection(JJError):
    pass


class InvalidLambda(JJError):
    pass


class InvalidCoflagDatum(JJError):
    pass


class NotCentral(JJError):
    pass


class ZeroAlpha(JJError):
    pass


class ZeroCentral(JJError):
    pass


class BadParameters(JJError, ValueError):
    pass


class CapExceeded(JJError):
    """A search or enumeration hit its configured cap.

    ``partial`` carries whatever was computed before the cap was reached.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(JJError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class UnknownBasisName(ParseError):
    pass
