"""Error types raised by mpweyl."""


class MpWeylError(Exception):
    """Base class for every error raised by the library."""

    code = "mpweyl_error"
    usage = False

    def payload(self) -> dict:
        return {"code": self.code, "message": str(self)}


class DivisionByZero(MpWeylError, ZeroDivisionError):
    code = "division_by_zero"


class ZeroInput(MpWeylError):
    code = "zero_input"


class UnsupportedIndex(MpWeylError):
    code = "unsupported_index"


class IndexOutOfRange(MpWeylError):
    code = "index_out_of_range"


class ZeroCoordinate(MpWeylError):
    code = "zero_coordinate"


class NotSameOrbit(MpWeylError):
    code = "not_same_orbit"


class ModuleSpecError(MpWeylError):
    code = "module_spec"


class InvalidParameter(MpWeylError):
    """A command-line parameter that does not describe a valid object."""

    code = "invalid_parameter"
    usage = True


class ParameterCountError(ModuleSpecError, InvalidParameter):
    code = "parameter_count"
    usage = True


class ExpressionError(MpWeylError):
    """An expression that parses but cannot be evaluated."""

    code = "expression"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column

    def payload(self) -> dict:
        data = super().payload()
        if self.line is not None:
            data["line"] = self.line
            data["column"] = self.column
        return data


class ExpressionSyntaxError(ExpressionError):
    code = "syntax"
    usage = True


class UnknownSymbol(ExpressionError):
    code = "unknown_symbol"
    usage = True


class ConfigError(MpWeylError):
    code = "config"
    usage = True
