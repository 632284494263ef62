"""Exception types. Every error carries a stable ``code`` used by the CLI."""


class EnriquesError(Exception):
    code = "EnriquesError"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        out = {"code": self.code, "message": self.message}
        if self.details:
            out["details"] = self.details
        return out


class NotPositive(EnriquesError):
    code = "NotPositive"


class NonPositiveSquare(EnriquesError):
    code = "NonPositiveSquare"


class NegativeSquare(EnriquesError):
    code = "NegativeSquare"


class NotEffective(EnriquesError):
    code = "NotEffective"


class UnsupportedModel(EnriquesError):
    code = "UnsupportedModel"


class BadParameter(EnriquesError):
    code = "BadParameter"


class InternalBoundViolation(EnriquesError):
    code = "InternalBoundViolation"


class SearchExhausted(EnriquesError):
    code = "SearchExhausted"


class LengthCapExceeded(EnriquesError):
    code = "LengthCapExceeded"


class NotCartier(EnriquesError):
    code = "NotCartier"


class UnsupportedMultiplicity(EnriquesError):
    code = "UnsupportedMultiplicity"


class PipelineInapplicable(EnriquesError):
    code = "PipelineInapplicable"


class ParseError(EnriquesError):
    code = "ParseError"
