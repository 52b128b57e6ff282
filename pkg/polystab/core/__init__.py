from .enums import Adjudication, DerivativeScheme, Energy, OracleQuantity, OutputFormat, Source, Suite
from .errors import PolystabError, ValidationError

__all__ = [
    "Adjudication",
    "DerivativeScheme",
    "Energy",
    "OracleQuantity",
    "OutputFormat",
    "Source",
    "Suite",
    "PolystabError",
    "ValidationError",
]
