from __future__ import annotations

from enum import Enum


class Energy(str, Enum):
    E4 = "e4"
    ES4 = "es4"
    HAT = "hat"  # curvature part of the ES-4 energy


class Source(str, Enum):
    PRINTED = "printed"  # published coefficients, transcribed verbatim
    GENERAL = "general"  # general parallel-A hypersurface form, term by term
    SMALL_SPHERE = "small-sphere"  # form specialized to a = 1/2
    COMPOSITION = "composition"  # operator composition in the section algebra


class Adjudication(str, Enum):
    ALL_AGREE = "allAgree"
    PRINTED_DISCREPANCY = "printedDiscrepancy"
    INTERNAL_DISAGREEMENT = "internalDisagreement"


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class Suite(str, Enum):
    FIXTURES = "fixtures"
    IDENTITIES = "identities"
    ORACLE_M1 = "oracle-m1"
    ORACLE_M2 = "oracle-m2"


class DerivativeScheme(str, Enum):
    SPECTRAL = "spectral"
    FD4 = "fd4"


class OracleQuantity(str, Enum):
    BUNDLE_NORMS = "bundle-norms"
    SECOND_VARIATION = "second-variation"
    FIRST_VARIATION = "first-variation"
    QHAT_M2 = "qhat-m2"
