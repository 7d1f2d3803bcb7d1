from mimo_trt.entities.channel import ChannelSpec, ComplexMatrix, EigenSpectrum, RngStream
from mimo_trt.entities.curve import CurvePoint, SlopeEstimate, SpacingEstimate
from mimo_trt.entities.errors import (
    InsufficientDataError,
    InvalidArgumentError,
    ResultParseError,
    TrtError,
)
from mimo_trt.entities.estimate import ArqEstimate, ArqOutcome, OutageEstimate, SamplingPolicy
from mimo_trt.entities.scheme import (
    ALAMOUTI,
    ArqLongTermStatic,
    MimoLowerBound,
    MimoOptimal,
    Orthogonal,
    Scheme,
    SchemeKind,
    VblastMl,
)
from mimo_trt.entities.tradeoff import (
    DmtCurve,
    ExponentProblem,
    RegionBounds,
    RegionKind,
    RegionLabel,
    TrtCoefficients,
)

__all__ = [
    "ALAMOUTI",
    "ArqEstimate",
    "ArqLongTermStatic",
    "ArqOutcome",
    "ChannelSpec",
    "ComplexMatrix",
    "CurvePoint",
    "DmtCurve",
    "EigenSpectrum",
    "ExponentProblem",
    "InsufficientDataError",
    "InvalidArgumentError",
    "MimoLowerBound",
    "MimoOptimal",
    "Orthogonal",
    "OutageEstimate",
    "RegionBounds",
    "RegionKind",
    "RegionLabel",
    "ResultParseError",
    "RngStream",
    "SamplingPolicy",
    "Scheme",
    "SchemeKind",
    "SlopeEstimate",
    "SpacingEstimate",
    "TrtCoefficients",
    "TrtError",
    "VblastMl",
]
