from abc import ABC, abstractmethod

from mimo_trt.entities.report import AnalysisReport, PredictionReport, VerificationReport
from mimo_trt.entities.tradeoff import RegionLabel


class ReportWriter(ABC):
    """Interface for presenting command results to the user.

    Implementations render either human-readable tables or JSON.
    """

    @abstractmethod
    def prediction(self, report: PredictionReport, as_json: bool):
        """Render coefficients, regions, slopes and spacings of a prediction."""

    @abstractmethod
    def analysis(self, report: AnalysisReport, as_json: bool):
        """Render measured-versus-predicted slopes and spacings."""

    @abstractmethod
    def verification(self, report: VerificationReport, as_json: bool):
        """Render pass/fail per check with measured deltas."""

    @abstractmethod
    def transitions(self, changes: list[tuple[float, RegionLabel]], as_json: bool):
        """Render region change points along an SNR trajectory."""
