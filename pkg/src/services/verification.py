"""
Verification Service
Runs claim verification with configured default grids and keeps the latest
report in a repository.
"""
import logging
from typing import Dict, Iterable, List, Optional, Tuple

from src.models.claim import ClaimReport, ParamGrid, VerificationReport
from src.repository.json_repo import JsonRepository
from src.services import identity_engine, idlang

logger = logging.getLogger(__name__)

Ranges = Dict[str, Tuple[int, int]]


class VerificationService:
    """
    Service responsible for verifying claims and storing their reports.

    Default ranges fill every parameter the caller leaves open; user ranges
    are clipped to each claim's domain.
    """

    def __init__(
        self,
        report_repository: Optional[JsonRepository[ClaimReport]],
        defaults: Ranges,
        workers: int = 1,
    ):
        """
        Initialize the verification service.

        Args:
            report_repository: Where reports are kept; None disables storage
            defaults: Default inclusive range per parameter name
            workers: Threads to fan out over claims in full runs
        """
        self.report_repository = report_repository
        self.defaults = dict(defaults)
        self.workers = workers

    def run(
        self,
        ranges: Optional[Ranges] = None,
        claim_ids: Optional[Iterable[str]] = None,
        workers: Optional[int] = None,
    ) -> VerificationReport:
        """
        Verify the selected claims (all when omitted) and store the report.

        Raises:
            UnknownClaimError: If a selected id is not cataloged
            BindingOutOfDomainError: If a range lies below a claim's domain
        """
        report = identity_engine.run_all(
            grid=ParamGrid(ranges or {}),
            claim_ids=claim_ids,
            defaults=self.defaults,
            workers=workers or self.workers,
        )
        self.record(report)
        return report

    def verify(self, claim_id: str, ranges: Optional[Ranges] = None) -> ClaimReport:
        """Verify one claim and upsert its entry into the stored report."""
        entry = identity_engine.run_all(
            grid=ParamGrid(ranges or {}),
            claim_ids=[claim_id],
            defaults=self.defaults,
        ).entries[0]
        if self.report_repository is not None:
            self.report_repository.save(entry)
        return entry

    def check(self, equation: str, ranges: Optional[Ranges] = None) -> ClaimReport:
        """Verify an ad hoc 'lhs == rhs' identity; the result is not stored."""
        return idlang.check_equation(equation, ParamGrid({**self.defaults, **(ranges or {})}))

    def record(self, report: VerificationReport) -> int:
        """Replace the stored report with `report`."""
        if self.report_repository is None:
            return 0
        return self.report_repository.replace_all(report.entries)

    def latest(self) -> List[ClaimReport]:
        if self.report_repository is None:
            return []
        return self.report_repository.get_all()

    def latest_for(self, claim_id: str) -> Optional[ClaimReport]:
        if self.report_repository is None:
            return None
        return self.report_repository.get_by_id(claim_id)
