import pytest

from src.core.exceptions import UnknownClaimError
from src.models.claim import FAIL, PASS, ClaimReport
from src.repository.json_repo import JsonRepository
from src.services.verification import VerificationService


@pytest.fixture
def repository(tmp_path):
    return JsonRepository(str(tmp_path / 'report.json'), ClaimReport.from_dict, lambda entry: entry.to_dict())


@pytest.fixture
def service(repository, testing_config):
    return VerificationService(repository, testing_config.default_ranges())


def test_run_replaces_the_stored_report(service):
    service.run({'n': (0, 4), 'm': (0, 2)}, claim_ids=['C-T2', 'C-T1-1'])
    service.run({'n': (1, 4)}, claim_ids=['C-T5F'])
    assert [entry.claim_id for entry in service.latest()] == ['C-T5F']


def test_verify_upserts_single_claims(service):
    service.run({'n': (0, 4), 'm': (0, 2)}, claim_ids=['C-T2', 'C-T1-1'])
    entry = service.verify('C-T5L', {'n': (1, 10)})
    assert entry.verdict == FAIL
    assert [stored.claim_id for stored in service.latest()] == ['C-T1-1', 'C-T2', 'C-T5L']

    service.verify('C-T2', {'n': (0, 1), 'm': (0, 1)})
    assert service.latest_for('C-T2').points_checked == 4
    assert len(service.latest()) == 3


def test_defaults_fill_open_parameters(service):
    entry = service.verify('C-T1-7', {'n': (0, 2)})
    assert entry.grid.ranges == {'n': (0, 2), 'm': (0, 8)}


def test_check_uses_defaults_and_is_not_stored(service):
    entry = service.check('BF[n] + BF[n+1] == BF[n+2]')
    assert entry.verdict == PASS
    assert entry.points_checked == 21
    assert service.latest() == []


def test_unknown_claim(service):
    with pytest.raises(UnknownClaimError):
        service.verify('C-NOPE')


def test_without_repository_nothing_is_stored(testing_config):
    service = VerificationService(None, testing_config.default_ranges())
    report = service.run({'n': (1, 3)}, claim_ids=['C-T5F'])
    assert report.all_passed
    assert service.record(report) == 0
    assert service.latest() == []
    assert service.latest_for('C-T5F') is None
