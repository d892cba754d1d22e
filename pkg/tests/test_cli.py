import json

import pytest

from src.cli import cli
from src.models.claim import ClaimReport
from src.repository.json_repo import JsonRepository


def invoke(runner, *args):
    return runner.invoke(cli, ['--env', 'testing', *args])


class TestTable:
    def test_csv_rows(self, runner):
        result = invoke(runner, 'table', '--from', '0', '--to', '2', '--format', 'csv')
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            'n,F,L,BF_re,BF_i,BF_j,BF_k,BL_re,BL_i,BL_j,BL_k,radicand',
            '0,0,2,0,1,1,2,2,1,3,4,6',
            '1,1,1,1,1,2,3,1,3,4,7,15',
            '2,1,3,1,2,3,5,3,4,7,11,39',
        ]

    def test_negative_indices(self, runner):
        result = invoke(runner, 'table', '--from', '-2', '--to', '-1', '--format', 'csv')
        assert result.exit_code == 0
        rows = result.stdout.splitlines()[1:]
        assert [row.split(',')[3:7] for row in rows] == [['-1', '1', '0', '1'], ['1', '0', '1', '1']]

    def test_text_row_shows_radicand_and_modulus(self, runner):
        result = invoke(runner, 'table', '--from', '0', '--to', '0')
        assert result.exit_code == 0
        assert len(result.stdout.splitlines()) == 1
        assert '|BF|^2=6' in result.stdout
        assert '≈ 2.44948974278318' in result.stdout

    def test_json_rows_use_decimal_strings(self, runner):
        result = invoke(runner, 'table', '--from', '10', '--to', '10', '--format', 'json')
        assert json.loads(result.stdout)[0]['F'] == '55'

    def test_overlapping_ranges_agree(self, runner):
        wide = invoke(runner, 'table', '--from', '0', '--to', '6', '--format', 'csv').stdout.splitlines()
        narrow = invoke(runner, 'table', '--from', '3', '--to', '6', '--format', 'csv').stdout.splitlines()
        assert wide[4:] == narrow[1:]

    def test_bad_range(self, runner):
        result = invoke(runner, 'table', '--from', '3', '--to', '1')
        assert result.exit_code == 2


class TestVerify:
    def test_binet_passes(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-T4F', '--n', '0..50')
        assert result.exit_code == 0
        assert 'C-T4F' in result.stdout and 'PASS' in result.stdout

    def test_lucas_cassini_fails(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-T5L', '--n', '1..10')
        assert result.exit_code == 1
        assert 'first counterexample n=1' in result.stdout
        assert 'residual 0 + 0i + 20j + 10k' in result.stdout

    def test_all_claims(self, runner):
        result = invoke(runner, 'verify', '--all')
        assert result.exit_code == 1
        assert '15/25 claims pass' in result.stdout

    def test_repeated_claims_and_json(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-T2', '--claim', 'C-T1-1', '--n', '0..2', '--m', '0..2',
                        '--format', 'json')
        assert result.exit_code == 1
        claims = json.loads(result.stdout)['claims']
        assert [entry['claim_id'] for entry in claims] == ['C-T1-1', 'C-T2']
        assert claims[1]['first_counterexample']['residual']['j'] == '-2'

    def test_csv_report(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-T6', '--n', '1..4', '--r', '1..2', '--format', 'csv')
        assert result.exit_code == 1
        lines = result.stdout.splitlines()
        assert lines[0].startswith('claim_id,verdict,points_checked')
        assert lines[1] == 'C-T6,FAIL,7,"n=1, r=1",0,0,2,3'

    def test_ranges_are_clipped_to_the_domain(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-T5F', '--n', '0..5')
        assert result.exit_code == 0
        assert '5 points' in result.stdout

    def test_single_value_range(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-T5F', '--n', '7')
        assert result.exit_code == 0
        assert '1 points' in result.stdout

    def test_range_outside_domain(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-T5F', '--n', '-5..-1')
        assert result.exit_code == 2

    def test_malformed_range(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-T5F', '--n', '1..x')
        assert result.exit_code == 2

    def test_unknown_claim(self, runner):
        result = invoke(runner, 'verify', '--claim', 'C-NOPE')
        assert result.exit_code == 2
        assert 'Unknown claim: C-NOPE' in result.output

    def test_selector_required(self, runner):
        assert invoke(runner, 'verify').exit_code == 2
        assert invoke(runner, 'verify', '--all', '--claim', 'C-T2').exit_code == 2

    def test_output_file(self, runner, tmp_path):
        path = tmp_path / 'out' / 'report.json'
        result = invoke(runner, 'verify', '--claim', 'C-T2', '--claim', 'C-T3F', '--output', str(path))
        assert result.exit_code == 1
        repository = JsonRepository(str(path), ClaimReport.from_dict, lambda entry: entry.to_dict())
        assert repository.count() == 2
        assert repository.get_by_id('C-T2').verdict == 'FAIL'
        assert repository.get_by_id('C-T3F').verdict == 'PASS'

    def test_equation(self, runner):
        result = invoke(runner, 'verify', '--equation', 'F[n+2] == F[n+1] + F[n]', '--n', '-10..40')
        assert result.exit_code == 0
        assert 'DSL' in result.stdout and '51 points' in result.stdout

    def test_failing_equation(self, runner):
        result = invoke(runner, 'verify', '--equation', 'F[2*n] == 2*F[n]', '--n', '0..5')
        assert result.exit_code == 1
        assert 'first counterexample n=1' in result.stdout

    def test_equation_syntax_error(self, runner):
        result = invoke(runner, 'verify', '--equation', 'F[n] ==')
        assert result.exit_code == 2


class TestEval:
    @pytest.mark.parametrize('args, expected', [
        (['BF[0]*BF[1]'], '3 - 6i - 4j + 5k'),
        (['F[10]'], '55'),
        (['BF[n]', '--n', '-1'], '1 + 0i + 1j + 1k'),
        (['BF[n+1]*BF[n-1] - BF[n]^2', '--n', '1'], '0 + 0i - 6j - 3k'),
        (['(-1)^n * L[n]', '--n', '3'], '-4'),
        (['F[n]*F[m] + F[n+1]*F[m+1] - F[n+m+1]', '--n', '4', '--m', '-7'], '0'),
        (['i*i'], '-1 + 0i + 0j + 0k'),
    ])
    def test_values(self, runner, args, expected):
        result = invoke(runner, 'eval', *args)
        assert result.exit_code == 0
        assert result.stdout == expected + '\n'

    def test_huge_values_print(self, runner):
        result = invoke(runner, 'eval', 'F[100000]')
        assert result.exit_code == 0
        assert len(result.stdout.strip()) == 20899

    def test_syntax_error_reports_offset(self, runner):
        result = invoke(runner, 'eval', 'BF[n')
        assert result.exit_code == 2
        assert 'offset 4' in result.output

    def test_superscript_digit_is_a_usage_error(self, runner):
        result = invoke(runner, 'eval', 'F[²]')
        assert result.exit_code == 2
        assert 'offset 2' in result.output

    def test_unbound_variable(self, runner):
        result = invoke(runner, 'eval', 'F[n]')
        assert result.exit_code == 2
        assert 'Unbound variable: n' in result.output


class TestBench:
    def test_thousand(self, runner):
        result = invoke(runner, 'bench', '--n', '1000')
        assert result.exit_code == 0
        assert 'fib(1000): 209 digits' in result.stdout
        assert 'agree=True' in result.stdout

    def test_zero(self, runner):
        result = invoke(runner, 'bench', '--n', '0')
        assert result.exit_code == 0
        assert 'fib(0): 1 digits' in result.stdout
        assert 'value 0' in result.stdout

    def test_iteration_skipped_above_threshold(self, runner):
        result = invoke(runner, 'bench', '--n', '6000')
        assert result.exit_code == 0
        assert 'iteration skipped' in result.stdout

    def test_million_uses_doubling_only(self, runner):
        result = runner.invoke(cli, ['bench', '--n', '1000000'])
        assert result.exit_code == 0
        assert 'fib(1000000): 208988 digits' in result.stdout
        assert 'iteration skipped' in result.stdout

    def test_negative_index_rejected(self, runner):
        assert invoke(runner, 'bench', '--n', '-1').exit_code == 2


def test_claims_listing(runner):
    result = invoke(runner, 'claims')
    assert result.exit_code == 0
    assert 'C-T6' in result.stdout
    assert 'n >= r >= 1' in result.stdout
    assert sum(1 for line in result.stdout.splitlines() if line.startswith('C-')) == 25
