import json

import pytest

from src.core.exceptions import NegativeIndexError
from src.models.bicomplex import Bicomplex
from src.models.claim import ParamGrid
from src.services import identity_engine
from src.services.reporting import (
    TABLE_HEADER,
    benchmark,
    format_bicomplex,
    format_value,
    real_modulus,
    render_report,
    render_table,
    table_row,
    table_rows,
)


class TestFormatting:
    @pytest.mark.parametrize('value, expected', [
        (Bicomplex(3, -6, -4, 5), '3 - 6i - 4j + 5k'),
        (Bicomplex(0, 0, 0, 0), '0 + 0i + 0j + 0k'),
        (Bicomplex(-1, 1, 0, -2), '-1 + 1i + 0j - 2k'),
    ])
    def test_bicomplex(self, value, expected):
        assert format_bicomplex(value) == expected

    def test_scalar_values_print_bare(self):
        assert format_value(Bicomplex(55, 0, 0, 0), scalar=True) == '55'
        assert format_value(Bicomplex(55, 0, 0, 0)) == '55 + 0i + 0j + 0k'

    def test_real_modulus(self):
        assert real_modulus(6) == '2.44948974278318'
        assert real_modulus(9) == '3'
        assert real_modulus(2, digits=5) == '1.4142'


class TestTables:
    def test_row_zero(self):
        assert table_row(0) == dict(zip(TABLE_HEADER, (0, 0, 2, 0, 1, 1, 2, 2, 1, 3, 4, 6)))

    def test_negative_rows(self):
        rows = table_rows(-2, -1)
        assert [row['F'] for row in rows] == [-1, 1]
        assert [row['radicand'] for row in rows] == [3, 3]

    def test_empty_range(self):
        with pytest.raises(ValueError):
            table_rows(1, 0)

    def test_csv_header(self):
        text = render_table(table_rows(0, 0), 'csv')
        assert text.splitlines()[0] == ','.join(TABLE_HEADER)

    def test_json_uses_strings(self):
        rows = json.loads(render_table(table_rows(90, 90), 'json'))
        assert rows[0]['F'] == '2880067194370816120'

    def test_text_has_one_line_per_row(self):
        text = render_table(table_rows(0, 4))
        assert len(text.splitlines()) == 5
        assert all('≈' in line for line in text.splitlines())


class TestReports:
    @pytest.fixture
    def report(self):
        return identity_engine.run_all(
            grid=ParamGrid({'n': (0, 5), 'm': (0, 3)}),
            claim_ids=['C-T2', 'C-T3F'],
        )

    def test_text(self, report):
        text = render_report(report)
        assert text.splitlines()[-1] == '1/2 claims pass'
        assert 'first counterexample n=0, m=0' in text
        assert 'residual 0 + 0i - 2j + 0k' in text

    def test_csv(self, report):
        lines = render_report(report, 'csv').splitlines()
        assert lines[1] == 'C-T2,FAIL,24,"n=0, m=0",0,0,-2,0'
        assert lines[2] == 'C-T3F,PASS,6,,,,,'

    def test_json(self, report):
        data = json.loads(render_report(report, 'json'))
        assert [entry['verdict'] for entry in data['claims']] == ['FAIL', 'PASS']
        assert data['claims'][0]['grid'] == {'n': ['0', '5'], 'm': ['0', '3']}


class TestBenchmark:
    def test_small_index_prints_value(self):
        result = benchmark(100)
        assert result.digits == 21
        assert result.value == 354224848179261915075
        assert result.agree is True

    def test_zero(self):
        result = benchmark(0)
        assert (result.digits, result.value) == (1, 0)

    def test_thousand_digits(self):
        result = benchmark(1000)
        assert result.digits == 209
        assert result.value is None
        assert 'fib(1000): 209 digits' in result.render()

    def test_iteration_skipped_above_threshold(self):
        result = benchmark(2000, iteration_threshold=1000)
        assert result.iteration_seconds is None
        assert result.agree is None
        assert 'iteration skipped' in result.render()

    def test_negative_index(self):
        with pytest.raises(NegativeIndexError):
            benchmark(-1)
