class TestClaims:
    def test_listing(self, client):
        response = client.get('/api/claims')
        assert response.status_code == 200
        claims = response.get_json()
        assert len(claims) == 25
        t6 = next(item for item in claims if item['claim_id'] == 'C-T6')
        assert t6['params'] == ['n', 'r']
        assert t6['domain'] == 'n >= r >= 1'

    def test_verify_one_failing(self, client):
        response = client.get('/api/claims/C-T5L/verify', query_string={'n': '1..10'})
        assert response.status_code == 200
        body = response.get_json()
        assert body['verdict'] == 'FAIL'
        assert body['points_checked'] == '10'
        assert body['first_counterexample']['bindings'] == {'n': '1'}
        assert body['first_counterexample']['residual'] == {'re': '0', 'i': '0', 'j': '20', 'k': '10'}

    def test_verify_one_passing_with_defaults(self, client):
        body = client.get('/api/claims/C-T4F/verify').get_json()
        assert body['verdict'] == 'PASS'
        assert body['grid'] == {'n': ['0', '20']}

    def test_unknown_claim(self, client):
        response = client.get('/api/claims/C-NOPE/verify')
        assert response.status_code == 404
        assert response.get_json()['claim_id'] == 'C-NOPE'

    def test_range_below_domain(self, client):
        response = client.get('/api/claims/C-T5F/verify', query_string={'n': '-5..-1'})
        assert response.status_code == 400

    def test_malformed_range(self, client):
        response = client.get('/api/claims/C-T5F/verify', query_string={'n': 'abc'})
        assert response.status_code == 400
        assert 'error' in response.get_json()


class TestReports:
    def test_full_run_is_stored(self, client):
        body = client.get('/api/verify').get_json()
        assert len(body['claims']) == 25
        assert body['all_passed'] is False

        stored = client.get('/api/reports').get_json()
        assert stored['count'] == 25
        entry = client.get('/api/reports/C-T2').get_json()
        assert entry['verdict'] == 'FAIL'
        assert entry['first_counterexample']['bindings'] == {'n': '0', 'm': '0'}

    def test_nothing_stored_yet(self, client):
        assert client.get('/api/reports').get_json() == {'count': 0, 'claims': []}
        assert client.get('/api/reports/C-T2').status_code == 404


class TestTableAndEval:
    def test_table(self, client):
        rows = client.get('/api/table', query_string={'from': 0, 'to': 2}).get_json()
        assert [row['n'] for row in rows] == ['0', '1', '2']
        assert rows[0]['radicand'] == '6'
        assert rows[2]['BL_k'] == '11'

    def test_empty_table_range(self, client):
        assert client.get('/api/table', query_string={'from': 2, 'to': 0}).status_code == 400

    def test_eval(self, client):
        body = client.get('/api/eval', query_string={'expr': 'BF[0]*BF[1]'}).get_json()
        assert body['value'] == {'re': '3', 'i': '-6', 'j': '-4', 'k': '5'}

    def test_eval_with_binding(self, client):
        body = client.get('/api/eval', query_string={'expr': 'BF[n]', 'n': '-1'}).get_json()
        assert body['value'] == {'re': '1', 'i': '0', 'j': '1', 'k': '1'}

    def test_eval_syntax_error(self, client):
        response = client.get('/api/eval', query_string={'expr': 'BF[n'})
        assert response.status_code == 400
        assert response.get_json()['offset'] == 4

    def test_eval_rejects_ranges(self, client):
        response = client.get('/api/eval', query_string={'expr': 'F[n]', 'n': '1..2'})
        assert response.status_code == 400

    def test_eval_unbound_variable(self, client):
        response = client.get('/api/eval', query_string={'expr': 'F[n]'})
        assert response.status_code == 400
        assert 'Unbound variable' in response.get_json()['error']


class TestCheck:
    def test_recurrence_passes(self, client):
        body = client.get('/api/check', query_string={
            'equation': 'BF[n] + BF[n+1] == BF[n+2]',
            'n': '-10..10',
        }).get_json()
        assert body['verdict'] == 'PASS'
        assert body['points_checked'] == '21'

    def test_printed_lucas_cassini_fails(self, client):
        body = client.get('/api/check', query_string={
            'equation': 'BL[n+1]*BL[n-1] - BL[n]^2 == 5*(-1)^(n-1)*(2*j + k)',
            'n': '1..3',
        }).get_json()
        assert body['verdict'] == 'FAIL'
        assert body['points_checked'] == '3'
        assert body['first_counterexample']['residual'] == {'re': '0', 'i': '0', 'j': '20', 'k': '10'}


def test_unknown_route_is_json(client):
    response = client.get('/api/nope')
    assert response.status_code == 404
    assert response.get_json() == {'error': 'not found'}


def test_single_claim_verification_is_stored(client):
    client.get('/api/claims/C-T5L/verify', query_string={'n': '1..10'})
    client.get('/api/claims/C-T4F/verify')
    stored = client.get('/api/reports').get_json()
    assert [entry['claim_id'] for entry in stored['claims']] == ['C-T4F', 'C-T5L']
    assert client.get('/api/reports/C-T5L').get_json()['verdict'] == 'FAIL'
