"""
Flask Web Application - Presentation Layer
JSON endpoints over the identity engine, the identity DSL and the value tables.

NO BUSINESS LOGIC should be placed here - only routing, request parsing and
JSON serialisation. All computation is delegated to the Service Layer.
"""
import logging
import os
import sys

from flask import Flask, current_app, jsonify, request

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from config import config
from src.core.exceptions import BicomplexFibError, ExpressionSyntaxError, UnknownClaimError
from src.models.claim import ClaimReport, ParamGrid, bicomplex_to_dict
from src.repository.json_repo import JsonRepository
from src.services import identity_engine, idlang, reporting
from src.services.verification import VerificationService

logger = logging.getLogger(__name__)

RANGE_PARAMS = ('n', 'm', 'r')


# ============================================================================
# APPLICATION FACTORY & DEPENDENCY INJECTION
# ============================================================================

def create_app(config_name='development', overrides=None):
    """
    Application factory pattern.

    Args:
        config_name: Configuration environment ('development', 'testing', 'production')
        overrides: Extra config values (tests point REPORT_FILE at a temp dir)

    Returns:
        Configured Flask application instance
    """
    app = Flask(__name__)
    app.config.from_object(config[config_name])
    app.config.update(overrides or {})

    # Data Layer: the latest report is kept on disk
    report_repository = JsonRepository(
        app.config['REPORT_FILE'],
        ClaimReport.from_dict,
        lambda entry: entry.to_dict(),
    )

    # Business Logic Layer
    defaults = config[config_name].default_ranges()
    defaults.update({
        'n': app.config['DEFAULT_N_RANGE'],
        'm': app.config['DEFAULT_M_RANGE'],
        'r': app.config['DEFAULT_R_RANGE'],
    })
    app.verification_service = VerificationService(
        report_repository,
        defaults,
        workers=app.config['VERIFY_WORKERS'],
    )

    register_routes(app)
    register_error_handlers(app)
    return app


def _query_ranges() -> dict:
    """n, m, r ranges from the query string ('a..b' or 'a')."""
    return {name: ParamGrid.parse_range(request.args[name]) for name in RANGE_PARAMS if name in request.args}


def _query_bindings() -> dict:
    bindings = {}
    for name in RANGE_PARAMS:
        if name in request.args:
            low, high = ParamGrid.parse_range(request.args[name])
            if low != high:
                raise ValueError(f"{name} must be a single integer, got {request.args[name]!r}")
            bindings[name] = low
    return bindings


# ============================================================================
# ROUTES
# ============================================================================

def register_routes(app):

    @app.route('/api/claims')
    def list_claims():
        """Catalog listing: ids, citations, parameters, domains, DSL forms."""
        return jsonify(identity_engine.describe_claims())

    @app.route('/api/claims/<claim_id>/verify')
    def verify_claim(claim_id):
        """Verify one claim and upsert it into the stored report."""
        entry = current_app.verification_service.verify(claim_id, _query_ranges())
        return jsonify(entry.to_dict())

    @app.route('/api/verify')
    def verify_all():
        """Full report over the default grids; also stored as the latest report."""
        report = current_app.verification_service.run(_query_ranges())
        body = report.to_dict()
        body['all_passed'] = report.all_passed
        return jsonify(body)

    @app.route('/api/reports')
    def stored_reports():
        """Entries of the last stored report."""
        entries = current_app.verification_service.latest()
        return jsonify({'count': len(entries), 'claims': [entry.to_dict() for entry in entries]})

    @app.route('/api/reports/<claim_id>')
    def stored_report(claim_id):
        entry = current_app.verification_service.latest_for(claim_id)
        if entry is None:
            return jsonify({'error': f"no stored report for {claim_id}"}), 404
        return jsonify(entry.to_dict())

    @app.route('/api/table')
    def value_table():
        """Rows of F, L, BF, BL and the radicand, integers as decimal strings."""
        start = request.args.get('from', 0, type=int)
        stop = request.args.get('to', 10, type=int)
        rows = reporting.table_rows(start, stop)
        return jsonify([{key: str(value) for key, value in row.items()} for row in rows])

    @app.route('/api/eval')
    def evaluate():
        """Evaluate ?expr=... with optional n, m, r bindings."""
        text = request.args.get('expr', '')
        value = idlang.eval_expr(idlang.parse(text), _query_bindings())
        return jsonify({'expr': text, 'value': bicomplex_to_dict(value)})

    @app.route('/api/check')
    def check():
        """Verify an ad hoc ?equation=lhs == rhs over the query or default ranges."""
        text = request.args.get('equation', '')
        return jsonify(current_app.verification_service.check(text, _query_ranges()).to_dict())


# ============================================================================
# ERROR HANDLERS
# ============================================================================

def register_error_handlers(app):

    @app.errorhandler(UnknownClaimError)
    def unknown_claim(e):
        return jsonify({'error': str(e), 'claim_id': e.claim_id}), 404

    @app.errorhandler(ExpressionSyntaxError)
    def syntax_error(e):
        return jsonify({'error': str(e), 'offset': e.offset, 'expected': list(e.expected)}), 400

    @app.errorhandler(BicomplexFibError)
    def domain_error(e):
        return jsonify({'error': str(e)}), 400

    @app.errorhandler(ValueError)
    def bad_request(e):
        return jsonify({'error': str(e)}), 400

    @app.errorhandler(404)
    def page_not_found(e):
        return jsonify({'error': 'not found'}), 404

    @app.errorhandler(500)
    def internal_server_error(e):
        logger.exception("unhandled error")
        return jsonify({'error': 'internal server error'}), 500


# ============================================================================
# APPLICATION ENTRY POINT
# ============================================================================

if __name__ == '__main__':
    app = create_app(os.getenv('FLASK_CONFIG', 'development'))
    logging.basicConfig(level=app.config['LOG_LEVEL'])
    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(0)
    app.run(
        host='0.0.0.0',
        port=5001,
        debug=app.config['DEBUG']
    )
