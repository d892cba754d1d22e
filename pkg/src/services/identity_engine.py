"""
Identity Verification Engine
Evaluates cataloged claims exactly over parameter grids and reports
PASS/FAIL verdicts with residuals.

Grid points are independent pure evaluations. Claims may be fanned out over
a thread pool; the report is always reassembled in claim id order.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional

from config import Config
from src.core.exceptions import BindingOutOfDomainError, UnknownClaimError
from src.models.bicomplex import Bicomplex, bc_scale, bc_sub
from src.models.claim import (
    FAIL,
    PASS,
    Bindings,
    ClaimEvaluation,
    ClaimReport,
    ClaimSpec,
    Counterexample,
    LinearCombination,
    ParamGrid,
    VerificationReport,
)
from src.services.bifib import bf, bl
from src.services.catalog import catalog, catalog_index
from src.services.sequences import fib, lucas

logger = logging.getLogger(__name__)


def get_claim(claim_id: str) -> ClaimSpec:
    """
    Look up a claim by id.

    Raises:
        UnknownClaimError: If the id is not cataloged
    """
    try:
        return catalog_index()[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id) from None


def evaluate_spec(claim: ClaimSpec, bindings: Bindings) -> ClaimEvaluation:
    """
    Evaluate any ClaimSpec (cataloged or ad hoc) at one point.

    The residual is taken against the first right-hand side; the point
    passes if any right-hand side equals the left-hand side.
    """
    lhs = claim.lhs(bindings)
    rhs_values = [form(bindings) for form in claim.rhs_forms]
    matched = next((index for index, value in enumerate(rhs_values) if value == lhs), None)
    return ClaimEvaluation(
        claim_id=claim.claim_id,
        bindings=dict(bindings),
        lhs=lhs,
        rhs=rhs_values[0],
        residual=bc_sub(lhs, rhs_values[0]),
        matched_form=matched,
    )


def evaluate_claim(claim_id: str, bindings: Bindings) -> ClaimEvaluation:
    """
    Evaluate a cataloged claim at one parameter point.

    Args:
        claim_id: Catalog id, e.g. 'C-T5F'
        bindings: Value for every claim parameter

    Returns:
        ClaimEvaluation with exact lhs, rhs and residual

    Raises:
        UnknownClaimError: If the id is not cataloged
        BindingOutOfDomainError: If the bindings are incomplete or outside the domain
    """
    claim = get_claim(claim_id)
    missing = [name for name in claim.params if name not in bindings]
    if missing:
        raise BindingOutOfDomainError(f"{claim_id}: missing bindings for {', '.join(missing)}")
    if not claim.in_domain(bindings):
        raise BindingOutOfDomainError(f"{claim_id}: {bindings} outside domain {claim.domain_text}")
    return evaluate_spec(claim, {name: bindings[name] for name in claim.params})


def verify_spec(claim: ClaimSpec, grid: ParamGrid) -> ClaimReport:
    """
    Check a claim at every in-domain point of a grid that already covers its parameters.

    Points violating a coupled constraint (e.g. n >= r) are skipped.
    """
    points_checked = 0
    counterexample: Optional[Counterexample] = None
    matched_forms = set()
    for bindings in grid.points(claim.params):
        if not claim.in_domain(bindings):
            continue
        points_checked += 1
        evaluation = evaluate_spec(claim, bindings)
        if evaluation.matched_form is not None:
            matched_forms.add(evaluation.matched_form)
        elif counterexample is None:
            counterexample = Counterexample(
                bindings=evaluation.bindings,
                lhs=evaluation.lhs,
                rhs=evaluation.rhs,
                residual=evaluation.residual,
            )
            logger.debug("%s fails at %s, residual %s", claim.claim_id, bindings, evaluation.residual)
    if points_checked == 0:
        raise BindingOutOfDomainError(f"{claim.claim_id}: no grid point satisfies {claim.domain_text}")
    verdict = PASS if counterexample is None else FAIL
    logger.info("%s: %s over %d points", claim.claim_id, verdict, points_checked)
    return ClaimReport(
        claim_id=claim.claim_id,
        citation=claim.citation,
        grid=grid,
        points_checked=points_checked,
        verdict=verdict,
        first_counterexample=counterexample,
        matched_forms=tuple(sorted(matched_forms)),
    )


def verify_claim(claim_id: str, grid: ParamGrid, defaults: Optional[Dict] = None) -> ClaimReport:
    """
    Verify a cataloged claim over a grid.

    Args:
        claim_id: Catalog id
        grid: Ranges for some or all claim parameters; missing ones use `defaults`
        defaults: Fallback ranges (Config.default_ranges() when omitted)

    Returns:
        ClaimReport: PASS iff the residual vanishes at every point, otherwise
        FAIL with the lexicographically first counterexample

    Raises:
        UnknownClaimError: If the id is not cataloged
        BindingOutOfDomainError: If a range starts below the claim's lower bounds
    """
    claim = get_claim(claim_id)
    full_grid = grid.with_defaults(claim.params, defaults or Config.default_ranges())
    for name, (low, _high) in full_grid.ranges.items():
        bound = claim.lower_bounds.get(name)
        if bound is not None and low < bound:
            raise BindingOutOfDomainError(
                f"{claim_id}: range for {name} starts at {low}, domain is {claim.domain_text}"
            )
    return verify_spec(claim, full_grid)


def run_all(
    grid: Optional[ParamGrid] = None,
    claim_ids: Optional[Iterable[str]] = None,
    defaults: Optional[Dict] = None,
    workers: int = 1,
) -> VerificationReport:
    """
    Verify every (or every selected) claim, each grid clipped to its domain.

    Args:
        grid: Ranges overriding the defaults for the parameters they name
        claim_ids: Restrict to these ids (all cataloged claims when omitted)
        defaults: Default ranges (Config.default_ranges() when omitted)
        workers: Thread count for fanning out over claims

    Returns:
        VerificationReport ordered by claim id

    Raises:
        UnknownClaimError: If a selected id is not cataloged
    """
    grid = grid or ParamGrid()
    defaults = defaults or Config.default_ranges()
    if claim_ids is None:
        claims = catalog()
    else:
        claims = [get_claim(claim_id) for claim_id in sorted(set(claim_ids))]

    def verify_one(claim: ClaimSpec) -> ClaimReport:
        full_grid = grid.with_defaults(claim.params, defaults).clipped_to(claim)
        return verify_spec(claim, full_grid)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries: List[ClaimReport] = list(pool.map(verify_one, claims))
    else:
        entries = [verify_one(claim) for claim in claims]
    entries.sort(key=lambda entry: entry.claim_id)
    return VerificationReport(tuple(entries))


def linear_transfer_check(combination: LinearCombination) -> Dict[str, bool]:
    """
    Check the summation-transfer principle for one coefficient vector.

    The premise is sum alpha_m F_{m+i} + sum beta_m L_{m+i} = 0 for
    i = 0, 1, 2, 3; the conclusion is sum alpha_m BF_m + sum beta_m BL_m = 0.
    Since BF_m and BL_m have components indexed m..m+3, the premise always
    implies the conclusion.

    Returns:
        {'premise_holds': bool, 'conclusion_holds': bool}
    """
    premise = all(
        sum(a * fib(m + i) for m, a in enumerate(combination.alpha))
        + sum(b * lucas(m + i) for m, b in enumerate(combination.beta)) == 0
        for i in range(4)
    )
    total = Bicomplex(0, 0, 0, 0)
    for m, a in enumerate(combination.alpha):
        total = total + bc_scale(a, bf(m))
    for m, b in enumerate(combination.beta):
        total = total + bc_scale(b, bl(m))
    return {'premise_holds': premise, 'conclusion_holds': total.is_zero()}


def describe_claims() -> List[Dict[str, object]]:
    """Catalog listing for the CLI and the web layer."""
    return [
        {
            'claim_id': claim.claim_id,
            'citation': claim.citation,
            'params': list(claim.params),
            'domain': claim.domain_text,
            'dsl': claim.dsl,
        }
        for claim in catalog()
    ]
