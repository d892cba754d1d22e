"""
Claim Domain Models
Identity claims, parameter grids, point evaluations and verification reports.
"""
import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from src.core.exceptions import BindingOutOfDomainError
from src.models.bicomplex import Bicomplex

PASS = 'PASS'
FAIL = 'FAIL'

# Canonical parameter order; bindings are compared lexicographically in this order
PARAM_ORDER = ('n', 'm', 'r', 'a1', 'b1', 'c1', 'd1', 'a2', 'b2', 'c2', 'd2')

Bindings = Dict[str, int]
Evaluator = Callable[[Bindings], Bicomplex[int]]


def canonical_params(names) -> Tuple[str, ...]:
    """Order parameter names canonically (unknown names go last, alphabetically)."""
    rank = {name: i for i, name in enumerate(PARAM_ORDER)}
    return tuple(sorted(set(names), key=lambda name: (rank.get(name, len(rank)), name)))


def bicomplex_to_dict(value: Bicomplex[int]) -> Dict[str, str]:
    """Serialize with decimal strings; values exceed 53-bit float precision."""
    return {'re': str(value.w), 'i': str(value.x), 'j': str(value.y), 'k': str(value.z)}


def bicomplex_from_dict(data: Dict[str, str]) -> Bicomplex[int]:
    return Bicomplex(int(data['re']), int(data['i']), int(data['j']), int(data['k']))


@dataclass(frozen=True)
class ParamGrid:
    """
    Inclusive integer range per parameter.

    Attributes:
        ranges: Mapping of parameter name to (low, high), both inclusive
    """
    ranges: Dict[str, Tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        for name, (low, high) in self.ranges.items():
            if low > high:
                raise BindingOutOfDomainError(f"empty range for {name}: {low}..{high}")

    @staticmethod
    def parse_range(text: str) -> Tuple[int, int]:
        """
        Parse 'a..b' (inclusive) or a single integer 'a'.

        Raises:
            BindingOutOfDomainError: If the text is malformed or the range is empty
        """
        low_text, sep, high_text = str(text).strip().partition('..')
        try:
            low = int(low_text)
            high = int(high_text) if sep else low
        except ValueError:
            raise BindingOutOfDomainError(f"{text!r} is not an integer or an 'a..b' range") from None
        if low > high:
            raise BindingOutOfDomainError(f"empty range {low}..{high}")
        return (low, high)

    def with_defaults(self, params: Tuple[str, ...], defaults: Dict[str, Tuple[int, int]]) -> 'ParamGrid':
        """Restrict to `params`, filling missing ranges from `defaults`."""
        ranges = {}
        for name in params:
            if name in self.ranges:
                ranges[name] = self.ranges[name]
            elif name in defaults:
                ranges[name] = defaults[name]
            else:
                raise BindingOutOfDomainError(f"no range given for parameter {name}")
        return ParamGrid(ranges)

    def clipped_to(self, claim: 'ClaimSpec') -> 'ParamGrid':
        """
        Raise every range to the claim's lower bounds.

        Raises:
            BindingOutOfDomainError: If a range lies entirely below its bound
        """
        ranges = {}
        for name, (low, high) in self.ranges.items():
            bound = claim.lower_bounds.get(name)
            if bound is not None and low < bound:
                if high < bound:
                    raise BindingOutOfDomainError(
                        f"{claim.claim_id}: range {low}..{high} for {name} lies below {name} >= {bound}"
                    )
                low = bound
            ranges[name] = (low, high)
        return ParamGrid(ranges)

    def points(self, params: Tuple[str, ...]) -> Iterator[Bindings]:
        """Yield bindings in lexicographic order of the value tuple in `params` order."""
        axes = [range(self.ranges[name][0], self.ranges[name][1] + 1) for name in params]
        for values in itertools.product(*axes):
            yield dict(zip(params, values))

    def to_dict(self) -> Dict[str, List[str]]:
        return {name: [str(low), str(high)] for name, (low, high) in self.ranges.items()}


@dataclass(frozen=True)
class ClaimSpec:
    """
    One identity asserted in the source text, with exact evaluators.

    Attributes:
        claim_id: Short key such as 'C-T5F'
        citation: Where the identity is stated
        params: Parameter names in canonical order
        lower_bounds: Per-parameter inclusive lower bound of the domain
        lhs: Evaluator of the left-hand side
        rhs_forms: One or more printed right-hand sides; a point passes if any matches
        domain_text: Human-readable domain, e.g. 'n >= r >= 1'
        constraint: Extra coupled domain condition (points failing it are skipped)
        dsl: The claim written in the identity DSL, when expressible
    """
    claim_id: str
    citation: str
    params: Tuple[str, ...]
    lower_bounds: Dict[str, int]
    lhs: Evaluator
    rhs_forms: Tuple[Evaluator, ...]
    domain_text: str = ''
    constraint: Optional[Callable[[Bindings], bool]] = None
    dsl: Optional[str] = None

    def in_domain(self, bindings: Bindings) -> bool:
        for name, bound in self.lower_bounds.items():
            if bindings[name] < bound:
                return False
        return self.constraint is None or self.constraint(bindings)


@dataclass(frozen=True)
class ClaimEvaluation:
    """
    Exact evaluation of a claim at one parameter point.

    Attributes:
        claim_id: Claim evaluated
        bindings: Parameter values
        lhs: Left-hand side value
        rhs: Value of the first printed right-hand side
        residual: lhs - rhs
        matched_form: Index of the first right-hand side equal to lhs, if any
    """
    claim_id: str
    bindings: Bindings
    lhs: Bicomplex[int]
    rhs: Bicomplex[int]
    residual: Bicomplex[int]
    matched_form: Optional[int] = None

    @property
    def point_verdict(self) -> str:
        return PASS if self.matched_form is not None else FAIL


@dataclass(frozen=True)
class Counterexample:
    """First failing point of a claim on a grid."""
    bindings: Bindings
    lhs: Bicomplex[int]
    rhs: Bicomplex[int]
    residual: Bicomplex[int]

    def to_dict(self) -> dict:
        return {
            'bindings': {name: str(value) for name, value in self.bindings.items()},
            'lhs': bicomplex_to_dict(self.lhs),
            'rhs': bicomplex_to_dict(self.rhs),
            'residual': bicomplex_to_dict(self.residual),
        }

    @staticmethod
    def from_dict(data: dict) -> 'Counterexample':
        return Counterexample(
            bindings={name: int(value) for name, value in data['bindings'].items()},
            lhs=bicomplex_from_dict(data['lhs']),
            rhs=bicomplex_from_dict(data['rhs']),
            residual=bicomplex_from_dict(data['residual']),
        )


@dataclass(frozen=True)
class ClaimReport:
    """
    Verdict of one claim over a grid.

    Attributes:
        claim_id: Claim verified
        citation: Where the identity is stated
        grid: Ranges actually checked
        points_checked: Number of in-domain points evaluated
        verdict: PASS iff every point passed
        first_counterexample: Lexicographically first failing point, when FAIL
        matched_forms: Right-hand side indices that matched at passing points
    """
    claim_id: str
    citation: str
    grid: ParamGrid
    points_checked: int
    verdict: str
    first_counterexample: Optional[Counterexample] = None
    matched_forms: Tuple[int, ...] = ()

    @property
    def id(self) -> str:
        return self.claim_id

    def to_dict(self) -> dict:
        """Convert to a JSON-ready dictionary (integers as decimal strings)."""
        return {
            'claim_id': self.claim_id,
            'citation': self.citation,
            'grid': self.grid.to_dict(),
            'points_checked': str(self.points_checked),
            'verdict': self.verdict,
            'first_counterexample': (
                self.first_counterexample.to_dict() if self.first_counterexample else None
            ),
            'matched_forms': list(self.matched_forms),
        }

    @staticmethod
    def from_dict(data: dict) -> 'ClaimReport':
        """Create a ClaimReport from its dictionary form."""
        counterexample = data.get('first_counterexample')
        return ClaimReport(
            claim_id=data['claim_id'],
            citation=data['citation'],
            grid=ParamGrid({name: (int(low), int(high)) for name, (low, high) in data['grid'].items()}),
            points_checked=int(data['points_checked']),
            verdict=data['verdict'],
            first_counterexample=Counterexample.from_dict(counterexample) if counterexample else None,
            matched_forms=tuple(data.get('matched_forms', ())),
        )


@dataclass(frozen=True)
class VerificationReport:
    """Per-claim reports, ordered by claim id."""
    entries: Tuple[ClaimReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(entry.verdict == PASS for entry in self.entries)

    def verdicts(self) -> Dict[str, str]:
        return {entry.claim_id: entry.verdict for entry in self.entries}

    def to_dict(self) -> dict:
        return {'claims': [entry.to_dict() for entry in self.entries]}


@dataclass(frozen=True)
class LinearCombination:
    """
    Integer coefficients of sum alpha_m F_{m+i} + sum beta_m L_{m+i}.

    Attributes:
        alpha: Coefficients of the Fibonacci terms, m = 0..M
        beta: Coefficients of the Lucas terms, m = 0..M
    """
    alpha: Tuple[int, ...] = ()
    beta: Tuple[int, ...] = ()
