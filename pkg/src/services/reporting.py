"""
Reporting Service
Value tables, verification report rendering and the fib(n) benchmark.

Machine formats (csv, json) carry integers as plain decimal strings; only the
text table adds a rounded real modulus for reading.
"""
import csv
import io
import json
import logging
import time
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Dict, List, Optional

from src.models.bicomplex import Bicomplex
from src.models.claim import PASS, ClaimReport, VerificationReport
from src.services.bifib import bf, bf_real_radicand, bl
from src.services.sequences import decimal_digits, fib, fib_doubling_pair, fib_pair_oracle, lucas

logger = logging.getLogger(__name__)

FORMATS = ('text', 'csv', 'json')

TABLE_HEADER = ('n', 'F', 'L', 'BF_re', 'BF_i', 'BF_j', 'BF_k', 'BL_re', 'BL_i', 'BL_j', 'BL_k', 'radicand')

# Benchmark values longer than this are reported by digit count only
BENCH_PRINT_DIGITS = 60


def format_bicomplex(value: Bicomplex[int]) -> str:
    """'re ± xi ± yj ± zk' with every component shown, e.g. '3 - 6i - 4j + 5k'."""
    parts = [str(value.w)]
    for component, unit in ((value.x, 'i'), (value.y, 'j'), (value.z, 'k')):
        sign = '-' if component < 0 else '+'
        parts.append(f"{sign} {abs(component)}{unit}")
    return ' '.join(parts)


def format_value(value: Bicomplex[int], scalar: bool = False) -> str:
    """Bare integer for scalar-valued expressions, full form otherwise."""
    if scalar and value.x == 0 and value.y == 0 and value.z == 0:
        return str(value.w)
    return format_bicomplex(value)


def real_modulus(radicand: int, digits: int = 15) -> str:
    """Square root of a non-negative integer radicand to `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(radicand).sqrt())


# ============================================================================
# VALUE TABLES
# ============================================================================

def table_row(n: int) -> Dict[str, int]:
    """F_n, L_n, the components of BF_n and BL_n, and the real-modulus radicand."""
    bf_n = bf(n)
    bl_n = bl(n)
    values = (n, fib(n), lucas(n), *bf_n.components(), *bl_n.components(), bf_real_radicand(n))
    return dict(zip(TABLE_HEADER, values))


def table_rows(start: int, stop: int) -> List[Dict[str, int]]:
    """
    Rows for start..stop inclusive.

    Raises:
        ValueError: If start > stop
    """
    if start > stop:
        raise ValueError(f"empty range {start}..{stop}")
    return [table_row(n) for n in range(start, stop + 1)]


def render_table(rows: List[Dict[str, int]], fmt: str = 'text', modulus_digits: int = 15) -> str:
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(TABLE_HEADER)
        for row in rows:
            writer.writerow([str(row[key]) for key in TABLE_HEADER])
        return buffer.getvalue()
    if fmt == 'json':
        return json.dumps([{key: str(row[key]) for key in TABLE_HEADER} for row in rows], indent=2)

    lines = []
    for row in rows:
        bf_text = format_bicomplex(Bicomplex(row['BF_re'], row['BF_i'], row['BF_j'], row['BF_k']))
        bl_text = format_bicomplex(Bicomplex(row['BL_re'], row['BL_i'], row['BL_j'], row['BL_k']))
        modulus = real_modulus(row['radicand'], modulus_digits)
        lines.append(
            f"n={row['n']}  F={row['F']}  L={row['L']}  BF={bf_text}  BL={bl_text}"
            f"  |BF|^2={row['radicand']} (|BF| ≈ {modulus})"
        )
    return '\n'.join(lines) + '\n'


# ============================================================================
# VERIFICATION REPORTS
# ============================================================================

def _bindings_text(bindings: Dict[str, int]) -> str:
    return ', '.join(f"{name}={value}" for name, value in bindings.items())


def _entry_line(entry: ClaimReport) -> str:
    line = f"{entry.claim_id:<8} {entry.verdict}  {entry.points_checked} points"
    counterexample = entry.first_counterexample
    if counterexample is not None:
        line += (
            f"\n    first counterexample {_bindings_text(counterexample.bindings)}"
            f"\n    lhs      {format_bicomplex(counterexample.lhs)}"
            f"\n    rhs      {format_bicomplex(counterexample.rhs)}"
            f"\n    residual {format_bicomplex(counterexample.residual)}"
        )
    return line


def render_report(report: VerificationReport, fmt: str = 'text') -> str:
    """Render a verification report as text, csv or json."""
    if fmt == 'json':
        return json.dumps(report.to_dict(), indent=2)
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow((
            'claim_id', 'verdict', 'points_checked', 'counterexample',
            'residual_re', 'residual_i', 'residual_j', 'residual_k',
        ))
        for entry in report.entries:
            counterexample = entry.first_counterexample
            if counterexample is None:
                writer.writerow((entry.claim_id, entry.verdict, entry.points_checked, '', '', '', '', ''))
            else:
                writer.writerow((
                    entry.claim_id, entry.verdict, entry.points_checked,
                    _bindings_text(counterexample.bindings),
                    *(str(c) for c in counterexample.residual.components()),
                ))
        return buffer.getvalue()

    passed = sum(1 for entry in report.entries if entry.verdict == PASS)
    lines = [_entry_line(entry) for entry in report.entries]
    lines.append(f"{passed}/{len(report.entries)} claims pass")
    return '\n'.join(lines) + '\n'


# ============================================================================
# BENCHMARK
# ============================================================================

@dataclass(frozen=True)
class BenchResult:
    """
    Timings of fib(n) by fast doubling and, below the threshold, by iteration.

    Attributes:
        n: Index computed
        digits: Decimal digit count of F_n
        value: F_n when short enough to print, else None
        doubling_seconds: Wall time of the fast-doubling path
        iteration_seconds: Wall time of plain iteration, None when skipped
        agree: Whether both paths gave the same value (None when skipped)
    """
    n: int
    digits: int
    value: Optional[int]
    doubling_seconds: float
    iteration_seconds: Optional[float]
    agree: Optional[bool]

    def render(self) -> str:
        line = f"fib({self.n}): {self.digits} digits; doubling {self.doubling_seconds:.6f} s"
        if self.iteration_seconds is None:
            line += "; iteration skipped"
        else:
            line += f"; iteration {self.iteration_seconds:.6f} s; agree={self.agree}"
        if self.value is not None:
            line += f"\nvalue {self.value}"
        return line + '\n'


def benchmark(n: int, iteration_threshold: int = 100000) -> BenchResult:
    """
    Time fib(n) by fast doubling, and by plain iteration when n <= threshold.

    Raises:
        NegativeIndexError: If n < 0
    """
    started = time.perf_counter()
    value, _ = fib_doubling_pair(n)
    doubling_seconds = time.perf_counter() - started

    iteration_seconds = None
    agree = None
    if n <= iteration_threshold:
        started = time.perf_counter()
        iterated, _ = fib_pair_oracle(n)
        iteration_seconds = time.perf_counter() - started
        agree = iterated == value
        if not agree:
            logger.error("fast doubling and iteration disagree at n=%d", n)
    else:
        logger.info("n=%d above iteration threshold %d; doubling only", n, iteration_threshold)

    digits = decimal_digits(value)
    return BenchResult(
        n=n,
        digits=digits,
        value=value if digits <= BENCH_PRINT_DIGITS else None,
        doubling_seconds=doubling_seconds,
        iteration_seconds=iteration_seconds,
        agree=agree,
    )
