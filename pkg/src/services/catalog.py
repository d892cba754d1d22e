"""
Identity Catalog
Every identity asserted for bicomplex numbers and bicomplex Fibonacci/Lucas
numbers, written as exact evaluators.

Left-hand sides are computed the direct way (ring products through
`bc_mul`, sequence values through fast doubling); right-hand sides are the
closed forms exactly as printed, typos included. The engine reports the
residual instead of correcting anything here.
"""
from functools import lru_cache
from typing import Dict, List, Tuple

from src.models.bicomplex import (
    Axis,
    Bicomplex,
    I,
    J,
    K,
    bc_from_scalar,
    bc_mul,
    bc_pow,
    bc_scale,
    bc_selfprod,
)
from src.models.claim import Bindings, ClaimSpec
from src.services.bifib import bf, bf_binet, bf_real_radicand, bf_selfprod, bl, bl_binet, reduce_to_integers
from src.services.sequences import fib, lucas

F = fib
L = lucas


def _sign(exponent: int) -> int:
    """(-1)^exponent for any signed exponent."""
    return -1 if exponent % 2 else 1


def _scalar(value: int) -> Bicomplex[int]:
    return bc_from_scalar(value)


def _first(b: Bindings) -> Bicomplex[int]:
    return Bicomplex(b['a1'], b['b1'], b['c1'], b['d1'])


def _second(b: Bindings) -> Bicomplex[int]:
    return Bicomplex(b['a2'], b['b2'], b['c2'], b['d2'])


def _sq(x: Bicomplex[int]) -> Bicomplex[int]:
    return bc_pow(x, 2)


# --- generic bicomplex algebra ------------------------------------------------

def _printed_product(b: Bindings) -> Bicomplex[int]:
    a1, b1, c1, d1 = b['a1'], b['b1'], b['c1'], b['d1']
    a2, b2, c2, d2 = b['a2'], b['b2'], b['c2'], b['d2']
    return Bicomplex(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
        a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
        a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
    )


def _selfprod_closed_i(b: Bindings) -> Bicomplex[int]:
    a, bb, c, d = b['a1'], b['b1'], b['c1'], b['d1']
    return Bicomplex(a * a + bb * bb - c * c - d * d, 0, 2 * (a * c + bb * d), 0)


def _selfprod_closed_j(b: Bindings) -> Bicomplex[int]:
    a, bb, c, d = b['a1'], b['b1'], b['c1'], b['d1']
    return Bicomplex(a * a - bb * bb + c * c - d * d, 2 * (a * bb + c * d), 0, 0)


def _selfprod_closed_k(b: Bindings) -> Bicomplex[int]:
    a, bb, c, d = b['a1'], b['b1'], b['c1'], b['d1']
    return Bicomplex(a * a + bb * bb + c * c + d * d, 0, 0, 2 * (a * d - bb * c))


# --- products, conjugate products and moduli of BF_n ---------------------------

def _printed_bf_product(b: Bindings) -> Bicomplex[int]:
    # i-part printed with +F_{n+3}F_{m+2}; the unit table gives a minus
    n, m = b['n'], b['m']
    return Bicomplex(
        F(n) * F(m) - F(n + 1) * F(m + 1) - F(n + 2) * F(m + 2) + F(n + 3) * F(m + 3),
        F(n) * F(m + 1) + F(n + 1) * F(m) - F(n + 2) * F(m + 3) + F(n + 3) * F(m + 2),
        F(n) * F(m + 2) + F(n + 2) * F(m) - F(n + 1) * F(m + 3) - F(n + 3) * F(m + 1),
        F(n) * F(m + 3) + F(n + 3) * F(m) + F(n + 1) * F(m + 2) + F(n + 2) * F(m + 1),
    )


def _d2_i(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    return Bicomplex(F(2 * n + 1) - F(2 * n + 7), 0, 2 * F(2 * n + 3), 0)


def _d2_j(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    real = F(n) ** 2 - F(n + 1) ** 2 + F(n + 3) ** 2 - F(n + 4) ** 2
    return Bicomplex(real, 2 * (F(n) * F(n + 1) + F(n + 2) * F(n + 3)), 0, 0)


def _d2_k(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    return Bicomplex(F(2 * n + 1) + F(2 * n + 7), 0, 0, 2 * _sign(n + 1))


# --- named identities ------------------------------------------------------

def _t1_5_rhs(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    tail = Bicomplex(F(2 * n + 2) + F(2 * n + 5), -3 * F(2 * n + 5), -F(2 * n + 6), 3 * F(2 * n + 4))
    return bf(2 * n + 1) + tail


def _t1_6_rhs(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    tail = Bicomplex(F(2 * n + 4) + F(2 * n - 1), -2 * F(2 * n + 5), -2 * F(2 * n + 4), 2 * F(2 * n + 3))
    return bc_scale(2, bf(2 * n)) + tail


def _t1_7_rhs(b: Bindings) -> Bicomplex[int]:
    s = b['n'] + b['m']
    tail = Bicomplex(2 * F(s + 4) - F(s + 1), -2 * F(s + 6), -2 * F(s + 5), 2 * F(s + 4))
    return bc_scale(2, bf(s + 1)) + tail


def _t1_8_lhs(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    return bf(n) - bc_mul(bf(n + 1), I) + bc_mul(bf(n + 2), J) - bc_mul(bf(n + 3), K)


def _t2_lhs(b: Bindings) -> Bicomplex[int]:
    n, m = b['n'], b['m']
    return bc_mul(bf(m), bf(n + 1)) - bc_mul(bf(m + 1), bf(n))


def _t2_rhs(b: Bindings) -> Bicomplex[int]:
    n, m = b['n'], b['m']
    d = m - n
    bracket = Bicomplex(F(d), F(d + 1), -(F(d - 2) + 2 * F(d + 2)), 2 * F(d - 1))
    return bc_scale(_sign(n), bf(d)) + bc_scale(_sign(n + 1), bracket)


_IJ2K = Bicomplex(0, 1, 1, 2)
_2JK = Bicomplex(0, 0, 2, 1)


def _t3f_rhs(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    return bc_scale(_sign(n + 1), bf(n)) + bc_scale(_sign(n) * L(n), _IJ2K)


def _t3l_rhs(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    return bc_scale(_sign(n), bl(n)) + bc_scale(_sign(n + 1) * 5 * F(n), _IJ2K)


def _t5f_lhs(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    return bc_mul(bf(n + 1), bf(n - 1)) - _sq(bf(n))


def _t5l_lhs(b: Bindings) -> Bicomplex[int]:
    n = b['n']
    return bc_mul(bl(n + 1), bl(n - 1)) - _sq(bl(n))


def _t6_lhs(b: Bindings) -> Bicomplex[int]:
    n, r = b['n'], b['r']
    return _sq(bf(n)) - bc_mul(bf(n + r), bf(n - r))


def _t6_rhs(b: Bindings) -> Bicomplex[int]:
    n, r = b['n'], b['r']
    j_part = 2 * (F(r - 2) ** 2 + F(r) ** 2)
    k_part = F(r + 1) ** 2 + F(r - 2) ** 2 - F(r) ** 2 - F(r - 3) ** 2
    return bc_scale(_sign(n - r), Bicomplex(0, 0, j_part, k_part))


def _t6_rhs_expanded(b: Bindings) -> Bicomplex[int]:
    n, r = b['n'], b['r']
    k_part = (
        2 * F(r) * F(r + 3) + 2 * F(r + 1) * F(r + 2) + F(r) ** 2
        + F(r - 3) ** 2 - F(r + 1) ** 2 - F(r - 2) ** 2
    )
    tail = Bicomplex(
        -F(2 * r + 3),
        2 * F(2 * r + 3),
        2 * (F(r + 2) * F(r - 1) + F(2 * r + 1)),
        -k_part,
    )
    return bc_scale(_sign(n - r), _sq(bf(r)) + tail)


_COMPONENTS_1 = ('a1', 'b1', 'c1', 'd1')
_COMPONENTS_2 = _COMPONENTS_1 + ('a2', 'b2', 'c2', 'd2')


def _build() -> List[ClaimSpec]:
    n_only = {'n': 0}
    claims = [
        ClaimSpec(
            claim_id='C-BFM',
            citation='Section 2 after Definition 1, BF_n x BF_m expansion',
            params=('n', 'm'),
            lower_bounds={'n': 0, 'm': 0},
            lhs=lambda b: bc_mul(bf(b['n']), bf(b['m'])),
            rhs_forms=(_printed_bf_product,),
            domain_text='n, m >= 0',
            dsl=(
                'BF[n]*BF[m] == F[n]*F[m] - F[n+1]*F[m+1] - F[n+2]*F[m+2] + F[n+3]*F[m+3]'
                ' + (F[n]*F[m+1] + F[n+1]*F[m] - F[n+2]*F[m+3] + F[n+3]*F[m+2])*i'
                ' + (F[n]*F[m+2] + F[n+2]*F[m] - F[n+1]*F[m+3] - F[n+3]*F[m+1])*j'
                ' + (F[n]*F[m+3] + F[n+3]*F[m] + F[n+1]*F[m+2] + F[n+2]*F[m+1])*k'
            ),
        ),
        ClaimSpec(
            claim_id='C-E12',
            citation='Eq (1.2), bicomplex product formula',
            params=_COMPONENTS_2,
            lower_bounds={},
            lhs=lambda b: bc_mul(_first(b), _second(b)),
            rhs_forms=(_printed_product,),
            domain_text='a1..d2 integers',
        ),
        ClaimSpec(
            claim_id='C-E14I',
            citation='Eq (1.4), self-product with the i-conjugate',
            params=_COMPONENTS_1,
            lower_bounds={},
            lhs=lambda b: bc_selfprod(Axis.I, _first(b)),
            rhs_forms=(_selfprod_closed_i,),
            domain_text='a1..d1 integers',
        ),
        ClaimSpec(
            claim_id='C-E14J',
            citation='Eq (1.4), self-product with the j-conjugate',
            params=_COMPONENTS_1,
            lower_bounds={},
            lhs=lambda b: bc_selfprod(Axis.J, _first(b)),
            rhs_forms=(_selfprod_closed_j,),
            domain_text='a1..d1 integers',
        ),
        ClaimSpec(
            claim_id='C-E14K',
            citation='Eq (1.4), self-product with the k-conjugate',
            params=_COMPONENTS_1,
            lower_bounds={},
            lhs=lambda b: bc_selfprod(Axis.K, _first(b)),
            rhs_forms=(_selfprod_closed_k,),
            domain_text='a1..d1 integers',
        ),
        ClaimSpec(
            claim_id='C-D2I',
            citation='Section 2 after Definition 2, BF_n times its i-conjugate',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bf_selfprod(Axis.I, b['n']),
            rhs_forms=(_d2_i,),
            domain_text='n >= 0',
            dsl='BF[n]*(F[n] - F[n+1]*i + F[n+2]*j - F[n+3]*k) == F[2*n+1] - F[2*n+7] + 2*F[2*n+3]*j',
        ),
        ClaimSpec(
            claim_id='C-D2J',
            citation='Section 2 after Definition 2, BF_n times its j-conjugate',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bf_selfprod(Axis.J, b['n']),
            rhs_forms=(_d2_j,),
            domain_text='n >= 0',
            dsl=(
                'BF[n]*(F[n] + F[n+1]*i - F[n+2]*j - F[n+3]*k) == '
                'F[n]^2 - F[n+1]^2 + F[n+3]^2 - F[n+4]^2 + 2*(F[n]*F[n+1] + F[n+2]*F[n+3])*i'
            ),
        ),
        ClaimSpec(
            claim_id='C-D2K',
            citation='Section 2 after Definition 2, BF_n times its k-conjugate',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bf_selfprod(Axis.K, b['n']),
            rhs_forms=(_d2_k,),
            domain_text='n >= 0',
            dsl='BF[n]*(F[n] - F[n+1]*i - F[n+2]*j + F[n+3]*k) == F[2*n+1] + F[2*n+7] + 2*(-1)^(n+1)*k',
        ),
        ClaimSpec(
            claim_id='C-MODR',
            citation='Definition 3, real modulus of BF_n',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: _scalar(bf_real_radicand(b['n'])),
            rhs_forms=(lambda b: _scalar(F(2 * b['n'] + 1) + F(2 * b['n'] + 7)),),
            domain_text='n >= 0',
            dsl='F[n]^2 + F[n+1]^2 + F[n+2]^2 + F[n+3]^2 == F[2*n+1] + F[2*n+7]',
        ),
        ClaimSpec(
            claim_id='C-T1-1',
            citation='Theorem 1 item 1, bicomplex Fibonacci recurrence',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bf(b['n']) + bf(b['n'] + 1),
            rhs_forms=(lambda b: bf(b['n'] + 2),),
            domain_text='n >= 0',
            dsl='BF[n] + BF[n+1] == BF[n+2]',
        ),
        ClaimSpec(
            claim_id='C-T1-2',
            citation='Theorem 1 item 2, bicomplex Lucas recurrence',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bl(b['n']) + bl(b['n'] + 1),
            rhs_forms=(lambda b: bl(b['n'] + 2),),
            domain_text='n >= 0',
            dsl='BL[n] + BL[n+1] == BL[n+2]',
        ),
        ClaimSpec(
            claim_id='C-T1-3',
            citation='Theorem 1 item 3, BL_n = BF_{n-1} + BF_{n+1}',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bl(b['n']),
            rhs_forms=(lambda b: bf(b['n'] - 1) + bf(b['n'] + 1),),
            domain_text='n >= 0',
            dsl='BL[n] == BF[n-1] + BF[n+1]',
        ),
        ClaimSpec(
            claim_id='C-T1-4',
            citation='Theorem 1 item 4, BL_n = BF_{n+2} - BF_{n-2}',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bl(b['n']),
            rhs_forms=(lambda b: bf(b['n'] + 2) - bf(b['n'] - 2),),
            domain_text='n >= 0',
            dsl='BL[n] == BF[n+2] - BF[n-2]',
        ),
        ClaimSpec(
            claim_id='C-T1-5',
            citation='Theorem 1 item 5, sum of consecutive squares',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: _sq(bf(b['n'])) + _sq(bf(b['n'] + 1)),
            rhs_forms=(_t1_5_rhs,),
            domain_text='n >= 0',
            dsl=(
                'BF[n]^2 + BF[n+1]^2 == '
                'BF[2*n+1] + F[2*n+2] + F[2*n+5] - 3*i*F[2*n+5] - j*F[2*n+6] + 3*k*F[2*n+4]'
            ),
        ),
        ClaimSpec(
            claim_id='C-T1-6',
            citation='Theorem 1 item 6, difference of squares two apart',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: _sq(bf(b['n'] + 1)) - _sq(bf(b['n'] - 1)),
            rhs_forms=(_t1_6_rhs,),
            domain_text='n >= 0',
            dsl=(
                'BF[n+1]^2 - BF[n-1]^2 == '
                '2*BF[2*n] + F[2*n+4] + F[2*n-1] + 2*(-F[2*n+5]*i - F[2*n+4]*j + F[2*n+3]*k)'
            ),
        ),
        ClaimSpec(
            claim_id='C-T1-7',
            citation='Theorem 1 item 7, BF_n BF_m + BF_{n+1} BF_{m+1}',
            params=('n', 'm'),
            lower_bounds={'n': 0, 'm': 0},
            lhs=lambda b: bc_mul(bf(b['n']), bf(b['m'])) + bc_mul(bf(b['n'] + 1), bf(b['m'] + 1)),
            rhs_forms=(_t1_7_rhs,),
            domain_text='n, m >= 0',
            dsl=(
                'BF[n]*BF[m] + BF[n+1]*BF[m+1] == '
                '2*BF[n+m+1] + 2*F[n+m+4] - F[n+m+1] - 2*F[n+m+6]*i - 2*F[n+m+5]*j + 2*F[n+m+4]*k'
            ),
        ),
        ClaimSpec(
            claim_id='C-T1-8',
            citation='Theorem 1 item 8, alternating unit combination',
            params=('n',),
            lower_bounds=n_only,
            lhs=_t1_8_lhs,
            rhs_forms=(lambda b: _scalar(-5 * F(b['n'] + 3)),),
            domain_text='n >= 0',
            dsl='BF[n] - BF[n+1]*i + BF[n+2]*j - BF[n+3]*k == -5*F[n+3]',
        ),
        ClaimSpec(
            claim_id='C-T2',
            citation="Theorem 2, d'Ocagne identity",
            params=('n', 'm'),
            lower_bounds={'n': 0, 'm': 0},
            lhs=_t2_lhs,
            rhs_forms=(_t2_rhs,),
            domain_text='n, m >= 0',
            dsl=(
                'BF[m]*BF[n+1] - BF[m+1]*BF[n] == (-1)^n*BF[m-n] + (-1)^(n+1)*'
                '(F[m-n] + F[m-n+1]*i - (F[m-n-2] + 2*F[m-n+2])*j + 2*F[m-n-1]*k)'
            ),
        ),
        ClaimSpec(
            claim_id='C-T3F',
            citation='Theorem 3, negabicomplex Fibonacci',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bf(-b['n']),
            rhs_forms=(_t3f_rhs,),
            domain_text='n >= 0',
            dsl='BF[-n] == (-1)^(n+1)*BF[n] + (-1)^n*L[n]*(i + j + 2*k)',
        ),
        ClaimSpec(
            claim_id='C-T3L',
            citation='Theorem 3, negabicomplex Lucas',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bl(-b['n']),
            rhs_forms=(_t3l_rhs,),
            domain_text='n >= 0',
            dsl='BL[-n] == (-1)^n*BL[n] + (-1)^(n+1)*5*F[n]*(i + j + 2*k)',
        ),
        ClaimSpec(
            claim_id='C-T4F',
            citation='Theorem 4, Binet formula, Fibonacci',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bf(b['n']),
            rhs_forms=(lambda b: reduce_to_integers(bf_binet(b['n'])),),
            domain_text='n >= 0',
        ),
        ClaimSpec(
            claim_id='C-T4L',
            citation='Theorem 4, Binet formula, Lucas',
            params=('n',),
            lower_bounds=n_only,
            lhs=lambda b: bl(b['n']),
            rhs_forms=(lambda b: reduce_to_integers(bl_binet(b['n'])),),
            domain_text='n >= 0',
        ),
        ClaimSpec(
            claim_id='C-T5F',
            citation='Theorem 5, Cassini identity, Fibonacci',
            params=('n',),
            lower_bounds={'n': 1},
            lhs=_t5f_lhs,
            rhs_forms=(lambda b: bc_scale(3 * _sign(b['n']), _2JK),),
            domain_text='n >= 1',
            dsl='BF[n+1]*BF[n-1] - BF[n]^2 == 3*(-1)^n*(2*j + k)',
        ),
        ClaimSpec(
            claim_id='C-T5L',
            citation='Theorem 5, Cassini identity, Lucas',
            params=('n',),
            lower_bounds={'n': 1},
            lhs=_t5l_lhs,
            rhs_forms=(lambda b: bc_scale(5 * _sign(b['n'] - 1), _2JK),),
            domain_text='n >= 1',
            dsl='BL[n+1]*BL[n-1] - BL[n]^2 == 5*(-1)^(n-1)*(2*j + k)',
        ),
        ClaimSpec(
            claim_id='C-T6',
            citation='Theorem 6, Catalan identity (both printed forms)',
            params=('n', 'r'),
            lower_bounds={'n': 1, 'r': 1},
            lhs=_t6_lhs,
            rhs_forms=(_t6_rhs, _t6_rhs_expanded),
            domain_text='n >= r >= 1',
            constraint=lambda b: b['n'] >= b['r'],
            dsl=(
                'BF[n]^2 - BF[n+r]*BF[n-r] == (-1)^(n-r)*'
                '(2*(F[r-2]^2 + F[r]^2)*j + (F[r+1]^2 + F[r-2]^2 - F[r]^2 - F[r-3]^2)*k)'
            ),
        ),
    ]
    return sorted(claims, key=lambda claim: claim.claim_id)


@lru_cache(maxsize=1)
def _catalog() -> Tuple[ClaimSpec, ...]:
    return tuple(_build())


def catalog() -> List[ClaimSpec]:
    """All cataloged claims, ordered by id."""
    return list(_catalog())


@lru_cache(maxsize=1)
def catalog_index() -> Dict[str, ClaimSpec]:
    return {claim.claim_id: claim for claim in _catalog()}
