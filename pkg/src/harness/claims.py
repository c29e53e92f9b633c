"""
Claim Sweep
Radius orderings among the split-join extremal graphs and the signs of the
auxiliary polynomials, checked over a parameter grid
"""
import logging
from functools import lru_cache
from typing import List, Optional

import mpmath

from ..extremal.families import (
    SplitJoinParams, gprime_params, gsharp, gstar, gstar_params, gstar_wiener_closed,
    gtilde, gtilde_params, rho_sharp_closed, rho_sharp_closed_mp, sharp_orders, split_join_quotient,
)
from ..extremal.polynomials import (
    PolyId, PolyTag, eval_poly_exact, eval_poly_mp, largest_root, largest_root_mp,
    poly_coefficients,
)
from ..graphs.canonical import canonical_code
from ..spectra.distance_spectra import all_pairs_distances, spectral_radius, wiener
from ..spectra.quotient import quotient_lambda1_numeric
from .report import Record, VerificationReport
from .settings import CampaignParameterError, HarnessSettings


logger = logging.getLogger(__name__)

MIN_K_MAX = 5
MIN_S_MAX = 2
MIN_N_MAX = 12


class RowTally:
    """Folds the points of one grid row into a single record"""

    def __init__(self, check: str, k: Optional[int], params: str = ''):
        self.check = check
        self.k = k
        self.params = params
        self.points = 0
        self.worst = None
        self.failure = None

    def add(self, n: int, margin: float, ok: bool, note: str = '') -> None:
        self.points += 1
        if self.worst is None or margin < self.worst[0]:
            self.worst = (margin, n)
        if not ok and self.failure is None:
            self.failure = (n, note)

    def record(self) -> Optional[Record]:
        if not self.points:
            return None
        margin, n = self.worst
        note = f"{self.points} points, worst at n={n}"
        if self.failure is not None:
            n, detail = self.failure
            note = f"first failure at n={n}" + (f": {detail}" if detail else '')
        return Record(
            check=self.check,
            n=n,
            k=self.k,
            params=self.params,
            value=margin,
            threshold=0.0,
            margin=margin,
            outcome='FAIL' if self.failure else 'PASS',
            anomaly=self.failure is not None,
            note=note,
        )


@lru_cache(maxsize=None)
def split_join_radius(params: SplitJoinParams) -> float:
    """λ1 of a split-join through its three-block quotient"""
    return quotient_lambda1_numeric(split_join_quotient(params))


@lru_cache(maxsize=None)
def _gstar_root_mp(n: int, k: int, dps: int) -> mpmath.mpf:
    return largest_root_mp(PolyId(PolyTag.G, n=n, k=k), dps=dps)


def _pad(coefficients, length: int) -> List[int]:
    return [0] * (length - len(coefficients)) + list(coefficients)


# ============================================================================
# RADIUS ORDERINGS
# ============================================================================

def _gtilde_below_gprime(k: int, s: int, n_max: int, tie: float) -> RowTally:
    row = RowTally('gtilde_below_gprime', k, f"s={s}")
    t_min = (k - 2) * s + 3
    for n in range((k - 1) * s + 3, n_max + 1):
        base = split_join_radius(gtilde_params(n, k, s))
        for t in range(t_min, n - s + 1):
            diff = split_join_radius(gprime_params(n, s, t)) - base
            if t == t_min:
                row.add(n, tie - abs(diff), abs(diff) <= tie, f"t={t} should coincide")
            else:
                row.add(n, diff, diff > tie, f"t={t}")
    return row


def _gstar_below_gtilde(k: int, s: int, n_max: int, settings: HarnessSettings) -> List[RowTally]:
    params = f"s={s}"
    radius_row = RowTally('gstar_below_gtilde', k, params)
    f_row = RowTally('f_negative_at_gstar_radius', k, params)
    h_row = RowTally('h_negative_beyond_boundary', k, params)
    monotone_row = RowTally('h_monotone_beyond_boundary', k, params)
    h_id = PolyId(PolyTag.H, k=k, s=s)
    h_boundary = eval_poly_exact(h_id, (k - 1) * s + 4)
    for n in range((k - 1) * s + 4, n_max + 1):
        diff = split_join_radius(gtilde_params(n, k, s)) - split_join_radius(gstar_params(n, k))
        radius_row.add(n, diff, diff > settings.radius_tie)

        theta = _gstar_root_mp(n, k, settings.precision_digits)
        f_value = eval_poly_mp(PolyId(PolyTag.F, n=n, k=k, s=s), theta, settings.precision_digits)
        f_row.add(n, -float(f_value), f_value < 0)

        h_value = eval_poly_exact(h_id, n)
        h_row.add(n, -float(h_value), h_value < 0)
        monotone_row.add(n, float(h_boundary - h_value), h_value <= h_boundary)
    return [radius_row, f_row, h_row, monotone_row]


def _boundary_rows(k: int, s_max: int, n_max: int, tie: float) -> List[RowTally]:
    radius_row = RowTally('gstar_below_gtilde_boundary', k)
    r_row = RowTally('r_negative', k)
    for s in range(MIN_S_MAX, s_max + 1):
        n = (k - 1) * s + 3
        r_value = eval_poly_exact(PolyId(PolyTag.R, k=k), s)
        r_row.add(n, -float(r_value), r_value < 0, f"s={s}")
        if n <= n_max:
            diff = split_join_radius(gtilde_params(n, k, s)) - split_join_radius(gstar_params(n, k))
            radius_row.add(n, diff, diff > tie, f"s={s}")
    return [radius_row, r_row]


def _q_row(k: int, s_max: int) -> RowTally:
    row = RowTally('q_negative', k)
    for s in range(MIN_S_MAX, s_max + 1):
        value = eval_poly_exact(PolyId(PolyTag.Q, k=k), s)
        row.add((k - 1) * s + 4, -float(value), value < 0, f"s={s}")
    return row


def _gstar_vs_gsharp(n_max: int, settings: HarnessSettings) -> List[Record]:
    records = []
    dps = settings.precision_digits
    for n in range(MIN_N_MAX, n_max + 1, 3):
        theta = _gstar_root_mp(n, 4, dps)
        rho = rho_sharp_closed_mp(n, dps)
        margin = float(rho - theta)
        failed = margin <= settings.radius_tie
        records.append(Record(
            check='gstar_below_gsharp',
            n=n,
            k=4,
            params=f"s={(n - 3) // 3}",
            value=float(theta),
            threshold=float(rho),
            margin=margin,
            outcome='FAIL' if failed else 'PASS',
            anomaly=failed,
            borderline=margin < settings.borderline_window,
        ))

    line = PolyId(PolyTag.H, k=4)
    at_twelve = eval_poly_exact(line, MIN_N_MAX)
    records.append(Record(
        check='h_line_zero_at_twelve', n=MIN_N_MAX, k=4, value=float(at_twelve), threshold=0.0,
        margin=-abs(float(at_twelve)), outcome='PASS' if at_twelve == 0 else 'FAIL',
        anomaly=at_twelve != 0,
    ))
    row = RowTally('h_line_negative', 4)
    for n in range(MIN_N_MAX + 1, n_max + 1):
        value = eval_poly_exact(line, n)
        row.add(n, -float(value), value < 0)
    if row.points:
        records.append(row.record())
    return records


def _small_sharp_orders(settings: HarnessSettings) -> List[Record]:
    """G# against G* for k = 4 at the orders 6 <= n <= 11 where G# exists"""
    same = canonical_code(gsharp(6)) == canonical_code(gstar(6, 4))
    records = [Record(
        check='gsharp_equals_gstar', n=6, k=4, outcome='PASS' if same else 'FAIL',
        anomaly=not same, note='K1 ∨ 5K1 in both families',
    )]

    dps = settings.precision_digits
    theta = _gstar_root_mp(9, 4, dps)
    rho = rho_sharp_closed_mp(9, dps)
    margin = float(theta - rho)
    records.append(Record(
        check='gsharp_below_gstar', n=9, k=4, value=float(rho), threshold=float(theta),
        margin=margin, outcome='PASS' if margin > settings.radius_tie else 'FAIL',
        anomaly=margin <= settings.radius_tie,
    ))

    g_value = eval_poly_mp(PolyId(PolyTag.G, n=9, k=4), rho, dps)
    records.append(Record(
        check='g_negative_at_gsharp_radius', n=9, k=4, value=float(g_value), threshold=0.0,
        margin=-float(g_value), outcome='PASS' if g_value < 0 else 'FAIL', anomaly=g_value >= 0,
    ))
    return records


# ============================================================================
# CONSISTENCY
# ============================================================================

def _closed_forms(k_max: int, s_max: int, n_max: int, settings: HarnessSettings) -> List[RowTally]:
    rows = []
    tolerance = settings.margin
    for k in range(4, k_max + 1):
        g_row = RowTally('g_root_matches_gstar', k)
        wiener_row = RowTally('gstar_wiener_closed_form', k)
        for n in range(k + 2, n_max + 1):
            diff = abs(largest_root(PolyId(PolyTag.G, n=n, k=k)) - split_join_radius(gstar_params(n, k)))
            g_row.add(n, tolerance - diff, diff <= tolerance)
            bfs = wiener(all_pairs_distances(gstar(n, k)))
            closed = gstar_wiener_closed(n, k)
            wiener_row.add(n, -abs(float(bfs - closed)), bfs == closed, f"bfs={bfs} closed={closed}")
        rows.extend([g_row, wiener_row])

        for s in range(1, s_max + 1):
            f_row = RowTally('f_root_matches_gtilde', k, f"s={s}")
            bfs_row = RowTally('f_root_matches_gtilde_bfs', k, f"s={s}")
            for n in range((k - 1) * s + 3, n_max + 1):
                root = largest_root(PolyId(PolyTag.F, n=n, k=k, s=s))
                diff = abs(root - split_join_radius(gtilde_params(n, k, s)))
                f_row.add(n, tolerance - diff, diff <= tolerance)
                bfs_diff = abs(root - spectral_radius(gtilde(n, k, s)))
                bfs_row.add(n, tolerance - bfs_diff, bfs_diff <= tolerance)
            rows.extend([f_row, bfs_row])

    sharp_row = RowTally('rho_sharp_matches_radius', 4)
    for n in sharp_orders(n_max):
        diff = abs(rho_sharp_closed(n) - spectral_radius(gsharp(n)))
        sharp_row.add(n, tolerance - diff, diff <= tolerance)
    rows.append(sharp_row)
    return rows


def _identities(k_max: int, s_max: int, n_max: int) -> List[RowTally]:
    """Exact polynomial identities linking F, G, P, H, Q and R"""
    rows = []
    for k in range(4, k_max + 1):
        g_row = RowTally('g_is_f_at_s1', k)
        for n in range(k + 2, n_max + 1):
            f_one, _ = poly_coefficients(PolyId(PolyTag.F, n=n, k=k, s=1))
            g_coeffs, _ = poly_coefficients(PolyId(PolyTag.G, n=n, k=k))
            g_row.add(n, 0.0 if f_one == g_coeffs else -1.0, f_one == g_coeffs)
        rows.append(g_row)

        q_row = RowTally('q_is_h_at_boundary', k)
        r_row = RowTally('r_is_h_at_boundary', k)
        for s in range(1, s_max + 1):
            h_id = PolyId(PolyTag.H, k=k, s=s)
            q_diff = eval_poly_exact(PolyId(PolyTag.Q, k=k), s) - eval_poly_exact(h_id, (k - 1) * s + 4)
            r_diff = eval_poly_exact(PolyId(PolyTag.R, k=k), s) - eval_poly_exact(h_id, (k - 1) * s + 3)
            q_row.add((k - 1) * s + 4, -abs(float(q_diff)), q_diff == 0, f"s={s}")
            r_row.add((k - 1) * s + 3, -abs(float(r_diff)), r_diff == 0, f"s={s}")

            split_row = RowTally('f_minus_g_is_scaled_p', k, f"s={s}")
            shift_row = RowTally('h_is_shifted_p', k, f"s={s}")
            for n in range((k - 1) * s + 2, n_max + 1):
                f_coeffs, _ = poly_coefficients(PolyId(PolyTag.F, n=n, k=k, s=s))
                g_coeffs, _ = poly_coefficients(PolyId(PolyTag.G, n=n, k=k))
                p_id = PolyId(PolyTag.P, n=n, k=k, s=s)
                p_coeffs, _ = poly_coefficients(p_id)
                lhs = [a - b for a, b in zip(f_coeffs, g_coeffs)]
                rhs = _pad([(s - 1) * c for c in p_coeffs], len(lhs))
                split_row.add(n, 0.0 if lhs == rhs else -1.0, lhs == rhs)

                shift = eval_poly_exact(h_id, n) - eval_poly_exact(p_id, n + k - 1)
                shift_row.add(n, -abs(float(shift)), shift == 0)
            rows.extend([split_row, shift_row])
        rows.extend([q_row, r_row])
    return rows


# ============================================================================
# SWEEP
# ============================================================================

def sweep_claims(k_max: int,
                 s_max: int,
                 n_max: int,
                 settings: Optional[HarnessSettings] = None) -> VerificationReport:
    """
    Confirm the radius orderings and polynomial signs over the grid

    Args:
        k_max: Largest degree bound (>= 5)
        s_max: Largest join-clique size (>= 2)
        n_max: Largest order for spectral comparisons (>= 12)
        settings: Tolerances; defaults when omitted

    Returns:
        VerificationReport with one record per grid row or named instance
    """
    settings = settings or HarnessSettings()
    if k_max < MIN_K_MAX or s_max < MIN_S_MAX or n_max < MIN_N_MAX:
        raise CampaignParameterError(
            f"Sweep needs k_max >= {MIN_K_MAX}, s_max >= {MIN_S_MAX}, n_max >= {MIN_N_MAX}; "
            f"got {k_max}, {s_max}, {n_max}"
        )

    logger.info("=" * 60)
    logger.info(f"Claim sweep k <= {k_max}, s <= {s_max}, n <= {n_max}")
    logger.info("=" * 60)

    report = VerificationReport(
        campaign='claims',
        parameters={
            'k_max': k_max,
            's_max': s_max,
            'n_max': n_max,
            'radius_tie': settings.radius_tie,
            'margin': settings.margin,
            'precision_digits': settings.precision_digits,
        },
    )

    rows: List[RowTally] = []
    for k in range(4, k_max + 1):
        logger.info(f"Radius orderings for k={k}...")
        for s in range(1, s_max + 1):
            rows.append(_gtilde_below_gprime(k, s, n_max, settings.radius_tie))
            if s >= MIN_S_MAX:
                rows.extend(_gstar_below_gtilde(k, s, n_max, settings))
        rows.append(_q_row(k, s_max))
        if k >= 5:
            rows.extend(_boundary_rows(k, s_max, n_max, settings.radius_tie))

    logger.info("Closed forms and polynomial identities...")
    rows.extend(_closed_forms(k_max, s_max, n_max, settings))
    rows.extend(_identities(k_max, s_max, n_max))

    for row in rows:
        record = row.record()
        if record is not None:
            report.add(record)
            report.examined += row.points
    for record in _gstar_vs_gsharp(n_max, settings) + _small_sharp_orders(settings):
        report.add(record)
        report.examined += 1

    report.finalize()
    for record in report.anomalies():
        logger.error(f"Claim check failed: {record.check} k={record.k} {record.params} {record.note}")
    logger.info(f"✓ Sweep complete: {report.summary['records']} records, "
                f"{report.summary['anomalies']} failures")
    return report
