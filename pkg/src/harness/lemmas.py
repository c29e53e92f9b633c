"""
Lemma Property Suite
Seeded checks of edge-deletion monotonicity, the clique-parts ordering,
split-join quotient equality and sufficiency of Win's condition
"""
import logging
from typing import List, Optional

import numpy as np

from ..extremal.families import (
    SplitJoinParams, build_clique_join, build_split_join, gprime, split_join_partition,
    split_join_quotient,
)
from ..graphs.graph_core import delete_edge, is_bridge
from ..interchange.graph6 import write_graph6
from ..ktree.spanning_ktree import find_win_violation, has_spanning_ktree
from ..spectra.distance_spectra import all_pairs_distances, lambda1, spectral_radius
from ..spectra.quotient import is_equitable, quotient_lambda1, quotient_matrix
from .claims import RowTally
from .enumeration import enumerate_connected, random_connected_graph
from .report import Record, VerificationReport
from .settings import DEFAULT_SEED, CampaignParameterError, HarnessSettings


logger = logging.getLogger(__name__)

EDGE_DELETION_ORDERS = (4, 10)
SPLIT_JOIN_GRID = {'s': range(1, 5), 'a': range(0, 11), 'b': range(1, 11)}
WIN_SCAN_DEGREES = (3, 4, 5)


def edge_deletion_records(trials: int, rng: np.random.Generator,
                          settings: HarnessSettings) -> List[Record]:
    """Deleting any non-bridge edge strictly raises λ1"""
    records = []
    low, high = EDGE_DELETION_ORDERS
    for _ in range(trials):
        n = int(rng.integers(low, high + 1))
        g = random_connected_graph(n, rng, settings.edge_probability)
        base = spectral_radius(g, settings.tolerance)
        increases = [
            spectral_radius(delete_edge(g, i, j), settings.tolerance) - base
            for i, j in g.edges() if not is_bridge(g, i, j)
        ]
        if not increases:
            records.append(Record(
                check='edge_deletion_raises_radius', n=n, graph=write_graph6(g),
                value=base, note='tree: every edge is a bridge',
            ))
            continue
        smallest = min(increases)
        failed = smallest <= settings.radius_tie
        records.append(Record(
            check='edge_deletion_raises_radius',
            n=n,
            graph=write_graph6(g),
            value=smallest,
            threshold=settings.radius_tie,
            margin=smallest - settings.radius_tie,
            outcome='FAIL' if failed else 'PASS',
            anomaly=failed,
            note=f"{len(increases)} non-bridge edges",
        ))
    return records


def clique_parts_records(trials: int, rng: np.random.Generator,
                         settings: HarnessSettings) -> List[Record]:
    """
    K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t}) is never below K_s ∨ (K_{n-s-t+1} ∪ (t-1)K1)

    Equality holds exactly when the parts already have that shape.
    """
    records = []
    tie = settings.radius_tie
    for _ in range(trials):
        s = int(rng.integers(1, 4))
        t = int(rng.integers(2, 6))
        outside = t + int(rng.integers(0, 7))
        cuts = sorted(int(c) for c in rng.choice(np.arange(1, outside), size=t - 1, replace=False))
        bounds = [0] + cuts + [outside]
        parts = sorted((b - a for a, b in zip(bounds, bounds[1:])), reverse=True)
        n = s + outside

        value = spectral_radius(build_clique_join(s, parts), settings.tolerance)
        reference = spectral_radius(gprime(n, s, t), settings.tolerance)
        diff = value - reference
        extremal = parts == [outside - t + 1] + [1] * (t - 1)
        if extremal:
            margin, ok = tie - abs(diff), abs(diff) <= tie
        else:
            margin, ok = diff, diff > tie
        records.append(Record(
            check='clique_parts_ordering',
            n=n,
            params=f"s={s},parts={'-'.join(map(str, parts))}",
            value=value,
            threshold=reference,
            margin=margin,
            outcome='PASS' if ok else 'FAIL',
            anomaly=not ok,
            note='equality case' if extremal else '',
        ))
    return records


def split_join_quotient_records(settings: HarnessSettings) -> List[Record]:
    """Block partitions of split-joins are equitable and keep λ1"""
    records = []
    for s in SPLIT_JOIN_GRID['s']:
        row = RowTally('split_join_quotient_matches', None, f"s={s}")
        for a in SPLIT_JOIN_GRID['a']:
            for b in SPLIT_JOIN_GRID['b']:
                params = SplitJoinParams(s, a, b)
                d = all_pairs_distances(build_split_join(params))
                partition = split_join_partition(params)
                b_matrix = quotient_matrix(d, partition)
                diff = abs(quotient_lambda1(b_matrix) - lambda1(d, settings.tolerance).lambda1)
                ok = (
                    is_equitable(d, partition)
                    and b_matrix == split_join_quotient(params)
                    and diff <= settings.margin
                )
                row.add(params.order, settings.margin - diff, ok, f"a={a},b={b}")
        records.append(row.record())
    return records


def win_condition_records(settings: HarnessSettings) -> List[Record]:
    """
    Over every connected class up to win_scan_max_order, a graph meeting
    Win's condition always has a spanning k-tree
    """
    records = []
    for n in range(2, settings.win_scan_max_order + 1):
        graphs = list(enumerate_connected(n))
        for k in WIN_SCAN_DEGREES:
            violations = 0
            converse = 0
            for g in graphs:
                win_holds = find_win_violation(g, k) is None
                exists = has_spanning_ktree(g, k).exists
                if win_holds and not exists:
                    violations += 1
                    logger.error(f"No spanning {k}-tree despite Win's condition: {write_graph6(g)}")
                elif not win_holds and exists:
                    converse += 1
            records.append(Record(
                check='win_condition_sufficient',
                n=n,
                k=k,
                value=float(violations),
                threshold=0.0,
                margin=-float(violations),
                outcome='FAIL' if violations else 'PASS',
                anomaly=violations > 0,
                note=f"{len(graphs)} classes; {converse} violators with a spanning tree",
            ))
    return records


def lemma_property_suite(trials: int,
                         seed: int = DEFAULT_SEED,
                         settings: Optional[HarnessSettings] = None) -> VerificationReport:
    """
    Run the seeded property checks

    Args:
        trials: Random instances for the edge-deletion and clique-parts checks
        seed: Seed for both random streams
        settings: Tolerances; defaults when omitted

    Returns:
        VerificationReport
    """
    settings = settings or HarnessSettings()
    if trials < 1:
        raise CampaignParameterError(f"trials must be at least 1, got {trials}")

    logger.info("=" * 60)
    logger.info(f"Lemma property suite: {trials} trials, seed {seed}")
    logger.info("=" * 60)

    report = VerificationReport(
        campaign='lemmas',
        parameters={
            'trials': trials,
            'edge_probability': settings.edge_probability,
            'radius_tie': settings.radius_tie,
            'margin': settings.margin,
            'win_scan_max_order': settings.win_scan_max_order,
        },
        seed=seed,
    )

    deletion_rng, parts_rng = (np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(2))
    sections = [
        ('edge deletion', edge_deletion_records(trials, deletion_rng, settings)),
        ('clique parts', clique_parts_records(trials, parts_rng, settings)),
        ('split-join quotients', split_join_quotient_records(settings)),
        ('Win condition', win_condition_records(settings)),
    ]
    for name, records in sections:
        for record in records:
            report.add(record)
        report.examined += len(records)
        logger.info(f"✓ {name}: {len(records)} records")

    report.finalize()
    logger.info(f"✓ Suite complete: {report.summary['anomalies']} failures")
    return report
