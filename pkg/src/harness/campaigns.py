"""
Verification Campaigns
Threshold campaigns for the spanning k-tree spectral bound, plus the harness
entry point that also runs the claim sweep and the lemma property suite
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial
from itertools import islice
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from ..extremal.families import all_split_joins, build_split_join, gsharp, gstar, rho_sharp_closed
from ..graphs.canonical import CANONICAL_MAX_ORDER, canonical_code
from ..graphs.graph_core import Graph
from ..interchange.graph6 import write_graph6
from ..ktree.spanning_ktree import has_spanning_ktree
from ..spectra.distance_spectra import all_pairs_distances, lambda1, lambda1_high_precision
from .claims import sweep_claims
from .enumeration import enumerate_connected, random_connected_graph
from .lemmas import lemma_property_suite
from .report import Record, VerificationReport
from .settings import (
    DEFAULT_SEED, CampaignParameterError, HarnessSettings, UnspecifiedThresholdError,
)


logger = logging.getLogger(__name__)

CHECK_NAME = 'spanning_ktree_bound'


class Mode(str, Enum):
    EXHAUSTIVE = 'exhaustive'
    SAMPLE = 'sample'


@dataclass(frozen=True)
class ThresholdContext:
    """Everything a worker needs to judge one graph"""

    k: int
    threshold: float
    exceptional_code: bytes
    exceptional_degrees: Tuple[int, ...]
    margin: float
    borderline_window: float
    tolerance: float
    high_precision_tolerance: float
    precision_digits: int


# ============================================================================
# THRESHOLDS
# ============================================================================

def threshold_graph(k: int, n: int) -> Tuple[Graph, str]:
    """
    Exceptional graph whose radius is the threshold for (k, n)

    Returns:
        (graph, branch) with branch 'gstar' for k = 4, n >= 12 and for
        k >= 5, n >= k + 2, and 'gsharp' for k = 4, n in {6, 9}

    Raises:
        UnspecifiedThresholdError: k = 4 and n in {7, 8, 10, 11}
        CampaignParameterError: Any other pair outside the covered ranges
    """
    if k == 4:
        if n >= 12:
            return gstar(n, k), 'gstar'
        if n in (6, 9):
            return gsharp(n), 'gsharp'
        if 6 <= n <= 11:
            raise UnspecifiedThresholdError(
                f"k=4, n={n}: the bound for 6 <= n <= 11 is only defined where G# exists (n = 6, 9)"
            )
        raise CampaignParameterError(f"k=4 needs n in {{6, 9}} or n >= 12, got n={n}")
    if k >= 5:
        if n >= k + 2:
            return gstar(n, k), 'gstar'
        raise CampaignParameterError(f"k={k} needs n >= k + 2 = {k + 2}, got n={n}")
    raise CampaignParameterError(f"The bound covers k >= 4, got k={k}")


def _threshold_value(g: Graph, settings: HarnessSettings) -> float:
    d = all_pairs_distances(g)
    start = lambda1(d, tolerance=settings.high_precision_tolerance)
    return float(lambda1_high_precision(d, start, dps=settings.precision_digits))


# ============================================================================
# PER-GRAPH CHECK
# ============================================================================

def examine_graph(g: Graph, context: ThresholdContext) -> Optional[Record]:
    """
    Judge one graph against the threshold

    Graphs whose radius clears threshold + margin yield no record unless they
    fall inside the borderline window, where the radius is recomputed at the
    tight tolerance and refined in multiprecision before deciding.

    Returns:
        A record, or None for graphs above the threshold
    """
    d = all_pairs_distances(g)
    value = lambda1(d, tolerance=context.tolerance).lambda1
    borderline = abs(value - context.threshold) < context.borderline_window
    if borderline:
        refined = lambda1(d, tolerance=context.high_precision_tolerance)
        value = float(lambda1_high_precision(d, refined, dps=context.precision_digits))

    candidate = value <= context.threshold + context.margin
    if not candidate and not borderline:
        return None

    # Degree sequences screen out most graphs before the canonical search.
    exceptional = (
        tuple(sorted(g.degrees())) == context.exceptional_degrees
        and canonical_code(g) == context.exceptional_code
    )
    verdict = has_spanning_ktree(g, context.k)
    anomaly = candidate and not exceptional and not verdict.exists

    note = ''
    if verdict.win_violation is not None:
        note = f"win_violation={sorted(verdict.win_violation)}"
    return Record(
        check=CHECK_NAME,
        n=g.order,
        k=context.k,
        graph=write_graph6(g),
        value=value,
        threshold=context.threshold,
        margin=context.threshold - value,
        outcome=verdict.outcome.value,
        anomaly=anomaly,
        borderline=borderline,
        exceptional=exceptional,
        note=note,
    )


def _examine_batch(context: ThresholdContext, graphs: List[Graph]) -> Tuple[int, List[Record]]:
    records = []
    for g in graphs:
        try:
            record = examine_graph(g, context)
        except Exception as e:
            logger.error(f"Error examining {write_graph6(g)}: {e}")
            record = Record(
                check=CHECK_NAME, n=g.order, k=context.k, graph=write_graph6(g),
                threshold=context.threshold, outcome='ERROR', anomaly=True, note=str(e),
            )
        if record is not None:
            records.append(record)
    return len(graphs), records


def _batched(graphs: Iterable[Graph], size: int) -> Iterator[List[Graph]]:
    iterator = iter(graphs)
    while True:
        batch = list(islice(iterator, size))
        if not batch:
            return
        yield batch


# ============================================================================
# HARNESS
# ============================================================================

class VerificationHarness:
    """Runs verification campaigns under one set of HarnessSettings"""

    def __init__(self, settings: Optional[HarnessSettings] = None):
        """
        Initialize harness

        Args:
            settings: Margins, tolerances and execution options
        """
        self.settings = settings or HarnessSettings()

    def verify_spanning_ktree_bound(self,
                                    k: int,
                                    n: int,
                                    mode: str = Mode.EXHAUSTIVE,
                                    budget: int = 0,
                                    seed: int = DEFAULT_SEED) -> VerificationReport:
        """
        Check that every connected graph with radius at most the threshold
        has a spanning k-tree unless it is the exceptional graph

        Args:
            k: Degree bound
            n: Order
            mode: 'exhaustive' (every class, n <= max_exhaustive_order) or
                'sample' (budget random graphs plus every split-join)
            budget: Number of random graphs in sample mode
            seed: Random seed in sample mode

        Returns:
            VerificationReport with one record per graph at or near the threshold
        """
        mode = Mode(mode)
        exceptional, branch = threshold_graph(k, n)
        if mode is Mode.EXHAUSTIVE and n > self.settings.max_exhaustive_order:
            raise CampaignParameterError(
                f"Exhaustive mode supports n <= {self.settings.max_exhaustive_order}, got {n}"
            )
        if mode is Mode.SAMPLE and (budget < 0 or n > CANONICAL_MAX_ORDER):
            raise CampaignParameterError(
                f"Sample mode needs budget >= 0 and n <= {CANONICAL_MAX_ORDER}"
            )

        threshold = self._threshold(exceptional, branch)
        context = ThresholdContext(
            k=k,
            threshold=threshold,
            exceptional_code=canonical_code(exceptional),
            exceptional_degrees=tuple(sorted(exceptional.degrees())),
            margin=self.settings.margin,
            borderline_window=self.settings.borderline_window,
            tolerance=self.settings.tolerance,
            high_precision_tolerance=self.settings.high_precision_tolerance,
            precision_digits=self.settings.precision_digits,
        )

        logger.info("=" * 60)
        logger.info(f"Spanning {k}-tree bound, n={n}, {mode.value} ({branch} threshold {threshold:.12f})")
        logger.info("=" * 60)

        report = VerificationReport(
            campaign=CHECK_NAME,
            parameters={
                'k': k,
                'n': n,
                'mode': mode.value,
                'budget': budget if mode is Mode.SAMPLE else 0,
                'branch': branch,
                'threshold_graph': write_graph6(exceptional),
                'threshold': threshold,
                'margin': self.settings.margin,
                'borderline_window': self.settings.borderline_window,
                'tolerance': self.settings.tolerance,
                'high_precision_tolerance': self.settings.high_precision_tolerance,
                'edge_probability': self.settings.edge_probability,
            },
            seed=seed if mode is Mode.SAMPLE else None,
        )

        if mode is Mode.EXHAUSTIVE:
            graphs = enumerate_connected(n)
        else:
            graphs = self._sampled_graphs(n, budget, seed)

        for examined, records in self._run(context, graphs):
            report.examined += examined
            for record in records:
                report.add(record)
                if record.anomaly:
                    logger.error(f"Anomaly: {record.graph} λ1={record.value} outcome={record.outcome}")

        report.finalize()
        summary = report.summary
        logger.info(
            f"✓ Examined {summary['classes']} graphs: {summary['records']} at or below threshold, "
            f"{summary['anomalies']} anomalies, {summary['borderline']} borderline"
        )
        return report

    def sweep_claims(self, k_max: int, s_max: int, n_max: int) -> VerificationReport:
        """Radius orderings and polynomial signs over the extremal grid"""
        return sweep_claims(k_max, s_max, n_max, settings=self.settings)

    def lemma_property_suite(self, trials: int, seed: int = DEFAULT_SEED) -> VerificationReport:
        """Seeded property checks of the supporting lemmas"""
        return lemma_property_suite(trials, seed, settings=self.settings)

    def _threshold(self, exceptional: Graph, branch: str) -> float:
        threshold = _threshold_value(exceptional, self.settings)
        if branch == 'gsharp':
            closed = rho_sharp_closed(exceptional.order)
            if abs(closed - threshold) > self.settings.margin:
                logger.warning(f"G# closed form {closed} differs from computed radius {threshold}")
        return threshold

    def _sampled_graphs(self, n: int, budget: int, seed: int) -> Iterator[Graph]:
        rng = np.random.default_rng(seed)
        for _ in range(budget):
            yield random_connected_graph(n, rng, self.settings.edge_probability)
        for params in all_split_joins(n):
            yield build_split_join(params)

    def _run(self, context: ThresholdContext, graphs: Iterable[Graph]):
        batches = _batched(graphs, self.settings.batch_size)
        worker = partial(_examine_batch, context)
        if self.settings.workers == 1:
            for batch in batches:
                yield worker(batch)
            return
        with ProcessPoolExecutor(max_workers=self.settings.workers) as executor:
            yield from executor.map(worker, batches)


def create_harness(settings: Optional[HarnessSettings] = None, **overrides) -> VerificationHarness:
    """
    Create harness with optional setting overrides

    Args:
        settings: Base settings (defaults when omitted)
        **overrides: HarnessSettings fields to replace; None values are ignored

    Returns:
        VerificationHarness instance
    """
    return VerificationHarness((settings or HarnessSettings()).with_overrides(**overrides))


def verify_spanning_ktree_bound(k: int,
                                n: int,
                                mode: str = Mode.EXHAUSTIVE,
                                budget: int = 0,
                                seed: int = DEFAULT_SEED,
                                settings: Optional[HarnessSettings] = None) -> VerificationReport:
    """Run one threshold campaign with a default harness"""
    return create_harness(settings).verify_spanning_ktree_bound(k, n, mode, budget, seed)
