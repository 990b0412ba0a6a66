import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .bisection import DEFAULT_REL_TOL, ThresholdEstimate, bisect_thresholds
from ..analytic import chain_threshold, ratio_upper_bound, ring_upper_bound
from ..coupling import CouplingFunction, CouplingProfile, profile
from ..dynamics import SystemConfig
from ..errors import NotApplicableError
from ..frequencies import FrequencyVector, cumulative_deviations
from ..models import Scheme, Topology

__all__ = ['MatchedPair', 'matched_pair', 'matched_pairs', 'BRACKET_MARGIN']

logger = logging.getLogger(__name__)

BRACKET_MARGIN = 1.05
# the analytic caps are only proven for telescopic coupling
STANDARD_BRACKET_EXPANSIONS = 3


@dataclass(frozen=True)
class MatchedPair:
    chain: ThresholdEstimate
    ring: ThresholdEstimate
    analytic_chain: float
    ring_bound: float
    ratio_bound: float

    @property
    def ratio(self) -> float:
        return self.ring.estimate / self.chain.estimate


def matched_pair(f: CouplingFunction, fv: FrequencyVector, scheme: Scheme,
                 rel_tol: float = DEFAULT_REL_TOL, p: Optional[CouplingProfile] = None, **settings) -> MatchedPair:
    return matched_pairs(f, [fv], scheme, rel_tol, p, **settings)[0]


def matched_pairs(f: CouplingFunction, fvs: Sequence[FrequencyVector], scheme: Scheme,
                  rel_tol: float = DEFAULT_REL_TOL, p: Optional[CouplingProfile] = None,
                  **settings) -> List[MatchedPair]:
    """
    Chain and ring thresholds for every frequency vector, bracketed by BRACKET_MARGIN times the
    analytic caps. `settings` are passed on to SystemConfig (dt, transient_time, ...).
    """
    p = p or profile(f)
    deviations = [cumulative_deviations(fv) for fv in fvs]
    chain_caps = [chain_threshold(p, cd) for cd in deviations]
    ring_caps = [ring_upper_bound(p, cd) for cd in deviations]
    if not all(math.isfinite(cap) for cap in chain_caps + ring_caps):
        raise NotApplicableError('Analytic cap is infinite (constant frequencies): every width locks')

    expansions = 0 if scheme == Scheme.TELESCOPIC else STANDARD_BRACKET_EXPANSIONS
    estimates = {}
    for topology, caps in ((Topology.CHAIN, chain_caps), (Topology.RING, ring_caps)):
        logger.info('Bisecting %s threshold for %d system(s)...', topology.value, len(fvs))
        configs = [SystemConfig(f, fv, 0., topology, scheme, **settings) for fv in fvs]
        estimates[topology] = bisect_thresholds(configs, [BRACKET_MARGIN * cap for cap in caps], rel_tol, expansions)

    bound = ratio_upper_bound(p)
    return [MatchedPair(chain, ring, chain_cap, ring_cap, bound)
            for chain, ring, chain_cap, ring_cap
            in zip(estimates[Topology.CHAIN], estimates[Topology.RING], chain_caps, ring_caps)]
