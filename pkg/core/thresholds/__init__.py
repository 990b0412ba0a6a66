from .bisection import ThresholdEstimate, bisect_threshold, bisect_thresholds, DEFAULT_REL_TOL
from .matched_pair import MatchedPair, matched_pair, matched_pairs, BRACKET_MARGIN, STANDARD_BRACKET_EXPANSIONS

__all__ = ['ThresholdEstimate', 'bisect_threshold', 'bisect_thresholds', 'DEFAULT_REL_TOL',
           'MatchedPair', 'matched_pair', 'matched_pairs', 'BRACKET_MARGIN', 'STANDARD_BRACKET_EXPANSIONS']
