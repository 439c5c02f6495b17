"""Brute-force reference implementations and the cross-check report."""
from .brute import brute_rep_series, brute_rep_series_many, closure, det_one_plus_sw
from .check import CheckReport, cross_check

__all__ = ["CheckReport", "brute_rep_series", "brute_rep_series_many", "closure",
           "cross_check", "det_one_plus_sw"]
