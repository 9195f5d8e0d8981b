"""Seeded property suites; importing this package registers every suite"""

from src.suites.base import SUITES, BaseSuite, SuiteFailure, SuiteReport, case_seed, get_suite
from src.suites import asimulation_suites, semantic_suites, transform_suites  # noqa: F401

__all__ = ['SUITES', 'BaseSuite', 'SuiteFailure', 'SuiteReport', 'case_seed', 'get_suite']
