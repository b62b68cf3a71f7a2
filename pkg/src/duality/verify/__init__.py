"""Oracles, exhaustive suites and the command-line interface."""
from .oracles import oracle_in_A, oracle_immerman, oracle_successor
from .suites import SUITES, SuiteParameterError, SuiteReport, UnknownSuiteError, run_suite
