"""Workbench for logics over words, numerical predicates and pushdown machines."""

__version__ = "0.1.0"
