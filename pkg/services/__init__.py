"""
Services package: verification suites and DOT output.
"""

from .dot import dynkin_to_dot, emit_dot, tree_to_dot
from .suites import ALIASES, SUITES, SuiteRunner

__all__ = ["dynkin_to_dot", "emit_dot", "tree_to_dot", "ALIASES", "SUITES", "SuiteRunner"]
