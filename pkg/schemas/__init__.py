"""
Schemas package for JSON report models.
"""

from .reports import (
    BundleReport,
    CheckResult,
    EigenvalueModel,
    GrowthReport,
    MatrixModel,
    RadicalReport,
    ScalarModel,
    SuiteReport,
    TreeEdgeModel,
    TreeReport,
    WeightModel,
)

__all__ = [
    "BundleReport",
    "CheckResult",
    "EigenvalueModel",
    "GrowthReport",
    "MatrixModel",
    "RadicalReport",
    "ScalarModel",
    "SuiteReport",
    "TreeEdgeModel",
    "TreeReport",
    "WeightModel",
]
