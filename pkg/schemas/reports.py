"""
Report models for command output.

Every JSON document the CLI writes is one of these models, dumped with
model_dump_json(indent=2). Field order follows declaration order.
"""

import logging
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class ScalarModel(BaseModel):
    """Exact scalar: Laurent form ({"den", "terms"}) or a ratio ({"num", "den"})."""

    value: Dict
    text: str

    @classmethod
    def of(cls, scalar) -> "ScalarModel":
        return cls(value=scalar.to_json(), text=str(scalar))


class MatrixModel(BaseModel):
    nrows: int
    ncols: int
    entries: List[List] = Field(default_factory=list)

    @classmethod
    def of(cls, matrix) -> "MatrixModel":
        data = matrix.to_json()
        return cls(nrows=data["nrows"], ncols=data["ncols"], entries=data["entries"])


class WeightModel(BaseModel):
    """Simple-root coordinates plus the (v, v) of a central component, as p/q strings."""

    coords: List[str]
    central: str = "0/1"

    @classmethod
    def of(cls, weight) -> "WeightModel":
        return cls(**weight.to_json())


class EigenvalueModel(BaseModel):
    sign: int
    exp: str
    text: str

    @classmethod
    def of(cls, root) -> "EigenvalueModel":
        data = root.to_json()
        return cls(sign=data["sign"], exp=data["exp"], text=str(root))


class CheckResult(BaseModel):
    """Outcome of one verification; both sides are rendered on failure."""

    name: str
    passed: bool
    detail: str = ""
    location: Optional[str] = None
    expected: Optional[str] = None
    actual: Optional[str] = None
    seconds: Optional[float] = None


class BundleReport(BaseModel):
    rep: str
    n: int
    dim: int
    labels: List[str]
    convention: str
    rvv: MatrixModel
    eigenvalues: List[EigenvalueModel] = Field(default_factory=list)
    symmetric: Optional[bool] = None
    witness: Optional[List[int]] = None
    branch: Optional[str] = None
    lam: Optional[ScalarModel] = None
    rnorm: Optional[MatrixModel] = None
    rprime: Optional[MatrixModel] = None
    rprime_free: bool = False
    checks: List[CheckResult] = Field(default_factory=list)


class RadicalReport(BaseModel):
    rep: str
    n: int
    degree: int
    side: str
    basis_words: List[str]
    pairing_rank: int
    left_radical: List[str] = Field(default_factory=list)
    right_radical: List[str] = Field(default_factory=list)
    excess: bool = False
    checks: List[CheckResult] = Field(default_factory=list)


class GrowthReport(BaseModel):
    source: str
    target: str
    rep: str
    n: int
    lam: ScalarModel = Field(serialization_alias="lambda")
    mu: WeightModel
    vnorm: str
    alpha_n: WeightModel
    new_root_norm: str
    new_root_inner: List[str]
    cartan: List[List[int]]
    reference: List[List[int]]
    matches_reference: bool
    symmetrizer: List[str]
    q_star: ScalarModel
    mplus_convention: Optional[str] = None
    relations: List[CheckResult] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)


class TreeEdgeModel(BaseModel):
    source: str
    target: str
    rep: str
    lam: str
    status: str


class TreeReport(BaseModel):
    max_n: int
    nodes: List[str]
    edges: List[TreeEdgeModel]


class SuiteReport(BaseModel):
    suite: str
    passed: bool
    results: List[CheckResult]
    seconds: float = 0.0

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]
