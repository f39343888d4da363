"""
R-matrix bundle: a representation, its R_VV and everything derived from it.

Bundles are immutable; each stage returns a new bundle via dataclasses.replace.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from exact import LaurentScalar, PolyMatrix, RatScalar, SignedMonomial
from qrep import Rep
from schemas import BundleReport, CheckResult, EigenvalueModel, MatrixModel, ScalarModel

from .star import convert

logger = logging.getLogger(__name__)

# R' = P: the braided covector algebra is free
FREE = "free"

HECKE = "hecke"
MINUS_ONE = "minus_one"


@dataclass(frozen=True)
class Spectrum:
    """Roots of the minimal polynomial of PR_VV and its symmetry."""

    eigenvalues: Tuple[SignedMonomial, ...]
    minpoly: Tuple[RatScalar, ...]
    symmetric: bool
    # 1-based (i, j, k, l) with (PR)^{ij}_{kl} != (PR)^{kl}_{ij}
    witness: Optional[Tuple[int, int, int, int]] = None

    @property
    def negative(self) -> List[SignedMonomial]:
        return [e for e in self.eigenvalues if e.sign < 0]


@dataclass(frozen=True)
class RMatrixBundle:
    rep: Rep
    rvv: PolyMatrix
    convention: str = "operator"
    spectrum: Optional[Spectrum] = None
    branch: Optional[str] = None
    lam: Optional[LaurentScalar] = None
    rnorm: Optional[PolyMatrix] = None
    rprime: Union[PolyMatrix, str, None] = None
    checks: Tuple[CheckResult, ...] = field(default=())

    @property
    def dim(self) -> int:
        return self.rep.dim

    @property
    def den(self) -> int:
        return self.rep.den

    @property
    def eigenvalues(self) -> Tuple[SignedMonomial, ...]:
        return self.spectrum.eigenvalues if self.spectrum else ()

    @property
    def is_free(self) -> bool:
        return self.rprime == FREE

    def index_layout(self) -> PolyMatrix:
        """R_VV in the R^{ij}_{kl} index layout."""
        return convert(self.rvv)

    def to_report(self) -> BundleReport:
        spectrum = self.spectrum
        rprime = self.rprime if isinstance(self.rprime, PolyMatrix) else None
        return BundleReport(
            rep=self.rep.tag,
            n=self.rep.n,
            dim=self.dim,
            labels=list(self.rep.labels),
            convention=self.convention,
            rvv=MatrixModel.of(self.rvv),
            eigenvalues=[EigenvalueModel.of(e) for e in self.eigenvalues],
            symmetric=spectrum.symmetric if spectrum else None,
            witness=list(spectrum.witness) if spectrum and spectrum.witness else None,
            branch=self.branch,
            lam=ScalarModel.of(self.lam) if self.lam is not None else None,
            rnorm=MatrixModel.of(self.rnorm) if self.rnorm is not None else None,
            rprime=MatrixModel.of(rprime) if rprime is not None else None,
            rprime_free=self.is_free,
            checks=list(self.checks),
        )
