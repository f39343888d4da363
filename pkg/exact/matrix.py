"""
Sparse exact matrices over the session's scalars.

Entries are LaurentScalar or RatScalar values; zero entries are never stored.
Indices are 0-based. Matrices act on column vectors, so entry (r, c) is the
coefficient of basis vector r in the image of basis vector c.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .laurent import LaurentScalar, check_session
from .ratfn import RatScalar

logger = logging.getLogger(__name__)

Index = Tuple[int, int]
SparseVector = Dict[int, Union[LaurentScalar, RatScalar]]


class DimensionMismatchError(ValueError):
    """Raised when matrix shapes are incompatible."""


class PolyMatrix:
    """Immutable sparse matrix with exact entries."""

    __slots__ = ("nrows", "ncols", "den", "_entries", "_cols", "_rows")

    def __init__(
        self,
        nrows: int,
        ncols: int,
        den: int,
        entries: Union[Mapping[Index, object], Iterable[Tuple[int, int, object]], None] = None,
    ):
        if nrows <= 0 or ncols <= 0:
            raise ValueError(f"Matrix dimensions must be positive, got {nrows}x{ncols}")
        self.nrows = nrows
        self.ncols = ncols
        self.den = den
        items: Iterable
        if entries is None:
            items = ()
        elif isinstance(entries, Mapping):
            items = ((r, c, v) for (r, c), v in entries.items())
        else:
            items = entries
        clean: Dict[Index, object] = {}
        for r, c, value in items:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"Entry ({r}, {c}) outside {nrows}x{ncols} matrix")
            value = _scalar(value, den)
            if value.is_zero:
                continue
            if (r, c) in clean:
                raise ValueError(f"Duplicate entry at ({r}, {c})")
            clean[(r, c)] = value
        self._entries = clean
        self._cols: Optional[Dict[int, List[Tuple[int, object]]]] = None
        self._rows: Optional[Dict[int, List[Tuple[int, object]]]] = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def identity(cls, size: int, den: int) -> "PolyMatrix":
        one = LaurentScalar.one(den)
        return cls(size, size, den, {(i, i): one for i in range(size)})

    @classmethod
    def diagonal(cls, values: Sequence, den: int) -> "PolyMatrix":
        return cls(len(values), len(values), den, {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], den: int) -> "PolyMatrix":
        return cls(
            len(rows),
            len(rows[0]),
            den,
            {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)},
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, object]], nrows: int, den: int) -> "PolyMatrix":
        return cls(
            nrows,
            len(columns),
            den,
            {(r, c): v for c, col in enumerate(columns) for r, v in col.items()},
        )

    @classmethod
    def flip(cls, d: int, den: int) -> "PolyMatrix":
        """The permutation P(x_i (x) x_j) = x_j (x) x_i on a d-dimensional space."""
        one = LaurentScalar.one(den)
        return cls(d * d, d * d, den, {(j * d + i, i * d + j): one for i in range(d) for j in range(d)})

    # ------------------------------------------------------------------
    # access

    def __getitem__(self, index: Index):
        value = self._entries.get(index)
        if value is None:
            return LaurentScalar.zero(self.den)
        return value

    def get(self, row: int, col: int):
        return self._entries.get((row, col))

    def entries(self) -> List[Tuple[int, int, object]]:
        """Nonzero entries in row-major order."""
        return [(r, c, v) for (r, c), v in sorted(self._entries.items())]

    def __iter__(self) -> Iterator[Tuple[int, int, object]]:
        return iter(self.entries())

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, col: int) -> List[Tuple[int, object]]:
        if self._cols is None:
            cols: Dict[int, List[Tuple[int, object]]] = defaultdict(list)
            for (r, c), v in sorted(self._entries.items()):
                cols[c].append((r, v))
            self._cols = dict(cols)
        return self._cols.get(col, [])

    def row(self, row: int) -> List[Tuple[int, object]]:
        if self._rows is None:
            rows: Dict[int, List[Tuple[int, object]]] = defaultdict(list)
            for (r, c), v in sorted(self._entries.items()):
                rows[r].append((c, v))
            self._rows = dict(rows)
        return self._rows.get(row, [])

    def to_rows(self) -> List[List[object]]:
        zero = LaurentScalar.zero(self.den)
        dense = [[zero] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self._entries.items():
            dense[r][c] = v
        return dense

    # ------------------------------------------------------------------
    # algebra

    def _check_same_shape(self, other: "PolyMatrix") -> None:
        check_session(self.den, other.den)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same_shape(other)
        acc = dict(self._entries)
        for key, v in other._entries.items():
            acc[key] = acc[key] + v if key in acc else v
        return PolyMatrix(self.nrows, self.ncols, self.den, acc)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.nrows, self.ncols, self.den, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale(self, factor) -> "PolyMatrix":
        return PolyMatrix(self.nrows, self.ncols, self.den, {k: v * factor for k, v in self._entries.items()})

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ncols, self.nrows, self.den, {(c, r): v for (r, c), v in self._entries.items()})

    def apply(self, vector: Mapping[int, object]) -> SparseVector:
        """Multiply a sparse column vector."""
        acc: Dict[int, object] = {}
        for c, x in vector.items():
            if x.is_zero:
                continue
            for r, v in self.column(c):
                term = v * x
                acc[r] = acc[r] + term if r in acc else term
        return {r: v for r, v in acc.items() if not v.is_zero}

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.den == other.den and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.shape, frozenset(self._entries.items())))

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self._entries)

    def is_upper_triangular(self, strict: bool = False) -> bool:
        return all(r < c or (not strict and r == c) for r, c in self._entries)

    def is_lower_triangular(self, strict: bool = False) -> bool:
        return all(r > c or (not strict and r == c) for r, c in self._entries)

    def first_difference(self, other: "PolyMatrix") -> Optional[Tuple[int, int, object, object]]:
        """First (row-major) position where two matrices differ, with both values."""
        self._check_same_shape(other)
        for key in sorted(set(self._entries) | set(other._entries)):
            a, b = self[key], other[key]
            if a != b:
                return key[0], key[1], a, b
        return None

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols}, nnz={len(self._entries)})"

    def to_json(self) -> Dict:
        return {
            "nrows": self.nrows,
            "ncols": self.ncols,
            "entries": [[r, c, v.to_json()] for r, c, v in self.entries()],
        }

    @classmethod
    def from_json(cls, data: Mapping, den: int) -> "PolyMatrix":
        entries = []
        for r, c, value in data["entries"]:
            scalar = RatScalar.from_json(value) if "num" in value else LaurentScalar.from_json(value)
            entries.append((int(r), int(c), scalar))
        return cls(int(data["nrows"]), int(data["ncols"]), den, entries)


def _scalar(value, den: int):
    if isinstance(value, LaurentScalar):
        check_session(den, value.den)
        return value
    if isinstance(value, RatScalar):
        check_session(den, value.session)
        return value.to_laurent() if value.is_laurent() else value
    return LaurentScalar.const(den, value)


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """
    Exact sparse product a @ b.

    Raises:
        DimensionMismatchError: If a.ncols != b.nrows
    """
    check_session(a.den, b.den)
    if a.ncols != b.nrows:
        raise DimensionMismatchError(f"Cannot multiply {a.shape} by {b.shape}")
    acc: Dict[Index, object] = {}
    for (k, c), bv in b._entries.items():
        for r, av in a.column(k):
            term = av * bv
            key = (r, c)
            acc[key] = acc[key] + term if key in acc else term
    return PolyMatrix(a.nrows, b.ncols, a.den, acc)


def kron(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Kronecker product; index (i, j) of the result is i * b.nrows + j."""
    check_session(a.den, b.den)
    entries = {}
    for (r1, c1), v1 in a._entries.items():
        for (r2, c2), v2 in b._entries.items():
            entries[(r1 * b.nrows + r2, c1 * b.ncols + c2)] = v1 * v2
    return PolyMatrix(a.nrows * b.nrows, a.ncols * b.ncols, a.den, entries)


def matrix_power_apply(matrix: PolyMatrix, coeffs: Sequence, vector: Mapping[int, object]) -> SparseVector:
    """Evaluate p(M) v for p given by ascending coefficients (Horner)."""
    result: Dict[int, object] = {}
    for coeff in reversed(coeffs):
        result = matrix.apply(result) if result else {}
        if not coeff.is_zero:
            for i, x in vector.items():
                term = coeff * x
                result[i] = result[i] + term if i in result else term
        result = {i: v for i, v in result.items() if not v.is_zero}
    return result


def matrix_polynomial(matrix: PolyMatrix, coeffs: Sequence) -> PolyMatrix:
    """Evaluate p(M) for p given by ascending coefficients (Horner)."""
    if not matrix.is_square():
        raise DimensionMismatchError(f"Polynomial of a non-square {matrix.shape} matrix")
    identity = PolyMatrix.identity(matrix.nrows, matrix.den)
    result = PolyMatrix(matrix.nrows, matrix.ncols, matrix.den)
    for coeff in reversed(coeffs):
        result = mat_mul(result, matrix) + identity.scale(coeff)
    return result
