"""Exact sparse linear algebra over the rationals.

Matrices are stored row-major as ``{row: {col: Fraction}}`` with no explicit
zeros.  Elimination is fraction-free: each row is scaled to integers, rows
are combined as ``p * r - a * s`` and divided by the content gcd afterwards,
so intermediate values never leave the integers.  The pivot row is always a
shortest remaining row and the pivot column the sparsest column in it.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import NotInSpan, ValidationError


class RationalMatrix:
    def __init__(self, rows: int, cols: int, entries: Mapping[tuple, object] | None = None):
        if rows < 0 or cols < 0:
            raise ValidationError("negative matrix shape")
        self.rows = rows
        self.cols = cols
        self._data: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValidationError(f"entry ({r}, {c}) outside {rows}x{cols}")
            v = Fraction(v)
            if v:
                self._data.setdefault(r, {})[c] = v

    @classmethod
    def _from_rows(cls, rows: int, cols: int, data: dict) -> "RationalMatrix":
        m = cls(rows, cols)
        m._data = {r: dict(d) for r, d in data.items() if d}
        return m

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if nrows else (cols or 0)
        ent = {}
        for r, row in enumerate(dense):
            if len(row) != ncols:
                raise ValidationError("ragged dense matrix")
            for c, v in enumerate(row):
                if v:
                    ent[r, c] = v
        return cls(nrows, ncols, ent)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        ent = {}
        for c, col in enumerate(columns):
            if len(col) != rows:
                raise ValidationError("column length mismatch")
            for r, v in enumerate(col):
                if v:
                    ent[r, c] = v
        return cls(rows, len(columns), ent)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def entries(self) -> dict:
        return {(r, c): v for r, d in self._data.items() for c, v in d.items()}

    @property
    def nnz(self) -> int:
        return sum(len(d) for d in self._data.values())

    def row(self, r: int) -> dict:
        return dict(self._data.get(r, {}))

    def __getitem__(self, rc) -> Fraction:
        r, c = rc
        return self._data.get(r, {}).get(c, Fraction(0))

    def transpose(self) -> "RationalMatrix":
        data: dict = defaultdict(dict)
        for r, d in self._data.items():
            for c, v in d.items():
                data[c][r] = v
        return RationalMatrix._from_rows(self.cols, self.rows, data)

    T = property(transpose)

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for r, d in self._data.items():
            for c, v in d.items():
                out[r][c] = v
        return out

    def apply(self, x: Sequence) -> list:
        """Matrix-vector product with a dense vector."""
        if len(x) != self.cols:
            raise ValidationError(f"vector length {len(x)} != {self.cols}")
        out = [Fraction(0)] * self.rows
        for r, d in self._data.items():
            s = 0
            for c, v in d.items():
                xc = x[c]
                if xc:
                    s += v * xc
            out[r] = Fraction(s)
        return out

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return self.apply(other)
        if self.cols != other.rows:
            raise ValidationError(f"shape mismatch {self.shape} @ {other.shape}")
        data: dict = {}
        for r, d in self._data.items():
            acc: dict = defaultdict(Fraction)
            for k, v in d.items():
                for c, w in other._data.get(k, {}).items():
                    acc[c] += v * w
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                data[r] = acc
        return RationalMatrix._from_rows(self.rows, other.cols, data)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValidationError("shape mismatch")
        ent = defaultdict(Fraction, self.entries)
        for k, v in other.entries.items():
            ent[k] += v
        return RationalMatrix(self.rows, self.cols, ent)

    def __neg__(self):
        return RationalMatrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return not self._data

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.shape == other.shape
            and self._data == other._data
        )

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def _integer_row(row: Mapping[int, Fraction]) -> dict:
    den = lcm(*(Fraction(v).denominator for v in row.values())) if row else 1
    out = {c: int(Fraction(v) * den) for c, v in row.items()}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for c in row:
            row[c] //= g
    return row


def _eliminate(rows: Iterable[dict], protected: int | None = None):
    """Forward elimination on integer rows.

    Returns ``(pivots, zero_rows)``.  ``pivots`` is a list of
    ``(pivot_col, row)`` in elimination order; each pivot row is free of the
    pivot columns chosen before it.  Column ``protected`` (an augmented
    right-hand side) is never used as a pivot; rows left with only that column
    are returned in ``zero_rows``.
    """
    active: dict[int, dict] = {}
    colidx: dict[int, set] = defaultdict(set)
    heap = []
    for rid, row in enumerate(rows):
        if not row:
            continue
        active[rid] = row
        for c in row:
            colidx[c].add(rid)
        heap.append((len(row), rid))
    heapq.heapify(heap)
    pivots = []
    zero_rows = []
    while heap:
        length, rid = heapq.heappop(heap)
        row = active.get(rid)
        if row is None or len(row) != length:
            continue
        del active[rid]
        for c in row:
            colidx[c].discard(rid)
        cands = [c for c in row if c != protected]
        if not cands:
            zero_rows.append(row)
            continue
        pc = min(cands, key=lambda c: (len(colidx[c]), abs(row[c]), c))
        p = row[pc]
        for oid in list(colidx[pc]):
            other = active[oid]
            a = other[pc]
            g = gcd(p, a)
            sp, sa = p // g, a // g
            if sp != 1:
                for c in other:
                    other[c] *= sp
            for c, v in row.items():
                nv = other.get(c, 0) - sa * v
                if nv:
                    if c not in other:
                        colidx[c].add(oid)
                    other[c] = nv
                elif c in other:
                    del other[c]
                    colidx[c].discard(oid)
            if other:
                _primitive(other)
                heapq.heappush(heap, (len(other), oid))
            else:
                del active[oid]
        pivots.append((pc, row))
    return pivots, zero_rows


def _int_rows(A: RationalMatrix) -> list:
    return [_integer_row(d) for _, d in sorted(A._data.items())]


def rank(A: RationalMatrix) -> int:
    pivots, _ = _eliminate(_int_rows(A))
    return len(pivots)


def nullity(A: RationalMatrix) -> int:
    return A.cols - rank(A)


def _back_substitute(pivots, x: dict, rhs_col: int | None = None) -> dict:
    for pc, row in reversed(pivots):
        s = Fraction(row.get(rhs_col, 0)) if rhs_col is not None else Fraction(0)
        for c, v in row.items():
            if c != pc and c != rhs_col:
                xc = x.get(c)
                if xc:
                    s -= v * xc
        if s:
            x[pc] = s / row[pc]
    return x


def nullspace_basis(A: RationalMatrix) -> list:
    """Basis of ``{x : A x = 0}`` as dense Fraction vectors.

    One vector per free column, in ascending column order, with that free
    variable set to 1 and the other free variables set to 0.
    """
    pivots, _ = _eliminate(_int_rows(A))
    pivot_cols = {pc for pc, _ in pivots}
    basis = []
    for f in range(A.cols):
        if f in pivot_cols:
            continue
        x = _back_substitute(pivots, {f: Fraction(1)})
        vec = [Fraction(0)] * A.cols
        for c, v in x.items():
            vec[c] = v
        basis.append(vec)
    return basis


def solve_in_span(A: RationalMatrix, b: Sequence) -> list:
    """Some ``x`` with ``A x = b``; raises :class:`NotInSpan` when none exists.

    Free variables are set to 0.
    """
    if len(b) != A.rows:
        raise ValidationError(f"rhs length {len(b)} != {A.rows}")
    rhs = A.cols
    rows = []
    for r in range(A.rows):
        d = dict(A._data.get(r, {}))
        if b[r]:
            d[rhs] = Fraction(b[r])
        if d:
            rows.append(_integer_row(d))
    pivots, zero_rows = _eliminate(rows, protected=rhs)
    if any(row.get(rhs) for row in zero_rows):
        raise NotInSpan("right-hand side is not in the column span")
    x = _back_substitute(pivots, {}, rhs_col=rhs)
    return [x.get(c, Fraction(0)) for c in range(A.cols)]


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of Q^dim.

    Vectors are sparse dicts.  ``add`` reduces a vector by the current basis
    and keeps it when a nonzero remainder survives.  Stored vectors lead with
    their pivot coordinate, so reduction never reintroduces a cleared
    coordinate.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: dict[int, dict] = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Mapping[int, Fraction]) -> dict:
        v = {c: Fraction(x) for c, x in v.items() if x}
        while v:
            c = min(v)
            row = self._rows.get(c)
            if row is None:
                return v
            f = v[c]
            for j, y in row.items():
                nv = v.get(j, 0) - f * y
                if nv:
                    v[j] = nv
                else:
                    v.pop(j, None)
        return v

    def add(self, v: Mapping[int, Fraction]) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        c = min(r)
        lead = r[c]
        self._rows[c] = {j: x / lead for j, x in r.items()}
        return True

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return not self.reduce(v)


def sparse(vec: Sequence) -> dict:
    return {i: Fraction(x) for i, x in enumerate(vec) if x}


def dense(vec: Mapping[int, Fraction], dim: int) -> list:
    out = [Fraction(0)] * dim
    for i, x in vec.items():
        out[i] = Fraction(x)
    return out
