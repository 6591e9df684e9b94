"""Exact matrices over a commutative ring.

Matrices are immutable, stored row-major, and carry their ring.  Two
determinant routines are provided on purpose: det() is the production
path, a division-free dynamic program over column subsets costing
O(n^2 * 2^n) ring multiplications, and det_leibniz() is a deliberately
naive signed permutation sum kept as an independent cross-check (refused
for n > 8).  Neither ever divides, so both are valid over rings with zero
divisors.

Row, column, and entry indices are 1-based in the public operations
(entry, row, minor, submatrix); that matches the usual cofactor and
Laplace sign conventions, where the (i, j) cofactor carries (-1)**(i+j).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .poly import Polynomial, PolynomialRing
from .rings import GuardError, Ring, RingMismatchError, ShapeError


class Matrix:
    """Immutable n x m matrix over a fixed ring."""

    __slots__ = ("ring", "rows", "cols", "_e")

    def __init__(self, ring: Ring, rows: int, cols: int, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative dimensions {rows} x {cols}")
        if len(entries) != rows * cols:
            raise ShapeError(
                f"{rows} x {cols} matrix needs {rows * cols} entries, "
                f"got {len(entries)}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._e = entries

    @classmethod
    def from_rows(cls, ring: Ring, rows) -> "Matrix":
        """Build from nested lists, coercing entries (plain ints are fine)."""
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        flat = []
        for i, r in enumerate(rows):
            if len(r) != m:
                raise ShapeError(f"row {i + 1} has {len(r)} entries, expected {m}")
            flat.extend(ring.coerce(v) for v in r)
        return cls(ring, n, m, flat)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        zero, one = ring.zero(), ring.one()
        return cls(ring, n, n,
                   [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        zero = ring.zero()
        return cls(ring, rows, cols, [zero] * (rows * cols))

    def entry(self, i: int, j: int):
        """Entry in row i, column j (1-based)."""
        self._bounds(i, self.rows, "row")
        self._bounds(j, self.cols, "column")
        return self._e[(i - 1) * self.cols + (j - 1)]

    @staticmethod
    def _bounds(i: int, n: int, what: str) -> None:
        if not 1 <= i <= n:
            raise ShapeError(f"{what} index {i} out of range 1..{n}")

    def row_list(self, i: int) -> list:
        m = self.cols
        return list(self._e[(i - 1) * m:i * m])

    def row(self, i: int) -> "Matrix":
        """Row i as a 1 x m matrix (1-based)."""
        self._bounds(i, self.rows, "row")
        return Matrix(self.ring, 1, self.cols, self.row_list(i))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        R = self.ring
        return all(R.is_zero(v) for v in self._e)

    def _check_ring(self, other: "Matrix") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"matrices over {self.ring} and {other.ring} cannot be combined")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(
                f"cannot add {self.rows} x {self.cols} and "
                f"{other.rows} x {other.cols}")
        R = self.ring
        return Matrix(R, self.rows, self.cols,
                      [R.add(a, b) for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Matrix":
        R = self.ring
        return Matrix(R, self.rows, self.cols, [R.neg(a) for a in self._e])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(
                f"cannot subtract {other.rows} x {other.cols} from "
                f"{self.rows} x {self.cols}")
        R = self.ring
        return Matrix(R, self.rows, self.cols,
                      [R.sub(a, b) for a, b in zip(self._e, other._e)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows} x {self.cols} by "
                f"{other.rows} x {other.cols}")
        R = self.ring
        n, k, m = self.rows, self.cols, other.cols
        a, b = self._e, other._e
        zero = R.zero()
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                acc = zero
                for l in range(k):
                    al = arow[l]
                    if not R.is_zero(al):
                        acc = R.add(acc, R.mul(al, b[l * m + j]))
                out.append(acc)
        return Matrix(R, n, m, out)

    def scale(self, value) -> "Matrix":
        """Multiply every entry by a ring value."""
        R = self.ring
        value = R.coerce(value)
        return Matrix(R, self.rows, self.cols, [R.mul(value, a) for a in self._e])

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise ShapeError("matrix power requires a square matrix")
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result = Matrix.identity(self.ring, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base_needed = k >> 1
            if base_needed:
                base = base @ base
            k = base_needed
        return result

    def trace(self):
        if not self.is_square():
            raise ShapeError("trace requires a square matrix")
        R = self.ring
        acc = R.zero()
        for i in range(self.rows):
            acc = R.add(acc, self._e[i * self.cols + i])
        return acc

    def det(self):
        """Determinant, division-free.

        Dynamic program over column subsets: after processing r rows the
        table maps each r-subset S of columns to the determinant of the
        submatrix on rows 1..r and columns S, built by Laplace expansion
        along the last row.  det of the 0 x 0 matrix is 1.
        """
        if not self.is_square():
            raise ShapeError("determinant requires a square matrix")
        n = self.rows
        R = self.ring
        if n == 0:
            return R.one()
        e = self._e
        zero = R.zero()
        table = {0: R.one()}
        for r in range(n):
            nxt: dict[int, object] = {}
            base = r * n
            for mask, val in table.items():
                if R.is_zero(val):
                    continue
                for j in range(n):
                    bit = 1 << j
                    if mask & bit:
                        continue
                    a = e[base + j]
                    if R.is_zero(a):
                        continue
                    term = R.mul(a, val)
                    # parity of (row index) + (position of j among chosen columns)
                    pos = (mask & (bit - 1)).bit_count()
                    if (r + pos) & 1:
                        term = R.neg(term)
                    nm = mask | bit
                    cur = nxt.get(nm)
                    nxt[nm] = term if cur is None else R.add(cur, term)
            table = nxt
            if not table:
                return zero
        return table.get((1 << n) - 1, zero)

    def det_leibniz(self):
        """Signed permutation sum, the independent cross-check for det().

        Exponential in n and refused for n > 8.
        """
        if not self.is_square():
            raise ShapeError("determinant requires a square matrix")
        n = self.rows
        if n > 8:
            raise GuardError(f"det_leibniz is limited to n <= 8, got n = {n}")
        R = self.ring
        e = self._e
        acc = R.zero()
        for sigma, sign in _signed_permutations(n):
            term = R.one()
            for i in range(n):
                term = R.mul(term, e[i * n + sigma[i]])
            acc = R.add(acc, R.neg(term) if sign < 0 else term)
        return acc

    def minor(self, i: int, j: int) -> "Matrix":
        """Copy with row i and column j removed (1-based)."""
        self._bounds(i, self.rows, "row")
        self._bounds(j, self.cols, "column")
        out = []
        for r in range(self.rows):
            if r == i - 1:
                continue
            for c in range(self.cols):
                if c == j - 1:
                    continue
                out.append(self._e[r * self.cols + c])
        return Matrix(self.ring, self.rows - 1, self.cols - 1, out)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        """Rows and columns selected by 1-based index lists.

        Indices may repeat and appear in any order; the result has one row
        per entry of row_idx and one column per entry of col_idx.
        """
        for i in row_idx:
            self._bounds(i, self.rows, "row")
        for j in col_idx:
            self._bounds(j, self.cols, "column")
        out = [
            self._e[(i - 1) * self.cols + (j - 1)]
            for i in row_idx
            for j in col_idx
        ]
        return Matrix(self.ring, len(row_idx), len(col_idx), out)

    def adjugate(self) -> "Matrix":
        """Adjugate (classical adjoint): entry (i, j) is the (j, i) cofactor.

        adj of any 1 x 1 matrix is (1); adj of the 0 x 0 matrix is itself.
        """
        if not self.is_square():
            raise ShapeError("adjugate requires a square matrix")
        n = self.rows
        R = self.ring
        out = []
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                cof = self.minor(j, i).det()
                if (i + j) & 1:
                    cof = R.neg(cof)
                out.append(cof)
        return Matrix(R, n, n, out)

    def map_entries(self, fn, codomain: Ring) -> "Matrix":
        """Apply fn to every entry, producing a matrix over codomain."""
        return Matrix(codomain, self.rows, self.cols, [fn(v) for v in self._e])

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and self.ring == other.ring
                and self.rows == other.rows
                and self.cols == other.cols
                and self._e == other._e)

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self._e))

    def __repr__(self):
        R = self.ring
        body = "; ".join(
            ", ".join(R.format(v) for v in self.row_list(i))
            for i in range(1, self.rows + 1))
        return f"Matrix({self.rows}x{self.cols} over {R}: [{body}])"

    def to_json(self) -> dict:
        R = self.ring
        return {
            "ring": R.descriptor(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [R.element_to_json(v) for v in self.row_list(i)]
                for i in range(1, self.rows + 1)
            ],
        }


@lru_cache(maxsize=None)
def _signed_permutations(n: int):
    """All (permutation, sign) pairs of S_n, cached per n."""
    out = []
    for sigma in permutations(range(n)):
        inversions = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if sigma[i] > sigma[j]
        )
        out.append((sigma, -1 if inversions & 1 else 1))
    return tuple(out)


def block2x2(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """Glue four conforming blocks into [[a, b], [c, d]]."""
    for other in (b, c, d):
        a._check_ring(other)
    if a.rows != b.rows or c.rows != d.rows:
        raise ShapeError("block rows do not conform")
    if a.cols != c.cols or b.cols != d.cols:
        raise ShapeError("block columns do not conform")
    entries = []
    for i in range(1, a.rows + 1):
        entries.extend(a.row_list(i))
        entries.extend(b.row_list(i))
    for i in range(1, c.rows + 1):
        entries.extend(c.row_list(i))
        entries.extend(d.row_list(i))
    return Matrix(a.ring, a.rows + c.rows, a.cols + b.cols, entries)


def ent(m: Matrix):
    """The sole entry of a 1 x 1 matrix."""
    if (m.rows, m.cols) != (1, 1):
        raise ShapeError(f"ent requires a 1 x 1 matrix, got {m.rows} x {m.cols}")
    return m._e[0]


def apply_poly(p: Polynomial, a: Matrix) -> Matrix:
    """p(a) for a square matrix a over the coefficient ring of p (Horner)."""
    if not a.is_square():
        raise ShapeError("polynomial evaluation requires a square matrix")
    if p.ring != a.ring:
        raise RingMismatchError(
            f"polynomial over {p.ring} cannot act on a matrix over {a.ring}")
    R = a.ring
    n = a.rows
    if p.is_zero():
        return Matrix.zeros(R, n, n)
    coeffs = p.coeffs
    result = Matrix.identity(R, n).scale(coeffs[-1])
    for k in range(len(coeffs) - 2, -1, -1):
        result = result @ a + Matrix.identity(R, n).scale(coeffs[k])
    return result


def char_matrix(a: Matrix) -> Matrix:
    """t*I - a over the polynomial ring of a's ring."""
    if not a.is_square():
        raise ShapeError("characteristic matrix requires a square matrix")
    K = a.ring
    L = PolynomialRing(K)
    n = a.rows
    t = L.t()
    entries = []
    for i in range(n):
        for j in range(n):
            v = Polynomial(K, (K.neg(a._e[i * n + j]),))
            if i == j:
                v = v + t
            entries.append(v)
    return Matrix(L, n, n, entries)
