"""Exact integer linear algebra: Smith normal form, integer solving, kernels.

Everything runs over Python integers, which are arbitrary precision, so the
classical coefficient explosion during elimination cannot overflow.  The
Smith reduction pivots on a nonzero entry of minimal absolute value (lowest
row-major index on ties), a standard heuristic that keeps coefficients small
and makes every decomposition deterministic.
"""

from dataclasses import dataclass

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "SolveResult",
    "smith_normal_form",
    "solve_with_smith",
    "solve_integer",
    "kernel_basis",
    "determinant",
]


class IntMatrix:
    """A dense matrix of Python integers."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")
            for x in r:
                if not isinstance(x, int):
                    raise TypeError("non-integer entry %r" % (x,))
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)])

    def copy(self):
        return IntMatrix(self.rows)

    def transpose(self):
        return IntMatrix([[self.rows[i][j] for i in range(self.nrows)]
                          for j in range(self.ncols)])

    def column(self, j):
        return [r[j] for r in self.rows]

    def mul_vec(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("vector length %d != %d columns"
                             % (len(vec), self.ncols))
        return [sum(a * x for a, x in zip(row, vec)) for row in self.rows]

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch %dx%d * %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        cols = list(zip(*other.rows)) if other.rows else []
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                          for row in self.rows])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __repr__(self):
        return "IntMatrix(%r)" % (self.rows,)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple

    @property
    def rank(self):
        return len(self.invariant_factors)


def _min_pivot(d, t, m, n):
    best = None
    best_abs = None
    for i in range(t, m):
        row = d[i]
        for j in range(t, n):
            x = row[j]
            if x:
                a = x if x > 0 else -x
                if best_abs is None or a < best_abs:
                    best, best_abs = (i, j), a
                    if a == 1:
                        return best
    return best


def smith_normal_form(a):
    """Smith decomposition of an IntMatrix (or plain list of rows)."""
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    m, n = a.nrows, a.ncols
    d = [row[:] for row in a.rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    t = 0
    while t < min(m, n):
        piv = _min_pivot(d, t, m, n)
        if piv is None:
            break
        i, j = piv
        if i != t:
            d[t], d[i] = d[i], d[t]
            u[t], u[i] = u[i], u[t]
        if j != t:
            for row in d:
                row[t], row[j] = row[j], row[t]
            for row in v:
                row[t], row[j] = row[j], row[t]
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

        pivot = d[t][t]
        dirty = False
        for i in range(t + 1, m):
            if d[i][t]:
                q = d[i][t] // pivot
                if q:
                    d[i] = [x - q * y for x, y in zip(d[i], d[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if d[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if d[t][j]:
                q = d[t][j] // pivot
                if q:
                    for row in d:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if d[t][j]:
                    dirty = True
        if dirty:
            continue

        # diagonal block is clean; force the divisibility chain
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            d[t] = [x + y for x, y in zip(d[t], d[offender])]
            u[t] = [x + y for x, y in zip(u[t], u[offender])]
            continue
        t += 1

    factors = tuple(d[k][k] for k in range(min(m, n)) if d[k][k])
    return SmithDecomposition(IntMatrix(u), IntMatrix(d), IntMatrix(v), factors)


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an integer linear solve.

    ``reason`` is None on success, otherwise "no rational solution" (the
    system is inconsistent over the rationals) or "no integer solution"
    (rationally solvable, but no integral point exists).
    """

    solution: list
    reason: str = None

    @property
    def ok(self):
        return self.solution is not None


def solve_with_smith(dec, b):
    """Solve A x = b given a Smith decomposition of A."""
    m, n = dec.D.nrows, dec.D.ncols
    if len(b) != m:
        raise ValueError("right-hand side length %d != %d rows" % (len(b), m))
    ub = dec.U.mul_vec(b)
    r = dec.rank
    for i in range(r, m):
        if ub[i]:
            return SolveResult(None, "no rational solution")
    y = [0] * n
    for i in range(r):
        q, rem = divmod(ub[i], dec.D.rows[i][i])
        if rem:
            return SolveResult(None, "no integer solution")
        y[i] = q
    return SolveResult(dec.V.mul_vec(y))


def solve_integer(a, b, row_order=None, col_order=None):
    """One integer solution of A x = b, or the obstruction.

    ``row_order``/``col_order`` optionally permute the matrix before the
    Smith reduction, changing pivot choices (and hence possibly the witness);
    the returned solution is expressed in the original coordinates.  Used to
    check that downstream results do not depend on the particular witness.
    """
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    if row_order is None and col_order is None:
        return solve_with_smith(smith_normal_form(a), b)
    rows = row_order if row_order is not None else range(a.nrows)
    cols = list(col_order) if col_order is not None else list(range(a.ncols))
    perm = IntMatrix([[a.rows[i][j] for j in cols] for i in rows])
    res = solve_with_smith(smith_normal_form(perm), [b[i] for i in rows])
    if not res.ok:
        return res
    x = [0] * a.ncols
    for k, j in enumerate(cols):
        x[j] = res.solution[k]
    return SolveResult(x)


def kernel_basis(a):
    """A lattice basis of the integer kernel of A (columns of V past the rank)."""
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    dec = smith_normal_form(a)
    return [dec.V.column(j) for j in range(dec.rank, a.ncols)]


def determinant(a):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    if a.nrows != a.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = a.nrows
    if n == 0:
        return 1
    m = [row[:] for row in a.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
