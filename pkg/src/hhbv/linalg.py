"""Dense exact linear algebra over Q and F_p.

Everything here is small (a few hundred rows at most) and deterministic:
row reduction always picks the first row with a nonzero entry in the current
column, so kernels, solutions, and echelon forms are reproducible.

Polynomials (for minimal polynomials of endomorphisms) are coefficient lists
in ascending degree with an exact squarefreeness test via gcd(f, f').
"""

from __future__ import annotations

from .fields import Field


class Matrix:
    """Dense matrix over an exact field; entries are a list of row lists."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries: list[list]):
        self.field = field
        self.entries = [[field.norm(x) for x in row] for row in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(row) != self.cols for row in entries):
            raise ValueError("ragged rows")

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zero(field, n, n)
        one = field.of(1)
        for i in range(n):
            m.entries[i][i] = one
        return m

    @classmethod
    def from_columns(cls, field: Field, columns: list[list], rows: int) -> "Matrix":
        m = cls.zero(field, rows, len(columns))
        for j, col in enumerate(columns):
            for i, x in enumerate(col):
                m.entries[i][j] = field.norm(x)
        return m

    def column(self, j: int) -> list:
        return [row[j] for row in self.entries]

    def mul_vec(self, v: list) -> list:
        f = self.field
        return [f.norm(sum(row[j] * v[j] for j in range(self.cols) if v[j]))
                for row in self.entries]

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        f = self.field
        out = Matrix.zero(f, self.rows, other.cols)
        for i in range(self.rows):
            arow = self.entries[i]
            orow = out.entries[i]
            for k in range(self.cols):
                a = arow[k]
                if not a:
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    if brow[j]:
                        orow[j] = f.norm(orow[j] + a * brow[j])
        return out

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        f = self.field
        m = [row[:] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.norm(x * inv) for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    q = m[i][c]
                    m[i] = [f.norm(a - q * b) for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        out = Matrix.zero(f, self.rows, self.cols)
        out.entries = m
        return out, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[list]:
        """Basis of the right kernel; len = cols - rank, each Mv = 0 exactly."""
        f = self.field
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        one = f.of(1)
        for fc in free:
            v = [0] * self.cols
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = f.norm(-red.entries[r][fc])
            basis.append(v)
        return basis

    def solve(self, target: list) -> list | None:
        """Some c with (self)c = target, or None when target is not in the span."""
        if len(target) != self.rows:
            raise ValueError("length mismatch")
        f = self.field
        aug = Matrix(f, [row + [t] for row, t in zip(self.entries, target)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        sol = [0] * self.cols
        for r, pc in enumerate(pivots):
            sol[pc] = red.entries[r][self.cols]
        return sol

    def minimal_polynomial(self) -> list:
        """Monic minimal polynomial, ascending coefficients; [1] for a 0x0 matrix."""
        if self.rows != self.cols:
            raise ValueError("minimal polynomial needs a square matrix")
        f = self.field
        n = self.rows
        if n == 0:
            return [f.of(1)]
        power = Matrix.identity(f, n)
        flats = []
        while True:
            flat = [x for row in power.entries for x in row]
            span = Matrix(f, [list(col) for col in zip(*flats)]) if flats else None
            if flats:
                coeffs = span.solve(flat)
                if coeffs is not None:
                    poly = [f.norm(-c) for c in coeffs] + [f.of(1)]
                    return poly
            flats.append(flat)
            power = power.mul(self)


def poly_degree(p: list) -> int:
    d = len(p) - 1
    while d > 0 and not p[d]:
        d -= 1
    return d


def poly_derivative(field: Field, p: list) -> list:
    if len(p) <= 1:
        return [0]
    return [field.norm(k * p[k]) for k in range(1, len(p))]


def poly_mod(field: Field, a: list, b: list) -> list:
    """Remainder of a modulo b (b nonzero)."""
    a = a[: poly_degree(a) + 1]
    db = poly_degree(b)
    lead_inv = field.inv(b[db])
    a = list(a)
    while poly_degree(a) >= db and any(a):
        da = poly_degree(a)
        if not a[da]:
            a = a[:da]
            continue
        q = field.norm(a[da] * lead_inv)
        for k in range(db + 1):
            a[da - db + k] = field.norm(a[da - db + k] - q * b[k])
        a = a[: poly_degree(a) + 1]
        if not any(a):
            return [0]
    return a


def poly_gcd(field: Field, a: list, b: list) -> list:
    a = a[: poly_degree(a) + 1]
    b = b[: poly_degree(b) + 1]
    while any(b):
        a, b = b, poly_mod(field, a, b)
    if not any(a):
        return [0]
    inv = field.inv(a[poly_degree(a)])
    return [field.norm(c * inv) for c in a]


def squarefree(field: Field, p: list) -> bool:
    """gcd(p, p') is constant; over F_p a vanishing derivative fails the test."""
    deriv = poly_derivative(field, p)
    if not any(deriv):
        return poly_degree(p) == 0
    return poly_degree(poly_gcd(field, p, deriv)) == 0


def sparse_rank(field: Field, rows: list[dict]) -> int:
    """Rank of a sparse matrix given as a list of {column: value} rows.

    Used only for the big reduced-bar differentials, where each row has a
    handful of nonzero entries; elimination order is by current column index
    so the result is deterministic.
    """
    pivots: dict[int, dict] = {}
    rank = 0
    for row in rows:
        row = {c: field.norm(v) for c, v in row.items() if field.norm(v)}
        while row:
            c = min(row)
            if c in pivots:
                piv = pivots[c]
                factor = row[c]
                for pc, pv in piv.items():
                    row[pc] = field.norm(row.get(pc, 0) - factor * pv)
                    if not row[pc]:
                        del row[pc]
            else:
                inv = field.inv(row[c])
                pivots[c] = {k: field.norm(v * inv) for k, v in row.items()}
                rank += 1
                break
    return rank


class SpanSolver:
    """Repeated exact solves against a fixed matrix (column span membership).

    Factors the matrix once (RREF of the transpose-augmented system) and then
    answers solve() queries by forward elimination of the target vector.
    """

    def __init__(self, field: Field, columns: list[list], rows: int):
        self.field = field
        self.rows = rows
        self.ncols = len(columns)
        # Row-reduce [columns | I_rows] so each query is one elimination pass.
        f = field
        aug = [[columns[j][i] for j in range(self.ncols)] for i in range(rows)]
        record: list[tuple[int, list]] = []  # (pivot column, full row of coeffs)
        work = [list(r) + [0] * rows for r in aug]
        for i in range(rows):
            work[i][self.ncols + i] = f.of(1)
        r = 0
        self.pivots: list[int] = []
        for c in range(self.ncols):
            pr = next((i for i in range(r, rows) if work[i][c]), None)
            if pr is None:
                continue
            work[r], work[pr] = work[pr], work[r]
            inv = f.inv(work[r][c])
            work[r] = [f.norm(x * inv) for x in work[r]]
            for i in range(rows):
                if i != r and work[i][c]:
                    q = work[i][c]
                    work[i] = [f.norm(a - q * b) for a, b in zip(work[i], work[r])]
            self.pivots.append(c)
            r += 1
            if r == rows:
                break
        self.reduced = work
        self.rank = len(self.pivots)

    def solve(self, target: list) -> list | None:
        """Coefficients c with columns @ c = target, or None when infeasible."""
        f = self.field
        n = self.ncols
        # After the stored eliminations, row i of [A|I] @ (…, target) recreates
        # the reduced target; consistency means rows past the rank vanish.
        transformed = []
        for i in range(self.rows):
            row = self.reduced[i]
            s = 0
            for k in range(self.rows):
                x = row[n + k]
                if x and target[k]:
                    s += x * target[k]
            transformed.append(f.norm(s))
        for i in range(self.rank, self.rows):
            if transformed[i]:
                return None
        # Free variables are set to 0, and RREF clears pivot columns from
        # other rows, so each pivot coordinate is read off directly.
        sol = [0] * n
        for i, pc in enumerate(self.pivots):
            sol[pc] = transformed[i]
        return sol
