"""Dense exact rational linear algebra.

Two interchangeable elimination backends produce the (unique) reduced
row-echelon form: a plain ``fractions.Fraction`` Gauss-Jordan routine and
FLINT's ``fmpq_mat.rref`` when python-flint is importable.  Nullspace and
solve are built on top of the RREF, so both backends give identical bases.
"""
from dataclasses import dataclass
from fractions import Fraction

try:
    import flint
except ImportError:  # pragma: no cover - flint is a declared dependency
    flint = None

from .combinatorics import ParameterError

ZERO = Fraction(0)
ONE = Fraction(1)

# Below this many entries the pure-Python path is fast enough.
FLINT_THRESHOLD = 400


def _q(x):
    if type(x) is Fraction:
        return x
    return ZERO if x == 0 else Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ParameterError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ParameterError("ragged rows")
        return cls(len(rows), cols, tuple(_q(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, size):
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)])

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def matvec(self, v):
        if len(v) != self.cols:
            raise ParameterError("vector length does not match column count")
        return [sum((a * b for a, b in zip(self.row(i), v) if a), ZERO) for i in range(self.rows)]


def _rref_python(m):
    a = m.to_rows()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((k for k in range(r, m.rows) if a[k][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pivot_row = a[r]
        for k in range(m.rows):
            f = a[k][c]
            if k != r and f != 0:
                a[k] = [x - f * y for x, y in zip(a[k], pivot_row)]
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_flint(m):
    fm = flint.fmpq_mat(m.rows, m.cols, [flint.fmpq(x.numerator, x.denominator) for x in m.entries])
    red, rk = fm.rref()
    a = []
    for row in red.tolist():
        a.append([ZERO if e == 0 else Fraction(int(e.p), int(e.q)) for e in row])
    pivots = []
    for i in range(rk):
        pivots.append(next(j for j in range(m.cols) if a[i][j] != 0))
    return a, pivots


def rref(m, backend="auto"):
    """Reduced row-echelon form and the tuple of pivot columns.

    ``backend`` is ``"python"``, ``"flint"`` or ``"auto"``.
    """
    if backend == "auto":
        backend = "flint" if flint is not None and m.rows * m.cols >= FLINT_THRESHOLD else "python"
    if m.rows == 0 or m.cols == 0:
        return m, ()
    if backend == "flint":
        if flint is None:
            raise RuntimeError("python-flint is not installed")
        a, pivots = _rref_flint(m)
    elif backend == "python":
        a, pivots = _rref_python(m)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return RationalMatrix.from_rows(a, m.cols), tuple(pivots)


def rank(m, backend="auto"):
    return len(rref(m, backend)[1])


def _kernel_from_rref(red, pivots):
    pivot_set = set(pivots)
    basis = []
    for free in range(red.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * red.cols
        v[free] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r, free]
        basis.append(v)
    return basis


def nullspace(m, backend="auto"):
    """Basis of the right kernel, one vector per non-pivot column."""
    red, pivots = rref(m, backend)
    return _kernel_from_rref(red, pivots)


@dataclass(frozen=True)
class Unique:
    x: list


@dataclass(frozen=True)
class Underdetermined:
    particular: list
    kernel: list


@dataclass(frozen=True)
class Inconsistent:
    pass


def solve(m, b, backend="auto"):
    """Classify ``m x = b`` as Unique, Underdetermined or Inconsistent."""
    if len(b) != m.rows:
        raise ParameterError(f"right-hand side has length {len(b)}, expected {m.rows}")
    b = [Fraction(x) for x in b]
    aug = RationalMatrix.from_rows([list(m.row(i)) + [b[i]] for i in range(m.rows)], m.cols + 1)
    red, pivots = rref(aug, backend)
    if m.cols in pivots:
        return Inconsistent()
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red[r, m.cols]
    if len(pivots) == m.cols:
        return Unique(x)
    # Dropping the augmented column leaves the RREF of m itself.
    core = RationalMatrix.from_rows([red.row(i)[:m.cols] for i in range(red.rows)], m.cols)
    return Underdetermined(x, _kernel_from_rref(core, pivots))
