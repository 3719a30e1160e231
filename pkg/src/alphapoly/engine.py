"""The direct path: symbolic mixing matrices and exact characteristic
polynomials.

`charpoly_direct` runs the Faddeev-LeVerrier trace recurrence over Z[a].
The recurrence only ever divides a trace by the integer step index, and
that division is exact, so the whole computation stays in Z[a].  The inner
loop packs each Z[a] entry into a single big integer (evaluation at a power
of two wide enough to keep coefficients in separate, balanced digit slots),
which turns polynomial matrix products into plain integer arithmetic while
remaining exact.

`polymatrix_det` is the independent second algorithm: fraction-free Bareiss
elimination over Q[a][l].  For integer-coefficient matrices it can also run
Bareiss on packed Z[a] values at interpolation points of `l`, which is what
makes the matrix-quadratic determinants of the total-graph identity cheap;
both strategies are exact and cross-checked in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .graphs import Graph, GraphParameterError
from .polynomials import (
    ALPHA_ONE,
    ALPHA_ZERO,
    AlphaPoly,
    BiPoly,
    DivisibilityError,
    exact_divide,
)


# ---------------------------------------------------------------------------
# packed Z[a] helpers
# ---------------------------------------------------------------------------

def _pack(coeffs: Sequence[int], width: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = (out << width) + c
    return out


def _unpack(x: int, width: int, count: int) -> list[int]:
    base = 1 << width
    half = base >> 1
    mask = base - 1
    out = []
    for _ in range(count):
        digit = x & mask
        if digit >= half:
            digit -= base
        out.append(digit)
        x = (x - digit) >> width
    if x != 0:
        raise OverflowError("packed coefficient overflow; width bound violated")
    return out


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _fl_coefficients(mat: list[list[int]], n: int) -> list[int]:
    """Packed charpoly coefficients [c_1..c_n], P = l^n + c_1 l^(n-1) + ..."""
    mk = [row[:] for row in mat]
    c = -sum(mk[i][i] for i in range(n))
    out = [c]
    for k in range(2, n + 1):
        for i in range(n):
            mk[i][i] += c
        mk = _matmul(mat, mk)
        t = sum(mk[i][i] for i in range(n))
        if t % k:
            raise ArithmeticError("trace recurrence division not exact")
        c = -(t // k)
        out.append(c)
    return out


def _fl_width(n: int, mu: int) -> int:
    # coefficient growth per step is at most n*(n+1)*mu, starting from mu
    bound = n * mu * max(n * (n + 1) * mu, 2) ** max(n - 1, 1)
    return bound.bit_length() + 2


def _charpoly_packed(n: int, degree_of, adjacent) -> BiPoly:
    """Charpoly of the matrix with diagonal degree_of(i)*a, off-diagonal (1-a)."""
    if n == 0:
        return BiPoly.one()
    mu = max(2, max(degree_of(i) for i in range(n)))
    width = _fl_width(n, mu)
    unit = 1 << width  # the packed image of `a`
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = degree_of(i) * unit
        for j in range(i + 1, n):
            if adjacent(i, j):
                mat[i][j] = mat[j][i] = 1 - unit
    packed = _fl_coefficients(mat, n)
    coeffs = [AlphaPoly(_unpack(c, width, n + 1)) for c in packed]
    ascending = list(reversed(coeffs)) + [ALPHA_ONE]
    return BiPoly(ascending)


# ---------------------------------------------------------------------------
# mixing matrix and characteristic polynomials
# ---------------------------------------------------------------------------

class PolyMatrix:
    """Square matrix with BiPoly entries."""

    __slots__ = ("size", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(_coerce(e) for e in row) for row in rows)
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise ValueError("matrix must be square")
        self.size = size
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        one, zero = BiPoly.one(), BiPoly.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> BiPoly:
        return self.rows[i][j]

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return PolyMatrix([[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return PolyMatrix([[a - b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.rows, other.rows)])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        cols = list(zip(*other.rows))
        return PolyMatrix([[_dot(row, col) for col in cols] for row in self.rows])

    def scale(self, s) -> "PolyMatrix":
        s = _coerce(s)
        return PolyMatrix([[s * e for e in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"PolyMatrix(size={self.size})"


def _coerce(e) -> BiPoly:
    if isinstance(e, BiPoly):
        return e
    if isinstance(e, AlphaPoly):
        return BiPoly((e,))
    return BiPoly((AlphaPoly((e,)),))


def _dot(row, col) -> BiPoly:
    out = BiPoly.zero()
    for a, b in zip(row, col):
        out = out + a * b
    return out


def alpha_matrix(g: Graph) -> PolyMatrix:
    """a*D(g) + (1-a)*A(g) as a symbolic matrix."""
    one_minus_a = AlphaPoly((1, -1))
    rows = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(BiPoly((AlphaPoly((0, g.degree(i))),)))
            elif g.adjacent(i, j):
                row.append(BiPoly((one_minus_a,)))
            else:
                row.append(BiPoly.zero())
        rows.append(row)
    return PolyMatrix(rows)


def adjacency_matrix(g: Graph) -> PolyMatrix:
    return PolyMatrix([[1 if g.adjacent(i, j) else 0 for j in range(g.n)]
                       for i in range(g.n)])


@lru_cache(maxsize=None)
def charpoly_direct(g: Graph) -> BiPoly:
    """det(l*I - (a*D + (1-a)*A)) by the trace recurrence; monic, degree n."""
    return _charpoly_packed(g.n, g.degree, g.adjacent)


@lru_cache(maxsize=None)
def _charpoly_principal(g: Graph, removed: frozenset) -> BiPoly:
    """Charpoly of the principal submatrix with `removed` rows/columns gone.

    Diagonal entries keep the degrees of the full graph; this is a submatrix
    of the mixing matrix, not the matrix of an induced subgraph.
    """
    kept = [v for v in range(g.n) if v not in removed]
    return _charpoly_packed(
        len(kept),
        lambda i: g.degree(kept[i]),
        lambda i, j: g.adjacent(kept[i], kept[j]),
    )


def charpoly_submatrix(g: Graph, u: int) -> BiPoly:
    """Charpoly after deleting row/column u; monic, degree n-1."""
    if not (0 <= u < g.n):
        raise GraphParameterError(f"vertex {u} out of range")
    return _charpoly_principal(g, frozenset((u,)))


def charpoly_submatrix_multi(g: Graph, vertices) -> BiPoly:
    """Charpoly after deleting all rows/columns in `vertices`."""
    removed = frozenset(vertices)
    for u in removed:
        if not (0 <= u < g.n):
            raise GraphParameterError(f"vertex {u} out of range")
    return _charpoly_principal(g, removed)


# ---------------------------------------------------------------------------
# determinants of polynomial matrices
# ---------------------------------------------------------------------------

def _bareiss_symbolic(rows: list[list[BiPoly]]) -> BiPoly:
    n = len(rows)
    if n == 0:
        return BiPoly.one()
    m = [row[:] for row in rows]
    sign = 1
    prev = BiPoly.one()
    for k in range(n - 1):
        p = k
        while p < n and not m[p][k]:
            p += 1
        if p == n:
            return BiPoly.zero()
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_divide(piv * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = BiPoly.zero()
        prev = piv
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _bareiss_int(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        p = k
        while p < n and m[p][k] == 0:
            p += 1
        if p == n:
            return 0
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * m[i][j] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("Bareiss division not exact")
                m[i][j] = q
            m[i][k] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def _int_coeff_matrix(mat: PolyMatrix):
    """Entries as nested int coefficient lists, or None if not integral."""
    out = []
    for row in mat.rows:
        orow = []
        for e in row:
            ce = []
            for ap in e.coeffs:
                cs = []
                for c in ap.coeffs:
                    if c.denominator != 1:
                        return None
                    cs.append(c.numerator)
                ce.append(cs)
            orow.append(ce)
        out.append(orow)
    return out


def _det_interpolated(mat: PolyMatrix, ints) -> BiPoly:
    n = mat.size
    ldeg = sum(max((e.degree for e in row), default=0) for row in mat.rows)
    ldeg = max(ldeg, 0)
    adeg = sum(max((e.alpha_degree() for e in row), default=0) for row in mat.rows)
    adeg = max(adeg, 0)
    digits = adeg + 1
    points = list(range(ldeg + 1))
    values = []
    for t in points:
        # evaluate each entry at l = t, keeping Z[a] coefficient lists
        evals = []
        bound = 1
        for row in ints:
            rowsum = 0
            erow = []
            for ce in row:
                acc = [0] * digits
                tp = 1
                for cs in ce:
                    for k, c in enumerate(cs):
                        acc[k] += c * tp
                    tp *= t
                erow.append(acc)
                rowsum += sum(abs(c) for c in acc)
            evals.append(erow)
            bound *= max(rowsum, 1)
        width = bound.bit_length() + 2
        packed = [[_pack(e, width) for e in row] for row in evals]
        values.append(AlphaPoly(_unpack(_bareiss_int(packed), width, digits)))
    # Lagrange reconstruction over Q
    result = BiPoly.zero()
    for i, t in enumerate(points):
        basis = BiPoly.one()
        denom = Fraction(1)
        for j, s in enumerate(points):
            if i == j:
                continue
            basis = basis * BiPoly((AlphaPoly((-s,)), ALPHA_ONE))
            denom *= t - s
        result = result + basis * (values[i] * AlphaPoly((Fraction(1, 1) / denom,)))
    return result


def polymatrix_det(mat: PolyMatrix, method: str = "auto") -> BiPoly:
    """Exact determinant over Q[a][l].

    method: "bareiss" forces symbolic fraction-free elimination,
    "interpolate" forces packed evaluation at integer points of l (integer
    coefficients only), "auto" picks interpolation when it applies.
    """
    if method not in ("auto", "bareiss", "interpolate"):
        raise ValueError(f"unknown method {method!r}")
    if method == "bareiss":
        return _bareiss_symbolic([list(r) for r in mat.rows])
    ints = _int_coeff_matrix(mat)
    if ints is None:
        if method == "interpolate":
            raise ValueError("interpolation requires integer coefficients")
        return _bareiss_symbolic([list(r) for r in mat.rows])
    if method == "auto" and mat.size <= 3:
        return _bareiss_symbolic([list(r) for r in mat.rows])
    return _det_interpolated(mat, ints)


def lam_identity_minus(mat: PolyMatrix) -> PolyMatrix:
    """l*I - mat."""
    lam = BiPoly((ALPHA_ZERO, ALPHA_ONE))
    n = mat.size
    return PolyMatrix([[lam - mat.rows[i][j] if i == j else -mat.rows[i][j]
                        for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# equitable partitions
# ---------------------------------------------------------------------------

class EquitabilityError(ValueError):
    """Partition is not equitable; carries the offending block pair."""

    def __init__(self, message: str, block: tuple[int, int]):
        super().__init__(message)
        self.block = block


class QuotientMatrix:
    """Constant block row sums of the mixing matrix over a vertex partition."""

    __slots__ = ("size", "entries", "classes")

    def __init__(self, entries, classes):
        self.entries = tuple(tuple(e for e in row) for row in entries)
        self.size = len(self.entries)
        self.classes = tuple(tuple(c) for c in classes)

    def charpoly(self) -> BiPoly:
        mat = PolyMatrix([[BiPoly((e,)) for e in row] for row in self.entries])
        return polymatrix_det(lam_identity_minus(mat))

    def __repr__(self):
        return f"QuotientMatrix(size={self.size})"


def quotient_matrix(g: Graph, partition) -> QuotientMatrix:
    """Quotient of the mixing matrix; raises EquitabilityError when invalid.

    Block row sums are checked symbolically as polynomials in `a`, which
    amounts to requiring constant neighbour counts into every class and
    constant degrees within each class.
    """
    classes = [tuple(c) for c in partition]
    seen = [v for c in classes for v in c]
    if sorted(seen) != list(range(g.n)):
        raise GraphParameterError("partition must cover every vertex exactly once")
    if any(not c for c in classes):
        raise GraphParameterError("partition classes must be nonempty")
    k = len(classes)
    entries = []
    for i in range(k):
        row = []
        for j in range(k):
            target = set(classes[j])
            sums = set()
            for v in classes[i]:
                count = len(g.neighbors(v) & target)
                # row sum of the mixing matrix over columns in class j
                value = AlphaPoly((count, g.degree(v) - count)) if (i == j) \
                    else AlphaPoly((count, -count))
                sums.add(value)
            if len(sums) != 1:
                raise EquitabilityError(
                    f"block ({i},{j}) has non-constant row sums", (i, j))
            row.append(sums.pop())
        entries.append(row)
    return QuotientMatrix(entries, classes)


def quotient_divides(g: Graph, partition) -> bool:
    """Exact divisibility of the full charpoly by the quotient charpoly."""
    q = quotient_matrix(g, partition)
    try:
        exact_divide(charpoly_direct(g), q.charpoly())
    except DivisibilityError:
        return False
    return True
