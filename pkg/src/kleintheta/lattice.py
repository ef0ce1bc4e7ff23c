"""Exact integer lattice algebra.

Matrices are tuples of row tuples of Python ints, so every operation here is
exact. Vectors are plain tuples. Zero-sized matrices are legal everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("ragged matrix")
    return m


def shape(m: Matrix, cols: int | None = None) -> tuple[int, int]:
    # an empty tuple carries no column count; callers pass it when it matters
    if not m:
        return 0, cols or 0
    return len(m), len(m[0])


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> Matrix:
    return tuple((0,) * c for _ in range(r))


def transpose(m: Matrix, cols: int | None = None) -> Matrix:
    r, c = shape(m, cols)
    return tuple(tuple(m[i][j] for i in range(r)) for j in range(c))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m: Matrix, v) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def neg(m: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in m)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(k: int, m: Matrix) -> Matrix:
    return tuple(tuple(k * x for x in row) for row in m)


def block(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """Assemble [[a, b], [c, d]] from square g x g blocks."""
    top = tuple(ra + rb for ra, rb in zip(a, b))
    bottom = tuple(rc + rd for rc, rd in zip(c, d))
    return top + bottom


def standard_form(g: int) -> Matrix:
    """The cup form E = [[0, I], [-I, 0]] in the basis e_1..e_g, f_1..f_g."""
    return block(zeros(g, g), identity(g), neg(identity(g)), zeros(g, g))


def pairing(e: Matrix, x, y) -> int:
    return sum(xi * eij * yj for xi, row in zip(x, e) for eij, yj in zip(row, y))


def is_skew(m: Matrix) -> bool:
    return m == neg(transpose(m))


def det(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_primitive(v) -> bool:
    d = 0
    for x in v:
        d = gcd(d, x)
    return d == 1


def smith_normal_form(m: Matrix, cols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*M*V = D, U and V unimodular, D in Smith form.

    The diagonal of D is non-negative and each entry divides the next.
    """
    rows, ncols = shape(m, cols)
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    for t in range(min(rows, ncols)):
        while True:
            pivots = [(abs(a[i][j]), i, j) for i in range(t, rows)
                      for j in range(t, ncols) if a[i][j]]
            if not pivots:
                break
            _, pi, pj = min(pivots)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, ncols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if t < rows and t < ncols and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return as_matrix(u), as_matrix(a) if rows else (), as_matrix(v)


def invariant_factors(m: Matrix, cols: int | None = None) -> list[int]:
    _, d, _ = smith_normal_form(m, cols)
    r, c = shape(m, cols)
    return [d[i][i] for i in range(min(r, c))]


def rank(m: Matrix, cols: int | None = None) -> int:
    return sum(1 for x in invariant_factors(m, cols) if x)


def hermite_basis(vectors, dim: int) -> list[Vector]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Returned rows are echelon with positive pivots and entries above each
    pivot reduced into [0, pivot). The result is canonical for the lattice.
    """
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    col = 0
    while rows and col < dim:
        live = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                k = r[col] // p[col]
                r = [x - k * y for x, y in zip(r, p)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        p = live[0]
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(p)
        rows = [r for r in rest if any(r)]
        col += 1
    pivots = [next(j for j, x in enumerate(b) if x) for b in basis]
    for i, (b, pc) in enumerate(zip(basis, pivots)):
        for k in range(i):
            q = basis[k][pc] // b[pc]
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], b)]
    return [tuple(b) for b in basis]


@dataclass(frozen=True)
class FiniteQuotient:
    """Z^rank / span(generators) with canonical coset representatives.

    ``divisors`` lists the non-trivial invariant factors; a 0 marks a free
    summand, in which case the quotient is infinite and no representatives
    are listed.
    """

    rank: int
    divisors: tuple[int, ...]
    hermite: tuple[Vector, ...] = field(repr=False)

    @property
    def infinite_index(self) -> bool:
        return 0 in self.divisors

    @property
    def order(self) -> int | None:
        if self.infinite_index:
            return None
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def reduce(self, x) -> Vector:
        """Canonical representative of the coset of x."""
        if self.infinite_index:
            raise ValueError("infinite-index sublattice has no finite reduction")
        x = list(x)
        for i, b in enumerate(self.hermite):
            q = x[i] // b[i]
            if q:
                x = [xi - q * bi for xi, bi in zip(x, b)]
        return tuple(x)

    def equivalent(self, x, y) -> bool:
        return self.reduce(x) == self.reduce(y)

    def representatives(self) -> list[Vector]:
        if self.infinite_index:
            return []
        boxes = [range(b[i]) for i, b in enumerate(self.hermite)]
        return [tuple(p) for p in product(*boxes)]


def quotient_group(generators, rank: int) -> FiniteQuotient:
    gens = [tuple(int(x) for x in v) for v in generators]
    for v in gens:
        if len(v) != rank:
            raise ValueError(f"generator {v} does not live in Z^{rank}")
    herm = hermite_basis(gens, rank)
    facs = invariant_factors(transpose(as_matrix(gens), rank), len(gens))
    facs = facs + [0] * (rank - len(facs))
    divisors = sorted((d for d in facs if d != 1), key=lambda d: (d == 0, d))
    if len(herm) < rank:
        herm_t: tuple[Vector, ...] = ()
    else:
        herm_t = tuple(herm)
    return FiniteQuotient(rank, tuple(divisors), herm_t)


def kernel_basis(m: Matrix, cols: int) -> list[Vector]:
    """Hermite-normalized basis of the saturated integer kernel of m."""
    _, d, v = smith_normal_form(m, cols)
    r = rank(m, cols)
    vt = transpose(v, cols)
    return hermite_basis(vt[r:], cols)


def eigenlattice(t: Matrix, sign: int) -> list[Vector]:
    """Basis of {x : T x = sign * x}, saturated, in Hermite normal form."""
    n = len(t)
    if n == 0:
        return []
    m = tuple(tuple(t[i][j] - sign * (i == j) for j in range(n)) for i in range(n))
    return kernel_basis(m, n)


def solve_integer(columns, target) -> Vector | None:
    """Integer coefficients c with sum c_k * columns[k] = target, or None."""
    cols = [tuple(c) for c in columns]
    dim = len(target)
    if not cols:
        return () if not any(target) else None
    m = transpose(as_matrix(cols), dim)
    u, d, v = smith_normal_form(m, len(cols))
    ub = matvec(u, target)
    y = [0] * len(cols)
    for i, bi in enumerate(ub):
        di = d[i][i] if i < len(cols) else 0
        if di == 0:
            if bi:
                return None
        elif bi % di:
            return None
        else:
            y[i] = bi // di
    return matvec(v, y)


def coordinates(basis, x) -> Vector:
    """Coordinates of x in a lattice basis; ValueError if x is outside."""
    c = solve_integer(basis, x)
    if c is None:
        raise ValueError(f"{tuple(x)} is not in the span of the basis")
    return c


def is_involution(t: Matrix) -> bool:
    return matmul(t, t) == identity(len(t))


def is_anti_symplectic(t: Matrix, e: Matrix) -> bool:
    return matmul(matmul(transpose(t), e), t) == neg(e)
