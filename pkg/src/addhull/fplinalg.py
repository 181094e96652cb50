"""Exact linear algebra over prime fields F_p.

Everything here works on immutable matrices of Python ints reduced mod p,
so results are exact for any prime.  No floating point anywhere.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import EvenCharacteristicError, ParameterError

__all__ = [
    "is_prime",
    "FpMatrix",
    "rref",
    "rank",
    "nullspace",
    "legendre",
    "diagonalize_symmetric",
]


def is_prime(n: int) -> bool:
    """Deterministic primality test, adequate for n < 2**32."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FpMatrix:
    """An immutable matrix over F_p.

    Entries are reduced mod p on construction.  Zero-row matrices are
    allowed (pass ``ncols`` explicitly since it cannot be inferred).
    """

    __slots__ = ("p", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], p: int, ncols: int | None = None):
        if not is_prime(p):
            raise ParameterError(f"modulus {p} is not prime")
        reduced = tuple(tuple(int(x) % p for x in row) for row in rows)
        if reduced:
            width = len(reduced[0])
            if any(len(row) != width for row in reduced):
                raise ParameterError("ragged rows in matrix")
            if ncols is not None and ncols != width:
                raise ParameterError(f"ncols={ncols} but rows have length {width}")
        else:
            if ncols is None:
                raise ParameterError("empty matrix needs an explicit ncols")
            width = ncols
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rows", reduced)
        object.__setattr__(self, "nrows", len(reduced))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("FpMatrix is immutable")

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], p)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int) -> "FpMatrix":
        return cls([[0] * ncols for _ in range(nrows)], p, ncols=ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.rows == other.rows
            and self.ncols == other.ncols
        )

    def __hash__(self) -> int:
        return hash((self.p, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"FpMatrix({list(map(list, self.rows))!r}, p={self.p})"

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "FpMatrix":
        return FpMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.p,
            ncols=self.nrows,
        )

    def mul(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise ParameterError("matrix product across different primes")
        if self.ncols != other.nrows:
            raise ParameterError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        p = self.p
        out = []
        bt = other.transpose().rows
        for row in self.rows:
            out.append([sum(a * b for a, b in zip(row, col)) % p for col in bt])
        return FpMatrix(out, p, ncols=other.ncols)

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector, returned as a tuple."""
        if len(v) != self.ncols:
            raise ParameterError("vector length does not match ncols")
        p = self.p
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.rows)

    def vec_mul(self, v: Sequence[int]) -> tuple[int, ...]:
        """Row vector times matrix, returned as a tuple."""
        if len(v) != self.nrows:
            raise ParameterError("vector length does not match nrows")
        p = self.p
        return tuple(
            sum(v[i] * self.rows[i][j] for i in range(self.nrows)) % p
            for j in range(self.ncols)
        )


def rref(m: FpMatrix) -> tuple[FpMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (R, rank, pivot_columns).  Pivots are chosen as the first row
    with a nonzero entry in the current column, scanning top down, so the
    result is the unique RREF of the row space.
    """
    p = m.p
    a = [list(row) for row in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if a[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return FpMatrix(a, p, ncols=ncols), r, tuple(pivots)


def rank(m: FpMatrix) -> int:
    return rref(m)[1]


def nullspace(m: FpMatrix) -> FpMatrix:
    """Basis of the right nullspace {v : m v^T = 0}, one basis vector per row.

    Basis vectors are ordered by their free column, ascending, and each has
    a 1 in its own free column; the result has ncols - rank rows.
    """
    r, rk, pivots = rref(m)
    p = m.p
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * m.ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-r.rows[i][f]) % p
        basis.append(v)
    return FpMatrix(basis, p, ncols=m.ncols)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion; p must be odd."""
    if not is_prime(p):
        raise ParameterError(f"modulus {p} is not prime")
    if p == 2:
        raise EvenCharacteristicError("Legendre symbol requires an odd prime")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def diagonalize_symmetric(s: FpMatrix) -> tuple[FpMatrix, tuple[int, ...]]:
    """Congruent diagonalization of a symmetric matrix over F_p, p odd.

    Returns (C, diag) with C invertible and C^T s C equal to the diagonal
    matrix with the given entries.  The number of nonzero diagonal entries
    equals rank(s), and the square class of their product is an invariant
    of s; the particular entries are not canonical.
    """
    p = s.p
    if p == 2:
        raise EvenCharacteristicError("congruent diagonalization requires odd p")
    n = s.nrows
    if s.ncols != n:
        raise ParameterError("matrix is not square")
    if s.transpose() != s:
        raise ParameterError("matrix is not symmetric")

    a = [list(row) for row in s.rows]
    c = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def add_multiple(dst: int, src: int, f: int) -> None:
        # congruence move: row_dst += f*row_src and col_dst += f*col_src
        for j in range(n):
            a[dst][j] = (a[dst][j] + f * a[src][j]) % p
        for i in range(n):
            a[i][dst] = (a[i][dst] + f * a[i][src]) % p
        for i in range(n):
            c[i][dst] = (c[i][dst] + f * c[i][src]) % p

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in c:
            row[i], row[j] = row[j], row[i]

    for i in range(n):
        if a[i][i] == 0:
            for j in range(i + 1, n):
                if a[j][j]:
                    swap(i, j)
                    break
            else:
                for j in range(i + 1, n):
                    if a[i][j]:
                        # a[i][i] and a[j][j] both vanish, so this adds 2*a[i][j]
                        add_multiple(i, j, 1)
                        break
        if a[i][i] == 0:
            continue
        inv = pow(a[i][i], p - 2, p)
        for j in range(i + 1, n):
            if a[i][j]:
                add_multiple(j, i, (-a[i][j] * inv) % p)

    diag = tuple(a[i][i] for i in range(n))
    return FpMatrix(c, p), diag
