"""Additive codes over F_{p^e} and their hulls under a chosen duality.

An additive code of length n is an F_p-linear subgroup of (F_{p^e})^n; it
is presented by a generator matrix whose k rows are independent over F_p,
so the code has p^k elements.  Codewords are grids: tuples of n coordinate
tuples, each of length e.  Internally most work happens on the flattened
F_p vectors of length e*n, where coordinate t occupies positions
[t*e, (t+1)*e).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .duality import Duality, GFElement, PrimePowerParams, decode_element, encode_element
from .errors import BudgetError, ParameterError
from .fplinalg import FpMatrix, nullspace, rank

__all__ = [
    "DEFAULT_CODEWORD_BUDGET",
    "CodeWord",
    "AdditiveCode",
    "HullReport",
]

DEFAULT_CODEWORD_BUDGET = 1 << 24

CodeWord = tuple[GFElement, ...]

_BLOCK_WEIGHT_TABLES: dict[tuple[int, int], bytearray] = {}


def _block_weight_table(e: int, n: int) -> bytearray:
    """For p=2: table mapping an e*n-bit word to its count of nonzero e-bit blocks."""
    key = (e, n)
    table = _BLOCK_WEIGHT_TABLES.get(key)
    if table is None:
        mask = (1 << e) - 1
        table = bytearray(1 << (e * n))
        for v in range(1, len(table)):
            table[v] = table[v >> e] + (1 if v & mask else 0)
        _BLOCK_WEIGHT_TABLES[key] = table
    return table


def _gray_steps(k: int, p: int) -> Iterator[tuple[int, int]]:
    """Reflected base-p Gray code: (digit, +-1) steps visiting all p**k tuples."""
    a = [0] * k
    f = list(range(k + 1))
    o = [1] * k
    while True:
        j = f[0]
        f[0] = 0
        if j == k:
            return
        d = o[j]
        a[j] += d
        if a[j] == 0 or a[j] == p - 1:
            o[j] = -o[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1
        yield j, d


@dataclass(frozen=True)
class HullReport:
    """Hull of a code under a duality: its rank, a basis, and a tag.

    The tag follows usage for one-sided intersections: rank 0 codes are
    complementary-dual ("acd"), rank 1 codes are "one-rank" (even when
    k = 1), full-rank hulls are "self-orthogonal" ("self-dual" when the
    dual has the same rank), anything else is "higher-rank".
    """

    rank: int
    code_rank: int
    dual_rank: int
    generators: tuple[CodeWord, ...]

    @property
    def classification(self) -> str:
        r, k = self.rank, self.code_rank
        if r == 0:
            return "acd"
        if r == 1:
            return "one-rank"
        if r < k:
            return "higher-rank"
        return "self-dual" if k == self.dual_rank else "self-orthogonal"

    @property
    def is_self_orthogonal(self) -> bool:
        return self.rank == self.code_rank

    @property
    def is_self_dual(self) -> bool:
        return self.is_self_orthogonal and self.code_rank == self.dual_rank


class AdditiveCode:
    """An additive code given by a generator matrix with F_p-independent rows."""

    def __init__(self, params: PrimePowerParams, rows: Iterable[Iterable[Iterable[int]]]):
        p, e = params.p, params.e
        grid = tuple(
            tuple(tuple(int(x) % p for x in coord) for coord in row) for row in rows
        )
        if not grid:
            raise ParameterError("zero code has no generator matrix")
        n = len(grid[0])
        if n == 0:
            raise ParameterError("code length must be at least 1")
        for row in grid:
            if len(row) != n:
                raise ParameterError("generator rows have inconsistent length")
            for coord in row:
                if len(coord) != e:
                    raise ParameterError(f"coordinates must have {e} components")
        self.params = params
        self.n = n
        self.k = len(grid)
        self.rows = grid
        self._flat = tuple(
            tuple(x for coord in row for x in coord) for row in grid
        )
        if rank(FpMatrix(self._flat, p, ncols=e * n)) != self.k:
            raise ParameterError(
                "generator rows are dependent over the prime field; use normalize"
            )

    @classmethod
    def from_encoded(cls, params: PrimePowerParams, rows: Iterable[Iterable[int]]) -> "AdditiveCode":
        """Build from rows of integer-encoded coordinates."""
        return cls(
            params,
            [[decode_element(v, params) for v in row] for row in rows],
        )

    def to_encoded(self) -> list[list[int]]:
        return [[encode_element(coord, self.params.p) for coord in row] for row in self.rows]

    @classmethod
    def normalize(
        cls, params: PrimePowerParams, rows: Iterable[Iterable[Iterable[int]]]
    ) -> tuple["AdditiveCode", tuple[int, ...]]:
        """Keep a maximal independent subset of the given rows, in order.

        Returns the code together with the indices of dropped rows.  Rejects
        input whose rows are all zero.
        """
        p, e = params.p, params.e
        grid = tuple(
            tuple(tuple(int(x) % p for x in coord) for coord in row) for row in rows
        )
        kept: list[tuple[tuple[int, ...], ...]] = []
        kept_flat: list[tuple[int, ...]] = []
        dropped = []
        r = 0
        for idx, row in enumerate(grid):
            flat = tuple(x for coord in row for x in coord)
            candidate = kept_flat + [flat]
            if rank(FpMatrix(candidate, p, ncols=len(flat))) > r:
                kept.append(row)
                kept_flat.append(flat)
                r += 1
            else:
                dropped.append(idx)
        if not kept:
            raise ParameterError("zero code has no generator matrix")
        return cls(params, kept), tuple(dropped)

    # -- basic structure -------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdditiveCode)
            and self.params == other.params
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.params, self.rows))

    def __repr__(self) -> str:
        return f"AdditiveCode(n={self.n}, k={self.k}, q={self.params.q})"

    def flat_matrix(self) -> FpMatrix:
        return FpMatrix(self._flat, self.params.p, ncols=self.params.e * self.n)

    def same_code_as(self, other: "AdditiveCode") -> bool:
        """Whether both generator matrices span the same subgroup."""
        if self.params != other.params or self.n != other.n or self.k != other.k:
            return False
        stacked = FpMatrix(
            self._flat + other._flat, self.params.p, ncols=self.params.e * self.n
        )
        return rank(stacked) == self.k

    def contains(self, word: CodeWord) -> bool:
        flat = tuple(x for coord in word for x in coord)
        if len(flat) != self.params.e * self.n:
            raise ParameterError("word length does not match the code")
        stacked = FpMatrix(
            self._flat + (flat,), self.params.p, ncols=self.params.e * self.n
        )
        return rank(stacked) == self.k

    def iter_codewords(self) -> Iterator[CodeWord]:
        """All p**k codewords; order follows coefficient tuples lexicographically."""
        p, e, n = self.params.p, self.params.e, self.n
        for coeffs in itertools.product(range(p), repeat=self.k):
            flat = [0] * (e * n)
            for c, row in zip(coeffs, self._flat):
                if c:
                    for t, x in enumerate(row):
                        flat[t] = (flat[t] + c * x) % p
            yield tuple(
                tuple(flat[t * e : (t + 1) * e]) for t in range(n)
            )

    def direct_sum(self, other: "AdditiveCode") -> "AdditiveCode":
        if self.params != other.params:
            raise ParameterError("direct sum needs matching field parameters")
        e = self.params.e
        zero = (0,) * e
        rows = [row + (zero,) * other.n for row in self.rows]
        rows += [(zero,) * self.n + row for row in other.rows]
        return AdditiveCode(self.params, rows)

    # -- duality-dependent structure --------------------------------------

    def _check_duality(self, duality: Duality) -> None:
        if duality.params != self.params:
            raise ParameterError("duality and code live over different fields")

    def log_gram(self, duality: Duality) -> FpMatrix:
        """k x k matrix of pairing exponents between generator rows."""
        self._check_duality(duality)
        p = self.params.p
        k = self.k
        out = []
        for i in range(k):
            gi = self.rows[i]
            out.append(
                [
                    sum(duality.chi_log(gi[t], gj[t]) for t in range(self.n)) % p
                    for gj in self.rows
                ]
            )
        return FpMatrix(out, p, ncols=k)

    def hull_rank(self, duality: Duality) -> int:
        return self.k - rank(self.log_gram(duality))

    def hull(self, duality: Duality) -> HullReport:
        """Rank and basis of the intersection of the code with its dual.

        A row c of coefficients spans a hull element exactly when c L = 0
        for the log-Gram matrix L, so the basis comes from the nullspace of
        L transposed, mapped through the generator matrix.
        """
        self._check_duality(duality)
        gram = self.log_gram(duality)
        coeffs = nullspace(gram.transpose())
        p, e, n = self.params.p, self.params.e, self.n
        gens = []
        for c in coeffs.rows:
            flat = [0] * (e * n)
            for ci, row in zip(c, self._flat):
                if ci:
                    for t, x in enumerate(row):
                        flat[t] = (flat[t] + ci * x) % p
            gens.append(tuple(tuple(flat[t * e : (t + 1) * e]) for t in range(n)))
        return HullReport(
            rank=coeffs.nrows,
            code_rank=self.k,
            dual_rank=e * n - self.k,
            generators=tuple(gens),
        )

    def hull_code(self, duality: Duality) -> "AdditiveCode | None":
        """The hull as a code, or None when it is trivial."""
        report = self.hull(duality)
        if report.rank == 0:
            return None
        return AdditiveCode(self.params, report.generators)

    def dual(self, duality: Duality) -> "AdditiveCode":
        """The dual code: all words whose characters are trivial on this code."""
        self._check_duality(duality)
        e, n = self.params.e, self.n
        if self.k == e * n:
            raise ParameterError(
                "dual of the full space is the zero code, which has no generator matrix"
            )
        d = duality.matrix
        constraint_rows = []
        for flat in self._flat:
            row: list[int] = []
            for t in range(n):
                row.extend(d.mul_vec(flat[t * e : (t + 1) * e]))
            constraint_rows.append(row)
        basis = nullspace(FpMatrix(constraint_rows, self.params.p, ncols=e * n))
        rows = [
            tuple(tuple(v[t * e : (t + 1) * e]) for t in range(n)) for v in basis.rows
        ]
        return AdditiveCode(self.params, rows)

    # -- metrics -----------------------------------------------------------

    def min_distance(self, budget: int = DEFAULT_CODEWORD_BUDGET) -> int:
        """Minimum Hamming weight over the p**k - 1 nonzero codewords, exactly."""
        p, e, n, k = self.params.p, self.params.e, self.n, self.k
        total = p**k
        if total > budget:
            raise BudgetError(
                f"distance scan needs {total} codewords, budget is {budget}",
                required=total,
            )
        if p == 2 and e * n <= 20:
            return self._min_distance_packed()
        return self._min_distance_generic()

    def _min_distance_generic(self) -> int:
        p, e, n, k = self.params.p, self.params.e, self.n, self.k
        best = n
        flat_rows = self._flat
        cw = [0] * (e * n)
        blocknz = [0] * n
        weight = 0
        for j, d in _gray_steps(k, p):
            row = flat_rows[j]
            for t, x in enumerate(row):
                if x:
                    old = cw[t]
                    new = (old + d * x) % p
                    cw[t] = new
                    block = t // e
                    if old == 0:
                        blocknz[block] += 1
                        if blocknz[block] == 1:
                            weight += 1
                    elif new == 0:
                        blocknz[block] -= 1
                        if blocknz[block] == 0:
                            weight -= 1
            if weight < best:
                best = weight
                if best == 1:
                    break
        return best

    def _min_distance_packed(self) -> int:
        e, n, k = self.params.e, self.n, self.k
        table = _block_weight_table(e, n)
        rows = [sum(x << t for t, x in enumerate(flat)) for flat in self._flat]
        cw = 0
        best = n
        for i in range(1, 1 << k):
            cw ^= rows[(i & -i).bit_length() - 1]
            w = table[cw]
            if w < best:
                best = w
                if best == 1:
                    break
        return best
