"""Dualities of the additive group of a finite field F_{p^e}.

A duality is determined by a nonsingular e x e matrix D over F_p: writing
elements of F_{p^e} as coordinate vectors over a fixed basis, the character
attached to u sends v to xi^(u D v^T) for a fixed primitive p-th root of
unity xi.  All computation happens in the exponent group Z/p, so nothing
here ever touches complex numbers.

Elements are length-e tuples of ints mod p.  At I/O boundaries an element
is a single integer with little-endian base-p digits: digit j is the
coefficient of the j-th basis vector, so over F_4 the integer 2 is the
basis element w and 3 is 1+w.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BudgetError, EvenCharacteristicError, ParameterError
from .fplinalg import FpMatrix, diagonalize_symmetric, is_prime, legendre, rank, rref

__all__ = [
    "DEFAULT_ELEMENT_BUDGET",
    "PrimePowerParams",
    "GFElement",
    "encode_element",
    "decode_element",
    "elements",
    "DualityClass",
    "Duality",
    "enumerate_dualities",
]

DEFAULT_ELEMENT_BUDGET = 1 << 24

GFElement = tuple[int, ...]


@dataclass(frozen=True)
class PrimePowerParams:
    """The field parameters: p prime, extension degree e, so q = p**e."""

    p: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"p={self.p} is not prime")
        if self.p >= 1 << 16:
            raise ParameterError(f"p={self.p} too large (need p < 2**16)")
        if not 1 <= self.e <= 16:
            raise ParameterError(f"extension degree e={self.e} out of range [1, 16]")

    @property
    def q(self) -> int:
        return self.p**self.e


def encode_element(coords: Sequence[int], p: int) -> int:
    """Pack a coordinate tuple into an integer, little-endian base p."""
    value = 0
    for c in reversed(coords):
        value = value * p + (c % p)
    return value


def decode_element(value: int, params: PrimePowerParams) -> GFElement:
    """Inverse of encode_element; value must lie in [0, q)."""
    if not 0 <= value < params.q:
        raise ParameterError(f"encoded element {value} out of range [0, {params.q})")
    coords = []
    for _ in range(params.e):
        value, c = divmod(value, params.p)
        coords.append(c)
    return tuple(coords)


def elements(params: PrimePowerParams) -> Iterator[GFElement]:
    """All q coordinate tuples in lexicographic order."""
    return itertools.product(range(params.p), repeat=params.e)


@dataclass(frozen=True)
class DualityClass:
    """Which of the two defining conditions hold; both can hold at once."""

    symmetric: bool
    skew_symmetric: bool

    @property
    def tag(self) -> str:
        if self.symmetric:
            return "symmetric"
        if self.skew_symmetric:
            return "skew-symmetric"
        return "neither"


class Duality:
    """A duality of (F_{p^e}, +), given by its nonsingular matrix over F_p.

    chi_log(u, v) is the exponent of the root of unity that the character
    attached to u takes at v; u always indexes the character.
    """

    def __init__(self, params: PrimePowerParams, matrix: FpMatrix | Sequence[Sequence[int]]):
        if not isinstance(matrix, FpMatrix):
            matrix = FpMatrix(matrix, params.p)
        if matrix.p != params.p:
            raise ParameterError(f"matrix over F_{matrix.p} but params have p={params.p}")
        if matrix.nrows != params.e or matrix.ncols != params.e:
            raise ParameterError(
                f"duality matrix must be {params.e}x{params.e}, got {matrix.nrows}x{matrix.ncols}"
            )
        r = rank(matrix)
        if r < params.e:
            raise ParameterError(
                f"singular duality matrix: rank {r} < {params.e}, characters would collide"
            )
        self.params = params
        self.matrix = matrix
        self._classification: DualityClass | None = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Duality)
            and self.params == other.params
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.params, self.matrix))

    def __repr__(self) -> str:
        return f"Duality({self.params}, {list(map(list, self.matrix.rows))!r})"

    def chi_log(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Exponent of chi_u(v): u D v^T mod p."""
        e, p = self.params.e, self.params.p
        if len(u) != e or len(v) != e:
            raise ParameterError(f"elements must have {e} coordinates")
        rows = self.matrix.rows
        total = 0
        for i in range(e):
            ui = u[i]
            if ui:
                row = rows[i]
                total += ui * sum(row[j] * v[j] for j in range(e))
        return total % p

    def quadratic_form(self, a: Sequence[int]) -> int:
        """Self-pairing exponent chi_log(a, a)."""
        return self.chi_log(a, a)

    def transpose(self) -> "Duality":
        return Duality(self.params, self.matrix.transpose())

    def classify(self, budget: int = DEFAULT_ELEMENT_BUDGET) -> DualityClass:
        """Test the defining conditions; skew-symmetry by exhausting all q elements."""
        if self._classification is None:
            symmetric = self.matrix == self.matrix.transpose()
            self._check_element_budget(budget)
            skew = all(self.quadratic_form(a) == 0 for a in elements(self.params))
            self._classification = DualityClass(symmetric, skew)
        return self._classification

    def _check_element_budget(self, budget: int) -> None:
        q = self.params.q
        if q > budget:
            raise BudgetError(
                f"element scan needs {q} evaluations, budget is {budget}", required=q
            )

    def self_orthogonal_elements(self, budget: int = DEFAULT_ELEMENT_BUDGET) -> list[GFElement]:
        """All a with chi_a(a) = 1, in lexicographic coordinate order."""
        self._check_element_budget(budget)
        return [a for a in elements(self.params) if self.quadratic_form(a) == 0]

    def count_self_orthogonal(self, budget: int = DEFAULT_ELEMENT_BUDGET) -> int:
        """Brute-force count of self-orthogonal elements."""
        self._check_element_budget(budget)
        return sum(1 for a in elements(self.params) if self.quadratic_form(a) == 0)

    def symmetrized(self) -> FpMatrix:
        """(D + D^T)/2, the symmetric matrix with the same self-pairing form; p odd."""
        p = self.params.p
        if p == 2:
            raise EvenCharacteristicError("symmetrization requires odd characteristic")
        inv2 = pow(2, p - 2, p)
        d, dt = self.matrix.rows, self.matrix.transpose().rows
        return FpMatrix(
            [[(a + b) * inv2 % p for a, b in zip(r1, r2)] for r1, r2 in zip(d, dt)], p
        )

    def count_self_orthogonal_closed_form(self) -> int:
        """Count self-orthogonal elements without enumeration; p odd only.

        Diagonalizes the symmetrized matrix and counts zeros of the resulting
        diagonal quadratic form.
        """
        p, e = self.params.p, self.params.e
        if p == 2:
            raise EvenCharacteristicError(
                "no closed form in even characteristic, use the brute-force count"
            )
        sym = self.symmetrized()
        k = rank(sym)
        if k == 0:
            return p**e
        if k % 2 == 1:
            return p ** (e - 1)
        _, diag = diagonalize_symmetric(sym)
        delta = 1
        for d in diag:
            if d:
                delta = delta * d % p
        sign = legendre(pow(-1, k // 2, p) * delta, p)
        return p ** (e - k) * (p ** (k - 1) + (p - 1) * p ** ((k - 2) // 2) * sign)

    def chi_one_set(self, u: Sequence[int], budget: int = DEFAULT_ELEMENT_BUDGET) -> list[GFElement]:
        """All v with chi_u(v) = 1, in lexicographic coordinate order."""
        self._check_element_budget(budget)
        e = self.params.e
        if len(u) != e:
            raise ParameterError(f"elements must have {e} coordinates")
        return [v for v in elements(self.params) if self.chi_log(u, v) == 0]

    def element_with_self_pairing(self, s: int) -> GFElement | None:
        """First element in lexicographic order whose self-pairing exponent is s."""
        s %= self.params.p
        for a in elements(self.params):
            if self.quadratic_form(a) == s:
                return a
        return None

    def has_nonzero_self_orthogonal(self) -> bool:
        """Whether some a != 0 pairs trivially with itself.

        Uses the discriminant criterion over F_{p^2} with p odd; everywhere
        else falls back to the element scan.
        """
        p, e = self.params.p, self.params.e
        if e == 2 and p != 2:
            (a, b), (d, c) = self.matrix.rows
            disc = ((b + d) * (b + d) - 4 * a * c) % p
            return legendre(disc, p) >= 0
        for x in elements(self.params):
            if any(x) and self.quadratic_form(x) == 0:
                return True
        return False


def enumerate_dualities(
    params: PrimePowerParams,
    start: int = 0,
    budget: int = DEFAULT_ELEMENT_BUDGET,
) -> Iterator[Duality]:
    """All dualities over F_{p^e}, by lexicographic matrix entries.

    Candidate matrices are ordered by their row-major entry vector; singular
    ones are skipped.  ``start`` indexes into the full p**(e*e) candidate
    space, so disjoint index ranges can be scanned independently.
    """
    p, e = params.p, params.e
    total = p ** (e * e)
    if total > budget:
        raise BudgetError(
            f"duality enumeration needs {total} candidates, budget is {budget}",
            required=total,
        )
    if not 0 <= start <= total:
        raise ParameterError(f"start index {start} out of range [0, {total}]")

    # fast-forward: decompose start into the row-major odometer state
    digits = []
    v = start
    for _ in range(e * e):
        v, d = divmod(v, p)
        digits.append(d)
    state = list(reversed(digits))

    index = start
    while index < total:
        entries = state
        m = FpMatrix([entries[i * e : (i + 1) * e] for i in range(e)], p)
        if rank(m) == e:
            yield Duality(params, m)
        index += 1
        for pos in range(e * e - 1, -1, -1):
            state[pos] += 1
            if state[pos] < p:
                break
            state[pos] = 0
