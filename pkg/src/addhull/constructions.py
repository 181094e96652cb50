"""Checked builders that grow ACD and one-rank hull codes.

Each builder validates its hypotheses, assembles the generator matrix, and
by default re-verifies the concluded hull property (and distance growth
where claimed) on the built code.  Verification is cheap at the scales
these constructions target; pass verify=False for bulk use.
"""

from __future__ import annotations

from typing import Sequence

from .code import DEFAULT_CODEWORD_BUDGET, AdditiveCode, HullReport
from .duality import Duality, GFElement, elements
from .errors import HypothesisError
from .fplinalg import FpMatrix

__all__ = [
    "repetition_code",
    "acd_from_self_orthogonal",
    "onerank_from_self_orthogonal",
    "validate_skew_tridiagonal",
    "onerank_from_acd_add_row",
    "onerank_from_acd_extend",
    "find_non_self_orthogonal_element",
    "find_nonzero_self_orthogonal_element",
]


def find_non_self_orthogonal_element(duality: Duality) -> GFElement | None:
    """First element x (lexicographically) with chi_x(x) != 1, if any."""
    for a in elements(duality.params):
        if duality.quadratic_form(a) != 0:
            return a
    return None


def find_nonzero_self_orthogonal_element(duality: Duality) -> GFElement | None:
    """First nonzero x (lexicographically) with chi_x(x) = 1, if any."""
    for a in elements(duality.params):
        if any(a) and duality.quadratic_form(a) == 0:
            return a
    return None


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise HypothesisError(message)


def _check_conclusion(condition: bool, message: str) -> None:
    if not condition:
        raise RuntimeError(f"construction postcondition failed: {message}")


def _as_element(duality: Duality, x: Sequence[int]) -> GFElement:
    e, p = duality.params.e, duality.params.p
    coords = tuple(int(v) % p for v in x)
    if len(coords) != e:
        raise HypothesisError(f"element must have {e} coordinates")
    return coords


def _is_self_orthogonal(code: AdditiveCode, duality: Duality) -> bool:
    return code.log_gram(duality) == FpMatrix.zeros(code.k, code.k, code.params.p)


def repetition_code(duality: Duality, n: int, *, verify: bool = True) -> AdditiveCode:
    """The span of the e constant rows (x_i, ..., x_i) over the basis elements.

    Gives an [n, p^e, n] code: ACD when p does not divide n, self-orthogonal
    when it does.
    """
    _require(n >= 1, "length must be at least 1")
    params = duality.params
    e = params.e
    rows = []
    for i in range(e):
        basis = tuple(1 if j == i else 0 for j in range(e))
        rows.append((basis,) * n)
    code = AdditiveCode(params, rows)
    if verify:
        expected = e if n % params.p == 0 else 0
        _check_conclusion(
            code.hull_rank(duality) == expected, f"hull rank should be {expected}"
        )
        _check_conclusion(code.min_distance() == n, "distance should equal the length")
    return code


def acd_from_self_orthogonal(
    code: AdditiveCode,
    duality: Duality,
    x: Sequence[int],
    *,
    verify: bool = True,
    budget: int = DEFAULT_CODEWORD_BUDGET,
) -> AdditiveCode:
    """Pad a self-orthogonal code with a diagonal block of x to kill its hull.

    The new generator matrix is [x*I | G]; the result is an ACD code of
    length n + k whose distance strictly exceeds the input's.
    """
    x = _as_element(duality, x)
    _require(
        _is_self_orthogonal(code, duality),
        "input code is not self-orthogonal under this duality",
    )
    _require(duality.quadratic_form(x) != 0, "x must satisfy chi_x(x) != 1")
    params = code.params
    zero = (0,) * params.e
    k = code.k
    rows = []
    for i, g in enumerate(code.rows):
        pad = tuple(x if j == i else zero for j in range(k))
        rows.append(pad + g)
    out = AdditiveCode(params, rows)
    if verify:
        _check_conclusion(out.hull_rank(duality) == 0, "output should be ACD")
        _check_conclusion(
            out.min_distance(budget) > code.min_distance(budget),
            "distance should strictly grow",
        )
    return out


def onerank_from_self_orthogonal(
    code: AdditiveCode,
    duality: Duality,
    x: Sequence[int],
    y: Sequence[int],
    *,
    verify: bool = True,
    budget: int = DEFAULT_CODEWORD_BUDGET,
) -> AdditiveCode:
    """Pad a self-orthogonal code with diag(x, ..., x, y) to leave hull rank 1.

    x must pair nontrivially with itself, y must be a nonzero self-orthogonal
    element; the last row then spans the hull of the [n+k, p^k] output.
    """
    x = _as_element(duality, x)
    y = _as_element(duality, y)
    _require(
        _is_self_orthogonal(code, duality),
        "input code is not self-orthogonal under this duality",
    )
    _require(duality.quadratic_form(x) != 0, "x must satisfy chi_x(x) != 1")
    _require(any(y), "y must be nonzero")
    _require(duality.quadratic_form(y) == 0, "y must satisfy chi_y(y) = 1")
    params = code.params
    zero = (0,) * params.e
    k = code.k
    rows = []
    for i, g in enumerate(code.rows):
        diag = y if i == k - 1 else x
        pad = tuple(diag if j == i else zero for j in range(k))
        rows.append(pad + g)
    out = AdditiveCode(params, rows)
    if verify:
        report = out.hull(duality)
        _check_conclusion(report.rank == 1, "output should have hull rank 1")
        _check_conclusion(
            report.generators == (rows[-1],), "hull should be spanned by the last row"
        )
        _check_conclusion(
            out.min_distance(budget) > code.min_distance(budget),
            "distance should strictly grow",
        )
    return out


def validate_skew_tridiagonal(code: AdditiveCode, duality: Duality) -> HullReport:
    """Check the alternating tridiagonal pairing pattern and certify rank-1 hull.

    Under a skew-symmetric duality with an odd number of generators, pairing
    exponents that are nonzero exactly between consecutive rows force the
    log-Gram rank to k-1.  No rows are synthesized; the given code is only
    validated.
    """
    _require(
        duality.classify().skew_symmetric, "duality must be skew-symmetric"
    )
    _require(code.k % 2 == 1, f"number of generators must be odd, got {code.k}")
    gram = code.log_gram(duality)
    for i in range(code.k):
        for j in range(code.k):
            value = gram.rows[i][j]
            consecutive = abs(i - j) == 1
            if consecutive and value == 0:
                raise HypothesisError(
                    f"rows {i} and {j} are consecutive but pair trivially"
                )
            if not consecutive and value != 0:
                raise HypothesisError(
                    f"rows {i} and {j} are not consecutive but pair nontrivially"
                )
    report = code.hull(duality)
    _check_conclusion(report.rank == 1, "tridiagonal pattern should give hull rank 1")
    return report


def _as_row(code: AdditiveCode, x: Sequence[Sequence[int]]) -> tuple[GFElement, ...]:
    p, e = code.params.p, code.params.e
    row = tuple(tuple(int(v) % p for v in coord) for coord in x)
    if len(row) != code.n or any(len(coord) != e for coord in row):
        raise HypothesisError(
            f"row must have {code.n} coordinates of {e} components each"
        )
    return row


def onerank_from_acd_add_row(
    code: AdditiveCode,
    duality: Duality,
    x: Sequence[Sequence[int]],
    *,
    verify: bool = True,
) -> AdditiveCode:
    """Stack one outside word on top of an ACD code under a skew duality.

    The enlarged log-Gram matrix stays alternating of odd order, so its rank
    cannot grow past the old one and the hull becomes exactly one-rank.
    """
    _require(duality.classify().skew_symmetric, "duality must be skew-symmetric")
    _require(code.hull_rank(duality) == 0, "input code must be ACD")
    _require(code.k % 2 == 0, f"ACD input must have even rank, got {code.k}")
    row = _as_row(code, x)
    _require(not code.contains(row), "x must lie outside the code")
    out = AdditiveCode(code.params, (row,) + code.rows)
    if verify:
        _check_conclusion(out.hull_rank(duality) == 1, "output should have hull rank 1")
    return out


def onerank_from_acd_extend(
    code: AdditiveCode,
    duality: Duality,
    x: Sequence[Sequence[int]],
    alpha: Sequence[int],
    *,
    verify: bool = True,
) -> AdditiveCode:
    """Stack an outside word and prepend a constant column, growing the length.

    Takes an [n, p^2s, d] ACD code under a skew duality to an [n+1, p^(2s+1)]
    one-rank hull code whose rows all start with alpha.
    """
    _require(duality.classify().skew_symmetric, "duality must be skew-symmetric")
    _require(code.hull_rank(duality) == 0, "input code must be ACD")
    _require(code.k % 2 == 0, f"ACD input must have even rank, got {code.k}")
    alpha = _as_element(duality, alpha)
    _require(any(alpha), "alpha must be nonzero")
    row = _as_row(code, x)
    _require(not code.contains(row), "x must lie outside the code")
    rows = [(alpha,) + row] + [(alpha,) + g for g in code.rows]
    out = AdditiveCode(code.params, rows)
    if verify:
        _check_conclusion(out.hull_rank(duality) == 1, "output should have hull rank 1")
        _check_conclusion(out.n == code.n + 1, "length should grow by 1")
    return out
