"""Text file formats for dualities and additive codes.

A duality file holds a header line ``p e`` followed by e rows of e
integers, the matrix over F_p.  A code file holds a header ``p e n k``
followed by k rows of n integers, each coordinate encoded as a single
integer in [0, p^e) with little-endian base-p digits.

Byte-level problems (bad token, wrong field count, out-of-range entry,
non-prime p) raise ParseError carrying the 1-based line number.  Inputs
that parse but fail validation (singular duality matrix, all-zero
generator rows) raise ParameterError from the underlying constructors.
A code file whose rows are dependent is accepted: the dependent rows are
dropped with a DependentRowsWarning and the rank shrinks accordingly.
"""

from __future__ import annotations

import warnings

from .code import AdditiveCode
from .duality import Duality, PrimePowerParams, decode_element
from .errors import ParameterError, ParseError

__all__ = [
    "DependentRowsWarning",
    "parse_duality",
    "parse_code",
    "serialize_duality",
    "serialize_code",
]


class DependentRowsWarning(UserWarning):
    """A code file declared more rows than its rank; extras were dropped."""


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not decodable as UTF-8 ({exc.reason})", line=1) from exc
    return data


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Nonblank lines paired with their 1-based line numbers."""
    return [
        (lineno, raw)
        for lineno, raw in enumerate(text.splitlines(), start=1)
        if raw.strip()
    ]


def _parse_ints(line: str, lineno: int, expected: int, what: str) -> list[int]:
    tokens = line.split()
    if len(tokens) != expected:
        raise ParseError(
            f"expected {expected} {what}, got {len(tokens)}", line=lineno
        )
    values = []
    for token in tokens:
        try:
            values.append(int(token, 10))
        except ValueError:
            raise ParseError(f"{token!r} is not an integer", line=lineno) from None
    return values


def _parse_params(p: int, e: int, lineno: int) -> PrimePowerParams:
    try:
        return PrimePowerParams(p, e)
    except ParameterError as exc:
        raise ParseError(str(exc), line=lineno) from exc


def _check_body_length(
    lines: list[tuple[int, str]], expected_rows: int, what: str
) -> list[tuple[int, str]]:
    body = lines[1:]
    if len(body) < expected_rows:
        missing_at = lines[-1][0] + 1
        raise ParseError(
            f"expected {expected_rows} {what}, found {len(body)}", line=missing_at
        )
    if len(body) > expected_rows:
        raise ParseError(
            f"unexpected content after {expected_rows} {what}",
            line=body[expected_rows][0],
        )
    return body


def parse_duality(data: str | bytes) -> Duality:
    """Read a duality file; singular matrices are rejected naming their rank."""
    lines = _content_lines(_as_text(data))
    if not lines:
        raise ParseError("empty file, expected header 'p e'", line=1)
    header_lineno, header = lines[0]
    p, e = _parse_ints(header, header_lineno, 2, "header fields 'p e'")
    params = _parse_params(p, e, header_lineno)
    rows = []
    for lineno, line in _check_body_length(lines, e, "matrix rows"):
        row = _parse_ints(line, lineno, e, "matrix entries")
        for value in row:
            if not 0 <= value < p:
                raise ParseError(f"entry {value} out of range [0, {p})", line=lineno)
        rows.append(row)
    return Duality(params, rows)


def parse_code(data: str | bytes) -> AdditiveCode:
    """Read a code file, normalizing away dependent rows with a warning."""
    lines = _content_lines(_as_text(data))
    if not lines:
        raise ParseError("empty file, expected header 'p e n k'", line=1)
    header_lineno, header = lines[0]
    p, e, n, k = _parse_ints(header, header_lineno, 4, "header fields 'p e n k'")
    params = _parse_params(p, e, header_lineno)
    if n < 1:
        raise ParseError(f"length n={n} must be at least 1", line=header_lineno)
    if not 1 <= k <= e * n:
        raise ParseError(
            f"declared rank k={k} out of range [1, {e * n}]", line=header_lineno
        )
    q = params.q
    rows = []
    for lineno, line in _check_body_length(lines, k, "generator rows"):
        row = _parse_ints(line, lineno, n, "coordinates")
        for value in row:
            if not 0 <= value < q:
                raise ParseError(f"entry {value} out of range [0, {q})", line=lineno)
        rows.append([decode_element(value, params) for value in row])
    code, dropped = AdditiveCode.normalize(params, rows)
    if dropped:
        warnings.warn(
            f"declared k={k} but rows have rank {code.k}; "
            f"dropped dependent rows {[i + 1 for i in dropped]}",
            DependentRowsWarning,
            stacklevel=2,
        )
    return code


def serialize_duality(duality: Duality) -> str:
    """Canonical text of a duality; parse_duality inverts it exactly."""
    params = duality.params
    lines = [f"{params.p} {params.e}"]
    lines.extend(" ".join(str(v) for v in row) for row in duality.matrix.rows)
    return "\n".join(lines) + "\n"


def serialize_code(code: AdditiveCode) -> str:
    """Canonical text of a code; parse_code inverts it exactly."""
    params = code.params
    lines = [f"{params.p} {params.e} {code.n} {code.k}"]
    lines.extend(" ".join(str(v) for v in row) for row in code.to_encoded())
    return "\n".join(lines) + "\n"
