"""Built-in dualities and codes, keyed by stable identifiers.

Each fixture stores the canonical text of its file format, so every
entry round-trips through parse and serialize byte-identically.  The
command line accepts any of these names wherever a duality or code file
path is expected, which keeps the worked examples reproducible without
shipping loose data files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import AdditiveCode
from .duality import Duality
from .errors import ParameterError
from .fileio import parse_code, parse_duality

__all__ = [
    "Fixture",
    "CATALOG",
    "fixture",
    "fixture_names",
    "load_duality",
    "load_code",
]


@dataclass(frozen=True)
class Fixture:
    """One named input: its kind, a short description, and its file text."""

    name: str
    kind: str  # "duality" or "code"
    description: str
    text: str


_ENTRIES = [
    Fixture(
        "f9.M1",
        "duality",
        "symmetric duality over F_9",
        "3 2\n1 0\n0 2\n",
    ),
    Fixture(
        "f9.M2",
        "duality",
        "skew-symmetric duality over F_9",
        "3 2\n0 1\n2 0\n",
    ),
    Fixture(
        "f9.M3",
        "duality",
        "duality over F_9 that is neither symmetric nor skew-symmetric",
        "3 2\n0 1\n2 1\n",
    ),
    Fixture(
        "f4.N1",
        "duality",
        "non-symmetric duality over F_4",
        "2 2\n1 1\n0 1\n",
    ),
    Fixture(
        "f4.N2",
        "duality",
        "non-symmetric duality over F_4, the transpose of f4.N1",
        "2 2\n1 0\n1 1\n",
    ),
    Fixture(
        "ex4_1.duality",
        "duality",
        "duality over F_27 with nine self-orthogonal elements",
        "3 3\n1 2 0\n0 1 2\n1 0 1\n",
    ),
    Fixture(
        "ex4_2.duality",
        "duality",
        "duality over F_27 with three self-orthogonal elements",
        "3 3\n2 1 1\n0 1 1\n1 0 1\n",
    ),
    Fixture(
        "ex2_1.code",
        "code",
        "[5, 2^2, 5] additive code over F_4 whose 4-rank is 1",
        "2 2 5 2\n1 2 1 3 2\n2 3 2 1 3\n",
    ),
    Fixture(
        "thm5_2.input",
        "code",
        "[5, 3^3, 4] code over F_9, self-orthogonal under f9.M1",
        "3 2 5 3\n1 1 1 1 3\n3 3 6 6 1\n2 3 1 3 0\n",
    ),
    Fixture(
        "thm5_4.code",
        "code",
        "[4, 3^3, 3] one-rank hull code under f9.M2 with tridiagonal pairing",
        "3 2 4 3\n1 1 1 1\n3 6 5 0\n3 7 6 3\n",
    ),
    Fixture(
        "thm5_5.input",
        "code",
        "[4, 3^2, 2] ACD code under f9.M2, the base for the row-adding builders",
        "3 2 4 2\n1 1 0 0\n3 3 3 3\n",
    ),
]

CATALOG: dict[str, Fixture] = {entry.name: entry for entry in _ENTRIES}


def fixture_names() -> list[str]:
    """All catalog names, dualities first, in declaration order."""
    return [entry.name for entry in _ENTRIES]


def fixture(name: str) -> Fixture:
    try:
        return CATALOG[name]
    except KeyError:
        raise ParameterError(f"unknown fixture {name!r}") from None


def load_duality(name: str) -> Duality:
    entry = fixture(name)
    if entry.kind != "duality":
        raise ParameterError(f"fixture {name!r} is a {entry.kind}, not a duality")
    return parse_duality(entry.text)


def load_code(name: str) -> AdditiveCode:
    entry = fixture(name)
    if entry.kind != "code":
        raise ParameterError(f"fixture {name!r} is a {entry.kind}, not a code")
    return parse_code(entry.text)
