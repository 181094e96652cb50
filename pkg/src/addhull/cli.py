"""Command line entry point.

Subcommands map one-to-one onto library operations: hull, dual and
mindist work on a code file, classify-dualities and count-so on the
duality level, construct runs one of the named builders, and search-d1
and table drive the one-rank searches.  Fixture names from the catalog
are accepted anywhere a duality or code file path is expected.

Every subcommand builds a single report whose machine part is a JSON
object (printed with --json) and whose human part is plain text derived
from the same numbers.  Exit codes: 0 on success, 1 on validation or
hypothesis failures, 2 on parse or budget failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

from .code import DEFAULT_CODEWORD_BUDGET, AdditiveCode
from .constructions import (
    acd_from_self_orthogonal,
    find_non_self_orthogonal_element,
    find_nonzero_self_orthogonal_element,
    onerank_from_acd_add_row,
    onerank_from_acd_extend,
    onerank_from_self_orthogonal,
    repetition_code,
    validate_skew_tridiagonal,
)
from .duality import (
    DEFAULT_ELEMENT_BUDGET,
    Duality,
    PrimePowerParams,
    decode_element,
    encode_element,
    enumerate_dualities,
)
from .errors import BudgetError, HypothesisError, ParameterError, ParseError
from .fileio import parse_code, parse_duality, serialize_code
from .fixtures import CATALOG, fixture
from .search import (
    DEFAULT_ITERATIONS,
    DEFAULT_SUBSPACE_BUDGET,
    NO_ONE_RANK_CODE,
    SearchSpec,
    d1_search,
    d1_theoretical,
    singleton_bound,
    table_report,
)

__all__ = ["main", "build_parser"]

CONSTRUCTIONS = [
    "repetition",
    "acd-from-self-orthogonal",
    "onerank-from-self-orthogonal",
    "validate-skew-tridiagonal",
    "onerank-add-row",
    "onerank-extend",
]


@dataclass(frozen=True)
class Report:
    """One command's output: a JSON payload and the text derived from it."""

    payload: dict
    human: str


# -- input plumbing ----------------------------------------------------------


def _read_bytes(ref: str) -> bytes | str:
    if ref in CATALOG:
        return CATALOG[ref].text
    try:
        return Path(ref).read_bytes()
    except OSError as exc:
        raise ParameterError(
            f"{ref!r} is neither a fixture name nor a readable file ({exc.strerror})"
        ) from exc


def _read_duality(ref: str) -> Duality:
    if ref in CATALOG and CATALOG[ref].kind != "duality":
        raise ParameterError(f"fixture {ref!r} is a {CATALOG[ref].kind}, not a duality")
    return parse_duality(_read_bytes(ref))


def _read_code(ref: str) -> AdditiveCode:
    if ref in CATALOG and CATALOG[ref].kind != "code":
        raise ParameterError(f"fixture {ref!r} is a {CATALOG[ref].kind}, not a code")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        code = parse_code(_read_bytes(ref))
    for item in caught:
        print(f"warning: {item.message}", file=sys.stderr)
    return code


def _budget(flag_value: int | None, env_name: str, default: int) -> int:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(env_name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"{env_name} must be an integer, got {raw!r}") from None


def _codeword_budget(args) -> int:
    return _budget(args.budget_codewords, "ADDHULL_BUDGET_CODEWORDS", DEFAULT_CODEWORD_BUDGET)


def _subspace_budget(args) -> int:
    return _budget(args.budget_subspaces, "ADDHULL_BUDGET_SUBSPACES", DEFAULT_SUBSPACE_BUDGET)


def _element_budget(args) -> int:
    return _budget(args.budget_elements, "ADDHULL_BUDGET_ELEMENTS", DEFAULT_ELEMENT_BUDGET)


def _params_echo(code: AdditiveCode, d: int | None = None) -> str:
    params = code.params
    inner = f"{code.n}, {params.p}^{code.k}" + ("" if d is None else f", {d}")
    return f"[{inner}] additive code over F_{params.q}"


def _encode_rows(rows, p: int) -> list[list[int]]:
    return [[encode_element(coord, p) for coord in row] for row in rows]


# -- subcommands -------------------------------------------------------------


def _cmd_hull(args) -> Report:
    duality = _read_duality(args.duality)
    code = _read_code(args.code)
    report = code.hull(duality)
    d = code.min_distance(_codeword_budget(args))
    p = code.params.p
    generators = _encode_rows(report.generators, p)
    lines = [
        _params_echo(code, d),
        f"hull rank {report.rank}, {report.classification}",
    ]
    lines.extend(
        "hull generator: " + " ".join(str(v) for v in row) for row in generators
    )
    payload = {
        "schema": 1,
        "command": "hull",
        "p": p,
        "e": code.params.e,
        "q": code.params.q,
        "n": code.n,
        "k": code.k,
        "d": d,
        "hull_rank": report.rank,
        "classification": report.classification,
        "hull_generators": generators,
    }
    return Report(payload, "\n".join(lines))


def _cmd_dual(args) -> Report:
    duality = _read_duality(args.duality)
    code = _read_code(args.code)
    dual = code.dual(duality)
    human = (
        f"{_params_echo(code)}; dual has rank {dual.k}\n" + serialize_code(dual)
    )
    payload = {
        "schema": 1,
        "command": "dual",
        "p": code.params.p,
        "e": code.params.e,
        "q": code.params.q,
        "n": code.n,
        "k": code.k,
        "dual_k": dual.k,
        "dual_rows": dual.to_encoded(),
    }
    return Report(payload, human)


def _cmd_mindist(args) -> Report:
    code = _read_code(args.code)
    d = code.min_distance(_codeword_budget(args))
    human = f"{_params_echo(code, d)}\nminimum distance {d}"
    payload = {
        "schema": 1,
        "command": "mindist",
        "p": code.params.p,
        "e": code.params.e,
        "q": code.params.q,
        "n": code.n,
        "k": code.k,
        "d": d,
    }
    return Report(payload, human)


def _cmd_classify_dualities(args) -> Report:
    params = PrimePowerParams(args.p, args.e)
    total = symmetric = skew = both = 0
    for duality in enumerate_dualities(params, budget=_element_budget(args)):
        cls = duality.classify()
        total += 1
        symmetric += cls.symmetric
        skew += cls.skew_symmetric
        both += cls.symmetric and cls.skew_symmetric
    neither = total - symmetric - skew + both
    human = f"total={total} symmetric={symmetric} skew={skew} neither={neither}"
    if both:
        human += f" both={both}"
    payload = {
        "schema": 1,
        "command": "classify-dualities",
        "p": params.p,
        "e": params.e,
        "total": total,
        "symmetric": symmetric,
        "skew": skew,
        "neither": neither,
        "both": both,
    }
    return Report(payload, human)


def _cmd_count_so(args) -> Report:
    duality = _read_duality(args.duality)
    brute = duality.count_self_orthogonal(_element_budget(args))
    closed = duality.count_self_orthogonal_closed_form()
    if brute != closed:
        raise RuntimeError(
            f"self-orthogonal counts disagree: brute={brute} closed-form={closed}"
        )
    human = f"brute={brute} closed-form={closed} agree"
    payload = {
        "schema": 1,
        "command": "count-so",
        "p": duality.params.p,
        "e": duality.params.e,
        "duality": [list(row) for row in duality.matrix.rows],
        "brute": brute,
        "closed_form": closed,
        "agree": True,
    }
    return Report(payload, human)


def _require_flag(value, flag: str, construction: str):
    if value is None:
        raise ParameterError(f"construction {construction!r} requires {flag}")
    return value


def _decoded_row(values: list[int], code: AdditiveCode):
    if len(values) != code.n:
        raise ParameterError(
            f"--row needs {code.n} coordinates for this code, got {len(values)}"
        )
    return tuple(decode_element(v, code.params) for v in values)


def _cmd_construct(args) -> Report:
    name = args.construction
    duality = _read_duality(args.duality)
    params = duality.params
    budget = _codeword_budget(args)
    validated = False

    if name == "repetition":
        n = _require_flag(args.n, "-n", name)
        out = repetition_code(duality, n)
    else:
        code = _read_code(_require_flag(args.code, "--code", name))
        if name == "acd-from-self-orthogonal":
            if args.x is not None:
                x = decode_element(args.x, params)
            else:
                x = find_non_self_orthogonal_element(duality)
                if x is None:
                    raise HypothesisError(
                        "every element is self-orthogonal; pass --x explicitly"
                    )
            out = acd_from_self_orthogonal(code, duality, x, budget=budget)
        elif name == "onerank-from-self-orthogonal":
            if args.x is not None:
                x = decode_element(args.x, params)
            else:
                x = find_non_self_orthogonal_element(duality)
                if x is None:
                    raise HypothesisError(
                        "every element is self-orthogonal; pass --x explicitly"
                    )
            if args.y is not None:
                y = decode_element(args.y, params)
            else:
                y = find_nonzero_self_orthogonal_element(duality)
                if y is None:
                    raise HypothesisError(
                        "no nonzero self-orthogonal element exists; pass --y explicitly"
                    )
            out = onerank_from_self_orthogonal(code, duality, x, y, budget=budget)
        elif name == "validate-skew-tridiagonal":
            validate_skew_tridiagonal(code, duality)
            out = code
            validated = True
        elif name == "onerank-add-row":
            row = _decoded_row(_require_flag(args.row, "--row", name), code)
            out = onerank_from_acd_add_row(code, duality, row)
        elif name == "onerank-extend":
            row = _decoded_row(_require_flag(args.row, "--row", name), code)
            alpha = decode_element(_require_flag(args.alpha, "--alpha", name), params)
            out = onerank_from_acd_extend(code, duality, row, alpha)
        else:  # pragma: no cover - argparse restricts choices
            raise ParameterError(f"unknown construction {name!r}")

    d = out.min_distance(budget)
    hull = out.hull(duality)
    lines = [_params_echo(out, d), f"hull rank {hull.rank}, {hull.classification}"]
    if validated:
        lines.append("tridiagonal pairing pattern valid")
    lines.append(serialize_code(out).rstrip("\n"))
    payload = {
        "schema": 1,
        "command": "construct",
        "construction": name,
        "p": params.p,
        "e": params.e,
        "q": params.q,
        "n": out.n,
        "k": out.k,
        "d": d,
        "hull_rank": hull.rank,
        "classification": hull.classification,
        "rows": out.to_encoded(),
    }
    return Report(payload, "\n".join(lines))


def _theoretical_json(value):
    if value is NO_ONE_RANK_CODE:
        return "no-one-rank-code"
    return value


def _cmd_search_d1(args) -> Report:
    duality = _read_duality(args.duality)
    spec = SearchSpec(
        duality,
        args.n,
        args.k,
        mode=args.mode,
        iterations=args.iters,
        seed=args.seed,
        subspace_budget=_subspace_budget(args),
        codeword_budget=_codeword_budget(args),
    )
    result = d1_search(spec, threads=args.threads)
    params = duality.params
    bound = singleton_bound(args.n, args.k, params.e)
    head = f"d1[{args.n}, {args.k}] over F_{params.q}: {result.status}"
    if result.d is not None:
        head += f", d = {result.d}"
    lines = [head, f"singleton bound {bound}", f"enumerated {result.enumerated} candidates"]
    if result.witness is not None:
        lines.append("witness:")
        lines.append(serialize_code(result.witness).rstrip("\n"))
    payload = {
        "schema": 1,
        "command": "search-d1",
        "p": params.p,
        "e": params.e,
        "q": params.q,
        "duality": [list(row) for row in duality.matrix.rows],
        "n": args.n,
        "k": args.k,
        "mode": args.mode,
        "seed": args.seed,
        "iterations": args.iters,
        "status": result.status,
        "d": result.d,
        "witness": None if result.witness is None else result.witness.to_encoded(),
        "enumerated": result.enumerated,
        "singleton_bound": bound,
        "theoretical": _theoretical_json(d1_theoretical(duality, args.n, args.k)),
    }
    return Report(payload, "\n".join(lines))


def _cmd_table(args) -> Report:
    duality = _read_duality(args.duality)
    report = table_report(
        duality,
        args.n_max,
        args.k_max,
        subspace_budget=_subspace_budget(args),
        codeword_budget=_codeword_budget(args),
        iterations=args.iters,
        seed=args.seed,
        threads=args.threads,
    )
    payload = report.to_json_obj()
    payload["command"] = "table"
    return Report(payload, report.to_csv())


def _cmd_fixtures(args) -> Report:
    if args.name is not None:
        entry = fixture(args.name)
        payload = {
            "schema": 1,
            "command": "fixtures",
            "fixtures": [
                {
                    "name": entry.name,
                    "kind": entry.kind,
                    "description": entry.description,
                    "text": entry.text,
                }
            ],
        }
        return Report(payload, entry.text)
    rows = [
        {
            "name": entry.name,
            "kind": entry.kind,
            "description": entry.description,
            "text": entry.text,
        }
        for entry in CATALOG.values()
    ]
    width = max(len(r["name"]) for r in rows)
    human = "\n".join(
        f"{r['name']:<{width}}  {r['kind']:<7}  {r['description']}" for r in rows
    )
    payload = {"schema": 1, "command": "fixtures", "fixtures": rows}
    return Report(payload, human)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON payload")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized search")
    common.add_argument("--threads", type=int, default=1, help="parallel search workers")
    common.add_argument(
        "--budget-subspaces",
        type=int,
        default=None,
        metavar="N",
        help=f"exhaustive enumeration ceiling (default {DEFAULT_SUBSPACE_BUDGET}, "
        "env ADDHULL_BUDGET_SUBSPACES)",
    )
    common.add_argument(
        "--budget-codewords",
        type=int,
        default=None,
        metavar="N",
        help=f"distance scan ceiling (default {DEFAULT_CODEWORD_BUDGET}, "
        "env ADDHULL_BUDGET_CODEWORDS)",
    )
    common.add_argument(
        "--budget-elements",
        type=int,
        default=None,
        metavar="N",
        help=f"field element scan ceiling (default {DEFAULT_ELEMENT_BUDGET}, "
        "env ADDHULL_BUDGET_ELEMENTS)",
    )

    parser = argparse.ArgumentParser(
        prog="addhull",
        description="Additive codes over F_{p^e} under character-table dualities.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_hull = sub.add_parser(
        "hull", parents=[common], help="hull rank and classification of a code"
    )
    p_hull.add_argument("--duality", required=True, metavar="FILE", help="duality file or fixture")
    p_hull.add_argument("--code", required=True, metavar="FILE", help="code file or fixture")
    p_hull.set_defaults(handler=_cmd_hull)

    p_dual = sub.add_parser("dual", parents=[common], help="dual code under a duality")
    p_dual.add_argument("--duality", required=True, metavar="FILE")
    p_dual.add_argument("--code", required=True, metavar="FILE")
    p_dual.set_defaults(handler=_cmd_dual)

    p_mindist = sub.add_parser("mindist", parents=[common], help="exact minimum distance")
    p_mindist.add_argument("--code", required=True, metavar="FILE")
    p_mindist.set_defaults(handler=_cmd_mindist)

    p_classify = sub.add_parser(
        "classify-dualities",
        parents=[common],
        help="census of all dualities over F_{p^e}",
    )
    p_classify.add_argument("-p", type=int, required=True, help="field characteristic")
    p_classify.add_argument("-e", type=int, required=True, help="extension degree")
    p_classify.set_defaults(handler=_cmd_classify_dualities)

    p_count = sub.add_parser(
        "count-so",
        parents=[common],
        help="count self-orthogonal elements, brute force vs closed form",
    )
    p_count.add_argument("--duality", required=True, metavar="FILE")
    p_count.set_defaults(handler=_cmd_count_so)

    p_construct = sub.add_parser(
        "construct", parents=[common], help="run a named code construction"
    )
    p_construct.add_argument("construction", choices=CONSTRUCTIONS)
    p_construct.add_argument("--duality", required=True, metavar="FILE")
    p_construct.add_argument("--code", metavar="FILE", help="input code, where required")
    p_construct.add_argument("-n", type=int, help="length for the repetition construction")
    p_construct.add_argument(
        "--x", type=int, help="encoded element with chi_x(x) != 1 (default: first found)"
    )
    p_construct.add_argument(
        "--y",
        type=int,
        help="encoded nonzero self-orthogonal element (default: first found)",
    )
    p_construct.add_argument(
        "--row", type=int, nargs="+", metavar="V", help="encoded word to stack on the code"
    )
    p_construct.add_argument("--alpha", type=int, help="encoded nonzero constant coordinate")
    p_construct.set_defaults(handler=_cmd_construct)

    p_search = sub.add_parser(
        "search-d1", parents=[common], help="best one-rank hull distance at one (n, k)"
    )
    p_search.add_argument("--duality", required=True, metavar="FILE")
    p_search.add_argument("-n", type=int, required=True, help="code length")
    p_search.add_argument("-k", type=int, required=True, help="code rank over F_p")
    p_search.add_argument(
        "--mode", choices=["auto", "exhaustive", "random"], default="auto"
    )
    p_search.add_argument(
        "--iters", type=int, default=DEFAULT_ITERATIONS, help="randomized sample count"
    )
    p_search.set_defaults(handler=_cmd_search_d1)

    p_table = sub.add_parser(
        "table", parents=[common], help="grid of best one-rank distances (CSV or JSON)"
    )
    p_table.add_argument("--duality", required=True, metavar="FILE")
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--k-max", type=int, default=None)
    p_table.add_argument(
        "--iters", type=int, default=DEFAULT_ITERATIONS, help="randomized sample count"
    )
    p_table.set_defaults(handler=_cmd_table)

    p_fixtures = sub.add_parser(
        "fixtures", parents=[common], help="list built-in inputs or print one"
    )
    p_fixtures.add_argument("name", nargs="?", help="fixture to print as a file")
    p_fixtures.set_defaults(handler=_cmd_fixtures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except (ParseError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParameterError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        text = json.dumps(report.payload, sort_keys=True)
    else:
        text = report.human
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
