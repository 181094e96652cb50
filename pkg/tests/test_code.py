import itertools
import random

import pytest

from addhull.code import AdditiveCode
from addhull.duality import Duality, PrimePowerParams, elements
from addhull.errors import BudgetError, ParameterError
from addhull.fplinalg import FpMatrix, rank

F4 = PrimePowerParams(2, 2)
F9 = PrimePowerParams(3, 2)

M1 = Duality(F9, [[1, 0], [0, 2]])
M2 = Duality(F9, [[0, 1], [2, 0]])
N1 = Duality(F4, [[1, 1], [0, 1]])

EX21 = AdditiveCode.from_encoded(F4, [[1, 2, 1, 3, 2], [2, 3, 2, 1, 3]])
SELF_ORTHOGONAL_534 = AdditiveCode.from_encoded(F9, [[1, 1, 1, 1, 3], [3, 3, 6, 6, 1], [2, 3, 1, 3, 0]])
TRIDIAGONAL = AdditiveCode.from_encoded(F9, [[1, 1, 1, 1], [3, 6, 5, 0], [3, 7, 6, 3]])
ACD_432 = AdditiveCode.from_encoded(F9, [[1, 1, 0, 0], [3, 3, 3, 3]])


def random_duality(rng, params):
    e, p = params.e, params.p
    while True:
        m = FpMatrix([[rng.randrange(p) for _ in range(e)] for _ in range(e)], p)
        if rank(m) == e:
            return Duality(params, m)


def random_code(rng, params, n, k_target):
    p, e = params.p, params.e
    while True:
        rows = [
            [[rng.randrange(p) for _ in range(e)] for _ in range(n)]
            for _ in range(k_target)
        ]
        try:
            code, _ = AdditiveCode.normalize(params, rows)
        except ParameterError:
            continue
        return code


def flatten(word):
    return tuple(x for coord in word for x in coord)


def brute_hull_set(code, duality):
    """Hull as a set of flat vectors, by scanning the whole ambient space."""
    p, e, n = code.params.p, code.params.e, code.n
    members = {flatten(w) for w in code.iter_codewords()}
    hull = set()
    for cand in itertools.product(range(p), repeat=e * n):
        if cand not in members:
            continue
        word = tuple(tuple(cand[t * e : (t + 1) * e]) for t in range(n))
        if all(
            sum(duality.chi_log(word[t], g[t]) for t in range(n)) % p == 0
            for g in code.rows
        ):
            hull.add(cand)
    return hull


def test_constructor_validation():
    with pytest.raises(ParameterError):
        AdditiveCode(F4, [])
    with pytest.raises(ParameterError, match="dependent"):
        AdditiveCode.from_encoded(F4, [[1, 0], [1, 0]])
    with pytest.raises(ParameterError, match="dependent"):
        AdditiveCode.from_encoded(F4, [[0, 0]])
    with pytest.raises(ParameterError):
        AdditiveCode(F4, [[(1, 0), (1,)]])
    with pytest.raises(ParameterError):
        AdditiveCode(F4, [[(1, 0)], [(1, 0), (0, 1)]])


def test_encoded_roundtrip():
    assert EX21.to_encoded() == [[1, 2, 1, 3, 2], [2, 3, 2, 1, 3]]
    assert EX21.n == 5 and EX21.k == 2
    assert EX21.rows[0][1] == (0, 1)


def test_normalize_keeps_independent_prefix():
    code, dropped = AdditiveCode.normalize(
        F4, AdditiveCode.from_encoded(F4, [[1, 2, 1, 3, 2], [2, 3, 2, 1, 3]]).rows
    )
    assert code.k == 2 and dropped == ()

    code, dropped = AdditiveCode.normalize(
        F4, [[(1, 0), (0, 0)], [(0, 1), (0, 0)], [(1, 1), (0, 0)]]
    )
    assert code.k == 2
    assert dropped == (2,)
    assert code.rows[0] == ((1, 0), (0, 0))

    code, dropped = AdditiveCode.normalize(F4, [[(1, 0)], [(1, 0)]])
    assert code.k == 1 and dropped == (1,)

    with pytest.raises(ParameterError, match="zero code"):
        AdditiveCode.normalize(F4, [[(0, 0), (0, 0)]])


def test_log_gram_tridiagonal_example():
    assert TRIDIAGONAL.log_gram(M2) == FpMatrix([[0, 1, 0], [2, 0, 2], [0, 1, 0]], 3)


def test_log_gram_mismatched_params():
    with pytest.raises(ParameterError):
        EX21.log_gram(M1)


def test_self_orthogonal_code_gram_and_hull():
    assert SELF_ORTHOGONAL_534.log_gram(M1) == FpMatrix.zeros(3, 3, 3)
    assert SELF_ORTHOGONAL_534.hull_rank(M1) == 3
    report = SELF_ORTHOGONAL_534.hull(M1)
    assert report.classification == "self-orthogonal"
    assert report.is_self_orthogonal and not report.is_self_dual
    assert SELF_ORTHOGONAL_534.min_distance() == 4


def test_single_self_orthogonal_row_gram():
    u = (1, 1)
    assert M1.quadratic_form(u) == 0
    code = AdditiveCode(F9, [[u, u, u]])
    assert code.log_gram(M1) == FpMatrix([[0]], 3)
    assert code.hull(M1).classification == "one-rank"
    assert code.min_distance() == 3


def test_hull_tridiagonal_one_rank():
    report = TRIDIAGONAL.hull(M2)
    assert report.rank == 1
    assert TRIDIAGONAL.hull_rank(M2) == 1
    assert report.classification == "one-rank"
    expected = AdditiveCode.from_encoded(F9, [[5, 6, 8, 5]]).rows[0]
    assert report.generators == (expected,)
    hull_code = TRIDIAGONAL.hull_code(M2)
    assert hull_code is not None and hull_code.k == 1


def test_repetition_acd_under_every_duality():
    from addhull.duality import enumerate_dualities

    code = AdditiveCode.from_encoded(F9, [[1, 1], [3, 3]])
    for d in enumerate_dualities(F9):
        report = code.hull(d)
        assert report.rank == 0
        assert report.classification == "acd"
        assert report.generators == ()
        assert code.hull_code(d) is None
    assert code.min_distance() == 2


def test_acd_plus_row_is_one_rank():
    assert ACD_432.hull_rank(M2) == 0
    assert ACD_432.min_distance() == 2
    extended = AdditiveCode.from_encoded(F9, [[3, 3, 1, 1]] + ACD_432.to_encoded())
    report = extended.hull(M2)
    assert report.rank == 1
    assert extended.min_distance() == 2


def test_example_2_1_min_distance():
    assert EX21.min_distance() == 5


def test_min_distance_generic_matches_packed():
    rng = random.Random(7)
    for _ in range(25):
        code = random_code(rng, F4, rng.randrange(2, 6), rng.randrange(1, 5))
        assert code._min_distance_packed() == code._min_distance_generic()


def test_min_distance_matches_brute_force():
    rng = random.Random(11)
    for params in [F4, F9]:
        for _ in range(20):
            code = random_code(rng, params, rng.randrange(1, 5), rng.randrange(1, 5))
            brute = min(
                sum(1 for coord in w if any(coord))
                for w in code.iter_codewords()
                if any(any(coord) for coord in w)
            )
            assert code.min_distance() == brute


def test_min_distance_budget():
    with pytest.raises(BudgetError) as exc:
        EX21.min_distance(budget=3)
    assert exc.value.required == 4


def test_iter_codewords_counts():
    words = list(EX21.iter_codewords())
    assert len(words) == 4
    assert len(set(words)) == 4
    assert all(EX21.contains(w) for w in words)
    assert not EX21.contains(((1, 0),) + ((0, 0),) * 4)


def test_hull_matches_brute_force_intersection():
    rng = random.Random(2024)
    cases = [(F4, 5), (F9, 4)]
    for params, n_max in cases:
        for _ in range(60):
            n = rng.randrange(1, n_max + 1)
            k = rng.randrange(1, params.e * n + 1)
            code = random_code(rng, params, n, k)
            duality = random_duality(rng, params)
            report = code.hull(duality)
            brute = brute_hull_set(code, duality)
            assert len(brute) == params.p**report.rank
            span = set()
            for coeffs in itertools.product(range(params.p), repeat=report.rank):
                w = [0] * (params.e * code.n)
                for c, gen in zip(coeffs, report.generators):
                    flat = flatten(gen)
                    if c:
                        w = [(a + c * b) % params.p for a, b in zip(w, flat)]
                span.add(tuple(w))
            assert span == brute
            # classification tag is a pure function of the ranks
            expected_tag = {
                0: "acd",
                1: "one-rank",
            }.get(report.rank)
            if expected_tag is None:
                if report.rank == code.k:
                    expected_tag = (
                        "self-dual"
                        if code.k == params.e * code.n - code.k
                        else "self-orthogonal"
                    )
                else:
                    expected_tag = "higher-rank"
            assert report.classification == expected_tag


def test_dual_rank_and_membership():
    rng = random.Random(5)
    for params, n_max in [(F4, 5), (F9, 4)]:
        p, e = params.p, params.e
        for _ in range(30):
            n = rng.randrange(1, n_max + 1)
            k = rng.randrange(1, e * n)  # leave room for a nonzero dual
            code = random_code(rng, params, n, k)
            if code.k == e * n:
                continue
            duality = random_duality(rng, params)
            dual = code.dual(duality)
            assert dual.k == e * n - code.k
            for u in dual.rows:
                for g in code.rows:
                    assert (
                        sum(duality.chi_log(u[t], g[t]) for t in range(n)) % p == 0
                    )


def test_dual_brute_force_small():
    rng = random.Random(6)
    for _ in range(15):
        code = random_code(rng, F4, 2, rng.randrange(1, 4))
        duality = random_duality(rng, F4)
        dual = code.dual(duality)
        dual_set = {flatten(w) for w in dual.iter_codewords()}
        expected = set()
        for cand in itertools.product(range(2), repeat=4):
            word = (cand[0:2], cand[2:4])
            if all(
                sum(duality.chi_log(word[t], g[t]) for t in range(2)) % 2 == 0
                for g in code.rows
            ):
                expected.add(cand)
        assert dual_set == expected


def test_dual_round_trips():
    rng = random.Random(8)
    for params in [F4, F9]:
        for _ in range(20):
            n = rng.randrange(1, 4)
            code = random_code(rng, params, n, rng.randrange(1, params.e * n + 1))
            if code.k == params.e * n:
                continue
            m = random_duality(rng, params)
            assert code.dual(m).dual(m.transpose()).same_code_as(code)
    # symmetric and skew-symmetric dualities are their own inverse here
    for m in [M1, M2]:
        for _ in range(10):
            code = random_code(rng, F9, 3, rng.randrange(1, 6))
            assert code.dual(m).dual(m).same_code_as(code)


def test_dual_of_full_space_rejected():
    full = AdditiveCode.from_encoded(F4, [[1], [2]])
    with pytest.raises(ParameterError, match="zero code"):
        full.dual(N1)


def test_one_rank_transfers_to_dual():
    assert TRIDIAGONAL.hull_rank(M2) == 1
    dual = TRIDIAGONAL.dual(M2)
    assert dual.hull_rank(M2.transpose()) == 1
    dual_t = TRIDIAGONAL.dual(M2.transpose())
    assert dual_t.hull_rank(M2) == 1


def test_hull_rank_invariant_under_transpose():
    rng = random.Random(9)
    for params in [F4, F9]:
        for _ in range(25):
            n = rng.randrange(1, 4)
            code = random_code(rng, params, n, rng.randrange(1, params.e * n + 1))
            m = random_duality(rng, params)
            assert code.hull_rank(m) == code.hull_rank(m.transpose())


def test_skew_gram_is_alternating():
    rng = random.Random(10)
    for _ in range(25):
        n = rng.randrange(1, 4)
        code = random_code(rng, F9, n, rng.randrange(1, 2 * n + 1))
        gram = code.log_gram(M2)
        for i in range(code.k):
            assert gram.rows[i][i] == 0
            for j in range(code.k):
                assert (gram.rows[i][j] + gram.rows[j][i]) % 3 == 0
        # alternating matrices have even rank, so hull parity is pinned
        assert (code.k - code.hull_rank(M2)) % 2 == 0


def test_direct_sum():
    one_rank = TRIDIAGONAL
    acd = ACD_432
    combined = one_rank.direct_sum(acd)
    assert combined.n == 8 and combined.k == 5
    assert combined.hull_rank(M2) == 1
    assert combined.min_distance() == 2

    both_acd = acd.direct_sum(acd)
    assert both_acd.hull_rank(M2) == 0

    so = SELF_ORTHOGONAL_534
    doubled = so.direct_sum(so)
    assert doubled.hull_rank(M1) == 6

    rng = random.Random(12)
    for _ in range(10):
        a = random_code(rng, F9, 2, rng.randrange(1, 4))
        b = random_code(rng, F9, 2, rng.randrange(1, 4))
        m = random_duality(rng, F9)
        assert a.direct_sum(b).hull_rank(m) == a.hull_rank(m) + b.hull_rank(m)
        assert a.direct_sum(b).min_distance() == min(a.min_distance(), b.min_distance())

    with pytest.raises(ParameterError):
        EX21.direct_sum(ACD_432)


def test_self_dual_tag_consistency():
    # scan every 2-dimensional subspace of F_2^4 as a length-2 code over F_4
    found_self_dual = False
    seen = set()
    for flat_rows in itertools.combinations(itertools.product(range(2), repeat=4), 2):
        m = FpMatrix(flat_rows, 2, ncols=4)
        if rank(m) != 2:
            continue
        key = frozenset(
            tuple((a * r1 + b * r2) % 2 for r1, r2 in zip(*flat_rows))
            for a in range(2)
            for b in range(2)
        )
        if key in seen:
            continue
        seen.add(key)
        code = AdditiveCode(
            F4, [[row[0:2], row[2:4]] for row in flat_rows]
        )
        report = code.hull(N1)
        is_self_dual = code.same_code_as(code.dual(N1))
        assert (report.classification == "self-dual") == is_self_dual
        found_self_dual = found_self_dual or is_self_dual
    assert len(seen) == 35
    assert found_self_dual


def test_same_code_as():
    a = AdditiveCode.from_encoded(F4, [[1, 0], [2, 0]])
    b = AdditiveCode.from_encoded(F4, [[3, 0], [2, 0]])
    assert a.same_code_as(b)
    assert not a.same_code_as(AdditiveCode.from_encoded(F4, [[1, 0], [0, 2]]))
