import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addhull.duality import (
    Duality,
    PrimePowerParams,
    decode_element,
    elements,
    encode_element,
    enumerate_dualities,
)
from addhull.errors import BudgetError, EvenCharacteristicError, ParameterError
from addhull.fplinalg import FpMatrix

F4 = PrimePowerParams(2, 2)
F9 = PrimePowerParams(3, 2)
F25 = PrimePowerParams(5, 2)
F27 = PrimePowerParams(3, 3)

M1 = Duality(F9, [[1, 0], [0, 2]])
M2 = Duality(F9, [[0, 1], [2, 0]])
M3 = Duality(F9, [[0, 1], [2, 1]])
N1 = Duality(F4, [[1, 1], [0, 1]])
N2 = Duality(F4, [[1, 0], [1, 1]])


def dualities(params):
    e, p = params.e, params.p
    from addhull.fplinalg import rank

    return (
        st.lists(
            st.lists(st.integers(min_value=0, max_value=p - 1), min_size=e, max_size=e),
            min_size=e,
            max_size=e,
        )
        .map(lambda rows: FpMatrix(rows, p))
        .filter(lambda m: rank(m) == e)
        .map(lambda m: Duality(params, m))
    )


def gf_elements(params):
    return st.tuples(*([st.integers(min_value=0, max_value=params.p - 1)] * params.e))


def test_params_validation():
    with pytest.raises(ParameterError):
        PrimePowerParams(4, 2)
    with pytest.raises(ParameterError):
        PrimePowerParams(3, 0)
    with pytest.raises(ParameterError):
        PrimePowerParams(3, 17)
    assert PrimePowerParams(3, 2).q == 9


def test_element_codec_known_values():
    assert decode_element(0, F4) == (0, 0)
    assert decode_element(2, F4) == (0, 1)
    assert decode_element(3, F4) == (1, 1)
    assert decode_element(3, F9) == (0, 1)
    assert decode_element(4, F9) == (1, 1)
    assert decode_element(6, F9) == (0, 2)
    assert encode_element((0, 2), 3) == 6
    with pytest.raises(ParameterError):
        decode_element(9, F9)


@pytest.mark.parametrize("params", [F4, F9, F27])
def test_element_codec_roundtrip(params):
    seen = set()
    for v in range(params.q):
        coords = decode_element(v, params)
        assert encode_element(coords, params.p) == v
        seen.add(coords)
    assert seen == set(elements(params))


def test_duality_rejects_singular():
    with pytest.raises(ParameterError, match="rank 1"):
        Duality(F9, [[1, 2], [2, 4]])


def test_chi_log_fixture_values():
    # over F_4 with N1: the character of w takes the value 1 at 1
    assert N1.chi_log((0, 1), (1, 0)) == 0
    assert N1.chi_log((1, 0), (1, 0)) == 1
    assert N1.chi_log((1, 1), (0, 1)) == 0
    assert N1.chi_log((1, 1), (1, 1)) == 1
    assert M2.chi_log((1, 0), (0, 1)) == 1
    assert M2.chi_log((0, 1), (1, 0)) == 2


def test_transpose_fixture_pair():
    assert N1.transpose() == N2
    assert N2.transpose() == N1
    assert M1.transpose() == M1


def test_classify_fixtures():
    assert M1.classify().tag == "symmetric"
    assert M2.classify().tag == "skew-symmetric"
    assert M3.classify().tag == "neither"
    assert N1.classify().tag == "neither"
    assert N2.classify().tag == "neither"
    both = Duality(F4, [[0, 1], [1, 0]]).classify()
    assert both.symmetric and both.skew_symmetric
    assert both.tag == "symmetric"


def test_census_f9():
    tags = [d.classify().tag for d in enumerate_dualities(F9)]
    assert len(tags) == 48
    assert tags.count("symmetric") == 18
    assert tags.count("skew-symmetric") == 2
    assert tags.count("neither") == 28


def test_census_f4():
    duals = list(enumerate_dualities(F4))
    assert len(duals) == 6
    assert sum(d.classify().symmetric for d in duals) == 4
    non_symmetric = {d for d in duals if not d.classify().symmetric}
    assert non_symmetric == {N1, N2}


def test_census_f25_total():
    assert sum(1 for _ in enumerate_dualities(F25)) == 480


def test_enumerate_budget():
    with pytest.raises(BudgetError) as exc:
        list(enumerate_dualities(F27, budget=100))
    assert exc.value.required == 3**9


def test_enumerate_restartable():
    full = list(enumerate_dualities(F9))

    def raw_index(d):
        flat = [x for row in d.matrix.rows for x in row]
        value = 0
        for x in flat:
            value = value * 3 + x
        return value

    for start in [0, 1, 17, 40, 80]:
        suffix = list(enumerate_dualities(F9, start=start))
        assert suffix == [d for d in full if raw_index(d) >= start]


def test_self_orthogonal_elements_gf27():
    d = Duality(F27, [[1, 2, 0], [0, 1, 2], [1, 0, 1]])
    got = d.self_orthogonal_elements()
    expected = {
        (0, 0, 0),
        (2, 1, 0),
        (0, 2, 1),
        (2, 1, 2),
        (2, 0, 2),
        (1, 2, 0),
        (0, 1, 2),
        (1, 2, 1),
        (1, 0, 1),
    }
    assert set(got) == expected
    assert got == sorted(got)
    assert d.count_self_orthogonal() == 9
    assert d.count_self_orthogonal_closed_form() == 9


def test_self_orthogonal_rank2_case_gf27():
    d = Duality(F27, [[2, 1, 1], [0, 1, 1], [1, 0, 1]])
    assert d.symmetrized() == FpMatrix([[2, 2, 1], [2, 1, 2], [1, 2, 1]], 3)
    assert set(d.self_orthogonal_elements()) == {(0, 0, 0), (0, 1, 1), (0, 2, 2)}
    assert d.count_self_orthogonal_closed_form() == 3


def test_closed_form_skew_counts_everything():
    assert M2.count_self_orthogonal_closed_form() == 9
    assert M2.count_self_orthogonal() == 9


def test_closed_form_matches_brute_force_f9():
    for d in enumerate_dualities(F9):
        assert d.count_self_orthogonal_closed_form() == d.count_self_orthogonal()


def test_closed_form_rejects_p2():
    with pytest.raises(EvenCharacteristicError):
        N1.count_self_orthogonal_closed_form()


def test_chi_one_set_size():
    for d in [M1, M2, M3]:
        for u in elements(F9):
            vs = d.chi_one_set(u)
            if any(u):
                assert len(vs) == 3
            else:
                assert len(vs) == 9
            assert all(d.chi_log(u, v) == 0 for v in vs)


def test_discriminant_existence_criterion():
    # over F_{p^2} a nonzero self-orthogonal element exists exactly when the
    # discriminant of the self-pairing form is a square (0 allowed)
    for params in [F9, F25]:
        for d in enumerate_dualities(params):
            brute = any(
                any(x) and d.quadratic_form(x) == 0 for x in elements(params)
            )
            assert d.has_nonzero_self_orthogonal() == brute


def test_no_self_orthogonal_value_distribution():
    # dualities admitting only the trivial self-orthogonal element hit every
    # nonzero exponent equally often, p+1 times
    for params in [F9, F25]:
        p = params.p
        checked = 0
        for d in enumerate_dualities(params):
            if d.has_nonzero_self_orthogonal():
                continue
            checked += 1
            counts = [0] * p
            for u in elements(params):
                counts[d.quadratic_form(u)] += 1
            assert counts[0] == 1
            assert all(c == p + 1 for c in counts[1:])
        assert checked > 0


def test_self_pairing_lookup_matches_attained_values():
    for params, limit in [(F9, None), (F25, 60)]:
        p = params.p
        for d in itertools.islice(enumerate_dualities(params), limit):
            attained = {d.quadratic_form(u) for u in elements(params)}
            for s in range(p):
                found = d.element_with_self_pairing(s)
                if s in attained:
                    assert found is not None and d.quadratic_form(found) == s
                else:
                    assert found is None


def test_attained_self_pairings_closed_under_negation_without_so():
    # when no nonzero element is self-orthogonal, an attained exponent s
    # forces -s to be attained as well
    for params in [F9, F25]:
        p = params.p
        for d in enumerate_dualities(params):
            if d.has_nonzero_self_orthogonal():
                continue
            for s in range(1, p):
                if d.element_with_self_pairing(s) is not None:
                    assert d.element_with_self_pairing(-s) is not None


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_chi_log_bilinear(data):
    params = data.draw(st.sampled_from([F4, F9, F27]))
    d = data.draw(dualities(params))
    u = data.draw(gf_elements(params))
    u2 = data.draw(gf_elements(params))
    v = data.draw(gf_elements(params))
    p = params.p
    usum = tuple((a + b) % p for a, b in zip(u, u2))
    assert d.chi_log(usum, v) == (d.chi_log(u, v) + d.chi_log(u2, v)) % p
    assert d.chi_log(v, usum) == (d.chi_log(v, u) + d.chi_log(v, u2)) % p
    # transposing the matrix swaps the two slots
    assert d.transpose().chi_log(u, v) == d.chi_log(v, u)


@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_closed_form_matches_brute_random_gf27(data):
    d = data.draw(dualities(F27))
    assert d.count_self_orthogonal_closed_form() == d.count_self_orthogonal()


def test_element_scan_budget():
    with pytest.raises(BudgetError) as exc:
        M1.self_orthogonal_elements(budget=4)
    assert exc.value.required == 9
