import pytest
from core.errors import InvalidParamsError, UnknownIdentityError
from schemas.report import CheckRequest
from services.harness.checks import CONGRUENCES, run_congruence


def _counts(congruence_id, **params):
    return CONGRUENCES[congruence_id](CheckRequest(**params)).counts


def test_hooks_of_length_three_at_weight_three():
    # (3), (2,1) and (1,1,1) each carry one hook of length 3
    brute, convolution = _counts("congP", t=3)
    assert brute(3) == 3
    assert convolution(3) == 3


def test_self_conjugate_hooks_at_weight_four():
    # (2,2) is the only self-conjugate partition of 4 and has two hooks of length 2
    brute, convolution = _counts("sc-cong-even", t=2)
    assert brute(4) == 2
    assert convolution(4) == 2


def test_star_statistic_agrees_three_ways():
    counts = _counts("bt-star-cong", t=2)
    for n in range(0, 13):
        values = {count(n) for count in counts}
        assert len(values) == 1


@pytest.mark.parametrize("congruence_id,params", [
    ("congP", {"t": 1, "n_max": 10}),
    ("congP", {"t": 2, "n_max": 14}),
    ("congP-parts", {"t": 3, "n_max": 14}),
    ("sc-cong-even", {"t": 2, "n_max": 18}),
    ("sc-cong-even", {"t": 4, "n_max": 18}),
    ("sc-cong-odd", {"t": 3, "n_max": 18}),
    ("bt-star-cong", {"t": 2, "n_max": 16}),
    ("z-cong", {"z": 0, "t": 3, "n_max": 16}),
    ("z-cong", {"z": 1, "t": 4, "n_max": 16}),
    ("dd-cong", {"t": 3, "n_max": 16}),
])
def test_congruence_holds(congruence_id, params):
    report = run_congruence(congruence_id, params)
    assert report.passed, report.witness
    assert report.params["n_max"] == params["n_max"]


@pytest.mark.parametrize("z,t", [(1, 2), (2, 3), (3, 4)])
def test_last_shift_is_identically_zero(z, t):
    report = run_congruence("z-cong", {"z": z, "t": t, "n_max": 12})
    assert report.passed
    assert report.notes
    brute, _ = _counts("z-cong", z=z, t=t)
    assert all(brute(n) == 0 for n in range(13))


def test_default_bound_comes_from_settings():
    plan = CONGRUENCES["congP"](CheckRequest(t=2))
    assert plan.n_max == 60


@pytest.mark.parametrize("congruence_id,params", [
    ("congP", {}),
    ("sc-cong-even", {"t": 3}),
    ("sc-cong-odd", {"t": 4}),
    ("bt-star-cong", {"t": 5}),
    ("z-cong", {"z": 4, "t": 4}),
    ("congP", {"t": 11}),
])
def test_invalid_congruence_params(congruence_id, params):
    with pytest.raises(InvalidParamsError):
        run_congruence(congruence_id, params)


def test_unknown_congruence():
    with pytest.raises(UnknownIdentityError):
        run_congruence("cong-nothing", {"t": 2})
