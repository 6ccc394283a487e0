import pytest
from hypothesis import given
from core.errors import ClassSpecError
from models.boundary_word import encode_word
from models.partition import EMPTY, Partition
from schemas.class_spec import ALL, SELF_CONJUGATE, ClassKind, ClassSpec, bg_t, bg_zt, z_asymmetric
from services.classes import (
    albion_structure_check,
    albion_structure_report,
    class_count,
    contains,
    enumerate_class,
    enumerate_pz_cores,
    in_bg_1t_diagonal,
    in_bg_t,
    in_bg_zt,
    in_bg_zt_via_quotient,
    is_self_conjugate,
    is_z_asymmetric,
    is_z_asymmetric_word,
)
from services.enumeration import enumerate_partitions
from services.littlewood import decompose, is_t_core
from services.qseries import pochhammer_inf
from tests.strategies import partitions


@pytest.mark.parametrize("text, expected", [
    ("all", "all"),
    ("SC", "sc"),
    ("pz:-1", "pz:-1"),
    ("bgt:5", "bgt:5"),
    ("bgzt:1,5", "bgzt:1,5"),
])
def test_parse_class_spec(text, expected):
    assert str(ClassSpec.parse(text)) == expected


@pytest.mark.parametrize("text", ["weird", "pz", "bgt:1", "bgzt:5,5", "bgzt:1", "sc:2", "pz:a"])
def test_parse_class_spec_rejects(text):
    with pytest.raises(ClassSpecError):
        ClassSpec.parse(text)


def test_class_spec_fields():
    spec = ClassSpec.parse("bgzt:1,5")
    assert spec.kind == ClassKind.BGZT
    assert (spec.z, spec.t) == (1, 5)
    assert bg_zt(1, 5) == spec


def test_self_conjugate():
    assert is_self_conjugate(Partition([2, 2]))
    assert is_self_conjugate(EMPTY)
    assert not is_self_conjugate(Partition([3, 1]))


def test_z_asymmetric():
    assert is_z_asymmetric(Partition([6, 4, 4, 1, 1]), 1)
    assert is_z_asymmetric(Partition([5, 3, 3, 3, 1, 1]), -1)
    assert is_z_asymmetric(Partition([2]), 1)
    assert is_z_asymmetric(EMPTY, 3)
    assert not is_z_asymmetric(Partition([2, 2]), 1)


@given(partitions())
def test_z_asymmetric_word_agrees(p):
    for z in range(-3, 4):
        assert is_z_asymmetric_word(encode_word(p), z) == is_z_asymmetric(p, z)
        assert is_z_asymmetric(p, z) == is_z_asymmetric(p.conjugate(), -z)


def test_bg_t():
    assert not in_bg_t(Partition([2, 1]), 3)
    assert in_bg_t(Partition([2, 1]), 2)
    with pytest.raises(ClassSpecError):
        in_bg_t(EMPTY, 1)


def test_bg_zt_worked_example(worked_partition):
    assert not in_bg_zt(worked_partition, 1, 3)
    assert not in_bg_zt(worked_partition, 1, 4)
    assert in_bg_zt(worked_partition, 1, 5)


def test_bg_zt_rejects_bad_params():
    with pytest.raises(ClassSpecError):
        in_bg_zt(EMPTY, 3, 3)
    with pytest.raises(ClassSpecError):
        in_bg_zt(EMPTY, 0, 1)


def test_bg_last_shift_is_empty_only():
    for t in range(2, 6):
        for n in range(0, 13):
            expected = [EMPTY] if n == 0 else []
            assert list(enumerate_class(bg_zt(t - 1, t), n)) == expected


def test_quotient_characterization():
    for t in range(2, 6):
        for z in range(t):
            for n in range(15):
                for p in enumerate_class(z_asymmetric(z), n):
                    assert in_bg_zt(p, z, t) == in_bg_zt_via_quotient(p, z, t)


def test_diagonal_characterization():
    for t in range(2, 7):
        for n in range(17):
            for p in enumerate_class(z_asymmetric(1), n):
                assert in_bg_zt(p, 1, t) == in_bg_1t_diagonal(p, t)


def test_albion_structure():
    for t in range(2, 6):
        for z in range(t):
            for n in range(13):
                for p in enumerate_class(z_asymmetric(z), n):
                    assert albion_structure_check(p, z, t), (p, z, t)


@pytest.mark.slow
def test_quotient_and_albion_through_weight_30():
    for z in range(7):
        members = [p for n in range(31) for p in enumerate_class(z_asymmetric(z), n)]
        for t in range(max(2, z + 1), 8):
            for p in members:
                assert in_bg_zt(p, z, t) == in_bg_zt_via_quotient(p, z, t), (p, z, t)
                assert albion_structure_check(p, z, t), (p, z, t)


def test_albion_report_shape(worked_partition):
    report = albion_structure_report(worked_partition, 1, 5)
    assert report.passed
    assert report.entries[0].relation == "core"
    assert [e.index for e in report.entries[1:]] == [0, 1, 2, 3, 4]
    assert report.entries[1].relation == "mu"
    with pytest.raises(ClassSpecError):
        albion_structure_report(Partition([3, 1]), 0, 3)


def test_bg_members_have_even_hook_multiplicities():
    for t in range(2, 6):
        for z in range(t):
            for n in range(20):
                for p in enumerate_class(bg_zt(z, t), n):
                    assert p.hooks(t).all_even()
                    core = decompose(p, t).core
                    assert is_z_asymmetric(core, z)


@pytest.mark.parametrize("spec, n, expected", [
    (SELF_CONJUGATE, 4, [Partition([2, 2])]),
    (z_asymmetric(1), 2, [Partition([2])]),
    (ALL, 3, [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]),
])
def test_enumerate_class(spec, n, expected):
    assert list(enumerate_class(spec, n)) == expected


def test_direct_enumeration_matches_filter():
    specs = [SELF_CONJUGATE, z_asymmetric(2), z_asymmetric(-1), bg_t(3), bg_t(4), bg_zt(1, 5), bg_zt(0, 4)]
    for spec in specs:
        for n in range(16):
            assert list(enumerate_class(spec, n)) == list(enumerate_class(spec, n, method="filter"))


def test_enumerate_class_rejects():
    with pytest.raises(ClassSpecError):
        list(enumerate_class(ALL, 3, method="guess"))
    with pytest.raises(ClassSpecError):
        list(enumerate_class(ALL, -1))


def test_pz_counts_match_product():
    for z in (-2, 0, 1, 3):
        series = pochhammer_inf(-1, 1 + abs(z), 2, 30)
        assert [class_count(z_asymmetric(z), n) for n in range(31)] == list(series.coeffs)


def test_pz_cores():
    cores = enumerate_pz_cores(1, 3, 12)
    assert all(is_t_core(c, 3) and is_z_asymmetric(c, 1) for c in cores)
    expected = [p for n in range(13) for p in enumerate_partitions(n) if is_t_core(p, 3) and is_z_asymmetric(p, 1)]
    assert sorted(cores) == sorted(expected)


def test_contains():
    assert contains(ClassSpec.parse("pz:1"), Partition([6, 4, 4, 1, 1]))
    assert contains(ClassSpec.parse("sc"), Partition([2, 2]))
    assert contains(ALL, Partition([7]))
