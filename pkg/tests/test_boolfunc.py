import random

import pytest

from revsynth.core.boolfunc import (
    Cube,
    Esop,
    TruthTable,
    all_cubes,
    anf_to_esop,
    anf_to_truth_table,
    anf_transform,
    cancel_duplicates,
    cube_minterm_mask,
    esop_to_truth_table,
    eval_cube,
    eval_esop,
    sop_to_esop,
)
from tests.conftest import all_truth_tables


def test_anf_xor_function():
    tt = TruthTable.from_string("0110")
    assert anf_transform(tt).coeffs == (0, 1, 1, 0)


def test_anf_zero_function():
    tt = TruthTable.from_string("0000")
    assert anf_transform(tt).coeffs == (0, 0, 0, 0)


def test_anf_three_var_example():
    # f = a xor a.b xor b.c with a on the top wire
    def f(s):
        a, b, c = (s >> 2) & 1, (s >> 1) & 1, s & 1
        return a ^ (a & b) ^ (b & c)

    tt = TruthTable(3, tuple(f(s) for s in range(8)))
    anf = anf_transform(tt)
    assert anf.monomials() == [3, 4, 6]  # bc, a, ab under the MSB-first index
    cubes = {str(c) for c in anf_to_esop(anf).cubes}
    assert cubes == {"1--", "11-", "-11"}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_anf_involution_exhaustive(n):
    for tt in all_truth_tables(n):
        anf = anf_transform(tt)
        assert anf_to_truth_table(anf) == tt


def test_anf_involution_random_wide():
    rng = random.Random(17)
    for n in (4, 5, 6):
        for _ in range(25):
            bits = tuple(rng.randrange(2) for _ in range(1 << n))
            tt = TruthTable(n, bits)
            assert anf_to_truth_table(anf_transform(tt)) == tt


@pytest.mark.parametrize("n", [1, 2, 3])
def test_anf_esop_evaluates_to_function(n):
    for tt in all_truth_tables(n):
        esop = anf_to_esop(anf_transform(tt))
        assert esop_to_truth_table(esop) == tt


def test_anf_to_esop_single_monomial():
    from revsynth.core.boolfunc import AnfVector

    anf = AnfVector(2, (0, 0, 0, 1))
    assert [str(c) for c in anf_to_esop(anf).cubes] == ["11"]
    assert anf_to_esop(AnfVector(2, (0, 0, 0, 0))).cubes == ()


def test_eval_cube():
    assert eval_cube(Cube("1-"), 2) == 1
    assert eval_cube(Cube("10"), 3) == 0
    assert eval_esop(Esop(2, (Cube("1-"), Cube("-1"), Cube("11"))), 3) == 1


def test_sop_to_esop_or():
    esop = sop_to_esop([Cube("1-"), Cube("-1")])
    assert [str(c) for c in esop.cubes] == ["1-", "-1", "11"]


def test_sop_to_esop_single_cube():
    assert [str(c) for c in sop_to_esop([Cube("1-")]).cubes] == ["1-"]


def test_sop_to_esop_three_cubes_all_products():
    esop = sop_to_esop([Cube("1--"), Cube("-1-"), Cube("--1")])
    got = sorted(str(c) for c in esop.cubes)
    assert got == sorted(["1--", "-1-", "--1", "11-", "1-1", "-11", "111"])
    assert len(esop.cubes) == 7  # 2^3 - 1, no cancellation pass


def test_sop_to_esop_matches_inclusive_or():
    rng = random.Random(99)
    for n in (2, 3, 4):
        for _ in range(20):
            cubes = [Cube("".join(rng.choice("-01") for _ in range(n)))
                     for _ in range(rng.randint(1, 4))]
            esop = sop_to_esop(cubes)
            for a in range(1 << n):
                want = max(eval_cube(c, a) for c in cubes)
                assert eval_esop(esop, a) == want


def test_cancel_duplicates():
    esop = Esop(2, (Cube("1-"), Cube("11"), Cube("1-")))
    assert [str(c) for c in cancel_duplicates(esop).cubes] == ["11"]


def test_all_cubes_order():
    names = [str(c) for c in all_cubes(2)]
    assert names == ["--", "-0", "-1", "0-", "00", "01", "1-", "10", "11"]


def test_cube_minterm_mask():
    assert cube_minterm_mask(Cube("1-")) == 0b1100
    assert cube_minterm_mask(Cube("--")) == 0b1111
    assert cube_minterm_mask(Cube("01")) == 0b0010


def test_truth_table_validation():
    with pytest.raises(ValueError):
        TruthTable(2, (0, 1, 0))
    with pytest.raises(ValueError):
        TruthTable(0, ())
    with pytest.raises(ValueError):
        TruthTable(1, (0, 2))
    with pytest.raises(ValueError):
        Cube("01x")
