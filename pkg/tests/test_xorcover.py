import pytest

from revsynth.esop.xorcover import (
    XorCoverInstance,
    exact_cover_via_xor_oracle,
    min_xor_cover,
    xor_cover_decide,
    xor_cover_verify,
)

FAMILY = (frozenset({1, 2}), frozenset({2, 3, 4, 5}), frozenset({3, 4}), frozenset({5}))
UNIVERSE = frozenset({1, 2, 3, 4, 5})


def test_verify_accepts_exact_cover():
    inst = XorCoverInstance(UNIVERSE, FAMILY, 3)
    assert xor_cover_verify(inst, [frozenset({1, 2}), frozenset({3, 4}), frozenset({5})])


def test_verify_rejects_even_coverage():
    inst = XorCoverInstance(UNIVERSE, FAMILY, 2)
    assert not xor_cover_verify(inst, [frozenset({1, 2}), frozenset({2, 3, 4, 5})])


def test_verify_empty():
    inst = XorCoverInstance(frozenset(), (), 0)
    assert xor_cover_verify(inst, [])


def test_verify_rejects_foreign_sets_and_oversize():
    inst = XorCoverInstance(UNIVERSE, FAMILY, 1)
    assert not xor_cover_verify(inst, [frozenset({1})])
    assert not xor_cover_verify(inst, [frozenset({1, 2}), frozenset({3, 4}), frozenset({5})])


def test_decide():
    assert xor_cover_decide(XorCoverInstance(UNIVERSE, FAMILY, 3))
    assert not xor_cover_decide(XorCoverInstance(UNIVERSE, FAMILY, 2))


def test_oracle_examples():
    assert exact_cover_via_xor_oracle(XorCoverInstance(UNIVERSE, FAMILY, 3))
    assert not exact_cover_via_xor_oracle(XorCoverInstance(UNIVERSE, FAMILY, 2))
    assert exact_cover_via_xor_oracle(XorCoverInstance(frozenset({1}), (frozenset({1}),), 1))


def test_oracle_rejects_overlapping_odd_cover():
    # Seven points, seven 3-element blocks, any two meeting in one point:
    # three blocks through a common point xor to the whole universe, but no
    # disjoint cover exists.
    blocks = [frozenset(b) for b in
              [{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}]]
    inst = XorCoverInstance(frozenset(range(1, 8)), tuple(blocks), 3)
    assert xor_cover_decide(inst)
    assert not exact_cover_via_xor_oracle(inst)


def test_min_xor_cover_core():
    masks = [0b0011, 0b0110, 0b1100, 0b1000]
    assert min_xor_cover(masks, 0) == []
    picked = min_xor_cover(masks, 0b1111)
    assert picked is not None
    acc = 0
    for idx in picked:
        acc ^= masks[idx]
    assert acc == 0b1111 and len(picked) == 2
    assert min_xor_cover(masks, 0b1111, size_limit=1) is None
    assert min_xor_cover([0b01], 0b10) is None


def test_instance_validation():
    with pytest.raises(ValueError):
        XorCoverInstance(frozenset({1}), (frozenset({2}),), 1)
    with pytest.raises(ValueError):
        XorCoverInstance(frozenset({1}), (), -1)
