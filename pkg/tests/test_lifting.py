"""Explicit lifts in both directions and the block-data helpers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetalift import (
    AqBlock,
    AqLambdaData,
    ChamberAmbiguous,
    HCParam,
    HalfInt,
    InternalWeaklyFairViolation,
    LiftContext,
    NotCompactLevi,
    NotGoodRange,
    PreconditionViolation,
    Signature,
    SignatureMismatch,
    aq_infinitesimal_character,
    aq_to_discrete_series,
    half,
    lift,
    lift_down,
    lift_up,
)


def _blocks(aq):
    return [(b.p_i, b.q_i, b.lam_i.as_int()) for b in aq.blocks]


def test_lift_up_scalar_to_rank_three():
    # one-dimensional source, two steps past the first occurrence
    lam = HCParam(Signature(1, 0), (HalfInt(2),))
    ctx = LiftContext(1, 1, 1, 3)
    aq = lift_up(lam, ctx, Signature(2, 1))
    assert _blocks(aq) == [(1, 0, 1), (1, 1, 1)]
    assert aq.target == Signature(2, 1)


def test_lift_up_u11_to_u31():
    lam = HCParam(Signature(1, 1), (half(1), half(-1)))
    ctx = LiftContext(0, 0, 2, 4)
    aq = lift_up(lam, ctx, Signature(3, 1))
    assert _blocks(aq) == [(1, 0, -1), (1, 1, 0), (1, 0, 1)]


def test_lift_up_same_size_omits_middle_block():
    lam = HCParam(Signature(2, 0), (half(7), half(-7)))
    ctx = LiftContext(0, 0, 2, 2)
    aq = lift_up(lam, ctx, Signature(1, 1))
    assert _blocks(aq) == [(1, 0, 3), (0, 1, -3)]


def test_lift_up_rejects_vanishing_target():
    lam = HCParam(Signature(1, 1), (half(1), half(-1)))
    ctx = LiftContext(0, 0, 2, 4)
    with pytest.raises(PreconditionViolation):
        lift_up(lam, ctx, Signature(4, 0))


def test_lift_up_rejects_shrinking_target():
    lam = HCParam(Signature(2, 1), (half(2), half(0), half(4)))
    ctx = LiftContext(1, 1, 3, 1)
    with pytest.raises(PreconditionViolation):
        lift_up(lam, ctx, Signature(0, 1))


def test_lift_down_chain_removal():
    lam = HCParam(Signature(2, 1), (half(2), half(0), half(4)))
    ctx = LiftContext(1, 1, 3, 1)
    out = lift_down(lam, ctx, Signature(0, 1))
    assert out.sig == Signature(0, 1)
    assert out.entries == (HalfInt(2),)


def test_lift_down_rejects_other_targets():
    # the tower admits exactly one occurrence at each smaller size
    lam = HCParam(Signature(2, 1), (half(2), half(0), half(4)))
    ctx = LiftContext(1, 1, 3, 1)
    with pytest.raises(PreconditionViolation):
        lift_down(lam, ctx, Signature(1, 0))


def test_lift_dispatch():
    lam = HCParam(Signature(1, 1), (half(1), half(-1)))
    up = lift(lam, LiftContext(0, 0, 2, 4), Signature(3, 1))
    assert up.nonzero and up.kind == "aq_weakly_fair"
    gone = lift(lam, LiftContext(0, 0, 2, 4), Signature(4, 0))
    assert not gone.nonzero
    assert gone.to_json() == {"status": "vanishes"}
    lam3 = HCParam(Signature(2, 1), (half(2), half(0), half(4)))
    down = lift(lam3, LiftContext(1, 1, 3, 1), Signature(0, 1))
    assert down.nonzero and down.kind == "discrete_series"
    assert down.to_json() == {
        "status": "nonzero",
        "kind": "discrete_series",
        "param": {"p": 0, "q": 1, "p_part": [], "q_part": ["2"]},
    }


def test_lift_result_json_for_blocks():
    lam = HCParam(Signature(1, 0), (HalfInt(2),))
    res = lift(lam, LiftContext(1, 1, 1, 3), Signature(2, 1))
    assert res.to_json() == {
        "status": "nonzero",
        "kind": "aq_weakly_fair",
        "blocks": [
            {"p": 1, "q": 0, "lambda": "1"},
            {"p": 1, "q": 1, "lambda": "1"},
        ],
    }


def test_aq_block_validation():
    with pytest.raises(ValueError):
        AqBlock(0, 0, HalfInt(1))
    with pytest.raises(ValueError):
        AqBlock(1, 0, half(1))  # block values must be integers


def test_aq_lambda_data_checks_sums():
    with pytest.raises(SignatureMismatch):
        AqLambdaData(Signature(2, 1), (AqBlock(1, 0, HalfInt(0)),))


def test_aq_lambda_data_weakly_fair_guard():
    # values may climb by at most the mean of the block sizes
    with pytest.raises(InternalWeaklyFairViolation):
        AqLambdaData(
            Signature(2, 0),
            (AqBlock(1, 0, HalfInt(-1)), AqBlock(1, 0, HalfInt(1))),
        )
    # any decrease is fine
    AqLambdaData(
        Signature(2, 0),
        (AqBlock(1, 0, HalfInt(1)), AqBlock(1, 0, HalfInt(-1))),
    )


def test_aq_good_range_flag():
    equal = AqLambdaData(
        Signature(2, 0), (AqBlock(1, 0, HalfInt(1)), AqBlock(1, 0, HalfInt(1)))
    )
    assert equal.in_good_range
    # a climb of one is weakly fair but not good
    boundary = AqLambdaData(
        Signature(2, 0), (AqBlock(1, 0, HalfInt(0)), AqBlock(1, 0, HalfInt(1)))
    )
    assert not boundary.in_good_range


def test_infinitesimal_character():
    # the lift adds a zero-centered segment to the source entries
    aq = AqLambdaData(
        Signature(3, 1),
        (AqBlock(1, 0, HalfInt(-1)), AqBlock(1, 1, HalfInt(0)), AqBlock(1, 0, HalfInt(1))),
    )
    assert aq_infinitesimal_character(aq) == (
        half(1),
        half(1),
        half(-1),
        half(-1),
    )


def test_aq_to_discrete_series_roundtrip():
    lam = HCParam(Signature(2, 0), (half(7), half(-7)))
    aq = lift_up(lam, LiftContext(0, 0, 2, 2), Signature(1, 1))
    back = aq_to_discrete_series(aq)
    assert back == HCParam(Signature(1, 1), (half(7), half(-7)))


def test_aq_to_discrete_series_rejects_mixed_block():
    aq = AqLambdaData(Signature(1, 1), (AqBlock(1, 1, HalfInt(0)),))
    with pytest.raises(NotCompactLevi):
        aq_to_discrete_series(aq)


def test_aq_to_discrete_series_chamber_tie():
    # two blocks on opposite sides with equal values cannot be ordered
    aq = AqLambdaData(
        Signature(1, 1), (AqBlock(1, 0, HalfInt(0)), AqBlock(0, 1, HalfInt(0)))
    )
    with pytest.raises(ChamberAmbiguous):
        aq_to_discrete_series(aq)


def test_aq_to_discrete_series_not_good_range():
    aq = AqLambdaData(
        Signature(2, 0), (AqBlock(1, 0, HalfInt(0)), AqBlock(1, 0, HalfInt(1)))
    )
    with pytest.raises(NotGoodRange):
        aq_to_discrete_series(aq)


@given(st.integers(2, 8), st.integers(0, 3))
def test_lift_up_blocks_partition_target(extra, shift):
    # lambda = (shift + 3/2, shift + 1/2) on U(2,0), lifted up `extra` steps
    lam = HCParam(Signature(2, 0), (half(2 * shift + 3), half(2 * shift + 1)))
    m = 2 + 2 * extra
    ctx = LiftContext(0, 0, 2, m)
    target = Signature(2 + extra, m - 2 - extra)
    aq = lift_up(lam, ctx, target)
    assert sum(b.p_i for b in aq.blocks) == target.p
    assert sum(b.q_i for b in aq.blocks) == target.q
    # two rank-one blocks from the source plus one filler block
    assert len(aq.blocks) == 3
    assert aq.blocks[2].size == m - 2
    chi = aq_infinitesimal_character(aq)
    assert len(chi) == m
    assert all(a.twice >= b.twice for a, b in zip(chi, chi[1:]))
