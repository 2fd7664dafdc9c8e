"""Tempered packet bookkeeping and lift-packet members."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetalift import (
    AParameter,
    HCParam,
    HalfInt,
    LParameter,
    MalformedCharacter,
    PreconditionViolation,
    RepeatedEntry,
    SignCharacter,
    Signature,
    WrongParityClass,
    epsilon_of_signature,
    eta_from_pi,
    half,
    packet_members,
    pi_from_eta,
)
from thetalift.packets import eta_prime_sign_ok, sigma_from_eta_prime


def test_epsilon_of_signature():
    assert [epsilon_of_signature(p, 3 - p) for p in range(4)] == [1, -1, 1, -1]
    assert epsilon_of_signature(0, 0) == 1
    assert epsilon_of_signature(2, 2) == 1
    # period four in p - q
    assert [epsilon_of_signature(d, 0) for d in range(5)] == [1, 1, -1, -1, 1]


def test_lparameter_validation():
    LParameter((half(1), half(-1)))
    with pytest.raises(RepeatedEntry):
        LParameter((half(1), half(1)))
    with pytest.raises(WrongParityClass):
        LParameter((HalfInt(2), HalfInt(1), half(1)))


def test_sign_character_parse():
    eta = SignCharacter.parse("++-")
    assert eta.values == (1, 1, -1)
    assert eta.as_strings() == ["+", "+", "-"]
    with pytest.raises(MalformedCharacter):
        SignCharacter((1, 0, -1))


def test_pi_from_eta_half_pair():
    phi = LParameter((half(1), half(-1)))
    sig, lam = pi_from_eta(phi, SignCharacter.parse("++"))
    assert sig == Signature(1, 1)
    assert lam == HCParam(Signature(1, 1), (half(1), half(-1)))
    sig, lam = pi_from_eta(phi, SignCharacter.parse("--"))
    assert sig == Signature(1, 1)
    assert lam == HCParam(Signature(1, 1), (half(-1), half(1)))


def test_pi_from_eta_alternating_gives_definite():
    phi = LParameter((HalfInt(2), HalfInt(1), HalfInt(0)))
    sig, lam = pi_from_eta(phi, SignCharacter((1, -1, 1)))
    assert sig == Signature(3, 0)
    assert lam.entries == (HalfInt(2), HalfInt(1), HalfInt(0))


def test_eta_from_pi_examples():
    phi, eta = eta_from_pi(HCParam(Signature(1, 1), (half(1), half(-1))))
    assert phi.kappas == (half(1), half(-1))
    assert eta.values == (1, 1)
    phi, eta = eta_from_pi(HCParam(Signature(1, 0), (HalfInt(2),)))
    assert eta.values == (1,)
    # kappa_1 = 2 sits in the q-part, kappa_2 = 1 and kappa_3 = 0 in the p-part
    phi, eta = eta_from_pi(HCParam(Signature(2, 1), (half(2), half(0), half(4))))
    assert phi.kappas == (HalfInt(2), HalfInt(1), HalfInt(0))
    assert eta.values == (-1, -1, 1)


def test_packet_round_trip_small():
    phi = LParameter((HalfInt(2), HalfInt(1), HalfInt(-3)))
    for eta, sig, lam in packet_members(phi):
        phi2, eta2 = eta_from_pi(lam)
        assert phi2.kappas == phi.kappas
        assert eta2.values == eta.values


def test_packet_members_order_and_count():
    phi = LParameter((half(1), half(-1)))
    rows = packet_members(phi)
    assert len(rows) == 4
    assert [r[0].as_strings() for r in rows] == [
        ["+", "+"],
        ["-", "+"],
        ["+", "-"],
        ["-", "-"],
    ]
    # signatures pair off by the determinant identity
    assert [(r[1].p, r[1].q) for r in rows] == [(1, 1), (0, 2), (2, 0), (1, 1)]


def test_aparameter_validation():
    phi_p = AParameter((HalfInt(2),), half(1), 3)
    assert phi_p.i0 == 2
    assert not phi_p.tie_at_i0
    with pytest.raises(PreconditionViolation):
        AParameter((HalfInt(2),), half(1), 1)  # m must exceed n
    with pytest.raises(WrongParityClass):
        AParameter((half(1),), half(1), 3)  # mus must sit in Z + (m-1)/2


def test_aparameter_tie_needs_one_step():
    # numeric tie with m - n = 1 couples the character
    tied = AParameter((half(1),), half(1), 2)
    assert tied.i0 == 1 and tied.tie_at_i0
    # the same numeric tie three steps up leaves the group free
    free = AParameter((half(3),), half(3), 4)
    assert free.i0 == 1 and not free.tie_at_i0


def test_sigma_blocks_scalar_case():
    phi_p = AParameter((HalfInt(2),), half(1), 3)
    eta_p = SignCharacter((1, 1))  # e0' first, then e1'
    aq = sigma_from_eta_prime(phi_p, eta_p, Signature(2, 1))
    assert [(b.p_i, b.q_i, b.lam_i.as_int()) for b in aq.blocks] == [
        (1, 0, 1),
        (1, 1, 1),
    ]


def test_sigma_blocks_rank_two_case():
    phi_p = AParameter((half(1), half(-1)), HalfInt(0), 4)
    assert phi_p.i0 == 2
    eta_p = SignCharacter((1, 1, -1))
    aq = sigma_from_eta_prime(phi_p, eta_p, Signature(3, 1))
    assert [(b.p_i, b.q_i, b.lam_i.as_int()) for b in aq.blocks] == [
        (1, 0, -1),
        (1, 1, 0),
        (1, 0, 1),
    ]


def test_sigma_zero_when_sign_gate_fails():
    phi_p = AParameter((HalfInt(2),), half(1), 3)
    flipped = SignCharacter((-1, 1))
    assert sigma_from_eta_prime(phi_p, flipped, Signature(2, 1)) is None


def test_sigma_zero_when_capacity_fails():
    phi_p = AParameter((HalfInt(2),), half(1), 3)
    eta_p = SignCharacter((1, 1))
    assert sigma_from_eta_prime(phi_p, eta_p, Signature(0, 3)) is None


def test_sigma_rejects_tie_breaking_character():
    tied = AParameter((half(1),), half(1), 2)
    with pytest.raises(MalformedCharacter):
        sigma_from_eta_prime(tied, SignCharacter((1, -1)), Signature(1, 1))


def test_eta_prime_sign_ok_closed_form():
    phi_p = AParameter((HalfInt(2),), half(1), 3)
    assert eta_prime_sign_ok(phi_p, SignCharacter((1, 1)), Signature(2, 1))
    assert not eta_prime_sign_ok(phi_p, SignCharacter((-1, 1)), Signature(2, 1))
    rank2 = AParameter((half(1), half(-1)), HalfInt(0), 4)
    assert eta_prime_sign_ok(rank2, SignCharacter((1, 1, -1)), Signature(3, 1))
    assert not eta_prime_sign_ok(rank2, SignCharacter((-1, 1, -1)), Signature(3, 1))


def test_sigma_injective_on_nonzero():
    phi_p = AParameter((half(3), half(-1)), HalfInt(0), 4)
    seen = {}
    for bits in range(8):
        signs = tuple(-1 if (bits >> i) & 1 else 1 for i in range(3))
        aq = sigma_from_eta_prime(phi_p, SignCharacter(signs), Signature(2, 2))
        if aq is None:
            continue
        key = tuple((b.p_i, b.q_i, b.lam_i.twice) for b in aq.blocks)
        assert key not in seen
        seen[key] = signs


@given(st.integers(1, 5), st.data())
def test_determinant_identity_all_characters(n, data):
    base = [HalfInt.halves(2 * v + ((n - 1) % 2)) for v in range(-4, 5)]
    kappas = tuple(
        sorted(
            data.draw(st.lists(st.sampled_from(base), min_size=n, max_size=n, unique=True)),
            key=lambda v: -v.twice,
        )
    )
    phi = LParameter(kappas)
    bits = data.draw(st.integers(0, 2**n - 1))
    eta = SignCharacter(tuple(-1 if (bits >> i) & 1 else 1 for i in range(n)))
    sig, lam = pi_from_eta(phi, eta)
    prod = 1
    for v in eta.values:
        prod *= v
    assert prod == epsilon_of_signature(sig.p, sig.q)
    assert sig.p + sig.q == n
