"""Packet combinatorics: parameters, sign characters, packet members.

A tempered parameter for size n is a strictly decreasing tuple kappa in
Z + (n-1)/2; its component group is (Z/2)^n with basis e_1, ..., e_n,
and a sign character eta picks one discrete series per real form: the
indices where eta(e_i) = (-1)^(i-1) contribute kappa_i to the p-part.

A lift parameter for a pair of sizes n < m keeps the n values mu_i
(shifted into Z + (m-1)/2) and inserts one extra value mu_0 in Z + n/2
at position i0; its component group gains a basis vector e'_0. A sign
character eta' either cuts out a weakly fair A_q(lam') on a given target
form of size m or kills it; the gate is a sign condition on eta'(e'_0)
with two independent formulations (a closed form in the block signature
at position i0 and a product form over all of eta'). Both are computed
and compared on every call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import HCParam, HalfInt, Signature, half
from .errors import (
    InternalLemmaMismatch,
    MalformedCharacter,
    NotDominant,
    PreconditionViolation,
    RepeatedEntry,
    WrongParityClass,
)
from .lifting import AqBlock, AqLambdaData

PLUS = +1
MINUS = -1


def _check_decreasing_distinct(values: tuple[HalfInt, ...], label: str) -> None:
    for a, b in zip(values, values[1:]):
        if a.twice < b.twice:
            raise NotDominant(f"{label} must decrease: {a} then {b}")
        if a.twice == b.twice:
            raise RepeatedEntry(f"{label} repeats {a}")


@dataclass(frozen=True, slots=True)
class LParameter:
    """Strictly decreasing kappa_1 > ... > kappa_n in Z + (n-1)/2."""

    kappas: tuple[HalfInt, ...]

    def __post_init__(self) -> None:
        n = len(self.kappas)
        if n == 0:
            raise ValueError("empty parameter")
        want = (n - 1) % 2
        for k in self.kappas:
            if k.twice % 2 != want:
                raise WrongParityClass(f"{k} is not in Z + ({n}-1)/2")
        _check_decreasing_distinct(self.kappas, "kappa")

    @property
    def n(self) -> int:
        return len(self.kappas)

    def to_json(self) -> dict:
        return {"kappa": [str(k) for k in self.kappas]}


@dataclass(frozen=True, slots=True)
class AParameter:
    """Lift parameter: mu_1 > ... > mu_n with mu_0 spliced in at i0.

    mus live in Z + (m-1)/2, mu0 in Z + n/2, and i0 is the unique
    1-based slot with mu_{i0-1} > mu0 >= mu_{i0}. A tie mu0 = mu_{i0}
    can only happen for m = n + 1 and then couples e'_0 to e'_{i0} in
    every admissible sign character.
    """

    mus: tuple[HalfInt, ...]
    mu0: HalfInt
    m: int
    i0: int = field(init=False)

    def __post_init__(self) -> None:
        n = len(self.mus)
        if self.m <= n:
            raise PreconditionViolation(f"need m > n, got m={self.m}, n={n}")
        want = (self.m - 1) % 2
        for v in self.mus:
            if v.twice % 2 != want:
                raise WrongParityClass(f"{v} is not in Z + ({self.m}-1)/2")
        if self.mu0.twice % 2 != n % 2:
            raise WrongParityClass(f"mu0={self.mu0} is not in Z + {n}/2")
        _check_decreasing_distinct(self.mus, "mu")
        object.__setattr__(self, "i0", 1 + sum(1 for v in self.mus if v.twice > self.mu0.twice))

    @property
    def n(self) -> int:
        return len(self.mus)

    @property
    def tie_at_i0(self) -> bool:
        """mu0 equals mu_{i0} on a one-step target; couples the character.

        A repeated value only collapses the component group when the
        stretched summand has length one, so the constraint is empty
        whenever m - n > 1.
        """
        if self.m - self.n != 1:
            return False
        return self.i0 <= self.n and self.mus[self.i0 - 1].twice == self.mu0.twice

    def to_json(self) -> dict:
        return {
            "mu": [str(v) for v in self.mus],
            "mu0": str(self.mu0),
            "m": self.m,
            "i0": self.i0,
        }


@dataclass(frozen=True, slots=True)
class SignCharacter:
    """A character of (Z/2)^k recorded by its values on the basis.

    For an LParameter, values[i] is eta(e_{i+1}) and len == n. For an
    AParameter, values[0] is eta'(e'_0) and values[i] is eta'(e'_i), so
    len == n + 1. Constraints tying values together (such as the tie at
    i0) belong to the parameter and are enforced by the operations.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for v in self.values:
            if v not in (PLUS, MINUS):
                raise MalformedCharacter(f"character values must be +1 or -1, got {v}")

    @classmethod
    def parse(cls, text: str) -> "SignCharacter":
        signs = []
        for ch in text.strip():
            if ch == "+":
                signs.append(PLUS)
            elif ch == "-":
                signs.append(MINUS)
            elif not ch.isspace():
                raise MalformedCharacter(f"unexpected character {ch!r} in sign string")
        return cls(tuple(signs))

    def as_strings(self) -> list[str]:
        return ["+" if v == PLUS else "-" for v in self.values]

    def __str__(self) -> str:
        return "".join(self.as_strings())


def _sign_pow(exponent: int) -> int:
    return PLUS if exponent % 2 == 0 else MINUS


def epsilon_of_signature(p: int, q: int) -> int:
    """The sign (-1)^((p-q)(p-q-1)/2) attached to the form of signature (p, q).

    >>> [epsilon_of_signature(p, 3 - p) for p in range(4)]
    [1, -1, 1, -1]
    """
    d = p - q
    return _sign_pow((d * (d - 1) // 2) % 2)


def pi_from_eta(phi: LParameter, eta: SignCharacter) -> tuple[Signature, HCParam]:
    """The packet member cut out by eta: its real form and parameter."""
    n = phi.n
    if len(eta.values) != n:
        raise MalformedCharacter(f"character has {len(eta.values)} values, parameter wants {n}")
    p_vals = []
    q_vals = []
    for i, kappa in enumerate(phi.kappas, start=1):
        if eta.values[i - 1] == _sign_pow(i - 1):
            p_vals.append(kappa)
        else:
            q_vals.append(kappa)
    sig = Signature(len(p_vals), len(q_vals))
    # Determinant identity: the product of the values is forced by the
    # signature alone. Machine-checked at scale by the packet suite.
    prod = 1
    for v in eta.values:
        prod *= v
    assert prod == epsilon_of_signature(sig.p, sig.q), "determinant identity failed"
    return sig, HCParam(sig, tuple(p_vals + q_vals))


@lru_cache(maxsize=None)
def eta_from_pi(lam: HCParam) -> tuple[LParameter, SignCharacter]:
    """Inverse of pi_from_eta: recover kappa and the sign character."""
    order = sorted(lam.entries, key=lambda e: -e.twice)
    p_set = {e.twice for e in lam.p_part}
    signs = []
    for i, kappa in enumerate(order, start=1):
        if kappa.twice in p_set:
            signs.append(_sign_pow(i - 1))
        else:
            signs.append(_sign_pow(i))
    return LParameter(tuple(order)), SignCharacter(tuple(signs))


def _validate_a_character(phi_p: AParameter, eta_p: SignCharacter) -> None:
    if len(eta_p.values) != phi_p.n + 1:
        raise MalformedCharacter(
            f"character has {len(eta_p.values)} values, parameter wants {phi_p.n + 1}"
        )
    if phi_p.tie_at_i0 and eta_p.values[0] != eta_p.values[phi_p.i0]:
        raise MalformedCharacter(
            "tied parameter requires eta'(e'_0) = eta'(e'_i0)"
        )


def _unit_block_signs(phi_p: AParameter, eta_p: SignCharacter) -> list[tuple[int, int]]:
    """(r_i, s_i) for every 1 <= i <= n + 1 except i0, which gets (-1, -1)."""
    n, m, i0 = phi_p.n, phi_p.m, phi_p.i0
    out: list[tuple[int, int]] = []
    for i in range(1, n + 2):
        if i == i0:
            out.append((-1, -1))
        elif i < i0:
            matches = eta_p.values[i] == _sign_pow(i - 1)
            out.append((1, 0) if matches else (0, 1))
        else:
            matches = eta_p.values[i - 1] == _sign_pow(i + m - n - 2)
            out.append((1, 0) if matches else (0, 1))
    return out


def eta_prime_sign_ok(phi_p: AParameter, eta_p: SignCharacter, target: Signature) -> bool:
    """The nonvanishing sign gate, evaluated two independent ways.

    Closed form: eta'(e'_0) must equal (-1)^(r_i0 (i0-1) + s_i0 i0 +
    (m-n)(m-n-1)/2) where (r_i0, s_i0) is the balance left for the big
    block. Product form: the product of all n + 1 values must equal
    (-1)^((r-s)(r-s-1)/2). The two are provably equivalent; disagreement
    raises InternalLemmaMismatch.
    """
    if target.n != phi_p.m:
        raise PreconditionViolation(f"target size {target.n} != parameter size {phi_p.m}")
    _validate_a_character(phi_p, eta_p)
    n, m, i0 = phi_p.n, phi_p.m, phi_p.i0
    units = _unit_block_signs(phi_p, eta_p)
    r_i0 = target.p - sum(r for r, _ in units if r >= 0)
    s_i0 = target.q - sum(s for _, s in units if s >= 0)

    dmn = m - n
    closed = _sign_pow(r_i0 * (i0 - 1) + s_i0 * i0 + (dmn * (dmn - 1) // 2))
    ok_closed = eta_p.values[0] == closed

    prod = 1
    for v in eta_p.values:
        prod *= v
    ok_product = prod == epsilon_of_signature(target.p, target.q)

    if ok_closed != ok_product:
        raise InternalLemmaMismatch(
            f"sign gate split: closed={ok_closed} product={ok_product} "
            f"for {phi_p} {eta_p} {target}"
        )
    return ok_closed


ZERO = None


def sigma_from_eta_prime(
    phi_p: AParameter, eta_p: SignCharacter, target: Signature
) -> AqLambdaData | None:
    """The A_q(lam') member cut out by eta' on the target form, or None.

    None means the character kills this form: a unit block count went
    negative or the sign gate failed.
    """
    if target.n != phi_p.m:
        raise PreconditionViolation(f"target size {target.n} != parameter size {phi_p.m}")
    _validate_a_character(phi_p, eta_p)
    n, m, i0 = phi_p.n, phi_p.m, phi_p.i0
    units = _unit_block_signs(phi_p, eta_p)
    r_i0 = target.p - sum(r for r, _ in units if r >= 0)
    s_i0 = target.q - sum(s for _, s in units if s >= 0)
    if r_i0 < 0 or s_i0 < 0:
        return ZERO
    if not eta_prime_sign_ok(phi_p, eta_p, target):
        return ZERO

    blocks: list[AqBlock] = []
    for i in range(1, n + 2):
        if i < i0:
            tw = phi_p.mus[i - 1].twice - (m - 1) + 2 * (i - 1)
            ri, si = units[i - 1]
        elif i == i0:
            tw = phi_p.mu0.twice - n + 2 * (i0 - 1)
            ri, si = r_i0, s_i0
        else:
            tw = phi_p.mus[i - 2].twice - (m - 1) + 2 * (i + m - n - 2)
            ri, si = units[i - 1]
        blocks.append(AqBlock(ri, si, half(tw)))
    return AqLambdaData(target, tuple(blocks))


def packet_members(phi: LParameter) -> list[tuple[SignCharacter, Signature, HCParam]]:
    """All 2^n members of the packet, in a fixed enumeration order.

    eta(e_1) varies fastest, + before -, like binary counting with the
    leftmost sign as the low bit. Deterministic for serialization.
    """
    n = phi.n
    out = []
    for bits in range(1 << n):
        signs = tuple(MINUS if (bits >> i) & 1 else PLUS for i in range(n))
        eta = SignCharacter(signs)
        sig, lam = pi_from_eta(phi, eta)
        out.append((eta, sig, lam))
    return out
