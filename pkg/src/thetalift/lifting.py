"""The lift itself: down to smaller groups, up to weakly fair induction data.

A lift target at most as large as the source receives a discrete series,
and lift_down produces its parameter by deleting a centered chain and
reassembling the strict split. A strictly larger target receives a
cohomologically induced module A_q(lam') attached to a theta-stable
parabolic with one-dimensional Levi blocks plus one interval block; the
result is recorded as AqLambdaData, an ordered list of (p_i, q_i, lam_i)
with integer lam_i, always in the weakly fair range.

aq_to_discrete_series resolves an AqLambdaData whose blocks are all
compact and in the good range back into the discrete series parameter it
induces to, choosing the dominant chamber from the expanded coordinate
string; a tie between coordinates on opposite compact factors leaves the
chamber undetermined and raises ChamberAmbiguous.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HCParam, HalfInt, LiftContext, STRICT, Signature, half, split_abgd
from .errors import (
    ChamberAmbiguous,
    InternalWeaklyFairViolation,
    NotCompactLevi,
    NotGoodRange,
    PreconditionViolation,
    SignatureMismatch,
)
from .nonvanishing import occurs


@dataclass(frozen=True, slots=True)
class AqBlock:
    """One Levi block U(p_i, q_i) with its integer character value."""

    p_i: int
    q_i: int
    lam_i: HalfInt

    def __post_init__(self) -> None:
        if self.p_i < 0 or self.q_i < 0 or self.p_i + self.q_i < 1:
            raise ValueError(f"bad block signature ({self.p_i}, {self.q_i})")
        lam = self.lam_i if isinstance(self.lam_i, HalfInt) else HalfInt(self.lam_i)
        object.__setattr__(self, "lam_i", lam)
        if not lam.is_integer:
            raise ValueError(f"block value {lam} must be an integer")

    @property
    def size(self) -> int:
        return self.p_i + self.q_i

    def to_json(self) -> dict:
        return {"p": self.p_i, "q": self.q_i, "lambda": str(self.lam_i)}


@dataclass(frozen=True, slots=True)
class AqLambdaData:
    """Ordered Levi blocks of a weakly fair A_q(lam') on U(target).

    Block signatures sum to the target and consecutive values satisfy
    lam_i - lam_{i+1} >= -(size_i + size_{i+1})/2, the weakly fair
    bound; violating it here means a construction bug upstream.
    """

    target: Signature
    blocks: tuple[AqBlock, ...]

    def __post_init__(self) -> None:
        if sum(b.p_i for b in self.blocks) != self.target.p or sum(
            b.q_i for b in self.blocks
        ) != self.target.q:
            raise SignatureMismatch("block signatures do not sum to the target")
        for a, b in zip(self.blocks, self.blocks[1:]):
            if a.lam_i.twice - b.lam_i.twice < -(a.size + b.size):
                raise InternalWeaklyFairViolation(
                    f"blocks {a} then {b} leave the weakly fair range"
                )

    @property
    def in_good_range(self) -> bool:
        return all(
            a.lam_i.twice - b.lam_i.twice > -2 for a, b in zip(self.blocks, self.blocks[1:])
        )

    def to_json(self) -> list[dict]:
        return [b.to_json() for b in self.blocks]


VANISHES = "vanishes"
DISCRETE_SERIES = "discrete_series"
AQ_WEAKLY_FAIR = "aq_weakly_fair"


@dataclass(frozen=True, slots=True)
class LiftResult:
    """Outcome of a lift: zero, a discrete series, or an A_q(lam')."""

    kind: str
    param: HCParam | None = None
    aq: AqLambdaData | None = None

    @classmethod
    def vanishes(cls) -> "LiftResult":
        return cls(VANISHES)

    @classmethod
    def discrete_series(cls, param: HCParam) -> "LiftResult":
        return cls(DISCRETE_SERIES, param=param)

    @classmethod
    def weakly_fair(cls, aq: AqLambdaData) -> "LiftResult":
        return cls(AQ_WEAKLY_FAIR, aq=aq)

    @property
    def nonzero(self) -> bool:
        return self.kind != VANISHES

    def to_json(self) -> dict:
        if self.kind == VANISHES:
            return {"status": "vanishes"}
        if self.kind == DISCRETE_SERIES:
            assert self.param is not None
            return {"status": "nonzero", "kind": self.kind, "param": self.param.to_json()}
        assert self.aq is not None
        return {"status": "nonzero", "kind": self.kind, "blocks": self.aq.to_json()}


def _require_dims(lam: HCParam, ctx: LiftContext, target: Signature) -> None:
    if lam.sig.n != ctx.source_dim:
        raise PreconditionViolation(
            f"parameter size {lam.sig.n} != context source_dim {ctx.source_dim}"
        )
    if target.n != ctx.target_dim:
        raise PreconditionViolation(
            f"target size {target.n} != context target_dim {ctx.target_dim}"
        )


def lift_up(lam: HCParam, ctx: LiftContext, target: Signature) -> AqLambdaData:
    """Lift to a target at least as large: weakly fair A_q(lam') data.

    Blocks come out in strictly descending order of the expanded
    dominance string: the merged positive split values, then one
    interval block of size m - n (omitted when m = n), then the merged
    nonpositive split values. Requires occurs() to be nonzero.
    """
    _require_dims(lam, ctx, target)
    n, m = ctx.source_dim, ctx.target_dim
    r, s = target.p, target.q
    if m < n:
        raise PreconditionViolation(f"lift_up needs target at least as large, got m={m} < n={n}")
    nonzero, pos = occurs(lam, ctx.m0, target)
    if not nonzero:
        raise PreconditionViolation(f"lift of {lam} to {target} vanishes: {pos.reason}")

    sp = split_abgd(lam, ctx)
    x, y, z, w = sp.x, sp.y, sp.z, sp.w
    assert x + w <= r and z + y <= s, "occurrence guarantees split capacity"
    n0 = ctx.n0

    blocks: list[AqBlock] = []

    # Positive side: alpha entries become (1,0) blocks, gamma entries
    # (0,1) blocks, interleaved by descending split value.
    merged_pos = sorted(
        [(a.twice, "a", i + 1) for i, a in enumerate(sp.alpha)]
        + [(g.twice, "g", k + 1) for k, g in enumerate(sp.gamma)],
        key=lambda v: -v[0],
    )
    for tw, tag, idx in merged_pos:
        if tag == "a":
            cross = sum(1 for g in sp.gamma if g.twice > tw)
            val = tw - (m + 1) + 2 * idx + 2 * cross + n0
            blocks.append(AqBlock(1, 0, half(val)))
        else:
            cross = sum(1 for a in sp.alpha if a.twice > tw)
            val = tw - (m + 1) + 2 * idx + 2 * cross + n0
            blocks.append(AqBlock(0, 1, half(val)))

    if m > n:
        blocks.append(AqBlock(r - x - w, s - z - y, half(2 * (x + z) - n + n0)))

    merged_neg = sorted(
        [(d.twice, "d", l + 1) for l, d in enumerate(sp.delta)]
        + [(b.twice, "b", j + 1) for j, b in enumerate(sp.beta)],
        key=lambda v: -v[0],
    )
    for tw, tag, idx in merged_neg:
        if tag == "d":
            cross = sum(1 for b in sp.beta if b.twice < tw)
            val = tw + (m - 1) + 2 * idx - 2 * w - 2 * cross + n0
            blocks.append(AqBlock(1, 0, half(val)))
        else:
            cross = sum(1 for d in sp.delta if d.twice < tw)
            val = tw + (m - 1) + 2 * idx - 2 * y - 2 * cross + n0
            blocks.append(AqBlock(0, 1, half(val)))

    return AqLambdaData(target, tuple(blocks))


def lift_down(lam: HCParam, ctx: LiftContext, target: Signature) -> HCParam:
    """Lift to a target at most as large: a discrete series parameter.

    Deletes the centered chain of length n - m from the strict split and
    reassembles (alpha, delta | gamma, beta) + n0/2 on the target
    signature, which must equal (x + w, z + y).
    """
    _require_dims(lam, ctx, target)
    n, m = ctx.source_dim, ctx.target_dim
    if m > n:
        raise PreconditionViolation(f"lift_down needs target at most as large, got m={m} > n={n}")
    nonzero, pos = occurs(lam, ctx.m0, target)
    if not nonzero:
        raise PreconditionViolation(f"lift of {lam} to {target} vanishes: {pos.reason}")

    sp = split_abgd(lam, ctx, STRICT, chain_k=n - m)
    if (sp.x + sp.w, sp.z + sp.y) != (target.p, target.q):
        raise SignatureMismatch(
            f"target {target} differs from the split signature "
            f"({sp.x + sp.w},{sp.z + sp.y})"
        )
    n0 = ctx.n0
    p_part = tuple(half(v.twice + n0) for v in sp.alpha + sp.delta)
    q_part = tuple(half(v.twice + n0) for v in sp.gamma + sp.beta)
    return HCParam(target, p_part + q_part)


def lift(lam: HCParam, ctx: LiftContext, target: Signature) -> LiftResult:
    """Full decision: vanishes, discrete series, or weakly fair A_q."""
    _require_dims(lam, ctx, target)
    nonzero, _pos = occurs(lam, ctx.m0, target)
    if not nonzero:
        return LiftResult.vanishes()
    if ctx.target_dim <= ctx.source_dim:
        return LiftResult.discrete_series(lift_down(lam, ctx, target))
    return LiftResult.weakly_fair(lift_up(lam, ctx, target))


def aq_infinitesimal_character(aq: AqLambdaData) -> tuple[HalfInt, ...]:
    """Infinitesimal character as a descending multiset of half-integers.

    Expand each block value to size_i copies, then add the usual rho of
    the target group componentwise.
    """
    m = aq.target.n
    vals: list[int] = []
    for b in aq.blocks:
        vals.extend([b.lam_i.twice] * b.size)
    assert len(vals) == m
    out = [v + (m - 1 - 2 * i) for i, v in enumerate(vals)]
    return tuple(half(v) for v in sorted(out, reverse=True))


def aq_to_discrete_series(aq: AqLambdaData) -> HCParam:
    """Resolve compact-block, good-range A_q(lam') data to its parameter.

    Every block must have p_i = 0 or q_i = 0 (NotCompactLevi) and the
    values must be in the good range (NotGoodRange). The coordinates of
    the expanded value string are ordered by value, same-side ties by
    position; a cross-side tie raises ChamberAmbiguous. Adding the
    half-sum of the resulting positive system yields the parameter.
    """
    for b in aq.blocks:
        if b.p_i and b.q_i:
            raise NotCompactLevi(f"block ({b.p_i},{b.q_i}) is not compact")
    for a, b in zip(aq.blocks, aq.blocks[1:]):
        if a.lam_i.twice - b.lam_i.twice <= -2:
            raise NotGoodRange(f"values {a.lam_i} then {b.lam_i} are outside the good range")

    # Expanded coordinates: (value, side, position), p-side first.
    p_coords: list[int] = []
    q_coords: list[int] = []
    for b in aq.blocks:
        if b.p_i:
            p_coords.extend([b.lam_i.twice] * b.p_i)
        else:
            q_coords.extend([b.lam_i.twice] * b.q_i)
    coords = [(v, 0, i) for i, v in enumerate(p_coords)] + [
        (v, 1, i) for i, v in enumerate(q_coords)
    ]

    mm = len(coords)
    rho_tw = [0] * mm
    for u in range(mm):
        vu, su, iu = coords[u]
        for v in range(u + 1, mm):
            vv, sv, iv = coords[v]
            if vu == vv:
                if su != sv:
                    raise ChamberAmbiguous(
                        f"value {half(vu)} repeats across both factors"
                    )
                first_u = iu < iv  # same side: earlier position dominates
            else:
                first_u = vu > vv
            if first_u:
                rho_tw[u] += 1
                rho_tw[v] -= 1
            else:
                rho_tw[u] -= 1
                rho_tw[v] += 1

    entries = tuple(half(coords[u][0] + rho_tw[u]) for u in range(mm))
    # Construction guarantees a valid dominant parameter here; HCParam
    # validation is the safety net.
    return HCParam(Signature(len(p_coords), len(q_coords)), entries)
