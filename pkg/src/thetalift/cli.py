"""Command-line front end: single queries, enumeration, verification.

All output is UTF-8 JSON or JSONL on standard output, one record per
line, with a fixed key order and canonical half-integer rendering, so
runs are byte-for-byte reproducible. Exit codes: 0 when the query
computed (vanishing included), 1 when a verification suite found
failures, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import HCParam, HalfInt, LiftContext, Signature, conjugate_dual, parse_half_list
from .errors import ThetaLiftError
from .ktypes import KType, correspond_ktype
from .lifting import lift
from .nonvanishing import c_count, invariants, occurs
from .packets import AParameter, SignCharacter, packet_members, LParameter
from .suites import EnumerationBounds, SUITES, iter_enumeration, run_suite
from .transfer import sigma_from_eta_prime


def _dump(record: dict) -> None:
    sys.stdout.write(json.dumps(record, separators=(",", ":")) + "\n")


def _parse_lambda(args: argparse.Namespace) -> HCParam:
    entries = parse_half_list(args.lam)
    return HCParam(Signature(args.p, args.q), entries)


def _exponents(args: argparse.Namespace, n: int, m: int) -> tuple[int, int]:
    m0 = args.m0 if args.m0 is not None else m % 2
    n0 = args.n0 if args.n0 is not None else n % 2
    return m0, n0


def _add_source_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True, metavar="ENTRIES",
                    help="comma-separated half-integers, p-part then q-part")


def _add_target_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)


def _add_exponent_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--m0", type=int, default=None,
                    help="target twist exponent, default (r+s) mod 2")
    sp.add_argument("--n0", type=int, default=None,
                    help="source twist exponent, default (p+q) mod 2")


def _position_json(pos) -> dict:
    return {"l": pos.l, "t": pos.t, "swapped": pos.swapped, "reason": pos.reason}


def cmd_lift(args: argparse.Namespace) -> int:
    lam = _parse_lambda(args)
    target = Signature(args.r, args.s)
    m0, n0 = _exponents(args, lam.sig.n, target.n)
    ctx = LiftContext(m0, n0, lam.sig.n, target.n)
    result = lift(lam, ctx, target)
    _dump(result.to_json())
    return 0


def cmd_occurs(args: argparse.Namespace) -> int:
    lam = _parse_lambda(args)
    target = Signature(args.r, args.s)
    m0, _n0 = _exponents(args, lam.sig.n, target.n)
    nonzero, pos = occurs(lam, m0, target)
    _dump({
        "lambda": lam.to_json(),
        "m0": m0,
        "target": [target.p, target.q],
        "occurs": nonzero,
        "position": _position_json(pos),
    })
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    lam = _parse_lambda(args)
    n = lam.sig.n
    m0 = args.m0 if args.m0 is not None else n % 2
    k0 = args.k0 if args.k0 is not None else (0 if (m0 - n) % 2 == 0 else -1)
    if args.dual:
        ctx = LiftContext(m0, n % 2, n, n if (n - m0) % 2 == 0 else n + 1)
        lam = conjugate_dual(lam, ctx)
    inv = invariants(lam, m0, k0)
    _dump({
        "lambda": lam.to_json(),
        "m0": m0,
        "k0": k0,
        "dual": args.dual,
        "k_lambda": inv.k_lambda,
        "r_lambda": inv.r_lambda,
        "s_lambda": inv.s_lambda,
        "X": [[str(v), "+" if sg > 0 else "-"] for v, sg in inv.X],
        "X_inf": [[str(v), "+" if sg > 0 else "-"] for v, sg in inv.X_inf],
        "c_counts": [
            {"t": t, "plus": c_count(inv, +1, t), "minus": c_count(inv, -1, t)}
            for t in range(1, 11)
        ],
    })
    return 0


def cmd_packet(args: argparse.Namespace) -> int:
    kappas = parse_half_list(args.kappas)
    phi = LParameter(kappas)
    for eta, sig, lam in packet_members(phi):
        _dump({
            "eta": eta.as_strings(),
            "p": sig.p,
            "q": sig.q,
            "lambda": lam.to_json(),
        })
    return 0


def cmd_apacket(args: argparse.Namespace) -> int:
    mus = parse_half_list(args.mus)
    mu0 = HalfInt.parse(args.mu0)
    target = Signature(args.r, args.s)
    phi_p = AParameter(mus, mu0, target.n)
    n1 = phi_p.n + 1
    for bits in range(1 << n1):
        signs = tuple(-1 if (bits >> i) & 1 else +1 for i in range(n1))
        eta_p = SignCharacter(signs)
        row: dict = {"eta": {"e0": eta_p.as_strings()[0], "signs": eta_p.as_strings()[1:]}}
        if phi_p.tie_at_i0 and signs[0] != signs[phi_p.i0]:
            row["status"] = "invalid_character"
        else:
            sigma = sigma_from_eta_prime(phi_p, eta_p, target)
            if sigma is None:
                row["status"] = "zero"
            else:
                row["status"] = "nonzero"
                row["blocks"] = sigma.to_json()
        _dump(row)
    return 0


def _parse_weights(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(v) for v in text.replace(",", " ").split())


def cmd_ktype_map(args: argparse.Namespace) -> int:
    sig = Signature(args.p, args.q)
    mu = KType(sig, _parse_weights(args.a), _parse_weights(args.b))
    target = Signature(args.r, args.s)
    m0, n0 = _exponents(args, sig.n, target.n)
    ctx = LiftContext(m0, n0, sig.n, target.n)
    partner = correspond_ktype(mu, ctx, target)
    _dump({
        "mu": mu.to_json(),
        "target": [target.p, target.q],
        "mu_prime": partner.to_json() if partner is not None else None,
    })
    return 0


def _bounds(args: argparse.Namespace) -> EnumerationBounds:
    return EnumerationBounds(
        max_n=args.max_n,
        max_m_minus_n=args.max_dm,
        height=HalfInt.parse(args.height),
    )


def cmd_verify(args: argparse.Namespace) -> int:
    summary = run_suite(args.suite, _bounds(args), emit=not args.quiet, sink=_dump)
    _dump({
        "suite": summary.name,
        "cases": summary.cases,
        "failures": summary.failures,
        "tags": dict(sorted(summary.tags.items())),
    })
    return 1 if summary.failures else 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    count = 0
    for record in iter_enumeration(_bounds(args)):
        count += 1
        _dump(record)
    _dump({"cases": count})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetalift",
        description="Exact theta lifts of discrete series of real unitary groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("lift", help="compute one lift")
    _add_source_flags(sp)
    _add_target_flags(sp)
    _add_exponent_flags(sp)
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("occurs", help="decide nonvanishing only")
    _add_source_flags(sp)
    _add_target_flags(sp)
    _add_exponent_flags(sp)
    sp.set_defaults(func=cmd_occurs)

    sp = sub.add_parser("invariants", help="tower invariants and window counts")
    _add_source_flags(sp)
    sp.add_argument("--m0", type=int, default=None, help="twist exponent, default n mod 2")
    sp.add_argument("--k0", type=int, choices=(0, -1), default=None,
                    help="tower parity, default derived from m0")
    sp.add_argument("--dual", action="store_true", help="use the conjugate-dual orientation")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("packet", help="all members of a tempered packet")
    sp.add_argument("--kappas", required=True, metavar="ENTRIES")
    sp.set_defaults(func=cmd_packet)

    sp = sub.add_parser("apacket", help="all characters of a lift packet on one form")
    sp.add_argument("--mus", required=True, metavar="ENTRIES")
    sp.add_argument("--mu0", required=True)
    _add_target_flags(sp)
    sp.set_defaults(func=cmd_apacket)

    sp = sub.add_parser("ktype-map", help="joint-harmonics K-type partner")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--a", required=True, help="comma-separated integers, may be empty")
    sp.add_argument("--b", required=True, help="comma-separated integers, may be empty")
    _add_target_flags(sp)
    _add_exponent_flags(sp)
    sp.set_defaults(func=cmd_ktype_map)

    sp = sub.add_parser("verify", help="run one verification suite")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--height", default="7/2")
    sp.add_argument("--max-dm", type=int, default=4)
    sp.add_argument("--quiet", action="store_true",
                    help="summary line only, skip per-case records")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="every lift decision in a window")
    sp.add_argument("--max-n", type=int, default=2)
    sp.add_argument("--height", default="5/2")
    sp.add_argument("--max-dm", type=int, default=4)
    sp.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ThetaLiftError, ValueError) as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
