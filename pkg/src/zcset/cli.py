"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 bad input or parameters.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construct import ConstructionParams, build_zcs
from .fileformat import family_from_json, family_to_json, parse_family, render_family
from .search import DEFAULT_CAP, SearchSpec, exhaustive_max_set_size
from .verify import bounds, classify_optimality, max_zcz_width, verify_zcs

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _int_list(text: str, sep: str = ",") -> list[int]:
    try:
        return [int(x) for x in text.split(sep) if x.strip()]
    except ValueError:
        raise UsageError(f"expected integers separated by '{sep}', got {text!r}") from None


def parse_blocks(text: str) -> tuple[tuple[int, ...], ...]:
    """``"1,3;2"`` -> ((1, 3), (2,)); order within a block is the path order."""
    blocks = tuple(tuple(_int_list(chunk)) for chunk in text.split(";"))
    if any(not blk for blk in blocks):
        raise UsageError(f"empty block in {text!r}")
    return blocks


def _floor_text(N: int, L: int, Z: int) -> str:
    return f"⌊{N * L}/{Z}⌋"


def _verdict(M: int, N: int, L: int, Z: int) -> str:
    bound = (N * L) // Z
    if M == bound:
        return f"optimal ({M} = {_floor_text(N, L, Z)})"
    return f"suboptimal ({M} < {_floor_text(N, L, Z)} = {bound})"


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_construct(args) -> int:
    blocks = parse_blocks(args.blocks)
    beta = tuple(_int_list(args.beta)) if args.beta is not None else None
    params = ConstructionParams(
        q=args.q, b=args.b, m=args.m, n=args.n, blocks=blocks, beta=beta, k=args.k
    )
    family = build_zcs(params)
    M, N, L = family.params
    Z = params.zone_width
    cls = classify_optimality(family)
    summary = f"constructed (M,N,L,Z) = ({M},{N},{L},{Z}); measured Z={cls.Z}; {cls.verdict}"
    if args.out is None:
        sys.stdout.write(render_family(family))
        print(summary, file=sys.stderr)
    else:
        _write(args.out, render_family(family))
        print(summary)
    return EXIT_OK


def cmd_verify(args) -> int:
    family = parse_family(_read(args.file))
    M, N, L = family.params
    Z = args.z if args.z is not None else family.claimed_Z
    if Z is not None and not 1 <= Z <= L:
        raise UsageError(f"Z={Z} outside [1, {L}]")
    measured = max_zcz_width(family)
    if Z is None:
        Z = max(measured, 1)
    report = verify_zcs(family, Z)
    print(f"parameters M={M} N={N} L={L} q={family.q}")
    print(f"measured_Z={measured}")
    b = bounds(N, L, Z)
    print(
        f"bounds at Z={Z}: theorem1={b.theorem1_bound} fan={b.fan_bound} "
        f"welch_feng={float(b.welch_feng_bound):.4f}"
    )
    if report.ok:
        print(f"ZCS ok, Z={Z}, {_verdict(M, N, L, Z)}")
        return EXIT_OK
    w = report.failures[0]
    print(
        f"ZCS FAILED at Z={Z}: {len(report.failures)} violation(s); "
        f"first witness p={w.p} t={w.t} u={w.u} value={w.value}"
    )
    return EXIT_FAIL


def cmd_bounds(args) -> int:
    if args.n < 1 or args.l < 1:
        raise UsageError("N and L must be positive")
    zs = range(1, args.l + 1) if args.sweep else [args.z]
    rows = ["Z\ttheorem1\tfan\twelch_feng"]
    for Z in zs:
        b = bounds(args.n, args.l, Z)
        rows.append(f"{Z}\t{b.theorem1_bound}\t{b.fan_bound}\t{float(b.welch_feng_bound):.4f}")
    print("\n".join(rows))
    return EXIT_OK


def cmd_search(args) -> int:
    spec = SearchSpec(
        q=args.q, N=args.n_flock, L=args.l, Z=args.z, max_candidates=args.cap, seed=args.seed
    )
    if not spec.within_cap and not args.allow_partial:
        raise UsageError(
            f"search space q^(N*L) = {spec.n_candidates} exceeds cap {spec.max_candidates}; "
            "pass --allow-partial to search a prefix"
        )
    res = exhaustive_max_set_size(spec)
    print(f"best_M={res.best_M}")
    print(f"bound={res.bound}")
    print(f"exhaustive={'yes' if res.proven_exhaustive else 'no'}")
    print(f"candidates={res.candidates_examined} vertices={res.vertices}")
    if args.out and res.witness is not None:
        _write(args.out, render_family(res.witness))
    return EXIT_OK


def cmd_export(args) -> int:
    family = parse_family(_read(args.file))
    _write(args.out, family_to_json(family))
    return EXIT_OK


def cmd_import(args) -> int:
    family = family_from_json(_read(args.file))
    _write(args.out, render_family(family))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zcset", description="Construct, verify and bound aperiodic Z-complementary sets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an optimal (b^n, 2^k, b^n, 2^k) family")
    p.add_argument("--q", type=int, required=True, help="even alphabet size")
    p.add_argument("--b", type=int, required=True, help="base of the offset variables, b | q")
    p.add_argument("--m", type=int, required=True, help="number of binary variables")
    p.add_argument("--n", type=int, required=True, help="number of base-b variables")
    p.add_argument("--k", type=int, help="number of blocks (checked against --blocks)")
    p.add_argument("--blocks", required=True, help='ordered blocks, e.g. "1,3;2"')
    p.add_argument("--beta", help="beta_0,...,beta_m (default all zero)")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a family file")
    p.add_argument("file")
    p.add_argument("--z", type=int, help="zone width to check (default: claimed, else measured)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="set-size bounds as TSV")
    p.add_argument("--n", type=int, required=True, help="flock size N")
    p.add_argument("--l", type=int, required=True, help="sequence length L")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--z", type=int)
    g.add_argument("--sweep", action="store_true", help="all Z = 1..L")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exhaustive maximum set size")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-flock", type=int, required=True, help="flock size N")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max flocks to enumerate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-partial", action="store_true")
    p.add_argument("--out", help="write the witness family here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export", help="family file -> JSON")
    p.add_argument("file")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("import", help="JSON -> family file")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_import)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"zcset {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
