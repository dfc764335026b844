"""Command line interface.  Exit codes: 0 pass, 1 verification failure,
2 usage or parse error."""

from __future__ import annotations

import argparse
import sys

from . import datasets
from .construction import matrix_from_blocks, verify_hadamard, verify_skew
from .equivalence import find_equivalence
from .families import Block, index_set_is_skew, is_skew_type, parameter_identities, verify_sds
from .formats import (
    FormatError,
    SdsFile,
    read_matrix,
    read_sds,
    write_matrix_bin,
    write_matrix_text,
)
from .ring import ORDER_RULES, cyclic_subgroup, paper_indexing
from .search import InfeasibleCardinals, SearchConfig, build_indexing, run_search

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _read_sds(path: str) -> SdsFile:
    text = _read_bytes(path).decode("utf-8")
    if not text.strip():
        raise UsageError(f"{'stdin' if path == '-' else path}: empty SDS input")
    return read_sds(text)


def _write(path: str | None, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _parse_block(n: int, text: str) -> Block:
    tokens = text.replace(",", " ").split()
    try:
        return Block(n, [int(t) % n for t in tokens])
    except ValueError:
        raise UsageError(f"cannot parse block {text!r}") from None


def cmd_orbits(args) -> int:
    H = cyclic_subgroup(args.n, args.gen)
    idx = paper_indexing(args.n, H, order=args.order)
    print(f"# n={args.n} H={{{','.join(map(str, H.elements))}}} orbits={len(idx)}")
    for i, o in enumerate(idx.orbits):
        print(f"alpha_{i}: " + " ".join(map(str, o)))
    return OK


def cmd_expand(args) -> int:
    _write(args.output, _read_sds(args.file).explicit().to_text())
    return OK


def cmd_verify(args) -> int:
    sds = _read_sds(args.file)
    q = sds.quadruple()
    rep = verify_sds(q)
    params = parameter_identities(q)
    yes = {True: "pass", False: "FAIL"}
    print(f"{q.label()} in Z_{q.v}: {yes[rep.passed]}")
    if not rep.passed:
        print(f"  residue {rep.residue} occurs {rep.observed} times, expected {q.lam}")
    print(f"counting identity: {yes[params.counting_identity]}")
    print(f"lambda = sum(k) - v: {yes[params.lambda_relation]}")
    print(f"sum of squares: {params} ({yes[params.sum_of_squares]})")
    ok = rep.passed and params.counting_identity and params.lambda_relation and params.sum_of_squares
    skew = is_skew_type(q.blocks[0])
    if sds.entries[0][0] == "orbits":
        skew = skew and index_set_is_skew(sds.entries[0][1], sds.indexing().pair_count)
    print(f"block 1 skew type: {'yes' if skew else 'no'}")
    if sds.skew:
        ok = ok and skew
    return OK if ok else FAIL


def cmd_build(args) -> int:
    sds = _read_sds(args.file)
    A = matrix_from_blocks(sds.blocks())
    data = write_matrix_bin(A) if args.format == "bin" else write_matrix_text(A)
    _write(args.output, data)
    return OK


def cmd_check_matrix(args) -> int:
    A = read_matrix(_read_bytes(args.file))
    had = verify_hadamard(A)
    skew = verify_skew(A)
    yn = {True: "yes", False: "no"}
    print(f"hadamard: {yn[had]}, skew: {yn[skew]}, order {A.shape[0]}")
    return OK if had and (skew or args.no_skew) else FAIL


def cmd_equiv(args) -> int:
    a = _parse_block(args.n, args.block_a)
    b = _parse_block(args.n, args.block_b)
    f = find_equivalence(a, b)
    print("none" if f is None else f"m={f.m} t={f.t}")
    return OK


def cmd_search(args) -> int:
    cards = None
    if args.cardinals:
        cards = tuple(int(x) for x in args.cardinals.split(","))
        if len(cards) != 4:
            raise UsageError("--cardinals needs four comma-separated integers")
    cfg = SearchConfig(
        v=args.v,
        H_generator=args.gen,
        lambda_target=args.lam,
        cardinal_targets=cards,
        skew_first_block=not args.no_skew,
        seed=args.seed,
        max_restarts=args.restarts,
        max_steps_per_restart=args.steps,
        time_budget=args.budget,
        plateau_cap=args.plateau,
        max_results=args.results,
        order=args.order,
        workers=args.workers,
    )

    def progress(r, s, o):
        print(f"restart={r} step={s} obj={o}", file=sys.stderr, flush=True)

    results = run_search(cfg, progress=progress, log_every=args.log_every)
    H = cyclic_subgroup(cfg.v, cfg.H_generator)
    idx = build_indexing(cfg)
    out = []
    for res in results:
        out.append(
            f"# restart={res.restart} steps={res.steps} objective={res.objective} "
            f"verified={'yes' if res.verified else 'no'}\n"
        )
        sds = SdsFile(
            cfg.v, res.lam, [("orbits", J) for J in res.index_sets],
            H=H.elements, order=cfg.order, skew=cfg.skew_first_block,
        )
        try:
            same = sds.indexing().orbits == idx.orbits
        except ValueError:
            same = False
        if not same:
            sds = sds.explicit()
        out.append(sds.to_text())
    _write(args.output, "".join(out))
    return OK if any(r.verified for r in results) else FAIL


def cmd_paper(args) -> int:
    datasets.self_check()
    case = datasets.get(args.case)
    sds = SdsFile(
        case.v, case.lam, [("orbits", J) for J in case.index_sets],
        H=case.H, order=case.order, skew=True,
    )
    if args.explicit:
        sds = sds.explicit()
    _write(args.output, f"# case {case.id}\n" + sds.to_text())
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewhad", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbits", help="print the negation-paired orbit table")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--gen", type=int, required=True, help="generator of H")
    s.add_argument("--order", choices=ORDER_RULES, default="ascending")
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("expand", help="rewrite orbit-form blocks explicitly")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("verify", help="check an SDS file")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("build", help="assemble the Goethals-Seidel matrix")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("-o", "--output")
    s.add_argument("--format", choices=("text", "bin"), default="text")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("check-matrix", help="check a matrix file for the Hadamard and skew properties")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--no-skew", action="store_true", help="only require the Hadamard property")
    s.set_defaults(func=cmd_check_matrix)

    s = sub.add_parser("equiv", help="find m, t with m*A + t = B")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("block_a")
    s.add_argument("block_b")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("search", help="local search for skew-first-block SDS")
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--gen", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=float, default=60.0, help="seconds")
    s.add_argument("--restarts", type=int, default=1000)
    s.add_argument("--steps", type=int, default=2000, help="steps per restart")
    s.add_argument("--plateau", type=int, default=50)
    s.add_argument("--results", type=int, default=1)
    s.add_argument("--lambda", dest="lam", type=int)
    s.add_argument("--cardinals", help="k1,k2,k3,k4")
    s.add_argument("--order", choices=ORDER_RULES, default="ascending")
    s.add_argument("--no-skew", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--log-every", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("paper", help="emit one of the published families")
    s.add_argument("--case", required=True, choices=sorted(datasets.CASES))
    s.add_argument("--explicit", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, InfeasibleCardinals, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
