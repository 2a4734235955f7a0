"""Command-line interface: ``blocklab table | verify | sweep``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import catalog
from ._modp import is_prime
from .cache import cached_table, resolve_cache_dir
from .chartab import DEFAULT_SEED, CharacterTable, table_to_json
from .cyclo.field import factorize, serialize
from .errors import GroupFileError, NotAGroup, TooLarge
from .group import Group
from .groupfile import content_hash, parse_group
from .verify import CHECK_IDS, FAIL, NA, PASS, SCHEMA_VERSION, VerificationReport, verify_instance

EXIT_OK, EXIT_CHECK_FAILED, EXIT_PARSE, EXIT_AXIOM, EXIT_CAP = 0, 1, 2, 3, 4


@dataclass
class Source:
    id: str
    text: str

    @property
    def key(self) -> str:
        return content_hash(self.text)

    def group(self) -> Group:
        return parse_group(self.text, name=self.id)


def resolve_source(spec: str) -> Source:
    if spec.startswith("builtin:"):
        name = spec.split(":", 1)[1]
        try:
            return Source(spec, catalog.source_text(name))
        except KeyError as exc:
            raise GroupFileError(exc.args[0]) from None
    try:
        text = Path(spec).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise GroupFileError(f"cannot read {spec}: {exc}") from None
    return Source(spec, text)


# -- rendering ------------------------------------------------------------------------


def _cell(v) -> str:
    if v.is_rational():
        return str(v.to_rational())
    return serialize(v)


def render_table_text(table: CharacterTable) -> str:
    G = table.group
    cc = table.classes
    head = [["class", *(f"K{i}" for i in range(len(cc)))]]
    head.append(["order", *(str(G.orders[r]) for r in cc.reps)])
    head.append(["size", *(str(s) for s in cc.sizes)])
    rows = [[f"X{i}", *(_cell(v) for v in chi.values)] for i, chi in enumerate(table)]
    grid = head + rows
    widths = [max(len(r[c]) for r in grid) for c in range(len(grid[0]))]
    lines = ["  ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip() for r in grid]
    lines.insert(3, "")
    return f"character table of {G.name or 'group'} (order {G.n})\n" + "\n".join(lines) + "\n"


def render_report_text(d: dict) -> str:
    out = [
        f"group {d['group']['id']} (order {d['group']['order']}), p = {d['p']}, seed {d['seed']}",
        f"hypothesis C_G(P) = N_G(P): {str(d['hypothesis_holds']).lower()}",
    ]
    for b in d["blocks"]:
        members = ", ".join(f"X{m['index']} (degree {m['degree']}, height {m['height']})" for m in b["members"])
        tag = " principal" if b["principal"] else ""
        out.append(f"block{tag} defect {b['defect']}: {members}")
    width = max((len(c["id"]) for c in d["checks"]), default=0)
    for c in d["checks"]:
        w = json.dumps(c["witness"], sort_keys=True, separators=(",", ":"))
        out.append(f"{c['status']:<14}  {c['id']:<{width}}  {w}")
    return "\n".join(out) + "\n"


def dump_json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


# -- commands ----------------------------------------------------------------------------


def cmd_table(args) -> int:
    src = resolve_source(args.group)
    G = src.group()
    table = cached_table(G, src.key, resolve_cache_dir(args.cache_dir), seed=args.seed)
    sys.stdout.write(table_to_json(table) if args.json else render_table_text(table))
    return EXIT_OK


def _verify_source(src: Source, p: int, seed: int, cache_dir, checks=None) -> VerificationReport:
    G = src.group()
    table = cached_table(G, src.key, cache_dir, seed=seed)
    return verify_instance(G, p, group_id=src.id, table=table, seed=seed, checks=checks)


def cmd_verify(args) -> int:
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECK_IDS]
        if unknown:
            print(f"error: unknown check id(s): {', '.join(unknown)}", file=sys.stderr)
            return EXIT_PARSE
    rep = _verify_source(resolve_source(args.group), args.p, args.seed, resolve_cache_dir(args.cache_dir), checks)
    d = rep.to_dict()
    sys.stdout.write(dump_json(d) if args.json else render_report_text(d))
    return EXIT_OK if rep.ok else EXIT_CHECK_FAILED


def _sweep_entry(name: str, primes: tuple[int, ...] | None, seed: int, cache_dir) -> tuple[str, int, list[dict]]:
    src = resolve_source(f"builtin:{name}")
    G = src.group()
    applicable = [p for p, _ in factorize(G.n)]
    if primes is not None:
        applicable = [p for p in applicable if p in primes]
    reports = []
    if applicable:
        table = cached_table(G, src.key, cache_dir, seed=seed)
        for p in applicable:
            reports.append(verify_instance(G, p, group_id=src.id, table=table, seed=seed).to_dict())
    return name, G.n, reports


def run_sweep(primes: tuple[int, ...] | None, seed: int, cache_dir, jobs: int = 1) -> dict:
    names = catalog.names()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_entry, names, [primes] * len(names), [seed] * len(names), [cache_dir] * len(names)))
    else:
        rows = [_sweep_entry(n, primes, seed, cache_dir) for n in names]
    return {
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "primes": None if primes is None else list(primes),
        "entries": [{"group": f"builtin:{n}", "order": order, "reports": reps} for n, order, reps in rows],
    }


def sweep_ok(sweep: dict) -> bool:
    return all(c["status"] != FAIL for e in sweep["entries"] for r in e["reports"] for c in r["checks"])


def render_sweep_text(sweep: dict) -> str:
    cols = sorted({r["p"] for e in sweep["entries"] for r in e["reports"]} | set(sweep["primes"] or ()))
    header = ["group", "order", *(f"p={p}" for p in cols)]
    rows = [header]
    for e in sweep["entries"]:
        by_p = {r["p"]: r for r in e["reports"]}
        cells = []
        for p in cols:
            r = by_p.get(p)
            if r is None:
                cells.append(".")
                continue
            statuses = [c["status"] for c in r["checks"]]
            cell = "FAIL" if FAIL in statuses else f"ok {statuses.count(PASS)}/{statuses.count(NA)}"
            cells.append(cell + ("*" if r["hypothesis_holds"] else ""))
        rows.append([e["group"].split(":", 1)[1], str(e["order"]), *cells])
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]
    n = sum(len(e["reports"]) for e in sweep["entries"])
    bad = sum(any(c["status"] == FAIL for c in r["checks"]) for e in sweep["entries"] for r in e["reports"])
    lines.append("")
    lines.append("cells: pass/not-applicable counts; * marks C_G(P) = N_G(P); . means p does not divide |G|")
    lines.append(f"{n} instances, {bad} with failures")
    return "\n".join(lines) + "\n"


def cmd_catalog_sweep(args) -> int:
    sweep = run_sweep(args.primes, args.seed, resolve_cache_dir(args.cache_dir), args.jobs)
    sys.stdout.write(dump_json(sweep) if args.json else render_sweep_text(sweep))
    return EXIT_OK if sweep_ok(sweep) else EXIT_CHECK_FAILED


# -- argument parsing ----------------------------------------------------------------------


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _prime_list(text: str) -> tuple[int, ...]:
    return tuple(sorted({_prime(x) for x in text.split(",") if x.strip()}))


def _seed(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not 0 <= s < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return s


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blocklab", description="Character tables, p-blocks and instance checks of Burnside's normal p-complement theorem.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="seed for eigenspace splitting")
    common.add_argument("--cache-dir", help=f"table cache directory (default: ${'{'}BLOCKLAB_CACHE{'}'} if set)")

    grp = argparse.ArgumentParser(add_help=False)
    grp.add_argument("--group", required=True, help="group file path or builtin:NAME")

    t = sub.add_parser("table", parents=[grp, common], help="print a character table")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[grp, common], help="run the checks on one (G, p)")
    v.add_argument("-p", type=_prime, required=True)
    fmt = v.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true", help="(default)")
    v.add_argument("--checks", help=f"comma list from: {', '.join(CHECK_IDS)}")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", parents=[common], help="verify every builtin group at every prime dividing its order")
    s.add_argument("--primes", type=_prime_list, help="comma list restricting the primes")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true", help="(default)")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_catalog_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GroupFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotAGroup as exc:
        print(f"error: not a group: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
