"""Command-line front end.

Exit codes: 0 success, 1 a computed equality failed, 2 bad input,
3 refused by the Macaulay size guard or the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import eigenvariety as ev
from .corpus import default_corpus, extended_corpus
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    cartesian,
    coalesce,
    degrees,
    from_json,
    gen_loose_path,
    is_connected,
)
from .macaulay import DEFAULT_GUARD, SizeGuardError, tensor_charpoly_full
from .multiplicity import am_rho_adjacency, am_zero_laplacian, verify_main_theorem
from .tensor import hypergraph_tensor

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    guard: int = DEFAULT_GUARD
    tol: float = 1e-12
    fmt: str = "text"
    enum_cap: int = ev.DEFAULT_ENUM_CAP

    def __post_init__(self):
        if self.guard <= 0 or self.enum_cap <= 0:
            raise ValueError("caps must be positive")


class InputError(Exception):
    pass


def fraction_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def load_hypergraph(path: str) -> Hypergraph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    try:
        return from_json(data)
    except HypergraphError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _int(tok: str) -> int:
    return int(tok.split("=", 1)[-1])


def _operand(tok: str) -> Hypergraph:
    named = dict(extended_corpus())
    if tok in named:
        return named[tok]
    if os.path.exists(tok):
        return load_hypergraph(tok)
    raise InputError(f"unknown operand {tok!r}: not a corpus name or file")


def parse_family(tokens: list[str]) -> tuple[str, Hypergraph]:
    """``NAME ARGS``; integer args may be written ``k=3``."""
    if not tokens:
        raise InputError("missing family name")
    name, args = tokens[0], tokens[1:]
    label = " ".join(tokens)
    try:
        if name in ("hypertree", "loose_path"):
            return label, gen_loose_path(_int(args[0]), _int(args[1]))
        if name == "power":
            extra = (_int(args[2]),) if len(args) > 2 else ()
            return label, ev.build_family(ev.Family("power", (_int(args[0]), args[1].split("=")[-1], *extra)))
        if name in ("edge", "complete", "squid", "sunflower"):
            return label, ev.build_family(ev.Family(name, tuple(_int(a) for a in args)))
        if name == "cartesian":
            return label, cartesian(_operand(args[0]), _operand(args[1]))
        if name == "coalesce":
            h1, h2 = _operand(args[0]), _operand(args[1])
            v1 = _int(args[2]) if len(args) > 2 else h1.n
            v2 = _int(args[3]) if len(args) > 3 else 1
            return label, coalesce(h1, v1, h2, v2)
    except (IndexError, ValueError) as exc:
        raise InputError(f"bad arguments for family {name!r}: {exc}") from exc
    raise InputError(f"unknown family {name!r}")


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_info(cfg: RunConfig, h: Hypergraph) -> int:
    conn = is_connected(h)
    payload = {"k": h.k, "n": h.n, "m": h.m, "degrees": degrees(h), "connected": conn}
    text = f"{h.summary()} connected={'true' if conn else 'false'}\ndegrees: {' '.join(map(str, degrees(h)))}"
    _emit(cfg, payload, text)
    if not conn:
        print("warning: hypergraph is disconnected; theorem operations require connectivity", file=sys.stderr)
    return 0


def cmd_charpoly(cfg: RunConfig, h: Hypergraph, op: str) -> int:
    res = tensor_charpoly_full(hypergraph_tensor(h, op), cfg.guard)
    phi = res.poly
    tz = phi.trailing_zeros()
    payload = {
        "operator": op,
        "degree": phi.degree,
        "trailing_zeros": tz,
        "basis_size": res.basis_size,
        "coefficients": [fraction_str(c) for c in phi.coeffs],
    }
    lines = [f"operator={op} degree={phi.degree} trailing_zeros={tz} basis_size={res.basis_size}"]
    for i in range(phi.degree, -1, -1):
        c = phi.coeffs[i]
        if c:
            lines.append(f"  x^{i}: {fraction_str(c)}")
    _emit(cfg, payload, "\n".join(lines))
    return 0


def cmd_multiplicity(cfg: RunConfig, h: Hypergraph) -> int:
    rho = am_rho_adjacency(h, cfg.guard)
    zero = am_zero_laplacian(h, cfg.guard)
    payload = {"am_rho": rho, "am_zero_laplacian": zero}
    _emit(cfg, payload, f"am(rho, A)={rho} am(0, L)={zero}")
    return 0


def cmd_eigenvariety(cfg: RunConfig, h: Hypergraph, enumerate_: bool) -> int:
    desc = ev.describe(h)
    phases = None
    if enumerate_:
        phases = ev.enumerate_phases(h, cap=cfg.enum_cap)
        for c in phases:
            if not (ev.verify_phase(h, c, "adj") and ev.verify_phase(h, c, "lap")):
                raise AssertionError(f"phase {c} failed certification")
    payload = desc.to_json(phases)
    lines = [
        f"invariants={list(desc.invariants)} r={desc.r} cardinality={desc.cardinality} group={desc.group}"
    ]
    if phases is not None:
        lines += [" ".join(map(str, c)) for c in phases]
        lines.append(f"{len(phases)} phase vectors, all certified")
    _emit(cfg, payload, "\n".join(lines))
    return 0


def _report_line(name: str, rep) -> str:
    vals = " ".join(f"{k}={v}" for k, v in rep.values.items())
    skip = f" skipped={','.join(rep.skipped)}" if rep.skipped else ""
    status = "ok" if rep.all_equal else "FAIL"
    return f"{name}: {rep.summary} {vals}{skip} [{status}]"


def cmd_verify(cfg: RunConfig, instances: list[tuple[str, Hypergraph]], timings: bool = False) -> int:
    reports = []
    for name, h in instances:
        reports.append((name, verify_main_theorem(h, cfg.guard, cfg.enum_cap)))
    good = sum(1 for _, r in reports if r.all_equal)
    total = len(reports)
    summary = f"{good}/{total} equalities hold"
    payload = {
        "reports": [dict(name=name, **r.to_json(timings)) for name, r in reports],
        "summary": summary,
        "ok": good == total,
    }
    text = "\n".join([_report_line(name, r) for name, r in reports] + [summary])
    _emit(cfg, payload, text)
    return 0 if good == total else EXIT_FAIL


def cmd_generate(tokens: list[str], out: str | None) -> int:
    _, h = parse_family(tokens)
    text = json.dumps(h.to_json()) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperspec", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--guard", type=int, default=None, help="Macaulay monomial cap (env HYPERSPEC_GUARD)")
    p.add_argument("--enum-cap", type=int, default=ev.DEFAULT_ENUM_CAP)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", help="basic data of a hypergraph file")
    s.add_argument("input")

    s = sub.add_parser("charpoly", help="exact characteristic polynomial")
    s.add_argument("input")
    s.add_argument("--op", choices=("adj", "lap", "slap"), default="adj")

    s = sub.add_parser("multiplicity", help="am(rho, A) and am(0, L)")
    s.add_argument("input")

    s = sub.add_parser("eigenvariety", help="Smith-form description of V_rho(A) = V_0(L)")
    s.add_argument("input")
    s.add_argument("--enumerate", action="store_true")

    s = sub.add_parser("verify", help="four-way equality check")
    s.add_argument("input", nargs="?")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--corpus", nargs="?", const="default", choices=("default", "extended"))
    g.add_argument("--family", nargs=argparse.REMAINDER)
    s.add_argument("--timings", action="store_true")

    s = sub.add_parser("generate", help="write a family member as JSON")
    s.add_argument("family", nargs="+")
    s.add_argument("-o", "--output")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    guard = args.guard
    if guard is None:
        env = os.environ.get("HYPERSPEC_GUARD")
        guard = int(env) if env else DEFAULT_GUARD
    try:
        cfg = RunConfig(args.command, guard=guard, fmt=args.format, enum_cap=args.enum_cap)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "generate":
            return cmd_generate(args.family, args.output)
        if args.command == "verify":
            if args.corpus:
                inst = default_corpus() if args.corpus == "default" else extended_corpus()
            elif args.family:
                inst = [parse_family(args.family)]
            elif args.input:
                inst = [(args.input, load_hypergraph(args.input))]
            else:
                parser.error("verify needs an input file, --corpus or --family")
            return cmd_verify(cfg, inst, args.timings)
        h = load_hypergraph(args.input)
        if args.command == "info":
            return cmd_info(cfg, h)
        if args.command == "charpoly":
            return cmd_charpoly(cfg, h, args.op)
        if args.command == "multiplicity":
            return cmd_multiplicity(cfg, h)
        if args.command == "eigenvariety":
            return cmd_eigenvariety(cfg, h, args.enumerate)
    except (SizeGuardError, ev.EnumerationCapError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, HypergraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parser.error(f"unknown command {args.command}")
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
