"""Command-line entry point: ``fockblocks {core,decomp,apply,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
bound exceeded.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, fields, replace
from typing import Dict, List, Optional, Sequence

from .canonical import decomposition_matrix, inverse_decomposition_matrix
from .exact_ring import LaurentPoly
from .fock import (
    FockVector,
    SpinConvention,
    apply_f,
    apply_f_divided,
    apply_heisenberg_b,
    apply_heisenberg_b_adjoint,
    apply_S,
    apply_V,
)
from .lusztig import CharacterVector, lusztig_L
from .matrices import TransitionMatrix
from .partitions import Partition, core_and_quotient, core_to_charge, is_core
from .verify import DEFAULT_NMAX, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
FORMATS = ("json", "latex", "csv", "plain")
CANONICAL_SUITES = ("steinberg",)


class UsageError(Exception):
    pass


class ResourceError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every command; a JSON config file may override the defaults."""

    e: int = 2
    d: int = 0
    max_n: int = 10
    max_canonical_n: int = 8
    format: Optional[str] = None
    spin: str = "arm"
    vpow: int = -1
    quotient_order: str = "runner"
    f_rule: str = "above"

    def __post_init__(self) -> None:
        if not isinstance(self.e, int) or self.e < 2:
            raise UsageError(f"e must be an integer >= 2, got {self.e!r}")
        if not isinstance(self.d, int):
            raise UsageError("d must be an integer")
        for name in ("max_n", "max_canonical_n"):
            val = getattr(self, name)
            if not isinstance(val, int) or val < 1:
                raise UsageError(f"{name} must be a positive integer")
        if self.format is not None and self.format not in FORMATS:
            raise UsageError(f"format must be one of {', '.join(FORMATS)}")
        if self.spin not in ("arm", "leg"):
            raise UsageError("spin must be 'arm' or 'leg'")
        if self.vpow not in (-1, 1):
            raise UsageError("vpow must be -1 or 1")
        if self.quotient_order not in ("runner", "reversed"):
            raise UsageError("quotient_order must be 'runner' or 'reversed'")
        if self.f_rule not in ("above", "below"):
            raise UsageError("f_rule must be 'above' or 'below'")

    @property
    def spin_convention(self) -> SpinConvention:
        return SpinConvention(self.spin, self.vpow)

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise UsageError("config must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(unknown)}")
        return cls(**data)


# -- parsing helpers ------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def latex_label(lam: Partition) -> str:
    """Row label in the facsimile style: parts run together ('211'), '0' for the empty partition."""
    if not lam:
        return "0"
    if lam[0] >= 10:
        return ",".join(map(str, lam))
    return "".join(map(str, lam))


def _read_stdin_json() -> dict:
    try:
        data = json.loads(sys.stdin.read())
    except json.JSONDecodeError as exc:
        raise UsageError(f"stdin is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("stdin must hold a JSON object")
    return data


def _coefficient(val) -> LaurentPoly:
    if isinstance(val, bool):
        raise UsageError("boolean coefficient")
    if isinstance(val, int):
        return LaurentPoly(val)
    if isinstance(val, str):
        return LaurentPoly.parse(val)
    if isinstance(val, dict):
        return LaurentPoly.from_json(val)
    raise UsageError(f"unsupported coefficient {val!r}")


def _input_entries(text: str) -> Dict[Partition, LaurentPoly]:
    if text != "-":
        return {parse_partition(text): LaurentPoly(1)}
    data = _read_stdin_json()
    raw = data.get("entries", data)
    try:
        return {Partition.parse(k): _coefficient(v) for k, v in raw.items()}
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# -- rendering -------------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def render_matrix(m: TransitionMatrix, fmt: str) -> str:
    return m.render(fmt, latex_label=latex_label)


def render_entries(entries: Dict[str, object], fmt: str, pretty: str, latex: str) -> str:
    if fmt == "json":
        return _dump(entries)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["partition", "coefficient"])
        for k, v in entries.items():
            w.writerow([k, v])
        return buf.getvalue()
    if fmt == "latex":
        return latex + "\n"
    return pretty + "\n"


def _latex_vector(entries: Dict[Partition, object], basis) -> str:
    """Render a combination with basis(label) for each basis element."""
    if not entries:
        return "0"
    out = []
    for lam, c in entries.items():
        c = c if isinstance(c, LaurentPoly) else LaurentPoly(c)
        base = basis(latex_label(lam))
        if c == 1 or c == -1:
            term, neg = base, c == -1
        elif c.is_constant():
            term, neg = f"{abs(c.eval_one())}{base}", c.eval_one() < 0
        else:
            term, neg = f"({_latex_poly(c)}){base}", False
        out.append((("-" if neg else "") if not out else (" - " if neg else " + ")) + term)
    return "".join(out)


def _chi(label: str) -> str:
    return f"\\chi_{{{label}}}"


def _ket(label: str) -> str:
    return f"|{label}\\rangle"


def _latex_poly(c: LaurentPoly) -> str:
    out = []
    for k, a in sorted(c.terms(), key=lambda t: (abs(t[0]), t[0])):
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("v" if k == 1 else f"v^{{{k}}}")
        out.append((("-" if a < 0 else "") if not out else (" - " if a < 0 else " + ")) + body)
    return "".join(out)


# -- commands ----------------------------------------------------------------------

def cmd_core(args, cfg: RunConfig, out) -> int:
    lam = parse_partition(args.partition)
    core, quot = core_and_quotient(lam, cfg.e)
    comps = [list(q) for q in quot]
    if cfg.quotient_order == "reversed":
        comps.reverse()
    charge = core_to_charge(core, cfg.e, cfg.d)
    fmt = cfg.format or "plain"
    record = {"partition": list(lam), "e": cfg.e, "d": cfg.d, "core": list(core), "quotient": comps, "charge": list(charge.charges)}
    if fmt == "json":
        out.write(_dump(record))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["partition", "e", "d", "core", "quotient", "charge"])
        w.writerow([str(lam), cfg.e, cfg.d, _compact(record["core"]), _compact(comps), _compact(record["charge"])])
        out.write(buf.getvalue())
    elif fmt == "latex":
        quot_tex = "(" + ",".join(latex_label(Partition(q)) if q else r"\emptyset" for q in comps) + ")"
        core_tex = latex_label(core) if core else r"\emptyset"
        out.write(f"\\kappa={core_tex},\\quad \\lambda^{{(e)}}={quot_tex},\\quad s=({','.join(map(str, record['charge']))})\n")
    else:
        out.write(f"core {_compact(record['core'])}, quotient {_compact(comps)}, charge {_compact(record['charge'])}\n")
    return EXIT_OK


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_decomp(args, cfg: RunConfig, out) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be non-negative")
    if n > cfg.max_canonical_n:
        raise ResourceError(f"n={n} exceeds the canonical-basis bound {cfg.max_canonical_n} (raise it with --max-n)")
    build = inverse_decomposition_matrix if args.inverse else decomposition_matrix
    m = build(n, cfg.e, generic=args.generic, f_rule=cfg.f_rule)
    if args.block is not None:
        core = parse_partition(args.block)
        if not is_core(core, cfg.e):
            raise UsageError(f"{core} is not an {cfg.e}-core")
        labels = [l for l in m.labels if core_and_quotient(l, cfg.e)[0] == core]
        if not labels:
            raise UsageError(f"no partition of {n} has {cfg.e}-core {core}")
    elif args.all_blocks:
        labels = list(m.labels)
    else:
        # defect-zero blocks (labels that are themselves e-cores) are 1x1 identities; leave them out
        labels = [l for l in m.labels if not is_core(l, cfg.e)] or list(m.labels)
    out.write(render_matrix(m.restrict(labels), cfg.format or "plain"))
    return EXIT_OK


def cmd_apply(args, cfg: RunConfig, out) -> int:
    e, spin = cfg.e, cfg.spin_convention
    entries = _input_entries(args.to)
    top = max((l.size for l in entries), default=0)
    fmt = cfg.format or "json"
    op = args.operator

    if op == "L":
        if args.mu is None:
            raise UsageError("apply L needs --mu")
        mu = parse_partition(args.mu)
        _check_bound(top + e * mu.size, cfg)
        ints = {}
        for lam, c in entries.items():
            if not c.is_constant():
                raise UsageError("L acts on characters: coefficients must be integers")
            ints[lam] = c.eval_one()
        res = lusztig_L(CharacterVector(ints), mu, e, spin)
        payload = res.entries_json()
        latex = _latex_vector({l: res.entries[l] for l in res.support()}, _chi)
        out.write(render_entries(payload, fmt, str(res), latex))
        return EXIT_OK

    x = FockVector(entries, e, cfg.d)
    if op == "V":
        k = _need(args.k, "apply V needs --k")
        _check_bound(top + e * k, cfg)
        res = apply_V(x, k, spin)
    elif op == "S":
        if args.mu is None:
            raise UsageError("apply S needs --mu")
        mu = parse_partition(args.mu)
        _check_bound(top + e * mu.size, cfg)
        res = apply_S(x, mu, spin)
    elif op == "b":
        r = _need(args.r if args.r is not None else args.k, "apply b needs --r")
        if r < 1:
            raise UsageError("--r must be positive")
        if args.adjoint:
            res = apply_heisenberg_b_adjoint(x, r, spin)
        else:
            _check_bound(top + e * r, cfg)
            res = apply_heisenberg_b(x, r, spin)
    elif op == "f":
        r = _need(args.r, "apply f needs --r")
        if not 0 <= r < e:
            raise UsageError(f"--r must be a residue in 0..{e - 1}")
        k = 1 if args.k is None else args.k
        _check_bound(top + k, cfg)
        res = apply_f(x, r, cfg.f_rule) if k == 1 else apply_f_divided(x, r, k, cfg.f_rule)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown operator {op}")

    support = res.support()
    if args.at_v is not None:
        vals = {lam: int(res.entries[lam].evaluate(args.at_v)) for lam in support}
        vals = {lam: c for lam, c in vals.items() if c}
        payload = {str(lam): c for lam, c in vals.items()}
        pretty = _pretty_ints(vals)
        latex = _latex_vector(vals, _ket)
    else:
        payload = res.to_json() if fmt == "json" else {str(l): str(res.entries[l]) for l in support}
        pretty = str(res)
        latex = _latex_vector({l: res.entries[l] for l in support}, _ket)
    out.write(render_entries(payload, fmt, pretty, latex))
    return EXIT_OK


def _pretty_ints(vals: Dict[Partition, int]) -> str:
    if not vals:
        return "0"
    out = []
    for lam, c in vals.items():
        mag = "" if abs(c) == 1 else str(abs(c))
        term = f"{mag}|{lam}>"
        out.append((("-" if c < 0 else "") if not out else (" - " if c < 0 else " + ")) + term)
    return "".join(out)


def _need(val, msg: str) -> int:
    if val is None:
        raise UsageError(msg)
    return val


def _check_bound(n: int, cfg: RunConfig) -> None:
    if n > cfg.max_n:
        raise ResourceError(f"result degree {n} exceeds the bound {cfg.max_n} (raise it with --max-n)")


def cmd_verify(args, cfg: RunConfig, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for s in names:
        nmax = DEFAULT_NMAX[s] if args.nmax is None else args.nmax
        bound = cfg.max_canonical_n if s in CANONICAL_SUITES else cfg.max_n
        if nmax > bound:
            raise ResourceError(f"suite {s} with nmax={nmax} exceeds the bound {bound} (raise it with --max-n)")
    reports = [r for s in names for r in run_suite(s, cfg.e, args.nmax, cfg.spin_convention)]
    fmt = cfg.format or "plain"
    if fmt == "json":
        out.write(_dump({"passed": all(r.passed for r in reports), "suites": [r.to_json() for r in reports]}))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "case", "result", "detail"])
        for r in reports:
            for c in r.cases:
                w.writerow([c.suite, c.name, "PASS" if c.passed else "FAIL", c.detail])
        out.write(buf.getvalue())
    else:
        for r in reports:
            for c in r.cases:
                out.write(c.line() + "\n")
            out.write(f"{r.suite} e={r.e} nmax={r.nmax}: {r.summary()}\n")
        if len(reports) > 1:
            ok = all(r.passed for r in reports)
            total = sum(len(r.cases) for r in reports)
            bad = sum(len(r.failures) for r in reports)
            out.write(f"all: PASS ({total} cases)\n" if ok else f"all: FAIL ({bad} of {total} cases failed)\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- argument parsing -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit with status 2
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--e", type=int, default=argparse.SUPPRESS, help="modulus e >= 2")
    p.add_argument("--d", type=int, default=argparse.SUPPRESS, help="charge total d (default 0)")
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    p.add_argument("--config", default=argparse.SUPPRESS, help="JSON file with convention overrides")
    p.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help="raise every size bound to this n")
    p.add_argument("--spin", choices=("arm", "leg"), default=argparse.SUPPRESS, help="ribbon spin statistic")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="fockblocks", description="Fock-space canonical bases and unipotent blocks.", parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("core", parents=[common], help="e-core, e-quotient and charge vector")
    p.add_argument("partition", help='partition literal such as "3,1"; "" is the empty partition')

    p = sub.add_parser("decomp", parents=[common], help="decomposition matrix D_n or its inverse")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--inverse", action="store_true", help="rows G-(lambda) at v = 1, the inverse of D_n")
    p.add_argument("--generic", action="store_true", help="keep v generic")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--block", metavar="CORE", help="restrict to the block with this e-core")
    g.add_argument("--all-blocks", action="store_true", help="include defect-zero blocks")

    p = sub.add_parser("apply", parents=[common], help="apply V, S, L, b or f")
    p.add_argument("operator", choices=("V", "S", "L", "b", "f"))
    p.add_argument("--to", required=True, help='partition literal, or "-" to read a JSON vector from stdin')
    p.add_argument("--mu", help="partition for S and L")
    p.add_argument("--k", type=int, help="strip weight for V, divided power for f")
    p.add_argument("--r", type=int, help="degree for b, residue for f")
    p.add_argument("--adjoint", action="store_true", help="apply the adjoint b'_r instead of b_r")
    p.add_argument("--at-v", type=int, choices=(1, -1), help="specialize v")

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--nmax", type=int, help="largest n in the suite")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig.from_file(ns.config) if getattr(ns, "config", None) else RunConfig()
    over = {}
    for key in ("e", "d", "format", "spin"):
        if hasattr(ns, key):
            over[key] = getattr(ns, key)
    if hasattr(ns, "max_n"):
        over["max_n"] = over["max_canonical_n"] = ns.max_n
    return replace(cfg, **over) if over else cfg


COMMANDS = {"core": cmd_core, "decomp": cmd_decomp, "apply": cmd_apply, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        ns = build_parser().parse_args(argv)
        cfg = _config(ns)
        if getattr(ns, "nmax", None) is not None and ns.nmax < 0:
            raise UsageError("--nmax must be non-negative")
        return COMMANDS[ns.command](ns, cfg, out)
    except UsageError as exc:
        print(f"fockblocks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"fockblocks: resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
