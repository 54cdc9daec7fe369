"""Command line driver.

    dahaknots macdonald --n 2
    dahaknots torus --n 2 --r 2 --s 3 --family sign
    dahaknots iterated --n 2 --pairs "2,3;2,5"
    dahaknots cd --n 2 --pairs "2,3;2,5"
    dahaknots oracle --n 2 --pairs "2,3;2,5" --convention topological
    dahaknots verify --n 2 --pairs "2,3" --convention newton
    dahaknots selftest

Exit codes: 0 ok, 1 verification mismatch (or pole), 2 usage error, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import gcd

from . import invariants as inv
from .exactalg import LaurentQ, PoleError, RatQT, monomial_ratio, specialize_t
from .joracle import NEWTON, TOPOLOGICAL, oracle_jones
from .macdonald import macdonald_poly

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
COMMANDS = ("macdonald", "torus", "iterated", "cd", "oracle", "verify", "selftest")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int = 1
    pairs: tuple = ()
    convention: str = TOPOLOGICAL
    family: str | None = None
    format: str = "text"
    output: str | None = None


def parse_pairs(text: str):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        bits = chunk.split(",")
        if len(bits) != 2:
            raise UsageError(f"malformed pair {chunk!r}: expected 'r,s'")
        try:
            r, s = int(bits[0]), int(bits[1])
        except ValueError:
            raise UsageError(f"malformed pair {chunk!r}: entries must be integers") from None
        if gcd(r, s) != 1:
            raise UsageError(f"pair {chunk!r} is not coprime: gcd({r},{s}) = {gcd(r, s)}")
        pairs.append((r, s))
    if not pairs:
        raise UsageError("empty pair list")
    return tuple(pairs)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    p = _Parser(prog="dahaknots", description="DAHA knot polynomials and a colored Jones oracle")
    sub = p.add_subparsers(dest="command")
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output", default=None)
        if name == "selftest":
            continue
        sp.add_argument("--n", type=int, required=True)
        if name == "macdonald":
            continue
        if name in ("torus", "verify"):
            sp.add_argument("--r", type=int)
            sp.add_argument("--s", type=int)
        if name != "torus":
            sp.add_argument("--pairs")
            sp.add_argument("--convention", choices=(TOPOLOGICAL, NEWTON), default=None)
        if name in ("torus", "verify"):
            sp.add_argument("--family", choices=inv.FAMILIES, default=None)
    return p


def parse_args(argv) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    if ns.command is None:
        raise UsageError("missing command; one of " + ", ".join(COMMANDS))
    cfg = RunConfig(ns.command, format=ns.format, output=ns.output)
    if ns.command == "selftest":
        return cfg
    if ns.n < 1:
        raise UsageError(f"--n {ns.n}: color must be >= 1")
    cfg.n = ns.n
    if ns.command == "macdonald":
        cfg.n = ns.n  # p_n itself; n >= 1 kept for a uniform interface
        return cfg
    r, s = getattr(ns, "r", None), getattr(ns, "s", None)
    pairs_text = getattr(ns, "pairs", None)
    if r is not None or s is not None:
        if r is None or s is None:
            raise UsageError("--r and --s must be given together")
        if gcd(r, s) != 1:
            raise UsageError(f"--r {r} --s {s}: gcd({r},{s}) = {gcd(r, s)} != 1")
        if pairs_text:
            raise UsageError("give either --pairs or --r/--s")
        cfg.pairs = ((r, s),)
    elif pairs_text:
        cfg.pairs = parse_pairs(pairs_text)
    else:
        raise UsageError("a cable specification is required (--pairs or --r/--s)")
    conv = getattr(ns, "convention", None)
    if ns.command == "cd":
        conv = conv or NEWTON
    cfg.convention = conv or TOPOLOGICAL
    fam = getattr(ns, "family", None)
    if ns.command == "torus":
        fam = fam or inv.CHEREDNIK
        if fam not in (inv.CHEREDNIK, inv.SIGN):
            raise UsageError(f"--family {fam}: torus takes cherednik or sign")
    elif ns.command == "verify":
        fam = fam or (inv.CD if cfg.convention == NEWTON else inv.ITERATED)
    elif ns.command == "iterated":
        fam = inv.ITERATED
    elif ns.command == "cd":
        fam = inv.CD
    cfg.family = fam
    if fam in (inv.CHEREDNIK, inv.SIGN) and len(cfg.pairs) != 1:
        raise UsageError(f"family {fam} takes a single pair")
    return cfg


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _laurent_q_json(v: LaurentQ):
    return {"num": v.to_json(), "den": [[0, 0, "1"]]}


def _record(cfg, value_json, verify=None, family=None):
    return {
        "family": family or cfg.family or cfg.command,
        "n": cfg.n,
        "pairs": [list(p) for p in cfg.pairs],
        "convention": cfg.convention,
        "value": value_json,
        "verify": verify,
    }


def _emit(cfg, text: str, record: dict, out):
    payload = json.dumps(record, sort_keys=False) if cfg.format == "json" else text
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(payload + "\n")
    else:
        out.write(payload + "\n")


def _diff(a: LaurentQ, b: LaurentQ) -> str:
    lines = []
    keys = sorted(set(a.terms) | set(b.terms))
    for e in keys:
        x, y = a.terms.get(e, 0), b.terms.get(e, 0)
        if x != y:
            lines.append(f"  q^{e}: computed {x}, oracle {y}")
    return "\n".join(lines)


def _spec(cfg) -> inv.CableSpec:
    return inv.CableSpec(cfg.pairs, cfg.convention)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def run_macdonald(cfg, out):
    p = macdonald_poly(cfg.n)
    text = "\n".join(f"m{k}: {c.to_text()}" for k, c in p.items())
    rec = _record(cfg, {f"m{k}": c.to_json() for k, c in p.items()}, family="macdonald")
    rec["pairs"] = []
    _emit(cfg, f"p_{cfg.n} =\n{text}", rec, out)
    return EXIT_OK


def run_compute(cfg, out):
    res = inv.compute(cfg.family, cfg.n, _spec(cfg))
    _emit(cfg, res.value.to_text(), _record(cfg, res.value.to_json()), out)
    return EXIT_OK


def run_oracle(cfg, out):
    v = oracle_jones(cfg.n, cfg.pairs, cfg.convention)
    _emit(cfg, v.to_text(), _record(cfg, _laurent_q_json(v), family="oracle"), out)
    return EXIT_OK


def verify_value(family: str, n: int, spec: inv.CableSpec, value: RatQT):
    """Compare a computed value with the oracle; returns (match, sign, k, specialized, reference)."""
    if family == inv.SIGN:
        special = specialize_t(value, "t=1")
    else:
        special = specialize_t(value, "t=-q^2")
    got = special.as_laurent_q()
    if family == inv.CD:
        ref = oracle_jones(n, spec.pairs, NEWTON)
        ratio = monomial_ratio(got, ref)
        if ratio is None:
            return False, None, None, got, ref
        return True, ratio[0], ratio[1], got, ref
    if family in (inv.CHEREDNIK, inv.SIGN):
        ref = oracle_jones(n, spec.pairs, TOPOLOGICAL)
    else:
        ref = oracle_jones(n, spec.topological().pairs, TOPOLOGICAL)
    if got == ref:
        return True, 1, None, got, ref
    if got == -ref:
        return True, -1, None, got, ref
    return False, None, None, got, ref


def run_verify(cfg, out):
    spec = _spec(cfg)
    res = inv.compute(cfg.family, cfg.n, spec)
    try:
        match, sign, k, got, ref = verify_value(cfg.family, cfg.n, spec, res.value)
    except PoleError as exc:
        rec = _record(cfg, res.value.to_json(), {"match": False, "sign": None, "monomial_k": None, "pole": True})
        _emit(cfg, f"POLE during specialization: {exc}", rec, out)
        return EXIT_MISMATCH
    rec = _record(cfg, res.value.to_json(), {"match": match, "sign": sign, "monomial_k": k})
    if match:
        text = f"MATCH sign={sign:+d}" + (f" k={k}" if k is not None else "")
    else:
        text = "MISMATCH\n" + _diff(got, ref)
    _emit(cfg, text, rec, out)
    return EXIT_OK if match else EXIT_MISMATCH


def run_selftest(cfg, out):
    from . import selftest

    rows = selftest.run_all()
    width = max(len(name) for name, _, _ in rows)
    lines = [f"{name.ljust(width)}  {'PASS' if ok else 'FAIL'}  {secs:6.2f}s" for name, ok, secs in rows]
    failed = sum(1 for _, ok, _ in rows if not ok)
    lines.append(f"{len(rows) - failed}/{len(rows)} checks passed")
    rec = {"selftest": [{"check": n, "pass": ok, "seconds": round(s, 3)} for n, ok, s in rows]}
    _emit(cfg, "\n".join(lines), rec, out)
    return EXIT_OK if not failed else EXIT_MISMATCH


RUNNERS = {
    "macdonald": run_macdonald,
    "torus": run_compute,
    "iterated": run_compute,
    "cd": run_compute,
    "oracle": run_oracle,
    "verify": run_verify,
    "selftest": run_selftest,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    try:
        return RUNNERS[cfg.command](cfg, out)
    except (AssertionError, ArithmeticError) as exc:
        err.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
