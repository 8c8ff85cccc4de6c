"""Command-line sweeps, boundary bisection, and CSV/JSON emission.

Every subcommand evaluates a pure function on a parameter grid (or
bisects a region boundary along one parameter) and writes records with
the fixed schema ``param1,param2,param3,verdict,level,witness,margin``.
Outputs are byte-identical for a fixed config, regardless of the worker
count: points are generated in sorted order, evaluated independently,
and written by a single process.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
from dataclasses import dataclass

from . import __version__
from .alignment import Outcome, classify
from .broadcast import bc_alignment
from .channels import (
    ChannelError,
    binary_entropy,
    make_bec,
    make_bsc,
    make_channel,
    scalars,
)
from .polarize import index_label, polarized_sets, synthesize
from .quantum import PauliChannel, coherent_info, ent_needed, ent_zero
from .wiretap import KeyNeed, key_need_bec_bsc, key_need_bsc_bec

CSV_HEADER = "param1,param2,param3,verdict,level,witness,margin"
BISECT_TOL = 1e-6


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RegionRecord:
    param1: float | None
    param2: float | None
    param3: float | None
    verdict: str
    level: int | None
    witness: str | None
    margin: float | None


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    return f"{x:.12g}"


def _record_fields(r: RegionRecord):
    return (r.param1, r.param2, r.param3, r.verdict, r.level, r.witness, r.margin)


def emit(records, fmt: str, path: str, meta: dict) -> None:
    """Write records atomically: partial files never remain on error."""
    if not records:
        raise ConfigError("no records to emit (empty grid?)")
    tmp = path + ".tmp"
    try:
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            if fmt == "csv":
                fh.write(CSV_HEADER + "\n")
                for r in records:
                    fh.write(",".join(_fmt(v) for v in _record_fields(r)) + "\n")
            else:
                payload = {
                    "meta": meta,
                    "records": [
                        {
                            "param1": r.param1,
                            "param2": r.param2,
                            "param3": r.param3,
                            "verdict": r.verdict,
                            "level": r.level,
                            "witness": r.witness,
                            "margin": r.margin,
                        }
                        for r in records
                    ],
                }
                json.dump(payload, fh, indent=2, sort_keys=True)
                fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def _grid(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0.0:
        raise ConfigError(f"step must be positive, got {step}")
    if hi < lo:
        raise ConfigError(f"empty range [{lo}, {hi}]")
    out = []
    i = 0
    while True:
        x = lo + i * step
        if x > hi + 1e-12:
            break
        out.append(round(x, 12))
        i += 1
    return out


# ---------------------------------------------------------------------------
# per-point evaluation (top-level so worker processes can pickle tasks)

def _eval_alignment(task):
    alpha, beta, k_lb, k_ub = task
    v = classify(make_bsc(alpha), make_bec(beta), k_lb=k_lb, k_ub=k_ub)
    margin = min(v.ub_margins.values()) if v.ub_margins else None
    level = v.ub_level if v.outcome is Outcome.ALIGNED else v.lb_level
    return RegionRecord(alpha, beta, None, v.outcome.value, level,
                        v.lb_witness, margin)


def _eval_wiretap(task):
    kind, alpha, beta, level = task
    if kind == "bsc-bec":
        verdict = key_need_bsc_bec(alpha, beta)
        lev = 0 if verdict is not KeyNeed.ZERO_CAPACITY else None
    else:
        verdict = key_need_bec_bsc(alpha, beta, level=level)
        lev = level if verdict in (KeyNeed.KEY_NEEDED, KeyNeed.INCONCLUSIVE) else None
    return RegionRecord(alpha, beta, None, verdict.value, lev, None, None)


def _eval_broadcast(task):
    alpha, beta, gamma, k_lb, k_ub = task
    v = bc_alignment(alpha, beta, gamma, k_ub=k_ub, k_lb=k_lb)
    margin = min(v.ub_margins.values()) if v.ub_margins else None
    level = v.ub_level if v.outcome is Outcome.ALIGNED else v.lb_level
    return RegionRecord(alpha, beta, gamma, v.outcome.value, level,
                        v.lb_witness, margin)


def _pauli(family: str, a: float, b: float | None) -> PauliChannel:
    if family == "depolarizing":
        return PauliChannel.depolarizing(a)
    if family == "bb84":
        return PauliChannel.bb84(a, b)
    return PauliChannel.two_pauli(a, b)


def _eval_quantum(task):
    family, a, b, k_lb, k_ub = task
    pc = _pauli(family, a, b)
    q1 = coherent_info(pc, family)
    if ent_zero(pc, k_ub):
        verdict, level = "no-assist", k_ub
    elif ent_needed(pc, k_lb):
        verdict, level = "assist-needed", k_lb
    else:
        verdict, level = "inconclusive", None
    return RegionRecord(a, b, None, verdict, level, None, q1)


_EVALS = {
    "alignment-region": _eval_alignment,
    "wiretap-region": _eval_wiretap,
    "broadcast-region": _eval_broadcast,
    "quantum": _eval_quantum,
}


def _run_tasks(subcommand: str, tasks: list, workers: int):
    fn = _EVALS[subcommand]
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with multiprocessing.Pool(processes=workers) as pool:
        return pool.map(fn, tasks, chunksize=max(len(tasks) // (4 * workers), 1))


# ---------------------------------------------------------------------------
# thresholds: bisection along one parameter

def _bisect(pred, lo: float, hi: float, tol: float = BISECT_TOL) -> float:
    """Locate the flip point of a monotone predicate; endpoint verdicts
    must differ, otherwise the boundary is not bracketed."""
    plo, phi = pred(lo), pred(hi)
    if plo == phi:
        raise ChannelError(
            f"predicate is constant on [{lo}, {hi}]; boundary not bracketed")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if pred(mid) == plo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _threshold_curves():
    from .alignment import check_alignment, check_nonalignment
    from .broadcast import bc_channels

    def need(args, name):
        v = getattr(args, name.replace("-", "_"), None)
        if v is None:
            raise ConfigError(f"--curve {args.curve} requires --{name}")
        return v

    def ub_level(k):
        def build(args):
            alpha = need(args, "alpha")
            pred = lambda beta: check_alignment(make_bsc(alpha), make_bec(beta), k)[0]
            return alpha, None, pred, 0.0, 1.0
        return build

    def lb_level(k):
        def build(args):
            alpha = need(args, "alpha")
            pred = lambda beta: not check_nonalignment(
                make_bsc(alpha), make_bec(beta), k)[0]
            return alpha, None, pred, 0.0, 1.0
        return build

    def eq_capacity(args):
        alpha = need(args, "alpha")
        gamma = args.gamma if args.gamma is not None else 0.0
        def pred(beta):
            wbar, vbar = bc_channels(alpha, beta, gamma)
            return scalars(vbar).i <= scalars(wbar).i
        return alpha, gamma, pred, 0.0, 1.0

    def bc_ub(k):
        def build(args):
            alpha = need(args, "alpha")
            gamma = need(args, "gamma")
            def pred(beta):
                wbar, vbar = bc_channels(alpha, beta, gamma)
                return check_alignment(wbar, vbar, k)[0]
            return alpha, gamma, pred, 0.0, 1.0
        return build

    def bc_lb(k):
        def build(args):
            alpha = need(args, "alpha")
            gamma = need(args, "gamma")
            def pred(beta):
                wbar, vbar = bc_channels(alpha, beta, gamma)
                return not check_nonalignment(wbar, vbar, k)[0]
            return alpha, gamma, pred, 0.0, 1.0
        return build

    def wt_nokey(args):
        alpha = need(args, "alpha")
        pred = lambda beta: key_need_bsc_bec(alpha, beta) is KeyNeed.NO_KEY_NEEDED
        return alpha, None, pred, 0.0, 1.0

    def wt_key(args):
        alpha = need(args, "alpha")
        level = args.k_lb if args.k_lb is not None else 3
        pred = lambda beta: key_need_bec_bsc(alpha, beta, level=level) is KeyNeed.KEY_NEEDED
        # the certificate fires in a band just above the more-capable
        # threshold H_b(alpha) (its margin decays for large beta), so the
        # bisection is bracketed tightly around that threshold
        hb = binary_entropy(alpha)
        return alpha, None, pred, max(hb - 0.05, 0.0), min(hb + 0.005, 1.0)

    def eub(k):
        def build(args):
            pred = lambda p: ent_zero(PauliChannel.depolarizing(p), k)
            return None, None, pred, 0.0, 0.25
        return build

    def elb(k):
        def build(args):
            pred = lambda p: ent_needed(PauliChannel.depolarizing(p), k)
            return None, None, pred, 0.1, 0.25
        return build

    def q1_root(args):
        pred = lambda p: coherent_info(PauliChannel.depolarizing(p), "depolarizing") > 0.0
        return None, None, pred, 1e-9, 0.3

    curves = {
        "eq-capacity": eq_capacity,
        "wiretap-bsc-bec-nokey": wt_nokey,
        "wiretap-bec-bsc-key": wt_key,
        "q1-root": q1_root,
    }
    for k in range(5):
        curves[f"ub-level{k}"] = ub_level(k)
        curves[f"lb-level{k}"] = lb_level(k)
        curves[f"bc-ub-level{k}"] = bc_ub(k)
        curves[f"bc-lb-level{k}"] = bc_lb(k)
        curves[f"eub-level{k}"] = eub(k)
        curves[f"elb-level{k}"] = elb(k)
    return curves


# ---------------------------------------------------------------------------
# argument handling

def _add_common(sp):
    sp.add_argument("--out", required=True, help="output file path")
    sp.add_argument("--format", choices=["csv", "json"], default=None)
    sp.add_argument("--workers", type=int, default=None)
    sp.add_argument("--config", default=None,
                    help="key=value file; command-line flags take precedence")


def _add_range(sp, name):
    sp.add_argument(f"--{name}", type=float, default=None,
                    help=f"single {name} value")
    sp.add_argument(f"--{name}-min", type=float, default=None)
    sp.add_argument(f"--{name}-max", type=float, default=None)
    sp.add_argument(f"--{name}-step", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="polaralign",
        description="Polarization, alignment certificates, and region sweeps")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("alignment-region", help="flip-vs-erasure alignment grid")
    _add_range(sp, "alpha")
    _add_range(sp, "beta")
    sp.add_argument("--k-lb", type=int, default=None)
    sp.add_argument("--k-ub", type=int, default=None)
    _add_common(sp)

    sp = sub.add_parser("wiretap-region", help="key-need classification grid")
    sp.add_argument("--kind", choices=["bsc-bec", "bec-bsc"], required=True)
    _add_range(sp, "alpha")
    _add_range(sp, "beta")
    sp.add_argument("--k-lb", type=int, default=None)
    _add_common(sp)

    sp = sub.add_parser("broadcast-region", help="broadcast alignment grid")
    sp.add_argument("--gamma", type=float, required=True)
    _add_range(sp, "alpha")
    _add_range(sp, "beta")
    sp.add_argument("--k-lb", type=int, default=None)
    sp.add_argument("--k-ub", type=int, default=None)
    _add_common(sp)

    sp = sub.add_parser("quantum", help="entanglement-assistance grid")
    sp.add_argument("--family", choices=["depolarizing", "bb84", "two-pauli"],
                    required=True)
    _add_range(sp, "p")
    _add_range(sp, "qx")
    _add_range(sp, "qz")
    sp.add_argument("--k-lb", type=int, default=None)
    sp.add_argument("--k-ub", type=int, default=None)
    _add_common(sp)

    sp = sub.add_parser("polar-sets", help="good/bad index partition")
    sp.add_argument("--channel", required=True, help="bsc:ALPHA or bec:BETA")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--epsilon", type=float, required=True)
    sp.add_argument("--method", choices=["exact", "bounds"], default=None)
    _add_common(sp)

    sp = sub.add_parser("thresholds", help="bisect a region boundary")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--alpha", type=float, default=None)
    sp.add_argument("--gamma", type=float, default=None)
    sp.add_argument("--family", choices=["depolarizing"], default=None)
    sp.add_argument("--k-lb", type=int, default=None)
    _add_common(sp)
    return p


def _apply_config(args: argparse.Namespace) -> argparse.Namespace:
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}")
        for ln in lines:
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            if "=" not in ln:
                raise ConfigError(f"bad config line: {ln!r}")
            key, _, val = ln.partition("=")
            attr = key.strip().replace("-", "_")
            if not hasattr(args, attr):
                raise ConfigError(f"unknown config key: {key.strip()!r}")
            if getattr(args, attr) is None:  # flags override the file
                cur_type = float
                if attr in ("workers", "n", "k_lb", "k_ub"):
                    cur_type = int
                elif attr in ("format", "method", "kind", "family", "curve",
                              "channel", "out"):
                    cur_type = str
                setattr(args, attr, cur_type(val.strip()))
    return args


def _defaults(args, **kw):
    for key, val in kw.items():
        if getattr(args, key, None) is None:
            setattr(args, key, val)


def _values(args, name) -> list[float]:
    single = getattr(args, name)
    lo = getattr(args, f"{name}_min")
    hi = getattr(args, f"{name}_max")
    step = getattr(args, f"{name}_step")
    if single is not None:
        return [single]
    if lo is None or hi is None or step is None:
        raise ConfigError(
            f"--{name} or --{name}-min/--{name}-max/--{name}-step required")
    return _grid(lo, hi, step)


def _config_echo(args) -> dict:
    skip = {"subcommand", "config"}
    return {k: v for k, v in sorted(vars(args).items())
            if k not in skip and v is not None}


def run(args: argparse.Namespace) -> int:
    args = _apply_config(args)
    _defaults(args, format="csv", workers=1)
    sub = args.subcommand
    caveat = False
    if sub == "alignment-region":
        _defaults(args, k_lb=4, k_ub=2)
        tasks = [(a, b, args.k_lb, args.k_ub)
                 for a in _values(args, "alpha") for b in _values(args, "beta")]
        records = _run_tasks(sub, tasks, args.workers)
    elif sub == "wiretap-region":
        _defaults(args, k_lb=3)
        tasks = [(args.kind, a, b, args.k_lb)
                 for a in _values(args, "alpha") for b in _values(args, "beta")]
        records = _run_tasks(sub, tasks, args.workers)
    elif sub == "broadcast-region":
        _defaults(args, k_lb=4, k_ub=2)
        tasks = [(a, b, args.gamma, args.k_lb, args.k_ub)
                 for a in _values(args, "alpha") for b in _values(args, "beta")]
        records = _run_tasks(sub, tasks, args.workers)
    elif sub == "quantum":
        _defaults(args, k_lb=3, k_ub=2)
        caveat = True
        if args.family == "depolarizing":
            tasks = [(args.family, x, None, args.k_lb, args.k_ub)
                     for x in _values(args, "p")]
        else:
            tasks = [(args.family, x, z, args.k_lb, args.k_ub)
                     for x in _values(args, "qx") for z in _values(args, "qz")]
        records = _run_tasks(sub, tasks, args.workers)
    elif sub == "polar-sets":
        _defaults(args, method="exact")
        kind, _, param = args.channel.partition(":")
        try:
            param = float(param)
        except ValueError:
            raise ConfigError(f"bad --channel spec: {args.channel!r}")
        w = make_channel(kind, param)
        sets = polarized_sets(w, args.n, args.epsilon, method=args.method)
        k = args.n.bit_length() - 1
        records = []
        for i in range(1, args.n + 1):
            b = index_label(i, args.n)
            if i in sets.d_set:
                verdict = "good"
            elif i in sets.r_set:
                verdict = "bad"
            else:
                verdict = "undecided"
            z = scalars(synthesize(w, b)).z if args.method == "exact" else None
            records.append(RegionRecord(float(i), param, None, verdict, k, b, z))
    elif sub == "thresholds":
        curves = _threshold_curves()
        if args.curve not in curves:
            raise ConfigError(f"unknown curve {args.curve!r}; "
                              f"known: {', '.join(sorted(curves))}")
        p1, p3, pred, lo, hi = curves[args.curve](args)
        caveat = args.curve.startswith(("eub-", "elb-"))
        boundary = _bisect(pred, lo, hi)
        records = [RegionRecord(p1, boundary, p3, args.curve, None, None,
                                BISECT_TOL)]
    else:  # pragma: no cover - argparse enforces choices
        raise ConfigError(f"unknown subcommand {sub!r}")

    meta = {
        "version": __version__,
        "config": _config_echo(args),
        "basis_restriction_caveat": caveat,
    }
    emit(records, args.format, args.out, meta)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # computation failure
        print(f"computation error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
