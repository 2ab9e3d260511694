"""Command line interface.

    dworkbench <command> <TYPE> [-p P ...] [--format text|csv|json]
               [--cache DIR] [--budget N] [--extended]

Commands: marks, decomp, radical, cartan, verify.  Exit codes: 0 success,
1 verification failure, 2 configuration error, 3 element budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import cache as cachemod
from .coxeter import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    CoxeterType,
    UnsupportedTypeError,
    build_group,
)
from .descent import StructureConstants, radical_basis_char0, radical_basis_mod_p
from .marks import build_marks_table
from .modular import primes_dividing, verify_CDC
from .serialize import (
    cartan_payload,
    decomposition_payload,
    emit_cartan_csv,
    emit_cartan_text,
    emit_decomp_csv,
    emit_decomp_text,
    emit_json,
    emit_marks_csv,
    emit_marks_text,
    emit_radical_csv,
    emit_radical_text,
    marks_payload,
)
from .verify import run_verify

EXTENDED_BUDGET = 3_200_000


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class JobConfig:
    command: str
    type_string: str
    primes: tuple | None
    fmt: str
    cache_dir: str | None
    budget: int
    extended: bool

    @staticmethod
    def from_args(args):
        primes = None
        if args.primes:
            for p in args.primes:
                if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
                    raise ConfigError("%d is not a prime" % p)
            primes = tuple(sorted(set(args.primes)))
        budget = args.budget if args.budget is not None else DEFAULT_BUDGET
        if budget < 1:
            raise ConfigError("budget must be positive")
        if args.extended:
            budget = max(budget, EXTENDED_BUDGET)
        cache_dir = args.cache or os.environ.get(cachemod.ENV_CACHE_DIR) or None
        return JobConfig(
            args.command, args.type, primes, args.format, cache_dir, budget,
            args.extended,
        )


def _parser():
    parser = argparse.ArgumentParser(
        prog="dworkbench",
        description="descent algebras of finite Coxeter groups, exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, desc in (
        ("marks", "parabolic table of marks"),
        ("decomp", "decomposition data per prime"),
        ("radical", "radical basis of the (modular) descent algebra"),
        ("cartan", "Cartan matrices and the D^T C D factorization"),
        ("verify", "run the invariant suite for one type"),
    ):
        p = sub.add_parser(name, help=desc)
        p.add_argument("type", help="Coxeter type, e.g. A4, B3, I2:7, F4")
        p.add_argument(
            "-p", "--prime", dest="primes", type=int, action="append",
            help="prime (repeatable); default: the primes dividing |W|",
        )
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--cache", default=None, help="cache directory")
        p.add_argument("--budget", type=int, default=None, help="element budget")
        p.add_argument("--extended", action="store_true",
                       help="raise the budget to admit E7")
    return parser


def _default_primes(descriptor):
    return tuple(primes_dividing(descriptor.order()))


def _cache_load(config, label, kind):
    if config.cache_dir is None:
        return None
    return cachemod.load(config.cache_dir, label, kind)


def _cache_store(config, label, kind, payload):
    if config.cache_dir is not None:
        cachemod.store(config.cache_dir, label, kind, payload)


def cmd_marks(config):
    descriptor = CoxeterType.parse(config.type_string)
    label = descriptor.label()
    payload = _cache_load(config, label, "marks")
    if payload is None:
        group = build_group(descriptor, budget=config.budget)
        payload = marks_payload(build_marks_table(group))
        _cache_store(config, label, "marks", payload)
    if config.fmt == "json":
        return emit_json(payload), 0
    if config.fmt == "csv":
        return emit_marks_csv(payload), 0
    return emit_marks_text(payload), 0


def _trivial_prime_entry(p, nrows):
    return {
        "p": p,
        "modular_index": list(range(1, nrows + 1)),
        "rows": [
            {
                "index": k,
                "targets": [k],
                "first": k,
                "representative": k,
                "cell": ".",
            }
            for k in range(1, nrows + 1)
        ],
        "classes": [
            {"representative": k, "members": [k]} for k in range(1, nrows + 1)
        ],
        "decomposition": [
            [1 if i == j else 0 for i in range(nrows)] for j in range(nrows)
        ],
    }


def cmd_decomp(config):
    descriptor = CoxeterType.parse(config.type_string)
    label = descriptor.label()
    dividing = _default_primes(descriptor)
    wanted = config.primes if config.primes is not None else dividing
    relevant = [p for p in wanted if p in dividing]
    payload = _cache_load(config, label, "decomp")
    if payload is not None:
        have = {e["p"] for e in payload["primes"]}
        if not set(relevant) <= have:
            payload = None
    if payload is None:
        group = build_group(descriptor, budget=config.budget)
        marks = build_marks_table(group)
        _cache_store(config, label, "marks", marks_payload(marks))
        payload = decomposition_payload(group, marks, dividing)
        _cache_store(config, label, "decomp", payload)
    entries = {e["p"]: e for e in payload["primes"]}
    out = {
        "schema_version": payload["schema_version"],
        "descriptor": payload["descriptor"],
        "labels": payload["labels"],
        "primes": [
            entries[p] if p in entries
            else _trivial_prime_entry(p, len(payload["labels"]))
            for p in wanted
        ],
    }
    if config.fmt == "json":
        return emit_json(out), 0
    if config.fmt == "csv":
        return emit_decomp_csv(out), 0
    return emit_decomp_text(out), 0


def cmd_radical(config):
    descriptor = CoxeterType.parse(config.type_string)
    group = build_group(descriptor, budget=config.budget)
    from .serialize import radical_payload

    if config.primes is None:
        bases = [radical_basis_char0(group)]
    else:
        bases = [radical_basis_mod_p(group, p) for p in config.primes]
    payloads = [radical_payload(descriptor.label(), b) for b in bases]
    if config.fmt == "json":
        return emit_json({"schema_version": 1, "bases": payloads}), 0
    if config.fmt == "csv":
        return emit_radical_csv(payloads), 0
    return emit_radical_text(payloads), 0


def cmd_cartan(config):
    descriptor = CoxeterType.parse(config.type_string)
    label = descriptor.label()
    wanted = (
        config.primes if config.primes is not None else _default_primes(descriptor)
    )
    payload = _cache_load(config, label, "cartan")
    if payload is not None:
        have = {e["p"] for e in payload["primes"]}
        if not set(wanted) <= have:
            payload = None
    if payload is None:
        group = build_group(descriptor, budget=config.budget)
        marks = build_marks_table(group)
        sc = StructureConstants(group)
        scp = _cache_load(config, label, "structure-constants")
        if scp is not None:
            sc = cachemod.load_structure_constants(group, scp)
        primes = sorted(set(wanted) | set(_default_primes(descriptor)))
        per_prime = []
        c0 = None
        for p in primes:
            report, c0, cp, d, dtcd = verify_CDC(group, sc, marks, p)
            per_prime.append((p, cp, d, dtcd, report.ok))
        payload = cartan_payload(descriptor.label(), c0, per_prime)
        _cache_store(config, label, "cartan", payload)
        _cache_store(
            config,
            label,
            "structure-constants",
            cachemod.structure_constants_payload(sc.fill()),
        )
    out = {
        "schema_version": payload["schema_version"],
        "descriptor": payload["descriptor"],
        "char0": payload["char0"],
        "primes": [e for e in payload["primes"] if e["p"] in set(wanted)],
    }
    code = 0 if all(e["equal"] for e in out["primes"]) else 1
    if config.fmt == "json":
        return emit_json(out), code
    if config.fmt == "csv":
        return emit_cartan_csv(out), code
    return emit_cartan_text(out), code


def cmd_verify(config):
    CoxeterType.parse(config.type_string)
    ok, lines = run_verify(
        config.type_string, budget=config.budget, extended=config.extended
    )
    if config.fmt == "json":
        return emit_json({"ok": ok, "lines": lines}), 0 if ok else 1
    if config.fmt == "csv":
        rows = ["status,check"]
        for line in lines:
            status, _, rest = line.partition(" ")
            rows.append('%s,"%s"' % (status, rest))
        return "\n".join(rows) + "\n", 0 if ok else 1
    return "\n".join(lines) + "\n", 0 if ok else 1


_COMMANDS = {
    "marks": cmd_marks,
    "decomp": cmd_decomp,
    "radical": cmd_radical,
    "cartan": cmd_cartan,
    "verify": cmd_verify,
}


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        config = JobConfig.from_args(args)
        text, code = _COMMANDS[args.command](config)
    except (ConfigError, UnsupportedTypeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except BudgetExceededError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
