"""``opp``: order-preserving period reports for integer sequences."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from itertools import chain

from .intervals import format_intervals
from .lce import build
from .opcore import IntSeq
from .oracle import all_strings, brute_report, random_corpus
from .periods import (
    PeriodReport,
    all_op_periods,
    analyze,
    full_periods,
    initial_periods,
    monotone_summary,
    smallest_initial,
)
from .prefix import compute_op_pref
from .sliding import sliding_periods

COMMANDS = ("all", "initial", "full", "smallest-initial", "sliding", "monotone", "verify")
EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2

_INT = re.compile(r"[+-]?[0-9]+")


class InputError(ValueError):
    pass


def parse_input(data: bytes | str, column: int | None = None) -> list[int]:
    """Integers from whitespace-separated text, or from one 1-based CSV column."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if column is None:
        tokens = text.split()
        label = "token"
    else:
        if column < 1:
            raise InputError(f"column must be >= 1, got {column}")
        tokens = []
        for row_no, row in enumerate(csv.reader(io.StringIO(text)), 1):
            if not row or all(not c.strip() for c in row):
                continue
            if column > len(row):
                raise InputError(f"row {row_no} has no column {column}")
            tokens.append(row[column - 1].strip())
        label = "value"
    if not tokens:
        raise InputError("empty input")
    out = []
    for k, tok in enumerate(tokens, 1):
        if not _INT.fullmatch(tok):
            raise InputError(f"{label} {k}: not an integer: {tok!r}")
        out.append(int(tok))
    return out


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str = "-"
    json: bool = False
    column: int | None = None
    seed: int = 0
    max_n: int = 9
    alphabet: int = 3
    exhaustive: bool = False
    count: int = 1000
    warn_n: int = 20000


# -- report rendering ----------------------------------------------------------


def report_json(rep: PeriodReport) -> dict:
    periods = []
    init, full, slid = set(rep.initial), set(rep.full), set(rep.sliding)
    for p in rep.shifts.periods():
        periods.append(
            {
                "p": p,
                "shifts": [[lo, hi] for lo, hi in rep.shifts.get(p).intervals],
                "initial": p in init,
                "full": p in full,
                "sliding": p in slid,
            }
        )
    return {"n": rep.n, "periods": periods, "smallest_initial": rep.smallest_initial}


def report_text(rep: PeriodReport) -> str:
    lines = [f"n {rep.n}"]
    init, full, slid = set(rep.initial), set(rep.full), set(rep.sliding)
    for p in rep.shifts.periods():
        flags = [name for name, group in (("initial", init), ("full", full), ("sliding", slid)) if p in group]
        lines.append(" ".join([f"p={p}", f"shifts={format_intervals(rep.shifts.get(p))}", *flags]))
    lines.append(f"smallest-initial {_or_none(rep.smallest_initial)}")
    return "\n".join(lines)


def _or_none(x) -> str:
    return "none" if x is None else str(x)


def _period_list(name: str, n: int, ps: list[int], as_json: bool) -> str:
    if as_json:
        return json.dumps({"n": n, name: ps})
    return " ".join(map(str, ps))


def _monotone(s: list[int], as_json: bool) -> str:
    m = monotone_summary(s)
    if as_json:
        fams = [
            {"direction": f.direction, "anchor": f.anchor, "modulus": f.modulus}
            for f in m.families
        ]
        return json.dumps({"n": m.n, "everything": m.everything, "families": fams})
    if m.everything is not None:
        return f"strictly monotone ({m.everything}): every p with every shift"
    lines = []
    for f in m.families:
        which = "every p" if f.modulus is None else f"divisors of {f.modulus}"
        lines.append(f"{f.direction} {which}, shift {f.anchor} mod p")
    return "\n".join(lines)


# -- oracle cross-check --------------------------------------------------------


def mismatches(s: IntSeq) -> list[str]:
    """Where the fast algorithms disagree with the brute-force reference."""
    n = len(s)
    if n < 2:
        return []
    ref = brute_report(s)
    t = compute_op_pref(s)
    idx = build(s)
    table = all_op_periods(s, idx)
    out = []
    for p in range(1, n):
        if set(table.get(p)) != set(ref.shifts[p]):
            out.append(f"shifts_{p}")
    checks = (
        ("initial", initial_periods(s, t), ref.initial),
        ("full", full_periods(s, t), ref.full),
        ("sliding", sliding_periods(s, idx, idx.reverse()), ref.sliding),
        ("smallest-initial", smallest_initial(s, t), ref.smallest_initial),
    )
    out += [name for name, got, want in checks if got != want]
    return out


def _verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.max_n < 2 or cfg.alphabet < 1:
        return "error: verify needs --max-n >= 2 and --alphabet >= 1", EXIT_INPUT
    if cfg.exhaustive:
        corpus = chain.from_iterable(all_strings(n, cfg.alphabet) for n in range(2, cfg.max_n + 1))
    else:
        corpus = random_corpus(cfg.count, 2, cfg.max_n, [cfg.alphabet], cfg.seed)
    checked = 0
    bad: list[str] = []
    for s in corpus:
        checked += 1
        diff = mismatches(s)
        if diff:
            bad.append(f"{' '.join(map(str, s))}: {', '.join(diff)}")
    if cfg.json:
        text = json.dumps({"checked": checked, "mismatches": bad})
    else:
        text = "\n".join([f"checked {checked} strings, {len(bad)} mismatches", *bad[:20]])
    return text, EXIT_MISMATCH if bad else EXIT_OK


# -- entry points --------------------------------------------------------------


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def run(cfg: RunConfig, data: bytes | None = None) -> tuple[str, int]:
    """Produce the report text and the exit code for one invocation."""
    if cfg.command == "verify":
        return _verify(cfg)
    try:
        raw = _read(cfg.input) if data is None else data
        s = parse_input(raw, cfg.column)
    except (InputError, OSError, UnicodeDecodeError) as exc:
        return f"error: {exc}", EXIT_INPUT
    n = len(s)
    cmd, as_json = cfg.command, cfg.json
    if cmd == "all":
        if n > cfg.warn_n:
            print(f"warning: n={n} exceeds {cfg.warn_n}; the square scan may be slow", file=sys.stderr)
        rep = analyze(s)
        return (json.dumps(report_json(rep)) if as_json else report_text(rep)), EXIT_OK
    if cmd in ("initial", "full"):
        fn = initial_periods if cmd == "initial" else full_periods
        return _period_list(cmd, n, fn(s), as_json), EXIT_OK
    if cmd == "sliding":
        return _period_list(cmd, n, sliding_periods(s), as_json), EXIT_OK
    if cmd == "smallest-initial":
        p = smallest_initial(s)
        return (json.dumps({"n": n, "smallest_initial": p}) if as_json else _or_none(p)), EXIT_OK
    if cmd == "monotone":
        return _monotone(s, as_json), EXIT_OK
    raise ValueError(f"unknown command {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="opp", description=__doc__)
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--column", type=int, help="read this 1-based CSV column")
    ap.add_argument("--seed", type=int, default=0, help="verify: corpus seed")
    ap.add_argument("--max-n", type=int, default=9, help="verify: longest string")
    ap.add_argument("--alphabet", type=int, default=3, help="verify: alphabet size")
    ap.add_argument("--exhaustive", action="store_true", help="verify: every string up to --max-n")
    ap.add_argument("--count", type=int, default=1000, help="verify: random corpus size")
    ap.add_argument("--warn-n", type=int, default=20000, help="all: warn above this length")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        input=args.input,
        json=args.json,
        column=args.column,
        seed=args.seed,
        max_n=args.max_n,
        alphabet=args.alphabet,
        exhaustive=args.exhaustive,
        count=args.count,
        warn_n=args.warn_n,
    )
    text, code = run(cfg)
    stream = sys.stderr if code == EXIT_INPUT else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
