"""Command-line front end.

Exit codes: 0 ok, 1 a verify-paper item failed, 2 invalid arguments,
3 inconsistent input (decoder failures), 4 resource cap, 5 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .balls import (deletion_ball, deletion_ball_size, insertion_ball,
                    insertion_ball_size, max_ball_bound_check)
from .channel import ChannelSpec, sample_traces
from .deck import Deck, InconsistentDeckError, compute_deck
from .golden import run_golden
from .multitrace import (IncompatibleTracesError, aggregate,
                         minimal_common_supersequence_level, read_traces,
                         reconstruct_multi)
from .parallel import default_workers
from .reconstruct import (ReconstructionError, reconstruct_single_trace,
                          vt_decode_zero_deletion)
from .search import (ResourceCapError, certificates_to_csv, doubling_witness,
                     estimate_memory, ftable, morse_thue_witness,
                     multitrace_witness, witness_certificate)
from .seqcore import BinarySequence

EXIT_FAIL, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_CAP, EXIT_IO = 1, 2, 3, 4, 5


def bits(text: str) -> BinarySequence:
    try:
        return BinarySequence.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def int_range(text: str):
    """'4', '2-12' or '2,4,8'."""
    out = []
    try:
        for part in text.split(","):
            if "-" in part:
                lo, hi = part.split("-")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return out


def _emit(args, payload, text=None):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text if text is not None else payload)


def cmd_deck(args):
    d = compute_deck(args.seq, args.k)
    if args.out:
        Path(args.out).write_text(d.to_json(indent=1) + "\n")
    if args.format == "text":
        for p, c in d.counts.items():
            print(f"{p}\t{c}")
    else:
        print(d.to_json())


def cmd_reconstruct(args):
    if args.vt is not None:
        if args.trace is None:
            raise ValueError("--vt needs --trace")
        x = vt_decode_zero_deletion(args.trace, args.vt, args.n)
    else:
        if args.deck is None:
            raise ValueError("reconstruct needs --deck (or --vt)")
        d = Deck.from_json(Path(args.deck).read_text())
        if args.traces:
            x = reconstruct_multi(read_traces(args.traces), d, args.n)
        elif args.trace is not None:
            x = reconstruct_single_trace(args.trace, d, args.n)
        else:
            raise ValueError("give --trace or --traces")
    _emit(args, {"x": x.text}, x.text)


def cmd_aggregate(args):
    ts = read_traces(args.traces)
    z = aggregate(ts)
    level = minimal_common_supersequence_level(ts)
    _emit(args, {"aggregate": z.text, "level": level}, f"{z.text}\t{level}")


def cmd_balls(args):
    if args.max_check:
        if args.n is None:
            raise ValueError("--max-check needs --n")
        report = max_ball_bound_check(args.n, args.t, workers=args.workers)
        if args.format == "json":
            print(report.to_json())
        else:
            print(f"n={report.n} t={report.t} max={report.max} bound={report.bound} "
                  f"holds={report.holds} argmax={len(report.argmax)} words")
        return 0 if report.holds else EXIT_FAIL
    if args.seq is None:
        raise ValueError("balls needs --seq (or --max-check)")
    if args.direction == "deletion":
        size = deletion_ball_size(args.seq, args.t)
        members = [] if args.size_only else sorted(deletion_ball(args.seq, args.t))
    else:
        size = insertion_ball_size(args.seq, args.t)
        members = [] if args.size_only else sorted(insertion_ball(args.seq, args.t))
    _emit(args, {"size": str(size), "members": [m.text for m in members]},
          "\n".join([str(size)] + [m.text for m in members]))


def cmd_ftable(args):
    n_max = max(args.n)
    print(f"# memory estimate at n={n_max}, k={max(args.t) + 1}: "
          f"{estimate_memory(n_max, min(n_max, max(args.t) + 1)) / 2**20:.1f} MB", file=sys.stderr)
    certs = ftable(args.n, args.t, args.M, workers=args.workers, max_n=args.max_n)
    if args.format == "json":
        print(json.dumps([c.to_dict() for c in certs]))
    else:
        sys.stdout.write(certificates_to_csv(certs))


def cmd_witness(args):
    if args.kind == "morse-thue":
        x, y, z = morse_thue_witness(args.level)
        traces, t, M = [z], len(x) - len(z), 1
    elif args.kind == "doubling":
        x, y, z = doubling_witness(args.x, args.y, args.shared)
        traces, t, M = [z], len(x) - len(z), 1
    else:
        x, y, traces = multitrace_witness(args.x, args.y, args.shared, args.M, args.parity)
        t, M = len(x) - len(traces[0]), len(traces)
    cert = witness_certificate(x, y, t, M)
    payload = dict(cert.to_dict(), traces=[u.text for u in traces])
    _emit(args, payload, "\n".join([x.text, y.text] + [u.text for u in traces]))


def cmd_simulate(args):
    ts = sample_traces(args.seq, ChannelSpec(args.t, args.m, args.seed, args.distinct),
                       workers=args.workers)
    if args.format == "json":
        print(json.dumps({"n": len(args.seq), "traces": [u.text for u in ts]}))
    else:
        sys.stdout.write(ts.to_text())


def cmd_verify_paper(args):
    return 0 if run_golden() else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hybriddeck", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=["text", "json", "csv"],
                   help="output format (deck defaults to json, ftable to csv, others to text)")
    p.add_argument("--workers", type=int, default=default_workers(),
                   help="worker processes for exhaustive scans (results do not depend on it)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("deck", help="compute a k-deck")
    s.add_argument("--seq", type=bits, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--out", help="also write the deck JSON here")
    s.set_defaults(func=cmd_deck)

    s = sub.add_parser("reconstruct", help="recover x from a deck and trace(s)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--deck", help="deck JSON file")
    s.add_argument("--trace", type=bits)
    s.add_argument("--traces", help="trace-set file, one word per line")
    s.add_argument("--vt", type=int, help="VT residue; decodes one deleted zero without a deck")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("aggregate", help="aggregate a trace set")
    s.add_argument("--traces", required=True)
    s.set_defaults(func=cmd_aggregate)

    s = sub.add_parser("balls", help="deletion/insertion balls and the max-ball check")
    s.add_argument("--seq", type=bits)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--direction", choices=["deletion", "insertion"], default="deletion")
    s.add_argument("--size-only", action="store_true")
    s.add_argument("--max-check", action="store_true")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_balls)

    s = sub.add_parser("ftable", help="exhaustive f(n,t,M) table")
    s.add_argument("--n", type=int_range, required=True)
    s.add_argument("--t", type=int_range, required=True)
    s.add_argument("--M", type=int_range, default=[1])
    s.add_argument("--max-n", type=int, help="override the search cap")
    s.set_defaults(func=cmd_ftable)

    s = sub.add_parser("witness", help="constructive lower-bound witnesses")
    s.add_argument("--kind", choices=["morse-thue", "doubling", "multitrace"], required=True)
    s.add_argument("--level", type=int, default=3)
    s.add_argument("--x", type=bits)
    s.add_argument("--y", type=bits)
    s.add_argument("--shared", type=bits)
    s.add_argument("--M", type=int, default=1)
    s.add_argument("--parity", choices=["even", "odd"], default="even")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("simulate", help="sample traces from the zero-deleting channel")
    s.add_argument("--seq", type=bits, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--distinct", action="store_true")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("verify-paper", help="run the worked examples and published witnesses")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = {"deck": "json", "ftable": "csv"}.get(args.command, "text")
    try:
        return args.func(args) or 0
    except (ReconstructionError, InconsistentDeckError, IncompatibleTracesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
