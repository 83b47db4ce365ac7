"""Command-line front end: tables, verification suites, experiments, play.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import inspect
import os
import sys

from . import experiments, games, sequences, serialize, tables, verify, words


class _SubParser(argparse.ArgumentParser):
    """Subcommand parser that also accepts the global flags after the command."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        _add_common(self, suppress=True)


def _add_common(parser, suppress=False):
    # On subparsers the defaults are suppressed so a flag given before the
    # subcommand is not clobbered by the subparser's parse pass.
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("tsv", "csv", "bfile", "json"),
                        default=default(None), help="output format (default tsv)")
    parser.add_argument("--out", metavar="FILE", default=default(None),
                        help="write output to FILE")
    parser.add_argument("--threads", type=int, default=default(1),
                        help="accepted for interface compatibility; results are "
                        "deterministic and computed single-threaded")
    parser.add_argument("--seed-cap", type=int, default=default(10**8),
                        dest="seed_cap",
                        help="scan cap for fixed-point letter searches")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="splythoff",
        description="Generators, solvers and cross-checks for Wythoff-style "
        "split games and k-bonacci substitution tables.",
    )
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_SubParser)

    p = sub.add_parser("word", help="letters of a substitution fixed point")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delete", type=int, default=None, metavar="LETTER",
                   help="drop every occurrence of LETTER")

    p = sub.add_parser("table", help="print a sequence table")
    p.add_argument("kind", choices=("positions", "diff", "ddiff", "wythoff",
                                    "splythoff", "quadribonacci", "beatty"))
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--row", help="row name for bfile output")

    p = sub.add_parser("verify", help="run cross-verification suites")
    p.add_argument("checks", nargs="*", default=["all"],
                   metavar="CHECK", help=f"all or any of: {', '.join(verify.CHECKS)}")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--upto", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--figures", metavar="DIR",
                   help="render grid figures into DIR alongside the report")

    p = sub.add_parser("experiment", help="step-code experiment for a split game")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--candidate", action="append", default=[],
                   metavar="SPEC", help='substitution as "0:01,1:2,2:01"')
    p.add_argument("--figures", metavar="DIR",
                   help="render the alphabet-growth figure into DIR")

    p = sub.add_parser("export", help="write one table row as an OEIS-style b-file")
    p.add_argument("kind", choices=("positions", "diff", "ddiff", "wythoff",
                                    "splythoff", "quadribonacci", "beatty"))
    p.add_argument("--row", required=True)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)

    p = sub.add_parser("play", help="interactive text game against the engine")
    p.add_argument("--family", choices=games.FAMILIES, default="splythoff")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--start", type=int, nargs=2, default=(4, 7),
                   metavar=("M", "N"), help="starting pile sizes")
    return parser


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _build_table(args):
    kind, k, n = args.kind, args.k, args.n
    if kind == "positions":
        return tables.positions_table(k, n)
    if kind == "diff":
        return tables.difference_table(k, n)
    if kind == "ddiff":
        return tables.double_difference_table(k, n)
    if kind == "wythoff":
        return sequences.wythoff_columns(n)
    if kind == "splythoff":
        return sequences.splythoff_columns(n)
    if kind == "quadribonacci":
        return sequences.quadribonacci_columns(n)
    pair = sequences.wythoff_ab_params(args.a, args.b)
    return sequences.MexTable(
        "beatty", ["A", "B"],
        {"A": pair.a_sequence(n), "B": pair.b_sequence(n)},
    )


def _table_text(table, fmt, row):
    if fmt == "bfile":
        if not row:
            raise ValueError("bfile output needs --row")
        return serialize.row_to_bfile(table.row(row))
    if fmt == "csv":
        return serialize.table_to_csv(table)
    if fmt == "json":
        raise ValueError("json format applies to experiment records only")
    return serialize.table_to_tsv(table)


def cmd_word(args):
    word = words.fixed_point_prefix(words.kbonacci_substitution(args.k), 0, args.n)
    if args.delete is not None:
        images = tuple(
            b"" if j == args.delete else bytes([j]) for j in range(args.k)
        )
        word = words.Coding(images).apply(word)
    _emit(args, serialize.word_to_text(word) + "\n")
    return 0


def cmd_table(args):
    table = _build_table(args)
    _emit(args, _table_text(table, args.format or "tsv", args.row))
    return 0


def _verify_overrides(args):
    provided = {
        "n": args.n, "k": args.k, "upto": args.upto,
        "bound": args.bound, "size": args.size,
    }
    overrides = {}
    for name, func in verify.CHECKS.items():
        accepted = inspect.signature(func).parameters
        kwargs = {
            key: value
            for key, value in provided.items()
            if value is not None and key in accepted
        }
        if kwargs:
            overrides[name] = kwargs
    return overrides

def cmd_verify(args):
    lines = []
    failed = False
    for report in verify.run_checks(tuple(args.checks), _verify_overrides(args)):
        lines.append(report.line())
        failed = failed or not report.passed
    if args.figures:
        from . import plots

        os.makedirs(args.figures, exist_ok=True)
        grid = games.sprague_grundy_grid(games.SPLYTHOFF, 18)
        plots.render_grid_heatmap(
            grid, os.path.join(args.figures, "sg-grid-18.png")
        )
        lines.append(f"figures written to {args.figures}")
    _emit(args, "\n".join(lines) + "\n")
    return 1 if failed else 0


def cmd_experiment(args):
    ns = [args.n]
    if args.figures:
        ns = sorted({max(2, args.n // 8), max(2, args.n // 4),
                     max(2, args.n // 2), args.n})
    records = [
        experiments.run_experiment(args.a, n, candidates=args.candidate)
        for n in ns
    ]
    if args.figures:
        from . import plots

        os.makedirs(args.figures, exist_ok=True)
        plots.render_alphabet_growth(
            records, os.path.join(args.figures, f"alphabet-growth-a{args.a}.png")
        )
    _emit(args, "\n".join(rec.to_json() for rec in records) + "\n")
    return 0


def cmd_export(args):
    args.format = "bfile"
    return cmd_table(args)


def _engine_move(rules, pos, grid):
    best = None
    for succ in sorted(games.legal_moves(rules, pos)):
        if grid.value(succ.a, succ.b) == 0:
            return succ, True
        best = best or succ
    return best, False


def cmd_play(args):
    rules = games.GameRules(args.family, args.a)
    pos = games.Position(*args.start)
    grid = games.sprague_grundy_grid(rules, pos.b + 1)
    print(f"Playing {rules.family} (a={rules.a}) from ({pos.a},{pos.b}). "
          "You move first: 'single p t', 'double x y' or 'split x y c'.")
    while True:
        if pos == games.Position(0, 0):
            print("Engine took the last counter and wins.")
            return 0
        try:
            line = input(f"({pos.a},{pos.b}) your move> ").strip()
        except EOFError:
            print("No input; stopping.")
            return 0
        target = _parse_move(pos, line)
        if target is None or target not in games.legal_moves(rules, pos):
            print("Illegal move; allowed forms: single p t / double x y / split x y c.")
            continue
        pos = target
        if pos == games.Position(0, 0):
            print("You took the last counter and win!")
            return 0
        reply, winning = _engine_move(rules, pos, grid)
        print(("Engine moves to" if winning else "Engine (no winning move) moves to")
              + f" ({reply.a},{reply.b}).")
        pos = reply


def _parse_move(pos, line):
    parts = line.split()
    try:
        if parts[0] == "single" and len(parts) == 3:
            pile, take = int(parts[1]), int(parts[2])
            piles = [pos.a, pos.b]
            piles[pile] -= take
            return games.Position(piles[0], piles[1])
        if parts[0] == "double" and len(parts) == 3:
            return games.Position(pos.a - int(parts[1]), pos.b - int(parts[2]))
        if parts[0] == "split" and len(parts) == 4:
            x, y, c = int(parts[1]), int(parts[2]), int(parts[3])
            rest = (pos.a - x) + (pos.b - y)
            return games.Position(c, rest - c)
    except (ValueError, IndexError):
        return None
    return None


COMMANDS = {
    "word": cmd_word,
    "table": cmd_table,
    "verify": cmd_verify,
    "experiment": cmd_experiment,
    "export": cmd_export,
    "play": cmd_play,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
