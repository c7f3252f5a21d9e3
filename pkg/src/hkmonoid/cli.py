"""Command-line interface: ``hkmonoid <subcommand> [graph source] [options]``.

Exit status: 0 on success, 1 on bad input, 2 when a verification
(confluence, oracle) finds a violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from .automaton import (
    BudgetExceeded,
    build_normal_dfa,
    classify_growth,
    enumerate_normal_words,
    growth_report,
    leading_term_language,
    minimal_forbidden_words,
)
from .cycle import CycleError, build_S, build_Sprime, enumerate_Sprime_rules, t_schema_lines
from .digraph import Digraph, DigraphError, cycle_graph, example_s4, has_two_connected_cycles, is_acyclic, parse_digraph, path_graph
from .oracle import DEFAULT_BUDGET, DEFAULT_SLACK, crosscheck
from .rewriting import (
    RuleSystem,
    check_local_confluence,
    normal_form,
    normal_form_random,
    t_system,
)
from .words import GenOrder, WordError, format_word, parse_word

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    graph: Digraph
    graph_label: str
    order: GenOrder
    fmt: str
    seed: int
    budget: int
    word_style: str


def _graph_from_args(args) -> tuple[Digraph, str]:
    sources = [s for s in (args.graph, args.cycle, args.path, args.example_s4 or None) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one graph source: --graph FILE, --cycle N, --path N or --example-s4")
    if args.graph is not None:
        return parse_digraph(Path(args.graph).read_text(encoding="utf-8")), str(args.graph)
    if args.cycle is not None:
        return cycle_graph(args.cycle), f"C_{args.cycle}"
    if args.path is not None:
        return path_graph(args.path), f"P_{args.path}"
    return example_s4(), "example-s4"


def _config(args) -> RunConfig:
    g, label = _graph_from_args(args)
    if args.order:
        order = GenOrder(parse_word(args.order))
        if order.n != g.n:
            raise UsageError(f"--order has {order.n} generators, graph has {g.n}")
    else:
        order = GenOrder.identity(g.n)
    if args.budget <= 0:
        raise UsageError("--budget must be positive")
    return RunConfig(g, label, order, args.format, args.seed, args.budget, args.word_style)


def _records(pairs: Sequence[tuple[str, object]]) -> str:
    return "".join(f"{k}\t{v}\n" for k, v in pairs)


def _system(cfg: RunConfig, name: str) -> RuleSystem:
    if name == "T":
        return t_system(cfg.graph, cfg.order)
    n = cfg.graph.n
    if n < 3 or cfg.graph != cycle_graph(n):
        raise UsageError(f"system {name} is only defined for the cycle 1->2->...->n->1")
    if not cfg.order.is_identity():
        raise UsageError(f"system {name} uses the natural generator order")
    return build_S(n) if name == "S" else build_Sprime(n)


def _w(cfg: RunConfig, w) -> str:
    return format_word(w, cfg.word_style)


def _positive(args, name: str) -> int:
    value = getattr(args, name)
    if value < 0:
        raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
    return value


# -- subcommands ------------------------------------------------------------------------


def cmd_normalize(cfg: RunConfig, args, out) -> int:
    sys_ = _system(cfg, args.system)
    w = parse_word(args.word, cfg.graph.n)
    if args.strategy == "random":
        nf = normal_form_random(sys_, w, random.Random(cfg.seed))
    else:
        nf = normal_form(sys_, w)
    if cfg.fmt == "records":
        out.write(_records([("system", sys_.name), ("input", _w(cfg, w)), ("normal_form", _w(cfg, nf))]))
    else:
        out.write(_w(cfg, nf) + "\n")
    return EXIT_OK


def cmd_eq(cfg: RunConfig, args, out) -> int:
    n = cfg.graph.n
    u, v = parse_word(args.u, n), parse_word(args.v, n)
    sys_ = t_system(cfg.graph, cfg.order)
    nu, nv = normal_form(sys_, u), normal_form(sys_, v)
    if cfg.fmt == "records":
        out.write(_records([("u_normal_form", _w(cfg, nu)), ("v_normal_form", _w(cfg, nv)), ("equal", str(nu == nv).lower())]))
    else:
        out.write(("equal" if nu == nv else "not equal") + "\n")
    return EXIT_OK


def cmd_basis(cfg: RunConfig, args, out) -> int:
    if args.schema:
        pset = leading_term_language(cfg.graph, cfg.order)
        lines = t_schema_lines()
        for p in pset.patterns:
            inner = ",".join(_w(cfg, (x,)) for x in sorted(p.inner))
            lines.append(f"{p.family}\t{_w(cfg, (p.first,))}<{inner}>{_w(cfg, (p.last,))}")
        out.write("\n".join(lines) + "\n")
        return EXIT_OK
    n = cfg.graph.n
    if n < 3 or cfg.graph != cycle_graph(n):
        raise UsageError("the finite rule list exists for cycles only; use --schema for other graphs")
    rules = enumerate_Sprime_rules(n, cap=args.cap)
    if cfg.fmt == "json-like":
        payload = [{"kind": r.kind, "lead": list(r.lead), "replacement": list(r.replacement)} for r in rules]
        out.write(json.dumps({"n": n, "rules": payload}, indent=1) + "\n")
    elif cfg.fmt == "dot-rules":
        out.write("digraph rules {\n")
        for k, r in enumerate(rules):
            out.write(f'  l{k} [label="{_w(cfg, r.lead)}"]; r{k} [label="{_w(cfg, r.replacement)}"];\n')
            out.write(f'  l{k} -> r{k} [label="{r.kind}"];\n')
        out.write("}\n")
    elif cfg.fmt == "records":
        out.write(_records([(r.kind, f"{_w(cfg, r.lead)}\t{_w(cfg, r.replacement)}") for r in rules]))
    else:
        for r in rules:
            out.write(f"{r.kind:7} {_w(cfg, r.lead)} -> {_w(cfg, r.replacement)}\n")
        out.write(f"# {len(rules)} rules\n")
    return EXIT_OK


def cmd_automaton(cfg: RunConfig, args, out) -> int:
    dfa = build_normal_dfa(leading_term_language(cfg.graph, cfg.order), minimize=not args.no_minimize)
    dot = dfa.to_dot()
    if args.out:
        Path(args.out).write_text(dot, encoding="utf-8")
        if cfg.fmt == "records":
            out.write(_records([("states", dfa.num_states), ("dead", dfa.dead), ("dot", args.out)]))
        else:
            out.write(f"{dfa.num_states} states (dead state {dfa.dead}) written to {args.out}\n")
    else:
        out.write(dot)
    return EXIT_OK


def cmd_growth(cfg: RunConfig, args, out) -> int:
    dfa = build_normal_dfa(leading_term_language(cfg.graph, cfg.order))
    rep = growth_report(dfa, _positive(args, "max_len"))
    if cfg.fmt == "records":
        pairs: list[tuple[str, object]] = [("classification", rep.classification)]
        if rep.gk is not None:
            pairs.append(("gk", rep.gk))
        pairs += [(f"count_{k}", c) for k, c in enumerate(rep.counts)]
        out.write(_records(pairs))
    else:
        out.write("length\tcount\tcumulative\n")
        for k, (c, s) in enumerate(zip(rep.counts, rep.cumulative)):
            out.write(f"{k}\t{c}\t{s}\n")
        out.write(f"# {rep.label}\n")
    if args.plot:
        from .plotting import plot_growth

        plot_growth(rep, args.plot, title=cfg.graph_label)
    return EXIT_OK


def cmd_classify(cfg: RunConfig, args, out) -> int:
    dfa = build_normal_dfa(leading_term_language(cfg.graph, cfg.order))
    kind, gk = classify_growth(dfa)
    label = f"gk={gk}" if gk is not None else kind
    two = has_two_connected_cycles(cfg.graph)
    if cfg.fmt == "records":
        pairs: list[tuple[str, object]] = [("growth", label), ("classification", kind)]
        if gk is not None:
            pairs.append(("gk", gk))
        pairs += [("two_connected_cycles", str(two).lower()), ("acyclic", str(is_acyclic(cfg.graph)).lower())]
        out.write(_records(pairs))
    else:
        verdict = "two distinct cycles joined by a path" if two else "no two cycles joined by a path"
        out.write(f"{label}\ngraph criterion: {verdict}\n")
    return EXIT_OK


def cmd_obstructions(cfg: RunConfig, args, out) -> int:
    words = minimal_forbidden_words(cfg.graph, cfg.order, _positive(args, "max_len"))
    if cfg.fmt == "records":
        out.write(_records([("obstruction", _w(cfg, w)) for w in words]))
    else:
        out.write("".join(_w(cfg, w) + "\n" for w in words))
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig, args, out) -> int:
    dfa = build_normal_dfa(leading_term_language(cfg.graph, cfg.order))
    words = enumerate_normal_words(dfa, _positive(args, "max_len"), cap=cfg.budget)
    if cfg.fmt == "records":
        out.write(_records([("word", _w(cfg, w)) for w in words]))
    else:
        out.write("".join(_w(cfg, w) + "\n" for w in words))
    return EXIT_OK


def cmd_confluence(cfg: RunConfig, args, out) -> int:
    if args.max_len < 1:
        raise UsageError("--max-len must be at least 1")
    if args.show < 0:
        raise UsageError("--show must be non-negative")
    sys_ = _system(cfg, args.system)
    rep = check_local_confluence(sys_, args.max_len, limit=args.show)
    if cfg.fmt == "records":
        pairs: list[tuple[str, object]] = [
            ("system", sys_.name),
            ("max_len", rep.max_len),
            ("words_checked", rep.words_checked),
            ("ambiguous_words", rep.ambiguous_words),
            ("ok", str(rep.ok).lower()),
        ]
        pairs += [("counterexample", _w(cfg, w)) for w, _ in rep.counterexamples]
        out.write(_records(pairs))
    else:
        out.write(
            f"{sys_.name}: {rep.words_checked} words up to length {rep.max_len}, "
            f"{rep.ambiguous_words} with several one-step reducts\n"
        )
        for w, nfs in rep.counterexamples:
            detail = ", ".join(f"{_w(cfg, r)} => {_w(cfg, nf)}" for r, nf in sorted(nfs.items()))
            out.write(f"counterexample {_w(cfg, w)}: {detail}\n")
        out.write("ok\n" if rep.ok else "NOT locally confluent\n")
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_oracle_check(cfg: RunConfig, args, out) -> int:
    rep = crosscheck(cfg.graph, _positive(args, "max_len"), _positive(args, "slack"), budget=cfg.budget)
    if cfg.fmt == "records":
        pairs: list[tuple[str, object]] = [
            ("classes", rep.classes),
            ("flagged_classes", rep.flagged_classes),
            ("class_cumulative", ",".join(map(str, rep.class_counts))),
            ("automaton_cumulative", ",".join(map(str, rep.automaton_counts))),
            ("ok", str(rep.ok).lower()),
        ]
        pairs += [("violation", v) for v in rep.violations] + [("unverified", v) for v in rep.unverified]
        out.write(_records(pairs))
    else:
        out.write(
            f"{rep.classes} classes up to length {rep.max_len} (slack {rep.slack}); "
            f"{rep.flagged_classes} reach the length ceiling\n"
        )
        out.write(f"cumulative classes   {rep.class_counts}\ncumulative automaton {rep.automaton_counts}\n")
        for v in rep.violations:
            out.write(f"violation: {v}\n")
        for v in rep.unverified:
            out.write(f"unverified: {v}\n")
        out.write("ok\n" if rep.ok else "FAILED\n")
    return EXIT_OK if rep.ok else EXIT_VERIFY


COMMANDS = {
    "normalize": cmd_normalize,
    "eq": cmd_eq,
    "basis": cmd_basis,
    "automaton": cmd_automaton,
    "growth": cmd_growth,
    "classify": cmd_classify,
    "obstructions": cmd_obstructions,
    "enumerate": cmd_enumerate,
    "confluence": cmd_confluence,
    "oracle-check": cmd_oracle_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_argument_group("graph source (exactly one)")
    src.add_argument("--graph", metavar="FILE", help="graph file: 'n=<int>' then one 'i->j' per line")
    src.add_argument("--cycle", type=int, metavar="N", help="built-in oriented cycle C_N")
    src.add_argument("--path", type=int, metavar="N", help="built-in oriented path 1->2->...->N")
    src.add_argument("--example-s4", action="store_true", help="C_3 on a,b,c plus the arrow a->d")
    common.add_argument("--order", help="generator order, smallest first, e.g. '2 1 3' (default natural)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized strategies")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="word-enumeration cap")
    common.add_argument("--word-style", choices=("letters", "indices"), default="letters")

    parser = _Parser(prog="hkmonoid", description="Hecke-Kiselman monoids of oriented graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_: str, formats=("text", "records")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--format", choices=formats, default=formats[0])
        return p

    p = add("normalize", "reduce a word to normal form")
    p.add_argument("--system", choices=("T", "S", "Sprime"), default="T")
    p.add_argument("--strategy", choices=("leftmost", "random"), default="leftmost")
    p.add_argument("word")

    p = add("eq", "decide whether two words are equal in the monoid")
    p.add_argument("u")
    p.add_argument("v")

    p = add("basis", "export the finite S' rule list (cycles) or the pattern schema", ("text", "dot-rules", "json-like", "records"))
    p.add_argument("--schema", action="store_true")
    p.add_argument("--cap", type=int, default=8, help="largest cycle length to enumerate")

    p = add("automaton", "build the normal-word DFA and write it as DOT")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--no-minimize", action="store_true")

    p = add("growth", "count normal words per length", ("table", "records", "text"))
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--plot", metavar="FILE", help="also render the counts to an image file")

    add("classify", "finite | gk=<int> | exponential, plus the graph criterion")

    p = add("obstructions", "minimal leading terms up to a length")
    p.add_argument("--max-len", type=int, default=8)

    p = add("enumerate", "list normal words up to a length")
    p.add_argument("--max-len", type=int, default=4)

    p = add("confluence", "check local confluence on all words up to a length")
    p.add_argument("--system", choices=("T", "S", "Sprime"), default="T")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--show", type=int, default=10, help="counterexamples to print")

    p = add("oracle-check", "compare normal forms with brute-force congruence closure")
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--slack", type=int, default=DEFAULT_SLACK)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if cfg.fmt == "table":
            cfg = RunConfig(cfg.graph, cfg.graph_label, cfg.order, "text", cfg.seed, cfg.budget, cfg.word_style)
        return COMMANDS[args.command](cfg, args, out)
    except (UsageError, DigraphError, WordError, CycleError, BudgetExceeded, OSError) as exc:
        print(f"hkmonoid {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
