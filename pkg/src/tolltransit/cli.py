"""Command-line interface: ``tolltransit <command> ...``.

Exit codes: 0 holds, 1 violation or counterexample, 2 input error,
3 budget refusal. ``--machine`` prints one key=value document that starts
with ``v=1``.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import classes, harness
from .axioms import AXIOM_IDS, check_axioms
from .catalog import catalog
from .efgame import ef_solve
from .errors import BudgetExceeded, ContractError, DisconnectedGraphError, ParseError, TransitError
from .graphs import from_edge_list, from_graph6, to_edge_list, to_graph6
from .nondef import build_G_d, build_G_d_prime, duplicator_strategy_play, is_scant, v_id, w_structure, x_id
from .tollwalk import toll_interval, toll_interval_oracle, toll_transit
from .transit import parse_transit

OK, VIOLATED, INPUT_ERROR, REFUSED = 0, 1, 2, 3


class Report:
    def __init__(self, command: str):
        self.command = command
        self.status = "holds"
        self.fields: list[tuple[str, object]] = []
        self.lines: list[str] = []

    def add(self, key: str, value) -> None:
        self.fields.append((key, value))

    def say(self, line: str) -> None:
        self.lines.append(line)

    def machine(self) -> str:
        out = ["v=1", f"command={self.command}", f"status={self.status}"]
        out += [f"{k}={_flat(v)}" for k, v in self.fields]
        return "\n".join(out) + "\n"

    def human(self) -> str:
        return "\n".join(self.lines + [f"status: {self.status}"]) + "\n"


def _flat(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(_flat(v) for v in value)
    return str(value)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(args):
    text = _read(args.graph)
    if args.format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, found {len(lines)}", 1)
        return from_graph6(lines[0])
    return from_edge_list(text)


# -- commands -----------------------------------------------------------------------

def cmd_interval(args, rep: Report) -> int:
    g = _load_graph(args)
    ti = toll_interval(g, args.u, args.v)
    members = sorted(ti.members)
    rep.add("u", args.u)
    rep.add("v", args.v)
    rep.add("members", members)
    rep.say(f"T({args.u},{args.v}) = {members}")
    if args.verify:
        if args.u == args.v or g.has_edge(args.u, args.v):
            same = True
        else:
            same = sorted(toll_interval_oracle(g, args.u, args.v).members) == members
        rep.add("verified", same)
        rep.say(f"oracle agrees: {'yes' if same else 'no'}")
        if not same:
            rep.status = "violated"
            return VIOLATED
    return OK


def cmd_axioms(args, rep: Report) -> int:
    if (args.graph is None) == (args.transit is None):
        raise ContractError("give exactly one of --graph or --transit")
    if args.graph is not None:
        r = toll_transit(_load_graph(args))
    else:
        r = parse_transit(_read(args.transit))
    ids = args.axiom or list(AXIOM_IDS)
    code = OK
    for verdict in check_axioms(r, ids):
        rep.say(verdict.describe(r))
        if verdict.satisfied:
            rep.add(verdict.axiom, "satisfied")
        else:
            rep.add(verdict.axiom, "violated:" + ",".join(map(str, verdict.witness)))
            code = VIOLATED
    if code:
        rep.status = "violated"
    return code


def _summary(cert) -> str:
    if cert is None:
        return "-"
    if isinstance(cert, tuple):
        return " ".join(_summary(c) if isinstance(c, tuple) else str(c) for c in cert)
    return str(cert)


def cmd_classify(args, rep: Report) -> int:
    g = _load_graph(args)
    for report in classes.classify(g):
        cert = _summary(report.certificate)
        rep.say(f"{report.name}: {'yes' if report.member else 'no'}" + ("" if report.member else f" [{cert}]"))
        rep.add(report.name, f"{_flat(report.member)}:{cert}" if not report.member else "true")
    return OK


def cmd_theorem(args, rep: Report) -> int:
    harness.theorem(args.id)
    rep.add("id", args.id)
    if args.trials is not None:
        max_n = args.max_n if args.max_n is not None else 4
        pr = harness.probe_converse(args.id, args.trials, max_n, args.seed)
        rep.add("mode", "probe")
        rep.add("trials", pr.trials)
        rep.add("satisfied", pr.satisfied)
        rep.add("disconnected", len(pr.disconnected))
        rep.add("falsifications", len(pr.falsifications))
        rep.say(
            f"{args.id}: {pr.trials} trials, {pr.satisfied} satisfied the axioms, "
            f"{len(pr.disconnected)} disconnected, {len(pr.falsifications)} falsifications"
        )
        for r, member, same in pr.falsifications[:5]:
            rep.say(f"  falsified by transit function on {r.n} elements (member={member}, equal={same})")
        bad = len(pr.falsifications)
    else:
        max_n = args.max_n if args.max_n is not None else 6
        source = args.corpus if args.corpus else "builtin"
        er = harness.sweep(args.id, max_n, source, jobs=args.jobs)
        rep.add("mode", "sweep")
        rep.add("max_n", max_n)
        rep.add("graphs", er.graphs_checked)
        rep.add("hypothesis_held", er.hypothesis_held)
        rep.add("disagreements", len(er.disagreements))
        rep.say(
            f"{args.id}: {er.graphs_checked} graphs, hypothesis held on {er.hypothesis_held}, "
            f"{len(er.disagreements)} disagreements"
        )
        for g, left, right, _ in er.disagreements[:5]:
            rep.say(f"  {to_graph6(g)} left={left} right={right}")
        for i, (g, _, _, _) in enumerate(er.disagreements):
            rep.add(f"disagreement.{i}", to_graph6(g))
        bad = len(er.disagreements)
    if bad:
        rep.status = "violated"
        return VIOLATED
    return OK


def _nondef_scant(args, rep: Report) -> int:
    d = args.d
    a = is_scant(w_structure(build_G_d(d)))
    gp = build_G_d_prime(d)
    b = is_scant(w_structure(gp))
    rep.add("d", d)
    rep.add("G_d.scant", a.scant)
    rep.add("GP_d.scant", b.scant)
    rep.say(f"W(G_{d}) scant: {'yes' if a.scant else 'no'}")
    rep.say(f"W(G'_{d}) scant: {'yes' if b.scant else 'no'}")
    expected_pair = (v_id(d, 2), x_id(d))
    found = b.offending_pairs().get(expected_pair)
    if b.witness is not None:
        x, y, members = b.witness
        rep.add("GP_d.witness", [gp.label(x), gp.label(y)])
        rep.say(f"  first offending pair ({gp.label(x)}, {gp.label(y)}): {{{', '.join(gp.label(m) for m in members)}}}")
    if found is not None:
        labels = [gp.label(m) for m in found]
        rep.add("GP_d.pair_v2_x", labels)
        rep.say(f"  pair ({gp.label(expected_pair[0])}, {gp.label(expected_pair[1])}): {{{', '.join(labels)}}}")
    want = {v_id(d, 1), v_id(d, 2), x_id(d)}
    ok = a.scant and not b.scant and found is not None and set(found) == want
    if not ok:
        rep.status = "violated"
        return VIOLATED
    return OK


def _nondef_exact(args, rep: Report) -> int:
    left = args.left or f"G_d:{args.d}"
    right = args.right or f"GP_d:{args.d}"
    a, b = w_structure(catalog(left)), w_structure(catalog(right))
    res = ef_solve(a, b, args.moves)
    rep.add("left", left)
    rep.add("right", right)
    rep.add("moves", args.moves)
    rep.add("winner", res.winner)
    rep.say(f"W({left}) vs W({right}), {args.moves} moves: {res.winner} wins")
    for i, line in enumerate(res.lines()):
        rep.say("  " + line)
        rep.add(f"trace.{i}", line)
    if args.expect and args.expect != res.winner:
        rep.status = "violated"
        return VIOLATED
    return OK


def _nondef_strategy(args, rep: Report) -> int:
    rng = random.Random(args.seed)
    trials = args.trials if args.trials is not None else 100
    lost = []
    for k in range(trials):
        run = duplicator_strategy_play(args.d, args.moves, rng)
        if not run.duplicator_won:
            lost.append((k, run))
    rep.add("d", args.d)
    rep.add("moves", args.moves)
    rep.add("seed", args.seed)
    rep.add("runs", trials)
    rep.add("won", trials - len(lost))
    rep.say(f"strategy d={args.d} moves={args.moves} seed={args.seed}: won {trials - len(lost)}/{trials}")
    for k, run in lost[:3]:
        rep.say(f"  lost run {k}:")
        rep.say("    " + run.trace().replace("\n", "\n    "))
    if lost:
        rep.status = "violated"
        return VIOLATED
    return OK


def cmd_nondef(args, rep: Report) -> int:
    if args.mode is not None:
        sub = {"exact": "ef-exact", "strategy": "ef-strategy"}[args.mode] if args.sub is None else args.sub
    else:
        sub = args.sub or "scant"
    rep.add("sub", sub)
    if sub == "scant":
        return _nondef_scant(args, rep)
    if sub == "ef-exact":
        return _nondef_exact(args, rep)
    return _nondef_strategy(args, rep)


def cmd_catalog(args, rep: Report) -> int:
    g = catalog(args.name)
    text = to_graph6(g) + "\n" if args.emit == "graph6" else to_edge_list(g)
    rep.add("name", args.name)
    rep.add("n", g.n)
    rep.add("m", g.m)
    rep.add("graph", text.strip().replace("\n", ";"))
    rep.emitted = text
    return OK


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tolltransit", description="Toll walk transit functions and their axioms.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph=True):
        sp.add_argument("--machine", action="store_true", help="print a key=value document")
        if graph:
            sp.add_argument("--graph", help="graph file, '-' for stdin")
            sp.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    sp = sub.add_parser("interval", help="toll interval T(u,v)")
    common(sp)
    sp.add_argument("u", type=int)
    sp.add_argument("v", type=int)
    sp.add_argument("--verify", action="store_true", help="cross-check with the walk automaton")

    sp = sub.add_parser("axioms", help="check betweenness axioms")
    common(sp)
    sp.add_argument("--transit", help="transit function file")
    sp.add_argument("--axiom", action="append", choices=AXIOM_IDS, help="axiom id (repeatable)")

    sp = sub.add_parser("classify", help="graph class membership")
    common(sp)

    sp = sub.add_parser("theorem", help="sweep or probe a theorem")
    common(sp, graph=False)
    sp.add_argument("--id", required=True)
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--corpus", help="graph6 corpus file")
    sp.add_argument("--trials", type=int, help="probe the converse with this many random transit functions")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("nondef", help="gadget structures and EF games")
    common(sp, graph=False)
    sp.add_argument("sub", nargs="?", choices=("scant", "ef-exact", "ef-strategy"))
    sp.add_argument("--mode", choices=("exact", "strategy"))
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--moves", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, help="strategy runs")
    sp.add_argument("--left", help="catalog name for the left structure")
    sp.add_argument("--right", help="catalog name for the right structure")
    sp.add_argument("--expect", choices=("Spoiler", "Duplicator"), help="exit 1 unless this side wins")

    sp = sub.add_parser("catalog", help="emit a named graph")
    common(sp, graph=False)
    sp.add_argument("name")
    sp.add_argument("--emit", choices=("edgelist", "graph6"), default="edgelist")
    return p


COMMANDS = {
    "interval": cmd_interval,
    "axioms": cmd_axioms,
    "classify": cmd_classify,
    "theorem": cmd_theorem,
    "nondef": cmd_nondef,
    "catalog": cmd_catalog,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report(args.command)
    needs_graph = args.command in ("interval", "classify")
    try:
        if needs_graph and args.graph is None:
            raise ContractError("--graph is required")
        code = COMMANDS[args.command](args, rep)
    except BudgetExceeded as exc:
        rep.status = "error"
        rep.add("error", str(exc))
        code = REFUSED
    except (ContractError, ParseError, TransitError, DisconnectedGraphError, OSError, ValueError) as exc:
        rep.status = "error"
        rep.add("error", str(exc))
        code = INPUT_ERROR
    if args.machine:
        sys.stdout.write(rep.machine())
    elif code in (INPUT_ERROR, REFUSED):
        sys.stderr.write(f"error: {dict(rep.fields)['error']}\n")
    elif args.command == "catalog":
        sys.stdout.write(rep.emitted)
    else:
        sys.stdout.write(rep.human())
    return code


if __name__ == "__main__":
    sys.exit(main())
