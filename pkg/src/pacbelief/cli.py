"""Scripted and interactive belief-change sessions.

A script is a sequence of commands, one per line; ``#`` starts a comment.
Every command prints exactly one result line (``tables`` prints a block).

    atoms p q r                   fix the signature (otherwise it grows as atoms appear)
    ceiling 3                     set T, the top rank
    base 2: p -> q                add a ranked base entry
    load base FILE                read a ranked-base file (T=<int>, <rank>: <formula>)
    load sources FILE             read a source registry (<id> <trust>)
    source s1 2                   register a source with its trust level
    mode constant|absurdity-aware choose the reliability function
    expand "p" from s1            also contract, revise, revise-rl
    query "p | q"                 membership in the current belief set
    rerank 2: p                   rank to use for p when materializing strictly
    materialize strict|naive      turn a changed state back into a ranked base
    show / status / why / tables
    suite all seed 0 [cases N]    run postulate suites
    dump suite|transcript FILE

Guard rejections are results, not errors.  Errors stop a script unless
``--keep-going`` is given.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, TextIO

from .change import (
    BeliefState, ChangeRecord, ContractedView, NotBaseBacked, StrictMaterializationError,
    contract, expand, materialize, member, revise_levi, revise_reverse_levi,
)
from .entrenchment import (
    RELIABILITY_MODES, RankedBase, Reliability, SourceRegistry, UnknownSourceError,
    dump_ranked_base, load_ranked_base, load_registry,
)
from .formula import BOTTOM, Formula, Signature, atoms_of, parse
from .harness import SUITES, GenConfig, run_suite
from .report import Report
from .semantics import dump_tables

EXIT_OK, EXIT_ERROR, EXIT_SUITE = 0, 1, 2

_CHANGE_RE = re.compile(r'(?:"([^"]*)"|(.+?))\s+from\s+(\S+)\Z')
_RANKED_RE = re.compile(r"(\d+)\s*:\s*(.+)\Z")
_QUOTED_RE = re.compile(r'"([^"]*)"\Z')

_OPERATORS = {
    "expand": expand,
    "contract": contract,
    "revise": revise_levi,
    "revise-rl": revise_reverse_levi,
}


class CommandError(Exception):
    pass


@dataclass
class Entry:
    line: int
    command: str
    output: str

    def record(self) -> dict:
        return {"line": self.line, "command": self.command, "output": self.output}


@dataclass
class Session:
    """Everything a script can change, plus the transcript of what it did."""

    sig: Signature | None = None
    ceiling: int = 3
    registry: SourceRegistry = field(default_factory=lambda: SourceRegistry(3))
    mode: str = "constant"
    policy: str = "strict"
    state: BeliefState | ContractedView | None = None
    reranks: dict[Formula, int] = field(default_factory=dict)
    last: ChangeRecord | None = None
    suite_report: Report | None = None
    suite_failed: bool = False
    transcript: list[Entry] = field(default_factory=list)
    cwd: Path = field(default_factory=Path)

    def __post_init__(self):
        if self.state is None:
            self.state = BeliefState(RankedBase((), self.sig or Signature(["p"]), self.ceiling))

    # -- helpers ---------------------------------------------------------

    @property
    def rel(self) -> Reliability:
        return Reliability(self.mode, self.registry)

    def formula(self, text: str) -> Formula:
        m = _QUOTED_RE.match(text.strip())
        try:
            return parse(m.group(1) if m else text, self.sig)
        except ValueError as e:
            raise CommandError(str(e)) from None

    def base(self, op: str) -> RankedBase:
        st = self.state
        if isinstance(st, BeliefState) and st.base_backed:
            return st.base
        raise CommandError(f"{op} needs a ranked base; materialize the changed state first")

    def _ensure_base_backed(self, op: str) -> None:
        if isinstance(self.state, BeliefState) and self.state.base_backed:
            return
        if self.policy == "naive":
            self.state = materialize(self.state, "naive")
            return
        raise CommandError(
            f"{op} on a changed state needs re-ranking: give 'rerank' lines and "
            "'materialize strict', or switch to 'materialize naive'")

    def used_atoms(self) -> list[str]:
        st = self.state
        base = st.base if isinstance(st, BeliefState) else st.origin
        used: list[str] = []
        for f in base.formulas + tuple(st.pending):
            for a in sorted(atoms_of(f)):
                if a not in used:
                    used.append(a)
        return used

    # -- execution -------------------------------------------------------

    def execute(self, command: str) -> str:
        """Run one command and return its result line; errors are raised."""
        word, _, rest = command.strip().partition(" ")
        rest = rest.strip()
        handler = _COMMANDS.get(word)
        if handler is None:
            raise CommandError(f"unknown command {word!r}")
        return handler(self, rest)

    def run_line(self, command: str, line: int) -> Entry | None:
        """Execute, record and return the transcript entry (None for blank lines)."""
        stripped = command.split("#", 1)[0].strip()
        if not stripped:
            return None
        try:
            out = self.execute(stripped)
            entry = Entry(line, stripped, out)
        except (CommandError, ValueError, KeyError, OSError) as e:
            msg = e.args[0] if isinstance(e, KeyError) and e.args else e
            entry = Entry(line, stripped, f"error: line {line}: {msg}")
        self.transcript.append(entry)
        return entry


def _cmd_atoms(s: Session, rest: str) -> str:
    names = rest.split()
    sig = Signature(names)
    missing = [a for a in s.used_atoms() if a not in sig]
    if missing:
        raise CommandError(f"atoms {' '.join(missing)} are already in use")
    s.sig = sig
    base = s.base("atoms")
    s.state = BeliefState(base.with_signature(sig), (), s.state.provenance)
    return f"atoms: {' '.join(sig.atoms)}"


def _cmd_ceiling(s: Session, rest: str) -> str:
    if not rest.isdigit() or int(rest) < 1:
        raise CommandError(f"ceiling must be a positive integer, got {rest!r}")
    t = int(rest)
    base = s.base("ceiling")
    registry = SourceRegistry(t, {k: v.trust for k, v in s.registry.items()})
    s.state = BeliefState(RankedBase(base.entries, base.sig, t), (), s.state.provenance)
    s.registry = registry
    s.ceiling = t
    return f"ceiling: {t}"


def _cmd_base(s: Session, rest: str) -> str:
    m = _RANKED_RE.match(rest)
    if not m:
        raise CommandError("expected 'base <rank>: <formula>'")
    f, r = s.formula(m.group(2)), int(m.group(1))
    base = s.base("base")
    s.state = BeliefState(base.add(f, r), (), s.state.provenance)
    return f"base: {r}: {f}"


def _cmd_load(s: Session, rest: str) -> str:
    kind, _, name = rest.partition(" ")
    path = s.cwd / name.strip()
    text = path.read_text(encoding="utf-8")
    if kind == "base":
        rb = load_ranked_base(text, s.sig)
        s.base("load base")
        s.registry = SourceRegistry(rb.ceiling, {k: v.trust for k, v in s.registry.items()})
        s.ceiling = rb.ceiling
        s.state = BeliefState(rb, (), s.state.provenance)
        return f"load: base {name.strip()} ({len(rb)} entries, T={rb.ceiling})"
    if kind == "sources":
        reg = load_registry(text, s.ceiling)
        for src in reg.values():
            s.registry.register(src.id, src.trust)
        return f"load: sources {name.strip()} ({len(reg)} sources)"
    raise CommandError("expected 'load base <file>' or 'load sources <file>'")


def _cmd_source(s: Session, rest: str) -> str:
    parts = rest.split()
    if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
        raise CommandError("expected 'source <id> <trust>'")
    src = s.registry.register(parts[0], int(parts[1]))
    return f"source: {src.id} trust {src.trust}"


def _cmd_mode(s: Session, rest: str) -> str:
    if rest not in RELIABILITY_MODES:
        raise CommandError(f"mode must be one of {', '.join(RELIABILITY_MODES)}")
    s.mode = rest
    return f"mode: {rest}"


def _change(kind: str) -> Callable[[Session, str], str]:
    op = _OPERATORS[kind]

    def run(s: Session, rest: str) -> str:
        m = _CHANGE_RE.match(rest)
        if not m:
            raise CommandError(f'expected \'{kind} "<formula>" from <source>\'')
        f = s.formula(m.group(1) if m.group(1) is not None else m.group(2))
        try:
            i = s.registry.input(f, m.group(3))
        except UnknownSourceError as e:
            raise CommandError(e.args[0]) from None
        if kind != "expand":
            s._ensure_base_backed(kind)
        try:
            s.state, rec = op(s.state, i, s.rel)
        except NotBaseBacked as e:
            raise CommandError(str(e)) from None
        s.last = rec
        verdict = "accepted" if rec.accepted else "rejected"
        return f"{kind}: {verdict} {i} ({'; '.join(map(str, rec.guards))})"

    return run


def _cmd_query(s: Session, rest: str) -> str:
    f = s.formula(rest)
    return f"query: {'true' if member(s.state, f) else 'false'}"


def _cmd_rerank(s: Session, rest: str) -> str:
    m = _RANKED_RE.match(rest)
    if not m:
        raise CommandError("expected 'rerank <rank>: <formula>'")
    f, r = s.formula(m.group(2)), int(m.group(1))
    if not 1 <= r <= s.ceiling:
        raise CommandError(f"rank {r} is outside 1..{s.ceiling}")
    s.reranks[f] = r
    return f"rerank: {r}: {f}"


def _cmd_materialize(s: Session, rest: str) -> str:
    if rest not in ("strict", "naive"):
        raise CommandError("expected 'materialize strict' or 'materialize naive'")
    s.policy = rest
    if isinstance(s.state, BeliefState) and s.state.base_backed:
        return f"materialize: {rest} (already a ranked base)"
    try:
        s.state = materialize(s.state, rest, s.reranks)
    except StrictMaterializationError as e:
        raise CommandError(str(e)) from None
    s.reranks = {}
    return f"materialize: {rest} ({len(s.state.base)} entries)"


def _cmd_show(s: Session, rest: str) -> str:
    st = s.state
    if isinstance(st, BeliefState):
        entries = "; ".join(f"{r}: {f}" for f, r in st.base.entries) or "empty"
        pending = "".join(f" + {f}" for f in st.pending)
        return f"show: T={st.base.ceiling} [{entries}]{pending}"
    entries = "; ".join(f"{r}: {f}" for f, r in st.origin.entries) or "empty"
    pending = "".join(f" + {f}" for f in st.pending)
    how = f"contracted by {st.pivot} above {st.cutlevel}" if st.accepted else "unchanged"
    return f"show: T={st.origin.ceiling} [{entries}] {how}{pending}"


def _cmd_status(s: Session, rest: str) -> str:
    st = s.state
    size = len(st.base) if isinstance(st, BeliefState) else len(st.origin)
    kind = "base" if isinstance(st, BeliefState) and st.base_backed else "changed"
    trivial = "true" if member(st, BOTTOM) else "false"
    return (f"status: trivial={trivial} base={size} pending={len(st.pending)} "
            f"state={kind} mode={s.mode} policy={s.policy}")


def _cmd_why(s: Session, rest: str) -> str:
    if s.last is None:
        return "why: no change yet"
    verdict = "accepted" if s.last.accepted else "rejected"
    return f"why: {s.last.kind} {verdict}: {'; '.join(map(str, s.last.guards))}"


def _cmd_tables(s: Session, rest: str) -> str:
    return "tables:\n" + dump_tables()


def _cmd_suite(s: Session, rest: str) -> str:
    words = rest.split()
    if not words:
        raise CommandError("expected 'suite <names> [seed <n>] [cases <n>]'")
    names = list(SUITES) if words[0] == "all" else words[0].split(",")
    opts = dict(zip(words[1::2], words[2::2]))
    if len(words) % 2 == 0 or set(opts) - {"seed", "cases"}:
        raise CommandError("expected 'suite <names> [seed <n>] [cases <n>]'")
    try:
        kw = {k: int(v) for k, v in opts.items()}
    except ValueError:
        raise CommandError("seed and cases must be integers") from None
    if "cases" in kw:
        kw["kernel_cases"] = kw["cases"]
    report = run_suite(GenConfig(**kw), names)
    s.suite_report = report
    if not report.passed:
        s.suite_failed = True
        return f"suite: FAIL {' '.join(report.failures)}"
    return f"suite: pass ({len(report.verdicts)} postulates)"


def _cmd_dump(s: Session, rest: str) -> str:
    kind, _, name = rest.partition(" ")
    path = s.cwd / name.strip()
    if kind == "suite":
        if s.suite_report is None:
            raise CommandError("no suite has been run")
        path.write_text(s.suite_report.to_jsonl(), encoding="utf-8")
    elif kind == "transcript":
        path.write_text(transcript_jsonl(s.transcript), encoding="utf-8")
    elif kind == "base":
        path.write_text(dump_ranked_base(s.base("dump base")), encoding="utf-8")
    else:
        raise CommandError("expected 'dump suite|transcript|base <file>'")
    return f"dump: {kind} {name.strip()}"


_COMMANDS: dict[str, Callable[[Session, str], str]] = {
    "atoms": _cmd_atoms,
    "ceiling": _cmd_ceiling,
    "base": _cmd_base,
    "load": _cmd_load,
    "source": _cmd_source,
    "mode": _cmd_mode,
    **{k: _change(k) for k in _OPERATORS},
    "query": _cmd_query,
    "rerank": _cmd_rerank,
    "materialize": _cmd_materialize,
    "show": _cmd_show,
    "status": _cmd_status,
    "why": _cmd_why,
    "tables": _cmd_tables,
    "suite": _cmd_suite,
    "dump": _cmd_dump,
}


def transcript_jsonl(entries: list[Entry]) -> str:
    return "".join(json.dumps(e.record(), ensure_ascii=False) + "\n" for e in entries)


# -- drivers ---------------------------------------------------------------------

def run_lines(lines, session: Session, out: TextIO, keep_going: bool = False) -> int:
    status = EXIT_OK
    for n, raw in enumerate(lines, start=1):
        entry = session.run_line(raw, n)
        if entry is None:
            continue
        print(entry.output, file=out)
        if entry.output.startswith("error:"):
            status = EXIT_ERROR
            if not keep_going:
                return status
    if status == EXIT_OK and session.suite_failed:
        status = EXIT_SUITE
    return status


def run_script(path: str | Path, out: TextIO | None = None,
               keep_going: bool = False) -> tuple[int, list[Entry]]:
    """Execute a script file; relative file names resolve against its directory."""
    out = out or sys.stdout
    path = Path(path)
    session = Session(cwd=path.parent)
    lines = path.read_text(encoding="utf-8").splitlines()
    status = run_lines(lines, session, out, keep_going)
    return status, session.transcript


def repl(inp: TextIO | None = None, out: TextIO | None = None) -> int:
    """Interactive loop; errors are reported and the session carries on."""
    inp, out = inp or sys.stdin, out or sys.stdout
    session = Session()
    interactive = inp.isatty()
    n = 0
    while True:
        if interactive:
            out.write("pac> ")
            out.flush()
        raw = inp.readline()
        if not raw:
            break
        n += 1
        if raw.strip() in ("quit", "exit"):
            break
        entry = session.run_line(raw.rstrip("\n"), n)
        if entry is not None:
            print(entry.output, file=out)
    return EXIT_SUITE if session.suite_failed else EXIT_OK


def dump_report(kind: str, path: str | Path, session: Session) -> None:
    """Write the last suite report or the transcript as JSON lines."""
    _cmd_dump(session, f"{kind} {path}")


def replay_transcript(path: str | Path, out: TextIO | None = None) -> int:
    """Re-run the commands of a transcript and compare every output line."""
    out = out or sys.stdout
    path = Path(path)
    records = [json.loads(l) for l in path.read_text(encoding="utf-8").splitlines() if l.strip()]
    session = Session(cwd=path.parent)
    mismatches = 0
    for rec in records:
        entry = session.run_line(rec["command"], rec["line"])
        if entry is None or entry.output != rec["output"]:
            mismatches += 1
            got = entry.output if entry else ""
            print(f"line {rec['line']}: expected {rec['output']!r}, got {got!r}", file=out)
    print(f"replay: {len(records) - mismatches}/{len(records)} lines match", file=out)
    return EXIT_OK if mismatches == 0 else EXIT_ERROR


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pacbelief",
                                 description="Source-sensitive belief change over a paraconsistent logic.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("run", help="execute a script")
    p.add_argument("script")
    p.add_argument("--keep-going", action="store_true", help="continue after command errors")
    p.add_argument("--transcript", help="write the JSON-lines transcript here")

    sub.add_parser("repl", help="interactive session")

    p = sub.add_parser("suite", help="run postulate suites")
    p.add_argument("names", nargs="*", default=[], help=f"any of: {', '.join(SUITES)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=None)
    p.add_argument("--report", help="write one JSON record per postulate here")
    p.add_argument("--stop-on-failure", action="store_true")

    p = sub.add_parser("replay", help="re-run a transcript and compare outputs")
    p.add_argument("transcript")

    sub.add_parser("tables", help="print the connective matrices")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.cmd == "run":
            status, transcript = run_script(args.script, keep_going=args.keep_going)
            if args.transcript:
                Path(args.transcript).write_text(transcript_jsonl(transcript), encoding="utf-8")
            return status
        if args.cmd == "repl":
            return repl()
        if args.cmd == "suite":
            kw = {"seed": args.seed}
            if args.cases is not None:
                kw["cases"] = kw["kernel_cases"] = args.cases
            report = run_suite(GenConfig(**kw), args.names or None, args.stop_on_failure)
            print(report.table())
            if args.report:
                Path(args.report).write_text(report.to_jsonl(), encoding="utf-8")
            return EXIT_OK if report.passed else EXIT_SUITE
        if args.cmd == "replay":
            return replay_transcript(args.transcript)
        if args.cmd == "tables":
            print(dump_tables())
            return EXIT_OK
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
