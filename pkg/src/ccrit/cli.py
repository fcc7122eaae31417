"""Command-line interface.

Every subcommand prints key=value records on standard output (one line per
record) and a short human summary on standard error.  Exit status is 0 on
success, 1 when a verification fails, 2 on usage errors and 3 when a budget
ran out before an answer was reached.

A run manifest (command, arguments, seed, version, input digests, wall-clock
time and a digest of the records) is written with ``--manifest PATH``.
"""
from __future__ import annotations

import hashlib
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable

import click

from . import __version__
from .formats import decode_graph, detect_format, encode_graph
from .graph import GraphError, Multigraph

EXIT_FAIL = 1
EXIT_UNDECIDED = 3


# ------------------------------------------------------------- manifest
@dataclass
class RunManifest:
    command: str
    args: dict[str, str]
    seed: int
    version: str = __version__
    inputs: dict[str, str] = field(default_factory=dict)  # path -> sha256
    started: float = field(default_factory=time.time)
    wall_clock: float = 0.0
    result_digest: str = ""

    def to_text(self) -> str:
        lines = [
            f"command={self.command}",
            f"seed={self.seed}",
            f"version={self.version}",
            f"wall_clock={self.wall_clock:.3f}",
            f"result_digest={self.result_digest}",
        ]
        lines += [f"arg.{k}={v}" for k, v in sorted(self.args.items())]
        lines += [f"input.{k}={v}" for k, v in sorted(self.inputs.items())]
        return "\n".join(lines) + "\n"


class Run:
    """Collects records, prints them and finalises the manifest."""

    def __init__(self, ctx: click.Context, command: str, args: dict) -> None:
        self.root = ctx.find_root().obj
        self.manifest = RunManifest(command, {k: str(v) for k, v in args.items()}, self.root["seed"])
        self.records: list[str] = []
        self.status = 0

    def read(self, path: str, fmt: str | None = None) -> list[Multigraph]:
        with open(path, "rb") as fh:
            data = fh.read()
        self.manifest.inputs[path] = hashlib.sha256(data).hexdigest()
        text = data.decode()
        f = fmt or detect_format(text)
        if f == "edgelist":
            return [decode_graph(text, f)]
        return [decode_graph(ln, f) for ln in text.splitlines() if ln.strip() and not ln.startswith(">>")]

    def emit(self, **kv: object) -> None:
        line = " ".join(f"{k}={v}" for k, v in kv.items())
        self.records.append(line)
        click.echo(line)

    def say(self, msg: str) -> None:
        click.echo(msg, err=True)

    def fail(self, code: int = EXIT_FAIL) -> None:
        # a definite failure outranks an undecided outcome
        if self.status != EXIT_FAIL:
            self.status = code

    def finish(self) -> None:
        m = self.manifest
        m.wall_clock = time.time() - m.started
        m.result_digest = hashlib.sha256("\n".join(self.records).encode()).hexdigest()
        path = self.root.get("manifest")
        if path:
            with open(path, "w") as fh:
                fh.write(m.to_text())
        sys.exit(self.status)


def _s6(g: Multigraph) -> str:
    return encode_graph(g, "sparse6")


in_option = click.option("--in", "path", required=True, type=click.Path(exists=True, dir_okay=False), help="input graph file")
fmt_option = click.option("--format", "fmt", type=click.Choice(["graph6", "sparse6", "edgelist"]), default=None)


@click.group()
@click.option("--jobs", default=1, show_default=True, help="worker processes for sweeps")
@click.option("--store", default=None, help="catalog store directory (default: $CCRIT_STORE)")
@click.option("--seed", default=0, show_default=True, help="seed for every random choice")
@click.option("--manifest", default=None, type=click.Path(dir_okay=False), help="write the run manifest here")
@click.version_option(__version__)
@click.pass_context
def main(ctx: click.Context, jobs: int, store: str | None, seed: int, manifest: str | None) -> None:
    """Verification and search tools for 2-crossing-critical graphs."""
    ctx.obj = {"jobs": jobs, "store": store, "seed": seed, "manifest": manifest}


# ------------------------------------------------------------ crossing
@main.command()
@in_option
@fmt_option
@click.option("--cap", default=3, show_default=True)
@click.pass_context
def cr(ctx, path, fmt, cap):
    """Crossing number up to a cap."""
    from .crossing import cr_le, crossing_number, format_cr

    run = Run(ctx, "cr", dict(path=path, cap=cap))
    for i, g in enumerate(run.read(path, fmt)):
        value = crossing_number(g, cap)
        witness = cr_le(g, value).witness if value is not None else None
        run.emit(index=i, n=g.n, m=g.m, cr=format_cr(value, cap), witness=witness.to_text() if witness else "-")
        run.say(f"graph {i}: cr {format_cr(value, cap)}")
    run.finish()


@main.command()
@in_option
@fmt_option
@click.option("--k", "k", default=2, show_default=True)
@click.option("--cap", default=3, show_default=True)
@click.pass_context
def critical(ctx, path, fmt, k, cap):
    """k-crossing-criticality by edge deletion."""
    from .crossing import is_k_crossing_critical

    run = Run(ctx, "critical", dict(path=path, k=k, cap=cap))
    for i, g in enumerate(run.read(path, fmt)):
        v = is_k_crossing_critical(g, k, cr_cap=max(cap, k))
        w = v.witness
        wt = "-" if w is None else (w.to_text() if hasattr(w, "to_text") else f"{w[0]}-{w[1]}")
        run.emit(status=v.status, cr=v.cr_text(), index=i, witness=wt)
        run.say(f"graph {i}: {v.status}, cr {v.cr_text()}")
        if not v.critical:
            run.fail()
    run.finish()


@main.command()
@in_option
@fmt_option
@click.option("--cap", default=5, show_default=True)
@click.option("--budget", default=0, show_default=True, help="search steps per pattern (0 = unlimited)")
@click.pass_context
def v2n(ctx, path, fmt, cap, budget):
    """Largest n with a V_2n subdivision."""
    from .subdivision import max_v2n

    run = Run(ctx, "v2n", dict(path=path, cap=cap, budget=budget))
    for i, g in enumerate(run.read(path, fmt)):
        n, st = max_v2n(g, cap=cap, budget=budget)
        run.emit(max_n="none" if n is None else n, status=st, index=i)
        run.say(f"graph {i}: max n {n} ({st})")
        if st == "undecided":
            run.fail(EXIT_UNDECIDED)
    run.finish()


@main.command()
@in_option
@fmt_option
@click.option("--cycle", required=True, help="comma-separated cycle vertices")
@click.pass_context
def bridges(ctx, path, fmt, cycle):
    """Bridges of a cycle and their overlap diagram."""
    from .bridges import overlap_diagram

    run = Run(ctx, "bridges", dict(path=path, cycle=cycle))
    g = run.read(path, fmt)[0]
    cyc = tuple(int(x) for x in cycle.split(","))
    od = overlap_diagram(g, cyc)
    for i, b in enumerate(od.bridges):
        att = ",".join(map(str, sorted(b.attachments)))
        nuc = ",".join(map(str, sorted(b.nucleus))) or "-"
        run.emit(bridge=i, attachments=att, nucleus=nuc, edges=len(b.edges))
    for i, j, kind in od.edges:
        run.emit(overlap=f"{i}-{j}", kind=kind)
    run.emit(bridges=len(od.bridges), bipartite=str(od.bipartite).lower())
    run.say(f"{len(od.bridges)} bridges, overlap diagram {'bipartite' if od.bipartite else 'not bipartite'}")
    run.finish()


# --------------------------------------------------------------- tiles
@main.group()
def tiles():
    """The tile set S."""


@tiles.command("gen")
@click.pass_context
def tiles_gen(ctx):
    """List the tiles of S with their constructions."""
    from .tiles import build_tile_set_S

    run = Run(ctx, "tiles gen", {})
    cat = build_tile_set_S()
    for i, (t, src) in enumerate(zip(cat.tiles, cat.sources)):
        run.emit(tile=i, source=str(src), n=t.graph.n, m=t.graph.m,
                 left=",".join(map(str, t.left)), right=",".join(map(str, t.right)), graph=_s6(t.graph))
    run.emit(tiles=len(cat))
    run.say(f"{len(cat)} tiles")
    run.finish()


@tiles.command("verify")
@click.pass_context
def tiles_verify(ctx):
    """Count the tiles and check 2-degeneracy of every tile and its inversion."""
    from .tiles import build_tile_set_S, degeneracy_failures

    run = Run(ctx, "tiles verify", {})
    cat = build_tile_set_S()
    bad = 0
    for i, t in enumerate(cat.tiles):
        issues = degeneracy_failures(t, 2) + degeneracy_failures(t.inverted(), 2)
        bad += bool(issues)
        run.emit(tile=i, degenerate=str(not issues).lower())
    per = cat.per_picture()
    ok = len(cat) == 42 and all(c in (2, 4) for c in per.values()) and bad == 0
    run.emit(tiles=len(cat), pictures=len(per), failures=bad, status="pass" if ok else "fail")
    run.say(f"{len(cat)} tiles, {bad} degeneracy failures")
    if not ok:
        run.fail()
    run.finish()


# -------------------------------------------------------------- family
@main.group()
def family():
    """The infinite family built from S."""


@family.command("gen")
@click.option("--m", "m", default=1, show_default=True)
@click.option("--sample", default=10, show_default=True)
@click.option("--verify", is_flag=True, help="check 3-connectivity and 2-criticality")
@click.pass_context
def family_gen(ctx, m, sample, verify):
    """A seeded sample of family graphs."""
    from .connectivity import is_k_connected
    from .crossing import is_k_crossing_critical
    from .tiles import sample_family

    run = Run(ctx, "family gen", dict(m=m, sample=sample, verify=verify))
    items = sample_family(m, sample, seed=run.manifest.seed)
    ok = 0
    for seq, g in items:
        rec: dict[str, object] = {"sequence": str(seq).replace(" ", ","), "n": g.n, "m": g.m, "graph": _s6(g)}
        if verify:
            v = is_k_crossing_critical(g, 2)
            rec = {"status": v.status, "cr": v.cr_text(), "connected3": str(is_k_connected(g, 3)).lower(), **rec}
            ok += v.critical and is_k_connected(g, 3)
        run.emit(**rec)
    if verify:
        run.say(f"{ok}/{len(items)} verified 3-connected and 2-critical")
        if ok != len(items):
            run.fail()
    else:
        run.say(f"{len(items)} graphs")
    run.finish()


# ----------------------------------------------------------- structure
@main.command()
@in_option
@fmt_option
@click.pass_context
def classify(ctx, path, fmt):
    """Place a graph of connectivity < 3 in the trichotomy."""
    from .sporadic import classify_non_3_connected

    run = Run(ctx, "classify", dict(path=path))
    for i, g in enumerate(run.read(path, fmt)):
        c = classify_non_3_connected(g)
        kernel = _s6(c.kernel) if c.kernel is not None else "-"
        run.emit(index=i, kind=c.kind, name=c.name or "-", kernel=kernel)
        run.say(f"graph {i}: {c}")
        if c.kind == "unmatched":
            run.fail()
    run.finish()


@main.command()
@in_option
@fmt_option
@click.option("--rep/--no-rep", default=False, help="also build G_rep(v) for each contracted vertex")
@click.pass_context
def reduce(ctx, path, fmt, rep):
    """Planar 3-reduction to a peripherally-4-connected graph."""
    from .reduction import ReductionError, g_rep, planar_3_reduce, trace_invariants, tu_classify

    run = Run(ctx, "reduce", dict(path=path, rep=rep))
    g = run.read(path, fmt)[0]
    try:
        trace = planar_3_reduce(g)
    except ReductionError as exc:
        run.emit(status="error", diagnosis=exc.diagnosis)
        run.say(str(exc))
        run.fail()
        run.finish()
        return
    red = trace.result
    issues = trace_invariants(trace, critical=False)
    run.emit(status="reduced", n=red.n, m=red.m, steps=len(trace.steps), invariants="ok" if not issues else "fail", graph=_s6(red))
    for v in red.vertices:
        ks = trace.K(v)
        if len(ks) < 2:
            continue
        rec: dict[str, object] = {"vertex": v, "K": ",".join(map(str, sorted(ks)))}
        if red.num_neighbors(v) == 3:
            p = tu_classify(trace, v)
            rec.update(T=len(p.T), U=len(p.U), doglike=str(p.doglike).lower())
            if rep:
                r = g_rep(trace, v)
                rec.update(case=r.case, rep=_s6(r.graph))
        run.emit(**rec)
    for s in issues:
        run.say(f"invariant: {s}")
    run.say(f"reduced {g.n} -> {red.n} vertices in {len(trace.steps)} steps")
    run.finish()


@main.command()
@in_option
@fmt_option
@click.pass_context
def hugs(ctx, path, fmt):
    """Hug elimination to an internally-4-connected graph."""
    from .hugs import HugEliminationError, hug_eliminate

    run = Run(ctx, "hugs", dict(path=path))
    g = run.read(path, fmt)[0]
    try:
        final, trace = hug_eliminate(g)
    except HugEliminationError as exc:
        run.emit(status="error")
        run.say(str(exc))
        run.fail()
        run.finish()
        return
    for i, st in enumerate(trace.steps):
        run.emit(step=i, kind=st.kind, edges=";".join(f"{a}-{b}" for a, b in st.edges), heads=",".join(map(str, st.heads)))
    run.emit(status="i4c", n=final.n, m=final.m, steps=len(trace.steps), graph=_s6(final))
    run.say(f"{len(trace.steps)} deletions, final graph has {final.n} vertices")
    run.finish()


@main.command()
@in_option
@fmt_option
@click.option("--limit", default=100, show_default=True)
@click.pass_context
def extend(ctx, path, fmt, limit):
    """Peripherally-4-connected extensions of an internally-4-connected graph."""
    from .hugs import p4c_extensions

    run = Run(ctx, "extend", dict(path=path, limit=limit))
    g = run.read(path, fmt)[0]
    n = 0
    for h in p4c_extensions(g, limit=limit + 1):
        if n == limit:
            run.say(f"limit of {limit} reached")
            run.fail(EXIT_UNDECIDED)
            break
        run.emit(index=n, n=h.n, m=h.m, graph=_s6(h))
        n += 1
    run.say(f"{n} extensions")
    run.finish()


# -------------------------------------------------------------- search
@main.command("search-v8free")
@click.option("--classes", default="atlas,c3xc3,bicycle-wheel,q3,p4c8", show_default=True)
@click.option("--max-candidates", default=None, type=int)
@click.option("--extensions", default=40, show_default=True, help="p4c extensions per candidate")
@click.option("--grow-tests", default=60, show_default=True, help="criticality tests per extension")
@click.pass_context
def search_cmd(ctx, classes, max_candidates, extensions, grow_tests):
    """The V8-free search, recorded in the catalog store."""
    from .search import Budget, CatalogStore, search_v8free

    root = ctx.find_root().obj
    run = Run(ctx, "search-v8free", dict(classes=classes, max_candidates=max_candidates, extensions=extensions, grow_tests=grow_tests))
    store = CatalogStore(root["store"]) if root["store"] else CatalogStore.default()
    budget = Budget(extensions=extensions, grow_tests=grow_tests)
    new = list(search_v8free(store, classes.split(","), budget, jobs=root["jobs"], max_candidates=max_candidates))
    for e in sorted(new, key=lambda e: e.canonical):
        run.emit(key=e.canonical, source=e.source, status=e.status, cr=e.cr)
    proc = store.processed()
    undecided = sum(1 for r in proc.values() if r.get("status") == "undecided")
    run.emit(store=store.path, entries=len(store.entries()), candidates=len(proc), undecided=undecided)
    run.say(f"{len(new)} new entries; {undecided} of {len(proc)} processed candidates undecided")
    if undecided:
        run.fail(EXIT_UNDECIDED)
    run.finish()


@main.command()
@click.option("--verify", is_flag=True, help="check 2-criticality of every graph")
@click.pass_context
def sporadics(ctx, verify):
    """The 13 + 36 + 4 graphs outside the main families."""
    from .crossing import is_k_crossing_critical
    from .sporadic import generate_sporadics

    run = Run(ctx, "sporadics", dict(verify=verify))
    groups = generate_sporadics()
    bad = 0
    for fam, items in groups.items():
        for s in items:
            rec: dict[str, object] = {"family": fam, "name": s.name, "n": s.graph.n, "m": s.graph.m, "graph": _s6(s.graph)}
            if verify:
                v = is_k_crossing_critical(s.graph, 2)
                rec["status"] = v.status
                bad += not v.critical
            run.emit(**rec)
    counts = ",".join(f"{k}:{len(v)}" for k, v in groups.items())
    run.emit(counts=counts, failures=bad if verify else "-")
    run.say(f"counts {counts}" + (f", {bad} not 2-critical" if verify else ""))
    if bad:
        run.fail()
    run.finish()


def _entry(argv: Iterable[str] | None = None) -> None:  # pragma: no cover
    main(args=list(argv) if argv is not None else None)


if __name__ == "__main__":  # pragma: no cover
    main()
