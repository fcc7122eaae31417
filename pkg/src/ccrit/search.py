"""The V8-free search driver and its persistent catalog.

Candidates are internally-4-connected non-planar graphs from the four
classes of Robertson's description of V8-free graphs that survive the
pruning lemmas:

* every internally-4-connected graph with at most 7 vertices (from the
  networkx graph atlas);
* C3 x C3;
* bicycle wheels whose rim word passes the three rim lemmas, up to the rim
  length those lemmas force (:func:`rim_bound`);
* the 8-vertex peripherally-4-connected graphs whose hug elimination ends
  in a 4-covered graph, plus Q3^v, Q3^2e and Q3^t.

An internally-4-connected candidate is kept when it has crossing number 1
or is itself 2-critical.  Its peripherally-4-connected extensions (only the
graph itself in the critical case) are grown back and every 2-critical
result with no V8 subdivision is recorded.

The store is a directory with two append-only key=value files:
``catalog.txt`` (one line per entry) and ``processed.txt`` (one line per
finished candidate).  A rerun skips processed candidates, so an interrupted
search resumes where it stopped.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator

import networkx as nx

from .canon import canonical_form
from .connectivity import is_i4c, is_p4c
from .crossing import CriticalityVerdict, crossing_number, is_k_crossing_critical, planar_bool
from .formats import from_sparse6
from .graph import Multigraph
from .growback import grow_back
from .hugs import HugEliminationError, hug_eliminate, p4c_extensions
from .named import bicycle_wheel, c3_box_c3, q3_2e, q3_t, q3_v
from .subdivision import max_v2n

SOURCES = ("family", "sporadic-13", "sporadic-36", "four-K34*", "search-v8free", "user")
STORE_ENV = "CCRIT_STORE"


def canonical_text(g: Multigraph) -> str:
    return canonical_form(g).decode()


# ------------------------------------------------------------- entries
@dataclass(frozen=True)
class CatalogEntry:
    canonical: str
    source: str
    status: str  # a CriticalityVerdict status, or undecided
    cr: str
    witness: str = ""
    trace: str = ""
    extra: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")

    def to_line(self) -> str:
        parts = [f"key={self.canonical}", f"source={self.source}", f"status={self.status}", f"cr={self.cr}"]
        parts += [f"{k}={v}" for k, v in self.extra]
        parts += [f"witness={_quote(self.witness)}", f"trace={_quote(self.trace)}"]
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> CatalogEntry:
        d = parse_record(line)
        known = {"key", "source", "status", "cr", "witness", "trace"}
        extra = tuple((k, v) for k, v in d.items() if k not in known)
        return cls(d["key"], d["source"], d["status"], d["cr"], d.get("witness", ""), d.get("trace", ""), extra)

    def graph(self) -> Multigraph:
        return from_sparse6(self.canonical)

    def replay(self, cr_cap: int = 3) -> CriticalityVerdict:
        """Recompute the verdict from the stored graph."""
        return is_k_crossing_critical(self.graph(), 2, cr_cap=cr_cap)


def _quote(s: str) -> str:
    return s.replace(" ", "_") if s else "-"


def parse_record(line: str) -> dict[str, str]:
    out = {}
    for tok in line.split():
        k, _, v = tok.partition("=")
        out[k] = v
    return out


def entry_for(g: Multigraph, source: str, verdict: CriticalityVerdict, trace: str = "", **extra: str) -> CatalogEntry:
    w = verdict.witness
    wtext = "" if w is None else (w.to_text() if hasattr(w, "to_text") else f"{w[0]}-{w[1]}")
    return CatalogEntry(
        canonical_text(g), source, verdict.status, verdict.cr_text(), wtext, trace, tuple(sorted(extra.items()))
    )


# --------------------------------------------------------------- store
class CatalogStore:
    """Append-only catalog plus processed-candidate ledger in one directory."""

    def __init__(self, path: str) -> None:
        self.path = path
        os.makedirs(path, exist_ok=True)
        self.catalog_file = os.path.join(path, "catalog.txt")
        self.processed_file = os.path.join(path, "processed.txt")

    @classmethod
    def default(cls) -> CatalogStore:
        return cls(os.environ.get(STORE_ENV, os.path.join(os.getcwd(), "ccrit-store")))

    def entries(self) -> list[CatalogEntry]:
        if not os.path.exists(self.catalog_file):
            return []
        with open(self.catalog_file) as fh:
            return [CatalogEntry.from_line(ln) for ln in fh if ln.strip()]

    def keys(self) -> set[str]:
        return {e.canonical for e in self.entries()}

    def append(self, e: CatalogEntry) -> bool:
        """Record ``e`` unless an entry with the same canonical form and source exists."""
        if any(x.canonical == e.canonical and x.source == e.source for x in self.entries()):
            return False
        with open(self.catalog_file, "a") as fh:
            fh.write(e.to_line() + "\n")
        return True

    def processed(self) -> dict[str, dict[str, str]]:
        if not os.path.exists(self.processed_file):
            return {}
        with open(self.processed_file) as fh:
            recs = [parse_record(ln) for ln in fh if ln.strip()]
        return {r["candidate"]: r for r in recs}

    def mark(self, candidate: str, status: str, **info: str) -> None:
        with open(self.processed_file, "a") as fh:
            extra = "".join(f" {k}={_quote(v)}" for k, v in sorted(info.items()))
            fh.write(f"candidate={candidate} status={status}{extra}\n")


# ---------------------------------------------------------- candidates
@dataclass(frozen=True)
class Candidate:
    ident: str
    klass: str  # atlas | c3xc3 | bicycle-wheel | p4c8 | q3
    graph: Multigraph
    is_p4c_only: bool = False  # the graph is a p4c graph to grow back directly


def _from_nx(h: nx.Graph) -> Multigraph:
    mp = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Multigraph(range(len(mp)), [(mp[a], mp[b]) for a, b in h.edges()])


@lru_cache(maxsize=4)
def i4c_small(max_n: int = 7) -> tuple[Multigraph, ...]:
    """Non-planar internally-4-connected simple graphs with at most ``max_n`` vertices."""
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() < 5 or h.number_of_nodes() > max_n:
            continue
        if min((d for _, d in h.degree()), default=0) < 3 or not nx.is_connected(h):
            continue
        g = _from_nx(h)
        if planar_bool(g) or not is_i4c(g):
            continue
        out.append(g)
    return tuple(out)


# rim words: x = joined to x only, y = to y only, b = to both
def rim_lemma_ok(word: str) -> bool:
    """The three rim lemmas, as conditions on a cyclic rim word."""
    r = len(word)
    b = word.count("b")
    if b >= 4 and r + 2 != 6:
        return False
    for c in "xy":
        if r >= 6 and any(all(word[(i + j) % r] == c for j in range(6)) for i in range(r)):
            return False
    if r != 6 and alternations(word) >= 3:
        return False
    return True


def alternations(word: str) -> int:
    """Largest k with distinct positions x_1, y_1, ..., x_k, y_k in cyclic order.

    An x-position is one whose letter is x or b, a y-position one with y or b.
    """
    r = len(word)
    best = 0
    for start in range(r):
        seq = word[start:] + word[:start]
        k, want = 0, "x"
        for ch in seq:
            if ch == "b" or ch == want:
                if want == "y":
                    k += 1
                want = "y" if want == "x" else "x"
        best = max(best, k)
    return best


def _hug_free_step(a: str, b: str) -> bool:
    """Can rim neighbours with letters ``a`` and ``b`` coexist in an i4c wheel?

    A rim vertex with one spoke has degree 3; if a rim neighbour shares its
    spoke end, the edge from that neighbour to the axle vertex is a hug.
    """
    if a == "b" or b == "b":
        return a == b
    return a != b


def rim_words(max_rim: int) -> Iterator[str]:
    """Cyclic words passing the rim lemmas with no forced hug, one per symmetry class."""
    seen: set[str] = set()
    stack = [c for c in "xyb"]
    while stack:
        w = stack.pop()
        r = len(w)
        if r >= 3 and _hug_free_step(w[-1], w[0]) and rim_lemma_ok(w):
            forms = []
            for t in (w, w[::-1]):
                for u in (t, t.translate(str.maketrans("xy", "yx"))):
                    forms += [u[i:] + u[:i] for i in range(r)]
            key = min(forms)
            if key not in seen:
                seen.add(key)
                yield key
        if r == max_rim:
            continue
        for c in "xyb":
            if _hug_free_step(w[-1], c) and not _linear_dead(w + c):
                stack.append(w + c)


def _admissible_prefixes(limit: int) -> int:
    """Longest word (up to ``limit``) whose every cyclic rotation can still pass the lemmas."""
    longest = 0
    # depth-first over linear words; a cyclic word of length r passes only if the linear one does
    stack = [""]
    while stack:
        w = stack.pop()
        r = len(w)
        if r >= 3 and rim_lemma_ok(w):
            longest = max(longest, r)
        if r == limit:
            continue
        for c in "xyb":
            nw = w + c
            if _linear_dead(nw):
                continue
            stack.append(nw)
    return longest


def _linear_dead(w: str) -> bool:
    """No cyclic word containing ``w`` as a factor can pass the lemmas (once it exceeds 6)."""
    if any(c * 6 in w for c in "xy"):
        return True
    if len(w) >= 7 and (w.count("b") >= 4 or _linear_alternations(w) >= 3):
        return True
    return False


def _linear_alternations(w: str) -> int:
    k, want = 0, "x"
    best = 0
    for start in range(len(w)):
        k, want = 0, "x"
        for ch in w[start:]:
            if ch == "b" or ch == want:
                if want == "y":
                    k += 1
                want = "y" if want == "x" else "x"
        best = max(best, k)
        k, want = 0, "y"
        for ch in w[start:]:
            if ch == "b" or ch == want:
                if want == "x":
                    k += 1
                want = "x" if want == "y" else "y"
        best = max(best, k)
    return best


@lru_cache(maxsize=1)
def rim_bound(limit: int = 40) -> int:
    """Longest rim allowed by the rim lemmas alone (computed, not assumed)."""
    return _admissible_prefixes(limit)


def bicycle_candidates(max_rim: int | None = None) -> list[tuple[str, Multigraph]]:
    """Internally-4-connected non-planar bicycle wheels passing the rim lemmas.

    Words are swept up to :func:`rim_bound`, with the hug rule pruning the
    generation; the lemma constraints alone are evaluated separately by
    :func:`rim_bound` so the documented bound does not depend on the rule.
    """
    top = rim_bound() if max_rim is None else max_rim
    out = []
    for w in sorted(rim_words(top), key=lambda t: (len(t), t)):
        g = bicycle_wheel(w)
        if planar_bool(g) or not is_i4c(g):
            continue
        out.append((w, g))
    return out


def _four_covered(g: Multigraph) -> bool:
    return any(g.without_vertices(w).m == 0 for w in combinations(g.vertices, 4))


@lru_cache(maxsize=1)
def p4c_eight(four_covered_core: bool = True) -> tuple[Multigraph, ...]:
    """8-vertex non-planar p4c simple graphs (optionally with a 4-covered i4c core)."""
    seeds = [_from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == 7]
    seen: set[bytes] = set()
    out = []
    for base in seeds:
        if base.min_degree() < 2:
            continue
        for k in range(3, 8):
            for nb in combinations(range(7), k):
                degs = [base.degree(v) + (v in nb) for v in range(7)]
                if min(degs) < 3:
                    continue
                g = base.with_vertices([7])
                for v in nb:
                    g = g.with_edge(7, v)
                key = canonical_form(g)
                if key in seen:
                    continue
                seen.add(key)
                if planar_bool(g) or not is_p4c(g):
                    continue
                if four_covered_core:
                    try:
                        core, _ = hug_eliminate(g)
                    except HugEliminationError:
                        continue
                    if not _four_covered(core):
                        continue
                out.append(g)
    return tuple(out)


def candidates(classes: Iterable[str] = ("atlas", "c3xc3", "bicycle-wheel", "q3", "p4c8"), max_rim: int | None = None) -> Iterator[Candidate]:
    """Every search candidate in a fixed order."""
    for klass in classes:
        if klass == "atlas":
            for g in i4c_small(7):
                yield Candidate(f"atlas:{canonical_text(g)}", klass, g)
        elif klass == "c3xc3":
            yield Candidate("c3xc3", klass, c3_box_c3())
        elif klass == "bicycle-wheel":
            for w, g in bicycle_candidates(max_rim):
                yield Candidate(f"wheel:{w}", klass, g)
        elif klass == "q3":
            for name, g in (("q3v", q3_v()), ("q3-2e", q3_2e()), ("q3t", q3_t())):
                yield Candidate(name, klass, g)
        elif klass == "p4c8":
            for g in p4c_eight():
                yield Candidate(f"p4c8:{canonical_text(g)}", klass, g, is_p4c_only=True)
        else:
            raise ValueError(f"unknown candidate class {klass!r}")


# -------------------------------------------------------------- driver
@dataclass(frozen=True)
class Budget:
    extensions: int = 40  # p4c extensions examined per candidate
    grow_tests: int = 60  # criticality tests per extension
    cr_cap: int = 3
    v2n_budget: int = 2_000_000


@dataclass
class CandidateResult:
    candidate: str
    status: str  # done | undecided | pruned
    reason: str
    entries: list[CatalogEntry] = field(default_factory=list)


def process_candidate(c: Candidate, budget: Budget = Budget()) -> CandidateResult:
    """Filter, extend, grow back and verify one candidate (pure; no store access)."""
    g = c.graph
    if c.is_p4c_only:
        bases, undecided = [g], False
        reason = "p4c graph grown directly"
    else:
        verdict = is_k_crossing_critical(g, 2, cr_cap=budget.cr_cap)
        if verdict.critical:
            bases, undecided, reason = [g], False, "i4c graph is 2-critical"
        elif verdict.cr == 1:
            bases = list(p4c_extensions(g, limit=budget.extensions + 1))
            undecided = len(bases) > budget.extensions
            bases = bases[: budget.extensions]
            reason = f"cr=1, {len(bases)} extensions"
        else:
            return CandidateResult(c.ident, "pruned", f"cr={verdict.cr_text()} and not 2-critical")
    entries: list[CatalogEntry] = []
    keys: set[str] = set()
    for i, base in enumerate(bases):
        res = grow_back(base, max_tests=budget.grow_tests, cr_cap=budget.cr_cap)
        undecided |= res.exhausted
        for gg, verdict in res.critical:
            key = canonical_text(gg.graph)
            if key in keys:
                continue
            n, st = max_v2n(gg.graph, cap=4, budget=budget.v2n_budget)
            if st != "exact":
                undecided = True
                continue
            if n is not None and n >= 4:
                continue  # contains V8
            keys.add(key)
            trace = f"{c.ident}|ext{i}|{gg.choice.describe()}"
            entries.append(entry_for(gg.graph, "search-v8free", verdict, trace, v2n=str(n)))
    status = "undecided" if undecided else "done"
    return CandidateResult(c.ident, status, reason, entries)


def search_v8free(
    store: CatalogStore,
    classes: Iterable[str] = ("atlas", "c3xc3", "bicycle-wheel", "q3", "p4c8"),
    budget: Budget = Budget(),
    jobs: int = 1,
    max_candidates: int | None = None,
    max_rim: int | None = None,
) -> Iterator[CatalogEntry]:
    """Run the search, appending to ``store``; yields newly recorded entries.

    Candidates already in the processed ledger are skipped.  Workers only
    compute; this process does every write, in candidate order.
    """
    done = store.processed()
    todo = [c for c in candidates(classes, max_rim) if c.ident not in done]
    if max_candidates is not None:
        todo = todo[:max_candidates]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results: Iterable[CandidateResult] = ex.map(process_candidate, todo, [budget] * len(todo))
            yield from _record(store, results)
    else:
        yield from _record(store, (process_candidate(c, budget) for c in todo))


def _record(store: CatalogStore, results: Iterable[CandidateResult]) -> Iterator[CatalogEntry]:
    for r in results:
        for e in r.entries:
            if store.append(e):
                yield e
        store.mark(r.candidate, r.status, reason=r.reason, entries=str(len(r.entries)))
