"""Exhaustive search for triangle-distinct graphs, canonical forms, and the
regular-graph probe.

Enumeration strategy.  Labeled graphs on n vertices correspond one-to-one to
counters in [0, 2^C(n,2)): bit b of the counter is edge pair_list(n)[b].  The
counter range is cut into fixed-size chunks (a function of n only, never of
the worker count), chunks are scanned left to right, and per-chunk results
are merged strictly in counter order.  Workers therefore change wall time and
nothing else: the finished report serializes to identical bytes for any
worker count.

Inside a chunk the scan is two cheap filters and one early exit:

  * an optional edge-count filter straight off the counter's popcount,
  * an optional d-regular filter on the assembled rows,
  * triangle degrees computed vertex by vertex into a seen-set bitmask,
    abandoning the graph at the first repeated value (prune=False disables
    this exit so the pruned and unpruned paths can be compared on small
    orders).

Orders up to 8 finish in minutes or less.  Order 9 is 2^36 labeled graphs
and only runs when allow_slow=True; long runs can checkpoint every chunk to
a plain-text file and resume after an interruption, which surfaces as
SearchInterrupted rather than a half-filled report.

Canonical forms are brute force, capped at order 9: the lexicographically
smallest graph6 body over the vertex orderings that list degrees ascending
(all orderings within an equal-degree block are tried).  The restriction to
degree-sorted orderings is isomorphism-invariant, so equal canonical strings
is the same relation as isomorphism, which is all the de-duplication needs.
"""

import os
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from multiprocessing import Pool

from . import graph6
from .graphs import Graph, counter_of_graph, graph_from_counter, pair_list, triangle_degrees


def is_triangle_distinct(g: Graph) -> bool:
    """True iff g has at least two vertices and pairwise distinct triangle
    degrees."""
    return g.n >= 2 and len(set(triangle_degrees(g))) == g.n


class SearchInterrupted(RuntimeError):
    """An enumeration stopped early; the checkpoint on disk resumes it."""

    def __init__(self, message: str, checkpoint_path, cursor: int, total: int):
        super().__init__(message)
        self.checkpoint_path = checkpoint_path
        self.cursor = cursor
        self.total = total


@dataclass(frozen=True)
class ClassEntry:
    """One isomorphism class of triangle-distinct witnesses."""

    graph6: str  # canonical form
    edges: int
    triangle_degrees: tuple[int, ...]  # descending
    aut_size: int | None = None
    labeled_count: int | None = None  # n! / aut_size

    def to_json_dict(self) -> dict:
        d = {
            "graph6": self.graph6,
            "edges": self.edges,
            "triangle_degrees": list(self.triangle_degrees),
        }
        if self.aut_size is not None:
            d["aut_size"] = self.aut_size
            d["labeled_count"] = self.labeled_count
        return d


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one exhaustive run.

    labeled_count is the number of counters visited (the full 2^C(n,2) for an
    unfiltered complete run); candidates is how many survived the cheap
    edge-count and regularity filters and reached the triangle-degree stage.
    td_classes holds one entry per isomorphism class, sorted by canonical
    graph6 string.  For a probe over regular graphs, regular_degrees lists
    every degree that was enumerated.
    """

    order: int
    labeled_count: int
    candidates: int
    td_labeled: int
    td_classes: tuple[ClassEntry, ...]
    min_edges: int | None
    regular_only: int | None = None
    max_edges: int | None = None
    regular_degrees: tuple[int, ...] | None = None

    def to_json_dict(self) -> dict:
        d = {
            "schema_version": 1,
            "kind": "search",
            "order": self.order,
            "labeled_count": self.labeled_count,
            "candidates": self.candidates,
            "td_labeled": self.td_labeled,
            "td_classes": [c.to_json_dict() for c in self.td_classes],
            "min_edges": self.min_edges,
            "regular_only": self.regular_only,
            "max_edges": self.max_edges,
        }
        if self.regular_degrees is not None:
            d["regular_degrees"] = list(self.regular_degrees)
        return d


def default_workers() -> int:
    """TRIDEG_WORKERS if set, else the visible CPU count."""
    env = os.environ.get("TRIDEG_WORKERS", "").strip()
    if env:
        try:
            w = int(env)
        except ValueError:
            raise ValueError(
                "TRIDEG_WORKERS must be a positive integer, got %r" % env
            ) from None
        if w < 1:
            raise ValueError("TRIDEG_WORKERS must be a positive integer, got %r" % env)
        return w
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# canonical forms


def _degree_blocks(order, degs):
    blocks = []
    i = 0
    while i < len(order):
        j = i
        while j < len(order) and degs[order[j]] == degs[order[i]]:
            j += 1
        blocks.append(tuple(order[i:j]))
        i = j
    return blocks


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string; equal strings iff isomorphic.  Order <= 9.

    Minimizes the graph6 body over every vertex ordering whose degree
    sequence reads ascending; within a block of equal degrees all orderings
    are tried, so the worst case (a regular graph) is the full 9! = 362880.
    """
    n = g.n
    if n > 9:
        raise ValueError("canonical_form is brute force and capped at order 9, got %d" % n)
    if n <= 1:
        return graph6.encode(g)
    degs = g.degrees()
    order0 = sorted(range(n), key=degs.__getitem__)
    blocks = _degree_blocks(order0, degs)
    colpairs = tuple((i, j) for j in range(1, n) for i in range(j))
    rows = g.rows
    best = None
    for assignment in product(*(permutations(b) for b in blocks)):
        perm = [v for blk in assignment for v in blk]
        val = 0
        for i, j in colpairs:
            val = (val << 1) | ((rows[perm[i]] >> perm[j]) & 1)
        if best is None or val < best:
            best = val
    nbits = len(colpairs)
    pad = (-nbits) % 6
    padded = best << pad
    ngroups = (nbits + pad) // 6
    body = bytes(
        ((padded >> (6 * k)) & 63) + 63 for k in range(ngroups - 1, -1, -1)
    )
    return graph6._encode_order(n).decode("ascii") + body.decode("ascii")


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| by brute force over degree-preserving permutations; order <= 9."""
    n = g.n
    if n > 9:
        raise ValueError("automorphism_count is brute force and capped at order 9")
    if n <= 1:
        return 1
    degs = g.degrees()
    by_degree = {}
    for v in range(n):
        by_degree.setdefault(degs[v], []).append(v)
    classes = [tuple(vs) for _, vs in sorted(by_degree.items())]
    rows = g.rows
    pairs = pair_list(n)
    count = 0
    image = [0] * n
    for assignment in product(*(permutations(c) for c in classes)):
        for cls, img in zip(classes, assignment):
            for src, dst in zip(cls, img):
                image[src] = dst
        if all(
            ((rows[i] >> j) & 1) == ((rows[image[i]] >> image[j]) & 1)
            for i, j in pairs
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _chunk_size(nbits: int) -> int:
    # Chunking depends on the order alone so that reports cannot depend on
    # the worker count; 2^24 keeps order-9 checkpoints usefully frequent.
    return 1 << 24 if nbits > 28 else 1 << 16


def _scan_chunk(args):
    """Scan counters [start, end); return (visited, candidates, hit counters)."""
    n, start, end, regular_d, max_edges, prune = args
    pairs = pair_list(n)
    bi = tuple(p[0] for p in pairs)
    bj = tuple(p[1] for p in pairs)
    mi = tuple(1 << p[0] for p in pairs)
    mj = tuple(1 << p[1] for p in pairs)
    vertex_range = range(n)
    hits = []
    candidates = 0
    for x in range(start, end):
        if max_edges is not None and x.bit_count() > max_edges:
            continue
        rows = [0] * n
        w = x
        while w:
            low = w & -w
            b = low.bit_length() - 1
            rows[bi[b]] |= mj[b]
            rows[bj[b]] |= mi[b]
            w ^= low
        if regular_d is not None:
            ok = True
            for row in rows:
                if row.bit_count() != regular_d:
                    ok = False
                    break
            if not ok:
                continue
        candidates += 1
        if prune:
            seen = 0
            distinct = True
            for v in vertex_range:
                nv = rows[v]
                s = 0
                w2 = nv
                while w2:
                    low2 = w2 & -w2
                    s += (rows[low2.bit_length() - 1] & nv).bit_count()
                    w2 ^= low2
                bit = 1 << (s >> 1)
                if seen & bit:
                    distinct = False
                    break
                seen |= bit
            if distinct:
                hits.append(x)
        else:
            tris = []
            for v in vertex_range:
                nv = rows[v]
                s = 0
                w2 = nv
                while w2:
                    low2 = w2 & -w2
                    s += (rows[low2.bit_length() - 1] & nv).bit_count()
                    w2 ^= low2
                tris.append(s >> 1)
            if len(set(tris)) == n:
                hits.append(x)
    return len(range(start, end)), candidates, hits


# ---------------------------------------------------------------------------
# checkpoints (plain text, atomic replace)

_CKPT_MAGIC = "trideg-checkpoint v1"


def _write_checkpoint(path, config, cursor, visited, candidates, hit_counters):
    n = config["order"]
    lines = [
        _CKPT_MAGIC,
        "order=%d" % n,
        "regular=%d" % (-1 if config["regular"] is None else config["regular"]),
        "max_edges=%d" % (-1 if config["max_edges"] is None else config["max_edges"]),
        "prune=%d" % (1 if config["prune"] else 0),
        "range_start=%d" % config["range_start"],
        "range_end=%d" % config["range_end"],
        "cursor=%d" % cursor,
        "visited=%d" % visited,
        "candidates=%d" % candidates,
        "hits:",
    ]
    pairs = pair_list(n)
    for x in hit_counters:
        lines.append(graph6.encode(graph_from_counter(n, x, pairs)))
    tmp = "%s.tmp.%d" % (path, os.getpid())
    with open(tmp, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def _read_checkpoint(path, config):
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    if not lines or lines[0] != _CKPT_MAGIC:
        raise ValueError("not a checkpoint file: %s" % path)
    kv = {}
    idx = 1
    while idx < len(lines) and lines[idx] != "hits:":
        key, _, value = lines[idx].partition("=")
        kv[key] = int(value)
        idx += 1
    if idx >= len(lines):
        raise ValueError("checkpoint missing hits section: %s" % path)
    expect = {
        "order": config["order"],
        "regular": -1 if config["regular"] is None else config["regular"],
        "max_edges": -1 if config["max_edges"] is None else config["max_edges"],
        "prune": 1 if config["prune"] else 0,
        "range_start": config["range_start"],
        "range_end": config["range_end"],
    }
    for key, want in expect.items():
        if kv.get(key) != want:
            raise ValueError(
                "checkpoint %s does not match this run: %s=%s, expected %s"
                % (path, key, kv.get(key), want)
            )
    hits = []
    for line in lines[idx + 1 :]:
        if not line:
            continue
        g = graph6.decode(line)
        if g.n != config["order"]:
            raise ValueError("checkpoint hit of wrong order: %s" % line)
        hits.append(counter_of_graph(g))
    return kv["cursor"], kv["visited"], kv["candidates"], hits


# ---------------------------------------------------------------------------
# driver


def _enumerate_range(
    n,
    *,
    regular_only=None,
    max_edges=None,
    workers=None,
    prune=True,
    checkpoint_path=None,
    chunk_limit=None,
    progress=None,
):
    """Scan the whole counter range for one configuration; return
    (visited, candidates, hit counters in counter order)."""
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    config = {
        "order": n,
        "regular": regular_only,
        "max_edges": max_edges,
        "prune": prune,
        "range_start": 0,
        "range_end": total,
    }
    cursor, visited, candidates, hits = 0, 0, 0, []
    if checkpoint_path and os.path.exists(checkpoint_path):
        cursor, visited, candidates, hits = _read_checkpoint(checkpoint_path, config)
    if workers is None:
        workers = default_workers()
    chunk = _chunk_size(nbits)
    tasks = [
        (n, s, min(s + chunk, total), regular_only, max_edges, prune)
        for s in range(cursor, total, chunk)
    ]
    done_chunks = 0

    def absorb(result, task_end):
        nonlocal cursor, visited, candidates, done_chunks
        visited += result[0]
        candidates += result[1]
        hits.extend(result[2])
        cursor = task_end
        done_chunks += 1
        if checkpoint_path:
            _write_checkpoint(checkpoint_path, config, cursor, visited, candidates, hits)
        if progress:
            progress(cursor, total)

    def interrupted(reason):
        if checkpoint_path:
            _write_checkpoint(checkpoint_path, config, cursor, visited, candidates, hits)
        return SearchInterrupted(
            "%s at counter %d of %d%s"
            % (
                reason,
                cursor,
                total,
                "; resume from %s" % checkpoint_path if checkpoint_path else "",
            ),
            checkpoint_path,
            cursor,
            total,
        )

    try:
        if workers <= 1 or len(tasks) <= 1:
            for task in tasks:
                if chunk_limit is not None and done_chunks >= chunk_limit:
                    raise interrupted("stopped after %d chunks" % done_chunks)
                absorb(_scan_chunk(task), task[2])
        else:
            with Pool(processes=workers) as pool:
                for task, result in zip(tasks, pool.imap(_scan_chunk, tasks)):
                    absorb(result, task[2])
                    if chunk_limit is not None and done_chunks >= chunk_limit:
                        raise interrupted("stopped after %d chunks" % done_chunks)
    except KeyboardInterrupt:
        raise interrupted("interrupted") from None
    if checkpoint_path and os.path.exists(checkpoint_path):
        os.remove(checkpoint_path)
    return visited, candidates, hits


def _classes_from_hits(n, hit_counters, count_automorphisms):
    pairs = pair_list(n)
    by_canon = {}
    for x in hit_counters:
        g = graph_from_counter(n, x, pairs)
        canon = canonical_form(g)
        if canon not in by_canon:
            by_canon[canon] = g
    entries = []
    for canon in sorted(by_canon):
        g = by_canon[canon]
        tri = tuple(sorted(triangle_degrees(g), reverse=True))
        if count_automorphisms:
            aut = automorphism_count(g)
            entries.append(
                ClassEntry(canon, g.m, tri, aut_size=aut, labeled_count=factorial(n) // aut)
            )
        else:
            entries.append(ClassEntry(canon, g.m, tri))
    return tuple(entries)


def enumerate_td(
    n: int,
    *,
    regular_only: int | None = None,
    max_edges: int | None = None,
    workers: int | None = None,
    prune: bool = True,
    allow_slow: bool = False,
    checkpoint_path=None,
    count_automorphisms: bool = False,
    chunk_limit: int | None = None,
    progress=None,
) -> SearchReport:
    """Every labeled graph of order n, reported up to isomorphism.

    2 <= n <= 9; n = 9 is 2^36 graphs and demands allow_slow=True.
    chunk_limit stops cooperatively after that many chunks (checkpoint_path
    required), raising SearchInterrupted exactly like an external interrupt;
    it exists for tests and schedulers, not for normal runs.
    """
    if not 2 <= n <= 9:
        raise ValueError("enumeration supports orders 2..9, got %d" % n)
    if n == 9 and not allow_slow:
        raise ValueError(
            "order 9 enumerates 2^36 labeled graphs; pass allow_slow=True "
            "(and preferably a checkpoint path) to run it"
        )
    if chunk_limit is not None and not checkpoint_path:
        raise ValueError("chunk_limit without checkpoint_path would lose the partial scan")
    if regular_only is not None and not 0 <= regular_only < n:
        raise ValueError("regular_only degree %d out of range for order %d" % (regular_only, n))
    visited, candidates, hits = _enumerate_range(
        n,
        regular_only=regular_only,
        max_edges=max_edges,
        workers=workers,
        prune=prune,
        checkpoint_path=checkpoint_path,
        chunk_limit=chunk_limit,
        progress=progress,
    )
    entries = _classes_from_hits(n, hits, count_automorphisms)
    return SearchReport(
        order=n,
        labeled_count=visited,
        candidates=candidates,
        td_labeled=len(hits),
        td_classes=entries,
        min_edges=min((e.edges for e in entries), default=None),
        regular_only=regular_only,
        max_edges=max_edges,
    )


def regular_window_degrees(n: int) -> tuple[int, ...]:
    """Degrees a d-regular triangle-distinct graph of order n could have.

    Exact integer forms of the window sqrt(2n) < d <= n - sqrt(2n/3):
    d*d > 2n and 3*(n-d)^2 >= 2n, plus the handshake parity n*d even.
    """
    out = []
    for d in range(1, n):
        if d * d > 2 * n and 3 * (n - d) * (n - d) >= 2 * n and (n * d) % 2 == 0:
            out.append(d)
    return tuple(out)


def probe_regular(
    n: int,
    *,
    workers: int | None = None,
    allow_slow: bool = False,
    checkpoint_path=None,
    count_automorphisms: bool = False,
    progress=None,
) -> SearchReport:
    """Exhaust every feasible regular degree of order n for TD witnesses.

    The degree window comes from the structural bounds; degrees outside it
    cannot carry a regular triangle-distinct graph, so they are not scanned.
    An empty window returns an immediate all-zero report.  Checkpoints, when
    requested, are kept per degree under '<path>.d<degree>'.
    """
    if not 2 <= n <= 9:
        raise ValueError("probe supports orders 2..9, got %d" % n)
    if n == 9 and not allow_slow:
        raise ValueError("order 9 probes enumerate 2^36 counters per degree; pass allow_slow=True")
    degrees = regular_window_degrees(n)
    visited = candidates = 0
    hits = []
    for d in degrees:
        ckpt = ("%s.d%d" % (checkpoint_path, d)) if checkpoint_path else None
        v, c, h = _enumerate_range(
            n,
            regular_only=d,
            workers=workers,
            prune=True,
            checkpoint_path=ckpt,
            progress=progress,
        )
        visited += v
        candidates += c
        hits.extend(h)
    entries = _classes_from_hits(n, hits, count_automorphisms)
    return SearchReport(
        order=n,
        labeled_count=visited,
        candidates=candidates,
        td_labeled=len(hits),
        td_classes=entries,
        min_edges=min((e.edges for e in entries), default=None),
        regular_degrees=degrees,
    )
