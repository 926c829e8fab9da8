"""The four instrumented closure engines: semi-naive rounds, a
minimum-increment worklist, tabled top-down resolution, and ground-and-solve.

Every engine computes the same relation (the closure of the edge set under
the chosen recursion variant) but performs, and counts, different work; see
core.Instrumentation for what each counter means.  Edge pairs are sorted
once on entry so worklist traces, and with them the counters, are
reproducible run to run.  Inner loops bind hot lookups to locals on purpose.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import (
    PHASE_GROUND,
    PHASE_QUERY,
    PHASE_SOLVE,
    EngineKind,
    EvalResult,
    Instrumentation,
    IntegrityError,
    Pair,
    Relation,
    Variant,
)

GroundAtom = tuple[str, int, int]  # ("edge" | "path", source, target)


@dataclass(frozen=True)
class GroundInstance:
    """One fully instantiated rule: fires iff every body atom is a fact."""

    head: Pair
    body: tuple[GroundAtom, ...]


@dataclass
class GroundProgram:
    """Rule instances in emission order: base instances first, then the
    recursive instances round by round."""

    instances: list[GroundInstance]


def _sorted_edges(edges: Iterable[Pair]) -> list[Pair]:
    return sorted(set(edges))


def _out_index(pairs: Iterable[Pair]) -> dict[int, list[int]]:
    index: dict[int, list[int]] = {}
    for a, b in pairs:
        index.setdefault(a, []).append(b)
    return index


def _in_index(pairs: Iterable[Pair]) -> dict[int, list[int]]:
    index: dict[int, list[int]] = {}
    for a, b in pairs:
        index.setdefault(b, []).append(a)
    return index


# --- Semi-naive bottom-up -------------------------------------------------


def solve_seminaive(edges: Iterable[Pair], variant: Variant) -> EvalResult:
    """Bottom-up fixpoint by delta rounds.

    A round joins only combinations that involve at least one fact first
    derived in the previous round.  For double recursion the join is split
    into delta x older, older x delta, and delta x delta, which puts every
    combination of two facts in exactly one term of exactly one round; for
    the linear variants the delta side is the single recursive hypothesis.
    Every combination therefore fires exactly once over the whole run.
    """
    t0 = time.perf_counter()
    E = _sorted_edges(edges)
    known: set[Pair] = set(E)
    delta: list[Pair] = list(E)
    rec = probes = dups = rounds = 0

    # The join loops below batch each fact's partner list through one
    # comprehension: partner lists hold distinct values and every batch's
    # candidate facts share one fixed component, so candidates within a
    # batch are pairwise distinct and checking them against the set as it
    # stood before the batch is equivalent to checking one at a time.
    if variant is not Variant.DOUBLE:
        index = _out_index(E) if variant is Variant.LEFT else _in_index(E)
        get = index.get
        left = variant is Variant.LEFT
        while delta:
            rounds += 1
            new: list[Pair] = []
            for u, v in delta:
                # left: delta fact (x,z) meets edges out of z
                # right: delta fact (z,y) meets edges into z
                partners = get(v if left else u)
                if partners:
                    m = len(partners)
                    rec += m
                    probes += m
                    if left:
                        fresh = [f for y in partners if (f := (u, y)) not in known]
                    else:
                        fresh = [f for x in partners if (f := (x, v)) not in known]
                    dups += m - len(fresh)
                    if fresh:
                        known.update(fresh)
                        new.extend(fresh)
            delta = new
    else:
        old_src: dict[int, list[int]] = {}  # facts from rounds before the delta
        old_tgt: dict[int, list[int]] = {}
        while delta:
            rounds += 1
            dsrc = _out_index(delta)
            new = []
            osg = old_src.get
            otg = old_tgt.get
            dsg = dsrc.get
            for x, z in delta:
                for ws in (osg(z), dsg(z)):  # delta x older, delta x delta
                    if ws:
                        m = len(ws)
                        rec += m
                        probes += m
                        fresh = [f for w in ws if (f := (x, w)) not in known]
                        dups += m - len(fresh)
                        if fresh:
                            known.update(fresh)
                            new.extend(fresh)
                vs = otg(x)  # older x delta
                if vs:
                    m = len(vs)
                    rec += m
                    probes += m
                    fresh = [f for v in vs if (f := (v, z)) not in known]
                    dups += m - len(fresh)
                    if fresh:
                        known.update(fresh)
                        new.extend(fresh)
            for a, b in delta:
                old_src.setdefault(a, []).append(b)
                old_tgt.setdefault(b, []).append(a)
            delta = new

    ms = (time.perf_counter() - t0) * 1e3
    instr = Instrumentation(
        rec_firings=rec,
        base_firings=len(E),
        probes=probes,
        iterations=rounds,
        duplicate_derivations=dups,
    )
    return EvalResult(frozenset(known), instr, {PHASE_QUERY: ms})


# --- Minimum-increment bottom-up ------------------------------------------


def solve_minincrement(edges: Iterable[Pair], variant: Variant) -> EvalResult:
    """One-fact-at-a-time bottom-up evaluation.

    A FIFO worklist holds derived path facts; a fact is established once
    popped.  Popping f fires exactly the combinations pairing f with
    already-established facts (and f with itself where the variant allows),
    so each combination fires once, when its later-established operand pops.
    The total equals the enumeration count of the recursive rule over the
    closure, which no evaluation strategy can beat.
    """
    t0 = time.perf_counter()
    E = _sorted_edges(edges)
    known: set[Pair] = set(E)
    pending: deque[Pair] = deque(E)
    rec = probes = dups = pops = 0
    pop = pending.popleft

    # Partner lists are batched through one comprehension per pop; see the
    # distinctness note in solve_seminaive for why this is equivalent to
    # the one-fact-at-a-time reading.
    if variant is not Variant.DOUBLE:
        # edge facts are all established up front; only the path operand pops
        index = _out_index(E) if variant is Variant.LEFT else _in_index(E)
        get = index.get
        left = variant is Variant.LEFT
        while pending:
            pops += 1
            u, v = pop()
            partners = get(v if left else u)
            if partners:
                m = len(partners)
                rec += m
                probes += m
                if left:
                    fresh = [f for y in partners if (f := (u, y)) not in known]
                else:
                    fresh = [f for x in partners if (f := (x, v)) not in known]
                dups += m - len(fresh)
                if fresh:
                    known.update(fresh)
                    pending.extend(fresh)
    else:
        est_src: dict[int, list[int]] = {}  # established facts only
        est_tgt: dict[int, list[int]] = {}
        esg = est_src.get
        etg = est_tgt.get
        while pending:
            pops += 1
            x, z = pop()
            ws = esg(z)  # established (z,w): fire (f, q) -> (x, w)
            if ws:
                m = len(ws)
                rec += m
                probes += m
                fresh = [f for w in ws if (f := (x, w)) not in known]
                dups += m - len(fresh)
                if fresh:
                    known.update(fresh)
                    pending.extend(fresh)
            vs = etg(x)  # established (v,x): fire (q, f) -> (v, z)
            if vs:
                m = len(vs)
                rec += m
                probes += m
                fresh = [f for v in vs if (f := (v, z)) not in known]
                dups += m - len(fresh)
                if fresh:
                    known.update(fresh)
                    pending.extend(fresh)
            if x == z:
                # f pairs with itself; the product is f again
                rec += 1
                probes += 1
                dups += 1
            est_src.setdefault(x, []).append(z)
            est_tgt.setdefault(z, []).append(x)

    ms = (time.perf_counter() - t0) * 1e3
    instr = Instrumentation(
        rec_firings=rec,
        base_firings=len(E),
        probes=probes,
        iterations=pops,
        duplicate_derivations=dups,
    )
    return EvalResult(frozenset(known), instr, {PHASE_QUERY: ms})


# --- Tabled top-down ------------------------------------------------------

# Consumer record layout (a plain list for speed):
#   [0] answer list of the table being consumed
#   [1] replay cursor into that list
#   [2] receiving bound table, or None when answers flow to the open table
#   [3] bound first argument of the caller (None for bound receivers)
#   [4] scheduled flag, guards duplicate queue entries
# Bound table layout: [answers, answer_set, consumers, spawn_cursor,
# spawn_scheduled, key]; answers of the table for source v are the pairs
# (v, y), so only the y component is stored.


def solve_topdown(edges: Iterable[Pair], variant: Variant) -> EvalResult:
    """Tabled resolution of the open query with first-argument abstraction.

    Subgoals take two shapes, the open call and calls with a bound first
    argument, and each distinct shape gets one table, created on first
    demand.  Suspension machinery is replaced by an answer worklist: newly
    attached consumers replay existing answers and new answers are pushed to
    attached consumers until nothing is pending.  Base answers of bound
    tables come off the edge index and are counted as probes; the base rule
    itself counts one firing per edge.
    """
    t0 = time.perf_counter()
    E = _sorted_edges(edges)
    eout = _out_index(E)
    rec = probes = dups = pops = 0
    tables = 1  # the open query's table

    if variant is Variant.LEFT:
        # The left-recursive call repeats its caller's abstraction, so the
        # open query only ever calls itself: one table, and its answer
        # worklist is the whole evaluation.
        known: set[Pair] = set(E)
        queue: deque[Pair] = deque(E)
        get = eout.get
        while queue:
            pops += 1
            a, z = queue.popleft()
            ys = get(z)
            if ys:
                m = len(ys)
                rec += m
                probes += m
                fresh = [f for y in ys if (f := (a, y)) not in known]
                dups += m - len(fresh)
                if fresh:
                    known.update(fresh)
                    queue.extend(fresh)
        paths = frozenset(known)

    elif variant is Variant.RIGHT:
        # path(A,B) :- edge(A,Z), path(Z,B): each edge target demands one
        # bound table; tables never consume their own answers.
        open_set: set[Pair] = set(E)
        bound: dict[int, list] = {}
        wireq: deque[int] = deque()
        consq: deque[list] = deque()

        def demand(v: int) -> list:
            nonlocal tables, probes
            t = bound.get(v)
            if t is None:
                ys = eout.get(v, ())
                probes += len(ys)
                t = [list(ys), set(ys), [], 0, False, v]
                bound[v] = t
                tables += 1
                wireq.append(v)
            return t

        for a, z in E:
            t = demand(z)
            c = [t[0], 0, None, a, True]
            t[2].append(c)
            consq.append(c)

        while wireq or consq:
            pops += 1
            if wireq:
                v = wireq.popleft()
                tv = bound[v]
                for z in eout.get(v, ()):
                    t = demand(z)
                    c = [t[0], 0, tv, None, True]
                    t[2].append(c)
                    consq.append(c)
                continue
            c = consq.popleft()
            src = c[0]
            i = c[1]
            recv = c[2]
            # Unseen answers are replayed in one batch; answer lists are
            # duplicate free, so one comprehension against the pre-batch
            # set equals the one-at-a-time replay, and waking dependents
            # once per batch equals waking them per answer because the
            # scheduled flag already collapses repeat wakes.
            if recv is None:
                a = c[3]
                m = len(src)
                if i < m:
                    news = src[i:m]
                    i = m
                    rec += len(news)
                    probes += len(news)
                    fresh = [f for y in news if (f := (a, y)) not in open_set]
                    dups += len(news) - len(fresh)
                    open_set.update(fresh)
            else:
                tl = recv[0]
                ts = recv[1]
                cons = recv[2]
                while True:
                    m = len(src)  # src can be tl itself on a self loop
                    if i >= m:
                        break
                    news = src[i:m]
                    i = m
                    rec += len(news)
                    probes += len(news)
                    fresh = [y for y in news if y not in ts]
                    dups += len(news) - len(fresh)
                    if fresh:
                        ts.update(fresh)
                        tl.extend(fresh)
                        for c2 in cons:
                            if not c2[4]:
                                c2[4] = True
                                consq.append(c2)
            c[1] = i
            c[4] = False
        paths = frozenset(open_set)

    else:
        # Double recursion: every table consumes its own answers at the
        # first hypothesis, so each closure target demands a bound table.
        olist: list[Pair] = list(E)
        oset: set[Pair] = set(E)
        ocur = 0
        osched = True
        bound = {}
        spawnq: deque[int | None] = deque([None])
        consq = deque()

        def demand2(v: int) -> list:
            nonlocal tables, probes
            t = bound.get(v)
            if t is None:
                ys = eout.get(v, ())
                probes += len(ys)
                t = [list(ys), set(ys), [], 0, True, v]
                bound[v] = t
                tables += 1
                spawnq.append(v)
            return t

        while spawnq or consq:
            pops += 1
            if spawnq:
                v = spawnq.popleft()
                if v is None:
                    while ocur < len(olist):
                        a, z = olist[ocur]
                        ocur += 1
                        t = demand2(z)
                        c = [t[0], 0, None, a, True]
                        t[2].append(c)
                        consq.append(c)
                    osched = False
                else:
                    tv = bound[v]
                    ans = tv[0]
                    while tv[3] < len(ans):
                        z = ans[tv[3]]
                        tv[3] += 1
                        t = demand2(z)
                        c = [t[0], 0, tv, None, True]
                        t[2].append(c)
                        consq.append(c)
                    tv[4] = False
                continue
            c = consq.popleft()
            src = c[0]
            i = c[1]
            recv = c[2]
            # Same batched replay as the right-recursive case: answer
            # lists are duplicate free and the scheduled flags collapse
            # repeat wakes, so batching changes no counter.
            if recv is None:
                a = c[3]
                m = len(src)
                if i < m:
                    news = src[i:m]
                    i = m
                    rec += len(news)
                    probes += len(news)
                    fresh = [f for y in news if (f := (a, y)) not in oset]
                    dups += len(news) - len(fresh)
                    if fresh:
                        oset.update(fresh)
                        olist.extend(fresh)
                        if not osched:
                            osched = True
                            spawnq.append(None)
            else:
                tl = recv[0]
                ts = recv[1]
                cons = recv[2]
                while True:
                    m = len(src)  # src can be tl itself on a self loop
                    if i >= m:
                        break
                    news = src[i:m]
                    i = m
                    rec += len(news)
                    probes += len(news)
                    fresh = [y for y in news if y not in ts]
                    dups += len(news) - len(fresh)
                    if fresh:
                        ts.update(fresh)
                        tl.extend(fresh)
                        if not recv[4]:
                            recv[4] = True
                            spawnq.append(recv[5])
                        for c2 in cons:
                            if not c2[4]:
                                c2[4] = True
                                consq.append(c2)
            c[1] = i
            c[4] = False
        paths = frozenset(oset)

    ms = (time.perf_counter() - t0) * 1e3
    instr = Instrumentation(
        rec_firings=rec,
        base_firings=len(E),
        probes=probes,
        iterations=pops,
        duplicate_derivations=dups,
        tables_created=tables,
    )
    return EvalResult(paths, instr, {PHASE_QUERY: ms})


# --- Ground and solve -----------------------------------------------------


def _ground_core(
    E: list[Pair], variant: Variant, out: list[GroundInstance] | None
) -> tuple[set[Pair], Instrumentation]:
    """Instantiate the rules bottom-up, emitting one instance per base fact
    and one per recursive combination; the delta discipline of the
    semi-naive engine keeps each combination to a single instance.  With
    out=None only the counts are kept, which matters when the instance list
    would not fit in memory.
    """
    known: set[Pair] = set(E)
    delta: list[Pair] = list(E)
    rec = probes = dups = rounds = 0
    if out is not None:
        for a, b in E:
            out.append(GroundInstance((a, b), (("edge", a, b),)))

    # When only counts are wanted (out=None) each partner list is batched
    # through one comprehension, which is equivalent fact by fact; see the
    # distinctness note in solve_seminaive.  Emitting runs stay literal.
    if variant is not Variant.DOUBLE:
        index = _out_index(E) if variant is Variant.LEFT else _in_index(E)
        get = index.get
        left = variant is Variant.LEFT
        while delta:
            rounds += 1
            new: list[Pair] = []
            for u, v in delta:
                partners = get(v if left else u)
                if partners:
                    m = len(partners)
                    rec += m
                    probes += m
                    if out is None:
                        if left:
                            fresh = [f for y in partners if (f := (u, y)) not in known]
                        else:
                            fresh = [f for x in partners if (f := (x, v)) not in known]
                        dups += m - len(fresh)
                        if fresh:
                            known.update(fresh)
                            new.extend(fresh)
                    elif left:
                        for y in partners:
                            f = (u, y)
                            out.append(
                                GroundInstance(f, (("path", u, v), ("edge", v, y)))
                            )
                            if f in known:
                                dups += 1
                            else:
                                known.add(f)
                                new.append(f)
                    else:
                        for x in partners:
                            f = (x, v)
                            out.append(
                                GroundInstance(f, (("edge", x, u), ("path", u, v)))
                            )
                            if f in known:
                                dups += 1
                            else:
                                known.add(f)
                                new.append(f)
            delta = new
    else:
        old_src: dict[int, list[int]] = {}
        old_tgt: dict[int, list[int]] = {}
        while delta:
            rounds += 1
            dsrc = _out_index(delta)
            new = []
            for x, z in delta:
                for ws in (old_src.get(z), dsrc.get(z)):
                    if ws:
                        m = len(ws)
                        rec += m
                        probes += m
                        if out is None:
                            fresh = [f for w in ws if (f := (x, w)) not in known]
                            dups += m - len(fresh)
                            if fresh:
                                known.update(fresh)
                                new.extend(fresh)
                        else:
                            for w in ws:
                                f = (x, w)
                                out.append(
                                    GroundInstance(f, (("path", x, z), ("path", z, w)))
                                )
                                if f in known:
                                    dups += 1
                                else:
                                    known.add(f)
                                    new.append(f)
                vs = old_tgt.get(x)
                if vs:
                    m = len(vs)
                    rec += m
                    probes += m
                    if out is None:
                        fresh = [f for v in vs if (f := (v, z)) not in known]
                        dups += m - len(fresh)
                        if fresh:
                            known.update(fresh)
                            new.extend(fresh)
                    else:
                        for v in vs:
                            f = (v, z)
                            out.append(
                                GroundInstance(f, (("path", v, x), ("path", x, z)))
                            )
                            if f in known:
                                dups += 1
                            else:
                                known.add(f)
                                new.append(f)
            for a, b in delta:
                old_src.setdefault(a, []).append(b)
                old_tgt.setdefault(b, []).append(a)
            delta = new

    instr = Instrumentation(
        rec_firings=rec,
        base_firings=len(E),
        probes=probes,
        iterations=rounds,
        duplicate_derivations=dups,
    )
    return known, instr


def ground(edges: Iterable[Pair], variant: Variant) -> tuple[GroundProgram, Instrumentation]:
    """Instantiate the program against the edge facts.

    Emits only supported instances: every body atom of every instance is an
    edge fact or the head of an earlier instance.  Duplicate heads across
    instances are permitted; the recursive instance count equals the
    enumeration count of the recursive rule.
    """
    out: list[GroundInstance] = []
    _, instr = _ground_core(_sorted_edges(edges), variant, out)
    return GroundProgram(out), instr


def solve_ground(program: GroundProgram) -> Relation:
    """Least model of a ground program: the union of all instance heads.

    Edge facts are the base-instance bodies.  Raises IntegrityError if any
    instance's body contains an atom that is neither a given edge fact nor
    derivable as some instance's head, since the grounder never emits such
    an instance.
    """
    instances = program.instances
    edb: set[Pair] = set()
    for inst in instances:
        body = inst.body
        if len(body) == 1 and body[0][0] == "edge":
            edb.add((body[0][1], body[0][2]))

    derived: set[Pair] = set()
    waiting: dict[Pair, list[int]] = {}
    fired = bytearray(len(instances))
    ready: deque[int] = deque(range(len(instances)))
    while ready:
        idx = ready.popleft()
        inst = instances[idx]
        blocked_on: Pair | None = None
        for pred, a, b in inst.body:
            if pred == "edge":
                if (a, b) not in edb:
                    raise IntegrityError(
                        f"instance {idx}: body atom edge({a},{b}) is not a given fact"
                    )
            elif (a, b) not in derived:
                blocked_on = (a, b)
                break
        if blocked_on is not None:
            waiting.setdefault(blocked_on, []).append(idx)
            continue
        fired[idx] = 1
        head = inst.head
        if head not in derived:
            derived.add(head)
            released = waiting.pop(head, None)
            if released:
                ready.extend(released)

    for idx, inst in enumerate(instances):
        if not fired[idx]:
            pred, a, b = next(
                atom for atom in inst.body if (atom[1], atom[2]) not in derived
            )
            raise IntegrityError(
                f"instance {idx}: body atom {pred}({a},{b}) is never derived"
            )
    return frozenset(derived)


# --- Dispatch -------------------------------------------------------------


def run_engine(kind: EngineKind, edges: Iterable[Pair], variant: Variant) -> EvalResult:
    """Run one engine end to end.  The in-memory engines report a Query
    phase; the ground engine reports Ground (instantiation) and Solve
    (uniting the supported heads into the result relation)."""
    if kind is EngineKind.SEMINAIVE:
        return solve_seminaive(edges, variant)
    if kind is EngineKind.MININCREMENT:
        return solve_minincrement(edges, variant)
    if kind is EngineKind.TOPDOWN:
        return solve_topdown(edges, variant)
    if kind is EngineKind.GROUND:
        t0 = time.perf_counter()
        known, instr = _ground_core(_sorted_edges(edges), variant, None)
        t1 = time.perf_counter()
        paths = frozenset(known)
        t2 = time.perf_counter()
        return EvalResult(
            paths,
            instr,
            {PHASE_GROUND: (t1 - t0) * 1e3, PHASE_SOLVE: (t2 - t1) * 1e3},
        )
    raise AssertionError(kind)  # pragma: no cover
