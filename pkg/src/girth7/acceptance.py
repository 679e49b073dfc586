"""The acceptance table run by ``girth7 selftest`` and the test suite.

Each criterion returns ``(ok, detail, worst_seconds)`` where the time is
the slowest single build+certify it performed (or its whole runtime when it
builds nothing), to be compared with its budget.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import constructions as C
from .errors import Girth7Error
from .formats import FORMATS, export, import_graph
from .incidence import check_gq_axioms, is_deleteable, levi_graph
from .matchings import is_rectangle_free, one_factorization, rectangle_free_matching
from .verify import cage_gap_report, certify, girth, is_cycle, moore_bound


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    budget: float  # seconds
    run: Callable


@dataclass(frozen=True)
class Outcome:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    budget: float

    @property
    def within_budget(self) -> bool:
        return self.seconds <= self.budget

    @property
    def passed(self) -> bool:
        return self.ok and self.within_budget

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        over = "" if self.within_budget else " OVER BUDGET"
        return f"[{tag}] {self.number:>2}. {self.title}: {self.detail} ({self.seconds:.2f}s / {self.budget:g}s{over})"


_BUILT: dict = {}


def built_and_certified(name: str, q: int | None = None, k: int | None = None):
    """Build and certify once per process; returns (built, cert, seconds)."""
    key = (name, q, k)
    if key not in _BUILT:
        t0 = time.perf_counter()
        b = C.build(name, q=q, k=k)
        cert = certify(b)
        _BUILT[key] = (b, cert, time.perf_counter() - t0)
    return _BUILT[key]


def _warm():
    """Everything the table-level criteria look at (untimed)."""
    for key in SMALL_CASES:
        built_and_certified(*key)
    return [_BUILT[key] for key in sorted(_BUILT, key=str)]


def _family(name, cases):
    """Build+certify each case; returns (built list, failures, worst time)."""
    done, bad, worst = [], [], 0.0
    for q, k, order in cases:
        try:
            b, cert, secs = built_and_certified(name, q, k)
        except Girth7Error as exc:
            bad.append(f"{name} q={q} k={k}: {exc}")
            continue
        worst = max(worst, secs)
        if cert.n != order:
            bad.append(f"q={q}: order {cert.n} != {order}")
        done.append((b, cert))
    return done, bad, worst


def _summary(done, bad, extra=""):
    if bad:
        return False, "; ".join(bad)
    desc = ", ".join(f"n={c.n} k={c.k} g={c.girth}" for _, c in done)
    return True, desc + (f"; {extra}" if extra else "")


def crit_gq_substrate():
    t0 = time.perf_counter()
    bad = []
    for q in (2, 3, 4):
        for name, build in (("W", C.build_W), ("Q4", C.build_Q4)):
            S = build(q)
            expect = (q + 1) * (q * q + 1)
            if len(S.points) != expect or len(S.lines) != expect:
                bad.append(f"{name}({q}) has {len(S.points)}/{len(S.lines)}")
            rep = check_gq_axioms(S, q, q)
            if not rep.ok:
                bad.append(f"{name}({q}) axioms {rep.witnesses}")
            g = girth(levi_graph(S)).length
            if g != 8:
                bad.append(f"{name}({q}) Levi girth {g}")
    ok = not bad
    return ok, "W(q), Q(4,q) for q=2,3,4 are GQ(q,q), Levi girth 8" if ok else "; ".join(bad), time.perf_counter() - t0


def crit_main_i():
    done, bad, worst = _family("thm-main-i", [(7, None, 784), (8, None, 1152), (9, None, 1620)])
    return (*_summary(done, bad), worst)


def crit_main_ii():
    done, bad, worst = _family("thm-main-ii", [(7, None, 672), (8, None, 1008), (9, None, 1440)])
    for b, _ in done:
        if b.witness is None or not is_cycle(b.graph, b.witness) or len(b.witness) != 7:
            bad.append(f"q={b.q}: witness {b.witness} is not a 7-cycle")
    return (*_summary(done, bad, "witness 7-cycles valid"), worst)


def crit_rectfree():
    done, bad, worst = _family("thm-rectfree", [(3, None, 77), (5, None, 307), (7, None, 793)])
    for _, c in done:
        if not c.n < c.moore8:
            bad.append(f"n={c.n} not below M({c.k},8)={c.moore8}")
    bounds = ", ".join(f"M({c.k},8)={c.moore8}" for _, c in done)
    return (*_summary(done, bad, bounds), worst)


def crit_even_k():
    done, bad, worst = _family("thm-even-k", [(5, 4, 195), (7, 6, 581), (9, 8, 1287)])
    for b, _ in done:
        chk = is_deleteable(b.source, b.deleted)
        if not chk.ok:
            bad.append(f"k={b.k}: deleted set fails closure at {chk.witness}")
        if b.witness is None or not is_cycle(b.graph, b.witness):
            bad.append(f"k={b.k}: witness {b.witness} is not a cycle")
    return (*_summary(done, bad, "W deleteable, witness cycles valid"), worst)


def crit_wq_even():
    done, bad, worst = _family("thm-wq-even", [(4, None, 152), (8, None, 1104)])
    for b, _ in done:
        if len(b.deleted) != b.q**2 + 2:
            bad.append(f"q={b.q}: |W| = {len(b.deleted)} != {b.q**2 + 2}")
    return (*_summary(done, bad, "|W| = q^2+2"), worst)


def crit_matchings():
    t0 = time.perf_counter()
    bad = []
    for k in range(2, 17, 2):
        ofz = one_factorization(k)
        pairs = [p for F in ofz.factors for p in F]
        if len(pairs) != k * (k - 1) // 2 or len(set(pairs)) != len(pairs):
            bad.append(f"K_{k} not covered exactly once")
    for k in range(4, 13, 2):
        plan = rectangle_free_matching(k)
        lattice = {(i, j) for i in range(1, k) for j in range(1, k + 1)}
        sup = plan.support()
        if set(sup) != lattice or any(c != 1 for c in sup.values()):
            bad.append(f"k={k}: not a perfect matching of the lattice")
        if not is_rectangle_free(plan):
            bad.append(f"k={k}: contains a rectangle")
    ok = not bad
    return ok, "one-factorizations k<=16, rectangle-free matchings k=4..12" if ok else "; ".join(bad), time.perf_counter() - t0


SMALL_CASES = (
    ("thm-main-i", 7, None), ("thm-main-ii", 7, None), ("thm-rectfree", 3, None),
    ("thm-rectfree", 5, None), ("thm-even-k", 5, 4), ("thm-even-k", 7, 6), ("thm-wq-even", 4, None),
    ("thm-wq-even", 8, None),
)


def crit_moore():
    certs = [c for _, c, _ in _warm()]
    t0 = time.perf_counter()
    bad = []
    for (k, g), want in {(8, 7): 457, (8, 8): 800, (3, 5): 10}.items():
        got = moore_bound(k, g)
        if got != want:
            bad.append(f"M({k},{g}) = {got} != {want}")
    for c in certs:
        if c.n < c.moore7:
            bad.append(f"{c.construction} q={c.q}: n={c.n} < M({c.k},7)={c.moore7}")
    ok = not bad
    detail = f"M(8,7)=457, M(8,8)=800, M(3,5)=10; {len(certs)} certificates have n >= M(k,7)"
    return ok, detail if ok else "; ".join(bad), time.perf_counter() - t0


def _row(cert, source):
    rows = [r for r in cage_gap_report(cert)["comparisons"] if r["source"] == source]
    return rows[0] if rows else None


def crit_cage_gap():
    _warm()
    t0 = time.perf_counter()
    bad = []
    r = _row(built_and_certified("thm-wq-even", 8)[1], "abreu")
    if r is None or r["verdict"] != "equal" or r["order"] != 1104:
        bad.append(f"q=8 vs Abreu: {r}")
    r = _row(built_and_certified("thm-main-i", 7)[1], "abreu")
    if r is None or r["verdict"] != "larger" or r["order"] != 778 or not 0 < r["difference"] <= 7:
        bad.append(f"q=7 vs Abreu: {r}")
    r = _row(built_and_certified("thm-main-ii", 7)[1], "luw")
    if r is None or r["verdict"] != "smaller" or r["order"] != 686:
        bad.append(f"k=q=7 vs LUW: {r}")
    ok = not bad
    detail = "1104 = Abreu (q=8), 784 vs 778 (q=7), 672 < 686 LUW (k=q=7)"
    return ok, detail if ok else "; ".join(bad), time.perf_counter() - t0


def crit_roundtrip():
    graphs = [b.graph for b, _, _ in _warm()]
    t0 = time.perf_counter()
    bad = []
    for g in graphs:
        for fmt in FORMATS:
            back = import_graph(export(g, fmt), fmt)
            if not back.same_adjacency(g):
                bad.append(f"{fmt} round-trip differs for n={g.n}")
        if not (import_graph(export(g, "json"), "json").vertex_type == g.vertex_type).all():
            bad.append(f"json lost vertex types for n={g.n}")
    ok = not bad
    return ok, f"graph6/edgelist/json identity on {len(graphs)} graphs" if ok else "; ".join(bad), time.perf_counter() - t0


CRITERIA = (
    Criterion(1, "GQ substrate", 10.0, crit_gq_substrate),
    Criterion(2, "main construction (i), q=7,8,9", 30.0, crit_main_i),
    Criterion(3, "main construction (ii), q=7,8,9", 30.0, crit_main_ii),
    Criterion(4, "rectangle-free construction, q=3,5,7", 30.0, crit_rectfree),
    Criterion(5, "even-k construction, k=4,6,8", 30.0, crit_even_k),
    Criterion(6, "symplectic even-q construction, q=4,8", 30.0, crit_wq_even),
    Criterion(7, "matching gadgets", 5.0, crit_matchings),
    Criterion(8, "Moore bound", 1.0, crit_moore),
    Criterion(9, "cage-gap comparisons", 1.0, crit_cage_gap),
    Criterion(10, "format round-trips", 5.0, crit_roundtrip),
)


def run_criterion(c: Criterion) -> Outcome:
    try:
        ok, detail, secs = c.run()
    except Exception as exc:  # a crash is a failed criterion, reported as such
        ok, detail, secs = False, f"{type(exc).__name__}: {exc}", 0.0
    return Outcome(c.number, c.title, ok, detail, secs, c.budget)


def run_all(numbers=None) -> list[Outcome]:
    return [run_criterion(c) for c in CRITERIA if numbers is None or c.number in numbers]
