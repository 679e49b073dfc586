"""Exhaustive certification of built graphs."""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import _accel, _kernels
from .errors import CertificationFailed
from .incidence import Check, LeviGraph, degree_audit


@dataclass(frozen=True)
class GirthResult:
    length: float  # math.inf for forests; cutoff + 1 when nothing shorter exists
    witness: tuple
    exact: bool = True

    def __iter__(self):
        return iter((self.length, self.witness))


def _resolve_backend(backend: str | None) -> str:
    backend = backend or _accel.default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and _accel.numba is None:
        raise RuntimeError("numba backend requested but numba is not importable")
    return backend


def _best_root(indptr, indices, limit, backend, threads):
    if backend == "numpy":
        return _kernels.girth_serial_numpy(indptr, indices, limit)
    threads = min(threads, _accel.numba.config.NUMBA_NUM_THREADS)
    if threads > 1:
        _accel.numba.set_num_threads(threads)
        bests, roots = _kernels.girth_chunked_loop(indptr, indices, limit, threads * 4)
        best = int(bests.min())
        if best >= limit:
            return limit, -1
        return best, int(roots[bests == best].min())
    best, root = _kernels.girth_serial_loop(indptr, indices, limit)
    return int(best), int(root)


def _witness(indptr, indices, root, length, backend) -> tuple:
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    if backend == "numpy":
        got, u, w = _kernels.root_cycle_numpy(indptr, indices, root, length + 1, dist, parent)
    else:
        queue = np.empty(n, dtype=np.int64)
        got, u, w = _kernels.root_cycle_loop(indptr, indices, root, length + 1, dist, parent, queue)
    if got != length:
        raise RuntimeError(f"witness search from {root} found {got}, expected {length}")

    def up(x):
        path = [int(x)]
        while parent[path[-1]] >= 0:
            path.append(int(parent[path[-1]]))
        return path

    pu, pw = up(u), up(w)
    return tuple(reversed(pu)) + tuple(pw[:-1])


def girth(g: LeviGraph, cutoff: int | None = None, backend: str | None = None, threads: int | None = None) -> GirthResult:
    """Exact girth and a shortest cycle, by BFS from every vertex.

    With ``cutoff`` only cycles of length <= cutoff are looked for; if there
    are none the result is ``cutoff + 1`` with ``exact=False`` (meaning
    "at least cutoff + 1").  An acyclic graph has girth ``math.inf``.
    The witness starts at the smallest vertex lying on a shortest cycle.
    """
    backend = _resolve_backend(backend)
    threads = _accel.thread_count() if threads is None else max(1, threads)
    indptr, indices = g.csr()
    limit = g.n + 1 if cutoff is None else min(cutoff + 1, g.n + 1)
    if g.n == 0:
        return GirthResult(math.inf, (), cutoff is None)
    best, root = _best_root(indptr, indices, limit, backend, threads)
    if root < 0:
        if cutoff is None:
            return GirthResult(math.inf, ())
        return GirthResult(cutoff + 1, (), exact=False)
    return GirthResult(int(best), _witness(indptr, indices, root, int(best), backend))


def is_cycle(g: LeviGraph, cycle) -> bool:
    """Distinct vertices, consecutive ones (cyclically) adjacent."""
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def moore_bound(k: int, g: int) -> int:
    """Moore lower bound on the order of a k-regular graph of girth g.

    Odd g counts the ball of radius (g-1)/2 around a vertex, even g the
    ball of radius g/2 - 1 around an edge.
    """
    if k < 2 or g < 3:
        raise ValueError("need k >= 2 and g >= 3")
    if g % 2:
        return 1 + sum(k * (k - 1) ** i for i in range((g - 3) // 2 + 1))
    return 2 * sum((k - 1) ** i for i in range((g - 2) // 2 + 1))


def is_regular(g: LeviGraph, k: int) -> Check:
    deg = g.degrees()
    deviant = [int(v) for v in np.flatnonzero(deg != k)]
    return Check(not deviant, deviant)


def reference_orders(k: int, q: int | None) -> dict:
    """Orders of previously known (k,7)-graphs for the same degree.

    ``luw``: 2q^3 for k = q and 2q^3 - 2q^2 for k = q - 1, q odd > 3.
    ``abreu``: 2q^3 + q^2 + 2q (q even) or 2q^3 + 2q^2 - q + 1 (q odd) for
    k = q + 1.
    """
    refs = {}
    if q is None:
        return refs
    if k == q:
        refs["luw"] = 2 * q**3
    if k == q - 1 and q % 2 and q > 3:
        refs["luw"] = 2 * q**3 - 2 * q**2
    if k == q + 1:
        if q % 2 == 0 and q >= 4:
            refs["abreu"] = 2 * q**3 + q**2 + 2 * q
        elif q % 2 and q >= 5:
            refs["abreu"] = 2 * q**3 + 2 * q**2 - q + 1
    return refs


@dataclass
class Certificate:
    construction: str | None
    q: int | None
    k: int | None
    n: int
    girth: float
    witness: tuple
    moore7: int | None
    moore8: int | None
    references: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    degree_histogram: dict = field(default_factory=dict)
    method: str = "exhaustive"

    def to_json(self) -> dict:
        g = self.girth
        return {
            "construction": self.construction,
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "girth": None if g == math.inf else int(g),
            "witness": [int(v) for v in self.witness],
            "moore7": self.moore7,
            "moore8": self.moore8,
            "references": dict(self.references),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        g = obj["girth"]
        return cls(
            obj["construction"], obj["q"], obj["k"], obj["n"],
            math.inf if g is None else g, tuple(obj["witness"]),
            obj["moore7"], obj["moore8"], dict(obj["references"]), obj["elapsed_ms"],
        )


def certify_graph(
    g: LeviGraph,
    k: int | None = None,
    expect_girth: int | None = None,
    expect_order: int | None = None,
    construction: str | None = None,
    q: int | None = None,
    references: dict | None = None,
    backend: str | None = None,
) -> Certificate:
    """Check regularity, exact girth, order and the Moore lower bound.

    Raises :class:`CertificationFailed` naming the first claim that does
    not hold.
    """
    t0 = time.perf_counter()
    hist = degree_audit(g)
    if k is None:
        if len(hist) != 1:
            raise CertificationFailed("regular", f"degree histogram {dict(hist)}")
        k = next(iter(hist))
    reg = is_regular(g, k)
    if not reg.ok:
        raise CertificationFailed("regular", f"{len(reg.witness)} vertices not of degree {k}, first {reg.witness[0]}")
    if expect_order is not None and g.n != expect_order:
        raise CertificationFailed("order", f"n = {g.n}, expected {expect_order}")
    res = girth(g, backend=backend)
    if res.witness and not is_cycle(g, res.witness):
        raise CertificationFailed("witness", "reported cycle is not a cycle of the graph")
    if expect_girth is not None and res.length != expect_girth:
        raise CertificationFailed("girth", f"girth {res.length}, expected {expect_girth}")
    m7 = moore_bound(k, 7) if k >= 2 else None
    m8 = moore_bound(k, 8) if k >= 2 else None
    if res.length != math.inf and k >= 2 and g.n < moore_bound(k, int(res.length)):
        raise CertificationFailed("moore", f"n = {g.n} below M({k},{res.length})")
    return Certificate(
        construction, q, k, g.n, res.length, res.witness, m7, m8,
        dict(references or {}), (time.perf_counter() - t0) * 1000.0,
        {int(d): c for d, c in sorted(hist.items())},
    )


def certify(b) -> Certificate:
    """Certificate for a :class:`~girth7.constructions.BuiltGraph`."""
    refs = {"formula": b.expected_order, **reference_orders(b.expected_degree, b.q)}
    cert = certify_graph(
        b.graph, k=b.expected_degree, expect_girth=7, expect_order=b.expected_order,
        construction=b.construction, q=b.q, references=refs,
    )
    if b.witness is not None and not is_cycle(b.graph, b.witness):
        raise CertificationFailed("geometric witness", f"{b.witness} is not a cycle")
    if b.below_moore8 and not cert.n < cert.moore8:
        raise CertificationFailed("moore8", f"n = {cert.n} is not below M({cert.k},8) = {cert.moore8}")
    return cert


def cage_gap_report(c: Certificate) -> dict:
    """Compare a certificate with the Moore bound and earlier constructions."""
    rows = []
    for tag, order in sorted(c.references.items()):
        if tag == "formula":
            continue
        if c.n < order:
            verdict = "smaller"
        elif c.n == order:
            verdict = "equal"
        else:
            verdict = "larger"
        rows.append({"source": tag, "order": order, "ours": c.n, "difference": c.n - order, "verdict": verdict})
    return {
        "construction": c.construction,
        "k": c.k,
        "q": c.q,
        "n": c.n,
        "girth": None if c.girth == math.inf else int(c.girth),
        "moore7": c.moore7,
        "ratio_to_moore7": c.n / c.moore7 if c.moore7 else None,
        "comparisons": rows,
    }


def format_report(report: dict) -> str:
    lines = [
        f"{report['construction'] or 'graph'}: k={report['k']} q={report['q']} n={report['n']} girth={report['girth']}",
        f"  M(k,7) = {report['moore7']}, n / M(k,7) = {report['ratio_to_moore7']:.4f}",
    ]
    for row in report["comparisons"]:
        lines.append(f"  vs {row['source']:<6} {row['order']:>8}  ours {row['ours']:>8}  ({row['verdict']}, {row['difference']:+d})")
    return "\n".join(lines)
