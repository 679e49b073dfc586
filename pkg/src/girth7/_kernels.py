"""Shortest-cycle BFS kernels over CSR adjacency.

Each kernel answers the same per-root question: run a BFS from ``root`` and
return the smallest ``dist[u] + dist[w] + 1`` over non-tree edges ``uw`` that
is below ``limit``, together with that edge.  The minimum over all roots is
the girth.  The search stops once ``2 * dist[u] + 1`` reaches the best value
seen, since no later edge can improve on it.

``root_cycle_loop`` is a scalar queue BFS compiled with numba when enabled.
``root_cycle_numpy`` is a level-synchronous BFS written with numpy array
operations; it is the fallback path and doubles as an independent check.
"""

import numpy as np

from ._accel import njit, prange


def _root_cycle_loop(indptr, indices, root, limit, dist, parent, queue):
    head = 0
    tail = 1
    queue[0] = root
    dist[root] = 0
    parent[root] = -1
    best = limit
    bu = -1
    bw = -1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if 2 * du + 1 >= best:
            break
        pu = parent[u]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = du + 1
                parent[w] = u
                queue[tail] = w
                tail += 1
            elif w != pu:
                length = du + dist[w] + 1
                if length < best:
                    best = length
                    bu = u
                    bw = w
    for i in range(tail):
        dist[queue[i]] = -1
    return best, bu, bw


root_cycle_loop = njit(cache=True)(_root_cycle_loop)


def _girth_serial(indptr, indices, limit):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    best = limit
    best_root = -1
    for r in range(n):
        length, _, _ = root_cycle_loop(indptr, indices, r, best, dist, parent, queue)
        if length < best:
            best = length
            best_root = r
    return best, best_root


girth_serial_loop = njit(cache=True)(_girth_serial)


def _girth_chunked(indptr, indices, limit, nchunks):
    n = indptr.shape[0] - 1
    bests = np.full(nchunks, limit, dtype=np.int64)
    roots = np.full(nchunks, -1, dtype=np.int64)
    for c in prange(nchunks):
        dist = np.full(n, -1, dtype=np.int64)
        parent = np.full(n, -1, dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        best = limit
        broot = -1
        for r in range(c, n, nchunks):
            length, _, _ = root_cycle_loop(indptr, indices, r, best, dist, parent, queue)
            if length < best:
                best = length
                broot = r
        bests[c] = best
        roots[c] = broot
    return bests, roots


girth_chunked_loop = njit(cache=True, parallel=True)(_girth_chunked)


def root_cycle_numpy(indptr, indices, root, limit, dist, parent):
    """Level-synchronous variant of :func:`root_cycle_loop` (no queue needed)."""
    deg = np.diff(indptr)
    dist[root] = 0
    parent[root] = -1
    frontier = np.array([root], dtype=np.int64)
    seen = [frontier]
    best, bu, bw = limit, -1, -1
    d = 0
    while frontier.size and 2 * d + 1 < best:
        counts = deg[frontier]
        total = int(counts.sum())
        if total == 0:
            break
        us = np.repeat(frontier, counts)
        offsets = np.repeat(indptr[frontier] - np.cumsum(counts) + counts, counts)
        ws = indices[offsets + np.arange(total)]
        keep = ws != parent[us]
        us, ws = us[keep], ws[keep]
        dw = dist[ws]
        old = dw >= 0
        if old.any():
            lengths = d + dw[old] + 1
            i = int(np.argmin(lengths))
            if lengths[i] < best:
                best = int(lengths[i])
                bu, bw = int(us[old][i]), int(ws[old][i])
        new_us, new_ws = us[~old], ws[~old]
        uniq, first, mult = np.unique(new_ws, return_index=True, return_counts=True)
        dist[uniq] = d + 1
        parent[uniq] = new_us[first]
        if 2 * d + 2 < best and np.any(mult > 1):
            # a vertex reached from two frontier vertices closes an even cycle
            dup = uniq[mult > 1][0]
            hits = np.flatnonzero(new_ws == dup)
            best = 2 * d + 2
            bu, bw = int(new_us[hits[1]]), int(dup)
        frontier = uniq
        seen.append(uniq)
        d += 1
    for level in seen:
        dist[level] = -1
    return best, bu, bw


def girth_serial_numpy(indptr, indices, limit):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    best, best_root = limit, -1
    for r in range(n):
        length, _, _ = root_cycle_numpy(indptr, indices, r, best, dist, parent)
        if length < best:
            best, best_root = length, r
    return best, best_root
