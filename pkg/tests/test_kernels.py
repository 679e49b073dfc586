import numpy as np
import networkx as nx

from girth7 import _accel, _kernels

from conftest import from_nx


def csr(G):
    return from_nx(G).csr()


def test_root_cycle_backends_agree():
    for seed in range(30):
        G = nx.gnp_random_graph(30, 0.1, seed=seed)
        indptr, indices = csr(G)
        n = G.number_of_nodes()
        for root in range(0, n, 7):
            d1, p1 = np.full(n, -1), np.full(n, -1)
            d2, p2 = np.full(n, -1), np.full(n, -1)
            a = _kernels.root_cycle_loop(indptr, indices, root, n + 1, d1, p1, np.empty(n, dtype=np.int64))
            b = _kernels.root_cycle_numpy(indptr, indices, root, n + 1, d2, p2)
            assert a[0] == b[0]
            assert (d1 == -1).all()  # distances are reset for the next root


def test_serial_and_chunked_agree():
    for seed in range(10):
        G = nx.random_regular_graph(4, 40, seed=seed)
        indptr, indices = csr(G)
        best, root = _kernels.girth_serial_loop(indptr, indices, 41)
        bests, roots = _kernels.girth_chunked_loop(indptr, indices, 41, 5)
        assert best == bests.min()
        assert root == roots[bests == best].min()
        assert (best, root) == tuple(_kernels.girth_serial_numpy(indptr, indices, 41))


def test_backend_switch(monkeypatch):
    monkeypatch.setenv("GIRTH7_BACKEND", "numpy")
    assert _accel.default_backend() == "numpy"
    monkeypatch.setenv("GIRTH7_BACKEND", "numba")
    assert _accel.default_backend() == "numba"


def test_thread_count(monkeypatch):
    monkeypatch.setenv("GIRTH7_THREADS", "bogus")
    assert _accel.thread_count() == 1
    monkeypatch.setenv("GIRTH7_THREADS", "0")
    assert _accel.thread_count() == 1


def test_parallel_kernel_in_subprocess():
    import os
    import subprocess
    import sys

    code = (
        "import networkx as nx\n"
        "from girth7.incidence import LeviGraph\n"
        "from girth7.verify import girth\n"
        "rows = []\n"
        "for seed in range(8):\n"
        "    G = nx.random_regular_graph(3, 60, seed=seed)\n"
        "    g = LeviGraph([list(G.adj[v]) for v in range(60)], [0] * 60)\n"
        "    a, b = girth(g, threads=1), girth(g, threads=4)\n"
        "    rows.append(a == b and a.length == nx.girth(G))\n"
        "print(all(rows))\n"
    )
    env = dict(os.environ, NUMBA_NUM_THREADS="4", NUMBA_THREADING_LAYER="workqueue")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, timeout=300)
    assert out.stdout.strip() == "True", out.stderr


def test_disable_jit_selects_numpy():
    import os
    import subprocess
    import sys

    code = (
        "from girth7 import _accel\n"
        "from girth7.constructions import build\n"
        "from girth7.verify import certify\n"
        "c = certify(build('thm-rectfree', q=3))\n"
        "print(_accel.default_backend(), c.girth)\n"
    )
    env = dict(os.environ, GIRTH7_DISABLE_JIT="1")
    env.pop("GIRTH7_BACKEND", None)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, timeout=300)
    assert out.stdout.split() == ["numpy", "7"], out.stderr
