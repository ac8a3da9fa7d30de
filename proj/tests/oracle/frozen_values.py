"""Independent reference values for the C++ tests (pure Python, networkx, pynauty).

Run: python3 tests/oracle/frozen_values.py
"""
import itertools
import json
import sys

import networkx as nx
import pynauty


def words(n):
    return ["".join(p) for p in itertools.product("01", repeat=n)]


def avoiders(d, f):
    return [w for w in words(d) if f not in w]


def cube(d, f=None):
    vs = words(d) if f is None else avoiders(d, f)
    s = set(vs)
    g = nx.Graph()
    g.add_nodes_from(sorted(vs, key=lambda w: int(w, 2) if w else 0))
    for w in vs:
        for i in range(d):
            x = w[:i] + ("1" if w[i] == "0" else "0") + w[i + 1:]
            if x in s and w < x:
                g.add_edge(w, x)
    return g


def rep(f):
    comp = f.translate(str.maketrans("01", "10"))
    return min(f, f[::-1], comp, comp[::-1])


def reps(k):
    return sorted({rep(f) for f in words(k)})


def nu(f):
    return sum(1 for a, b in zip(f, f[1:]) if a != b)


def nauty_cert(g):
    idx = {v: i for i, v in enumerate(g)}
    adj = {i: [] for i in range(len(idx))}
    for u, v in g.edges():
        adj[idx[u]].append(idx[v])
    return len(idx), pynauty.certificate(pynauty.Graph(len(idx), adjacency_dict=adj))


def classes(d, kmin, kmax):
    buckets = {}
    for k in range(kmin, kmax + 1):
        for f in reps(k):
            buckets.setdefault(nauty_cert(cube(d, f)), []).append(f)
    return [sorted(c, key=lambda w: (len(w), w)) for c in buckets.values()]


def autocorr(f):
    k = len(f)
    return [int(f[i:] == f[:k - i]) for i in range(k)]


out = {}
out["counts"] = {f"{d}:{f}": len(avoiders(d, f)) for d, f in
                 [(3, "11"), (4, "0110"), (10, "0110"), (12, "00111"), (16, "010"), (20, "11")]}
out["autocorr"] = {f: autocorr(f) for f in ["0110", "0000", "0001", "01010", "0010100", "1"]}
out["reps_len"] = {k: len(reps(k)) for k in range(1, 11)}
out["graph6"] = {f"{d}:{f}": nx.to_graph6_bytes(cube(d, f), header=False).decode().strip()
                 for d, f in [(3, "11"), (4, "0110"), (5, "0011")]}
out["graph6"]["K2"] = nx.to_graph6_bytes(nx.complete_graph(2), header=False).decode().strip()
out["edges"] = {f"{d}:{f}": cube(d, f).number_of_edges() for d, f in [(3, "11"), (6, "0110"), (6, "0100"), (8, "0011")]}
out["classes"] = {}
for d in range(4, 11):
    cl = classes(d, 3, d - 1)
    pairs = sum(len(c) * (len(c) - 1) // 2 for c in cl)
    out["classes"][d] = {"classes": len(cl), "pairs": pairs,
                         "multi": [c for c in cl if len(c) > 1] if d <= 6 else None}
    print(d, out["classes"][d], flush=True, file=sys.stderr)
out["classes_full_6"] = len(classes(6, 1, 6))
print(json.dumps(out, indent=1))
