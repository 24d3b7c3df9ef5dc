#!/usr/bin/env python3
"""Regenerates the corpus documents and manifest.json.

Rotations for planar inputs come from straight-line coordinates, sorted
counterclockwise. Run from any directory; output lands next to this file.
"""

import json
import math
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))


def write(rel, doc):
    path = os.path.join(HERE, rel)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        fh.write(json.dumps(doc, indent=2) + "\n")


def graph_doc(n, edges, coords=None, names=None):
    names = names or list(range(n))
    doc = {"vertices": names, "edges": [[names[u], names[v]] for u, v in edges]}
    if coords:
        adj = {v: [] for v in range(n)}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        rot = {}
        for v in range(n):
            x, y = coords[v]
            ccw = sorted(adj[v], key=lambda w: math.atan2(coords[w][1] - y, coords[w][0] - x) % (2 * math.pi))
            rot[str(names[v])] = [names[w] for w in ccw]
        doc["rotation"] = rot
    return doc


def circulant(n, steps):
    return [(i, (i + s) % n) for s in steps for i in range(n) if not (2 * s == n and i >= n // 2)]


def generalized_petersen(n, k):
    return [(i, (i + 1) % n) for i in range(n)] + [(i, n + i) for i in range(n)] + \
        [(n + i, n + (i + k) % n) for i in range(n)]


def nested_triangles(k):
    coords, edges = [], []
    for c in range(k):
        for j in range(3):
            a = 2 * math.pi * j / 3 + (math.pi / 3 if c % 2 else 0.0)
            coords.append((3.0 ** c * math.cos(a), 3.0 ** c * math.sin(a)))
        edges += [(3 * c + j, 3 * c + (j + 1) % 3) for j in range(3)]
    for c in range(k - 1):
        for j in range(3):
            outer = 3 * (c + 1) + j
            # the two inner vertices nearest to this outer vertex
            near = sorted(range(3), key=lambda i: math.dist(coords[outer], coords[3 * c + i]))[:2]
            edges += [(3 * c + i, outer) for i in near]
    return 3 * k, edges, coords


def no_perfect_matching_cubic():
    # a cut vertex joined by bridges to three copies of K4 minus an edge plus a subdividing vertex
    edges = []
    for b in range(3):
        a, bb, c, d, e = (1 + 5 * b + i for i in range(5))
        edges += [(a, c), (a, d), (bb, c), (bb, d), (c, d), (e, a), (e, bb), (0, e)]
    return 16, edges


def random_tree_without_degree_two(rng, max_n):
    # grow by turning a leaf into an internal node with 2 or 3 new children
    adj = {0: [1, 2, 3], 1: [0], 2: [0], 3: [0]}
    while True:
        leaves = [v for v in adj if len(adj[v]) == 1]
        add = rng.choice([2, 3])
        if len(adj) + add > max_n:
            break
        v = rng.choice(leaves)
        for _ in range(add):
            w = len(adj)
            adj[w] = [v]
            adj[v].append(w)
    n = len(adj)
    # planar coordinates: place by a radial layout so the rotation is an embedding
    coords = {0: (0.0, 0.0)}
    order = [(0, None, 0.0, 2 * math.pi, 0)]
    while order:
        v, parent, lo, hi, depth = order.pop()
        kids = [w for w in adj[v] if w != parent]
        for i, w in enumerate(kids):
            a0 = lo + (hi - lo) * i / len(kids)
            a1 = lo + (hi - lo) * (i + 1) / len(kids)
            mid = (a0 + a1) / 2
            coords[w] = ((depth + 1) * math.cos(mid), (depth + 1) * math.sin(mid))
            order.append((w, v, a0, a1, depth + 1))
    edges = sorted({tuple(sorted((v, w))) for v in adj for w in adj[v]})
    return n, edges, [coords[v] for v in range(n)]


# ---- spirograph specs -------------------------------------------------------

def spiro(n, phases, orbits):
    radii = [3.0 ** c for c in range(len(phases))]

    def pos(c, k):
        a = 2 * math.pi * k / n + (math.pi / n if phases[c] else 0.0)
        return (radii[c] * math.cos(a), radii[c] * math.sin(a))

    order = {}
    for c in range(len(phases)):
        refs = []
        for i, (f, t) in enumerate(orbits):
            half = f[0] == t[0] and n % 2 == 0 and (t[1] - f[1]) % n == n // 2
            for at_from, (near, far) in ((True, (f, t)), (False, (t, f))):
                if near[0] != c or (half and not at_from):
                    continue
                k = (far[1] - near[1]) % n
                p, q = pos(c, 0), pos(far[0], k)
                d = (math.atan2(q[1] - p[1], q[0] - p[0]) - math.atan2(p[1], p[0])) % (2 * math.pi)
                refs.append((d, f"{i}{'+' if at_from else '-'}"))
        order[str(c)] = [r for _, r in sorted(refs)]
    return {"symmetry": n, "circles": [{"phase": 0.5 if p else 0} for p in phases],
            "orbits": [{"from": list(f), "to": list(t)} for f, t in orbits], "order": order}


def nested_spiro(k):
    phases = [c % 2 for c in range(k)]
    orbits = [((c, 0), (c, 1)) for c in range(k)]
    for c in range(k - 1):
        if phases[c + 1]:
            orbits += [((c, 0), (c + 1, 0)), ((c, 1), (c + 1, 0))]
        else:
            orbits += [((c, 0), (c + 1, 0)), ((c, 0), (c + 1, 1))]
    return spiro(3, phases, orbits)


def solve_order(sp, perm):
    """Same graph and rotation, circles solved in the order perm (new -> old)."""
    inv = {old: new for new, old in enumerate(perm)}
    out = dict(sp)
    out["circles"] = [sp["circles"][old] for old in perm]
    out["orbits"] = [{"from": [inv[o["from"][0]], o["from"][1]], "to": [inv[o["to"][0]], o["to"][1]]}
                     for o in sp["orbits"]]
    out["order"] = {str(new): sp["order"][str(old)] for new, old in enumerate(perm)}
    return out


def main():
    manifest = []

    def add(rel, doc, engine, expect="ok", **extra):
        write(rel, doc)
        manifest.append({"file": rel, "engine": engine, "expect": expect, **extra})

    paley = [(i, j) for i in range(13) for j in range(i + 1, 13) if (j - i) % 13 in {1, 3, 4, 9, 10, 12}]
    add("graphs/wagner.json", graph_doc(8, circulant(8, [1, 4])), "circular")
    add("graphs/k44.json", graph_doc(8, [(i, 4 + j) for i in range(4) for j in range(4)]), "circular")
    add("graphs/paley13.json", graph_doc(13, paley), "circular")
    add("graphs/petersen.json", graph_doc(10, generalized_petersen(5, 2)), "circular")
    add("graphs/nauru.json", graph_doc(24, generalized_petersen(12, 5)), "circular")
    add("graphs/k5.json", graph_doc(5, [(i, j) for i in range(5) for j in range(i + 1, 5)]), "circular")
    add("graphs/k33.json", graph_doc(6, [(i, 3 + j) for i in range(3) for j in range(3)]), "circular")
    add("graphs/no-pm-cubic.json", graph_doc(*no_perfect_matching_cubic()), "circular",
        expect="NoPerfectMatching")

    for k in (2, 3, 4):
        n, edges, coords = nested_triangles(k)
        # only the octahedron (k = 2) is regular; the others are drawn through spiro/
        add(f"graphs/nested{k}.json", graph_doc(n, edges, coords), "circular" if k == 2 else "none")

    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]
    k4_xy = [(0.0, 0.0)] + [(math.cos(a), math.sin(a)) for a in (math.pi / 2, math.pi * 7 / 6, math.pi * 11 / 6)]
    add("graphs/k4.json", graph_doc(4, k4, k4_xy), "degenerate", mode=3)
    manifest.append({"file": "graphs/k4.json", "engine": "circular", "expect": "ok"})
    cube = [(i, (i + 1) % 4) for i in range(4)] + [(4 + i, 4 + (i + 1) % 4) for i in range(4)] + \
        [(i, 4 + i) for i in range(4)]
    cube_xy = [(math.cos(a), math.sin(a)) for a in (math.pi * (2 * i + 1) / 4 for i in range(4))]
    cube_xy += [(3 * x, 3 * y) for x, y in cube_xy]
    add("graphs/cube.json", graph_doc(8, cube, cube_xy), "degenerate", mode=3)
    manifest.append({"file": "graphs/cube.json", "engine": "circular", "expect": "ok"})

    fan = [(0, i) for i in range(1, 7)] + [(i, i + 1) for i in range(1, 6)]
    fan_xy = [(0.0, 0.0)] + [(math.cos(math.pi * i / 7), math.sin(math.pi * i / 7)) for i in range(1, 7)]
    add("graphs/fan7.json", graph_doc(7, fan, fan_xy), "degenerate", mode=2)
    add("graphs/k23.json", graph_doc(5, [(i, 2 + j) for i in range(2) for j in range(3)]), "degenerate", mode=2)

    # x, y, z triangle plus four apexes; two apexes see the triangle counterclockwise, two clockwise
    g7 = graph_doc(7, [(0, 1), (1, 2), (2, 0)] + [(a, t) for a in range(3, 7) for t in range(3)])
    g7["rotation"] = {"0": [1, 3, 4, 2, 5, 6], "1": [2, 3, 4, 0, 5, 6], "2": [0, 3, 4, 1, 5, 6],
                      "3": [0, 1, 2], "4": [0, 1, 2], "5": [0, 2, 1], "6": [0, 2, 1]}
    add("graphs/g7.json", g7, "degenerate", expect="CoincidentPlacement", mode=3)

    add("trees/star3.json", graph_doc(4, [(0, 1), (0, 2), (0, 3)], [(0, 0), (1, 0), (-0.5, 0.8), (-0.5, -0.8)]),
        "halin")
    rng = random.Random(7)
    for i in range(3):
        n, edges, coords = random_tree_without_degree_two(rng, 12 + 12 * i)
        add(f"trees/random{i}.json", graph_doc(n, edges, coords), "halin")
    wheel = graph_doc(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)])
    wheel["tree_edges"] = [[0, i] for i in range(1, 6)]
    add("trees/wheel5.json", wheel, "halin")

    specs = {
        "cycle7": spiro(7, [0], [((0, 0), (0, 1))]),
        "petersen": spiro(5, [0, 0], [((0, 0), (0, 2)), ((1, 0), (1, 1)), ((0, 0), (1, 0))]),
        "nauru": spiro(12, [0, 0], [((0, 0), (0, 5)), ((1, 0), (1, 1)), ((0, 0), (1, 0))]),
        "k6": spiro(6, [0], [((0, 0), (0, 1)), ((0, 0), (0, 2)), ((0, 0), (0, 3))]),
        "wagner": spiro(8, [0], [((0, 0), (0, 1)), ((0, 0), (0, 4))]),
        "k44": spiro(8, [0], [((0, 0), (0, 1)), ((0, 0), (0, 3))]),
        "paley13": spiro(13, [0], [((0, 0), (0, 1)), ((0, 0), (0, 3)), ((0, 0), (0, 4))]),
        "nested2": nested_spiro(2),
        "nested3": nested_spiro(3),
        "f40": spiro(10, [0, 0, 0, 0], [((0, 0), (0, 1)), ((0, 0), (1, 0)), ((1, 0), (2, 2)),
                                        ((1, 0), (2, -2)), ((2, 0), (3, 0)), ((3, 0), (3, 1))]),
    }
    # chord-sorted slots run arcs through vertices; this order matches the one-circle construction
    specs["paley13"]["order"] = {"0": ["2+", "0+", "1+", "1-", "0-", "2-"]}
    for name, sp in specs.items():
        add(f"spiro/{name}.json", sp, "spiro")
    nested4 = nested_spiro(4)
    add("spiro/nested4.json", nested4, "spiro", expect="RootFindingFailed")
    add("spiro/nested4_forced.json", solve_order(nested4, [2, 1, 0, 3]), "spiro", clean=False)

    write("manifest.json", manifest)


if __name__ == "__main__":
    main()
