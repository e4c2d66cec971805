#!/usr/bin/env python3
"""Freeze rotation systems for the polyhedral built-in families.

Emits C++ initializer tables for the icosahedron and dodecahedron from
networkx planar embeddings, and cross-checks the face counts that the
C++ face tracer must reproduce.  Output is pasted into src/plane.cpp.
"""

import networkx as nx


def rotations(g):
    ok, emb = nx.check_planarity(g)
    assert ok
    data = emb.get_data()  # vertex -> neighbours in clockwise order
    return {v: data[v] for v in sorted(data)}


def trace_faces(rot):
    darts = {(u, v) for u in rot for v in rot[u]}
    faces = []
    seen = set()
    succ = {u: {a: rot[u][(i + 1) % len(rot[u])] for i, a in enumerate(rot[u])} for u in rot}
    for d in sorted(darts):
        if d in seen:
            continue
        walk = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            walk.append(cur[0])
            u, v = cur
            cur = (v, succ[v][u])
        faces.append(walk)
    return faces


def emit(name, g):
    rot = rotations(g)
    faces = trace_faces(rot)
    v, e, f = g.number_of_nodes(), g.number_of_edges(), len(faces)
    assert v - e + f == 2, (name, v, e, f)
    print(f"// {name}: v={v} e={e} f={f}; face lengths {sorted(len(w) for w in faces)}")
    print(f"const std::vector<std::vector<int>> k_{name}_rotation = {{")
    for vtx in sorted(rot):
        print("    {" + ", ".join(map(str, rot[vtx])) + "},")
    print("};")
    outer = min(faces, key=lambda w: (len(w), w))
    print(f"const std::vector<int> k_{name}_outer = {{" + ", ".join(map(str, outer)) + "};")
    print()


emit("icosahedron", nx.icosahedral_graph())
emit("dodecahedron", nx.dodecahedral_graph())

# sanity: wheel rotation formula used in C++ (rim i: [i+1, hub, i-1]; hub: [0..n-1])
for n in range(3, 9):
    rot = {i: [(i + 1) % n, n, (i - 1) % n] for i in range(n)}
    rot[n] = list(range(n))
    faces = trace_faces(rot)
    v, e, f = n + 1, 2 * n, len(faces)
    assert v - e + f == 2, ("wheel", n, f)
    assert sorted(len(w) for w in faces) == [3] * n + [n]
print("// wheel formula OK for n=3..8")

# sanity: grid rotation formula (at (i,j): right, up, left, down; row i down, col j right)
for m, nn in [(2, 2), (2, 4), (3, 3), (1, 5), (4, 2)]:
    def vid(i, j):
        return i * nn + j
    rot = {}
    for i in range(m):
        for j in range(nn):
            order = []
            if j + 1 < nn:
                order.append(vid(i, j + 1))
            if i - 1 >= 0:
                order.append(vid(i - 1, j))
            if j - 1 >= 0:
                order.append(vid(i, j - 1))
            if i + 1 < m:
                order.append(vid(i + 1, j))
            rot[vid(i, j)] = order
    faces = trace_faces(rot)
    v, e, f = m * nn, m * (nn - 1) + nn * (m - 1), len(faces)
    assert v - e + f == 2, ("grid", m, nn, f)
print("// grid formula OK")

# sanity: the two-apex octagon used by the structural test suite
g = nx.Graph()
g.add_edges_from([(i, (i + 1) % 8) for i in range(8)])
g.add_edges_from([(8, 0), (8, 1), (8, 2), (8, 3), (9, 4), (9, 5), (9, 6), (9, 7), (8, 9)])
rot = rotations(g)
faces = trace_faces(rot)
assert len(faces) == 9
print("// two-apex octagon rotation:")
for vtx in sorted(rot):
    print(f"//   {vtx}: {rot[vtx]}")
