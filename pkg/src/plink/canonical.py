"""
Canonical forms of simplicial complexes up to vertex relabeling.

Vertices are first coloured by their degree vector (number of faces of
each dimension through the vertex) and the colouring is refined until
stable: a vertex's new colour records, for every maximal simplex through
it, the multiset of colours of the other vertices. The search tree then
individualizes vertices of the first smallest non-trivial cell, refining
after each step; every leaf is a relabeling, and the lexicographically
smallest relabeled maximal-simplex list is the canonical encoding. Two
leaves with equal encodings give an automorphism, which is used to skip
equivalent children further up the tree.
"""

import hashlib
from collections import namedtuple
from itertools import combinations

__all__ = ["CanonicalForm", "canonicalize", "is_isomorphic"]

CanonicalForm = namedtuple("CanonicalForm", "permutation simplices digest")
CanonicalForm.__doc__ = """\
permutation : dict vertex id -> canonical index
simplices : tuple of sorted tuples, the relabeled maximal simplices, sorted
digest : lowercase hex sha256 of the encoding
"""


class _Structure:
    """Vertex/maximal-simplex incidence in a compact indexed form."""

    def __init__(self, K):
        self.vertices = K.vertices
        index = {v: i for i, v in enumerate(self.vertices)}
        self.size = len(self.vertices)
        self.maximal = [tuple(index[v] for v in s) for s in K.maximal]
        self.through = [[] for _ in range(self.size)]
        for j, s in enumerate(self.maximal):
            for v in s:
                self.through[v].append(j)
        # degree vector: number of k-faces containing each vertex
        counts = [dict() for _ in range(self.size)]
        faces = set()
        for s in self.maximal:
            for k in range(1, len(s) + 1):
                faces.update(combinations(s, k))
        for f in faces:
            for v in f:
                counts[v][len(f)] = counts[v].get(len(f), 0) + 1
        self.initial = [tuple(sorted(c.items())) for c in counts]


def _rank(signatures):
    """Replace signatures by their rank among the distinct values."""
    order = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
    return [order[sig] for sig in signatures]


def _refine(st, colours):
    """Refine an ordered colouring until the number of cells is stable."""
    cells = len(set(colours))
    while True:
        sigs = []
        for v in range(st.size):
            around = sorted(
                (len(st.maximal[j]),
                 tuple(sorted(colours[u] for u in st.maximal[j] if u != v)))
                for j in st.through[v])
            sigs.append((colours[v], tuple(around)))
        colours = _rank(sigs)
        new_cells = len(set(colours))
        if new_cells == cells:
            return colours
        cells = new_cells


def _target_cell(colours):
    """Members of the first smallest non-singleton cell, or None."""
    members = {}
    for v, c in enumerate(colours):
        members.setdefault(c, []).append(v)
    best = None
    for c in sorted(members):
        m = members[c]
        if len(m) > 1 and (best is None or len(m) < len(best)):
            best = m
    return best


def _individualize(colours, v):
    sigs = [(c, 0 if u == v else 1) for u, c in enumerate(colours)]
    return _rank(sigs)


def _encode(st, colours):
    return tuple(sorted(
        tuple(sorted(colours[v] for v in s)) for s in st.maximal))


def _search(st):
    best = [None, None]          # encoding, leaf colouring
    automorphisms = []

    def visit(colours, path):
        cell = _target_cell(colours)
        if cell is None:
            enc = _encode(st, colours)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, colours
            elif enc == best[0]:
                # leaf relabelings with equal images differ by an automorphism
                inv = {c: u for u, c in enumerate(best[1])}
                automorphisms.append([inv[c] for c in colours])
            return
        explored = set()
        for v in cell:
            fixing = [g for g in automorphisms
                      if all(g[p] == p for p in path)]
            if explored and _orbit(v, fixing) & explored:
                continue
            visit(_refine(st, _individualize(colours, v)), path + [v])
            explored.add(v)

    visit(_refine(st, _rank(st.initial)), [])
    return best


def _orbit(v, generators):
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in generators:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def canonicalize(K):
    """Relabeling-invariant :class:`CanonicalForm` of K."""
    st = _Structure(K)
    if st.size == 0:
        enc = ()
        colours = []
    else:
        enc, colours = _search(st)
    perm = {st.vertices[i]: c for i, c in enumerate(colours)}
    text = "%d|%s" % (st.size, ";".join(",".join(map(str, s)) for s in enc))
    digest = hashlib.sha256(text.encode()).hexdigest()
    return CanonicalForm(perm, enc, digest)


def is_isomorphic(K, L):
    if len(K.vertices) != len(L.vertices) or len(K.maximal) != len(L.maximal):
        return False
    return canonicalize(K).digest == canonicalize(L).digest
