"""Canonical plane fragment of a configuration word's patch.

A word pins down the faces around its central object: the face itself, the
face behind every edge slot, the vertex-adjacent face at every 4-vertex
corner, and the adjacencies between consecutive members.  This module draws
exactly that patch, with fresh boundary vertices and worst-case degree
bounds, so tight configurations can be thrown at the reduction heuristic
directly.
"""

from __future__ import annotations

from .words import F3, F4, F5, F6P, V3, FACE3, FACE5, VERTEX3, Word
from .fragments import PlaneFragment, FragmentVertex, fragment_from_text

_FACE_SIZE = {F3: 3, F4: 4, F5: 5}


def _face_path(frag, cycle, counter):
    """Add a face as a cycle of vertices, creating the missing edges."""
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        frag.edges.add(frozenset((a, b)))


def word_fragment(word, name=""):
    """The depicted patch of a Face3/Face5 word (Vertex3 patches are a
    special case with three faces around one hub vertex).

    Faces of class 6+ are left undrawn: only their boundary vertices on the
    central face are depicted, which is the worst case for list counting.
    """
    frag = PlaneFragment(name=name or word.text)
    fresh = iter(f"x{i}" for i in range(1, 200))

    def vertex(vid, bound):
        if vid not in frag.vertices:
            frag.vertices[vid] = FragmentVertex(vid, bound, str(bound) if bound < 4 else "le4",
                                                colored=False)
        return vid

    if word.kind == VERTEX3:
        hub = vertex("v", 3)
        spokes = [vertex(f"n{i}", 4) for i in range(3)]
        for s in spokes:
            frag.edges.add(frozenset((hub, s)))
        for i in range(3):
            size = _FACE_SIZE.get(word.slots[i])
            a, b = spokes[i], spokes[(i + 1) % 3]
            if size is None:
                continue
            inner = [vertex(next(fresh), 4) for _ in range(size - 3)]
            _face_path(frag, [hub, a] + inner + [b], fresh)
        return frag.validate()

    d = len(word.slots) // 2
    ring = [vertex(f"r{i}", 3 if word.slots[2 * i] == V3 else 4) for i in range(d)]
    _face_path(frag, ring, fresh)
    edge_faces = {}
    for i in range(d):
        size = _FACE_SIZE.get(word.slots[2 * i + 1])
        a, b = ring[i], ring[(i + 1) % d]
        if size is None:
            edge_faces[i] = None
            continue
        outer = [vertex(next(fresh), 4) for _ in range(size - 2)]
        _face_path(frag, [a, b] + outer, fresh)
        # store in boundary order from b back to a
        edge_faces[i] = outer
    for i in range(d):
        # vertex-adjacent face at a 4-vertex corner: shares an edge with each
        # flanking edge face
        cls = word.slots[2 * i]
        if cls == V3:
            # flanking edge faces share the third edge of the 3-vertex
            prev, nxt = edge_faces[(i - 1) % d], edge_faces[i]
            w = None
            if prev is not None:
                w = prev[0]
            if nxt is not None:
                if w is None:
                    w = nxt[-1]
                elif w != nxt[-1]:
                    # identify the two boundary vertices: the third neighbour
                    _merge(frag, w, nxt[-1])
                    edge_faces[i] = nxt[:-1] + [w]
            if w is not None:
                frag.edges.add(frozenset((ring[i], w)))
            continue
        size = _FACE_SIZE.get(cls)
        prev, nxt = edge_faces[(i - 1) % d], edge_faces[i]
        va = prev[0] if prev is not None else None
        vb = nxt[-1] if nxt is not None else None
        if size is None:
            for w in (va, vb):
                if w is not None:
                    frag.edges.add(frozenset((ring[i], w)))
            continue
        if va is None:
            va = vertex(next(fresh), 4)
            frag.edges.add(frozenset((ring[i], va)))
        if vb is None:
            vb = vertex(next(fresh), 4)
            frag.edges.add(frozenset((ring[i], vb)))
        inner = [vertex(next(fresh), 4) for _ in range(size - 3)]
        _face_path(frag, [ring[i], va] + inner + [vb], fresh)
    return frag.validate()


def _merge(frag, keep, drop):
    for e in list(frag.edges):
        if drop in e:
            frag.edges.discard(e)
            other = next(iter(e - {drop}))
            if other != keep:
                frag.edges.add(frozenset((keep, other)))
    del frag.vertices[drop]
