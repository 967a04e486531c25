"""Face-level catalog of the library's reducible structures and an
embedding check against the forced patch of a configuration word.

A structure is a drawn subgraph: vertices (some pinned to degree 3), edges,
and the bounded regions of the drawing, which are faces of the host graph.
A word's patch likewise consists of forced faces (the central face, drawn
edge and corner faces) and forced degree-3 vertices.  The patch contains a
structure when the structure's faces, edges and degree pins all map into
the patch injectively; since a word with more specific slots only draws
more, containment at a pattern's weakest instantiation is sound for every
word matching the pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import F3, F4, F5, F6P, V3, FACE3, FACE5, VERTEX3

_FACE_SIZE = {F3: 3, F4: 4, F5: 5}


@dataclass
class Drawing:
    """A structure or a patch: edges, faces as vertex cycles, degree pins."""

    faces: list
    extra_edges: list = field(default_factory=list)
    deg3: frozenset = frozenset()

    def __post_init__(self):
        self.edges = set()
        for cyc in self.faces:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                self.edges.add(frozenset((a, b)))
        for a, b in self.extra_edges:
            self.edges.add(frozenset((a, b)))
        self.vertices = sorted({v for e in self.edges for v in e} | set(self.deg3))
        self.deg3 = frozenset(self.deg3)


def _tri(*v):
    return list(v)


# The drawn subgraphs of the shipped library, keyed by entry id.  Squares in
# the drawings (forced 3-vertices) appear in deg3; circles carry no pin.
STRUCTURES = {
    "config1": Drawing([["a", "b", "c"]], [("a", "d")], {"a"}),
    "config2a": Drawing([["a", "b", "c"], ["a", "d", "e"], ["a", "c", "f", "e"]]),
    "config2b": Drawing([["a", "b", "c"], ["a", "c", "h", "e"],
                         ["a", "e", "f", "d"], ["a", "d", "g", "b"]]),
    "config3": Drawing([["a", "b", "c", "d"], ["a", "d", "e", "f"]], [], {"a"}),
    "fig8-d1": Drawing([], [("u", "v")], {"u", "v"}),
    "fig8-d2": Drawing([["a", "b", "ab"], ["ab", "b", "bc"], ["b", "c", "bc"]]),
    "fig8-d3": Drawing([["a", "b", "ab"], ["ab", "b", "bc"], ["b", "bc", "cd", "c"]]),
    "fig8-d4": Drawing([["a", "b", "ab"], ["ab", "bc", "b"], ["bc", "cd", "c"]]),
    "fig8-d5": Drawing([["a", "b", "ab"], ["ab", "b", "bc"], ["bc", "cd", "d", "c"]],
                       [], {"c"}),
    "fig8-d6": Drawing([["b", "ab", "bc"], ["bc", "cd", "d", "c"]],
                       [("a", "b")], {"a", "c"}),
    "fig8-d7": Drawing([["a", "b", "ab"], ["ab", "b", "bc"], ["bc", "cd", "d", "c"],
                        ["cd", "de", "d"]]),
    "fig8-d8": Drawing([["a", "z", "az"], ["a", "az", "ab"], ["d", "e", "de"],
                        ["d", "de", "cd"]], [("ab", "cd")]),
    "fig8-d9": Drawing([["z", "az", "a"], ["z", "azp", "a"], ["b", "bc", "c"],
                        ["b", "bcp", "c"]], [("a", "b")]),
    "fig8-d10": Drawing([["b", "bc", "c"], ["b", "bcp", "c"]], [("a", "b")], {"a"}),
    "fig8-d11": Drawing([["a", "ab", "b"], ["a", "b", "bp", "ap"]], [], {"bp"}),
    "fig8-d12": Drawing([["a", "ab", "b"], ["a", "b", "bp", "ap"],
                         ["b", "c", "cp", "bp"]], [], {"c"}),
    "fig8-d13": Drawing([["z", "az", "a"], ["z", "azp", "a"], ["b", "bc", "c"],
                         ["c", "cd", "d"]], [("a", "b")]),
    "fig8-d14": Drawing([["z", "az", "a"], ["z", "azp", "a"], ["b", "bc", "c"]],
                        [("a", "b"), ("d", "c")], {"d"}),
    "fig8-d15": Drawing([["z", "az", "a"], ["z", "azp", "a"], ["b", "ab", "bc"]],
                        [("a", "b"), ("b", "c")], {"c"}),
    "fig8-d16": Drawing([["a", "ab", "b"], ["a", "abp", "b"], ["c", "d", "f", "e"],
                         ["c", "cd", "d"], ["e", "ef", "f"]], [("b", "c")]),
    "fig8-d17": Drawing([["c", "d", "f", "e"], ["c", "cd", "d"], ["e", "ef", "f"]],
                        [("b", "c")], {"b"}),
    "fig8-d18": Drawing([["az", "a", "ab"], ["az", "ab", "abp", "azp"],
                         ["a", "b", "bc", "ab"], ["b", "c", "bc"],
                         ["c", "bc", "cd", "d"], ["d", "e", "de", "cd"],
                         ["cd", "de", "dep", "cdp"]]),
    "fig8-d19": Drawing([["az", "a", "ab"], ["az", "ab", "abp", "azp"],
                         ["a", "b", "bc", "ab"], ["bc", "cd", "c"],
                         ["c", "e", "de", "cd"], ["cd", "de", "dep", "cdp"]]),
    "fig8-d20": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "ab"],
                         ["b", "c", "bc"], ["d", "e", "de"], ["e", "a", "ea"]]),
    "fig8-d21": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "ab"],
                         ["b", "c", "bc"], ["d", "e", "de"], ["a", "ap", "ep", "e"]]),
    "fig8-d22": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "ab"],
                         ["a", "e", "ea"]], [], {"d"}),
    "fig8-d23": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "ab"],
                         ["a", "e", "ea"], ["b", "ab", "bp", "bc"],
                         ["b", "bc", "cp", "c"]]),
    "fig8-d24": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "ab"],
                         ["b", "bc", "cp", "c"], ["d", "de", "e"]]),
    "fig8-d25": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "bp", "ap"],
                         ["a", "ap", "app"], ["b", "bc", "cp", "c"]], [], {"c"}),
    "fig8-d26": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "ap"],
                         ["a", "app", "ep", "e"], ["b", "bc", "cp", "c"]], [], {"c"}),
    "fig8-d27": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "ab"],
                         ["b", "c", "bc"], ["a", "ap", "ep", "e"],
                         ["e", "de", "ep"]]),
    "fig8-d28": Drawing([["a", "b", "c", "d", "e"], ["b", "bp", "cp", "c"],
                         ["a", "app", "ap"], ["a", "ap", "ep", "e"],
                         ["d", "e", "de"]], [], {"b"}),
    "c0": Drawing([["a", "e", "d", "c"]], [("a", "b")], {"b", "c"}),
    "c1": Drawing([["a", "b", "g"], ["a", "b", "e", "f"], ["a", "d", "c", "f"],
                   ["c", "d", "h"]]),
    "c2": Drawing([["b", "g", "e"], ["a", "b", "e", "f"], ["a", "f", "d"],
                   ["a", "d", "c", "h"], ["c", "h", "i"]]),
    "c3": Drawing([["a", "b", "e"], ["a", "b", "f", "g"], ["a", "g", "c", "d"],
                   ["c", "d", "j", "i"], ["d", "h", "j"]]),
    "c4": Drawing([["a", "j", "e", "c", "d"], ["a", "b", "j"], ["e", "j", "k", "m"],
                   ["e", "m", "l"], ["c", "f", "d"], ["a", "h", "g", "d"],
                   ["a", "b", "i", "h"]]),
    "c5": Drawing([["a", "b", "e", "i", "d"], ["b", "e", "f"], ["c", "i", "d"],
                   ["g", "h", "c", "i"]], [], {"a"}),
    "c6": Drawing([["a", "j", "i", "c", "d"], ["a", "b", "j"], ["e", "j", "i"],
                   ["c", "g", "h"], ["a", "f", "d"]]),
    "c7": Drawing([["a", "b", "c", "d", "e"], ["a", "b", "g", "f"], ["b", "i", "c"],
                   ["b", "g", "h", "i"], ["c", "i", "j", "k"], ["c", "k", "l", "d"]]),
}


# ---------------------------------------------------------------------------
# Forced patch of a word


def word_patch(word):
    """Forced faces, edges and degree pins of a word's neighbourhood."""
    s = word.slots
    faces = []
    deg3 = set()
    extra = []
    fresh = iter(f"x{i}" for i in range(1, 200))
    if word.kind == VERTEX3:
        hub = "v"
        deg3.add(hub)
        spokes = ["n0", "n1", "n2"]
        for sp in spokes:
            extra.append((hub, sp))
        for i in range(3):
            size = _FACE_SIZE.get(s[i])
            if size is None:
                continue
            inner = [next(fresh) for _ in range(size - 3)]
            faces.append([hub, spokes[i]] + inner + [spokes[(i + 1) % 3]])
        return Drawing(faces, extra, deg3)
    d = len(s) // 2
    ring = [f"r{i}" for i in range(d)]
    faces.append(list(ring))
    for i in range(d):
        if s[2 * i] == V3:
            deg3.add(ring[i])
    edge_outer = {}
    for i in range(d):
        size = _FACE_SIZE.get(s[2 * i + 1])
        if size is None:
            edge_outer[i] = None
            continue
        outer = [next(fresh) for _ in range(size - 2)]
        faces.append([ring[i], ring[(i + 1) % d]] + outer)
        edge_outer[i] = outer
    for i in range(d):
        cls = s[2 * i]
        prev, nxt = edge_outer[(i - 1) % d], edge_outer[i]
        if cls == V3:
            # the third edge of the forced 3-vertex always exists; the
            # flanking edge faces meet along it when drawn
            if prev is not None and nxt is not None:
                _identify(faces, nxt[-1], prev[0])
                extra.append((ring[i], prev[0]))
            elif prev is not None:
                extra.append((ring[i], prev[0]))
            elif nxt is not None:
                extra.append((ring[i], nxt[-1]))
            else:
                extra.append((ring[i], next(fresh)))
            continue
        size = _FACE_SIZE.get(cls)
        if size is None:
            continue
        va = prev[0] if prev is not None else next(fresh)
        vb = nxt[-1] if nxt is not None else next(fresh)
        inner = [next(fresh) for _ in range(size - 3)]
        faces.append([ring[i], va] + inner + [vb])
    return Drawing(faces, extra, deg3)


def _identify(faces, keep, drop):
    for cyc in faces:
        for j, v in enumerate(cyc):
            if v == drop:
                cyc[j] = keep


# ---------------------------------------------------------------------------
# Embedding search


def _face_alignments(scyc, pcyc):
    n = len(scyc)
    if len(pcyc) != n:
        return
    doubled = pcyc + pcyc
    for k in range(n):
        yield list(doubled[k:k + n])
    rev = pcyc[::-1]
    doubled = rev + rev
    for k in range(n):
        yield list(doubled[k:k + n])


def embeds(structure, patch):
    """Does every realization of the patch contain the structure?"""
    sfaces = sorted(structure.faces, key=len, reverse=True)
    pfaces = patch.faces
    pedges = patch.edges

    def extend(mapping, used, i):
        if i == len(sfaces):
            for e in structure.edges:
                a, b = tuple(e)
                if a not in mapping or b not in mapping:
                    return False
                if frozenset((mapping[a], mapping[b])) not in pedges:
                    return False
            for v in structure.deg3:
                if v not in mapping or mapping[v] not in patch.deg3:
                    return False
            return True
        scyc = sfaces[i]
        for pcyc in pfaces:
            for aligned in _face_alignments(scyc, pcyc):
                new = dict(mapping)
                new_used = set(used)
                ok = True
                for sv, pv in zip(scyc, aligned):
                    if sv in new:
                        if new[sv] != pv:
                            ok = False
                            break
                    elif pv in new_used:
                        ok = False
                        break
                    else:
                        new[sv] = pv
                        new_used.add(pv)
                if ok and extend(new, new_used, i + 1):
                    return True
        return False

    def free_vertices(mapping):
        # vertices only on extra edges or degree pins
        return [v for v in structure.vertices if v not in mapping]

    def finish(mapping, used):
        loose = [v for v in structure.vertices if v not in mapping]

        def place(j):
            if j == len(loose):
                for e in structure.edges:
                    a, b = tuple(e)
                    if frozenset((mapping[a], mapping[b])) not in pedges:
                        return False
                for v in structure.deg3:
                    if mapping[v] not in patch.deg3:
                        return False
                return True
            v = loose[j]
            for pv in patch.vertices:
                if pv in used:
                    continue
                mapping[v] = pv
                used.add(pv)
                if place(j + 1):
                    return True
                del mapping[v]
                used.discard(pv)
            return False

        return place(0)

    if not sfaces:
        return finish({}, set())

    def extend2(mapping, used, i):
        if i == len(sfaces):
            return finish(dict(mapping), set(used))
        scyc = sfaces[i]
        for pcyc in pfaces:
            for aligned in _face_alignments(scyc, pcyc):
                new = dict(mapping)
                new_used = set(used)
                ok = True
                for sv, pv in zip(scyc, aligned):
                    if sv in new:
                        if new[sv] != pv:
                            ok = False
                            break
                    elif pv in new_used:
                        ok = False
                        break
                    else:
                        new[sv] = pv
                        new_used.add(pv)
                if ok and extend2(new, new_used, i + 1):
                    return True
        return False

    return extend2({}, set(), 0)


def containing_structures(word, catalog=None):
    """Library structures forced by this word's patch."""
    patch = word_patch(word)
    out = []
    for name, s in (catalog or STRUCTURES).items():
        if embeds(s, patch):
            out.append(name)
    return out
