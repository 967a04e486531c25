"""Plane fragments: drawings of local configurations with degree bounds and
colored flags, the source of list-coloring reduction problems.

A fragment is a patch of the host graph.  Vertices carry a degree bound (the
degree in the host graph, not just what is depicted) and a colored flag;
edges may be marked as added only in the reduced graph, in which case they
count neither for distances nor degrees.  Undepicted neighbours allowed by
the degree bounds are treated as colored, pairwise distinct worst cases when
deriving guaranteed list sizes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .choose import ListSizeGraph


class InvalidFragment(ValueError):
    pass


class NotClosed(ValueError):
    """Input to the Euler check is not a closed connected plane graph."""


@dataclass
class FragmentVertex:
    id: str
    bound: int             # degree in the host graph: 2, 3 or 4
    bound_text: str        # as written: 2, 3, 4 or le4 (resolved to 4)
    colored: bool
    removed: bool = False


@dataclass
class PlaneFragment:
    vertices: dict = field(default_factory=dict)
    edges: set = field(default_factory=set)          # frozensets, host-graph edges
    gprime_edges: set = field(default_factory=set)   # added only in the reduced graph
    rotations: dict = field(default_factory=dict)    # optional neighbour order
    distant: list = field(default_factory=list)      # (a, b, reason)
    near: list = field(default_factory=list)         # pessimistic distance-2 pairs
    name: str = ""

    def validate(self):
        for e in self.edges | self.gprime_edges:
            for v in e:
                if v not in self.vertices:
                    raise InvalidFragment(f"edge endpoint {v} is not declared")
        for v, vx in self.vertices.items():
            if self.depicted_degree(v) > vx.bound:
                raise InvalidFragment(f"{v} shows more edges than its bound {vx.bound}")
        for v, order in self.rotations.items():
            around = {u for u in order}
            expect = {next(iter(e - {v})) for e in self.edges if v in e}
            expect |= {next(iter(e - {v})) for e in self.gprime_edges if v in e}
            if around != expect:
                raise InvalidFragment(f"rotation at {v} does not list its neighbours")
        for a, b, _ in self.distant:
            if frozenset((a, b)) in self.edges:
                raise InvalidFragment(f"distant pair {a},{b} is an edge")
        return self

    def host_neighbors(self, v):
        return sorted(next(iter(e - {v})) for e in self.edges if v in e)

    def depicted_degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def uncolored(self):
        return [v for v, vx in sorted(self.vertices.items()) if not vx.colored]

    def to_text(self):
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        for v, vx in sorted(self.vertices.items()):
            state = "colored" if vx.colored else "open"
            extra = " removed" if vx.removed else ""
            lines.append(f"v {v} deg={vx.bound_text} {state}{extra}")
        for e in sorted(self.edges, key=sorted):
            a, b = sorted(e)
            lines.append(f"e {a} {b}")
        for e in sorted(self.gprime_edges, key=sorted):
            a, b = sorted(e)
            lines.append(f"e {a} {b} gprime-only")
        for v, order in sorted(self.rotations.items()):
            lines.append(f"rot {v}: {' '.join(order)}")
        for a, b, reason in self.distant:
            lines.append(f"distant {a} {b} reason={reason}")
        for a, b in self.near:
            lines.append(f"near {a} {b}")
        return "\n".join(lines) + "\n"


def fragment_from_text(text, name=""):
    frag = PlaneFragment(name=name)
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            if line.startswith("#") and not frag.name:
                frag.name = line[1:].strip()
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "v":
            vid = parts[1]
            opts = parts[2:]
            bound_text = "4"
            colored = False
            removed = False
            for o in opts:
                if o.startswith("deg="):
                    bound_text = o[4:]
                elif o == "colored":
                    colored = True
                elif o == "open":
                    colored = False
                elif o == "removed":
                    removed = True
                else:
                    raise InvalidFragment(f"unknown vertex option {o!r}")
            bound = 4 if bound_text == "le4" else int(bound_text)
            if bound not in (2, 3, 4):
                raise InvalidFragment(f"degree bound {bound_text} out of range")
            frag.vertices[vid] = FragmentVertex(vid, bound, bound_text, colored, removed)
        elif tag == "e":
            e = frozenset(parts[1:3])
            if len(e) != 2:
                raise InvalidFragment(f"bad edge line {line!r}")
            if len(parts) > 3 and parts[3] == "gprime-only":
                frag.gprime_edges.add(e)
            else:
                frag.edges.add(e)
        elif tag == "rot":
            vid = parts[1].rstrip(":")
            frag.rotations[vid] = parts[2:]
        elif tag == "distant":
            reason = ""
            for o in parts[3:]:
                if o.startswith("reason="):
                    reason = line.split("reason=", 1)[1]
            frag.distant.append((parts[1], parts[2], reason))
        elif tag == "near":
            frag.near.append((parts[1], parts[2]))
        else:
            raise InvalidFragment(f"unknown line {line!r}")
    return frag.validate()


# ---------------------------------------------------------------------------
# Reduction problems


def _distances_up_to(frag, source, limit=2):
    dist = {source: 0}
    frontier = [source]
    for d in range(1, limit + 1):
        nxt = []
        for v in frontier:
            for u in frag.host_neighbors(v):
                if u not in dist:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def square_graph(frag):
    """Graph on the uncolored vertices with edges between pairs within
    depicted distance 2, plus any declared pessimistic near pairs."""
    frag.validate()
    open_verts = frag.uncolored()
    edges = set()
    for v in open_verts:
        dist = _distances_up_to(frag, v)
        for u, d in dist.items():
            if u != v and u in frag.vertices and not frag.vertices[u].colored and 0 < d <= 2:
                edges.add(frozenset((v, u)))
    for a, b in frag.near:
        if not frag.vertices[a].colored and not frag.vertices[b].colored:
            edges.add(frozenset((a, b)))
    return ListSizeGraph([tuple(sorted(e)) for e in edges],
                         {v: 0 for v in open_verts}, vertices=open_verts)


def worst_case_blocked(frag, v, k):
    """Worst-case count of colored vertices within host distance 2 of v.

    Depicted colored vertices within distance 2 count once; every phantom
    neighbour allowed by a degree bound is colored and distinct: a phantom
    of v blocks itself plus three distance-2 vertices behind it, a phantom
    of a depicted neighbour blocks itself.
    """
    dist = _distances_up_to(frag, v)
    blocked = sum(1 for u, d in dist.items()
                  if 0 < d <= 2 and frag.vertices[u].colored)
    for u in frag.host_neighbors(v):
        blocked += frag.vertices[u].bound - frag.depicted_degree(u)
    own = frag.vertices[v].bound - frag.depicted_degree(v)
    blocked += own * 4
    return blocked


def derive_list_sizes(frag, k=12):
    """Guaranteed list sizes: k minus the worst-case blocked count."""
    frag.validate()
    if k < 1:
        raise InvalidFragment("at least one color is needed")
    ell = {}
    for v in frag.uncolored():
        val = k - worst_case_blocked(frag, v, k)
        if val < 0:
            warnings.warn(f"list size clamped to 0 at {v}")
            val = 0
        ell[v] = val
    return ell


@dataclass
class ReductionProblem:
    graph: ListSizeGraph
    fragment: PlaneFragment
    k: int
    pairs: list          # declared distant pairs usable for identification

    @property
    def ell(self):
        return self.graph.ell


def build_reduction_problem(frag, k=12):
    H = square_graph(frag)
    ell = derive_list_sizes(frag, k)
    return ReductionProblem(H.with_ell(ell), frag, k,
                            [(a, b) for a, b, _ in frag.distant])


# ---------------------------------------------------------------------------
# Euler identity on closed plane graphs


class PlaneGraph:
    """A closed plane graph: every vertex lists its incident edges in cyclic
    order, faces arise by tracing darts."""

    def __init__(self, rotations):
        self.rot = {v: list(ns) for v, ns in rotations.items()}
        self.edges = set()
        for v, ns in self.rot.items():
            for u in ns:
                if u not in self.rot or v not in self.rot[u]:
                    raise NotClosed(f"edge {v}-{u} not mirrored in the rotation system")
                self.edges.add(frozenset((v, u)))

    def faces(self):
        nxt = {}
        for v, ns in self.rot.items():
            for i, u in enumerate(ns):
                # dart (u -> v) continues along the successor of u around v
                nxt[(u, v)] = (v, ns[(i + 1) % len(ns)])
        seen = set()
        faces = []
        for dart in sorted(nxt):
            if dart in seen:
                continue
            face = []
            d = dart
            while d not in seen:
                seen.add(d)
                face.append(d)
                d = nxt[d]
            faces.append(face)
        return faces

    def connected(self):
        if not self.rot:
            return False
        start = next(iter(sorted(self.rot)))
        todo, found = [start], {start}
        while todo:
            v = todo.pop()
            for u in self.rot[v]:
                if u not in found:
                    found.add(u)
                    todo.append(u)
        return len(found) == len(self.rot)


def euler_check(graph):
    """Sum of deg(x) - 4 over all vertices and faces; -8 on every connected
    plane graph."""
    if isinstance(graph, dict):
        graph = PlaneGraph(graph)
    if not graph.connected():
        raise NotClosed("graph is not connected")
    total = Fraction(0)
    for v, ns in graph.rot.items():
        total += len(ns) - 4
    for face in graph.faces():
        total += len(face) - 4
    return total
