"""List-coloring reduction heuristic and its exact brute-force oracle.

The heuristic proves l-choosability by peeling happy vertices and by the
inclusion-matrix argument: M(u,v) = 1 certifies that any list assignment
with L(v) not contained in L(u) is colorable, so a pair with M(u,v) = 1 and
ell(u) < ell(v) settles the instance.  A True answer is a proof; False is
inconclusive.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


class TooLarge(ValueError):
    """Oracle guard: exhaustive search is only meant for desk-size inputs."""


class UnknownVertex(KeyError):
    pass


class PairAdjacent(ValueError):
    """An identified pair is adjacent; the distance assertion is unusable."""


class ListSizeGraph:
    """A simple graph together with guaranteed list lengths."""

    def __init__(self, edges=(), ell=None, vertices=()):
        ell = dict(ell or {})
        adj = {v: set() for v in ell}
        for v in vertices:
            adj.setdefault(v, set())
        for a, b in edges:
            if a == b:
                raise ValueError("loops are not allowed")
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        self.verts = tuple(sorted(adj))
        self.adj = {v: frozenset(adj[v]) for v in self.verts}
        for v in self.verts:
            ell.setdefault(v, 0)
        self.ell = {v: int(ell[v]) for v in self.verts}

    def edges(self):
        return [(a, b) for a in self.verts for b in self.adj[a] if a < b]

    def minus(self, drop, ell_override=None):
        drop = set(drop if isinstance(drop, (set, frozenset, list, tuple)) else [drop])
        ell = {v: (ell_override or self.ell)[v] for v in self.verts if v not in drop}
        edges = [(a, b) for a, b in self.edges() if a not in drop and b not in drop]
        return ListSizeGraph(edges, ell, vertices=ell.keys())

    def with_ell(self, ell):
        return ListSizeGraph(self.edges(), ell, vertices=self.verts)

    def to_text(self):
        lines = [f"v {v} {self.ell[v]}" for v in self.verts]
        lines += [f"e {a} {b}" for a, b in self.edges()]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text):
        ell, edges = {}, []
        for line in text.splitlines():
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if parts[0] == "v":
                ell[parts[1]] = int(parts[2])
            elif parts[0] == "e":
                edges.append((parts[1], parts[2]))
        return ListSizeGraph(edges, ell)

    def __repr__(self):
        return f"ListSizeGraph({len(self.verts)} vertices, {len(self.edges())} edges)"


def is_happy(H, ell, v):
    if v not in H.adj:
        raise UnknownVertex(v)
    return ell[v] > len(H.adj[v])


def is_happy_graph(H):
    """True iff greedy deletion of happy vertices empties the graph.

    Greedy is confluent here: removing a happy vertex lowers only degrees,
    so happy vertices stay happy."""
    ell = H.ell
    alive = set(H.verts)
    deg = {v: len(H.adj[v]) for v in alive}
    changed = True
    while alive and changed:
        changed = False
        for v in sorted(alive):
            if ell[v] > deg[v]:
                alive.discard(v)
                for u in H.adj[v]:
                    if u in alive:
                        deg[u] -= 1
                changed = True
    return not alive


# ---------------------------------------------------------------------------
# Heuristic with memoization up to isomorphism on small graphs

_memo = {}


def clear_memo():
    _memo.clear()


def _canonical_key(H):
    n = len(H.verts)
    if n == 0:
        return ("empty",)
    if n > 10:
        return ("exact", H.verts, tuple(sorted(H.edges())),
                tuple(H.ell[v] for v in H.verts))
    verts = H.verts
    color = {v: (H.ell[v], len(H.adj[v])) for v in verts}
    for _ in range(n):
        refined = {v: (color[v], tuple(sorted(color[u] for u in H.adj[v]))) for v in verts}
        names = {c: i for i, c in enumerate(sorted(set(refined.values())))}
        new = {v: names[refined[v]] for v in verts}
        if len(set(new.values())) == len(set(color.values())):
            color = new
            break
        color = new
    groups = {}
    for v in verts:
        groups.setdefault(color[v], []).append(v)
    ordered_groups = [groups[c] for c in sorted(groups)]
    total = 1
    for g in ordered_groups:
        for i in range(2, len(g) + 1):
            total *= i
        if total > 5000:
            return ("exact", H.verts, tuple(sorted(H.edges())),
                    tuple(H.ell[v] for v in H.verts))
    best = None
    for perm_parts in itertools.product(*[itertools.permutations(g) for g in ordered_groups]):
        order = [v for part in perm_parts for v in part]
        pos = {v: i for i, v in enumerate(order)}
        adj_bits = tuple(sum(1 << pos[u] for u in H.adj[v]) for v in order)
        key = (adj_bits, tuple(H.ell[v] for v in order))
        if best is None or key < best:
            best = key
    return ("iso", n, best)


def algorithm_a(H):
    """Sound one-sided choosability test.  True implies H is ell-choosable."""
    return _algorithm_a_inner(H)


def _algorithm_a_inner(H):
    # peeling all happy vertices at once is sound and confluent, and keeps
    # the recursion shallow
    while True:
        if not H.verts:
            return True
        if any(H.ell[v] <= 0 for v in H.verts):
            return False
        happy = [v for v in H.verts if is_happy(H, H.ell, v)]
        if not happy:
            break
        H = H.minus(set(happy))
    key = _canonical_key(H)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    result = _matrix_accepts(H)
    _memo[key] = result
    return result


def _update_ell(H, M, u, v):
    ellp = {}
    for w in H.verts:
        if w == v:
            continue
        drop = 1 if (w in H.adj[v] and not M[u, w]) else 0
        ellp[w] = H.ell[w] - drop
    ellp[v] = 0
    return ellp


def _matrix_accepts(H):
    """Run the inclusion-matrix fixed point, stopping as soon as a usable
    pair appears; entries only switch on, so an early usable pair survives
    to the fixed point and the answer is unchanged."""
    verts = H.verts
    M = {(u, v): u == v for u in verts for v in verts}
    changed = True
    while changed:
        changed = False
        for u in verts:
            for v in verts:
                if u == v or M[u, v]:
                    continue
                if _algorithm_a_inner(H.minus(v, ell_override=_update_ell(H, M, u, v))):
                    M[u, v] = True
                    changed = True
                    if H.ell[u] < H.ell[v]:
                        return True
    return False


def algorithm_a_trace(H):
    """Like :func:`algorithm_a` but surfaces the failing core, which the
    pair-identification step interrogates row by row."""
    current = H
    while True:
        if not current.verts:
            return True, None
        bad = [v for v in current.verts if current.ell[v] <= 0]
        if bad:
            return False, {"core": current, "usable": False,
                           "reason": f"empty list at {bad[0]}"}
        happy = [v for v in current.verts if is_happy(current, current.ell, v)]
        if happy:
            current = current.minus(set(happy))
            continue
        if _matrix_accepts(current):
            return True, None
        return False, {"core": current, "usable": True,
                       "reason": "no usable inclusion"}


def compute_inclusion_row(H, u):
    """Fixed point of row u of the inclusion matrix.

    The update for an entry (u, v) reads only row u, so rows are
    independent fixed points and can be computed on demand."""
    verts = H.verts
    M = {(u, v): u == v for v in verts}
    changed = True
    while changed:
        changed = False
        for v in verts:
            if u == v or M[u, v]:
                continue
            if _algorithm_a_inner(H.minus(v, ell_override=_update_ell(H, M, u, v))):
                M[u, v] = True
                changed = True
    return {v: M[u, v] for v in verts}


def compute_inclusion_matrix(H):
    """Fixed point of the inclusion-matrix update.

    Starting from the identity, an entry (u,v) is switched on when coloring
    v with a color outside L(u) and shrinking only the lists of neighbours w
    with M(u,w) still off leaves a graph the heuristic accepts.  Passes
    repeat until one changes nothing; the result is the unique maximal
    fixed point since successful updates only ease later tests."""
    M = {}
    for u in H.verts:
        row = compute_inclusion_row(H, u)
        for v, val in row.items():
            M[u, v] = val
    return M


def reduce_with_identified_pair(H, pivot, pairs):
    """Pair-identification fallback for configurations the plain heuristic
    misses.

    When the heuristic fails only because every list near the pivot is
    trapped inside the pivot's list, a declared distant pair (b, c) with
    ell(b) + ell(c) > ell(pivot) shares a free color; coloring both alike
    costs their neighbours a single color, and the remainder must be happy.
    """
    ok, info = algorithm_a_trace(H)
    if ok:
        return True
    for b, c in pairs:
        if b in H.adj.get(c, frozenset()):
            raise PairAdjacent(f"{b} and {c} are adjacent")
    if not pairs or not info["usable"]:
        return False
    core = info["core"]
    if pivot not in core.adj:
        return False
    row = compute_inclusion_row(core, pivot)
    near = [v for v in H.adj[pivot] if v in core.adj]
    if not all(row[v] for v in near):
        return False
    for b, c in pairs:
        if pivot in (b, c):
            continue
        if H.ell[b] + H.ell[c] <= H.ell[pivot]:
            continue
        if b not in H.adj[pivot] or c not in H.adj[pivot]:
            continue
        if b not in core.adj or c not in core.adj:
            continue
        touched = (H.adj[b] | H.adj[c]) - {b, c}
        ellp = {v: H.ell[v] - (1 if v in touched else 0) for v in H.verts}
        rest = H.minus({b, c}, ell_override=ellp)
        if is_happy_graph(rest):
            return True
    return False


# ---------------------------------------------------------------------------
# Exact oracle


def _chi_table(n, adj_bits):
    ind = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        ind[mask] = ind[rest] and not (adj_bits[low] & rest)
    chi = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        best = n + 1
        sub = mask
        while sub:
            if sub & low and ind[sub]:
                cand = 1 + chi[mask ^ sub]
                if cand < best:
                    best = cand
            sub = (sub - 1) & mask
        chi[mask] = best
    return chi


def _family_colorable(members, cells, chi):
    """Can every member pick a color class (cell unit) properly?

    Vertices assigned to the same cell must be colorable with that cell's
    count of interchangeable colors: chi of the induced set at most count."""
    per_vertex = {v: [i for i, (mask, cnt) in enumerate(cells)
                      if cnt and (mask >> v) & 1] for v in members}
    if any(not opts for opts in per_vertex.values()):
        return False
    assigned = [0] * len(cells)
    order = sorted(members, key=lambda v: len(per_vertex[v]))

    def rec(k):
        if k == len(order):
            return True
        v = order[k]
        for i in per_vertex[v]:
            mask = assigned[i] | (1 << v)
            if chi[mask] <= cells[i][1]:
                assigned[i] = mask
                if rec(k + 1):
                    assigned[i] = mask & ~(1 << v)
                    return True
                assigned[i] = mask & ~(1 << v)
        return False

    return rec(0)


def oracle_choosable(H, max_vertices=8, max_total=24):
    """Exact l-choosability by exhausting list assignments up to renaming.

    A counterexample assignment needs at most sum(ell) distinct colors, and
    assignments are enumerated as multisets of color cells (which vertices
    share each color), which is precisely enumeration up to renaming.  Two
    sound prunes keep this tractable: a partial family that is already
    colorable only gains colors when completed, and a minimal bad
    assignment only uses cells in which every member has a neighbour (a
    color nobody adjacent shares colors its holder unconditionally, so such
    a vertex drops out, which the subset recursion covers).
    """
    n = len(H.verts)
    if n == 0:
        return True
    total = sum(H.ell.values())
    if n > max_vertices or total > max_total:
        raise TooLarge(f"oracle limited to {max_vertices} vertices / {max_total} total list size")
    if any(H.ell[v] <= 0 for v in H.verts):
        return False
    idx = {v: i for i, v in enumerate(H.verts)}
    adj_bits = [0] * n
    for v in H.verts:
        for u in H.adj[v]:
            adj_bits[idx[v]] |= 1 << idx[u]
    chi = _chi_table(n, adj_bits)
    ell = [H.ell[v] for v in H.verts]
    full = (1 << n) - 1

    def tight_cells(smask):
        # nonempty subsets of smask in which every member has a neighbour
        # inside the subset
        out = []
        sub = smask
        while sub:
            ok = True
            for v in range(n):
                if (sub >> v) & 1 and not (adj_bits[v] & sub):
                    ok = False
                    break
            if ok:
                out.append(sub)
            sub = (sub - 1) & smask
        out.sort(key=lambda m_: (-bin(m_).count("1"), -m_))
        return out

    memo = {}

    def choosable(smask):
        if smask == 0:
            return True
        hit = memo.get(smask)
        if hit is not None:
            return hit
        result = True
        for v in range(n):
            if (smask >> v) & 1 and not choosable(smask & ~(1 << v)):
                result = False
                break
        if result:
            result = not _tight_bad_family(smask)
        memo[smask] = result
        return result

    def _tight_bad_family(smask):
        cells = tight_cells(smask)
        members = [v for v in range(n) if (smask >> v) & 1]
        if any(not (adj_bits[v] & smask) for v in members):
            return False  # isolated vertex cannot be covered tightly
        last = {}
        for i, m in enumerate(cells):
            for v in members:
                if (m >> v) & 1:
                    last[v] = i
        if len(last) < len(members):
            return False
        chosen = []

        def colorable():
            return _family_colorable(members, chosen, chi)

        def rec(i, demands):
            if colorable():
                return False
            if all(demands[v] == 0 for v in members):
                return True  # complete non-colorable tight family
            if i == len(cells):
                return False
            for v in members:
                if demands[v] and last[v] < i:
                    return False
            mask = cells[i]
            cap = min(demands[v] for v in members if (mask >> v) & 1)
            for count in range(cap, 0, -1):
                nxt = dict(demands)
                for v in members:
                    if (mask >> v) & 1:
                        nxt[v] -= count
                chosen.append((mask, count))
                if rec(i + 1, nxt):
                    chosen.pop()
                    return True
                chosen.pop()
            return rec(i + 1, demands)

        return rec(0, {v: ell[v] for v in members})

    return choosable(full)
