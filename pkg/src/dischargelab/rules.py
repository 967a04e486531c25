"""Discharging-rule templates on canonical keys, fixed values for 6+-faces,
and the per-edge transit accounting used to certify 6+-faces.

Three templates move charge from a face of class 5 or 6+:

* A: to an incident 3-vertex, parametrised by the two other faces at it;
* B: to a vertex-adjacent 3-face across a 4-vertex, parametrised by the two
  faces edge-adjacent to both;
* C: to an edge-adjacent 3-face across an edge with two 4-vertex endpoints,
  parametrised per endpoint by the face edge-adjacent to the source and the
  face vertex-adjacent to the source.

Keys are canonical under the mirror identities; the 6+ keys are fixed
constants, the 5 keys are the LP variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import (F3, F4, F5, F6P, V3, FACE3, FACE5, VERTEX3, FACE_CLASSES,
                    SLOT_NAMES, SLOT_CODES, Word)

OUTGOING, INCOMING = "out", "in"

THIRD = Fraction(1, 3)
SIXTH = Fraction(1, 6)
TWO_THIRDS = Fraction(2, 3)


class NotSixPlus(ValueError):
    """Fixed values exist only for keys with source class 6+."""


class MalformedContext(ValueError):
    pass


def key_a(d, l, r):
    if l > r:
        l, r = r, l
    return ("A", d, l, r)


def key_b(d, l, r):
    if l > r:
        l, r = r, l
    return ("B", d, l, r)


def key_c(d, l, lp, rp, r):
    return ("C", d) + min((l, lp, rp, r), (r, rp, lp, l))


def key_text(key):
    tag, d = key[0], SLOT_NAMES[key[1]]
    if tag == "C":
        l, lp, rp, r = (SLOT_NAMES[v] for v in key[2:])
        return f"C({d};{l},{lp}|{rp},{r})"
    l, r = (SLOT_NAMES[v] for v in key[2:])
    return f"{tag}({d};{l},{r})"


def key_from_text(text):
    tag, rest = text[0], text[2:-1]
    d_txt, _, params = rest.partition(";")
    d = SLOT_CODES[d_txt]
    if tag == "C":
        left, _, right = params.partition("|")
        l, lp = (SLOT_CODES[t] for t in left.split(","))
        rp, r = (SLOT_CODES[t] for t in right.split(","))
        return key_c(d, l, lp, rp, r)
    l, r = (SLOT_CODES[t] for t in params.split(","))
    return {"A": key_a, "B": key_b}[tag](d, l, r)


def all_variable_keys():
    """Every canonical key with source class 5: the LP variable universe."""
    keys = []
    for l in FACE_CLASSES:
        for r in FACE_CLASSES:
            keys.append(key_a(F5, l, r))
            keys.append(key_b(F5, l, r))
            for lp in FACE_CLASSES:
                for rp in FACE_CLASSES:
                    keys.append(key_c(F5, l, lp, rp, r))
    return sorted(set(keys))


@dataclass(frozen=True)
class RuleInstance:
    key: tuple
    direction: str
    source: int          # F5 or F6P, equal to key[1]
    multiplicity: int


def _aggregate(keys, direction):
    counts = {}
    for k in keys:
        counts[k] = counts.get(k, 0) + 1
    return tuple(RuleInstance(k, direction, k[1], m) for k, m in sorted(counts.items()))


def applicable_rules(word):
    """The multiset of rule instances applying around a canonical word.

    Face5 words emit outgoing instances; Face3 and Vertex3 words emit the
    incoming instances determined by the same templates read from the
    receiving side.
    """
    s = word.slots
    n = len(s)
    keys = []
    if word.kind == VERTEX3:
        for i in range(3):
            if s[i] in (F5, F6P):
                others = [s[j] for j in range(3) if j != i]
                keys.append(key_a(s[i], others[0], others[1]))
        return _aggregate(keys, INCOMING)
    if word.kind == FACE5:
        for i in range(0, n, 2):      # corner slots
            e_prev, e_next = s[(i - 1) % n], s[(i + 1) % n]
            if s[i] == V3:
                keys.append(key_a(F5, e_prev, e_next))
            elif s[i] == F3:
                keys.append(key_b(F5, e_prev, e_next))
        for i in range(1, n, 2):      # edge slots
            if s[i] == F3 and s[(i - 1) % n] != V3 and s[(i + 1) % n] != V3:
                keys.append(key_c(F5, s[(i - 2) % n], s[(i - 1) % n],
                            s[(i + 1) % n], s[(i + 2) % n]))
        return _aggregate(keys, OUTGOING)
    if word.kind == FACE3:
        for i in range(0, n, 2):
            if s[i] in (F5, F6P):
                keys.append(key_b(s[i], s[(i - 1) % n], s[(i + 1) % n]))
        for i in range(1, n, 2):
            if s[i] in (F5, F6P) and s[(i - 1) % n] != V3 and s[(i + 1) % n] != V3:
                keys.append(key_c(s[i], s[(i - 1) % n], s[(i - 2) % n],
                            s[(i + 2) % n], s[(i + 1) % n]))
        return _aggregate(keys, INCOMING)
    raise ValueError(f"unknown word kind {word.kind}")


def t_fixed_value(key):
    """Fixed charge for a 6+ key (the T substitution)."""
    if key[1] != F6P:
        raise NotSixPlus(f"{key_text(key)} is not a 6+ key")
    tag = key[0]
    if tag == "A":
        return TWO_THIRDS
    if tag == "B":
        l, r = key[2:]
        return THIRD if F4 in (l, r) else Fraction(0)
    l, lp, rp, r = key[2:]
    if lp == F3 or rp == F3:
        return TWO_THIRDS
    if (l, lp) == (F4, F4) or (rp, r) == (F4, F4):
        return TWO_THIRDS
    return THIRD


# ---------------------------------------------------------------------------
# Per-edge transit accounting for 6+-faces


@dataclass(frozen=True, order=True)
class LocalEdgeContext:
    """Local structure around one boundary edge uv of a 6+-face f.

    The fan at an endpoint lists the deg-2 faces strictly between f and the
    face f' across uv, starting on the f side.  Only the 4-minus classes in
    the fans matter for transit; 5 and 6+ entries are interchangeable.
    """

    deg_u: int
    deg_v: int
    fprime: int
    fan_u: tuple
    fan_v: tuple

    def __post_init__(self):
        if self.deg_u not in (3, 4) or self.deg_v not in (3, 4):
            raise MalformedContext("endpoint degrees must be 3 or 4")
        if self.fprime not in FACE_CLASSES:
            raise MalformedContext("f' must be a face class")
        for d, fan in ((self.deg_u, self.fan_u), (self.deg_v, self.fan_v)):
            if len(fan) != d - 2 or any(x not in FACE_CLASSES for x in fan):
                raise MalformedContext("fan length must be degree minus 2")

    @property
    def text(self):
        fu = ",".join(SLOT_NAMES[x] for x in self.fan_u)
        fv = ",".join(SLOT_NAMES[x] for x in self.fan_v)
        return f"E({self.deg_u},{self.deg_v};{SLOT_NAMES[self.fprime]};{fu};{fv})"

    def swapped(self):
        return LocalEdgeContext(self.deg_v, self.deg_u, self.fprime, self.fan_v, self.fan_u)


def context_from_text(text):
    body = text[2:-1]
    degs, fp, fu, fv = body.split(";")
    du, dv = (int(x) for x in degs.split(","))
    parse = lambda s: tuple(SLOT_CODES[t] for t in s.split(",")) if s else ()
    return LocalEdgeContext(du, dv, SLOT_CODES[fp], parse(fu), parse(fv))


def edge_transit(ctx):
    """Worst-case charge routed through uv by the restated rules.

    Shares triggered by rules applied across the neighbouring boundary edges
    depend also on their far endpoints, which the context does not fix; those
    are counted at their maximum, so membership in the overloaded set is
    conservative.
    """
    t = Fraction(0)
    if ctx.deg_u == 3:
        t += THIRD
    if ctx.deg_v == 3:
        t += THIRD
    if ctx.fprime == F3:
        t += THIRD
    sides = ((ctx.deg_u, ctx.fan_u, ctx.deg_v, ctx.fan_v),
             (ctx.deg_v, ctx.fan_v, ctx.deg_u, ctx.fan_u))
    for d, fan, d_other, fan_other in sides:
        if d != 4:
            continue
        g1, g2 = fan
        # side share spilling from a transfer to a 3-face across the other
        # f-edge at this endpoint, when this endpoint meets the T2/T3 test
        if g1 == F3 and (g2 == F3 or (ctx.fprime == F4 and g2 == F4)):
            t += THIRD
        # transfer to the vertex-adjacent 3-face at this endpoint
        if g2 == F3 and (ctx.fprime == F4 or g1 == F4):
            if ctx.fprime == F4:
                double = d_other == 4 and fan_other[1] == F3
                t += SIXTH if double else THIRD
            else:
                t += SIXTH
    return t


def restated_shares(key, left_qualifies=False, right_qualifies=False, double=False):
    """Per-edge shares of a single 6+ rule application in the restatement.

    Transfers to an edge-adjacent 3-face put a third on the common edge and
    split the rest between the flank edges whose endpoint meets the rule's
    test; transfers to an incident 3-vertex split evenly over its two
    boundary edges; transfers to a vertex-adjacent 3-face ride the common
    edge with the 4-face, or split in sixths when mirrored."""
    val = t_fixed_value(key)
    tag = key[0]
    if tag == "A":
        return (THIRD, THIRD)
    if tag == "C":
        if val == TWO_THIRDS:
            if left_qualifies and right_qualifies:
                return (THIRD, SIXTH, SIXTH)
            return (THIRD, THIRD)
        return (THIRD,)
    if val == 0:
        return ()
    return (SIXTH, SIXTH) if double else (THIRD,)


def c_key_qualifiers(key):
    """Which endpoints of a 2/3-valued edge transfer meet the T2/T3 test."""
    l, lp, rp, r = key[2:]
    return (lp == F3 or (l, lp) == (F4, F4),
            rp == F3 or (rp, r) == (F4, F4))


def _all_fans(deg):
    if deg == 3:
        return [(x,) for x in FACE_CLASSES]
    return [(x, y) for x in FACE_CLASSES for y in FACE_CLASSES]


def enumerate_overloaded_edges():
    """All contexts with transit above one third, one per uv-swap orbit."""
    out = []
    seen = set()
    for du in (3, 4):
        for dv in (3, 4):
            for fp in FACE_CLASSES:
                for fu in _all_fans(du):
                    for fv in _all_fans(dv):
                        key = min((du, fu, dv, fv), (dv, fv, du, fu))
                        if (key, fp) in seen:
                            continue
                        seen.add((key, fp))
                        ctx = LocalEdgeContext(key[0], key[2], fp, key[1], key[3])
                        if edge_transit(ctx) > THIRD:
                            out.append(ctx)
    return sorted(out)


# ---------------------------------------------------------------------------
# Absorption of overloaded contexts into reducible structures

# Structure tags carried by library entries; the names describe the local
# subgraph an overloaded context is guaranteed to contain.
ADJACENT_3V = "adjacent-3-vertices"
V3_ON_TRIANGLE = "3v-on-triangle"
TRI_TRI_TRI = "triangle-between-triangles"
TRI_TRI_QUAD = "triangle-beside-triangle-and-quad"
DOUBLE_PAIRS = "triangle-pairs-joined-by-edge"
V3_BY_PAIR = "3v-beside-triangle-pair"
V3_ON_QUAD_TRI = "3v-on-quad-with-triangle"
V3_QUAD_QUAD_TRI = "3v-quad-quad-triangle-chain"
PAIR_AND_SPLIT_QUAD = "triangle-pair-beside-split-quad"
V3_BY_SPLIT_QUAD = "3v-beside-split-quad"
TRI_QUAD_QUAD_TRI = "tri-quad-quad-tri-chain"
TRI_QUAD_QUAD_QUAD_TRI = "tri-quad-quad-quad-tri-chain"


def forced_structures(ctx):
    """Structure tags a realisation of this overloaded context must contain."""
    tags = []
    fp = ctx.fprime
    sides = ((ctx.deg_u, ctx.fan_u, ctx.deg_v, ctx.fan_v),
             (ctx.deg_v, ctx.fan_v, ctx.deg_u, ctx.fan_u))
    if ctx.deg_u == 3 and ctx.deg_v == 3:
        tags.append(ADJACENT_3V)
    for d, fan, d_other, fan_other in sides:
        if d == 3 and (fp == F3 or fan[0] == F3):
            tags.append(V3_ON_TRIANGLE)
    # known face adjacencies: f' - fan[-1] both sides, consecutive fan faces,
    # and for deg-4 endpoints g2 - f'
    if fp == F3:
        xu, xv = ctx.fan_u[-1], ctx.fan_v[-1]
        if xu == F3 and xv == F3:
            tags.append(TRI_TRI_TRI)
        elif {xu, xv} >= {F3, F4}:
            tags.append(TRI_TRI_QUAD)
    for d, fan, d_other, fan_other in sides:
        if d == 4 and fan[1] == F3:
            nb = {fan[0], fp}
            if fan[0] == F3 and fp == F3:
                tags.append(TRI_TRI_TRI)
            elif nb >= {F3, F4}:
                tags.append(TRI_TRI_QUAD)
    if ctx.deg_u == 4 and ctx.deg_v == 4 and ctx.fan_u == (F3, F3) and ctx.fan_v == (F3, F3):
        tags.append(DOUBLE_PAIRS)
    for d, fan, d_other, fan_other in sides:
        other4 = d_other == 4
        if d == 3 and other4 and fan_other == (F3, F3):
            tags.append(V3_BY_PAIR)
        if d == 3 and other4 and fp == F4 and fan_other[1] == F3:
            tags.append(V3_ON_QUAD_TRI)
        if d == 3 and other4 and fp == F4 and fan_other == (F3, F4):
            tags.append(V3_QUAD_QUAD_TRI)
        if d == 3 and other4 and fan_other == (F4, F3):
            tags.append(V3_BY_SPLIT_QUAD)
        if d == 4 and fan == (F3, F3) and other4 and fan_other == (F4, F3):
            tags.append(PAIR_AND_SPLIT_QUAD)
        if d == 4 and fp == F4 and fan == (F3, F4) and other4 and fan_other[1] == F3:
            tags.append(TRI_QUAD_QUAD_TRI)
    if (ctx.deg_u == 4 and ctx.deg_v == 4 and fp == F4
            and ctx.fan_u == (F3, F4) and ctx.fan_v == (F3, F4)):
        tags.append(TRI_QUAD_QUAD_QUAD_TRI)
    # deduplicate, keep order
    seen, out = set(), []
    for t in tags:
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def c6plus_absorption_check(absorber_tags, contexts=None):
    """Report, for every overloaded context, which library structure absorbs
    it.  ``absorber_tags`` maps a structure tag to the id of the library
    entry covering it; contexts with no covered tag are UNABSORBED.
    """
    if contexts is None:
        contexts = enumerate_overloaded_edges()
    report = []
    for ctx in contexts:
        hit = None
        for tag in forced_structures(ctx):
            if tag in absorber_tags:
                hit = (tag, absorber_tags[tag])
                break
        report.append((ctx, hit))
    return report
