"""Cyclic configuration words around 3-vertices, 3-faces and 5-faces.

A word records, in cyclic order, the degree classes of the faces seen from a
central object.  For a face of degree d the word has 2d slots alternating
corner slots (even index: the vertex of the face, either ``v3`` for a
3-vertex or the class of the face vertex-adjacent there at a 4-vertex) and
edge slots (odd index: the class of the face edge-adjacent across that
boundary edge).  For a 3-vertex the word is the triple of incident face
classes.  Words are stored canonically: minimal under the symmetry group
that preserves the corner/edge structure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

# Slot codes.  The numeric order fixes canonical forms and enumeration order.
F3, F4, F5, F6P, V3 = range(5)
SLOT_NAMES = ("3", "4", "5", "6p", "v3")
SLOT_CODES = {name: code for code, name in enumerate(SLOT_NAMES)}

FACE_CLASSES = (F3, F4, F5, F6P)          # legal at edge slots and in 3-vertex words
CORNER_CLASSES = (F3, F4, F5, F6P, V3)    # legal at corner slots of face words

VERTEX3, FACE3, FACE5 = "V3", "F3", "F5"
KINDS = (VERTEX3, FACE3, FACE5)
WORD_LEN = {VERTEX3: 3, FACE3: 6, FACE5: 10}


class IllegalSlot(ValueError):
    """A slot value is not legal at its position (e.g. v3 at an edge slot)."""


class WrongLength(ValueError):
    """Slot sequence length does not match the word kind."""


class KindMismatch(ValueError):
    """Word and pattern kinds differ."""


def _images_triple(t):
    a, b, c = t
    return ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a))


def _images_face(t):
    # Rotations by whole vertices (two slots) keep corners on even indices.
    # Reflections new[i] = old[(k - i) mod n] with k even do the same: k = 0
    # reflects through a vertex, k = 2 through an edge midpoint.
    n = len(t)
    out = []
    for k in range(0, n, 2):
        out.append(t[k:] + t[:k])
        out.append(tuple(t[(k - i) % n] for i in range(n)))
    return out


def symmetry_images(kind, slots):
    """All images of a slot tuple under the word's symmetry group."""
    if kind == VERTEX3:
        return _images_triple(tuple(slots))
    return tuple(_images_face(tuple(slots)))


def legal_at(kind, index, value):
    if kind == VERTEX3:
        return value in FACE_CLASSES
    if index % 2 == 0:
        return value in CORNER_CLASSES
    return value in FACE_CLASSES


def _check_slots(kind, slots):
    if kind not in KINDS:
        raise KindMismatch(f"unknown word kind {kind!r}")
    if len(slots) != WORD_LEN[kind]:
        raise WrongLength(f"{kind} word needs {WORD_LEN[kind]} slots, got {len(slots)}")
    for i, v in enumerate(slots):
        if not legal_at(kind, i, v):
            raise IllegalSlot(f"slot {SLOT_NAMES[v]} not allowed at position {i} of a {kind} word")


def canon_slots(kind, slots):
    return min(symmetry_images(kind, slots))


@dataclass(frozen=True, order=True)
class Word:
    """A canonical configuration word."""

    kind: str
    slots: tuple

    @property
    def text(self):
        return f"{self.kind}:[{'/'.join(SLOT_NAMES[v] for v in self.slots)}]"

    def __str__(self):
        return self.text


def canonicalize(kind, slots):
    """Validate a raw slot sequence and return its canonical :class:`Word`."""
    slots = tuple(SLOT_CODES[s] if isinstance(s, str) else s for s in slots)
    _check_slots(kind, slots)
    return Word(kind, canon_slots(kind, slots))


def word_from_text(text):
    kind, _, body = text.partition(":")
    body = body.strip()
    if not body.startswith("[") or not body.endswith("]"):
        raise ValueError(f"malformed word text {text!r}")
    names = body[1:-1].split("/")
    try:
        slots = tuple(SLOT_CODES[n.strip()] for n in names)
    except KeyError as exc:
        raise ValueError(f"unknown slot token in {text!r}") from exc
    return canonicalize(kind.strip(), slots)


# ---------------------------------------------------------------------------
# Patterns


def _full_atom(kind, index):
    return frozenset(CORNER_CLASSES if kind != VERTEX3 and index % 2 == 0 else FACE_CLASSES)


@dataclass(frozen=True)
class Pattern:
    """Cyclic slot-subset pattern; a word matches if some symmetry image of
    the word sits inside the atoms slot by slot."""

    kind: str
    atoms: tuple
    id: str
    provenance: str = ""
    # all symmetry images of the atom tuple, precomputed for matching
    _images: tuple = field(default=(), repr=False, compare=False)

    def images(self):
        if self._images:
            return self._images
        ims = tuple(set(symmetry_images(self.kind, self.atoms)))
        object.__setattr__(self, "_images", ims)
        return ims

    @property
    def text(self):
        parts = []
        for i, atom in enumerate(self.atoms):
            if atom == _full_atom(self.kind, i):
                parts.append("*")
            else:
                parts.append("{" + ",".join(SLOT_NAMES[v] for v in sorted(atom)) + "}")
        return f"{self.kind}:[{'/'.join(parts)}]"


def make_pattern(kind, atoms, id, provenance=""):
    """Build a pattern; ``None`` means wildcard, an int a singleton set."""
    if len(atoms) != WORD_LEN[kind]:
        raise WrongLength(f"{kind} pattern needs {WORD_LEN[kind]} atoms")
    norm = []
    for i, a in enumerate(atoms):
        if a is None:
            norm.append(_full_atom(kind, i))
            continue
        if isinstance(a, int):
            a = (a,)
        a = frozenset(a)
        if not a or not a <= _full_atom(kind, i):
            raise IllegalSlot(f"atom {a} not legal at position {i} of a {kind} pattern")
        norm.append(a)
    return Pattern(kind, tuple(norm), id, provenance)


def pattern_from_text(text, id="", provenance=""):
    kind, _, body = text.partition(":")
    kind = kind.strip()
    body = body.strip()[1:-1]
    atoms = []
    for tok in body.split("/"):
        tok = tok.strip()
        if tok == "*":
            atoms.append(None)
        elif tok.startswith("{") and tok.endswith("}"):
            atoms.append(tuple(SLOT_CODES[t.strip()] for t in tok[1:-1].split(",")))
        else:
            atoms.append(SLOT_CODES[tok])
    return make_pattern(kind, atoms, id, provenance)


def matches(word, pattern):
    """True iff some symmetry image of the word satisfies the pattern."""
    if word.kind != pattern.kind:
        raise KindMismatch(f"word kind {word.kind} vs pattern kind {pattern.kind}")
    for atoms in pattern.images():
        if all(s in atom for s, atom in zip(word.slots, atoms)):
            return True
    return False


def filter_forbidden(words, patterns):
    """Keep exactly the words matching no pattern (order preserved).

    Uses a vectorised matcher for large word lists; kind mismatches between a
    word and a pattern simply never match here (the sets are heterogeneous).
    """
    words = list(words)
    by_kind = {}
    for p in patterns:
        by_kind.setdefault(p.kind, []).append(p)
    if len(words) < 2000:
        out = []
        for w in words:
            if not any(matches(w, p) for p in by_kind.get(w.kind, ())):
                out.append(w)
        return out
    return _filter_vectorised(words, by_kind)


def _filter_vectorised(words, patterns_by_kind):
    import numpy as np

    keep = [True] * len(words)
    idx_by_kind = {}
    for i, w in enumerate(words):
        idx_by_kind.setdefault(w.kind, []).append(i)
    for kind, idxs in idx_by_kind.items():
        pats = patterns_by_kind.get(kind, ())
        if not pats:
            continue
        arr = np.array([words[i].slots for i in idxs], dtype=np.int8)
        matched = np.zeros(len(idxs), dtype=bool)
        seen = set()
        for p in pats:
            for atoms in p.images():
                if atoms in seen:
                    continue
                seen.add(atoms)
                ok = ~matched
                for pos, atom in enumerate(atoms):
                    if len(atom) == len(_full_atom(kind, pos)):
                        continue
                    table = np.zeros(5, dtype=bool)
                    for v in atom:
                        table[v] = True
                    ok &= table[arr[:, pos]]
                    if not ok.any():
                        break
                matched |= ok
        for j, i in enumerate(idxs):
            if matched[j]:
                keep[i] = False
    return [w for w, k in zip(words, keep) if k]


# ---------------------------------------------------------------------------
# Enumeration


def _domains(kind):
    n = WORD_LEN[kind]
    if kind == VERTEX3:
        return [FACE_CLASSES] * n
    return [CORNER_CLASSES if i % 2 == 0 else FACE_CLASSES for i in range(n)]


def raw_count(kind):
    out = 1
    for d in _domains(kind):
        out *= len(d)
    return out


def enumerate_words(kind, first=None):
    """Yield every canonical word of a kind exactly once, in lexicographic
    order of the canonical slots.

    ``first`` restricts the stream to canonical words whose first slot has
    that value; concatenating the streams for all legal first values in
    order reproduces the full stream, which is the partitioned-generation
    hook.
    """
    domains = _domains(kind)
    if first is not None:
        if not legal_at(kind, 0, first):
            raise IllegalSlot(f"{SLOT_NAMES[first]} cannot start a {kind} word")
        domains = [(first,)] + domains[1:]
    if kind == VERTEX3:
        for t in itertools.product(*domains):
            if min(_images_triple(t)) == t:
                yield Word(kind, t)
        return
    n = WORD_LEN[kind]
    corner_positions = range(2, n, 2)
    for t in itertools.product(*domains):
        c0 = t[0]
        ok = True
        for i in corner_positions:
            if t[i] < c0:
                ok = False
                break
        if ok and min(_images_face(t)) == t:
            yield Word(kind, t)


def burnside_count(kind):
    """Orbit count by Burnside's lemma over the same symmetry group,
    an independent cross-check for the enumeration."""
    if kind == VERTEX3:
        k = len(FACE_CLASSES)
        # S3 on three positions: identity, three transpositions, two 3-cycles
        return (k**3 + 3 * k**2 + 2 * k) // 6

    n = WORD_LEN[kind]
    d = n // 2
    kc, ke = len(CORNER_CLASSES), len(FACE_CLASSES)
    total = 0
    # rotations by j vertices: cycles of length d / gcd(d, j) on corners and edges
    import math

    for j in range(d):
        g = math.gcd(d, j)
        total += kc**g * ke**g
    # reflections: for odd d each fixes one corner and one edge
    total += d * (kc ** ((d + 1) // 2) * ke ** ((d + 1) // 2) if d % 2 == 1 else 0)
    if d % 2 == 0:
        # d/2 reflections through two corners, d/2 through two edges
        total += (d // 2) * (kc ** (d // 2 + 1) * ke ** (d // 2))
        total += (d // 2) * (kc ** (d // 2) * ke ** (d // 2 + 1))
    return total // (2 * d)
