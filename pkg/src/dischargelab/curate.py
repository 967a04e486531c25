"""Machine-assisted curation: turn tight configuration words into sound
slot patterns backed by library structures.

A pattern produced here is sound by construction: its weakest instantiation
(wildcards read as 6+, which draws nothing) already forces one of the
library structures into the patch, and drawing more only adds faces.
Corner slots are never relaxed across the 3-vertex marker, because a
3-vertex corner identifies boundary vertices of the flanking faces and
would break the monotonicity argument.
"""

from __future__ import annotations

from . import structures
from .words import (F3, F4, F5, F6P, V3, FACE_CLASSES, Word, canonicalize,
                    make_pattern, _full_atom)

NV = frozenset(FACE_CLASSES)


def _weakest(kind, atoms):
    slots = []
    for i, atom in enumerate(atoms):
        if len(atom) == 1:
            slots.append(next(iter(atom)))
        else:
            slots.append(F6P)
    return canonicalize(kind, slots)


def covering_structure(word, catalog=None):
    found = structures.containing_structures(word, catalog)
    return found[0] if found else None


def generalize(word, catalog=None):
    """Widen a coverable word into a maximal sound pattern, or None.

    Slots are relaxed one by one in index order: edges to full wildcards,
    face-valued corners to the any-face set.  Each relaxation is kept only
    if the weakest instantiation still forces a library structure.
    """
    catalog = catalog or structures.STRUCTURES
    atoms = [frozenset((v,)) for v in word.slots]
    kind = word.kind
    if covering_structure(word, catalog) is None:
        return None
    n = len(atoms)
    for i in range(n):
        if kind != "V3" and i % 2 == 0:
            if atoms[i] == frozenset((V3,)):
                continue
            candidate = NV
        else:
            candidate = frozenset(FACE_CLASSES)
        saved = atoms[i]
        atoms[i] = candidate
        if covering_structure(_weakest(kind, atoms), catalog) is None:
            atoms[i] = saved
    trial = _weakest(kind, atoms)
    names = structures.containing_structures(trial, catalog)
    pat = make_pattern(kind, [tuple(a) for a in atoms], id="", provenance="")
    return pat, names


def pattern_key(pat):
    """Canonical form for deduplication: minimal atom tuple over symmetry."""
    from .words import symmetry_images
    images = symmetry_images(pat.kind, pat.atoms)
    best = min(tuple(tuple(sorted(a)) for a in img) for img in images)
    return (pat.kind, best)


def pattern_to_line(pat, names):
    return f"{pat.text}\t{','.join(names)}"


def pattern_from_line(line):
    from .words import pattern_from_text
    text, _, names = line.strip().partition("\t")
    pat = pattern_from_text(text)
    return pat, names.split(",") if names else []
