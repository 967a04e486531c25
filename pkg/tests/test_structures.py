from dischargelab import curate, paperset, structures, words
from dischargelab.words import F3, F4, F5, F6P, V3, FACE3, FACE5, VERTEX3


def test_basic_embeddings():
    w = words.canonicalize(VERTEX3, (F3, F5, F6P))
    assert "config1" in structures.containing_structures(w)

    w = words.canonicalize(VERTEX3, (F4, F4, F5))
    found = structures.containing_structures(w)
    assert "config3" in found and "config1" not in found

    all_big = words.canonicalize(FACE5, (F6P,) * 10)
    assert structures.containing_structures(all_big) == []


def test_adjacent_3v_embedding():
    raw = (V3, F6P, V3, F6P, F6P, F6P, F6P, F6P, F6P, F6P)
    w = words.canonicalize(FACE5, raw)
    assert "fig8-d1" in structures.containing_structures(w)
    # non-adjacent 3-vertices do not contain the edge
    raw = (V3, F6P, F6P, F6P, V3, F6P, F6P, F6P, F6P, F6P)
    w = words.canonicalize(FACE5, raw)
    assert "fig8-d1" not in structures.containing_structures(w)


def test_c7_embeds_in_triangle_word():
    w = words.canonicalize(FACE3, (F4, F4, F5, F4, F4, F5))
    assert "c7" in structures.containing_structures(w)


def test_every_library_pattern_is_sound():
    """Weakest instantiation of each shipped pattern embeds a structure of
    its own entry; drawing more faces only adds to the patch, so every
    matching word is covered."""
    for entry in paperset.full_entries():
        for pat in entry.patterns:
            slots = []
            for i, atom in enumerate(pat.atoms):
                slots.append(next(iter(atom)) if len(atom) == 1 else F6P)
            w = words.canonicalize(pat.kind, slots)
            names = structures.containing_structures(w)
            assert names, f"{pat.id}: weakest instantiation embeds nothing"
            assert any(sid in names for sid in entry.structure_ids), \
                f"{pat.id}: embeds {names}, not its own structure"


def test_no_wide_corner_wildcards_in_shipped_patterns():
    """Corner atoms never mix the 3-vertex marker with face classes; that
    would break the monotonicity argument behind pattern soundness."""
    for entry in paperset.full_entries():
        for pat in entry.patterns:
            if pat.kind == VERTEX3:
                continue
            for i in range(0, len(pat.atoms), 2):
                atom = pat.atoms[i]
                assert atom == frozenset((V3,)) or V3 not in atom or \
                    len(atom) == 5, f"{pat.id} corner {i}: {sorted(atom)}"


def test_generalize_produces_sound_pattern():
    w = words.canonicalize(VERTEX3, (F3, F5, F6P))
    out = curate.generalize(w)
    assert out is not None
    pat, names = out
    assert "config1" in names
    assert words.matches(w, pat)


def test_word_patch_shapes():
    w = words.word_from_text("F5:[3/6p/v3/3/4/4/v3/5/v3/6p]")
    patch = structures.word_patch(w)
    sizes = sorted(len(f) for f in patch.faces)
    # pentagon plus drawn corner and edge faces
    assert sizes.count(5) >= 2
    assert len(patch.deg3) == 3
