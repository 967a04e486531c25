import itertools
from fractions import Fraction

import pytest

from dischargelab import rules, words
from dischargelab.words import F3, F4, F5, F6P, V3, FACE3, FACE5, VERTEX3

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


def test_key_mirror_identities():
    assert rules.key_a(F5, F3, F4) == rules.key_a(F5, F4, F3)
    assert rules.key_b(F6P, F5, F3) == rules.key_b(F6P, F3, F5)
    assert rules.key_c(F5, F3, F4, F5, F6P) == rules.key_c(F5, F6P, F5, F4, F3)


def test_key_text_roundtrip():
    for key in rules.all_variable_keys():
        assert rules.key_from_text(rules.key_text(key)) == key
    assert rules.key_text(rules.key_a(F5, F3, F4)) == "A(5;3,4)"
    assert rules.key_text(rules.key_c(F5, F3, F4, F4, F5)) == "C(5;3,4|4,5)"


def test_variable_universe_size():
    keys = rules.all_variable_keys()
    assert len(keys) == 10 + 10 + 136
    assert all(k[1] == F5 for k in keys)


def test_t_fixed_values():
    assert rules.t_fixed_value(rules.key_a(F6P, F3, F5)) == TWO_THIRDS
    assert rules.t_fixed_value(rules.key_b(F6P, F4, F6P)) == THIRD
    assert rules.t_fixed_value(rules.key_b(F6P, F5, F6P)) == 0
    # edge transfers: 2/3 when a vertex-adjacent 3-face or a double 4-face
    # meets the test, else 1/3
    assert rules.t_fixed_value(rules.key_c(F6P, F5, F3, F5, F5)) == TWO_THIRDS
    assert rules.t_fixed_value(rules.key_c(F6P, F4, F4, F5, F5)) == TWO_THIRDS
    assert rules.t_fixed_value(rules.key_c(F6P, F5, F4, F4, F5)) == THIRD
    assert rules.t_fixed_value(rules.key_c(F6P, F6P, F6P, F6P, F6P)) == THIRD
    with pytest.raises(rules.NotSixPlus):
        rules.t_fixed_value(rules.key_a(F5, F3, F3))


def test_applicable_rules_examples():
    all_big = words.canonicalize(FACE5, (F6P,) * 10)
    assert rules.applicable_rules(all_big) == ()

    v555 = words.canonicalize(VERTEX3, (F5, F5, F5))
    (inst,) = rules.applicable_rules(v555)
    assert inst.key == rules.key_a(F5, F5, F5)
    assert inst.direction == rules.INCOMING
    assert inst.multiplicity == 3

    raw = [F6P, F4, V3, F4, F6P, F6P, F6P, F6P, F6P, F6P]
    w = words.canonicalize(FACE5, tuple(raw))
    (inst,) = rules.applicable_rules(w)
    assert inst.key == rules.key_a(F5, F4, F4)
    assert inst.direction == rules.OUTGOING
    assert inst.multiplicity == 1


def test_applicable_rules_mirror_invariant():
    raw = (F3, F4, V3, F3, F4, F5, F3, F6P, F4, F4)
    mirrored = tuple(raw[(2 - i) % 10] for i in range(10))
    a = rules.applicable_rules(words.canonicalize(FACE5, raw))
    b = rules.applicable_rules(words.canonicalize(FACE5, mirrored))
    assert a == b


def _face3_incoming(slots):
    return rules.applicable_rules(words.canonicalize(FACE3, slots))


def test_bilateral_consistency_edge_transfers():
    """The edge transfer computed from the giving 5-face's word matches the
    one computed from the receiving 3-face's word, over every local patch."""
    for e_prev, c_u, c_v, e_next in itertools.product(
            words.FACE_CLASSES, words.FACE_CLASSES, words.FACE_CLASSES,
            words.FACE_CLASSES):
        face5 = (F6P, e_prev, c_u, F3, c_v, e_next, F6P, F6P, F6P, F6P)
        give = [i.key for i in rules.applicable_rules(words.canonicalize(FACE5, face5))
                if i.key[0] == "C" and i.key[1] == F5]
        # the triangle sees: corners (edge-adjacent faces of the giver at u
        # and v), its edge to the giver, and its other two edges
        tri = (e_prev, F5, e_next, c_v, F6P, c_u)
        recv = [i.key for i in _face3_incoming(tri)
                if i.key[0] == "C" and i.key[1] == F5]
        expected = rules.key_c(F5, e_prev, c_u, c_v, e_next)
        assert expected in give and expected in recv


def test_bilateral_consistency_vertex_and_corner_transfers():
    for e_prev, e_next in itertools.product(words.FACE_CLASSES, repeat=2):
        face5 = (F6P, e_prev, V3, e_next, F6P, F6P, F6P, F6P, F6P, F6P)
        give = [i for i in rules.applicable_rules(words.canonicalize(FACE5, face5))
                if i.key[0] == "A"]
        vert = tuple(sorted((F5, e_prev, e_next)))
        recv = rules.applicable_rules(words.canonicalize(VERTEX3, vert))
        assert give[0].key in [i.key for i in recv if i.key[1] == F5]

        face5 = (F6P, e_prev, F3, e_next, F6P, F6P, F6P, F6P, F6P, F6P)
        give = [i for i in rules.applicable_rules(words.canonicalize(FACE5, face5))
                if i.key[0] == "B"]
        tri = (F5, e_prev, F6P, F6P, F6P, e_next)
        recv = [i for i in _face3_incoming(tri) if i.key[0] == "B"]
        assert give[0].key in [i.key for i in recv]


def test_restated_shares_conserve_rule_value():
    """Every Fig-style restatement splits a rule's charge exactly."""
    for l, r in itertools.product(words.FACE_CLASSES, repeat=2):
        key = rules.key_a(F6P, l, r)
        assert sum(rules.restated_shares(key)) == rules.t_fixed_value(key)
        key = rules.key_b(F6P, l, r)
        for double in (False, True):
            assert sum(rules.restated_shares(key, double=double)) == \
                rules.t_fixed_value(key)
    for l, lp, rp, r in itertools.product(words.FACE_CLASSES, repeat=4):
        key = rules.key_c(F6P, l, lp, rp, r)
        lq, rq = rules.c_key_qualifiers(key)
        if rules.t_fixed_value(key) == TWO_THIRDS:
            assert lq or rq
            assert sum(rules.restated_shares(key, lq, rq)) == TWO_THIRDS
        else:
            assert sum(rules.restated_shares(key)) == THIRD


def test_edge_transit_examples():
    plain_t1 = rules.LocalEdgeContext(3, 4, F5, (F6P,), (F6P, F6P))
    assert rules.edge_transit(plain_t1) == THIRD

    double_t5 = rules.LocalEdgeContext(4, 4, F4, (F6P, F3), (F6P, F3))
    assert rules.edge_transit(double_t5) == THIRD

    t1_plus_side_t5 = rules.LocalEdgeContext(3, 4, F5, (F6P,), (F4, F3))
    assert rules.edge_transit(t1_plus_side_t5) == THIRD + Fraction(1, 6)

    with pytest.raises(rules.MalformedContext):
        rules.LocalEdgeContext(3, 4, F5, (F6P, F6P), (F6P, F6P))


def test_context_text_roundtrip():
    ctx = rules.LocalEdgeContext(3, 4, F4, (F3,), (F4, F3))
    assert rules.context_from_text(ctx.text) == ctx


def test_overloaded_edges():
    ctxs = rules.enumerate_overloaded_edges()
    assert ctxs
    third = Fraction(1, 3)
    for ctx in ctxs:
        t = rules.edge_transit(ctx)
        assert t > third
        assert (t * 6).denominator == 1
    # deduplicated under endpoint swap
    texts = {c.text for c in ctxs}
    for c in ctxs:
        if c.swapped() != c:
            assert c.swapped().text not in texts
    # the double-T5 context is excluded
    assert rules.LocalEdgeContext(4, 4, F4, (F6P, F3), (F6P, F3)) not in ctxs


def test_transit_ignores_big_fan_classes():
    for ctx in rules.enumerate_overloaded_edges()[:50]:
        swapped_fans = []
        for fan in (ctx.fan_u, ctx.fan_v):
            swapped_fans.append(tuple(F6P if x == F5 else x for x in fan))
        alt = rules.LocalEdgeContext(ctx.deg_u, ctx.deg_v, ctx.fprime,
                                     swapped_fans[0], swapped_fans[1])
        assert rules.edge_transit(alt) == rules.edge_transit(ctx)


def test_absorption_with_and_without_library():
    report = rules.c6plus_absorption_check({})
    assert all(hit is None for _, hit in report)
    from dischargelab import paperset
    report = rules.c6plus_absorption_check(paperset.absorber_tags())
    assert all(hit is not None for _, hit in report)
