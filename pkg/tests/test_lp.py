import inspect
from fractions import Fraction

import pytest

from dischargelab import lp, rules, words
from dischargelab.words import F3, F4, F5, F6P, V3, FACE3, FACE5, VERTEX3


def w(kind, slots):
    return words.canonicalize(kind, slots)


def test_empty_model_binds_at_four():
    model = lp.build_model([])
    alpha, cert, tight = lp.solve_exact(model)
    assert alpha == 4
    assert tight == ["face4", "vertex4"]
    assert lp.verify(model, cert)


def test_vertex_rows():
    # no incoming instances at all: alpha is pinned by the bare row
    model = lp.build_model([w(VERTEX3, (F3, F3, F3))])
    alpha, cert, tight = lp.solve_exact(model)
    assert alpha == 3
    assert "V3:[3/3/3]" in tight

    # three big faces fold three fixed 2/3 contributions into the rhs
    coeffs, rhs, prov = lp.constraint_for_word(w(VERTEX3, (F6P,) * 3))
    assert coeffs == () and rhs == 5

    coeffs, rhs, _ = lp.constraint_for_word(w(FACE5, (F6P,) * 10))
    assert coeffs == () and rhs == 5


def test_incoming_signs_and_outgoing_signs():
    coeffs, rhs, _ = lp.constraint_for_word(w(VERTEX3, (F5, F5, F5)))
    assert rhs == 3
    ((idx, c),) = coeffs
    assert lp.VAR_KEYS[idx] == rules.key_a(F5, F5, F5) and c == -3

    raw = (V3, F4, V3, F4, F4, F4, F4, F4, F4, F4)
    coeffs, rhs, _ = lp.constraint_for_word(w(FACE5, raw))
    assert rhs == 5
    assert all(c > 0 for _, c in coeffs)


def test_solver_deterministic():
    model = lp.build_model([w(VERTEX3, (F3, F3, F3)), w(VERTEX3, (F5, F5, F5))])
    a1 = lp.solve_exact(model)
    a2 = lp.solve_exact(model)
    assert a1[0] == a2[0]
    assert a1[1].to_text() == a2[1].to_text()
    assert a1[2] == a2[2]


def test_monotone_under_filtering(full_words):
    pool = full_words["V3"] + full_words["F3"][:300]
    big = lp.build_model(pool)
    small = lp.build_model(pool[5:])
    assert lp.solve_exact(small)[0] >= lp.solve_exact(big)[0]


def test_certificate_roundtrip_bit_exact():
    model = lp.build_model([w(VERTEX3, (F4, F5, F5))])
    _, cert, _ = lp.solve_exact(model)
    text = cert.to_text()
    again = lp.Certificate.from_text(text)
    assert again.to_text() == text
    assert lp.verify(model, again)


def test_model_roundtrip():
    model = lp.build_model([w(VERTEX3, (F4, F5, F5)), w(FACE5, (F6P,) * 10)])
    again = lp.LpModel.from_text(model.to_text())
    assert again.to_text() == model.to_text()


def test_verify_is_exact_and_parameterless():
    model = lp.build_model([w(VERTEX3, (F3, F3, F3))])
    cert = lp.Certificate(Fraction(4), {k: Fraction(0) for k in lp.VAR_KEYS})
    assert not lp.verify(model, cert)
    cert = lp.Certificate(Fraction(3), {k: Fraction(0) for k in lp.VAR_KEYS})
    assert lp.verify(model, cert)
    assert set(inspect.signature(lp.verify).parameters) == {"model", "cert"}


def test_missing_variable():
    model = lp.build_model([])
    with pytest.raises(lp.MissingVariable):
        lp.verify(model, lp.Certificate(Fraction(4), {}))


def test_perturbation_flips_verify():
    model = lp.build_model([w(VERTEX3, (F5, F5, F5))])
    alpha, cert, tight = lp.solve_exact(model)
    key = rules.key_a(F5, F5, F5)
    for prov in tight:
        if prov.startswith("V3"):
            bumped = dict(cert.omega)
            bumped[key] = bumped[key] - Fraction(1, 10**6)
            assert not lp.verify(model, lp.Certificate(cert.alpha, bumped))
            break
    else:
        pytest.fail("no tight vertex row")


def test_snap_and_repair():
    model = lp.build_model([w(VERTEX3, (F5, F5, F5))])
    candidate = lp.solve_fast(model)
    if candidate is None:
        pytest.skip("float solver unavailable")
    cert = lp.snap_candidate(candidate)
    assert lp.verify(model, cert)
    # denominators snap to small rationals
    assert all(v.denominator <= 64 for v in cert.omega.values())


def test_solve_auto_agrees_with_exact():
    model = lp.build_model([w(VERTEX3, (F4, F5, F5)), w(VERTEX3, (F3, F4, F4))])
    exact_alpha = lp.solve_exact(model)[0]
    auto_alpha, cert, _, _ = lp.solve_auto(model)
    assert auto_alpha == exact_alpha
    assert lp.verify(model, cert)


def test_nonneg_mode():
    model = lp.build_model([w(VERTEX3, (F5, F6P, F6P))])
    alpha, cert, _ = lp.solve_exact(model, nonneg=True)
    assert all(v >= 0 for v in cert.omega.values())
    assert alpha == 4
