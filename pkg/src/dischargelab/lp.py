"""Exact-rational LP: model construction, simplex with Bland's rule behind a
row-generation driver, float acceleration with snap-and-verify repair, and
the substitution checker that is the soundness kernel.

Every constraint has the shape ``alpha + sum(c_k * w_k) <= rhs`` with integer
coefficients and rational rhs: capacity rows for 5-faces carry the outgoing
instances positively, rows for 3-faces and 3-vertices carry incoming
instances negatively with the fixed 6+ contributions folded into the rhs,
and the two synthetic rows pin ``alpha <= 4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import rules
from .words import FACE3, FACE5, VERTEX3, Word, word_from_text

ZERO = Fraction(0)
ONE = Fraction(1)

VAR_KEYS = tuple(rules.all_variable_keys())
VAR_INDEX = {k: i for i, k in enumerate(VAR_KEYS)}
SYNTHETIC = ("face4", "vertex4")


class Unbounded(Exception):
    pass


class MissingVariable(KeyError):
    pass


@dataclass(frozen=True)
class Certificate:
    alpha: Fraction
    omega: dict

    def to_text(self):
        lines = [f"alpha = {self.alpha}"]
        for key in VAR_KEYS:
            lines.append(f"{rules.key_text(key)} = {self.omega[key]}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text):
        alpha = None
        omega = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, _, value = line.partition("=")
            value = Fraction(value.strip())
            name = name.strip()
            if name == "alpha":
                alpha = value
            else:
                omega[rules.key_from_text(name)] = value
        return Certificate(alpha, omega)


class LpModel:
    """Deduplicated constraint rows plus per-row provenance lists."""

    def __init__(self):
        self.rows = []          # (coeffs tuple[(var_idx, int)], rhs Fraction)
        self.members = []       # provenance strings, parallel to rows
        self._row_index = {}

    def add(self, coeffs, rhs, provenance):
        key = (coeffs, rhs)
        idx = self._row_index.get(key)
        if idx is None:
            idx = len(self.rows)
            self.rows.append(key)
            self.members.append([provenance])
            self._row_index[key] = idx
        else:
            self.members[idx].append(provenance)

    @property
    def n_constraints(self):
        return sum(len(m) for m in self.members)

    def to_text(self):
        out = ["# lp model v1"]
        for (coeffs, rhs), members in zip(self.rows, self.members):
            terms = " ".join(f"{c}*{rules.key_text(VAR_KEYS[i])}" for i, c in coeffs)
            out.append(f"row\t{rhs}\t{terms}\t{' '.join(members)}")
        return "\n".join(out) + "\n"

    @staticmethod
    def from_text(text):
        model = LpModel()
        for line in text.splitlines():
            if not line.startswith("row\t"):
                continue
            _, rhs, terms, members = line.split("\t")
            coeffs = []
            for term in terms.split():
                c, _, keytxt = term.partition("*")
                coeffs.append((VAR_INDEX[rules.key_from_text(keytxt)], int(c)))
            for prov in members.split(" "):
                model.add(tuple(coeffs), Fraction(rhs), prov)
        return model


def constraint_for_word(word):
    """coefficients, rhs and provenance of the row indexed by one word."""
    coeffs = {}
    rhs = Fraction(5 if word.kind == FACE5 else 3)
    for inst in rules.applicable_rules(word):
        if inst.direction == rules.OUTGOING:
            sign = 1
        else:
            sign = -1
        if inst.key[1] == rules.F6P:
            rhs += inst.multiplicity * rules.t_fixed_value(inst.key)
        else:
            idx = VAR_INDEX[inst.key]
            coeffs[idx] = coeffs.get(idx, 0) + sign * inst.multiplicity
    coeffs = tuple(sorted((i, c) for i, c in coeffs.items() if c != 0))
    return coeffs, rhs, word.text


def build_model(words):
    """One constraint per configuration word plus the synthetic rows for
    4-faces and 4-vertices, which neither give nor receive charge."""
    model = LpModel()
    for name in SYNTHETIC:
        model.add((), Fraction(4), name)
    for word in words:
        model.add(*constraint_for_word(word))
    return model


# ---------------------------------------------------------------------------
# Exact simplex on a working set of rows


def _pivot(T, r, c, ncols):
    prow = T[r]
    piv = prow[c]
    if piv != 1:
        inv = ONE / piv
        T[r] = prow = [v * inv for v in prow]
    nz = [j for j in range(ncols + 1) if prow[j]]
    for i, row in enumerate(T):
        if i == r:
            continue
        f = row[c]
        if f:
            for j in nz:
                row[j] -= f * prow[j]


def _simplex_max_alpha(rows, nvars, nonneg=False):
    """Maximize x_0 over {x : rows hold}; returns the optimal vertex as a
    list of Fractions.  Variables are free by default and split x = x+ - x-;
    with ``nonneg`` only x_0 keeps its negative part.  All rhs are
    nonnegative so the slack basis starts feasible.  Bland's rule: smallest
    entering index, ratio ties to the smallest basis index."""
    m = len(rows)
    n = nvars
    neg = n if not nonneg else 1
    ncols = n + neg + m
    T = []
    for i, (coeffs, rhs) in enumerate(rows):
        if rhs < 0:
            raise ValueError("row generation assumes nonnegative rhs")
        row = [ZERO] * (ncols + 1)
        for j, c in coeffs:
            row[j] = Fraction(c)
            if j < neg:
                row[n + j] = Fraction(-c)
        row[n + neg + i] = ONE
        row[ncols] = rhs
        T.append(row)
    obj = [ZERO] * (ncols + 1)
    obj[0] = Fraction(-1)
    obj[n] = ONE
    T.append(obj)
    basis = [n + neg + i for i in range(m)]
    while True:
        objrow = T[m]
        enter = -1
        for j in range(ncols):
            if objrow[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise Unbounded("objective unbounded on working set")
        _pivot(T, leave, enter, ncols)
        basis[leave] = enter
    x = [ZERO] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] += T[i][ncols]
        elif bv < n + neg:
            x[bv - n] -= T[i][ncols]
    return x


def _row_lhs(coeffs, alpha, omega_vec):
    s = alpha
    for j, c in coeffs:
        v = omega_vec[j]
        if v:
            s += c * v
    return s


def solve_exact(model, seed_rows=(), add_per_round=40, nonneg=False):
    """Exact optimum by row generation over the deduplicated rows.

    Returns (alpha_star, certificate, tight) where tight lists the
    provenances of all zero-slack constraints, sorted.
    """
    nvars = 1 + len(VAR_KEYS)
    synth = [i for i, ms in enumerate(model.members) if any(p in SYNTHETIC for p in ms)]
    working = list(dict.fromkeys(list(synth) + [i for i in seed_rows if 0 <= i < len(model.rows)]))
    if not synth:
        raise Unbounded("model lacks the synthetic alpha bound rows")
    while True:
        kernel_rows = [(((0, 1),) + tuple((1 + j, c) for j, c in model.rows[i][0]),
                        model.rows[i][1]) for i in working]
        x = _simplex_max_alpha(kernel_rows, nvars, nonneg=nonneg)
        alpha, omega_vec = x[0], x[1:]
        violated = []
        for ridx, (coeffs, rhs) in enumerate(model.rows):
            slack = rhs - _row_lhs(coeffs, alpha, omega_vec)
            if slack < 0:
                violated.append((slack, ridx))
        if not violated:
            break
        violated.sort()
        in_working = set(working)
        for _, ridx in violated[:add_per_round]:
            if ridx not in in_working:
                working.append(ridx)
                in_working.add(ridx)
    cert = Certificate(alpha, {k: omega_vec[i] for i, k in enumerate(VAR_KEYS)})
    tight = []
    for ridx, (coeffs, rhs) in enumerate(model.rows):
        if rhs == _row_lhs(coeffs, alpha, omega_vec):
            tight.extend(model.members[ridx])
    return alpha, cert, sorted(tight)


def verify(model, cert):
    """Exact substitution check of every constraint; no tolerance."""
    for key in VAR_KEYS:
        if key not in cert.omega:
            raise MissingVariable(rules.key_text(key))
    omega_vec = [cert.omega[k] for k in VAR_KEYS]
    for coeffs, rhs in model.rows:
        if _row_lhs(coeffs, cert.alpha, omega_vec) > rhs:
            return False
    return True


def violated_rows(model, cert):
    """Provenances of the constraints a certificate violates (diagnostics)."""
    omega_vec = [cert.omega[k] for k in VAR_KEYS]
    out = []
    for ridx, (coeffs, rhs) in enumerate(model.rows):
        if _row_lhs(coeffs, cert.alpha, omega_vec) > rhs:
            out.extend(model.members[ridx])
    return sorted(out)


# ---------------------------------------------------------------------------
# Float acceleration


def solve_fast(model, nonneg=False):
    """Approximate candidate from a float LP; never used without exact
    repair.  Returns (alpha_float, omega_float_list) or None if the float
    solver is unavailable."""
    try:
        import numpy as np
        from scipy.optimize import linprog
        from scipy.sparse import csr_matrix
    except ImportError:
        return None
    nvars = 1 + len(VAR_KEYS)
    data, indices, indptr = [], [], [0]
    b = []
    for coeffs, rhs in model.rows:
        data.append(1.0)
        indices.append(0)
        for j, c in coeffs:
            data.append(float(c))
            indices.append(1 + j)
        indptr.append(len(data))
        b.append(float(rhs))
    A = csr_matrix((data, indices, indptr), shape=(len(model.rows), nvars))
    c = np.zeros(nvars)
    c[0] = -1.0
    lo = 0.0 if nonneg else None
    res = linprog(c, A_ub=A, b_ub=np.array(b),
                  bounds=[(None, None)] + [(lo, None)] * (nvars - 1),
                  method="highs")
    if not res.success:
        return None
    support = [int(i) for i in np.nonzero(np.abs(res.ineqlin.marginals) > 1e-9)[0]]
    return res.x[0], list(res.x[1:]), support


def snap_candidate(candidate, alpha_target=None, max_denominator=64):
    """Snap a float candidate to nearby small rationals; the repair path."""
    alpha_f, omega_f = candidate[0], candidate[1]
    if alpha_target is not None:
        alpha = Fraction(alpha_target)
    else:
        alpha = Fraction(alpha_f).limit_denominator(max_denominator)
    omega = {k: Fraction(v).limit_denominator(max_denominator)
             for k, v in zip(VAR_KEYS, omega_f)}
    return Certificate(alpha, omega)


def active_rows(model, cert, tol=Fraction(1, 10**6)):
    """Indices of rows nearly tight under a candidate; seeds for the exact
    solve."""
    omega_vec = [cert.omega[k] for k in VAR_KEYS]
    out = []
    for ridx, (coeffs, rhs) in enumerate(model.rows):
        if rhs - _row_lhs(coeffs, cert.alpha, omega_vec) <= tol:
            out.append(ridx)
    return out


def solve_auto(model, alpha_target=None, nonneg=False):
    """Fast path with exact repair, falling back to the exact solver.

    Returns (alpha_star, certificate, tight, exact_optimum) where
    ``exact_optimum`` is False only when a snapped fast certificate at the
    target value was accepted without running the exact solver (sound:
    verification is exact; the target is met, which is all the caller asked).
    """
    seeds = ()
    candidate = solve_fast(model, nonneg=nonneg)
    if candidate is not None:
        if alpha_target is not None and candidate[0] >= alpha_target - 1e-7:
            cert = snap_candidate(candidate, alpha_target)
            if verify(model, cert):
                omega_vec = [cert.omega[k] for k in VAR_KEYS]
                tight = []
                for ridx, (coeffs, rhs) in enumerate(model.rows):
                    if rhs == _row_lhs(coeffs, cert.alpha, omega_vec):
                        tight.extend(model.members[ridx])
                return cert.alpha, cert, sorted(tight), False
        # the dual support is a small deterministic seed for row generation
        seeds = candidate[2]
    alpha, cert, tight = solve_exact(model, seed_rows=seeds, nonneg=nonneg)
    return alpha, cert, tight, True
