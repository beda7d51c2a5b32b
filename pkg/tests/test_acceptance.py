"""Acceptance criteria 1-12, each with its tolerance (exact) and time bound.

Every test prints one PASS/FAIL line; the same lines are repeated in the
terminal summary.
"""

from fractions import Fraction
from math import factorial

from hypothesis import given, settings, strategies as st

from tgpdeform.groebner import buchberger, ideal_equal, is_groebner, quotient_dimension
from tgpdeform.limits import alpha_matrices, example_report
from tgpdeform.modules import verify_affine_relations
from tgpdeform.partitions import Partition, QPoly, cocharge_word, modified_kostka, partitions_of
from tgpdeform.polyring import MPoly, apply_permutation, elementary_symmetric
from tgpdeform.schurweyl import dualweyl_check, kostka_cross_identity, weyl_gmodule_decomposition
from tgpdeform.symgrp import CharacterVector, Permutation, character_table, z_value
from tgpdeform.tgp import (
    annihilation_check,
    build_quotient,
    character,
    d_lambda,
    deformed_generators,
    graded_character,
    multiblock_battery,
    parameter_battery,
    point_variety_oracle,
    predicted_character,
    predicted_graded_character,
    reduced_generators,
    root_product_check,
    shift_scale_check,
    split_check,
    symmetric_evaluation_check,
)

MAX_D = 5
TRIALS = 5
SEED = 0
SHIFT_PAIRS = ((2, -1), (Fraction(-1, 2), 3), (3, 0))
ALL_LAMBDAS = [lam for d in range(1, MAX_D + 1) for lam in partitions_of(d)]


def battery(lam):
    return parameter_battery(lam, TRIALS, SEED)


def test_c01_kostka_golden(criterion):
    with criterion(1, "Kostka golden set and cocharge example", limit=1) as c:
        q = QPoly.monomial
        content = Partition([1, 1, 1, 1])
        golden = {
            (1, 1, 1, 1): q(6),
            (4,): q(0),
            (2, 2): q(2) + q(4),
            (3, 1): q(1) + q(2) + q(3),
            (2, 1, 1): q(3) + q(4) + q(5),
        }
        for shape, poly in golden.items():
            c.check(modified_kostka(Partition(shape), content) == poly, f"K~ {shape}")
        c.check(cocharge_word([4, 2, 2, 3, 1, 1, 1, 2, 3]) == 6, "cocharge")
        c.detail = "5 polynomials, cocharge 6"
    assert c.ok


def test_c02_coinvariant_dimension(criterion):
    with criterion(2, "coinvariant dimension d! for d=2..6", limit=60) as c:
        for d in range(2, 7):
            gb = buchberger([elementary_symmetric(range(1, d + 1), r, d) for r in range(1, d + 1)], "degrevlex", d)
            c.check(quotient_dimension(gb) == factorial(d), f"d={d}")
            c.check(build_quotient((d,)).dim == factorial(d), f"tgp d={d}")
    assert c.ok


def test_c03_graded_character(criterion):
    with criterion(3, "graded character equals modified Kostka prediction, d<=5", limit=300) as c:
        for lam in ALL_LAMBDAS:
            c.check(graded_character(build_quotient(lam)) == predicted_graded_character(lam), str(lam))
        q = QPoly.monomial
        gch4 = graded_character(build_quotient((4,)))
        shown = {(4,): q(0), (3, 1): q(1) + q(2) + q(3), (2, 2): q(2) + q(4),
                 (2, 1, 1): q(3) + q(4) + q(5), (1, 1, 1, 1): q(6)}
        for mu, poly in shown.items():
            coeffs = tuple(gch4.get(i, CharacterVector(4))[mu] for i in range(7))
            c.check(QPoly(coeffs) == poly, f"gch R(4) at {mu}")
        c.detail = f"{len(ALL_LAMBDAS)} partitions"
    assert c.ok


def test_c04_flatness(criterion):
    with criterion(4, "flatness and character for all parameter patterns, d<=5", limit=600) as c:
        vectors = oracles = 0
        for lam in ALL_LAMBDAS:
            bat = battery(lam)
            kinds = {k for k, _ in bat}
            p = lam.part(1)
            need = {"zero", "equal"} | ({"distinct"} if p >= 2 else set()) | ({"mixed"} if p >= 3 else set())
            c.check(len(bat) >= 5 and need <= kinds, f"battery coverage {lam}")
            for kind, a in bat:
                R = build_quotient(lam, a)
                c.check(R.dim == d_lambda(lam), f"dim {lam} {a}")
                c.check(character(R) == predicted_character(lam), f"character {lam} {a}")
                vectors += 1
                if a.is_distinct():
                    c.check(point_variety_oracle(lam, a) == d_lambda(lam), f"oracle {lam} {a}")
                    c.check(annihilation_check(lam, a), f"annihilation {lam} {a}")
                    oracles += 1
        c.detail = f"{vectors} algebras, {oracles} point-variety oracles"
    assert c.ok


def test_c05_reduced_generators(criterion):
    with criterion(5, "reduced generating set spans the same ideal, d<=5") as c:
        n = 0
        for lam in ALL_LAMBDAS:
            for _, a in battery(lam):
                c.check(ideal_equal(deformed_generators(lam, a).polys(), reduced_generators(lam, a).polys(),
                                    "degrevlex", lam.size), f"{lam} {a}")
                n += 1
        c.detail = f"{n} ideals"
    assert c.ok


def _four_generator_ideal():
    d = 3
    t = [MPoly.variable(d, i) for i in range(1, 4)]
    x = [ti - 1 for ti in t]
    return [t[0] + t[1] + t[2] - 3, x[0] * x[1], x[1] * x[2], x[0] * x[2]]


def test_c06_four_generator_example(criterion):
    with criterion(6, "four-generator example for (2,1) at a=(1,1)", limit=1) as c:
        c.check(ideal_equal(deformed_generators((2, 1), (1, 1)).polys(), _four_generator_ideal()), "ideal")
        c.check(build_quotient((2, 1), (1, 1)).dim == 3, "dim")
    assert c.ok


def test_c07_symmetric_evaluation(criterion):
    with criterion(7, "symmetric functions evaluate to constants; root products vanish") as c:
        n = 0
        for lam in ALL_LAMBDAS:
            for _, a in battery(lam):
                R = build_quotient(lam, a)
                c.check(symmetric_evaluation_check(R), f"symmetric evaluation {lam} {a}")
                c.check(root_product_check(R), f"root product {lam} {a}")
                n += 1
        c.detail = f"{n} algebras"
    assert c.ok


def test_c08_shift_scale_swap(criterion):
    with criterion(8, "shift/scale invariance and equal-column swaps") as c:
        n = swaps = 0
        for lam in ALL_LAMBDAS:
            for _, a in battery(lam):
                for b, cc in SHIFT_PAIRS:
                    rep = shift_scale_check(lam, a, b, cc)
                    c.check(rep["shift_scale"], f"shift {lam} {a} {b} {cc}")
                    c.check(all(s["equal_ideals"] for s in rep["swaps_equal_length"]), f"swap {lam} {a}")
                    n += 1
                swaps += len(rep["swaps_equal_length"])
        c.detail = f"{n} shift/scale checks, {swaps} equal-length swaps"
    assert c.ok


def test_c09_splitting(criterion):
    with criterion(9, "splitting: induced character and dimension product") as c:
        n = 0
        for lam in ALL_LAMBDAS:
            vecs = multiblock_battery(lam, 3, SEED)
            c.check(len(vecs) >= 3 or lam.part(1) == 1, f"multiblock battery {lam}")
            for b in vecs:
                c.check(len(set(b.values)) >= 2, f"not multiblock {lam} {b}")
                rep = split_check(lam, b)
                c.check(rep["dim_ok"] and rep["character_ok"], f"{lam} {b}")
                n += 1
        c.detail = f"{n} multi-block vectors; one-column shapes have no multi-block choice"
    assert c.ok


def test_c10_dual_weyl(criterion):
    with criterion(10, "Schur-Weyl image matches Pieri oracle; Kostka cross-identity") as c:
        n = 0
        for lam in ALL_LAMBDAS:
            vecs = [a for _, a in battery(lam)] + multiblock_battery(lam, 3, SEED)
            for a in vecs:
                c.check(dualweyl_check(lam, a, lam.size)["ok"], f"{lam} {a}")
                n += 1
            c.check(kostka_cross_identity(lam, lam.size, weyl_gmodule_decomposition(lam, lam.size)), f"cross {lam}")
        c.detail = f"{n} comparisons"
    assert c.ok


def test_c11_three_limits(criterion):
    with criterion(11, "(2,1) example: relations and three distinct limits", limit=1) as c:
        c.check(verify_affine_relations(alpha_matrices(1, 2)), "alpha relations")
        rep = example_report(1, 1)
        c.check(rep["ok"], "report")
        lim = rep["limits"]
        c.check(lim["M0"]["decomposable"], "M0 splits")
        c.check(lim["M1"]["fingerprint_matches_amended_quotient"], "M1 fingerprint")
        c.check(lim["M2"]["isotypic"]["(1,1,1)"]["invariant"], "M2 sign socle")
        c.check(not any(rep["pairwise_isomorphic"].values()), "pairwise distinct")
    assert c.ok


# --------------------------------------------------------------------------
# criterion 12

NV = 4
rationals = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@st.composite
def polys(draw):
    n = draw(st.integers(0, 20))
    return MPoly(NV, {tuple(draw(st.lists(st.integers(0, 3), min_size=NV, max_size=NV))): draw(rationals)
                      for _ in range(n)})


perms = st.permutations(range(1, NV + 1)).map(Permutation)
COUNTER = {"cases": 0}


@settings(max_examples=1000, deadline=None, derandomize=True)
@given(polys(), polys(), polys(), perms, perms)
def _ring_and_action_laws(f, g, h, s, u):
    COUNTER["cases"] += 1
    assert f + g == g + f and f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert apply_permutation(apply_permutation(f, s), u) == apply_permutation(f, s.compose(u))
    assert apply_permutation(f * g, s) == apply_permutation(f, s) * apply_permutation(g, s)


def _orthogonality(d):
    T = character_table(d)
    for i, r1 in enumerate(T.values):
        for j, r2 in enumerate(T.values):
            if sum(a * b * n for a, b, n in zip(r1, r2, T.class_sizes)) != (factorial(d) if i == j else 0):
                return False
    for a, rho in enumerate(T.classes):
        for b in range(len(T.classes)):
            if sum(row[a] * row[b] for row in T.values) != (z_value(rho) if a == b else 0):
                return False
    return True


def _bases_of_criteria_2_to_6():
    for d in range(2, 7):
        yield buchberger([elementary_symmetric(range(1, d + 1), r, d) for r in range(1, d + 1)], "degrevlex", d)
    for lam in ALL_LAMBDAS:
        yield build_quotient(lam).gb
        for _, a in battery(lam):
            yield build_quotient(lam, a).gb
            yield buchberger(reduced_generators(lam, a).polys(), "degrevlex", lam.size)
    yield buchberger(_four_generator_ideal(), "degrevlex", 3)
    yield build_quotient((2, 1), (1, 1)).gb


def test_c12_property_suites(criterion):
    with criterion(12, "property suites and S-pair post-verification") as c:
        for d in range(1, 9):
            c.check(_orthogonality(d), f"orthogonality d={d}")
        COUNTER["cases"] = 0
        _ring_and_action_laws()
        c.check(COUNTER["cases"] >= 1000, f"only {COUNTER['cases']} random cases")
        n = 0
        for gb in _bases_of_criteria_2_to_6():
            c.check(is_groebner(gb), f"S-pair check {gb!r}")
            n += 1
        c.detail = f"{COUNTER['cases']} ring/action cases, {n} bases verified"
    assert c.ok
