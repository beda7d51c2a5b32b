"""Three-dimensional modules for lam = (2,1) and their limits as b -> a.

``M = L_a(1,1) (x) L_b(1)`` induced up to S_3 has explicit matrices in three
bases. The bases are called alpha, beta and gamma here. Evaluating them at
``b = a`` gives three limit modules that are pairwise non-isomorphic:

* ``M0`` from alpha, a direct sum of the sign and the standard evaluation modules;
* ``M1`` from beta, with standard socle and sign head, matching the amended quotient;
* ``M2`` from gamma, with sign socle and standard head, dual to ``M1`` at ``1/a``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .linalg import Matrix
from .modules import (
    RepMatrices,
    dual_module,
    endomorphism_dimension,
    fingerprint,
    is_cyclic_vector,
    is_invariant,
    is_irreducible,
    is_isomorphic,
    isotypic_components,
    verify_affine_relations,
)
from .partitions import Partition
from .polyring import to_rational


def _rep(s1, s2, t1, t2, t3) -> RepMatrices:
    return RepMatrices(3, (Matrix(s1), Matrix(s2)), (Matrix(t1), Matrix(t2), Matrix(t3)), amended=True)


def alpha_matrices(a, b) -> RepMatrices:
    a, b = to_rational(a), to_rational(b)
    return _rep(
        [[-1, 0, 0], [0, 0, -1], [0, -1, 0]],
        [[0, 1, 0], [1, 0, 0], [0, 0, -1]],
        [[a, 0, 0], [0, a, 0], [0, 0, b]],
        [[a, 0, 0], [0, b, 0], [0, 0, a]],
        [[b, 0, 0], [0, a, 0], [0, 0, a]],
    )


def beta_matrices(a, b) -> RepMatrices:
    a, b = to_rational(a), to_rational(b)
    return _rep(
        [[-1, 0, 0], [0, 0, -1], [0, -1, 0]],
        [[-1, 0, -(2 * a + b)], [0, -1, 1], [0, 0, 1]],
        [[0, -a * b, -a * a], [1, a + b, a], [0, 0, a]],
        [[0, -a * a, -a * b], [0, a, 0], [1, a, a + b]],
        [[2 * a + b, a * a + a * b, a * a + a * b], [-1, 0, -a], [-1, -a, 0]],
    )


def gamma_matrices(a, b) -> RepMatrices:
    a, b = to_rational(a), to_rational(b)
    return _rep(
        [[0, 1, b], [1, 0, b], [0, 0, -1]],
        [[1, -1, a + b], [0, -1, 0], [0, 0, -1]],
        [[a, b, 0], [0, b, 0], [0, -1, a]],
        [[0, 0, -a * b], [0, a, 0], [1, 0, a + b]],
        [[a + b, -b, a * b], [0, a, 0], [-1, 1, 0]],
    )


# change of basis from alpha: columns are the new vectors in alpha coordinates
def beta_in_alpha(a, b) -> Matrix:
    """``w0 = v0 - v1 - v2``, ``w1 = w0 . t1``, ``w2 = w0 . t2``."""
    A = alpha_matrices(a, b)
    w0 = [Fraction(1), Fraction(-1), Fraction(-1)]
    w1 = A.t[0].apply(w0)
    w2 = A.t[1].apply(w0)
    return Matrix([[w0[i], w1[i], w2[i]] for i in range(3)])


def gamma_in_alpha(a, b) -> Matrix:
    """``u0 = v0 + v1``, ``u1 = u0 . s1``, ``u2 = u0 . t2``."""
    A = alpha_matrices(a, b)
    u0 = [Fraction(1), Fraction(1), Fraction(0)]
    u1 = A.sigma[0].apply(u0)
    u2 = A.t[1].apply(u0)
    return Matrix([[u0[i], u1[i], u2[i]] for i in range(3)])


def conjugate(M: RepMatrices, P: Matrix) -> RepMatrices:
    """Matrices of the same module in the basis whose alpha coordinates are the columns of ``P``."""
    Pinv = P.inverse()
    return RepMatrices(M.d, tuple(Pinv @ m @ P for m in M.sigma), tuple(Pinv @ m @ P for m in M.t), M.amended)


def limit_modules(a) -> dict[str, RepMatrices]:
    a = to_rational(a)
    return {"M0": alpha_matrices(a, a), "M1": beta_matrices(a, a), "M2": gamma_matrices(a, a)}


def _vec(*xs) -> list[Fraction]:
    return [Fraction(x) for x in xs]


def _strip(fp: dict) -> dict:
    return {k: fp[k] for k in ("dim", "character", "isotypic", "endomorphism_dim", "irreducible")}


def example_report(a, b) -> dict:
    """Relations, fingerprints and comparisons for the (2,1) example at ``(a, b)``."""
    from .tgp import build_quotient, rep_matrices

    a, b = to_rational(a), to_rational(b)
    if a == 0 or b == 0:
        raise PreconditionError("parameters must be nonzero")
    A, B, G = alpha_matrices(a, b), beta_matrices(a, b), gamma_matrices(a, b)
    generic = {
        "relations": {name: verify_affine_relations(M) for name, M in (("alpha", A), ("beta", B), ("gamma", G))},
        "beta_is_change_of_basis": a == b or conjugate(A, beta_in_alpha(a, b)) == B,
        "gamma_is_change_of_basis": a == b or conjugate(A, gamma_in_alpha(a, b)) == G,
        "irreducible": is_irreducible(A),
        "character": A.character().to_json(),
    }
    tgp_module = rep_matrices(build_quotient((2, 1), (a, b)), amended=True)
    generic["isomorphic_to_amended_quotient"] = is_isomorphic(A, tgp_module)

    lim = limit_modules(a)
    M0, M1, M2 = lim["M0"], lim["M1"], lim["M2"]
    amended_aa = rep_matrices(build_quotient((2, 1), (a, a)), amended=True)
    M1_inv = limit_modules(1 / a)["M1"]
    sign, std = Partition([1, 1, 1]), Partition([2, 1])
    limits = {}
    for name, M in lim.items():
        fp = fingerprint(M)
        fp["relations"] = verify_affine_relations(M)
        limits[name] = fp
    limits["M0"]["decomposable"] = endomorphism_dimension(M0) > 1 and all(
        is_invariant(M0, vecs) for vecs in isotypic_components(M0).values())
    limits["M1"]["cyclic_w0"] = is_cyclic_vector(M1, _vec(1, 0, 0))
    limits["M1"]["isomorphic_to_amended_quotient"] = is_isomorphic(M1, amended_aa)
    limits["M1"]["fingerprint_matches_amended_quotient"] = _strip(limits["M1"]) == _strip(fingerprint(amended_aa))
    dual = dual_module(M1_inv)
    limits["M2"]["isomorphic_to_dual_of_M1_at_inverse"] = is_isomorphic(M2, dual)
    limits["M2"]["fingerprint_matches_dual"] = _strip(limits["M2"]) == _strip(fingerprint(dual))
    pairwise = {
        "M0~M1": is_isomorphic(M0, M1),
        "M0~M2": is_isomorphic(M0, M2),
        "M1~M2": is_isomorphic(M1, M2),
    }
    expected = (
        all(generic["relations"].values())
        and generic["beta_is_change_of_basis"] and generic["gamma_is_change_of_basis"]
        and all(limits[k]["relations"] for k in lim)
        and limits["M0"]["decomposable"]
        and limits["M1"]["isotypic"][f"({std})"]["invariant"]
        and not limits["M1"]["isotypic"][f"({sign})"]["invariant"]
        and limits["M1"]["cyclic_w0"]
        and limits["M1"]["isomorphic_to_amended_quotient"]
        and limits["M1"]["fingerprint_matches_amended_quotient"]
        and limits["M2"]["fingerprint_matches_dual"]
        and limits["M2"]["isotypic"][f"({sign})"]["invariant"]
        and not limits["M2"]["isotypic"][f"({std})"]["invariant"]
        and limits["M2"]["isomorphic_to_dual_of_M1_at_inverse"]
        and limits["M1"]["endomorphism_dim"] == 1 and limits["M2"]["endomorphism_dim"] == 1
        and not any(pairwise.values())
    )
    if a != b:
        expected = expected and generic["irreducible"] and generic["isomorphic_to_amended_quotient"]
    return {
        "a": str(a),
        "b": str(b),
        "generic": generic,
        "limits": limits,
        "pairwise_isomorphic": pairwise,
        "ok": expected,
    }
