"""Relation, cellular-basis and cell-module verification batteries.

These are the suites below the Morita layer: they certify the arithmetic
core (defining relations, basis closure, associativity, the star map), the
cellular change of basis with its triangularity, and the module-level facts
(action relations, Gram symmetry and invariance, semisimple dimension
counts, block partition, decomposition matrices).
"""

from __future__ import annotations

import random

from .algebra import ArikiKoikeAlgebra, random_element
from .fields import Params, poincare
from .linalg import in_row_space, rank, row_space_basis, transpose
from .report import CheckResult, result
from .specht import (
    block_partition,
    decomposition_matrix,
    gram_matrix,
    specht_module,
)
from .tableaux import (
    content,
    multipartitions,
    std_tableaux,
    strictly_dominates,
    tableau_dominates,
    tableau_residue,
)

REF_RANK = "normal-form basis closure at rank r^n n!"
REF_RELATIONS = "defining relations of the algebra"
REF_COMMUTE = "fundamental commutation laws of the L elements"
REF_STAR = "the star map is an involutive anti-automorphism"
REF_ASSOC = "associativity of the rewritten product"
REF_TRANSITION = "invertibility of the cellular change of basis"
REF_TRIANGULAR = "triangular action of the commuting generators on cell elements"
REF_IDEALS = "two-sided ideals spanned by dominating cell layers"
REF_STAR_CELL = "star swaps the two tableaux of a cell element"
REF_MODULE_REL = "defining relations hold on every cell module"
REF_GRAM = "symmetry and invariance of the cell-module bilinear form"
REF_SEMISIMPLE = "semisimple regime: nonsingular forms and the square-sum count"
REF_BLOCKS = "content as a block invariant"
REF_DECOMP = "triangular decomposition matrix over a prime field"


def relations_suite(params: Params, seed: int = 2024, max_dim: int = 5000) -> list[CheckResult]:
    alg = ArikiKoikeAlgebra(params, max_dim=max_dim)
    n, q = alg.n, alg.q
    pd = params.describe()
    out = []

    basis = set(alg.basis())
    closure_ok = len(basis) == alg.dim
    for mono in alg.basis():
        for g in range(n):
            if not all(k in basis for k in alg._mono_times_gen(mono, g)):
                closure_ok = False
    out.append(result("relations.basis_closure", REF_RANK, pd, closure_ok,
                      f"rank {len(basis)}"))

    failures = []
    one = alg.one()
    T = [alg.gen_T(i) for i in range(n)]
    if n >= 1:
        z = one
        for Qt in alg.Q:
            z = z * (T[0] - alg.from_scalar(Qt))
        if not z.is_zero():
            failures.append("cyclotomic relation")
        if n >= 2 and T[0] * T[1] * T[0] * T[1] != T[1] * T[0] * T[1] * T[0]:
            failures.append("mixed braid relation")
        for i in range(1, n):
            if T[i] * T[i] != T[i].scale(q - alg.field.one) + one.scale(q):
                failures.append(f"quadratic relation at {i}")
        for i in range(1, n - 1):
            if T[i + 1] * T[i] * T[i + 1] != T[i] * T[i + 1] * T[i]:
                failures.append(f"braid relation at {i}")
        for i in range(n):
            for j in range(i + 2, n):
                if T[i] * T[j] != T[j] * T[i]:
                    failures.append(f"far commutation {i},{j}")
    out.append(result("relations.defining", REF_RELATIONS, pd, not failures,
                      "; ".join(failures[:4])))

    failures = []
    L = [None] + [alg.gen_L(k) for k in range(1, n + 1)]
    for i in range(1, n):
        for j in range(1, n + 1):
            if L[i] * L[j] != L[j] * L[i]:
                failures.append(f"L_{i} L_{j}")
            if j not in (i, i + 1) and T[i] * L[j] != L[j] * T[i]:
                failures.append(f"T_{i} L_{j}")
        if T[i] * (L[i] * L[i + 1]) != (L[i] * L[i + 1]) * T[i]:
            failures.append(f"T_{i} with the product pair")
        if T[i] * (L[i] + L[i + 1]) != (L[i] + L[i + 1]) * T[i]:
            failures.append(f"T_{i} with the sum pair")
        for a in (alg.field.zero, alg.field.one, alg.Q[0]):
            for j in range(1, n + 1):
                if j == i:
                    continue
                prod = one
                for k in range(1, j + 1):
                    prod = prod * (L[k] - alg.from_scalar(a))
                if T[i] * prod != prod * T[i]:
                    failures.append(f"T_{i} with the shifted prefix product to {j}")
    out.append(result("relations.commutation", REF_COMMUTE, pd, not failures,
                      "; ".join(failures[:4])))

    rng = random.Random(seed)
    failures = []
    pair_trials = 20 if alg.dim <= 48 else 8
    for _ in range(pair_trials):
        a, b = random_element(alg, rng), random_element(alg, rng)
        if (a * b).star() != b.star() * a.star():
            failures.append("anti-homomorphism")
        if a.star().star() != a:
            failures.append("involution")
    for k in range(1, n + 1):
        if alg.gen_L(k).star() != alg.gen_L(k):
            failures.append(f"L_{k} not fixed")
    out.append(result("relations.star", REF_STAR, pd, not failures,
                      "; ".join(sorted(set(failures)))))

    trials = 200 if alg.dim <= 8 else (50 if alg.dim <= 48 else 20)
    failures = 0
    for _ in range(trials):
        a, b, c = (random_element(alg, rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            failures += 1
    out.append(result("relations.associativity", REF_ASSOC, pd, failures == 0,
                      f"{trials} random triples, seed {seed}"))
    return out


def cellular_suite(params: Params, seed: int = 2024, max_dim: int = 5000,
                   roundtrip_trials: int = 100) -> list[CheckResult]:
    alg = ArikiKoikeAlgebra(params, max_dim=max_dim)
    pd = params.describe()
    out = []
    trans = alg.transition()
    inv_ok = True
    try:
        trans.inverse()
    except ValueError:
        inv_ok = False
    out.append(result("cellular.transition_invertible", REF_TRANSITION, pd, inv_ok,
                      f"dimension {alg.dim}"))

    rng = random.Random(seed)
    failures = 0
    for _ in range(roundtrip_trials):
        e = random_element(alg, rng)
        if trans.combine(trans.express(e)) != e:
            failures += 1
    out.append(result("cellular.roundtrip", REF_TRANSITION, pd, failures == 0,
                      f"{roundtrip_trials} random elements, seed {seed}"))

    failures = []
    for lam in multipartitions(alg.n, alg.r):
        for s in std_tableaux(lam):
            for t in std_tableaux(lam):
                mst = alg.m_st(s, t)
                for k in range(1, alg.n + 1):
                    coords = trans.express(alg.gen_L(k) * mst)
                    res = tableau_residue(s, k, params)
                    for (mu, u, v), c in coords.items():
                        if mu != lam:
                            if not strictly_dominates(mu, lam):
                                failures.append("escaped to a non-dominating shape")
                        elif v != t:
                            failures.append("second tableau moved")
                        elif u == s:
                            if c != res:
                                failures.append("diagonal coefficient is not the residue")
                        elif not (tableau_dominates(u, s) and u != s):
                            failures.append("off-diagonal tableau not strictly dominating")
                    if coords.get((lam, s, t), alg.field.zero) != res:
                        failures.append("missing residue term")
    out.append(result("cellular.residue_triangularity", REF_TRIANGULAR, pd, not failures,
                      "; ".join(sorted(set(failures))[:4])))

    failures = []
    for lam in multipartitions(alg.n, alg.r):
        for strict in (False, True):
            rows = []
            elems = []
            for mu in multipartitions(alg.n, alg.r):
                keep = strictly_dominates(mu, lam) if strict else (
                    mu == lam or strictly_dominates(mu, lam))
                if not keep:
                    continue
                for u in std_tableaux(mu):
                    for v in std_tableaux(mu):
                        e = alg.m_st(u, v)
                        elems.append(e)
                        rows.append(alg.vec(e))
            if not rows:
                continue
            echelon = row_space_basis(rows)
            for e in elems:
                for g in range(alg.n):
                    if not in_row_space(echelon, alg.vec(e * alg.gen_T(g))):
                        failures.append("right multiplication leaves the layer ideal")
                    if not in_row_space(echelon, alg.vec(alg.gen_T(g) * e)):
                        failures.append("left multiplication leaves the layer ideal")
    out.append(result("cellular.layer_ideals", REF_IDEALS, pd, not failures,
                      "; ".join(sorted(set(failures))[:2])))

    failures = []
    for lam in multipartitions(alg.n, alg.r):
        tabs = std_tableaux(lam)
        for s in tabs:
            for t in tabs:
                if alg.m_st(s, t).star() != alg.m_st(t, s):
                    failures.append(lam.serialize())
    out.append(result("cellular.star_swap", REF_STAR_CELL, pd, not failures,
                      "; ".join(failures[:3])))
    return out


def specht_suite(params: Params, max_dim: int = 5000) -> list[CheckResult]:
    alg = ArikiKoikeAlgebra(params, max_dim=max_dim)
    pd = params.describe()
    out = []
    q, one = alg.q, alg.field.one
    lams = multipartitions(alg.n, alg.r)
    modules = {lam: specht_module(alg, lam) for lam in lams}
    grams = {lam: gram_matrix(alg, lam) for lam in lams}

    failures = []
    for lam, sm in modules.items():
        A = sm.action
        d = sm.dim
        ident = [[one if i == j else alg.field.zero for j in range(d)] for i in range(d)]

        def mm(x, y):
            return [[sum((x[i][k] * y[k][j] for k in range(d)), alg.field.zero)
                     for j in range(d)] for i in range(d)]

        z = ident
        for Qt in alg.Q:
            z = mm(z, [[A[0][i][j] - (Qt if i == j else alg.field.zero)
                        for j in range(d)] for i in range(d)])
        if any(any(row) for row in z):
            failures.append(f"cyclotomic fails on {lam.serialize()}")
        if alg.n >= 2:
            lhs = mm(mm(mm(A[0], A[1]), A[0]), A[1])
            rhs = mm(mm(mm(A[1], A[0]), A[1]), A[0])
            if lhs != rhs:
                failures.append(f"mixed braid fails on {lam.serialize()}")
        for i in range(1, alg.n):
            sq = mm(A[i], A[i])
            expect = [[(q - one) * A[i][a][b2] + (q if a == b2 else alg.field.zero)
                       for b2 in range(d)] for a in range(d)]
            if sq != expect:
                failures.append(f"quadratic fails on {lam.serialize()}")
        for i in range(1, alg.n - 1):
            if mm(mm(A[i + 1], A[i]), A[i + 1]) != mm(mm(A[i], A[i + 1]), A[i]):
                failures.append(f"braid fails on {lam.serialize()}")
        for i in range(alg.n):
            for j in range(i + 2, alg.n):
                if mm(A[i], A[j]) != mm(A[j], A[i]):
                    failures.append(f"far commutation fails on {lam.serialize()}")
    out.append(result("specht.action_relations", REF_MODULE_REL, pd, not failures,
                      "; ".join(failures[:3])))

    failures = []
    for lam, sm in modules.items():
        g = grams[lam]
        if g != transpose(g):
            failures.append(f"asymmetric on {lam.serialize()}")
        for Ag in sm.action:
            lhs = [[sum((Ag[i][k] * g[k][j] for k in range(sm.dim)), alg.field.zero)
                    for j in range(sm.dim)] for i in range(sm.dim)]
            rhs = [[sum((g[i][k] * Ag[j][k] for k in range(sm.dim)), alg.field.zero)
                    for j in range(sm.dim)] for i in range(sm.dim)]
            if lhs != rhs:
                failures.append(f"not invariant on {lam.serialize()}")
    out.append(result("specht.gram_invariance", REF_GRAM, pd, not failures,
                      "; ".join(sorted(set(failures))[:3])))

    if poincare(params):
        failures = []
        total = 0
        for lam in lams:
            d = rank(grams[lam])
            if d != modules[lam].dim:
                failures.append(f"singular form on {lam.serialize()}")
            total += d * d
        if total != alg.dim:
            failures.append(f"square sum {total} != {alg.dim}")
        out.append(result("specht.semisimple_regime", REF_SEMISIMPLE, pd, not failures,
                          "; ".join(failures[:3])))

    if params.q != alg.field.one:
        blocks = block_partition(params)
        covered = sum(len(b) for b in blocks)
        contents_distinct = len({content(b[0], params) for b in blocks}) == len(blocks)
        out.append(result("specht.blocks_by_content", REF_BLOCKS, pd,
                          covered == len(lams) and contents_distinct,
                          f"{len(blocks)} content classes over {len(lams)} shapes"))

    if params.field.characteristic > 0:
        data = decomposition_matrix(params, max_dim=max_dim)
        out.append(result("specht.decomposition_matrix", REF_DECOMP, pd, True,
                          f"{len(data.rows)} rows, {len(data.cols)} simples"))
    return out
