"""Counting and Hom-space verification for cyclotomic q-Schur algebras.

The Schur algebra of a saturated set Gamma of multicompositions is the
endomorphism algebra of the direct sum of the row-permutation modules M^mu
for mu in Gamma.  Rather than building its multiplication table, this module
verifies the facts the Morita transfer rests on: the semistandard dimension
formula, the explicit Hom-space bases computed by exact linear algebra, the
splitting of the index poset, and the compatibility of theta_b with the
tensor decomposition on the M-side.
"""

from __future__ import annotations

from .algebra import ArikiKoikeAlgebra
from .fields import GateError, Params
from .linalg import in_row_space, nullspace, rank, row_space_basis
from .morita import MoritaSuite
from .report import CheckResult, result
from .tableaux import (
    MultiComposition,
    dominates,
    multipartitions,
    semistandard,
    sort_key,
)

REF_SATURATED = "saturation of the index set under dominance"
REF_DIMENSION = "semistandard basis dimension of the Schur algebra"
REF_HOM = "semistandard basis of Hom(M^nu, M^mu)"
REF_SPLIT = "product splitting of the index poset at each level"
REF_COUNT = "level-wise counting consistency of the Morita transfer"
REF_THETA_M = "theta_b carries the split row-permutation module to the M-side image"


def saturated_check(gamma: list[MultiComposition], n: int, r: int) -> bool:
    """True iff every multipartition dominating a member is itself a member."""
    have = set(gamma)
    for lam in gamma:
        for mu in multipartitions(n, r):
            if dominates(mu, lam) and mu not in have:
                return False
    return True


def schur_dimension(gamma: list[MultiComposition], params: Params) -> int:
    """Sum over multipartitions in Gamma of the squared semistandard counts."""
    if not saturated_check(gamma, params.n, params.r):
        raise ValueError("the index set is not saturated")
    total = 0
    for lam in multipartitions(params.n, params.r):
        if lam not in set(gamma):
            continue
        row = sum(len(semistandard(lam, mu)) for mu in gamma)
        total += row * row
    return total


def hom_space(mu: MultiComposition, nu: MultiComposition, alg: ArikiKoikeAlgebra) -> dict:
    """The space of module maps M^nu -> M^mu, computed two independent ways.

    Direct computation: a map is determined by the image x of the cyclic
    generator m_nu; x must lie in M^mu and kill the right annihilator of
    m_nu.  The returned dict carries the solved dimension, the semistandard
    pair count, and whether every basis map lands in the solved space.
    """
    field = alg.field
    m_mu = alg.m_lambda(mu)
    m_nu = alg.m_lambda(nu)
    # row space of M^mu
    mu_rows = [alg.vec(m_mu * alg.element({m: field.one})) for m in alg.basis()]
    mu_basis = row_space_basis(mu_rows)
    # right annihilator of m_nu
    ann = nullspace(alg.left_mult_matrix(m_nu), field)
    # solve: x in span(mu_basis) with x k = 0 for all k in ann
    cond_rows = []
    x_mats = [alg.left_mult_matrix(alg.from_vec(v)) for v in mu_basis]
    for k in ann:
        for coord in range(alg.dim):
            row = []
            for xm in x_mats:
                acc = field.zero
                for a, b in zip(xm[coord], k):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            if any(row):
                cond_rows.append(row)
    if cond_rows:
        sols = nullspace(cond_rows, field)
    else:
        sols = [[field.one if i == j else field.zero for j in range(len(mu_basis))]
                for i in range(len(mu_basis))]
    solved_dim = len(sols)

    expected = 0
    members = []
    for lam in multipartitions(alg.n, alg.r):
        s_count = semistandard(lam, mu)
        t_count = semistandard(lam, nu)
        expected += len(s_count) * len(t_count)
        for S in s_count:
            for T in t_count:
                members.append(alg.m_semi2(S, T))

    sol_rows = []
    for z in sols:
        vec = [field.zero] * alg.dim
        for c, bas in zip(z, mu_basis):
            if c:
                vec = [a + c * bb for a, bb in zip(vec, bas)]
        sol_rows.append(vec)
    sol_echelon = row_space_basis(sol_rows) if sol_rows else []
    members_inside = all(
        in_row_space(sol_echelon, alg.vec(m)) if sol_echelon else m.is_zero()
        for m in members
    )
    member_rows = [alg.vec(m) for m in members]
    members_rank = rank(member_rows) if member_rows else 0
    return {
        "dim": solved_dim,
        "expected": expected,
        "members_inside": members_inside,
        "members_independent": members_rank == expected,
    }


def gamma_split(gamma: list[MultiComposition], n: int, r: int, s: int, b: int) -> tuple:
    """Split the level-b slice of Gamma and check the product poset law.

    Returns (left set, right set, CheckResult).  The claimed order
    isomorphism (componentwise dominance on pairs versus dominance on the
    concatenation) is verified exhaustively, as is bijectivity of the
    concatenation map from the product onto the slice.
    """
    level = [lam for lam in gamma if sum(lam.component_sizes()[:s]) == b]
    left = sorted({MultiComposition(lam.components[:s]) for lam in level}, key=sort_key)
    right = sorted({MultiComposition(lam.components[s:]) for lam in level}, key=sort_key)
    failures = []
    pairs = [(x, y) for x in left for y in right]
    images = {}
    for (x, y) in pairs:
        joined = MultiComposition(x.components + y.components)
        images[(x, y)] = joined
        if joined not in set(level):
            failures.append("concatenation leaves the level slice")
    if len(set(images.values())) != len(pairs) or len(pairs) != len(level):
        failures.append(f"not bijective: {len(pairs)} pairs vs {len(level)} members")
    for (x1, y1) in pairs:
        for (x2, y2) in pairs:
            lhs = dominates(x1, x2) and dominates(y1, y2)
            rhs = dominates(images[(x1, y1)], images[(x2, y2)])
            if lhs != rhs:
                failures.append("order not preserved")
    res = result(
        "schur.gamma_split", REF_SPLIT,
        {"n": n, "r": r, "s": s, "b": b, "gamma_size": len(gamma)},
        not failures, "; ".join(sorted(set(failures))[:3]),
    )
    return left, right, res


def morita_count_check(gamma: list[MultiComposition], params: Params) -> list[CheckResult]:
    """Level-wise counting consistency plus the theta-compatibility law.

    Counts: the multipartition members of Gamma are in bijection with the
    disjoint union over b of products of the split multipartition sets.
    Identity: theta_b(m_lam) agrees with the embedded tensor product
    m_sigma (x) m_tau acting on v_b, for every split member of the slice.
    """
    s = params.require_split()
    suite = MoritaSuite(params)
    if not suite.fs:
        raise GateError("the Morita transfer needs the separation product to be nonzero")
    n, r = params.n, params.r
    if not saturated_check(gamma, n, r):
        raise ValueError("the index set is not saturated")
    out = []
    gamma_plus = [lam for lam in multipartitions(n, r) if lam in set(gamma)]
    total = 0
    for b in range(n + 1):
        left, right, res = gamma_split(gamma, n, r, s, b)
        out.append(res)
        lplus = sum(1 for x in left if x.is_partition())
        rplus = sum(1 for y in right if y.is_partition())
        total += lplus * rplus
    out.append(result(
        "schur.count_consistency", REF_COUNT, params.describe(),
        total == len(gamma_plus),
        f"sum of split products {total} vs |Gamma^+| = {len(gamma_plus)}",
    ))

    alg = suite.alg
    failures = []
    for b in range(n + 1):
        ta = suite.tensor_algebra(b)
        vb = suite.v_elem(b)
        for lam in gamma:
            if sum(lam.component_sizes()[:s]) != b:
                continue
            sigma = MultiComposition(lam.components[:s])
            tau = MultiComposition(lam.components[s:])
            lhs = alg.theta_b(b, alg.m_lambda(lam))
            rhs = suite.theta_map(b, ta.tensor(ta.left.m_lambda(sigma), ta.right.m_lambda(tau))) * vb
            if lhs != rhs:
                failures.append(lam.serialize())
    out.append(result(
        "schur.theta_module_image", REF_THETA_M, params.describe(),
        not failures, "; ".join(failures[:3]),
    ))
    return out


def hom_suite(params: Params, max_dim: int = 5000) -> list[CheckResult]:
    """Hom-space dimension checks for every pair of multicompositions."""
    from .tableaux import multicompositions

    alg = ArikiKoikeAlgebra(params, max_dim=max_dim)
    out = []
    shapes = multicompositions(params.n, params.r)
    for mu in shapes:
        for nu in shapes:
            data = hom_space(mu, nu, alg)
            ok = (
                data["dim"] == data["expected"]
                and data["members_inside"]
                and data["members_independent"]
            )
            out.append(result(
                "schur.hom_space", REF_HOM,
                dict(params.describe(), mu=mu.serialize(), nu=nu.serialize()),
                ok,
                f"solved {data['dim']}, semistandard {data['expected']}",
            ))
    return out


def schur_suite(params: Params, max_dim: int = 5000) -> list[CheckResult]:
    """The Schur-side verification battery for Gamma = all multipartitions."""
    from .tableaux import multicompositions

    out = hom_suite(params, max_dim=max_dim)
    gamma = list(multipartitions(params.n, params.r))
    out.append(result(
        "schur.saturated", REF_SATURATED, params.describe(),
        saturated_check(gamma, params.n, params.r), "Gamma = all multipartitions",
    ))
    dim = schur_dimension(gamma, params)
    cross = 0
    alg = ArikiKoikeAlgebra(params, max_dim=max_dim)
    for mu in gamma:
        for nu in gamma:
            cross += hom_space(mu, nu, alg)["dim"]
    out.append(result(
        "schur.dimension", REF_DIMENSION, params.describe(),
        dim == cross, f"semistandard dimension {dim}, summed hom dimensions {cross}",
    ))
    if params.s is not None and params.s < params.r:
        out += morita_count_check(gamma, params)
        gamma_all = list(multicompositions(params.n, params.r))
        out += morita_count_check(gamma_all, params)
    return out
