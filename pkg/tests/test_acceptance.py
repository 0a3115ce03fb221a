"""Acceptance criteria, one test per criterion.

Every check is exact (zero tolerance); time budgets are asserted where one
is stated.  Run with ``pytest -v -s tests/test_acceptance.py`` to see one
pass line per criterion.
"""

import random
import time
from fractions import Fraction
from math import comb, factorial

from ariki_koike.algebra import ArikiKoikeAlgebra, random_element
from ariki_koike.cli import main as cli_main
from ariki_koike.fields import Params, PrimeField, Rationals, f_s_value, poincare
from ariki_koike.linalg import rank
from ariki_koike.morita import MoritaSuite
from ariki_koike.report import all_ok
from ariki_koike.schur import gamma_split, hom_space, morita_count_check
from ariki_koike.specht import decomposition_matrix, gram_matrix
from ariki_koike.suites import relations_suite
from ariki_koike.tableaux import (
    lambda_sets,
    multicompositions,
    multipartitions,
    std_filtered,
    std_tableaux,
    strictly_dominates,
    tableau_dominates,
    tableau_residue,
)

QLIST = (1, 5, 7)


def params_for(n, r, field=None, q=2, Q=None, s=None):
    return Params(field=field or Rationals(), q=q, Q=Q or QLIST[:r], n=n, r=r, s=s)


def announce(number, ok, detail, started):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number:02d} {status}: {detail} [{time.time() - started:.1f}s]")
    assert ok


def test_criterion_01_rank_closure():
    t0 = time.time()
    ok = True
    for (n, r) in [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)]:
        alg = ArikiKoikeAlgebra(params_for(n, r))
        basis = set(alg.basis())
        ok &= len(basis) == r ** n * factorial(n)
        for mono in alg.basis():
            for g in range(n):
                ok &= all(k in basis for k in alg._mono_times_gen(mono, g))
    elapsed = time.time() - t0
    announce(1, ok and elapsed < 60, "normal-form basis closed at rank r^n n! for all five (n, r)", t0)


def test_criterion_02_defining_relations():
    t0 = time.time()
    ok = True
    for n in (1, 2, 3):
        for r in (1, 2, 3):
            res = relations_suite(params_for(n, r), seed=11)
            wanted = {"relations.defining", "relations.commutation", "relations.basis_closure"}
            ok &= all(e.ok for e in res if e.check in wanted)
    elapsed = time.time() - t0
    announce(2, ok and elapsed < 60, "defining and commutation relations hold for n <= 3, r <= 3", t0)


def test_criterion_03_cellular_transition():
    t0 = time.time()
    ok = True
    for n in (1, 2, 3):
        for r in (1, 2):
            alg = ArikiKoikeAlgebra(params_for(n, r))
            trans = alg.transition()
            ok &= rank(trans.matrix) == alg.dim
    alg22 = ArikiKoikeAlgebra(params_for(2, 2))
    trans22 = alg22.transition()
    rng = random.Random(99)
    for _ in range(100):
        e = random_element(alg22, rng)
        ok &= trans22.combine(trans22.express(e)) == e
    elapsed = time.time() - t0
    announce(3, ok and elapsed < 120,
             "cellular transition invertible (n <= 3, r <= 2), 100 seeded round trips exact", t0)


def test_criterion_04_residue_triangularity():
    t0 = time.time()
    ok = True
    for n in (1, 2, 3):
        for r in (1, 2):
            params = params_for(n, r)
            alg = ArikiKoikeAlgebra(params)
            trans = alg.transition()
            for lam in multipartitions(n, r):
                for s in std_tableaux(lam):
                    for t in std_tableaux(lam):
                        mst = alg.m_st(s, t)
                        for k in range(1, n + 1):
                            coords = trans.express(alg.gen_L(k) * mst)
                            ok &= coords.get((lam, s, t), alg.field.zero) == tableau_residue(s, k, params)
                            for (mu, u, v), _c in coords.items():
                                if mu != lam:
                                    ok &= strictly_dominates(mu, lam)
                                else:
                                    ok &= v == t
                                    if u != s:
                                        ok &= tableau_dominates(u, s)
    announce(4, ok, "commuting-generator action triangular with residue diagonal, exhaustively", t0)


def test_criterion_05_morita_suite():
    t0 = time.time()
    ok = True
    fs2 = f_s_value(params_for(2, 2, Q=(1, 5), s=1))
    ok &= fs2 == Fraction(-54)
    for n in (1, 2, 3):
        p = params_for(n, 2, Q=(1, 5), s=1)
        ok &= f_s_value(p) != 0
        suite = MoritaSuite(p)
        results = suite.run_all()
        ok &= all_ok(results)
    elapsed = time.time() - t0
    announce(5, ok and elapsed < 300,
             "full Morita battery exact at n <= 3, r = 2, s = 1, q = 2, Q = (1,5)", t0)


def test_criterion_06_rank_counting():
    t0 = time.time()
    ok = True
    for n in range(0, 5):
        for r in (2, 3):
            for s in range(1, r):
                for b in range(n + 1):
                    level, _ = lambda_sets(n, r, s, b)
                    got = sum(
                        len(std_filtered(lam, b, s, two_sided=True)) * len(std_tableaux(lam))
                        for lam in level
                    )
                    want = comb(n, b) * s ** b * factorial(b) * (r - s) ** (n - b) * factorial(n - b)
                    ok &= got == want
    elapsed = time.time() - t0
    announce(6, ok and elapsed < 30,
             "combinatorial rank formula for every level, n <= 4, r <= 3, every split", t0)


def test_criterion_07_semisimple_regime():
    t0 = time.time()
    ok = True
    for n in (1, 2, 3):
        for r in (1, 2):
            p = params_for(n, r, Q=(1, 5)[:r])
            ok &= poincare(p) != 0
            alg = ArikiKoikeAlgebra(p)
            total = 0
            for lam in multipartitions(n, r):
                g = gram_matrix(alg, lam)
                d = rank(g)
                ok &= d == len(g)  # nonsingular Gram matrix
                total += d * d
            ok &= total == alg.dim
    announce(7, ok, "semisimple regime: nonsingular forms and square-sum count, n <= 3, r <= 2", t0)


def test_criterion_08_factorization():
    t0 = time.time()
    ok = True
    # dimension factorizations over the rationals, n <= 3
    for n in (1, 2, 3):
        suite = MoritaSuite(params_for(n, 2, Q=(1, 5), s=1))
        ok &= all_ok(suite.verify_factorization())
    # and over GF(5) with a split (separation product nonzero) parameter set;
    # the q-connected choice Q_2 = q Q_1 is excluded by the hypothesis gate
    # itself (criterion 10), so the factorization runs at Q = (1, 2), q = 4
    for n in (1, 2, 3):
        p5 = params_for(n, 2, field=PrimeField(5), q=4, Q=(1, 2), s=1)
        assert f_s_value(p5) != 0
        suite5 = MoritaSuite(p5)
        ok &= all_ok(suite5.verify_factorization())
    # chop determinism and the frozen regression fixture at the q-connected
    # parameters, where the plain decomposition machinery still runs
    pconn = params_for(2, 2, field=PrimeField(5), q=4, Q=(1, 4), s=1)
    data1 = decomposition_matrix(pconn)
    data2 = decomposition_matrix(pconn)
    ok &= data1.matrix == data2.matrix == [[1, 0], [1, 0], [1, 1], [0, 1], [0, 1]]
    elapsed = time.time() - t0
    announce(8, ok and elapsed < 300,
             "cell/simple dimension and decomposition-number factorizations, Q and GF(5)", t0)


def test_criterion_09_schur_counts():
    t0 = time.time()
    ok = True
    for n in (1, 2):
        for r in (1, 2):
            p = params_for(n, r, Q=(1, 5)[:r])
            alg = ArikiKoikeAlgebra(p)
            for mu in multicompositions(n, r):
                for nu in multicompositions(n, r):
                    data = hom_space(mu, nu, alg)
                    ok &= data["dim"] == data["expected"]
                    ok &= data["members_inside"] and data["members_independent"]
    for n in (1, 2, 3):
        gam = multipartitions(n, 2)
        for b in range(n + 1):
            _, _, res = gamma_split(gam, n, 2, 1, b)
            ok &= res.ok
    res22 = morita_count_check(multipartitions(2, 2), params_for(2, 2, Q=(1, 5), s=1))
    ok &= all_ok(res22)
    counts = [r for r in res22 if r.check == "schur.count_consistency"]
    ok &= len(counts) == 1 and "5 vs |Gamma^+| = 5" in counts[0].detail
    elapsed = time.time() - t0
    announce(9, ok and elapsed < 120,
             "Hom dimensions match semistandard counts; poset splits; level counts 5 = 5", t0)


def test_criterion_10_gate_behavior(capsys):
    t0 = time.time()
    ok = True
    for Q2 in ("2", "1/2"):  # Q_2 = q^{+1} Q_1 and q^{-1} Q_1
        code = cli_main([
            "verify", "--suite", "morita", "--n", "2", "--r", "2", "--s", "1",
            "--q", "2", "--Q", f"1,{Q2}",
        ])
        captured = capsys.readouterr()
        ok &= code == 2
        ok &= "f_s" in captured.err
        ok &= captured.out.strip() == ""  # no spurious identity failures
    with capsys.disabled():
        announce(10, ok, "q-connected parameters refuse with exit 2 and a hypothesis diagnostic", t0)
