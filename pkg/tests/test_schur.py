import pytest

from ariki_koike.algebra import ArikiKoikeAlgebra
from ariki_koike.fields import Params, Rationals
from ariki_koike.report import all_ok
from ariki_koike.schur import (
    gamma_split,
    hom_space,
    morita_count_check,
    saturated_check,
    schur_dimension,
)
from ariki_koike.tableaux import (
    MultiComposition,
    MultiPartition,
    multicompositions,
    multipartitions,
    omega,
    std_tableaux,
)


def qparams(n=2, r=2, q=2, Q=(1, 5), s=1):
    return Params(field=Rationals(), q=q, Q=Q, n=n, r=r, s=s)


def test_saturated_examples():
    lams = multipartitions(2, 2)
    assert saturated_check(lams, 2, 2)
    assert saturated_check(multicompositions(2, 2), 2, 2)
    # the least multipartition alone misses its dominators
    bottom = [omega(2, 2)]
    assert not saturated_check(bottom, 2, 2)


def test_schur_dimension_frozen_values():
    assert schur_dimension(multipartitions(1, 1), qparams(n=1, r=1, Q=(1,), s=None)) == 1
    # the single-component case at n = 2 (computed by tableau enumeration)
    assert schur_dimension(multipartitions(2, 1), qparams(n=2, r=1, Q=(1,), s=None)) == 5
    assert schur_dimension(multipartitions(2, 2), qparams()) == 55


def test_schur_dimension_requires_saturation():
    with pytest.raises(ValueError):
        schur_dimension([omega(2, 2)], qparams())


def test_hom_space_all_pairs_small():
    for (n, r) in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        params = Params(field=Rationals(), q=2, Q=(1, 5)[:r], n=n, r=r)
        alg = ArikiKoikeAlgebra(params)
        for mu in multicompositions(n, r):
            for nu in multicompositions(n, r):
                data = hom_space(mu, nu, alg)
                assert data["dim"] == data["expected"]
                assert data["members_inside"] and data["members_independent"]


def test_hom_space_column_type_is_the_regular_count():
    params = qparams()
    alg = ArikiKoikeAlgebra(params)
    w = omega(2, 2)
    data = hom_space(w, w, alg)
    assert data["dim"] == 8  # sum over shapes of |Std|^2 = the full rank
    assert data["dim"] == sum(len(std_tableaux(l)) ** 2 for l in multipartitions(2, 2))


def test_gamma_split_levels():
    gam = multipartitions(3, 2)
    for b in range(4):
        left, right, res = gamma_split(gam, 3, 2, 1, b)
        assert res.ok
        level = [l for l in gam if sum(l.component_sizes()[:1]) == b]
        assert len(left) * len(right) == len(level)
    # empty slice splits into empty factors
    tiny = [MultiPartition([[2], []])]
    left, right, res = gamma_split(tiny, 2, 2, 1, 1)
    assert left == [] and right == [] and res.ok


def test_gamma_split_order_isomorphism_exhaustive():
    for (n, r, s) in [(2, 2, 1), (3, 2, 1), (3, 3, 2)]:
        for gam in (multipartitions(n, r), multicompositions(n, r)):
            for b in range(n + 1):
                _, _, res = gamma_split(gam, n, r, s, b)
                assert res.ok


def test_morita_count_check_both_sides_five():
    res = morita_count_check(multipartitions(2, 2), qparams())
    assert all_ok(res)
    counts = [r for r in res if r.check == "schur.count_consistency"]
    assert len(counts) == 1 and "5" in counts[0].detail


def test_morita_count_degenerate_end():
    # at b = n the right split factor contains only the empty shape
    gam = multipartitions(2, 2)
    left, right, res = gamma_split(gam, 2, 2, 1, 2)
    assert res.ok
    assert right == [MultiComposition([[]])]


def test_theta_module_image_identity():
    res = morita_count_check(multipartitions(2, 2), qparams())
    images = [r for r in res if r.check == "schur.theta_module_image"]
    assert len(images) == 1 and images[0].ok


def test_gamma_split_detects_non_product_slice():
    # A saturated set whose level slice is NOT a product: it contains
    # ((0,1),(1)) and ((1),(0,1)) but not ((0,1),(0,1)).  The product law
    # genuinely fails here and the check must say so rather than assume it.
    gam = multipartitions(2, 2) + [
        MultiComposition([[0, 1], [1]]),
        MultiComposition([[1], [0, 1]]),
    ]
    assert saturated_check(gam, 2, 2)
    _, _, res = gamma_split(gam, 2, 2, 1, 1)
    assert not res.ok
    assert "not bijective" in res.detail
