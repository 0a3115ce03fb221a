"""Specht modules, Gram matrices, simple dimensions, blocks, decomposition numbers.

The Specht module attached to a multipartition is realized concretely: its
basis is the set of standard tableaux, and the generator action matrices are
obtained by multiplying cellular basis representatives and re-expanding in
the cellular basis, discarding the part supported on strictly dominating
shapes.  The bilinear form comes from the cellular structure constants, its
radical gives the simple quotients, and composition multiplicities over a
prime field are computed by a deterministic chop that exhaustively splits
off minimal invariant subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ArikiKoikeAlgebra
from .fields import ComputationError, GateError, Params, SizeGuardError
from .linalg import nullspace, rank, row_echelon
from .tableaux import (
    MultiPartition,
    StandardTableau,
    content,
    dominates,
    multipartitions,
    sort_key,
    std_tableaux,
    strictly_dominates,
    t_row,
)

MAX_LINES = 200_000  # cap on the number of projective lines the chop may scan


@dataclass
class SpechtModule:
    """Right module on the standard-tableau basis; action[g][i][j] is the
    coefficient of basis[j] in basis[i] * T_g."""

    lam: MultiPartition
    basis: list[StandardTableau]
    action: list[list[list]]  # one matrix per generator T_0..T_{n-1}

    @property
    def dim(self) -> int:
        return len(self.basis)


def specht_module(alg: ArikiKoikeAlgebra, lam: MultiPartition) -> SpechtModule:
    """Action matrices of every generator on the cell module of shape lam."""
    tabs = std_tableaux(lam)
    index = {t: i for i, t in enumerate(tabs)}
    top = t_row(lam)
    trans = alg.transition()
    gens = max(alg.n, 1)
    matrices = [[[alg.field.zero] * len(tabs) for _ in tabs] for _ in range(gens)]
    for i, t in enumerate(tabs):
        rep = alg.m_st(top, t)
        for g in range(alg.n):
            coords = trans.express(rep * alg.gen_T(g))
            for (mu, u, v), c in coords.items():
                if mu == lam:
                    if u != top:
                        raise ComputationError(
                            "cellular expansion moved the frozen first tableau"
                        )
                    matrices[g][i][index[v]] = c
                elif not strictly_dominates(mu, lam):
                    raise ComputationError(
                        "cellular expansion escaped to a non-dominating shape"
                    )
    return SpechtModule(lam, tabs, matrices[: alg.n])


def gram_matrix(alg: ArikiKoikeAlgebra, lam: MultiPartition) -> list[list]:
    """Gram matrix of the cellular form: entry (s,t) is the coefficient of
    m_{t^lam t^lam} in m_{t^lam s} * m_{t t^lam}."""
    tabs = std_tableaux(lam)
    top = t_row(lam)
    if alg.n == 0:
        return [[alg.field.one]]
    trans = alg.transition()
    top_cell = (lam, top, top)
    g = []
    for s in tabs:
        left = alg.m_st(top, s)
        row = []
        for t in tabs:
            prod = left * alg.m_st(t, top)
            coords = trans.express(prod)
            row.append(coords.get(top_cell, alg.field.zero))
        g.append(row)
    return g


def dim_simple(alg: ArikiKoikeAlgebra, lam: MultiPartition) -> int:
    """dim D^lam = rank of the Gram matrix (0 means the simple vanishes)."""
    return rank(gram_matrix(alg, lam))


def block_partition(params: Params, max_dim: int | None = None) -> list[list[MultiPartition]]:
    """Group multipartitions by content multiset (a block invariant).

    Needs q != 1: at q = 1 the residues q^{j-i} Q_k collapse and the content
    criterion requires a modified residue definition that is out of scope.
    """
    if params.q == params.field.one:
        raise GateError("block partition by content requires q != 1")
    groups: dict[tuple, list[MultiPartition]] = {}
    for lam in multipartitions(params.n, params.r):
        groups.setdefault(content(lam, params), []).append(lam)
    keyed = sorted(groups.values(), key=lambda g: sort_key(g[0]))
    return keyed


# -- composition factors over a prime field ----------------------------------


def _reduce_by_rows(vec: list, rows: list[list], pivots: list[int]) -> list:
    vec = list(vec)
    for row, pc in zip(rows, pivots):
        if vec[pc]:
            c = vec[pc]
            vec = [a - c * b for a, b in zip(vec, row)]
    return vec


def _pivot_cols(rows: list[list]) -> list[int]:
    return [next(i for i, x in enumerate(row) if x) for row in rows]


def spin(vectors: list[list], action: list[list[list]], field) -> list[list]:
    """Row-space closure of `vectors` under right multiplication by the action."""
    basis: list[list] = []
    pivots: list[int] = []

    def insert(v):
        v = _reduce_by_rows(v, basis, pivots)
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return None
        inv = v[lead]
        v = [x / inv for x in v]
        for i, row in enumerate(basis):
            if row[lead]:
                c = row[lead]
                basis[i] = [a - c * b for a, b in zip(row, v)]
        basis.append(v)
        pivots.append(lead)
        return v

    queue = [list(v) for v in vectors]
    while queue:
        inserted = insert(queue.pop())
        if inserted is not None:
            for mat in action:
                queue.append(_vector_matrix(inserted, mat, field))
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [basis[i] for i in order]


def _vector_matrix(v: list, mat: list[list], field) -> list:
    out = [field.zero] * len(mat[0]) if mat else []
    for i, x in enumerate(v):
        if x:
            row = mat[i]
            out = [acc + x * m for acc, m in zip(out, row)]
    return out


def submodule_action(rows: list[list], action: list[list[list]], field) -> list[list[list]]:
    """Restrict the action to the invariant row space spanned by `rows` (RREF)."""
    pivots = _pivot_cols(rows)
    mats = []
    for mat in action:
        sub = []
        for row in rows:
            img = _vector_matrix(row, mat, field)
            coeffs = [img[pc] for pc in pivots]
            check = list(img)
            for c, brow in zip(coeffs, rows):
                check = [a - c * b for a, b in zip(check, brow)]
            if any(check):
                raise ComputationError("subspace is not invariant")
            sub.append(coeffs)
        mats.append(sub)
    return mats


def quotient_action(rows: list[list], action: list[list[list]], dim: int, field) -> list[list[list]]:
    """Action on the quotient by the invariant row space spanned by `rows`."""
    pivots = _pivot_cols(rows)
    free = [j for j in range(dim) if j not in set(pivots)]
    mats = []
    for mat in action:
        q = []
        for j in free:
            e = [field.zero] * dim
            e[j] = field.one
            img = _vector_matrix(e, mat, field)
            img = _reduce_by_rows(img, rows, pivots)
            q.append([img[k] for k in free])
        mats.append(q)
    return mats


def _lines(dim: int, field):
    """All projective lines of field^dim, normalized with leading entry 1."""
    p = field.characteristic
    if p == 0:
        raise ComputationError("the chop works over prime fields only")
    count = sum(p ** (dim - 1 - i) for i in range(dim))
    if count > MAX_LINES:
        raise SizeGuardError(f"{count} lines exceed the chop guard {MAX_LINES}")
    values = [field(v) for v in range(p)]
    import itertools

    for lead in range(dim):
        for tail in itertools.product(values, repeat=dim - 1 - lead):
            vec = [field.zero] * lead + [field.one] + list(tail)
            yield vec


def composition_factors(action: list[list[list]], dim: int, field) -> list[tuple[int, list[list[list]]]]:
    """Composition series factors as (dim, action matrices), by minimal-spin chop.

    Deterministic: lines are scanned in a fixed order and the first spin of
    minimal dimension is split off.  A minimal spin is necessarily a simple
    submodule, but the recursion does not rely on that.
    """
    if dim == 0:
        return []
    best: list[list] | None = None
    for v in _lines(dim, field):
        w = spin([v], action, field)
        if best is None or len(w) < len(best):
            best = w
        if len(best) == 1:
            break
    assert best is not None
    if len(best) == dim:
        return [(dim, action)]
    sub = submodule_action(best, action, field)
    quo = quotient_action(best, action, dim, field)
    return composition_factors(sub, len(best), field) + composition_factors(
        quo, dim - len(best), field
    )


def module_fingerprint(alg: ArikiKoikeAlgebra, action: list[list[list]], dim: int) -> tuple:
    """Trace of the action of every normal-form basis monomial.

    Characters of pairwise non-isomorphic absolutely irreducible modules are
    linearly independent, so this tuple identifies a simple module exactly.
    """
    field = alg.field
    traces = []
    ident = [[field.one if i == j else field.zero for j in range(dim)] for i in range(dim)]
    for mono in alg.basis():
        word, e = alg._gen_word(mono)
        mat = ident
        for g in word:
            mat = _mat_mul(mat, action[g], field)
        scale = alg.params.q_power(-e)
        tr = field.zero
        for i in range(dim):
            tr = tr + mat[i][i]
        traces.append(tr * scale)
    return tuple(traces)


def _mat_mul(a, b, field):
    if not a or not b:
        return a
    cols = len(b[0])
    out = []
    for row in a:
        new = [field.zero] * cols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                new = [acc + x * y for acc, y in zip(new, brow)]
        out.append(new)
    return out


@dataclass
class DecompositionData:
    rows: list[MultiPartition]  # all multipartitions
    cols: list[MultiPartition]  # those with a nonzero simple quotient
    matrix: list[list[int]]
    simple_dims: dict[MultiPartition, int]


def decomposition_matrix(params: Params, max_dim: int | None = None) -> DecompositionData:
    """Composition multiplicities of the simple modules in every cell module.

    Only over GF(p).  Validates unitriangularity against dominance and the
    dimension bookkeeping identity before returning.
    """
    if params.field.characteristic == 0:
        raise GateError("decomposition matrices are computed over prime fields")
    alg = ArikiKoikeAlgebra(params, max_dim=max_dim or 5000)
    field = params.field
    lams = multipartitions(params.n, params.r)
    modules = {lam: specht_module(alg, lam) for lam in lams}
    grams = {lam: gram_matrix(alg, lam) for lam in lams}
    simple_dims = {lam: rank(grams[lam]) for lam in lams}
    cols = [lam for lam in lams if simple_dims[lam] > 0]

    # Reference fingerprints of the simple quotients D^mu = S^mu / rad.
    ref: dict[tuple, MultiPartition] = {}
    for mu in cols:
        rad_rows = nullspace(grams[mu], field)
        if rad_rows:
            work = [list(r) for r in rad_rows]
            row_echelon(work)
            act = quotient_action(work, modules[mu].action, modules[mu].dim, field)
            d = simple_dims[mu]
        else:
            act = modules[mu].action
            d = modules[mu].dim
        fp = (d, module_fingerprint(alg, act, d))
        if fp in ref:
            raise ComputationError(
                f"fingerprint collision between simples {ref[fp].serialize()} and {mu.serialize()}"
            )
        ref[fp] = mu

    matrix = []
    for lam in lams:
        counts = {mu: 0 for mu in cols}
        for d, act in composition_factors(modules[lam].action, modules[lam].dim, field):
            fp = (d, module_fingerprint(alg, act, d))
            if fp not in ref:
                raise ComputationError(
                    f"composition factor of {lam.serialize()} matches no simple module"
                )
            counts[ref[fp]] += 1
        matrix.append([counts[mu] for mu in cols])

    data = DecompositionData(lams, cols, matrix, simple_dims)
    _validate_decomposition(data, modules)
    return data


def _validate_decomposition(data: DecompositionData, modules) -> None:
    col_index = {mu: j for j, mu in enumerate(data.cols)}
    for i, lam in enumerate(data.rows):
        total = 0
        for j, mu in enumerate(data.cols):
            d = data.matrix[i][j]
            if d and not dominates(lam, mu):
                raise ComputationError("decomposition matrix violates dominance triangularity")
            total += d * data.simple_dims[mu]
        if total != modules[lam].dim:
            raise ComputationError("decomposition matrix fails the dimension bookkeeping")
    for mu in data.cols:
        if data.matrix[data.rows.index(mu)][col_index[mu]] != 1:
            raise ComputationError("decomposition matrix has a diagonal entry != 1")


def decomposition_to_tsv(data: DecompositionData) -> str:
    header = "shape\\simple\t" + "\t".join(mu.serialize() for mu in data.cols)
    lines = [header]
    for lam, row in zip(data.rows, data.matrix):
        lines.append(lam.serialize() + "\t" + "\t".join(str(x) for x in row))
    return "\n".join(lines)


def gram_to_tsv(alg: ArikiKoikeAlgebra, lam: MultiPartition) -> str:
    tabs = std_tableaux(lam)
    g = gram_matrix(alg, lam)
    header = lam.serialize() + "\t" + "\t".join(t.serialize() for t in tabs)
    lines = [header]
    for t, row in zip(tabs, g):
        lines.append(t.serialize() + "\t" + "\t".join(str(x) for x in row))
    return "\n".join(lines)
