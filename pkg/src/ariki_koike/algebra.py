"""The Ariki-Koike algebra H_{q,Q}(n) in its normal-form basis.

Elements are sparse linear combinations of the rank-r^n.n! basis

    L_1^{d_1} L_2^{d_2} ... L_n^{d_n} T_w,   0 <= d_m <= r-1,  w in S_n,

where L_1 = T_0 and L_{i+1} = q^{-1} T_i L_i T_i.  Products are computed by
rewriting: the right factor is expanded into a generator word (every L_k is a
scalar multiple of T_{k-1}...T_1 T_0 T_1...T_{k-1}) and folded generator by
generator into the left factor.  Right multiplication by T_i (i >= 1) is the
usual two-case Hecke rule; right multiplication by T_0 pushes an L_1 leftward
through the T-word with the local moves

    T_i L_j     = L_j T_i                      (j != i, i+1),
    T_i L_i     = L_{i+1} T_i - (q-1) L_{i+1},
    T_i L_{i+1} = L_i T_i     + (q-1) L_{i+1}.

An exponent that overflows to d_m = r is eliminated through the normal form
of L_m^r, computed once per m by induction on m: the cyclotomic relation
handles m = 1, and

    L_m^r = q^{-1} T_{m-1} L_{m-1}^r T_{m-1}
            + q^{-1}(q-1) * sum_{k=1}^{r-1} T_{m-1} L_{m-1}^{r-k} L_m^k

descends to m - 1 without ever re-creating an out-of-bound power.  Each
substitution strictly decreases the r-adic weight sum_m d_m r^m, so the
rewriting terminates; confluence is certified by the closure, associativity
and defining-relation test batteries rather than by proof.
"""

from __future__ import annotations

import itertools

from .fields import Params, SizeGuardError
from .linalg import inverse as mat_inverse
from .perms import Permutation, identity, simple_transposition, sorted_permutations, w_ab
from .tableaux import (
    MultiComposition,
    MultiPartition,
    SemistandardTableau,
    StandardTableau,
    d_of,
    mu_map,
    multipartitions,
    std_tableaux,
)
from .perms import young_subgroup

Monomial = tuple[tuple[int, ...], Permutation]

DEFAULT_MAX_DIM = 5000


class Element:
    """A sparse element of the algebra, kept in normal form."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "ArikiKoikeAlgebra", terms: dict):
        self.alg = alg
        self.terms = terms

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return Element(self.alg, out)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, -c)
        return Element(self.alg, out)

    def __neg__(self) -> "Element":
        return Element(self.alg, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "Element":
        c = self.alg.field(c)
        if not c:
            return self.alg.zero()
        return Element(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return self.alg._product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, Element) and self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def star(self) -> "Element":
        """The anti-automorphism fixing every generator: T_w -> T_{w^{-1}}, L_k -> L_k."""
        alg = self.alg
        out: dict = {}
        zero_exp = (0,) * alg.n
        for (d, w), c in self.terms.items():
            flipped = alg._product_terms({(zero_exp, w.inverse()): alg.field.one}, {(d, identity(alg.n)): c})
            for k, v in flipped.items():
                _accumulate(out, k, v)
        return Element(alg, out)

    def coefficient(self, mono: Monomial):
        return self.terms.get(mono, self.alg.field.zero)

    def support(self) -> list[Monomial]:
        return sorted(self.terms, key=_mono_key)

    def __repr__(self):
        if not self.terms:
            return "<0>"
        return "<" + " + ".join(f"{c}*{_mono_str(m)}" for m, c in sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]))) + ">"

    def serialize(self) -> str:
        """One term per line: ``coeff * L1^d1 ... Ln^dn * T[i1,...,in]``."""
        lines = []
        for (d, w) in self.support():
            c = self.terms[(d, w)]
            lpart = " ".join(f"L{k}^{d[k - 1]}" for k in range(1, self.alg.n + 1)) or "1"
            wpart = "T[" + ",".join(str(x) for x in w.images) + "]"
            lines.append(f"{c} * {lpart} * {wpart}")
        return "\n".join(lines)

    def _check(self, other: "Element"):
        if self.alg is not other.alg:
            raise ValueError("elements belong to different algebras")


def _accumulate(store: dict, key, value):
    cur = store.get(key)
    if cur is None:
        if value:
            store[key] = value
        return
    cur = cur + value
    if cur:
        store[key] = cur
    else:
        del store[key]


def _mono_key(mono: Monomial):
    d, w = mono
    return (d, w.images)


def _mono_str(mono: Monomial) -> str:
    d, w = mono
    lpart = "".join(f"L{k}^{d[k-1]}" for k in range(1, len(d) + 1) if d[k - 1])
    return (lpart or "1") + ("" if w.is_identity() else "T" + str(list(w.images)))


class ArikiKoikeAlgebra:
    """Arithmetic context for H_{q,Q}(n): caches, basis, structural elements."""

    def __init__(self, params: Params, max_dim: int = DEFAULT_MAX_DIM):
        self.params = params
        self.field = params.field
        self.n = params.n
        self.r = params.r
        self.q = params.q
        self.Q = params.Q
        self.max_dim = max_dim
        self._push_cache: dict[Permutation, list] = {}
        self._hecke_cache: dict[tuple[Permutation, Permutation], dict] = {}
        self._Lr_cache: dict[int, dict] = {}
        self._normalL_cache: dict[tuple[int, ...], dict] = {}
        self._gen_cache: dict[tuple[Monomial, int], dict] = {}
        self._pow_cache: dict[tuple[int, int], list] = {}
        self._basis: list[Monomial] | None = None
        self._basis_index: dict[Monomial, int] | None = None
        self._transition: "TransitionMatrix | None" = None
        self._qm1 = self.q - self.field.one

    # -- basic elements ------------------------------------------------------

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {((0,) * self.n, identity(self.n)): self.field.one})

    def element(self, terms: dict) -> Element:
        return Element(self, {k: v for k, v in terms.items() if v})

    def from_scalar(self, c) -> Element:
        return self.one().scale(c)

    def gen_T(self, i: int) -> Element:
        """The generator T_i; T_0 is L_1."""
        if i == 0:
            return self.gen_L(1)
        if not (1 <= i <= self.n - 1):
            raise ValueError(f"T_{i} does not exist for n={self.n}")
        return self.element({((0,) * self.n, simple_transposition(i, self.n)): self.field.one})

    def gen_L(self, k: int) -> Element:
        """The commuting element L_k (already reduced when r = 1)."""
        if not (1 <= k <= self.n):
            raise ValueError(f"L_{k} does not exist for n={self.n}")
        exp = tuple(1 if m == k else 0 for m in range(1, self.n + 1))
        return self.element(dict(self._normal_L(exp)))

    def t_elem(self, w: Permutation) -> Element:
        if w.n != self.n:
            raise ValueError("permutation size mismatch")
        return self.element({((0,) * self.n, w): self.field.one})

    # -- the canonical basis ---------------------------------------------------

    @property
    def dim(self) -> int:
        out = 1
        for k in range(1, self.n + 1):
            out *= self.r * k
        return out

    def basis(self) -> list[Monomial]:
        """All normal-form monomials, exponents-lex then permutation-lex."""
        if self._basis is None:
            monos = [
                (d, w)
                for d in itertools.product(range(self.r), repeat=self.n)
                for w in sorted_permutations(self.n)
            ]
            monos.sort(key=_mono_key)
            self._basis = monos
            self._basis_index = {m: i for i, m in enumerate(monos)}
        return self._basis

    def basis_index(self) -> dict[Monomial, int]:
        self.basis()
        return self._basis_index  # type: ignore[return-value]

    def vec(self, elem: Element) -> list:
        idx = self.basis_index()
        out = [self.field.zero] * len(idx)
        for mono, c in elem.terms.items():
            out[idx[mono]] = c
        return out

    def from_vec(self, v) -> Element:
        basis = self.basis()
        return self.element({basis[i]: c for i, c in enumerate(v) if c})

    def left_mult_matrix(self, elem: Element) -> list[list]:
        """Columns are vec(elem * mono) over the canonical basis."""
        cols = [self.vec(elem * self.element({mono: self.field.one})) for mono in self.basis()]
        return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]

    # -- multiplication engine -------------------------------------------------

    def _gen_word(self, mono: Monomial) -> tuple[list[int], int]:
        """Generator word for L^d T_w and the power e with L^d T_w = q^{-e} * word."""
        d, w = mono
        word: list[int] = []
        e = 0
        for k in range(1, self.n + 1):
            for _ in range(d[k - 1]):
                word.extend(range(k - 1, 0, -1))
                word.append(0)
                word.extend(range(1, k))
                e += k - 1
        word.extend(w.reduced_word())
        return word, e

    def _product(self, a: Element, b: Element) -> Element:
        return Element(self, self._product_terms(a.terms, b.terms))

    def _product_terms(self, aterms: dict, bterms: dict) -> dict:
        out: dict = {}
        if not aterms or not bterms:
            return out
        for mono, c in bterms.items():
            word, e = self._gen_word(mono)
            cur = aterms
            for g in word:
                cur = self._terms_times_gen(cur, g)
            scale = self.params.q_power(-e) * c
            for k, v in cur.items():
                _accumulate(out, k, v * scale)
        return out

    def _terms_times_gen(self, terms: dict, g: int) -> dict:
        out: dict = {}
        for mono, c in terms.items():
            for k, v in self._mono_times_gen(mono, g).items():
                _accumulate(out, k, v * c)
        return out

    def _mono_times_gen(self, mono: Monomial, g: int) -> dict:
        cached = self._gen_cache.get((mono, g))
        if cached is not None:
            return cached
        d, w = mono
        one = self.field.one
        out: dict = {}
        if g >= 1:
            ws = w.times_s(g)
            if ws.length() > w.length():
                out[(d, ws)] = one
            else:
                out[(d, ws)] = self.q
                out[(d, w)] = self._qm1
        else:
            for c, j, u in self._push_L1(w):
                e = list(d)
                e[j - 1] += 1
                e = tuple(e)
                if e[j - 1] < self.r:
                    _accumulate(out, (e, u), c)
                else:
                    for (h, x), c3 in self._normal_L(e).items():
                        for y, c4 in self._hecke_prod(x, u).items():
                            _accumulate(out, (h, y), c * c3 * c4)
        self._gen_cache[(mono, g)] = out
        return out

    def _push_L1(self, w: Permutation) -> list:
        """T_w L_1 as a list of (coeff, j, u) meaning sum coeff * L_j T_u."""
        cached = self._push_cache.get(w)
        if cached is not None:
            return cached
        one = self.field.one
        terms: dict[tuple[int, Permutation], object] = {(1, identity(self.n)): one}
        for i in reversed(w.reduced_word()):
            new: dict = {}
            for (j, u), c in terms.items():
                if j == i:
                    self._lhecke_into(new, i, u, i + 1, c)
                    _accumulate(new, (i + 1, u), -self._qm1 * c)
                elif j == i + 1:
                    self._lhecke_into(new, i, u, i, c)
                    _accumulate(new, (i + 1, u), self._qm1 * c)
                else:
                    self._lhecke_into(new, i, u, j, c)
            terms = new
        result = [(c, j, u) for (j, u), c in terms.items()]
        self._push_cache[w] = result
        return result

    def _lhecke_into(self, store: dict, i: int, u: Permutation, j: int, c):
        """Add c * L_j (T_i T_u) into store, applying the left Hecke rule."""
        su = u.s_times(i)
        if u.images[i - 1] < u.images[i]:
            _accumulate(store, (j, su), c)
        else:
            _accumulate(store, (j, su), self.q * c)
            _accumulate(store, (j, u), self._qm1 * c)

    def _hecke_prod(self, x: Permutation, v: Permutation) -> dict:
        """T_x T_v expanded over the T-basis: dict {y: coeff}."""
        if v.is_identity():
            return {x: self.field.one}
        cached = self._hecke_cache.get((x, v))
        if cached is not None:
            return cached
        cur: dict[Permutation, object] = {x: self.field.one}
        for g in v.reduced_word():
            new: dict = {}
            for w, c in cur.items():
                ws = w.times_s(g)
                if ws.length() > w.length():
                    _accumulate(new, ws, c)
                else:
                    _accumulate(new, ws, self.q * c)
                    _accumulate(new, w, self._qm1 * c)
            cur = new
        self._hecke_cache[(x, v)] = cur
        return cur

    def _Ti_L_pows(self, a: int, b: int) -> list:
        """T_i L_i^a L_{i+1}^b as [(x, y, has_t, coeff)]: sum coeff L_i^x L_{i+1}^y T_i^{has_t}.

        Valid for any i; exponents never exceed max(a, b) because the central
        product L_i L_{i+1} is pulled out first.
        """
        cached = self._pow_cache.get((a, b))
        if cached is not None:
            return cached
        m = min(a, b)
        one = self.field.one
        out: list = []
        if a >= b:
            c = a - b
            out.append((m, c + m, 1, one))
            for k in range(1, c + 1):
                out.append((c - k + m, k + m, 0, -self._qm1))
        else:
            c = b - a
            out.append((c + m, m, 1, one))
            for k in range(1, c + 1):
                out.append((c - k + m, k + m, 0, self._qm1))
        self._pow_cache[(a, b)] = out
        return out

    def _left_mul_gen_terms(self, terms: dict, i: int) -> dict:
        """T_i * (terms), for terms whose L-part is in bounds at positions i, i+1."""
        out: dict = {}
        for (d, w), c in terms.items():
            a, b = d[i - 1], d[i]
            for x, y, has_t, co in self._Ti_L_pows(a, b):
                e = list(d)
                e[i - 1] = x
                e[i] = y
                e = tuple(e)
                if has_t:
                    su = w.s_times(i)
                    if w.images[i - 1] < w.images[i]:
                        _accumulate(out, (e, su), co * c)
                    else:
                        _accumulate(out, (e, su), self.q * co * c)
                        _accumulate(out, (e, w), self._qm1 * co * c)
                else:
                    _accumulate(out, (e, w), co * c)
        return out

    def _L_pow_r(self, m: int) -> dict:
        """The normal form of L_m^r, supported on positions <= m."""
        cached = self._Lr_cache.get(m)
        if cached is not None:
            return cached
        zero_exp = [0] * self.n
        if m == 1:
            # cyclotomic relation: L_1^r = sum_j (-1)^{r-1-j} e_{r-j}(Q) L_1^j
            elem_sym = [self.field.one] + [self.field.zero] * self.r
            for Qt in self.Q:
                for j in range(self.r, 0, -1):
                    elem_sym[j] = elem_sym[j] + elem_sym[j - 1] * Qt
            out = {}
            sign = self.field.one
            for j in range(self.r - 1, -1, -1):
                exp = list(zero_exp)
                exp[0] = j
                coeff = sign * elem_sym[self.r - j]
                if coeff:
                    out[(tuple(exp), identity(self.n))] = coeff
                sign = -sign
        else:
            prev = self._L_pow_r(m - 1)
            qinv = self.field.one / self.q
            first = self._left_mul_gen_terms(prev, m - 1)
            first = self._terms_times_gen(first, m - 1)
            out = {}
            for k, v in first.items():
                _accumulate(out, k, v * qinv)
            for k in range(1, self.r):
                exp = list(zero_exp)
                exp[m - 2] = self.r - k
                exp[m - 1] = k
                single = {(tuple(exp), identity(self.n)): self.field.one}
                for key, v in self._left_mul_gen_terms(single, m - 1).items():
                    _accumulate(out, key, v * qinv * self._qm1)
        self._Lr_cache[m] = out
        return out

    def _normal_L(self, exp: tuple[int, ...]) -> dict:
        """Normal form of the pure L-monomial with (possibly large) exponents."""
        cached = self._normalL_cache.get(exp)
        if cached is not None:
            return cached
        if all(x < self.r for x in exp):
            out = {(exp, identity(self.n)): self.field.one}
        else:
            m = next(i + 1 for i, x in enumerate(exp) if x >= self.r)
            base = list(exp)
            base[m - 1] -= self.r
            out = {}
            for (f, v), c2 in self._L_pow_r(m).items():
                combined = tuple(bb + ff for bb, ff in zip(base, f))
                for (h, x), c3 in self._normal_L(combined).items():
                    for y, c4 in self._hecke_prod(x, v).items():
                        _accumulate(out, (h, y), c2 * c3 * c4)
        self._normalL_cache[exp] = out
        return out

    # -- structural elements ----------------------------------------------------

    def u_at(self, a: int, t: int) -> Element:
        """The product (L_1 - Q_t)(L_2 - Q_t)...(L_a - Q_t)."""
        if not (0 <= a <= self.n and 1 <= t <= self.r):
            raise ValueError("u_{a,t} index out of range")
        out = self.one()
        for k in range(1, a + 1):
            out = out * (self.gen_L(k) - self.from_scalar(self.Q[t - 1]))
        return out

    def u_seq(self, a: tuple[int, ...]) -> Element:
        """u_a = u_{a_1,1} u_{a_2,2} ... u_{a_r,r}."""
        if len(a) != self.r:
            raise ValueError("need one index per parameter")
        out = self.one()
        for t, at in enumerate(a, start=1):
            out = out * self.u_at(at, t)
        return out

    def u_plus(self, mu: MultiComposition) -> Element:
        """u_mu^+ with a_t = |mu^(1)| + ... + |mu^(t-1)|."""
        sizes = mu.component_sizes()
        acc = 0
        a = []
        for t in range(self.r):
            a.append(acc)
            acc += sizes[t]
        return self.u_seq(tuple(a))

    def u_minus(self, m: int) -> Element:
        """prod_{t=1}^{s} (L_1 - Q_t)...(L_m - Q_t); needs the split point s."""
        s = self.params.require_split()
        out = self.one()
        for t in range(1, s + 1):
            out = out * self.u_at(m, t)
        return out

    def u_b_plus(self, b: int) -> Element:
        """prod_{t=s+1}^{r} (L_1 - Q_t)...(L_b - Q_t); needs the split point s."""
        s = self.params.require_split()
        out = self.one()
        for t in range(s + 1, self.r + 1):
            out = out * self.u_at(b, t)
        return out

    def x_lambda(self, lam: MultiComposition) -> Element:
        """The sum of T_w over the row stabilizer of t^lam."""
        one = self.field.one
        zero_exp = (0,) * self.n
        terms = {
            (zero_exp, w): one
            for w in young_subgroup([x for x in lam.row_lengths() if x], self.n)
        }
        return self.element(terms)

    def m_lambda(self, lam: MultiComposition) -> Element:
        return self.u_plus(lam) * self.x_lambda(lam)

    def m_st(self, s: StandardTableau, t: StandardTableau) -> Element:
        if s.shape != t.shape:
            raise ValueError("tableaux have different shapes")
        mlam = self.m_lambda(s.shape)
        return self.t_elem(d_of(s).inverse()) * mlam * self.t_elem(d_of(t))

    def m_semi(self, S: SemistandardTableau, t: StandardTableau) -> Element:
        """m_{St} = sum of m_{st} over standard s with mu(s) = S."""
        lam = S.shape
        if lam != t.shape:
            raise ValueError("shape mismatch")
        out = self.zero()
        for s in std_tableaux(lam):
            if mu_map(s, S.mu) == S:
                out = out + self.m_st(s, t)
        return out

    def m_semi2(self, S: SemistandardTableau, T: SemistandardTableau) -> Element:
        """m_{ST} = sum of m_{st} over mu(s) = S and nu(t) = T."""
        lam = S.shape
        if lam != T.shape:
            raise ValueError("shape mismatch")
        out = self.zero()
        for s in std_tableaux(lam):
            if mu_map(s, S.mu) != S:
                continue
            for t in std_tableaux(lam):
                if mu_map(t, T.mu) == T:
                    out = out + self.m_st(s, t)
        return out

    # -- the splitting elements ---------------------------------------------------

    def v_b_elem(self, b: int) -> Element:
        """v_b = u_{n-b}^- T_{w_{n-b,b}} u_b^+."""
        if not (0 <= b <= self.n):
            raise ValueError(f"b={b} out of range")
        return self.u_minus(self.n - b) * self.t_elem(w_ab(self.n - b, b, self.n)) * self.u_b_plus(b)

    def theta_b(self, b: int, h: Element) -> Element:
        """theta_b(h) = u_{n-b}^- T_{w_{n-b,b}} h (membership of h in its domain is the caller's duty)."""
        return self.u_minus(self.n - b) * self.t_elem(w_ab(self.n - b, b, self.n)) * h

    def v_st(self, s: StandardTableau, t: StandardTableau, b: int | None = None) -> Element:
        if b is None:
            split = self.params.require_split()
            b = sum(s.shape.component_sizes()[:split])
        return self.theta_b(b, self.m_st(s, t))

    # -- cellular transition -------------------------------------------------------

    def cell_data(self) -> list[tuple[MultiPartition, StandardTableau, StandardTableau]]:
        out = []
        for lam in multipartitions(self.n, self.r):
            tabs = std_tableaux(lam)
            for s in tabs:
                for t in tabs:
                    out.append((lam, s, t))
        return out

    def transition(self) -> "TransitionMatrix":
        if self._transition is None:
            if self.dim > self.max_dim:
                raise SizeGuardError(
                    f"transition matrix has dimension {self.dim} > guard {self.max_dim}"
                )
            self._transition = TransitionMatrix(self)
        return self._transition


class TransitionMatrix:
    """Change of basis between normal-form monomials and the cellular basis."""

    def __init__(self, alg: ArikiKoikeAlgebra):
        self.alg = alg
        self.cells = alg.cell_data()
        self.monomials = alg.basis()
        if len(self.cells) != len(self.monomials):
            raise ValueError(
                f"cellular data count {len(self.cells)} != rank {len(self.monomials)}"
            )
        cols = [alg.vec(alg.m_st(s, t)) for (_, s, t) in self.cells]
        self.matrix = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]
        self._inverse: list[list] | None = None

    def inverse(self) -> list[list]:
        if self._inverse is None:
            self._inverse = mat_inverse(self.matrix, self.alg.field)
        return self._inverse

    def express(self, elem: Element) -> dict:
        """Exact coordinates of elem in the cellular basis: {(lam, s, t): coeff}."""
        v = self.alg.vec(elem)
        inv = self.inverse()
        out = {}
        for i, row in enumerate(inv):
            c = None
            for a, b in zip(row, v):
                if b:
                    term = a * b
                    c = term if c is None else c + term
            if c is None:
                c = self.alg.field.zero
            if c:
                out[self.cells[i]] = c
        return out

    def combine(self, coords: dict) -> Element:
        out = self.alg.zero()
        for (lam, s, t), c in coords.items():
            out = out + self.alg.m_st(s, t).scale(c)
        return out

    def to_tsv(self) -> str:
        """TSV dump; header rows name both bases."""
        header1 = "monomial\\cell\t" + "\t".join(
            f"{lam.serialize()}|{s.serialize()}|{t.serialize()}" for (lam, s, t) in self.cells
        )
        lines = [header1]
        for i, mono in enumerate(self.monomials):
            d, w = mono
            name = "L^" + ",".join(str(x) for x in d) + "|T" + ",".join(str(x) for x in w.images)
            lines.append(name + "\t" + "\t".join(str(x) for x in self.matrix[i]))
        return "\n".join(lines)


def random_element(alg: ArikiKoikeAlgebra, rng, nterms: int = 4, coeff_range: int = 9) -> Element:
    """A reproducible sparse random element (for property tests)."""
    basis = alg.basis()
    terms: dict = {}
    for _ in range(nterms):
        mono = basis[rng.randrange(len(basis))]
        c = alg.field(rng.randint(1, coeff_range)) - alg.field(rng.randint(0, coeff_range // 2))
        _accumulate(terms, mono, c)
    return alg.element(terms)
