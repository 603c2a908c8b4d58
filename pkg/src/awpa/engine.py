"""The affine wreath product algebra A_n(F) and its normal-form arithmetic.

Elements are sparse combinations of normal-form monomials x^alpha * b * pi
(polynomial part, basis word of F^(x)n, permutation).  Multiplication
rewrites products into this basis by peeling reduced words one simple
reflection at a time via

    s_i a = (s_i . a) s_i - Delta_i(a),        a in P_n(F),

where Delta_i is the deformed divided difference, and by commuting basis
words left past polynomial parts with the Nakayama twist f x_i = x_i psi_i(f).
Corrections strictly drop polynomial degree, so the rewriting terminates.

The module also hosts everything built on that arithmetic: t-elements,
Jucys-Murphy elements and the evaluation map onto the wreath product,
the polynomial-module action used as an independent multiplication oracle,
center and centralizer computations, intertwiners, automorphisms, graded
dimensions, and Mackey dimension bookkeeping.
"""

from __future__ import annotations

from math import comb, factorial

from . import linalg
from . import permutations as perms
from .errors import (
    AlgebraMismatch,
    BadAutomorphismParams,
    BadComposition,
    NotPolynomial,
    SizeMismatch,
    ZeroElement,
)
from .frobenius import AlgElem, FrobAlg, check_frobenius_morphism, opposite_algebra
from .scalars import CycScalar
from .wreath import (
    TensorElem,
    WreathElem,
    koszul_mul_sign,
    permute_word,
    unit_word_expansion,
    word_degree,
    word_mul,
    word_parity,
)


def _acc(d: dict, key, value):
    old = d.get(key)
    if old is None:
        if value:
            d[key] = value
    else:
        s = old + value
        if s:
            d[key] = s
        else:
            del d[key]


class AwpaElem:
    """Sparse element: {(alpha, word, perm): CycScalar}."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AwpaAlgebra, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = c

    def _check(self, other: AwpaElem):
        if self.ctx.F is not other.ctx.F:
            raise AlgebraMismatch("elements over different Frobenius algebras")
        if self.ctx.n != other.ctx.n:
            raise SizeMismatch("elements with different n")

    def __add__(self, other: AwpaElem) -> AwpaElem:
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return AwpaElem(self.ctx, out)

    def __neg__(self) -> AwpaElem:
        return AwpaElem(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: AwpaElem) -> AwpaElem:
        return self + (-other)

    def __mul__(self, other) -> AwpaElem:
        if isinstance(other, AwpaElem):
            return self.ctx.mul(self, other)
        return AwpaElem(self.ctx, {k: c * other for k, c in self.terms.items()})

    def __rmul__(self, scalar) -> AwpaElem:
        return AwpaElem(self.ctx, {k: c * scalar for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AwpaElem):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def poly_degree(self) -> int:
        """Total degree in the x_i (max over monomials); -1 for zero."""
        return max((sum(a) for (a, _, _) in self.terms), default=-1)

    def degree_of_key(self, key) -> int:
        a, w, _ = key
        return self.ctx.F.delta * sum(a) + word_degree(self.ctx.F, w)

    def parity(self):
        seen = {word_parity(self.ctx.F, w) for (_, w, _) in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def degree(self):
        seen = {self.degree_of_key(k) for k in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def parity_components(self) -> dict:
        out = {0: {}, 1: {}}
        for k, c in self.terms.items():
            out[word_parity(self.ctx.F, k[1])][k] = c
        return {p: AwpaElem(self.ctx, t) for p, t in out.items() if t}

    def degree_components(self) -> dict:
        out: dict = {}
        for k, c in self.terms.items():
            out.setdefault(self.degree_of_key(k), {})[k] = c
        return {d: AwpaElem(self.ctx, t) for d, t in sorted(out.items())}

    def __str__(self) -> str:
        from .textio import element_str

        return element_str(self)

    __repr__ = __str__


class PolyModElem:
    """Element of the module V = P_n(F) (x) kS_n; same key shape as AwpaElem
    but with the module semantics (the permutation is a tensor factor)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AwpaAlgebra, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = c

    def __add__(self, other: PolyModElem) -> PolyModElem:
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return PolyModElem(self.ctx, out)

    def __sub__(self, other: PolyModElem) -> PolyModElem:
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, -c)
        return PolyModElem(self.ctx, out)

    def __rmul__(self, scalar) -> PolyModElem:
        return PolyModElem(self.ctx, {k: c * scalar for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyModElem):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms


class IsCentralResult:
    """Certificate for is_central: both the generator-commutation route and
    the structural-form route, which must agree."""

    def __init__(self, central, failed_generator=None, structural_reason=None):
        self.central = central
        self.failed_generator = failed_generator
        self.structural_reason = structural_reason

    def __bool__(self):
        return self.central

    def __repr__(self):
        if self.central:
            return "central"
        return f"not central ({self.failed_generator or self.structural_reason})"


class MackeyReport:
    def __init__(self, mu, nu, cutoff, lhs, terms, phi_checked):
        self.mu = mu
        self.nu = nu
        self.cutoff = cutoff
        self.lhs = lhs
        self.terms = terms  # list of (pi, mu cap pi nu, pi^-1 mu cap nu, dim)
        self.rhs = sum(t[3] for t in terms)
        self.equal = self.lhs == self.rhs
        self.phi_checked = phi_checked

    def __repr__(self):
        status = "ok" if self.equal and self.phi_checked else "MISMATCH"
        return (
            f"Mackey mu={self.mu} nu={self.nu} cutoff={self.cutoff}: "
            f"{self.lhs} = {self.rhs} over {len(self.terms)} cosets [{status}]"
        )


class AwpaAlgebra:
    """Context for A_n(F): caches and normal-form arithmetic."""

    def __init__(self, F: FrobAlg, n: int):
        if n < 0:
            raise SizeMismatch("n must be nonnegative")
        self.F = F
        self.n = n
        self.identity_perm = perms.identity(n)
        self.zero_alpha = (0,) * n
        self._unit_words = dict(TensorElem.unit(F, n).terms)
        self._t_cache: dict = {}
        self._smono_cache: dict = {}
        self._twist_cache: dict = {}
        self._jm_cache: dict = {}
        self._mono_cache: dict = {}

    # -- constructors ---------------------------------------------------------

    def zero(self) -> AwpaElem:
        return AwpaElem(self, {})

    def one(self) -> AwpaElem:
        return AwpaElem(
            self,
            {(self.zero_alpha, w, self.identity_perm): c for w, c in self._unit_words.items()},
        )

    def scalar_elem(self, value) -> AwpaElem:
        return self.F.scalar(value) * self.one()

    def x(self, i: int, power: int = 1) -> AwpaElem:
        if not 1 <= i <= self.n:
            raise IndexError(f"x_{i} does not exist for n={self.n}")
        alpha = tuple(power if j == i - 1 else 0 for j in range(self.n))
        return AwpaElem(
            self, {(alpha, w, self.identity_perm): c for w, c in self._unit_words.items()}
        )

    def x_monomial(self, alpha) -> AwpaElem:
        alpha = tuple(alpha)
        return AwpaElem(
            self, {(alpha, w, self.identity_perm): c for w, c in self._unit_words.items()}
        )

    def slot_elem(self, f, i: int) -> AwpaElem:
        """f_i = 1 (x) ... (x) f (x) ... (x) 1 as an element of A_n(F)."""
        t = TensorElem.slot(self.F, self.n, f, i)
        return self.from_tensor(t)

    def from_tensor(self, t: TensorElem) -> AwpaElem:
        return AwpaElem(
            self, {(self.zero_alpha, w, self.identity_perm): c for w, c in t.terms.items()}
        )

    def perm_elem(self, pi) -> AwpaElem:
        pi = tuple(pi)
        return AwpaElem(self, {(self.zero_alpha, w, pi): c for w, c in self._unit_words.items()})

    def s(self, i: int) -> AwpaElem:
        return self.perm_elem(perms.simple(self.n, i))

    def from_wreath(self, w: WreathElem) -> AwpaElem:
        if w.n != self.n:
            raise SizeMismatch("wreath element with different n")
        return AwpaElem(self, {(self.zero_alpha, word, p): c for (word, p), c in w.terms.items()})

    def monomial(self, alpha, word, pi, coeff=1) -> AwpaElem:
        return AwpaElem(self, {(tuple(alpha), tuple(word), tuple(pi)): self.F.scalar(coeff)})

    def module_one(self) -> PolyModElem:
        return PolyModElem(
            self,
            {(self.zero_alpha, w, self.identity_perm): c for w, c in self._unit_words.items()},
        )

    def basis_words(self):
        from itertools import product

        return [tuple(w) for w in product(range(self.F.dim), repeat=self.n)]

    # -- low-level P_n(F) arithmetic -------------------------------------------

    def _word_psi_twist(self, word, gamma) -> dict:
        """psi^gamma applied slotwise: {word: scalar}."""
        F = self.F
        gkey = tuple(g % F.theta for g in gamma)
        if not any(gkey):
            return {word: CycScalar.one(F.conductor)}
        ckey = (word, gkey)
        cached = self._twist_cache.get(ckey)
        if cached is not None:
            return cached
        terms = {(): CycScalar.one(F.conductor)}
        for slot, b in enumerate(word):
            vec = F.psi_on_basis(b, gkey[slot])
            new = {}
            for prefix, c in terms.items():
                for k, v in enumerate(vec):
                    if v:
                        _acc(new, prefix + (k,), c * v)
            terms = new
        self._twist_cache[ckey] = terms
        return terms

    def _pd_mono_mul(self, a1, w1, a2, w2) -> dict:
        """(x^a1 w1)(x^a2 w2) in P_n(F): {(alpha, word): scalar}."""
        alpha = tuple(x + y for x, y in zip(a1, a2))
        out = {}
        for tw, c1 in self._word_psi_twist(w1, a2).items():
            for w, c2 in word_mul(self.F, tw, w2).items():
                _acc(out, (alpha, w), c1 * c2)
        return out

    def _pd_mul(self, p1: dict, p2: dict) -> dict:
        out = {}
        for (a1, w1), c1 in p1.items():
            for (a2, w2), c2 in p2.items():
                c12 = c1 * c2
                for k, c in self._pd_mono_mul(a1, w1, a2, w2).items():
                    _acc(out, k, c12 * c)
        return out

    def _slot_pd(self, vec, i: int) -> dict:
        """Coordinate vector of F placed in slot i: {(0, word): scalar}."""
        out = {}
        for w, cu in self._unit_words.items():
            for k, fk in enumerate(vec):
                if fk:
                    _acc(out, (self.zero_alpha, w[: i - 1] + (k,) + w[i:]), cu * fk)
        return out

    def t_pd(self, k: int, i: int, j: int) -> dict:
        """t^(k)_{i,j} = sum_b sum_{l<k} b_i x_i^(k-1-l) x_j^l (b^vee)_j
        as a P_n(F) dict."""
        F = self.F
        key = (k, i, j)
        cached = self._t_cache.get(key)
        if cached is not None:
            return cached
        if not (1 <= i <= self.n and 1 <= j <= self.n) or i == j:
            raise IndexError(f"t_{{{i},{j}}} needs distinct slots in 1..{self.n}")
        out: dict = {}
        one = CycScalar.one(F.conductor)
        for b in range(F.dim):
            b_vec = [one if t == b else CycScalar.zero(F.conductor) for t in range(F.dim)]
            left = self._slot_pd(b_vec, i)
            right = self._slot_pd(F.dual_matrix[b], j)
            for l in range(k):
                m = k - 1 - l
                alpha = tuple(
                    m if t == i - 1 else (l if t == j - 1 else 0) for t in range(self.n)
                )
                xmono = {(alpha, w): cu for w, cu in self._unit_words.items()}
                piece = self._pd_mul(self._pd_mul(left, xmono), right)
                for kk, c in piece.items():
                    _acc(out, kk, c)
        self._t_cache[key] = out
        return out

    def t_element(self, i: int, j: int, k: int = 1) -> AwpaElem:
        """t^(k)_{i,j} as a normal-form element (even, degree k*delta)."""
        return AwpaElem(
            self,
            {(a, w, self.identity_perm): c for (a, w), c in self.t_pd(k, i, j).items()},
        )

    def _delta_mono(self, i: int, alpha, word) -> dict:
        """Delta_i of the P_n(F) monomial x^alpha * word: {(alpha, word): scalar}."""
        p = alpha[i - 1]
        q = alpha[i]
        if p == 0 and q == 0:
            return {}
        rest = tuple(0 if t in (i - 1, i) else a for t, a in enumerate(alpha))
        # Delta_i(x_i^p x_{i+1}^q) = t^(p)_{i,i+1} x_{i+1}^q - x_{i+1}^p t^(q)_{i+1,i}
        middle: dict = {}
        if p:
            # right factor x_{i+1}^q crosses the word part of t: Nakayama twist
            xq = tuple(q if t == i else 0 for t in range(self.n))
            xq_pd = {(xq, w): cu for w, cu in self._unit_words.items()}
            for k, c in self._pd_mul(self.t_pd(p, i, i + 1), xq_pd).items():
                _acc(middle, k, c)
        if q:
            # left factor is a pure x-power: plain exponent shift
            xp = tuple(p if t == i else 0 for t in range(self.n))
            for (a, w), c in self.t_pd(q, i + 1, i).items():
                _acc(middle, (tuple(x + y for x, y in zip(a, xp)), w), -c)
        # x^rest on the left is a plain exponent shift; then multiply the word in
        out: dict = {}
        for (a, w), c in middle.items():
            shifted = tuple(x + y for x, y in zip(rest, a))
            for w2, c2 in word_mul(self.F, w, word).items():
                _acc(out, (shifted, w2), c * c2)
        return out

    def divided_difference(self, i: int, a: AwpaElem) -> AwpaElem:
        """The skew derivation Delta_i on P_n(F) with Delta_i(x_i) = t_{i,i+1},
        Delta_i(x_{i+1}) = -t_{i+1,i}, Delta_i(F^(x)n) = 0 and twisted
        Leibniz rule Delta_i(ab) = Delta_i(a) b + (s_i . a) Delta_i(b)."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"Delta_{i} needs 1 <= i < n")
        out: dict = {}
        for (alpha, word, pi), c in a.terms.items():
            if pi != self.identity_perm:
                raise NotPolynomial("divided differences act on P_n(F) only")
            for (da, dw), dc in self._delta_mono(i, alpha, word).items():
                _acc(out, (da, dw, self.identity_perm), c * dc)
        return AwpaElem(self, out)

    def superpermute_pnf(self, pi, alpha, word):
        """(s_i-convention) superpermutation of a P_n(F) monomial: returns
        (alpha', word', sign_exponent)."""
        new_alpha = [0] * self.n
        for t in range(self.n):
            new_alpha[pi[t] - 1] = alpha[t]
        new_word, sign = permute_word(self.F, pi, word)
        return tuple(new_alpha), new_word, sign

    def superpermute_elem(self, pi, a: AwpaElem) -> AwpaElem:
        """pi . a for a in P_n(F) (superpermuting x-exponents and word slots)."""
        out: dict = {}
        for (alpha, word, p), c in a.terms.items():
            if p != self.identity_perm:
                raise NotPolynomial("superpermute acts on P_n(F) elements")
            a2, w2, sgn = self.superpermute_pnf(pi, alpha, word)
            _acc(out, (a2, w2, p), -c if sgn else c)
        return AwpaElem(self, out)

    def _s_times_mono(self, i: int, alpha, word) -> dict:
        """s_i * (x^alpha word) = (s_i . x^alpha word) s_i - Delta_i(x^alpha word),
        as {(alpha, word, perm): scalar} with perm in {s_i, id}."""
        key = (i, alpha, word)
        cached = self._smono_cache.get(key)
        if cached is not None:
            return cached
        si = perms.simple(self.n, i)
        a2, w2, sgn = self.superpermute_pnf(si, alpha, word)
        one = CycScalar.one(self.F.conductor)
        out = {(a2, w2, si): -one if sgn else one}
        for (da, dw), dc in self._delta_mono(i, alpha, word).items():
            _acc(out, (da, dw, self.identity_perm), -dc)
        self._smono_cache[key] = out
        return out

    def _perm_times_pnf(self, pi, alpha, word) -> dict:
        """pi * (x^alpha word) in normal form: {(alpha, word, perm): scalar}."""
        if pi == self.identity_perm:
            return {(alpha, word, pi): CycScalar.one(self.F.conductor)}
        state = {(alpha, word, self.identity_perm): CycScalar.one(self.F.conductor)}
        for i in reversed(perms.reduced_word(pi)):
            new: dict = {}
            for (a, w, tail), c in state.items():
                for (a2, w2, t2), c2 in self._s_times_mono(i, a, w).items():
                    _acc(new, (a2, w2, perms.mul(t2, tail)), c * c2)
            state = new
        return state

    # -- multiplication ----------------------------------------------------------

    def _mono_mul(self, k1, k2) -> dict:
        ckey = (k1, k2)
        cached = self._mono_cache.get(ckey)
        if cached is not None:
            return cached
        a1, w1, p1 = k1
        a2, w2, p2 = k2
        out: dict = {}
        for (g, d, tau), c in self._perm_times_pnf(p1, a2, w2).items():
            alpha = tuple(x + y for x, y in zip(a1, g))
            tail = perms.mul(tau, p2)
            for tw, c1 in self._word_psi_twist(w1, g).items():
                for w, c2 in word_mul(self.F, tw, d).items():
                    _acc(out, (alpha, w, tail), c * c1 * c2)
        if len(self._mono_cache) < 200_000:
            self._mono_cache[ckey] = out
        return out

    def mul(self, a: AwpaElem, b: AwpaElem) -> AwpaElem:
        a._check(b)
        out: dict = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                c12 = c1 * c2
                for k, c in self._mono_mul(k1, k2).items():
                    _acc(out, k, c12 * c)
        return AwpaElem(self, out)

    def graded_mul(self, a: AwpaElem, b: AwpaElem) -> AwpaElem:
        """Multiplication in the associated graded algebra
        (k[x] |x F)^(x)n x| S_n: permutations superpermute with no
        lower-degree corrections."""
        a._check(b)
        out: dict = {}
        for (a1, w1, p1), c1 in a.terms.items():
            for (a2, w2, p2), c2 in b.terms.items():
                g, d, sgn = self.superpermute_pnf(p1, a2, w2)
                c12 = c1 * c2
                if sgn:
                    c12 = -c12
                alpha = tuple(x + y for x, y in zip(a1, g))
                tail = perms.mul(p1, p2)
                for tw, cc1 in self._word_psi_twist(w1, g).items():
                    for w, cc2 in word_mul(self.F, tw, d).items():
                        _acc(out, (alpha, w, tail), c12 * cc1 * cc2)
        return AwpaElem(self, out)

    def leading_term(self, a: AwpaElem) -> AwpaElem:
        """Top polynomial-degree component (an element of the associated
        graded algebra, represented on the same monomials)."""
        if a.is_zero():
            raise ZeroElement("zero element has no leading term")
        top = a.poly_degree()
        return AwpaElem(self, {k: c for k, c in a.terms.items() if sum(k[0]) == top})

    # -- module oracle -------------------------------------------------------------

    def _act_simple(self, i: int, terms: dict) -> dict:
        out: dict = {}
        si = perms.simple(self.n, i)
        for (a, w, sigma), c in terms.items():
            a2, w2, sgn = self.superpermute_pnf(si, a, w)
            _acc(out, (a2, w2, perms.mul(si, sigma)), -c if sgn else c)
            for (da, dw), dc in self._delta_mono(i, a, w).items():
                _acc(out, (da, dw, sigma), -(c * dc))
        return out

    def oracle_act(self, a: AwpaElem, v: PolyModElem) -> PolyModElem:
        """Action of a on V = P_n(F) (x) kS_n:
        z . (p (x) w) = zp (x) w for z in P_n(F) and
        s_i . (p (x) w) = (s_i . p) (x) s_i w - Delta_i(p) (x) w."""
        if v.ctx is not self:
            raise SizeMismatch("module element from another context")
        out: dict = {}
        for (alpha, word, pi), c in a.terms.items():
            cur = dict(v.terms)
            for i in reversed(perms.reduced_word(pi)):
                cur = self._act_simple(i, cur)
            new: dict = {}
            for (a2, w2, sigma), c2 in cur.items():
                for (a3, w3), c3 in self._pd_mono_mul(alpha, word, a2, w2).items():
                    _acc(new, (a3, w3, sigma), c2 * c3)
            for k, c2 in new.items():
                _acc(out, k, c * c2)
        return PolyModElem(self, out)

    def element_to_module(self, a: AwpaElem) -> PolyModElem:
        """a . (1 (x) 1); on normal-form monomials this is the key-preserving
        bijection of the basis theorem."""
        return self.oracle_act(a, self.module_one())

    # -- Jucys-Murphy / evaluation ---------------------------------------------------

    def jucys_murphy(self, k: int) -> WreathElem:
        """J_1 = 0 and J_k = sum_{i<k} t_{i,k} s_{i,k} in F^(x)n x| S_n."""
        if not 1 <= k <= self.n:
            raise IndexError(f"J_{k} needs 1 <= k <= n={self.n}")
        if k in self._jm_cache:
            return self._jm_cache[k]
        out = WreathElem(self.F, self.n, {})
        for i in range(1, k):
            sik = perms.transposition(self.n, i, k)
            terms = {}
            for (a, w), c in self.t_pd(1, i, k).items():
                terms[(w, sik)] = c
            out = out + WreathElem(self.F, self.n, terms)
        self._jm_cache[k] = out
        return out

    def evaluation_hom(self, a: AwpaElem) -> WreathElem:
        """The surjection A_n(F) ->> F^(x)n x| S_n fixing the wreath
        subalgebra and sending x_k to J_k."""
        out = WreathElem(self.F, self.n, {})
        for (alpha, word, pi), c in a.terms.items():
            term = WreathElem.unit(self.F, self.n)
            for i, e in enumerate(alpha):
                for _ in range(e):
                    term = term * self.jucys_murphy(i + 1)
            term = term * WreathElem(self.F, self.n, {(word, pi): CycScalar.one(self.F.conductor)})
            out = out + c * term
        return out

    # -- intertwiners --------------------------------------------------------------

    def intertwiner(self, i: int) -> AwpaElem:
        """Omega_i = x_{i+1}^theta s_i - s_i x_{i+1}^theta."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"Omega_{i} needs 1 <= i < n")
        xp = self.x(i + 1, self.F.theta)
        si = self.s(i)
        return self.mul(xp, si) - self.mul(si, xp)

    # -- center / centralizer ---------------------------------------------------------

    def generators(self, include_perms: bool = True) -> list:
        """Homogeneous generators: x_i, the basis slots, and (optionally) the
        simple reflections."""
        gens = [self.x(i) for i in range(1, self.n + 1)]
        for b in range(self.F.dim):
            for i in range(1, self.n + 1):
                gens.append(self.slot_elem(self.F.basis_elem(b), i))
        if include_perms:
            gens += [self.s(j) for j in range(1, self.n)]
        return gens

    def _supercommutes_with_generators(self, z: AwpaElem):
        """z supercommutes with x_1, every basis slot, and every s_j?
        (Sufficient for centrality: these generate A_n(F).)"""
        gens = [("x1", self.x(1), 0)] if self.n >= 1 else []
        for b in range(self.F.dim):
            for i in range(1, self.n + 1):
                gens.append(
                    (
                        f"{self.F.basis_labels[b]}_{i}",
                        self.slot_elem(self.F.basis_elem(b), i),
                        self.F.parities[b],
                    )
                )
        for j in range(1, self.n):
            gens.append((f"s{j}", self.s(j), 0))
        for zp, zelem in z.parity_components().items():
            for name, g, gp in gens:
                left = self.mul(zelem, g)
                right = self.mul(g, zelem)
                if zp and gp:
                    right = -right
                if left != right:
                    return name
        return None

    def _structural_center_check(self, z: AwpaElem):
        """The explicit description: all monomials have trivial permutation,
        the alpha-coefficient lies in F_psi^(-alpha) slotwise, and the family
        is invariant under superpermutation of (alpha, word) jointly."""
        by_alpha: dict = {}
        for (alpha, word, pi), c in z.terms.items():
            if pi != self.identity_perm:
                return f"monomial with nontrivial permutation {pi}"
            by_alpha.setdefault(alpha, {})[word] = c
        for alpha, wcoeffs in by_alpha.items():
            basis = self._tensor_subspace_basis([-e for e in alpha])
            vecs = [self._word_dict_to_vec(b) for b in basis]
            target = self._word_dict_to_vec(wcoeffs)
            if not linalg.in_span(vecs, target):
                return f"coefficient at alpha={alpha} is not in F_psi^(-alpha)"
        for j in range(1, self.n):
            si = perms.simple(self.n, j)
            for alpha, wcoeffs in by_alpha.items():
                moved: dict = {}
                for w, c in wcoeffs.items():
                    w2, sgn = permute_word(self.F, si, w)
                    _acc(moved, w2, -c if sgn else c)
                salpha = tuple(alpha[si[t] - 1] for t in range(self.n))
                other = by_alpha.get(salpha, {})
                if moved != other:
                    return f"not superinvariant under s_{j} at alpha={alpha}"
        return None

    def _tensor_subspace_basis(self, ks) -> list:
        """Words basis of F_psi^(k_1) (x) ... (x) F_psi^(k_n) as word dicts."""
        slot_bases = [self.F.graded_piece(k, fixed_only=True) for k in ks]
        out = [{(): CycScalar.one(self.F.conductor)}]
        for sb in slot_bases:
            new = []
            for prefix in out:
                for el in sb:
                    cur: dict = {}
                    for w, c in prefix.items():
                        for k, v in enumerate(el.coords):
                            if v:
                                _acc(cur, w + (k,), c * v)
                    if cur:
                        new.append(cur)
            out = new
            if not out:
                return []
        return out

    def _word_dict_to_vec(self, wdict: dict) -> list:
        zero = CycScalar.zero(self.F.conductor)
        vec = []
        for w in self.basis_words():
            vec.append(wdict.get(w, zero))
        return vec

    def is_central(self, z: AwpaElem) -> IsCentralResult:
        """Whether z lies in the (super)center, with both the generator
        commutation route and the structural-form cross-check."""
        failed = self._supercommutes_with_generators(z)
        reason = self._structural_center_check(z)
        assert (failed is None) == (reason is None), (
            "generator and structural centrality checks disagree: "
            f"{failed!r} vs {reason!r}"
        )
        return IsCentralResult(failed is None, failed, reason)

    def candidate_monomials(self, poly_degree_bound: int, include_perms=True):
        from itertools import product

        alphas = [
            a
            for a in product(range(poly_degree_bound + 1), repeat=self.n)
            if sum(a) <= poly_degree_bound
        ]
        ps = perms.all_permutations(self.n) if include_perms else [self.identity_perm]
        return [
            (alpha, w, p) for alpha in sorted(alphas) for w in self.basis_words() for p in ps
        ]

    def centralizer_up_to_degree(self, generators, poly_degree_bound: int) -> list:
        """Basis of {z : z supercommutes with every generator}, restricted to
        polynomial degree <= bound, by an exact linear solve."""
        out = []
        for par in (0, 1):
            monos = [
                k
                for k in self.candidate_monomials(poly_degree_bound)
                if word_parity(self.F, k[1]) == par
            ]
            if not monos:
                continue
            cols = []
            row_index: dict = {}
            rows_per_gen = []
            for g in generators:
                for gpar, gelem in g.parity_components().items():
                    rows_per_gen.append((gpar, gelem))
            for k in monos:
                zm = AwpaElem(self, {k: CycScalar.one(self.F.conductor)})
                col: dict = {}
                for idx, (gpar, gelem) in enumerate(rows_per_gen):
                    diff = self.mul(zm, gelem) - (
                        -self.mul(gelem, zm) if par and gpar else self.mul(gelem, zm)
                    )
                    for kk, c in diff.terms.items():
                        row_index.setdefault((idx, kk), len(row_index))
                        col[row_index[(idx, kk)]] = c
                cols.append(col)
            nrows = len(row_index)
            zero = CycScalar.zero(self.F.conductor)
            mat = [[zero] * len(monos) for _ in range(nrows)]
            for j, col in enumerate(cols):
                for r, c in col.items():
                    mat[r][j] = c
            for vec in linalg.nullspace(mat) if nrows else [
                [CycScalar.one(self.F.conductor) if t == j else zero for t in range(len(monos))]
                for j in range(len(monos))
            ]:
                out.append(AwpaElem(self, dict(zip(monos, vec))))
        return out

    def center_up_to_degree(self, poly_degree_bound: int) -> list:
        return self.centralizer_up_to_degree(self.generators(), poly_degree_bound)

    def expected_pnf_centralizer(self, poly_degree_bound: int) -> list:
        """(+)_alpha x^alpha F_psi^(-alpha), truncated: the centralizer of
        P_n(F)."""
        from itertools import product

        out = []
        for alpha in product(range(poly_degree_bound + 1), repeat=self.n):
            if sum(alpha) > poly_degree_bound:
                continue
            for wdict in self._tensor_subspace_basis([-e for e in alpha]):
                out.append(
                    AwpaElem(
                        self,
                        {(tuple(alpha), w, self.identity_perm): c for w, c in wdict.items()},
                    )
                )
        return out

    # -- automorphisms -----------------------------------------------------------------

    def _monomial_factor_images(self, key, images):
        """Multiply out the generator images for one monomial key.

        ``images`` provides: x(i) -> AwpaElem, slot(b, i) -> AwpaElem,
        s(j) -> AwpaElem, all in the target context."""
        alpha, word, pi = key
        factors = []
        parities = []
        for i, e in enumerate(alpha):
            for _ in range(e):
                factors.append(images["x"](i + 1))
                parities.append(0)
        for slot, b in enumerate(word):
            factors.append(images["slot"](b, slot + 1))
            parities.append(self.F.parities[b])
        for j in perms.reduced_word(pi):
            factors.append(images["s"](j))
            parities.append(0)
        return factors, parities

    def automorphism(self, kind: str, **params) -> AwpaMorphism:
        """Build one of the structural (anti)automorphisms as a reusable map.

        kind: "reverse"    x_i -> x_{n+1-i}, f_i -> f_{n+1-i}, s_j -> -s_{n-j}
              "frobenius"  induced by a trace-preserving automorphism xi of F
                           (params: xi = dim x dim matrix, rows = images)
              "antihom"    the anti-isomorphism from tau : F -> F^op
                           (params: tau matrix); reverses products with the
                           super sign
              "trace_change"  x_i -> x_i u_i into A_n(F') where F' has the
                           trace tr'(f) = tr(f u)  (params: u = AlgElem);
                           images live in the morphism's target context
              "shift"      x_i -> x_i + s_{i-1}...s_1 c s_1...s_{i-1}
                           (params: c = TensorElem or AlgElem in F_1^(1))
        """
        n = self.n
        target = self
        anti = False
        if kind == "reverse":
            images = {
                "x": lambda i: self.x(n + 1 - i),
                "slot": lambda b, i: self.slot_elem(self.F.basis_elem(b), n + 1 - i),
                "s": lambda j: -self.s(n - j),
            }
        elif kind == "frobenius":
            xi = params.get("xi")
            if xi is None:
                raise BadAutomorphismParams("frobenius automorphism needs xi")
            verdict = check_frobenius_morphism(self.F, self.F, xi, anti=False)
            if not verdict or linalg.inverse([[self.F.scalar(v) for v in row] for row in xi]) is None:
                raise BadAutomorphismParams(f"xi is not a Frobenius automorphism: {verdict}")
            rows = [[self.F.scalar(v) for v in row] for row in xi]
            images = {
                "x": lambda i: self.x(i),
                "slot": lambda b, i: self.slot_elem(AlgElem(self.F, rows[b]), i),
                "s": lambda j: self.s(j),
            }
        elif kind == "antihom":
            tau = params.get("tau")
            if tau is None:
                raise BadAutomorphismParams("antihom needs tau")
            verdict = check_frobenius_morphism(self.F, self.F, tau, anti=True)
            if not verdict or linalg.inverse([[self.F.scalar(v) for v in row] for row in tau]) is None:
                raise BadAutomorphismParams(f"tau is not a Frobenius anti-isomorphism: {verdict}")
            rows = [[self.F.scalar(v) for v in row] for row in tau]
            images = {
                "x": lambda i: self.x(i),
                "slot": lambda b, i: self.slot_elem(AlgElem(self.F, rows[b]), i),
                "s": lambda j: self.s(j),
            }
            anti = True
        elif kind == "trace_change":
            u = params.get("u")
            if not isinstance(u, AlgElem):
                raise BadAutomorphismParams("trace_change needs u as an AlgElem")
            if u.parity() != 0 or not self.F.is_invertible(u):
                raise BadAutomorphismParams("u must be even and invertible")
            if u.degree() != 0:
                # the graded trace tr'(f) = tr(fu) stays homogeneous of
                # degree -delta only for degree-0 u
                raise BadAutomorphismParams("u must be homogeneous of degree 0")
            new_trace = [self.F.mul(self.F.basis_elem(i), u).trace() for i in range(self.F.dim)]
            F2 = FrobAlg(
                self.F.basis_labels,
                self.F.degrees,
                self.F.parities,
                self.F.struct,
                self.F.unit,
                new_trace,
                conductor=self.F.conductor,
                name=self.F.name + "_tr'",
            )
            target = AwpaAlgebra(F2, n)
            u2 = AlgElem(F2, u.coords)
            images = {
                "x": lambda i: target.mul(target.x(i), target.slot_elem(u2, i)),
                "slot": lambda b, i: target.slot_elem(F2.basis_elem(b), i),
                "s": lambda j: target.s(j),
            }
        elif kind == "shift":
            c = params.get("c")
            if isinstance(c, AlgElem):
                c = TensorElem.slot(self.F, n, c, 1) if n else None
            if not isinstance(c, TensorElem):
                raise BadAutomorphismParams("shift needs c as a TensorElem or AlgElem")
            self._validate_shift_param(c)
            shifts = [self.from_tensor(c)]
            for i in range(2, n + 1):
                si = self.s(i - 1)
                shifts.append(self.mul(self.mul(si, shifts[-1]), si))
            images = {
                "x": lambda i: self.x(i) + shifts[i - 1],
                "slot": lambda b, i: self.slot_elem(self.F.basis_elem(b), i),
                "s": lambda j: self.s(j),
            }
        else:
            raise BadAutomorphismParams(f"unknown automorphism kind {kind!r}")
        return AwpaMorphism(self, target, images, anti)

    def apply_automorphism(self, kind: str, a: AwpaElem, **params) -> AwpaElem:
        """One-shot form of automorphism(); for trace_change, repeated calls
        should reuse one morphism so the images share a target context."""
        return self.automorphism(kind, **params)(a)

    def _validate_shift_param(self, c: TensorElem):
        """c must lie in F_1^(1): slot 1 in F_psi^(1), other slots in
        F_psi^(0), invariant under superpermutations fixing slot 1, even,
        of degree delta."""
        if c.is_zero():
            return
        parity = {word_parity(self.F, w) for w in c.terms}
        if parity != {0}:
            raise BadAutomorphismParams("shift parameter must be even")
        degs = {word_degree(self.F, w) for w in c.terms}
        if degs != {self.F.delta}:
            raise BadAutomorphismParams("shift parameter must have degree delta")
        ks = [1] + [0] * (self.n - 1)
        basis = self._tensor_subspace_basis(ks)
        vecs = [self._word_dict_to_vec(b) for b in basis]
        if not linalg.in_span(vecs, self._word_dict_to_vec(c.terms)):
            raise BadAutomorphismParams(
                "shift parameter is not in F_psi^(1) (x) F_psi^(0) (x) ..."
            )
        for j in range(2, self.n):
            si = perms.simple(self.n, j)
            moved: dict = {}
            for w, cc in c.terms.items():
                w2, sgn = permute_word(self.F, si, w)
                _acc(moved, w2, -cc if sgn else cc)
            if moved != c.terms:
                raise BadAutomorphismParams(
                    "shift parameter must be invariant under permutations fixing slot 1"
                )

    # -- graded dimension ------------------------------------------------------------

    def graded_dimension(self, cutoff: int):
        """Counts of normal-form monomials by total degree (delta > 0), or by
        polynomial-degree layer (delta = 0), up to the cutoff."""
        from itertools import product

        F = self.F
        nfact = factorial(self.n)
        if F.delta == 0:
            # each polynomial layer t contributes n! dim(F)^n C(n+t-1, n-1)
            return [
                nfact * (F.dim ** self.n) * comb(self.n + t - 1, self.n - 1)
                for t in range(cutoff + 1)
            ]
        counts = [0] * (cutoff + 1)
        word_deg_counts: dict = {}
        for w in product(range(F.dim), repeat=self.n):
            d = sum(F.degrees[b] for b in w)
            word_deg_counts[d] = word_deg_counts.get(d, 0) + 1
        max_t = cutoff // F.delta
        for t in range(max_t + 1):
            n_alpha = comb(self.n + t - 1, self.n - 1)
            for wd, cnt in word_deg_counts.items():
                deg = F.delta * t + wd
                if deg <= cutoff:
                    counts[deg] += nfact * n_alpha * cnt
        return counts

    def graded_dimension_series(self, cutoff: int):
        """Series expansion of n! (grdim F / (1 - q^delta))^n, as the oracle
        for graded_dimension (delta > 0 only)."""
        F = self.F
        if F.delta == 0:
            raise ValueError("series form needs delta > 0")
        grdim = [0] * (F.delta + 1)
        for d in F.degrees:
            grdim[d] += 1
        # geometric factor 1/(1-q^delta) truncated
        geo = [1 if t % F.delta == 0 else 0 for t in range(cutoff + 1)]
        base = _poly_mul_trunc(grdim, geo, cutoff)
        out = [1] + [0] * cutoff
        for _ in range(self.n):
            out = _poly_mul_trunc(out, base, cutoff)
        return [factorial(self.n) * c for c in out]

    # -- Mackey dimension bookkeeping ---------------------------------------------------

    def mackey_dimension_report(self, mu, nu, poly_cutoff: int) -> MackeyReport:
        """Dimension identity for Res_mu Ind_nu of the (truncated) regular
        module, summed over minimal double-coset representatives, plus a
        generator-level check that conjugation by pi^-1 is an algebra map."""
        mu = perms.check_composition(mu, self.n)
        nu = perms.check_composition(nu, self.n)
        F = self.F
        n_alpha = comb(self.n + poly_cutoff, self.n)  # #{alpha : |alpha| <= cutoff}
        layer = (F.dim ** self.n) * n_alpha
        s_nu_order = 1
        for part in nu:
            s_nu_order *= factorial(part)
        lhs = factorial(self.n) * layer
        terms = []
        phi_ok = True
        for pi, left_comp, right_comp in perms.min_double_cosets(mu, nu, self.n):
            s_int_order = 1
            for part in left_comp:
                s_int_order *= factorial(part)
            s_mu_order = 1
            for part in mu:
                s_mu_order *= factorial(part)
            dim = (s_mu_order // s_int_order) * s_nu_order * layer
            terms.append((pi, left_comp, right_comp, dim))
            if not self._phi_is_algebra_map(pi, left_comp):
                phi_ok = False
        return MackeyReport(mu, nu, poly_cutoff, lhs, terms, phi_ok)

    def _phi_is_algebra_map(self, pi, left_comp) -> bool:
        """phi_{pi^-1}: sigma -> pi^-1 sigma pi, x_i -> x_{pi^-1 i},
        f_i -> f_{pi^-1 i} respects the defining relations on the generators
        of the parabolic subalgebra for the composition."""
        pinv = perms.inverse(pi)
        for i in perms.young_subgroup_simples(left_comp, self.n):
            ii = pinv[i - 1]
            if pinv[i] != ii + 1:
                return False
            lhs = self.mul(self.s(ii), self.x(ii))
            rhs = self.mul(self.x(ii + 1), self.s(ii)) - self.t_element(ii, ii + 1)
            if lhs != rhs:
                return False
            for b in range(self.F.dim):
                fb = self.slot_elem(self.F.basis_elem(b), ii)
                image = self.slot_elem(self.F.basis_elem(b), ii + 1)
                if self.mul(self.s(ii), self.mul(fb, self.s(ii))) != image:
                    return False
        return True


def _poly_mul_trunc(a, b, cutoff: int):
    out = [0] * (cutoff + 1)
    for i, x in enumerate(a[: cutoff + 1]):
        if x:
            for j, y in enumerate(b[: cutoff + 1 - i]):
                if y:
                    out[i + j] += x * y
    return out


class AwpaMorphism:
    """A structural (anti)homomorphism given by generator images; callable
    on elements of the source context, producing elements of the target."""

    def __init__(self, source: AwpaAlgebra, target: AwpaAlgebra, images, anti: bool):
        self.source = source
        self.target = target
        self.images = images
        self.anti = anti
        self._factor_cache: dict = {}

    def __call__(self, a: AwpaElem) -> AwpaElem:
        if a.ctx is not self.source:
            raise AlgebraMismatch("element is not from the morphism's source")
        out = self.target.zero()
        for key, coeff in a.terms.items():
            term = self._factor_cache.get(key)
            if term is None:
                factors, parities = self.source._monomial_factor_images(key, self.images)
                sign = 0
                if self.anti:
                    sign = sum(
                        parities[i] * parities[j]
                        for i in range(len(parities))
                        for j in range(i + 1, len(parities))
                    )
                    factors = list(reversed(factors))
                term = self.target.one()
                for f in factors:
                    term = self.target.mul(term, f)
                if sign % 2:
                    term = -term
                self._factor_cache[key] = term
            out = out + coeff * term
        return out
