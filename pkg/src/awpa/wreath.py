"""Tensor powers F^(x)n with superpermutation action, and the wreath
product algebra F^(x)n x| S_n.

Words are tuples of basis indices; a word (i1, ..., in) stands for
b_{i1} (x) ... (x) b_{in}.  Multiplying two words is slotwise, with the
Koszul sign picked up by moving right-hand factors leftward past odd
left-hand factors:

    (a1 (x) ... (x) an)(c1 (x) ... (x) cn)
        = (-1)^{sum_{i>j} |a_i||c_j|} (a1 c1 (x) ... (x) an cn).

Permutations act by superpermuting the slots; for pi the sign is the
product of (-1) over inversions of pi at pairs of odd slots.
"""

from __future__ import annotations

from . import permutations as perms
from .errors import AlgebraMismatch, SizeMismatch
from .frobenius import FrobAlg
from .scalars import CycScalar


def permute_word(F: FrobAlg, pi, word):
    """(new_word, sign_exponent): new_word[pi(i)-1] = word[i-1]; the sign is
    (-1)^{#(odd-odd inversions of pi on the slots)}."""
    n = len(word)
    new = [0] * n
    for i in range(n):
        new[pi[i] - 1] = word[i]
    sign = 0
    odd_positions = [i for i in range(n) if F.parities[word[i]]]
    for a in range(len(odd_positions)):
        for b in range(a + 1, len(odd_positions)):
            if pi[odd_positions[a]] > pi[odd_positions[b]]:
                sign += 1
    return tuple(new), sign % 2


def word_parity(F: FrobAlg, word) -> int:
    return sum(F.parities[b] for b in word) % 2


def word_degree(F: FrobAlg, word) -> int:
    return sum(F.degrees[b] for b in word)


def koszul_mul_sign(F: FrobAlg, w1, w2) -> int:
    """Exponent of -1 in the slotwise product w1 * w2:
    sum over i > j of parity(w1[i]) * parity(w2[j])."""
    sign = 0
    tail_odd = 0  # number of odd slots of w1 with index > j
    for j in range(len(w1) - 1, -1, -1):
        if F.parities[w2[j]]:
            sign += tail_odd
        if F.parities[w1[j]]:
            tail_odd += 1
    return sign % 2


def word_mul(F: FrobAlg, w1, w2) -> dict:
    """Product of two basis words as {word: scalar}."""
    sign = koszul_mul_sign(F, w1, w2)
    terms = {(): CycScalar.one(F.conductor) if not sign else -CycScalar.one(F.conductor)}
    for b1, b2 in zip(w1, w2):
        new_terms = {}
        col = F.struct[b1][b2]
        for prefix, coeff in terms.items():
            for k, c in enumerate(col):
                if c:
                    key = prefix + (k,)
                    val = coeff * c
                    if key in new_terms:
                        val = new_terms[key] + val
                    if val:
                        new_terms[key] = val
                    elif key in new_terms:
                        del new_terms[key]
        terms = new_terms
        if not terms:
            break
    return terms


def unit_word_expansion(F: FrobAlg) -> dict:
    """The unit of F^(x)n is a combination of words when 1 is not a basis
    element; this returns {basis_index: coeff} for one slot."""
    return {i: c for i, c in enumerate(F.unit) if c}


class TensorElem:
    """Element of F^(x)n: sparse {word: scalar}."""

    __slots__ = ("F", "n", "terms")

    def __init__(self, F: FrobAlg, n: int, terms=None):
        self.F = F
        self.n = n
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[tuple(w)] = c

    def _check(self, other: TensorElem):
        if self.F is not other.F:
            raise AlgebraMismatch("tensor elements over different algebras")
        if self.n != other.n:
            raise SizeMismatch("tensor elements with different slot counts")

    @staticmethod
    def unit(F: FrobAlg, n: int) -> TensorElem:
        terms = {(): CycScalar.one(F.conductor)}
        for _ in range(n):
            new = {}
            for w, c in terms.items():
                for i, u in unit_word_expansion(F).items():
                    new[w + (i,)] = c * u
            terms = new
        return TensorElem(F, n, terms)

    @staticmethod
    def slot(F: FrobAlg, n: int, f, i: int) -> TensorElem:
        """f in slot i (1-indexed), units elsewhere."""
        if isinstance(f, str):
            f = F.from_label(f)
        out = {}
        for w, c in TensorElem.unit(F, n).terms.items():
            for k, fk in enumerate(f.coords):
                if fk:
                    out_key = w[: i - 1] + (k,) + w[i:]
                    val = c * fk
                    if out_key in out:
                        val = out[out_key] + val
                    if val:
                        out[out_key] = val
                    elif out_key in out:
                        del out[out_key]
        return TensorElem(F, n, out)

    def __add__(self, other: TensorElem) -> TensorElem:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, None)
            v = c if v is None else v + c
            if v:
                out[w] = v
            elif w in out:
                del out[w]
        return TensorElem(self.F, self.n, out)

    def __neg__(self) -> TensorElem:
        return TensorElem(self.F, self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: TensorElem) -> TensorElem:
        return self + (-other)

    def __rmul__(self, scalar) -> TensorElem:
        return TensorElem(self.F, self.n, {w: c * scalar for w, c in self.terms.items()})

    def __mul__(self, other) -> TensorElem:
        if not isinstance(other, TensorElem):
            return TensorElem(self.F, self.n, {w: c * other for w, c in self.terms.items()})
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c12 = c1 * c2
                for w, c in word_mul(self.F, w1, w2).items():
                    v = out.get(w, None)
                    v = c12 * c if v is None else v + c12 * c
                    if v:
                        out[w] = v
                    elif w in out:
                        del out[w]
        return TensorElem(self.F, self.n, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElem):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            labels = ",".join(self.F.basis_labels[b] for b in w)
            bits.append(f"({self.terms[w]})*b({labels})")
        return " + ".join(bits)

    __repr__ = __str__


def superpermute(pi, t: TensorElem) -> TensorElem:
    """The superpermutation action of pi on the slots of t."""
    if len(pi) != t.n:
        raise SizeMismatch("permutation size does not match slot count")
    out = {}
    for w, c in t.terms.items():
        new, sign = permute_word(t.F, pi, w)
        val = -c if sign else c
        if new in out:
            val = out[new] + val
        if val:
            out[new] = val
        elif new in out:
            del out[new]
    return TensorElem(t.F, t.n, out)


class WreathElem:
    """Element of the wreath product F^(x)n x| S_n: sparse {(word, pi): scalar}."""

    __slots__ = ("F", "n", "terms")

    def __init__(self, F: FrobAlg, n: int, terms=None):
        self.F = F
        self.n = n
        self.terms = {}
        if terms:
            for (w, p), c in terms.items():
                if c:
                    self.terms[(tuple(w), tuple(p))] = c

    def _check(self, other: WreathElem):
        if self.F is not other.F:
            raise AlgebraMismatch("wreath elements over different algebras")
        if self.n != other.n:
            raise SizeMismatch("wreath elements with different sizes")

    @staticmethod
    def unit(F: FrobAlg, n: int) -> WreathElem:
        e = perms.identity(n)
        return WreathElem(F, n, {(w, e): c for w, c in TensorElem.unit(F, n).terms.items()})

    @staticmethod
    def from_tensor(t: TensorElem, pi=None) -> WreathElem:
        pi = pi or perms.identity(t.n)
        return WreathElem(t.F, t.n, {(w, tuple(pi)): c for w, c in t.terms.items()})

    @staticmethod
    def from_perm(F: FrobAlg, n: int, pi) -> WreathElem:
        u = TensorElem.unit(F, n)
        return WreathElem(F, n, {(w, tuple(pi)): c for w, c in u.terms.items()})

    def __add__(self, other: WreathElem) -> WreathElem:
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, None)
            v = c if v is None else v + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return WreathElem(self.F, self.n, out)

    def __neg__(self) -> WreathElem:
        return WreathElem(self.F, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: WreathElem) -> WreathElem:
        return self + (-other)

    def __rmul__(self, scalar) -> WreathElem:
        return WreathElem(self.F, self.n, {k: c * scalar for k, c in self.terms.items()})

    def __mul__(self, other) -> WreathElem:
        if not isinstance(other, WreathElem):
            return WreathElem(self.F, self.n, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out = {}
        for (w1, p1), c1 in self.terms.items():
            for (w2, p2), c2 in other.terms.items():
                # (w1 p1)(w2 p2) = w1 * (p1 . w2) * (p1 p2)
                moved, sign = permute_word(self.F, p1, w2)
                c12 = c1 * c2
                if sign:
                    c12 = -c12
                tail = perms.mul(p1, p2)
                for w, c in word_mul(self.F, w1, moved).items():
                    key = (w, tail)
                    v = out.get(key, None)
                    v = c12 * c if v is None else v + c12 * c
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
        return WreathElem(self.F, self.n, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WreathElem):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w, p in sorted(self.terms):
            labels = ",".join(self.F.basis_labels[b] for b in w)
            pstr = ",".join(map(str, p))
            bits.append(f"({self.terms[(w, p)]})*b({labels})*s[{pstr}]")
        return " + ".join(bits)

    __repr__ = __str__
