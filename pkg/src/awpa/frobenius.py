"""Graded Frobenius superalgebras from structure constants.

An algebra is described by a homogeneous basis, structure constants
b_i b_j = sum_k c[i][j][k] b_k, a grading, a parity, and a trace vector.
Construction validates associativity, unitality, grading multiplicativity,
homogeneity of the trace, and nondegeneracy of the pairing (f, g) -> tr(fg),
then derives the left dual basis, the Nakayama automorphism psi (the unique
linear map with tr(fg) = (-1)^{|f||g|} tr(g psi(f))), its order theta, the
top degree delta, and a psi-eigenbasis.

The coefficient field is Q(zeta_m); the conductor is extended at build time
so that all theta-th roots of unity (the psi-eigenvalues) are representable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import linalg
from .errors import (
    AlgebraMismatch,
    BadParams,
    BadSpec,
    DegenerateTrace,
    DimensionMismatch,
    GradingViolation,
    NakayamaInfiniteOrder,
    NakayamaNotDiagonalizable,
    NoUnit,
    NotAssociative,
)
from .scalars import CycScalar, lcm, parse_scalar, root_of_unity

DEFAULT_NAKAYAMA_ORDER_BOUND = 64


class AlgElem:
    """An element of a FrobAlg, as a dense coordinate vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: FrobAlg, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _check(self, other: AlgElem):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other: AlgElem) -> AlgElem:
        self._check(other)
        return AlgElem(self.algebra, (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: AlgElem) -> AlgElem:
        self._check(other)
        return AlgElem(self.algebra, (a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> AlgElem:
        return AlgElem(self.algebra, (-a for a in self.coords))

    def __mul__(self, other) -> AlgElem:
        if isinstance(other, AlgElem):
            self._check(other)
            return self.algebra.mul(self, other)
        return AlgElem(self.algebra, (a * other for a in self.coords))

    def __rmul__(self, scalar) -> AlgElem:
        return AlgElem(self.algebra, (a * scalar for a in self.coords))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.algebra is other.algebra and all(
            a == b for a, b in zip(self.coords, other.coords)
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return all(not a for a in self.coords)

    def parity(self):
        """0 or 1 if homogeneous, None if mixed or zero."""
        seen = {self.algebra.parities[i] for i, a in enumerate(self.coords) if a}
        return seen.pop() if len(seen) == 1 else None

    def degree(self):
        seen = {self.algebra.degrees[i] for i, a in enumerate(self.coords) if a}
        return seen.pop() if len(seen) == 1 else None

    def trace(self) -> CycScalar:
        acc = CycScalar.zero(self.algebra.conductor)
        for a, t in zip(self.coords, self.algebra.trace_vec):
            if a and t:
                acc = acc + a * t
        return acc

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coords):
            if a:
                terms.append(f"({a})*{self.algebra.basis_labels[i]}")
        return " + ".join(terms) if terms else "0"

    __repr__ = __str__


class FrobAlg:
    """A graded Frobenius superalgebra given by structure constants."""

    def __init__(
        self,
        basis_labels,
        degrees,
        parities,
        struct,
        unit,
        trace_vec,
        conductor: int = 1,
        name: str = "",
        nakayama_order_bound: int = DEFAULT_NAKAYAMA_ORDER_BOUND,
    ):
        self.basis_labels = list(basis_labels)
        self.dim = len(self.basis_labels)
        self.degrees = list(degrees)
        self.parities = list(parities)
        self.name = name or "algebra"
        if len(self.degrees) != self.dim or len(self.parities) != self.dim:
            raise BadSpec("degrees/parities length does not match basis")
        if len(struct) != self.dim or any(
            len(plane) != self.dim or any(len(row) != self.dim for row in plane)
            for plane in struct
        ):
            raise BadSpec("structure constant cube has wrong shape")
        if len(unit) != self.dim or len(trace_vec) != self.dim:
            raise BadSpec("unit/trace vector length does not match basis")

        self.conductor = conductor
        self.struct = [
            [[CycScalar._coerce(v, conductor) for v in row] for row in plane]
            for plane in struct
        ]
        self.unit = [CycScalar._coerce(v, conductor) for v in unit]
        self.trace_vec = [CycScalar._coerce(v, conductor) for v in trace_vec]

        self._validate_grading()
        self._validate_unit()
        self._validate_associativity()
        self.delta = max(self.degrees)
        self._validate_trace_homogeneity()
        self._derive_frobenius_data(nakayama_order_bound)
        self._psi_pow_cache: dict[int, list] = {}
        self._graded_piece_cache: dict = {}

    # -- construction-time checks -------------------------------------------

    def _validate_grading(self):
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    if self.struct[i][j][k]:
                        if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                            raise GradingViolation(
                                f"deg({self.basis_labels[i]}*{self.basis_labels[j]})"
                                " is not additive"
                            )
                        if self.parities[k] != (self.parities[i] + self.parities[j]) % 2:
                            raise GradingViolation(
                                f"parity of {self.basis_labels[i]}*{self.basis_labels[j]}"
                                " is not additive"
                            )

    def _validate_unit(self):
        for j in range(self.dim):
            e_j = self.basis_elem(j)
            if self.mul(self.unit_elem(), e_j) != e_j or self.mul(e_j, self.unit_elem()) != e_j:
                raise NoUnit("declared unit does not act as identity")

    def _validate_associativity(self):
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mul(self.basis_elem(i), self.basis_elem(j))
                for k in range(self.dim):
                    left = self.mul(ij, self.basis_elem(k))
                    right = self.mul(
                        self.basis_elem(i), self.mul(self.basis_elem(j), self.basis_elem(k))
                    )
                    if left != right:
                        raise NotAssociative(
                            f"({self.basis_labels[i]}*{self.basis_labels[j]})"
                            f"*{self.basis_labels[k]} differs from the other bracketing"
                        )

    def _validate_trace_homogeneity(self):
        for i, t in enumerate(self.trace_vec):
            if t and (self.degrees[i] != self.delta or self.parities[i] != 0):
                raise GradingViolation(
                    "trace must be supported on even elements of top degree"
                )

    def _derive_frobenius_data(self, order_bound: int):
        gram = [
            [self.mul(self.basis_elem(i), self.basis_elem(j)).trace() for j in range(self.dim)]
            for i in range(self.dim)
        ]
        self.gram = gram
        dual = linalg.inverse(gram)
        if dual is None:
            raise DegenerateTrace("trace pairing is degenerate")
        self.dual_matrix = dual  # row i = coordinates of basis_labels[i]^vee

        # tr(fg) = (-1)^{|f||g|} tr(g psi(f)): solve N * gram^T = V
        signed = [
            [
                -gram[i][j] if self.parities[i] and self.parities[j] else gram[i][j]
                for j in range(self.dim)
            ]
            for i in range(self.dim)
        ]
        gram_t_inv = linalg.inverse(linalg.transpose(gram))
        self.nakayama = linalg.mat_mul(signed, gram_t_inv)

        power = self.nakayama
        ident = linalg.eye(self.dim)
        theta = 1
        while power != ident:
            power = linalg.mat_mul(power, self.nakayama)
            theta += 1
            if theta > order_bound:
                raise NakayamaInfiniteOrder(
                    f"Nakayama order exceeds bound {order_bound}"
                )
        self.theta = theta

        if self.conductor % theta:
            self._lift_field(lcm(self.conductor, theta))

        # eigen-decomposition: eigenvalues are theta-th roots of unity
        eigen_pairs = []
        total = 0
        for j in range(self.theta):
            ev = root_of_unity(self.theta, j).lift(self.conductor)
            shifted = [
                [
                    self.nakayama[r][c] - (ev if r == c else CycScalar.zero())
                    for c in range(self.dim)
                ]
                for r in range(self.dim)
            ]
            for vec in linalg.nullspace(linalg.transpose(shifted)):
                # nullspace of N^T acting on columns = row vectors v with vN = ev v
                eigen_pairs.append((ev, vec))
                total += 1
        if total != self.dim:
            raise NakayamaNotDiagonalizable("psi eigenvectors do not span")
        self.psi_eigenvalues = [p[0] for p in eigen_pairs]
        self.psi_eigenbasis = [p[1] for p in eigen_pairs]

    def _lift_field(self, big: int):
        self.conductor = big
        lift = lambda s: s.lift(big)
        self.struct = [[[lift(v) for v in row] for row in plane] for plane in self.struct]
        self.unit = [lift(v) for v in self.unit]
        self.trace_vec = [lift(v) for v in self.trace_vec]
        self.gram = [[lift(v) for v in row] for row in self.gram]
        self.dual_matrix = [[lift(v) for v in row] for row in self.dual_matrix]
        self.nakayama = [[lift(v) for v in row] for row in self.nakayama]

    # -- elements -------------------------------------------------------------

    def zero_elem(self) -> AlgElem:
        return AlgElem(self, [CycScalar.zero(self.conductor)] * self.dim)

    def unit_elem(self) -> AlgElem:
        return AlgElem(self, self.unit)

    def basis_elem(self, i: int) -> AlgElem:
        coords = [CycScalar.zero(self.conductor)] * self.dim
        coords[i] = CycScalar.one(self.conductor)
        return AlgElem(self, coords)

    def elem(self, coords) -> AlgElem:
        return AlgElem(self, [CycScalar._coerce(c, self.conductor) for c in coords])

    def from_label(self, label: str) -> AlgElem:
        return self.basis_elem(self.basis_labels.index(label))

    def scalar(self, value) -> CycScalar:
        return CycScalar._coerce(value, self.conductor)

    def mul(self, u: AlgElem, v: AlgElem) -> AlgElem:
        out = [CycScalar.zero(self.conductor)] * self.dim
        for i, a in enumerate(u.coords):
            if not a:
                continue
            for j, b in enumerate(v.coords):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.struct[i][j]):
                    if c:
                        out[k] = out[k] + ab * c
        return AlgElem(self, out)

    def dual_basis(self) -> list[AlgElem]:
        """Left dual basis: tr(b_i^vee b_j) = delta_ij."""
        return [AlgElem(self, row) for row in self.dual_matrix]

    def dual_of_basis(self, rows) -> list[AlgElem]:
        """Left duals of an arbitrary basis given by coordinate rows."""
        elems = [AlgElem(self, r) for r in rows]
        gram = [[self.mul(x, y).trace() for y in elems] for x in elems]
        inv = linalg.inverse(gram)
        if inv is None:
            raise DegenerateTrace("given rows are not a basis")
        coord_rows = linalg.mat_mul(inv, [list(r) for r in rows])
        return [AlgElem(self, r) for r in coord_rows]

    def psi(self, u: AlgElem, power: int = 1) -> AlgElem:
        power %= self.theta
        if power == 0:
            return u
        mat = self._psi_power_matrix(power)
        return AlgElem(self, linalg.mat_vec(linalg.transpose(mat), list(u.coords)))

    def _psi_power_matrix(self, power: int):
        power %= self.theta
        if power not in self._psi_pow_cache:
            if power == 0:
                self._psi_pow_cache[0] = linalg.eye(self.dim)
            else:
                self._psi_pow_cache[power] = linalg.mat_mul(
                    self._psi_power_matrix(power - 1), self.nakayama
                )
        return self._psi_pow_cache[power]

    def psi_on_basis(self, i: int, power: int = 1):
        """Coordinates of psi^power(b_i)."""
        return self._psi_power_matrix(power)[i]

    def is_invertible(self, u: AlgElem) -> bool:
        mat = [list(self.mul(u, self.basis_elem(j)).coords) for j in range(self.dim)]
        return linalg.inverse(linalg.transpose(mat)) is not None

    # -- distinguished subspaces ----------------------------------------------

    def graded_piece(self, k: int, fixed_only: bool = False) -> list[AlgElem]:
        """Basis of F^(k) = {f : g f = (-1)^{|f||g|} f psi^k(g) for all g},
        intersected with the psi-fixed subspace when fixed_only is set."""
        key = (k % self.theta, fixed_only)
        if key in self._graded_piece_cache:
            return self._graded_piece_cache[key]
        vectors = []
        for target_parity in (0, 1):
            idxs = [i for i in range(self.dim) if self.parities[i] == target_parity]
            if not idxs:
                continue
            rows = []
            # unknowns: coefficients of f on the parity-homogeneous indices
            for g in range(self.dim):
                sign = -1 if (self.parities[g] and target_parity) else 1
                for out in range(self.dim):
                    row = []
                    for i in idxs:
                        # coefficient of b_out in g*b_i - sign * b_i*psi^k(g)
                        left = self.struct[g][i][out]
                        right = CycScalar.zero(self.conductor)
                        for h, c in enumerate(self.psi_on_basis(g, k)):
                            if c and self.struct[i][h][out]:
                                right = right + c * self.struct[i][h][out]
                        row.append(left - sign * right)
                    rows.append(row)
            if fixed_only:
                for out in range(self.dim):
                    row = []
                    for i in idxs:
                        v = self.psi_on_basis(i, 1)[out]
                        if out == i:
                            v = v - CycScalar.one(self.conductor)
                        row.append(v)
                    rows.append(row)
            for vec in linalg.nullspace(rows):
                full = [CycScalar.zero(self.conductor)] * self.dim
                for pos, i in enumerate(idxs):
                    full[i] = vec[pos]
                vectors.append(full)
        result = [AlgElem(self, v) for v in vectors]
        self._graded_piece_cache[key] = result
        return result

    def supercenter(self) -> list[AlgElem]:
        return self.graded_piece(0)

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "basis": list(self.basis_labels),
            "degrees": list(self.degrees),
            "parities": list(self.parities),
            "unit": [str(v) for v in self.unit],
            "mult": [[[str(v) for v in row] for row in plane] for plane in self.struct],
            "trace": [str(v) for v in self.trace_vec],
        }

    @staticmethod
    def from_json_dict(data: dict, name: str = "") -> FrobAlg:
        try:
            cond = int(data["conductor"])
            parse = lambda s: parse_scalar(str(s), cond)
            return FrobAlg(
                data["basis"],
                [int(d) for d in data["degrees"]],
                [int(p) % 2 for p in data["parities"]],
                [[[parse(v) for v in row] for row in plane] for plane in data["mult"]],
                [parse(v) for v in data["unit"]],
                [parse(v) for v in data["trace"]],
                conductor=cond,
                name=name or data.get("name", ""),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise BadSpec(f"malformed algebra description: {exc}") from exc

    def dump(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=1)
            fh.write("\n")

    @staticmethod
    def load(path) -> FrobAlg:
        with open(path) as fh:
            return FrobAlg.from_json_dict(json.load(fh))

    def __repr__(self):
        return f"FrobAlg({self.name}, dim={self.dim}, theta={self.theta}, delta={self.delta})"


# -- element / algebra text helpers ------------------------------------------


def parse_alg_elem(F: FrobAlg, text: str) -> AlgElem:
    """Parse "c1*label1 + c2*label2" (labels from F, scalar prefixes optional)."""
    labels = sorted(F.basis_labels, key=len, reverse=True)
    out = F.zero_elem()
    for sign, chunk in _signed_chunks(text):
        chunk = chunk.strip()
        coeff = F.scalar(sign)
        label = None
        for lbl in labels:
            if chunk == lbl:
                label = lbl
                break
            if chunk.endswith("*" + lbl):
                coeff = coeff * parse_scalar(chunk[: -len(lbl) - 1], F.conductor)
                label = lbl
                break
        if label is not None:
            term = coeff * F.from_label(label)
        else:
            term = (coeff * parse_scalar(chunk, F.conductor)) * F.unit_elem()
        out = out + term
    return out


def _signed_chunks(text: str):
    depth = 0
    start = 0
    sign = 1
    text = text.strip()
    chunks = []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > start:
            chunks.append((sign, text[start:i]))
            sign = 1 if ch == "+" else -1
            start = i + 1
        elif depth == 0 and ch == "-" and i == start:
            sign = -sign
            start = i + 1
    chunks.append((sign, text[start:]))
    return chunks


def alg_elem_str(u: AlgElem) -> str:
    return str(u)


# -- builtin algebras ----------------------------------------------------------


def _delta_cube(dim, rule, conductor=1):
    """Cube from a rule (i, j) -> list of (k, scalar)."""
    cube = [
        [[CycScalar.zero(conductor) for _ in range(dim)] for _ in range(dim)]
        for _ in range(dim)
    ]
    for i in range(dim):
        for j in range(dim):
            for k, v in rule(i, j):
                cube[i][j][k] = cube[i][j][k] + CycScalar._coerce(v, conductor)
    return cube


def trivial_algebra() -> FrobAlg:
    return FrobAlg(["1"], [0], [0], [[[1]]], [1], [1], name="trivial")


def clifford_algebra() -> FrobAlg:
    """Cl: one odd generator c with c^2 = 1; tr(1) = 1, tr(c) = 0."""
    rule = lambda i, j: [((i + j) % 2, 1)]
    return FrobAlg(
        ["1", "c"],
        [0, 0],
        [0, 1],
        _delta_cube(2, rule),
        [1, 0],
        [1, 0],
        name="clifford",
    )


def dual_numbers_algebra() -> FrobAlg:
    """k[z]/(z^2) with |z| = 2; tr(a + bz) = b."""
    rule = lambda i, j: [(i + j, 1)] if i + j < 2 else []
    return FrobAlg(
        ["1", "z"],
        [0, 2],
        [0, 0],
        _delta_cube(2, rule),
        [1, 0],
        [0, 1],
        name="dual_numbers",
    )


def group_algebra(table, labels=None, name="group_algebra") -> FrobAlg:
    """Group algebra from a multiplication table table[i][j] = index of g_i g_j.

    The trace is the coefficient of the identity element.  Associativity,
    identity, and inverses are validated.
    """
    size = len(table)
    if any(len(row) != size for row in table):
        raise BadParams("multiplication table must be square")
    if any(not 0 <= v < size for row in table for v in row):
        raise BadParams("table entries out of range")
    for i in range(size):
        for j in range(size):
            for k in range(size):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise BadParams("multiplication table is not associative")
    ident = None
    for e in range(size):
        if all(table[e][j] == j and table[j][e] == j for j in range(size)):
            ident = e
            break
    if ident is None:
        raise BadParams("multiplication table has no identity")
    for i in range(size):
        if not any(table[i][j] == ident for j in range(size)):
            raise BadParams(f"element {i} has no inverse")
    if labels is None:
        labels = [f"g{i}" for i in range(size)]
        labels[ident] = "e"
    unit = [1 if i == ident else 0 for i in range(size)]
    trace = [1 if i == ident else 0 for i in range(size)]
    rule = lambda i, j: [(table[i][j], 1)]
    return FrobAlg(
        labels,
        [0] * size,
        [0] * size,
        _delta_cube(size, rule),
        unit,
        trace,
        name=name,
    )


def cyclic_group_algebra(m: int) -> FrobAlg:
    if m < 1:
        raise BadParams("cyclic group order must be positive")
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    labels = ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, m)]
    return group_algebra(table, labels, name=f"cyclic_group_{m}")


def symmetric_group_algebra(n: int) -> FrobAlg:
    """Group algebra of S_n (used for the nonabelian examples)."""
    from . import permutations as perms

    elems = perms.all_permutations(n)
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[perms.mul(p, q)] for q in elems] for p in elems]
    labels = ["".join(map(str, p)) for p in elems]
    return group_algebra(table, labels, name=f"symmetric_group_{n}")


def taft_algebra(q: int, y_degree: int = 2) -> FrobAlg:
    """Taft algebra: g^q = 1, y^q = 0, yg = omega g y with omega = zeta_q.

    Basis y^k g^l for 0 <= k, l < q; tr(y^k g^l) = [k = q-1][l = 0];
    g is even of degree 0, y even of degree y_degree.
    """
    if q < 2:
        raise BadParams("taft algebra needs q >= 2")
    if y_degree < 0:
        raise BadParams("y degree must be nonnegative")
    dim = q * q
    idx = lambda k, l: k * q + l
    labels = []
    for k in range(q):
        for l in range(q):
            yk = "1" if k == 0 else ("y" if k == 1 else f"y^{k}")
            gl = "" if l == 0 else ("g" if l == 1 else f"g^{l}")
            if k == 0 and l > 0:
                labels.append(gl)
            elif l == 0:
                labels.append(yk)
            else:
                labels.append(f"{yk}*{gl}")
    omega = root_of_unity(q)

    def rule(i, j):
        k1, l1 = divmod(i, q)
        k2, l2 = divmod(j, q)
        if k1 + k2 >= q:
            return []
        # (y^k1 g^l1)(y^k2 g^l2) = omega^{-l1 k2} y^{k1+k2} g^{l1+l2}
        return [(idx(k1 + k2, (l1 + l2) % q), omega ** (-l1 * k2))]

    degrees = [y_degree * k for k in range(q) for _ in range(q)]
    unit = [1 if i == 0 else 0 for i in range(dim)]
    trace = [1 if i == idx(q - 1, 0) else 0 for i in range(dim)]
    return FrobAlg(
        labels,
        degrees,
        [0] * dim,
        _delta_cube(dim, rule, q),
        unit,
        trace,
        conductor=q,
        name=f"taft_{q}",
    )


def opposite_algebra(F: FrobAlg) -> FrobAlg:
    """F^op: a * b = (-1)^{|a||b|} b a, same trace."""
    cube = [
        [
            [
                -F.struct[j][i][k]
                if F.parities[i] and F.parities[j]
                else F.struct[j][i][k]
                for k in range(F.dim)
            ]
            for j in range(F.dim)
        ]
        for i in range(F.dim)
    ]
    return FrobAlg(
        F.basis_labels,
        F.degrees,
        F.parities,
        cube,
        F.unit,
        F.trace_vec,
        conductor=F.conductor,
        name=F.name + "_op",
    )


BUILTIN_NAMES = ("trivial", "clifford", "dual_numbers", "group_algebra", "cyclic_group", "taft")


def builtin(name: str, params=None) -> FrobAlg:
    """Construct a named builtin algebra.

    ``group_algebra`` takes {"table": [[...]], "labels": [...]};
    ``cyclic_group`` takes {"m": int}; ``taft`` takes {"q": int, "y_degree": int}.
    """
    params = params or {}
    if name == "trivial":
        return trivial_algebra()
    if name == "clifford":
        return clifford_algebra()
    if name == "dual_numbers":
        return dual_numbers_algebra()
    if name == "group_algebra":
        if "table" not in params:
            raise BadParams("group_algebra requires a multiplication table")
        return group_algebra(params["table"], params.get("labels"))
    if name == "cyclic_group":
        return cyclic_group_algebra(int(params.get("m", 2)))
    if name == "taft":
        return taft_algebra(int(params.get("q", 2)), int(params.get("y_degree", 2)))
    raise BadParams(f"unknown builtin algebra {name!r}")


# -- morphism verification -------------------------------------------------------


class MorphismVerdict:
    """Result of check_frobenius_morphism; bool(verdict) is validity."""

    def __init__(self):
        self.failures: list[str] = []

    def fail(self, reason: str):
        self.failures.append(reason)

    def __bool__(self):
        return not self.failures

    def __repr__(self):
        return "valid" if self else f"invalid: {'; '.join(self.failures)}"


def check_frobenius_morphism(F: FrobAlg, G: FrobAlg, matrix, anti: bool = False) -> MorphismVerdict:
    """Check that matrix (rows = images of F's basis in G's coordinates) is a
    trace-preserving algebra (anti)homomorphism.

    For a valid antihomomorphism, additionally asserts tau psi = psi^{-1} tau
    and the dual-basis identity tau(b^vee)^vee = (-1)^{|b|} tau(b).
    """
    if len(matrix) != F.dim or any(len(row) != G.dim for row in matrix):
        raise DimensionMismatch("morphism matrix has wrong shape")
    matrix = [[G.scalar(v) for v in row] for row in matrix]
    verdict = MorphismVerdict()
    images = [AlgElem(G, row) for row in matrix]

    for i, img in enumerate(images):
        if img.is_zero():
            continue
        deg, par = img.degree(), img.parity()
        if deg != F.degrees[i] or par != F.parities[i]:
            verdict.fail(f"image of {F.basis_labels[i]} is not homogeneous of the same type")

    unit_image = G.zero_elem()
    for c, img in zip(F.unit, images):
        unit_image = unit_image + c * img
    if unit_image != G.unit_elem():
        verdict.fail("unit is not preserved")

    for i in range(F.dim):
        for j in range(F.dim):
            target = G.zero_elem()
            for k, c in enumerate(F.struct[i][j]):
                if c:
                    target = target + c * images[k]
            if anti:
                got = G.mul(images[j], images[i])
                if F.parities[i] and F.parities[j]:
                    got = -got
            else:
                got = G.mul(images[i], images[j])
            if got != target:
                kind = "antimultiplicative" if anti else "multiplicative"
                verdict.fail(
                    f"not {kind} on ({F.basis_labels[i]}, {F.basis_labels[j]})"
                )
                break
        else:
            continue
        break

    for i, img in enumerate(images):
        if img.trace() != F.trace_vec[i]:
            verdict.fail(f"trace not preserved on {F.basis_labels[i]}")
            break

    if verdict and anti:
        # tau psi = psi^{-1} tau, as matrices acting on coordinate rows
        left = linalg.mat_mul(F.nakayama, matrix)
        psi_inv = linalg.inverse(G.nakayama)
        right = linalg.mat_mul(matrix, psi_inv)
        assert left == right, "tau psi != psi^{-1} tau for a valid anti-isomorphism"
        # duals of the basis {tau(b^vee)} are (-1)^{|b|} tau(b)
        tau_dual_rows = linalg.mat_mul(F.dual_matrix, matrix)
        duals = G.dual_of_basis(tau_dual_rows)
        for i, d in enumerate(duals):
            expected = images[i] if F.parities[i] == 0 else -images[i]
            assert d == expected, "dual-basis identity fails for anti-isomorphism"
    return verdict
