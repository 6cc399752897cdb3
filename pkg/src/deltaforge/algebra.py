"""Finite-dimensional algebras given by structure constants, and the
structural invariants built on them: products of subspaces, descending
series, annihilators, ideals, quotients, multiplication operators,
eigenpairs, one-variable power identities, generating length and
fingerprints.

Basis indices are 1-based throughout, matching the usual e_1..e_n
conventions for multiplication tables.  Vectors are dense tuples of field
elements; products are evaluated through a sparse structure table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .exactfield import (
    Field,
    FieldMismatch,
    Frac,
    Matrix,
    QDELTA,
    QQ,
    RationalFunction,
    charpoly,
    kernel,
    rational_roots,
    rref,
    span_membership,
    NOT_IN_SPAN,
)
from . import trees
from .trees import Element, Monomial


class MissingSecondProduct(ValueError):
    pass


class NotAnIdeal(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"subspace is not a two-sided ideal; witness {witness}")


class NotGenerating(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


def _clean_products(field: Field, dim: int, products) -> dict:
    table = {}
    for (i, j), res in products.items():
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ValueError(f"product index ({i},{j}) out of range 1..{dim}")
        row = {}
        for k, c in res.items():
            if not 1 <= k <= dim:
                raise ValueError(f"result index {k} out of range 1..{dim}")
            c = field.coerce(c)
            if not field.is_zero(c):
                row[k] = c
        if row:
            table[(i, j)] = row
    return table


class Algebra:
    """Structure-constant algebra; optionally carries a second product."""

    def __init__(self, name, dim, products, field=QQ, delta=None, second=None):
        self.name = name
        self.dim = dim
        self.field = field
        self.delta = None if delta is None else Frac(delta)
        self.table = _clean_products(field, dim, products)
        self.second = None if second is None else _clean_products(field, dim, second)

    def pair(self, i: int, j: int, which: str = "first") -> dict:
        if which == "first":
            return self.table.get((i, j), {})
        if self.second is None:
            raise MissingSecondProduct(f"{self.name} has no second product")
        return self.second.get((i, j), {})

    def basis_vector(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(1, self.dim + 1))

    def multiply(self, x: Sequence, y: Sequence, which: str = "first") -> tuple:
        """Bilinear extension of the structure tensor."""
        acc = {}
        for i, xi in enumerate(x, start=1):
            if self.field.is_zero(xi):
                continue
            for j, yj in enumerate(y, start=1):
                if self.field.is_zero(yj):
                    continue
                coeff = xi * yj
                for k, c in self.pair(i, j, which).items():
                    cur = acc.get(k)
                    acc[k] = coeff * c if cur is None else cur + coeff * c
        z = self.field.zero
        return tuple(acc.get(k, z) for k in range(1, self.dim + 1))

    def sparse_multiply(self, x: dict, y: dict, which: str = "first") -> dict:
        acc = {}
        for i, xi in x.items():
            for j, yj in y.items():
                prods = self.pair(i, j, which)
                if not prods:
                    continue
                coeff = xi * yj
                for k, c in prods.items():
                    cur = acc.get(k)
                    val = coeff * c if cur is None else cur + coeff * c
                    acc[k] = val
        return {k: v for k, v in acc.items() if not self.field.is_zero(v)}

    def opposite(self) -> "Algebra":
        flipped = {(j, i): dict(res) for (i, j), res in self.table.items()}
        return Algebra(f"{self.name}^op", self.dim, flipped, self.field, self.delta)

    def promote(self) -> "Algebra":
        """Return the same algebra with scalars reread in Q(d)."""
        if self.field is QDELTA:
            return self
        return Algebra(self.name, self.dim, self.table, QDELTA, self.delta,
                       self.second)

    def specialize(self, delta_value: Frac) -> "Algebra":
        """Evaluate a Q(d) structure tensor at a rational parameter value."""
        if self.field is QQ:
            return self
        prods = {
            (i, j): {k: c.eval(delta_value) for k, c in res.items()}
            for (i, j), res in self.table.items()
        }
        return Algebra(f"{self.name}@{delta_value}", self.dim, prods, QQ)

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim}, field={self.field})"


def zero_algebra(dim: int, field: Field = QQ, name: str = None) -> Algebra:
    return Algebra(name or f"zero{dim}", dim, {}, field)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


class Subspace:
    """Subspace in canonical (reduced row-echelon) form.

    Equality of subspaces is literal equality of the canonical basis, so
    it is decidable and hashable.
    """

    __slots__ = ("matrix", "ambient_dim")

    def __init__(self, matrix: Matrix, ambient_dim: int):
        self.matrix = matrix
        self.ambient_dim = ambient_dim

    @staticmethod
    def from_vectors(field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(field.coerce(x) for x in v) for v in vectors]
        vecs = [v for v in vecs if any(not field.is_zero(x) for x in v)]
        if not vecs:
            return Subspace(Matrix(field, ()), ambient_dim)
        res = rref(Matrix(field, tuple(vecs)))
        rows = res.reduced.rows[: res.rank]
        return Subspace(Matrix(field, rows), ambient_dim)

    @staticmethod
    def zero(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(Matrix(field, ()), ambient_dim)

    @staticmethod
    def whole(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(Matrix.identity(field, ambient_dim), ambient_dim)

    @property
    def field(self) -> Field:
        return self.matrix.field

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def basis(self) -> tuple:
        return self.matrix.rows

    def contains(self, v: Sequence) -> bool:
        return span_membership(self.matrix, v) is not NOT_IN_SPAN if self.dim else all(
            self.field.is_zero(self.field.coerce(x)) for x in v
        )

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis())

    def add(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(self.field, self.ambient_dim, self.basis() + other.basis())

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked coordinate systems."""
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        stacked = Matrix(self.field, self.basis() + other.basis()).transpose()
        out = []
        for coeffs in kernel(stacked):
            v = [self.field.zero] * self.ambient_dim
            for c, row in zip(coeffs[: self.dim], self.basis()):
                for idx in range(self.ambient_dim):
                    v[idx] = v[idx] + c * row[idx]
            out.append(tuple(v))
        return Subspace.from_vectors(self.field, self.ambient_dim, out)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.ambient_dim, self.matrix.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"


def span_of_elements(A: Algebra, vectors: Iterable[Sequence]) -> Subspace:
    return Subspace.from_vectors(A.field, A.dim, vectors)


def subspace_product(A: Algebra, U: Subspace, V: Subspace, which: str = "first") -> Subspace:
    """Canonical span of {u v : u in basis U, v in basis V}."""
    prods = [A.multiply(u, v, which) for u in U.basis() for v in V.basis()]
    return Subspace.from_vectors(A.field, A.dim, prods)


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

NOT_TERMINATING = "not-terminating"


def series(A: Algebra, kind: str):
    """Descending series of the requested kind.

    kind: "lower_central"  L^k = sum_{i+j=k} L^i L^j
          "derived"        D^1 = L, D^{k+1} = D^k D^k
          "left_ordered"   L^{[k+1} = L^{[k} L
          "right_ordered"  Z^{k+1]} = Z Z^{k]}

    Returns (chain, index) where chain[k-1] is the k-th term and index is
    the smallest k with zero term, or NOT_TERMINATING when the chain
    stabilizes at a nonzero subspace.
    """
    whole = Subspace.whole(A.field, A.dim)
    chain = [whole]
    if A.dim == 0:
        return chain, 1
    limit = 3 * A.dim + 6
    while len(chain) < limit:
        if kind == "lower_central":
            k = len(chain) + 1
            nxt = Subspace.zero(A.field, A.dim)
            for i in range(1, k):
                nxt = nxt.add(subspace_product(A, chain[i - 1], chain[k - i - 1]))
        elif kind == "derived":
            nxt = subspace_product(A, chain[-1], chain[-1])
        elif kind == "left_ordered":
            nxt = subspace_product(A, chain[-1], whole)
        elif kind == "right_ordered":
            nxt = subspace_product(A, whole, chain[-1])
        else:
            raise ValueError(f"unknown series kind {kind!r}")
        chain.append(nxt)
        if nxt.dim == 0:
            return chain, len(chain)
        tail = A.dim + 2
        if len(chain) > tail and all(t == chain[-1] for t in chain[-tail:]):
            return chain, NOT_TERMINATING
    return chain, NOT_TERMINATING


def nilpotency_index(A: Algebra):
    if A.dim == 0:
        return 1
    return series(A, "lower_central")[1]


def is_nilpotent(A: Algebra) -> bool:
    return nilpotency_index(A) is not NOT_TERMINATING


def is_solvable(A: Algebra) -> bool:
    return series(A, "derived")[1] is not NOT_TERMINATING


# ---------------------------------------------------------------------------
# annihilators and ideals
# ---------------------------------------------------------------------------


def _left_constraint_rows(A: Algebra) -> list:
    """Rows of the system x -> (x e_j)_k; kernel is the left annihilator."""
    rows = []
    for j in range(1, A.dim + 1):
        for k in range(1, A.dim + 1):
            rows.append(tuple(A.pair(i, j).get(k, A.field.zero) for i in range(1, A.dim + 1)))
    return rows


def _right_constraint_rows(A: Algebra) -> list:
    rows = []
    for i in range(1, A.dim + 1):
        for k in range(1, A.dim + 1):
            rows.append(tuple(A.pair(i, j).get(k, A.field.zero) for j in range(1, A.dim + 1)))
    return rows


def annihilator(A: Algebra, side: str = "two_sided") -> Subspace:
    if A.dim == 0:
        return Subspace.zero(A.field, 0)
    rows = []
    if side in ("left", "two_sided"):
        rows.extend(_left_constraint_rows(A))
    if side in ("right", "two_sided"):
        rows.extend(_right_constraint_rows(A))
    basis = kernel(Matrix(A.field, tuple(rows)))
    return Subspace.from_vectors(A.field, A.dim, basis)


def mult_operator(A: Algebra, a: Sequence, side: str = "left") -> Matrix:
    """Matrix of x -> a x (left) or x -> x a (right) in the standard basis."""
    cols = []
    for j in range(1, A.dim + 1):
        e = A.basis_vector(j)
        cols.append(A.multiply(a, e) if side == "left" else A.multiply(e, a))
    return Matrix(A.field, tuple(zip(*cols)) if cols else ())


def element_annihilator(A: Algebra, a: Sequence, kind: str = "both_sides") -> Subspace:
    la = mult_operator(A, a, "left")
    if kind == "right_only":
        system = la
    else:
        system = la.stack(mult_operator(A, a, "right"))
    return Subspace.from_vectors(A.field, A.dim, kernel(system))


def ideal_closure(A: Algebra, seed: Subspace) -> Subspace:
    """Smallest two-sided ideal containing the seed subspace."""
    whole = Subspace.whole(A.field, A.dim)
    current = seed
    while True:
        grown = current.add(subspace_product(A, whole, current)).add(
            subspace_product(A, current, whole)
        )
        if grown == current:
            return current
        current = grown


def is_ideal(A: Algebra, I: Subspace) -> Optional[tuple]:
    """None when I is a two-sided ideal, else a witness (x, v, x*v)."""
    for v in I.basis():
        for j in range(1, A.dim + 1):
            e = A.basis_vector(j)
            left = A.multiply(e, v)
            if not I.contains(left):
                return (e, v, left)
            right = A.multiply(v, e)
            if not I.contains(right):
                return (v, e, right)
    return None


def quotient(A: Algebra, I: Subspace) -> Algebra:
    """Structure constants of A/I on the standard complement basis."""
    witness = is_ideal(A, I)
    if witness is not None:
        raise NotAnIdeal(witness)
    # I.matrix is already in rref; its pivots are the first nonzeros per row
    pivot_cols = tuple(
        next(j for j in range(A.dim) if not A.field.is_zero(row[j])) for row in I.matrix.rows
    )
    complement = [j for j in range(A.dim) if j not in set(pivot_cols)]
    index_of = {col: pos + 1 for pos, col in enumerate(complement)}

    def project(v):
        v = list(v)
        for row, piv in zip(I.matrix.rows, pivot_cols):
            c = v[piv]
            if not A.field.is_zero(c):
                for idx in range(A.dim):
                    v[idx] = v[idx] - c * row[idx]
        return {index_of[j]: v[j] for j in complement if not A.field.is_zero(v[j])}

    prods = {}
    for bi, col_i in enumerate(complement, start=1):
        for bj, col_j in enumerate(complement, start=1):
            res = project(A.multiply(A.basis_vector(col_i + 1), A.basis_vector(col_j + 1)))
            if res:
                prods[(bi, bj)] = res
    return Algebra(f"{A.name}/I", len(complement), prods, A.field, A.delta)


# ---------------------------------------------------------------------------
# eigen machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenReport:
    pairs: tuple  # ((eigenvalue, Subspace), ...)
    nonrational_count: int


def rational_eigenpairs(m: Matrix) -> EigenReport:
    """All rational eigenvalues with exact eigenspaces.

    Nonrational (possibly complex) eigenvalues are reported only as a
    count with multiplicity.
    """
    if m.field is not QQ:
        raise FieldMismatch("eigenpairs are computed over Q")
    poly = charpoly(m)
    roots, residual = rational_roots(poly)
    pairs = []
    n = m.nrows
    for lam in roots:
        shifted = Matrix(QQ, tuple(
            tuple(m.rows[i][j] - (lam if i == j else 0) for j in range(n)) for i in range(n)
        ))
        space = Subspace.from_vectors(QQ, n, kernel(shifted))
        pairs.append((lam, space))
    return EigenReport(tuple(pairs), residual)


@dataclass(frozen=True)
class ZinbielEigenReport:
    checked: int
    vacuous: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def zinbiel_eigen_check(Z: Algebra, delta: Frac) -> ZinbielEigenReport:
    """For eigenpairs (mu, v) of left multiplications with v*v != 0, check
    a (v v) = (mu d / (d + 1)) (v v).

    Candidate eigenvectors are the eigenspace basis vectors and their
    pairwise sums (the property quantifies over all eigenvectors; squares
    are quadratic, so sums are checked separately).
    """
    from .identities import evaluate_identity, get_identity

    delta = Frac(delta)
    if delta in (Frac(-1), Frac(0)):
        raise PreconditionFailed("parameter must avoid -1 and 0")
    verdict = evaluate_identity(Z, get_identity("delta_zinbiel"), delta)
    if not verdict.passed:
        raise PreconditionFailed(f"{Z.name} is not delta-Zinbiel at {delta}")
    factor = delta / (delta + 1)
    checked = vacuous = 0
    failures = []
    for a_idx in range(1, Z.dim + 1):
        a = Z.basis_vector(a_idx)
        report = rational_eigenpairs(mult_operator(Z, a, "left"))
        for mu, space in report.pairs:
            rows = space.basis()
            candidates = list(rows)
            candidates.extend(
                tuple(x + y for x, y in zip(u, w)) for u, w in itertools.combinations(rows, 2)
            )
            for v in candidates:
                sq = Z.multiply(v, v)
                if all(Z.field.is_zero(c) for c in sq):
                    vacuous += 1
                    continue
                checked += 1
                lhs = Z.multiply(a, sq)
                rhs = tuple(mu * factor * c for c in sq)
                if lhs != rhs:
                    failures.append((a_idx, mu, v))
    return ZinbielEigenReport(checked, vacuous, tuple(failures))


# ---------------------------------------------------------------------------
# evaluation of tree monomials and one-variable power identities
# ---------------------------------------------------------------------------


def eval_monomial(A: Algebra, m: Monomial, assignment: dict) -> dict:
    """Evaluate a tree monomial on sparse vectors; 'mu' is the product,
    'star' the second product."""
    if trees.is_leaf(m):
        return assignment[m]
    left = eval_monomial(A, m[1], assignment)
    right = eval_monomial(A, m[2], assignment)
    which = "second" if m[0] == "star" else "first"
    return A.sparse_multiply(left, right, which)


def eval_element(A: Algebra, e: Element, assignment: dict) -> dict:
    acc = {}
    for m, coeff in e.terms.items():
        for k, c in eval_monomial(A, m, assignment).items():
            cur = acc.get(k)
            val = coeff * c if cur is None else cur + coeff * c
            acc[k] = val
    return {k: v for k, v in acc.items() if not A.field.is_zero(v)}


def element_vanishes_on_basis(A: Algebra, e: Element) -> Optional[tuple]:
    """First basis tuple (1-based, lex order) where e is nonzero, or None."""
    if e.is_zero():
        return None
    d = e.degree()
    one = A.field.one
    for combo in itertools.product(range(1, A.dim + 1), repeat=d):
        assignment = {v: {combo[v - 1]: one} for v in range(1, d + 1)}
        value = eval_element(A, e, assignment)
        if value:
            return combo, value
    return None


def sparse_to_tuple(A: Algebra, sparse: dict) -> tuple:
    return tuple(sparse.get(k, A.field.zero) for k in range(1, A.dim + 1))


@dataclass(frozen=True)
class PowerProfile:
    nil3: bool
    third_power_symmetric: bool
    albert_pair: bool
    fourth_powers_zero: bool


def _power_monomials():
    x2x = ("mu", ("mu", 1, 1), 1)
    xx2 = ("mu", 1, ("mu", 1, 1))
    x2x2 = ("mu", ("mu", 1, 1), ("mu", 1, 1))
    x3x = ("mu", x2x, 1)
    xx3 = ("mu", 1, x2x)
    return x2x, xx2, x2x2, x3x, xx3


def power_profile(A: Algebra) -> PowerProfile:
    """One-variable power identities, decided by full linearization.

    Valid over fields of characteristic 0: p(x) == 0 identically iff its
    full multilinearization vanishes on all basis tuples.
    """
    x2x, xx2, x2x2, x3x, xx3 = _power_monomials()

    def holds(*signed_monomials) -> bool:
        e = Element.zero(A.field)
        for coeff, m in signed_monomials:
            e = e + coeff * linearize_power(m, A.field)
        return element_vanishes_on_basis(A, e) is None

    nil3 = holds((1, x2x)) and holds((1, xx2))
    third_sym = holds((1, x2x), (-1, xx2))
    albert = third_sym and holds((1, x2x2), (-1, x3x))
    fourth = holds((1, x2x2)) and holds((1, x3x)) and holds((1, xx3))
    return PowerProfile(nil3, third_sym, albert, fourth)


def linearize_power(m: Monomial, field: Field = QQ) -> Element:
    """Full multilinearization of a one-variable monomial: sum over all
    assignments of distinct variables to the leaves."""
    d = trees.degree(m)
    terms = {}
    for perm in itertools.permutations(range(1, d + 1)):
        it = iter(perm)
        relabeled = _relabel_leaves(m, it)
        terms[relabeled] = terms.get(relabeled, 0) + 1
    return Element(terms, field)


def _relabel_leaves(m: Monomial, it) -> Monomial:
    if trees.is_leaf(m):
        return next(it)
    return (m[0], _relabel_leaves(m[1], it), _relabel_leaves(m[2], it))


# ---------------------------------------------------------------------------
# generating sets, generated subalgebras, fingerprints
# ---------------------------------------------------------------------------


def generating_length(A: Algebra, gens: Sequence[Sequence]) -> int:
    """Least k with span(S^1 + ... + S^k) = A for the given generating set."""
    levels = [span_of_elements(A, gens)]
    cumulative = levels[0]
    if cumulative.dim == A.dim:
        return 1
    for k in range(2, 2 * A.dim + 3):
        nxt = Subspace.zero(A.field, A.dim)
        for i in range(1, k):
            nxt = nxt.add(subspace_product(A, levels[i - 1], levels[k - i - 1]))
        levels.append(nxt)
        new_cumulative = cumulative.add(nxt)
        if new_cumulative.dim == A.dim:
            return k
        if new_cumulative == cumulative and nxt.dim == 0:
            raise NotGenerating(f"span stalls at dimension {cumulative.dim}")
        cumulative = new_cumulative
    raise NotGenerating(f"span stalls at dimension {cumulative.dim}")


def subalgebra_generated(A: Algebra, gens: Sequence[Sequence]) -> tuple[Subspace, Algebra]:
    """Smallest product-closed subspace containing the generators, plus its
    multiplication table on the adapted (discovery-order) basis."""
    adapted = []
    space = Subspace.zero(A.field, A.dim)
    for g in gens:
        g = tuple(A.field.coerce(x) for x in g)
        if not space.contains(g):
            adapted.append(g)
            space = space.add(span_of_elements(A, [g]))
    changed = True
    while changed:
        changed = False
        for u in list(adapted):
            for w in list(adapted):
                p = A.multiply(u, w)
                if any(not A.field.is_zero(c) for c in p) and not space.contains(p):
                    adapted.append(p)
                    space = space.add(span_of_elements(A, [p]))
                    changed = True
    if not adapted:
        return space, zero_algebra(0, A.field, f"<{A.name} gens>")
    basis_matrix = Matrix(A.field, tuple(adapted))
    prods = {}
    for i, u in enumerate(adapted, start=1):
        for j, w in enumerate(adapted, start=1):
            coords = span_membership(basis_matrix, A.multiply(u, w))
            entry = {k: c for k, c in enumerate(coords, start=1) if not A.field.is_zero(c)}
            if entry:
                prods[(i, j)] = entry
    return space, Algebra(f"<{A.name} gens>", len(adapted), prods, A.field)


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    lower_central_dims: tuple
    derived_dims: tuple
    nilpotency_index: object  # int or NOT_TERMINATING
    solvability_index: object
    dim_ann_left: int
    dim_ann_right: int
    dim_ann: int
    commutative: bool
    anticommutative: bool
    dim_square_span: int
    has_idempotent_basis_vector: bool


def fingerprint(A: Algebra) -> Fingerprint:
    lc_chain, lc_index = series(A, "lower_central")
    d_chain, d_index = series(A, "derived")
    comm = all(
        A.multiply(A.basis_vector(i), A.basis_vector(j))
        == A.multiply(A.basis_vector(j), A.basis_vector(i))
        for i in range(1, A.dim + 1)
        for j in range(i, A.dim + 1)
    )
    anticomm = all(
        all(
            A.field.is_zero(a + b)
            for a, b in zip(
                A.multiply(A.basis_vector(i), A.basis_vector(j)),
                A.multiply(A.basis_vector(j), A.basis_vector(i)),
            )
        )
        for i in range(1, A.dim + 1)
        for j in range(i, A.dim + 1)
    )
    squares = [A.multiply(A.basis_vector(i), A.basis_vector(i)) for i in range(1, A.dim + 1)]
    for i in range(1, A.dim + 1):
        for j in range(i + 1, A.dim + 1):
            s = tuple(a + b for a, b in zip(A.basis_vector(i), A.basis_vector(j)))
            squares.append(A.multiply(s, s))
    idem = any(
        A.multiply(A.basis_vector(i), A.basis_vector(i)) == A.basis_vector(i)
        for i in range(1, A.dim + 1)
    )
    return Fingerprint(
        dim=A.dim,
        lower_central_dims=tuple(s.dim for s in lc_chain),
        derived_dims=tuple(s.dim for s in d_chain),
        nilpotency_index=lc_index if A.dim else 1,
        solvability_index=d_index if A.dim else 1,
        dim_ann_left=annihilator(A, "left").dim,
        dim_ann_right=annihilator(A, "right").dim,
        dim_ann=annihilator(A, "two_sided").dim,
        commutative=comm,
        anticommutative=anticomm,
        dim_square_span=span_of_elements(A, squares).dim,
        has_idempotent_basis_vector=idem,
    )
