"""Planar binary tree monomials and formal multilinear elements.

A monomial is either a leaf (an int, the 1-based variable index) or a node
``(symbol, left, right)`` where symbol names the product used at that node.
The single-product signature uses the symbol ``"mu"``; dialgebras use
``("l", "r")`` for the left/right products, ``"star"`` is the auxiliary
product of conservative algebras and ``"b"`` a formal bracket.

Monomial order (fixed for reproducibility): tree shapes are listed
left-comb first (for degree 4: (((ab)c)d), ((a(bc))d), ((ab)(cd)),
(a((bc)d)), (a(b(cd)))), then leaf assignments in lexicographic order, then
node labels in signature order, assigned by preorder traversal.  Basis
reductions keep the earliest monomials of this order and eliminate from
the tail.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterable, Union

from .exactfield import Field, Frac, QDELTA, QQ, RationalFunction, common_field

Monomial = Union[int, tuple]

MU = "mu"
SINGLE = (MU,)
DIALG = ("l", "r")

_SYMBOL_TEXT = {"mu": "", "l": " -| ", "r": " |- ", "star": " * ", "b": " , "}


def node(symbol: str, left: Monomial, right: Monomial) -> Monomial:
    return (symbol, left, right)


def is_leaf(m: Monomial) -> bool:
    return isinstance(m, int)


def degree(m: Monomial) -> int:
    if is_leaf(m):
        return 1
    return degree(m[1]) + degree(m[2])


def leaves(m: Monomial) -> tuple[int, ...]:
    if is_leaf(m):
        return (m,)
    return leaves(m[1]) + leaves(m[2])


def symbols_used(m: Monomial) -> frozenset[str]:
    if is_leaf(m):
        return frozenset()
    return frozenset({m[0]}) | symbols_used(m[1]) | symbols_used(m[2])


def map_vars(m: Monomial, mapping) -> Monomial:
    """Relabel leaves; mapping is a dict or callable on variable indices."""
    get = mapping.__getitem__ if isinstance(mapping, dict) else mapping
    if is_leaf(m):
        return get(m)
    return (m[0], map_vars(m[1], mapping), map_vars(m[2], mapping))


def substitute_var(m: Monomial, var: int, replacement: Monomial) -> Monomial:
    if is_leaf(m):
        return replacement if m == var else m
    return (m[0], substitute_var(m[1], var, replacement), substitute_var(m[2], var, replacement))


def map_symbols(m: Monomial, mapping: dict[str, str]) -> Monomial:
    if is_leaf(m):
        return m
    return (mapping.get(m[0], m[0]), map_symbols(m[1], mapping), map_symbols(m[2], mapping))


def shape_of(m: Monomial):
    if is_leaf(m):
        return None
    return (shape_of(m[1]), shape_of(m[2]))


@lru_cache(maxsize=None)
def shapes(d: int) -> tuple:
    """All binary tree shapes on d leaves, left-heavy splits first."""
    if d == 1:
        return (None,)
    out = []
    for left_size in range(d - 1, 0, -1):
        for ls in shapes(left_size):
            for rs in shapes(d - left_size):
                out.append((ls, rs))
    return tuple(out)


def _fill_shape(shape, vars_iter, labels_iter) -> Monomial:
    if shape is None:
        return next(vars_iter)
    # preorder: root label first, then left subtree, then right subtree
    sym = next(labels_iter)
    left = _fill_shape(shape[0], vars_iter, labels_iter)
    right = _fill_shape(shape[1], vars_iter, labels_iter)
    return (sym, left, right)


def build_monomial(shape, variables: Iterable[int], labels: Iterable[str]) -> Monomial:
    return _fill_shape(shape, iter(variables), iter(labels))


@lru_cache(maxsize=None)
def all_monomials(d: int, signature: tuple[str, ...]) -> tuple[Monomial, ...]:
    """The ordered multilinear monomial basis on variables 1..d."""
    out = []
    for shape in shapes(d):
        for perm in itertools.permutations(range(1, d + 1)):
            for labels in itertools.product(signature, repeat=d - 1):
                out.append(build_monomial(shape, perm, labels))
    return tuple(out)


def node_labels(m: Monomial) -> tuple[str, ...]:
    if is_leaf(m):
        return ()
    return (m[0],) + node_labels(m[1]) + node_labels(m[2])


def sort_key(m: Monomial, signature: tuple[str, ...]):
    d = degree(m)
    return (
        shapes(d).index(shape_of(m)),
        leaves(m),
        tuple(signature.index(s) for s in node_labels(m)),
    )


def pretty(m: Monomial, names: Callable[[int], str] = None) -> str:
    name = names or (lambda i: f"x{i}")
    def go(t, top=False):
        if is_leaf(t):
            return name(t)
        sep = _SYMBOL_TEXT.get(t[0], f" {t[0]} ")
        body = f"{go(t[1])}{sep or ' '}{go(t[2])}"
        return body if top else f"({body})"
    return go(m, top=True)


class Element:
    """Formal linear combination of tree monomials with exact coefficients.

    Zero coefficients are never stored.  Instances are treated as
    immutable; operations return new elements.
    """

    __slots__ = ("terms", "field")

    def __init__(self, terms=None, field: Field = None):
        clean = {}
        for m, c in (terms or {}).items():
            if c:
                clean[m] = c
        if field is None:
            field = common_field(clean.values())
        if field is QDELTA:
            clean = {m: QDELTA.coerce(c) for m, c in clean.items()}
        else:
            clean = {m: QQ.coerce(c) for m, c in clean.items()}
        self.terms = clean
        self.field = field

    @staticmethod
    def monomial(m: Monomial, coeff=1, field: Field = None) -> "Element":
        return Element({m: coeff}, field)

    @staticmethod
    def zero(field: Field = QQ) -> "Element":
        return Element({}, field)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero element")
        return degree(next(iter(self.terms)))

    def promote(self, field: Field) -> "Element":
        if field is self.field:
            return self
        return Element(self.terms, field)

    def __add__(self, other: "Element") -> "Element":
        field = QDELTA if QDELTA in (self.field, other.field) else QQ
        out = dict(self.terms)
        for m, c in other.terms.items():
            cur = out.get(m)
            out[m] = c if cur is None else cur + c
        return Element(out, field)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-1) * other

    def __neg__(self) -> "Element":
        return (-1) * self

    def __rmul__(self, scalar) -> "Element":
        field = self.field
        if isinstance(scalar, RationalFunction) and not scalar.is_constant():
            field = QDELTA
        return Element({m: scalar * c for m, c in self.terms.items()}, field)

    def scale(self, scalar) -> "Element":
        return scalar * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_monomials(self, fn) -> "Element":
        """Apply fn: monomial -> Element and extend linearly."""
        out = Element.zero(self.field)
        for m, c in self.terms.items():
            out = out + c * fn(m)
        return out

    def apply_perm(self, perm: dict[int, int]) -> "Element":
        return Element({map_vars(m, perm): c for m, c in self.terms.items()}, self.field)

    def substitute(self, var: int, replacement: Monomial) -> "Element":
        return Element({substitute_var(m, var, replacement): c for m, c in self.terms.items()}, self.field)

    def map_symbols(self, mapping: dict[str, str]) -> "Element":
        out = {}
        for m, c in self.terms.items():
            key = map_symbols(m, mapping)
            out[key] = out.get(key, 0) + c
        return Element(out, self.field)

    def eval_coeffs_at(self, delta: Frac) -> "Element":
        """Specialize Q(d) coefficients at a rational parameter value."""
        if self.field is QQ:
            return self
        return Element({m: c.eval(delta) for m, c in self.terms.items()}, QQ)

    def __repr__(self):
        if not self.terms:
            return "0"
        sig = tuple(sorted(set().union(*(symbols_used(m) for m in self.terms)))) or SINGLE
        parts = []
        for m in sorted(self.terms, key=lambda t: sort_key(t, sig)):
            parts.append(f"({self.terms[m]!r})*{pretty(m)}")
        return " + ".join(parts)


def element(field: Field = QQ, *terms) -> Element:
    """Convenience constructor: element(field, (coeff, monomial), ...)."""
    out = {}
    for coeff, m in terms:
        out[m] = out.get(m, 0) + coeff
    return Element(out, field)


# shorthand builders for the single-product degree-2/3/4 monomials

def m2(i: int, j: int, sym: str = MU) -> Monomial:
    return (sym, i, j)


def left3(i: int, j: int, k: int, sym: str = MU) -> Monomial:
    """(x_i x_j) x_k"""
    return (sym, (sym, i, j), k)


def right3(i: int, j: int, k: int, sym: str = MU) -> Monomial:
    """x_i (x_j x_k)"""
    return (sym, i, (sym, j, k))
