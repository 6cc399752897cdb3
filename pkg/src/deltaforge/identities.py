"""Named multilinear identities, their exact evaluation on
structure-constant algebras, passing-parameter computation, commutator
mutations and parameter-scaled derivation checks.

Identity conventions (d is the formal parameter):

    right d-Leibniz   (xy)z = d((xz)y + x(yz))
    left d-Leibniz    x(yz) = d((xy)z + y(xz))
    d-Zinbiel         x(yz) = d((xy)z - x(zy))
    d-associator      (x,y,z)_d = (xy)z - d x(yz)
    d-commutator      [x,y]_d = xy - d yx

Degree-2 and degree-3 identities are evaluated on all basis tuples, which
suffices by multilinearity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .algebra import Algebra, element_vanishes_on_basis, sparse_to_tuple, eval_element, mult_operator
from .exactfield import (
    DELTA,
    Field,
    Frac,
    Matrix,
    QDELTA,
    QQ,
    RationalFunction,
    poly_gcd,
    rational_roots,
)
from .trees import Element, left3 as L3, m2 as M2, right3 as R3


class DeltaRequired(ValueError):
    pass


class ForbiddenDelta(ValueError):
    pass


# ---------------------------------------------------------------------------
# identity definitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityDef:
    """A named multilinear identity: the listed elements must all vanish."""

    name: str
    degree: int
    signature: tuple
    elements: tuple  # tuple of Element
    delta_constraints: frozenset
    description: str = ""

    @property
    def field(self) -> Field:
        return QDELTA if any(e.field is QDELTA for e in self.elements) else QQ

    def at_delta(self, delta: Frac) -> "IdentityDef":
        delta = Frac(delta)
        if delta in self.delta_constraints:
            raise ForbiddenDelta(f"{self.name} is undefined at d = {delta}")
        if self.field is QQ:
            return self
        return IdentityDef(
            f"{self.name}@{delta}",
            self.degree,
            self.signature,
            tuple(e.eval_coeffs_at(delta) for e in self.elements),
            frozenset(),
            self.description,
        )


class IdentityFamily:
    """A d-parameterized identity; instantiate with .at(value) or .generic."""

    def __init__(self, name, degree, signature, builder, undefined_at=(), description=""):
        self.name = name
        self.degree = degree
        self.signature = signature
        self._builder = builder
        self.undefined_at = frozenset(Frac(v) for v in undefined_at)
        self.description = description

    def at(self, delta) -> IdentityDef:
        if isinstance(delta, RationalFunction) and not delta.is_constant():
            elements = self._builder(delta)
            constraints = set(self.undefined_at)
            for e in elements:
                for c in e.terms.values():
                    if isinstance(c, RationalFunction):
                        constraints.update(c.denominator_root_list())
            return IdentityDef(
                self.name, self.degree, self.signature, tuple(elements),
                frozenset(constraints), self.description,
            )
        delta = Frac(delta.constant_value() if isinstance(delta, RationalFunction) else delta)
        if delta in self.undefined_at:
            raise ForbiddenDelta(f"{self.name} is undefined at d = {delta}")
        elements = self._builder(delta)
        return IdentityDef(
            f"{self.name}@{delta}", self.degree, self.signature, tuple(elements),
            frozenset(), self.description,
        )

    @property
    def generic(self) -> IdentityDef:
        return self.at(DELTA)


Identity = Union[IdentityDef, IdentityFamily]


def _el(*terms) -> Element:
    out = {}
    for coeff, m in terms:
        out[m] = out.get(m, 0) + coeff
    return Element(out)


def _assoc(gamma, a, b, c) -> Element:
    """(x_a, x_b, x_c)_gamma = (x_a x_b) x_c - gamma x_a (x_b x_c)."""
    return _el((1, L3(a, b, c))) - gamma * _el((1, R3(a, b, c)))


_S3 = tuple(itertools.permutations((1, 2, 3)))


def _sgn(perm) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def _sum_over_s3(term_fn) -> Element:
    out = Element.zero()
    for p in _S3:
        out = out + term_fn(p)
    return out


SINGLE = ("mu",)
CONS_SIG = ("mu", "star")


def _build_registry() -> dict:
    reg: dict[str, Identity] = {}

    def fam(name, degree, builder, undefined_at=(), description="", signature=SINGLE):
        reg[name] = IdentityFamily(name, degree, signature, builder, undefined_at, description)

    def fixed(name, degree, elements, description="", signature=SINGLE):
        reg[name] = IdentityDef(name, degree, signature, tuple(elements), frozenset(), description)

    leib_r = lambda d: (_el((1, L3(1, 2, 3)), (-d, L3(1, 3, 2)), (-d, R3(1, 2, 3))),)
    fam("delta_leibniz_right", 3, leib_r, description="(xy)z = d((xz)y + x(yz))")
    fam("delta_lie", 3, leib_r,
        description="(xy)z = d((xz)y + x(yz)); membership additionally assumes anticommutativity")
    fam("delta_leibniz_left", 3,
        lambda d: (_el((1, R3(1, 2, 3)), (-d, L3(1, 2, 3)), (-d, R3(2, 1, 3))),),
        description="x(yz) = d((xy)z + y(xz))")
    fam("delta_zinbiel", 3,
        lambda d: (_el((1, R3(1, 2, 3)), (-d, L3(1, 2, 3)), (d, R3(1, 3, 2))),),
        description="x(yz) = d((xy)z - x(zy))")
    fam("delta_associative", 3,
        lambda d: (_el((1, L3(1, 2, 3)), (-d, R3(1, 2, 3))),),
        description="(xy)z = d x(yz)")

    fixed("anti_leibniz_right", 3,
          reg["delta_leibniz_right"].at(Frac(-1)).elements,
          "(xy)z = -(xz)y - x(yz)")
    fixed("anti_leibniz_left", 3,
          reg["delta_leibniz_left"].at(Frac(-1)).elements,
          "x(yz) = -(xy)z - y(xz)")
    fixed("anti_zinbiel", 3,
          reg["delta_zinbiel"].at(Frac(-1)).elements,
          "x(yz) = -(xy)z + x(zy)")
    fixed("antiassociative", 3, (_el((1, L3(1, 2, 3)), (1, R3(1, 2, 3))),),
          "(xy)z + x(yz) = 0")
    fixed("associative", 3, (_el((1, L3(1, 2, 3)), (-1, R3(1, 2, 3))),),
          "(xy)z = x(yz)")
    fixed("anti_right_commutative", 3, (_el((1, L3(1, 2, 3)), (1, L3(1, 3, 2))),),
          "(xy)z + (xz)y = 0")
    fixed("commutative", 2, (_el((1, M2(1, 2)), (-1, M2(2, 1))),), "xy = yx")
    fixed("anticommutative", 2, (_el((1, M2(1, 2)), (1, M2(2, 1))),), "xy + yx = 0")
    fixed("two_step_nilpotent", 3,
          (_el((1, L3(1, 2, 3))), _el((1, R3(1, 2, 3)))),
          "(xy)z = 0 and x(yz) = 0")
    fixed("metabelian_product", 4, (_el((1, ("mu", ("mu", 1, 2), ("mu", 3, 4)))),),
          "(xy)(zt) = 0")
    fixed("jacobi", 3,
          (_el((1, L3(1, 2, 3)), (1, L3(2, 3, 1)), (1, L3(3, 1, 2))),),
          "(xy)z + (yz)x + (zx)y = 0")
    fixed("jacobi_jordan", 3,
          (_el((1, L3(1, 2, 3)), (1, L3(2, 3, 1)), (1, L3(3, 1, 2))),),
          "(xy)z + (yz)x + (zx)y = 0; membership additionally assumes commutativity")
    fixed("jj_admissible_sum", 3,
          (_sum_over_s3(lambda p: _el((1, L3(*p)), (1, R3(*p)))),),
          "sum over all permutations of (x,y,z)_{-1} vanishes")
    fixed("lie_admissible", 3,
          (_sum_over_s3(lambda p: _sgn(p) * _el((1, L3(*p)), (-1, R3(*p)))),),
          "signed sum over all permutations of the associator vanishes")
    fixed("malcev_left_combs", 3,
          (_sum_over_s3(lambda p: _sgn(p) * _el((1, L3(*p)))),),
          "signed sum of all left-bracketed triples vanishes")
    fixed("malcev_right_combs", 3,
          (_sum_over_s3(lambda p: _sgn(p) * _el((1, R3(*p)))),),
          "signed sum of all right-bracketed triples vanishes")
    fam("gamma_right_symmetric", 3,
        lambda g: (_el((1, L3(1, 2, 3))) - g * _el((1, R3(1, 2, 3)))
                   - _el((1, L3(1, 3, 2))) + g * _el((1, R3(1, 3, 2))),),
        description="(x,y,z)_g = (x,z,y)_g")

    # Kantor's left-conservative identity, with * the auxiliary product;
    # variables (a, b, x, y) = (1, 2, 3, 4)
    mu, st = "mu", "star"
    cons = (
        _el(
            (1, (mu, 2, (mu, 1, (mu, 3, 4)))),        # b(a(xy))
            (-1, (mu, 2, (mu, (mu, 1, 3), 4))),        # -b((ax)y)
            (-1, (mu, 2, (mu, 3, (mu, 1, 4)))),        # -b(x(ay))
            (-1, (mu, 1, (mu, (mu, 2, 3), 4))),        # -a((bx)y)
            (1, (mu, (mu, 1, (mu, 2, 3)), 4)),         # (a(bx))y
            (1, (mu, (mu, 2, 3), (mu, 1, 4))),         # (bx)(ay)
            (-1, (mu, 1, (mu, 3, (mu, 2, 4)))),        # -a(x(by))
            (1, (mu, (mu, 1, 3), (mu, 2, 4))),         # (ax)(by)
            (1, (mu, 3, (mu, 1, (mu, 2, 4)))),         # x(a(by))
            (1, (mu, (st, 1, 2), (mu, 3, 4))),         # (a*b)(xy)
            (-1, (mu, (mu, (st, 1, 2), 3), 4)),        # -((a*b)x)y
            (-1, (mu, 3, (mu, (st, 1, 2), 4))),        # -x((a*b)y)
        ),
    )
    fixed("conservative_left", 4, cons,
          "Kantor's left-conservative identity for the pair (product, *)",
          signature=CONS_SIG)

    def sla1(d):
        return (
            _assoc(d, 1, 2, 3) + d * d * _assoc(1 / d, 3, 1, 2) + d * d * _assoc(d, 2, 3, 1)
            - d * _assoc(d, 2, 1, 3) - d * _assoc(d, 1, 3, 2) - d ** 3 * _assoc(1 / d, 3, 2, 1),
        )

    def sla2(d):
        return (
            _assoc(d, 1, 2, 3) + _assoc(1 / d, 3, 1, 2) + d * d * _assoc(1 / d, 2, 3, 1)
            - d * _assoc(d, 2, 1, 3) - d * _assoc(1 / d, 1, 3, 2) - d * _assoc(1 / d, 3, 2, 1),
        )

    fam("sla_identity_1", 3, sla1, undefined_at=(0,),
        description="(x,y,z)_d + d^2(z,x,y)_{1/d} + d^2(y,z,x)_d = "
                    "d((y,x,z)_d + (x,z,y)_d + d^2(z,y,x)_{1/d})")
    fam("sla_identity_2", 3, sla2, undefined_at=(0,),
        description="(x,y,z)_d + (z,x,y)_{1/d} + d^2(y,z,x)_{1/d} = "
                    "d((y,x,z)_d + (x,z,y)_{1/d} + (z,y,x)_{1/d})")

    fam("bd_identity_1", 3,
        lambda d: (_el(
            (1, R3(1, 2, 3)), (-d, R3(1, 3, 2)), (-d, L3(1, 2, 3)),
            (d * d, R3(3, 1, 2)), (-d, R3(2, 1, 3)), (d * d, L3(1, 3, 2)),
        ),),
        description="x[y,z]_d = d([xy,z]_d + [y,xz]_d)")
    fam("bd_identity_2", 3,
        lambda d: (_el(
            (1, L3(2, 3, 1)), (-d, L3(3, 2, 1)), (-d, L3(2, 1, 3)),
            (d * d, R3(3, 2, 1)), (-d, R3(2, 3, 1)), (d * d, L3(3, 1, 2)),
        ),),
        description="[y,z]_d x = d([yx,z]_d + [y,zx]_d)")

    fixed("anti_right_alternative", 3,
          (_el((1, L3(1, 2, 3)), (1, R3(1, 2, 3)), (1, L3(1, 3, 2)), (1, R3(1, 3, 2))),),
          "(x,y,z)_{-1} = -(x,z,y)_{-1}")
    fixed("third_power_right", 3,
          (_sum_over_s3(lambda p: _el((1, L3(*p)))),),
          "full linearization of (xx)x = 0")
    fixed("third_power_left", 3,
          (_sum_over_s3(lambda p: _el((1, R3(*p)))),),
          "full linearization of x(xx) = 0")

    albert = Element.zero()
    for p in itertools.permutations((1, 2, 3, 4)):
        a, b, c, d4 = p
        albert = albert + _el(
            (1, ("mu", ("mu", a, b), ("mu", c, d4))),
            (-1, ("mu", ("mu", ("mu", a, b), c), d4)),
        )
    fixed("albert_fourth", 4, (albert,), "full linearization of (xx)(xx) = ((xx)x)x")

    # auxiliary named conclusions used by the consequence machinery / CLI
    fixed("left_comb4_zero", 4, (_el((1, ("mu", ("mu", ("mu", 1, 2), 3), 4))),),
          "((xy)z)t = 0")

    return reg


REGISTRY = _build_registry()

REGISTRY_NAMES = tuple(sorted(REGISTRY))


def get_identity(name: str) -> Identity:
    key = name.replace("-", "_")
    if key not in REGISTRY:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(REGISTRY_NAMES)}")
    return REGISTRY[key]


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    passed: bool
    identity: str
    witness: Optional[tuple] = None  # 1-based basis index tuple
    value: Optional[tuple] = None    # evaluated defect vector
    element_index: int = 0

    def __bool__(self):
        return self.passed


def _resolve(A: Algebra, ident: Identity, delta) -> IdentityDef:
    if isinstance(ident, IdentityFamily):
        if delta is not None:
            return ident.at(delta)
        if A.field is QDELTA:
            return ident.generic
        raise DeltaRequired(f"{ident.name} needs a parameter value")
    if ident.field is QDELTA and A.field is QQ:
        if delta is None:
            raise DeltaRequired(f"{ident.name} has parameter coefficients")
        return ident.at_delta(delta)
    return ident


def evaluate_identity(A: Algebra, ident: Identity, delta=None) -> Verdict:
    """Pass iff every element of the identity vanishes on all basis tuples."""
    resolved = _resolve(A, ident, delta)
    for idx, e in enumerate(resolved.elements):
        e = e.promote(A.field) if A.field is QDELTA else e
        hit = element_vanishes_on_basis(A, e)
        if hit is not None:
            combo, value = hit
            return Verdict(False, resolved.name, combo, sparse_to_tuple(A, value), idx)
    return Verdict(True, resolved.name)


@dataclass(frozen=True)
class PassingDeltas:
    """Exact description of the parameter values at which identities pass.

    all_values: identities hold for every parameter outside `excluded`
    (the domain exclusions).  Otherwise the passing set is `values`, with
    `nonrational_residual` counting remaining nonrational roots.
    """

    all_values: bool
    values: tuple
    excluded: tuple
    nonrational_residual: int = 0

    def passes_at(self, q: Frac) -> bool:
        q = Frac(q)
        if q in self.excluded:
            return False
        return self.all_values or q in self.values

    def finite_set(self) -> frozenset:
        if self.all_values:
            raise ValueError("passing set is cofinite, not finite")
        return frozenset(self.values)

    def describe(self) -> str:
        if self.all_values:
            if self.excluded:
                return "all d except " + ", ".join(str(v) for v in self.excluded)
            return "all d"
        body = "{" + ", ".join(str(v) for v in self.values) + "}"
        if self.nonrational_residual:
            body += f" plus a nonrational factor of degree {self.nonrational_residual}"
        return body


def _condition_polys(A: Algebra, idents: Sequence[Identity]) -> tuple[list, set]:
    AQ = A.promote()
    polys = []
    excluded = set()
    for ident in idents:
        resolved = ident.generic if isinstance(ident, IdentityFamily) else ident
        excluded.update(resolved.delta_constraints)
        for e in resolved.elements:
            e = e.promote(QDELTA)
            d = e.degree()
            one = QDELTA.one
            for combo in itertools.product(range(1, AQ.dim + 1), repeat=d):
                assignment = {v: {combo[v - 1]: one} for v in range(1, d + 1)}
                for coeff in eval_element(AQ, e, assignment).values():
                    polys.append(coeff.num)
    return polys, excluded


def evaluate_identity_all_delta(A: Algebra, idents) -> PassingDeltas:
    """Exact passing-parameter set of one identity (or a conjunction).

    Each basis-tuple condition is polynomial in the parameter; the passing
    set is the common root set, computed by exact gcd plus rational root
    search.
    """
    if isinstance(idents, (IdentityDef, IdentityFamily)):
        idents = [idents]
    polys, excluded = _condition_polys(A, idents)
    polys = [p for p in polys if p]
    excluded_t = tuple(sorted(excluded))
    if not polys:
        return PassingDeltas(True, (), excluded_t)
    g = ()
    for p in polys:
        g = poly_gcd(g, p) if g else p
        if len(g) == 1:
            return PassingDeltas(False, (), excluded_t)
    roots, residual = rational_roots(g)
    values = tuple(r for r in roots if r not in excluded)
    return PassingDeltas(False, values, excluded_t, residual)


# ---------------------------------------------------------------------------
# mutations and derivation checks
# ---------------------------------------------------------------------------


def mutate_commutator(A: Algebra, delta) -> Algebra:
    """New product [x,y]_d = xy - d yx on the same space."""
    generic = isinstance(delta, RationalFunction) and not delta.is_constant()
    field = QDELTA if (generic or A.field is QDELTA) else QQ
    d = field.coerce(delta if not isinstance(delta, RationalFunction) or generic
                     else delta.constant_value())
    prods: dict = {}
    for (i, j), res in A.table.items():
        row = prods.setdefault((i, j), {})
        for k, c in res.items():
            row[k] = row.get(k, field.zero) + field.coerce(c)
        row_t = prods.setdefault((j, i), {})
        for k, c in res.items():
            row_t[k] = row_t.get(k, field.zero) - d * field.coerce(c)
    return Algebra(f"[{A.name}]_{delta}", A.dim, prods, field)


def check_delta_derivation(A: Algebra, phi: Matrix, delta) -> Verdict:
    """Does phi satisfy phi(xy) = d(phi(x) y + x phi(y)) on all basis pairs?"""
    if phi.nrows != A.dim or phi.ncols != A.dim:
        raise ValueError("operator dimension mismatch")
    d = A.field.coerce(delta)
    for i in range(1, A.dim + 1):
        for j in range(1, A.dim + 1):
            ei, ej = A.basis_vector(i), A.basis_vector(j)
            lhs = phi.matvec(A.multiply(ei, ej))
            pex, pey = phi.matvec(ei), phi.matvec(ej)
            rhs = tuple(d * (a + b) for a, b in zip(A.multiply(pex, ej), A.multiply(ei, pey)))
            if lhs != rhs:
                value = tuple(a - b for a, b in zip(lhs, rhs))
                return Verdict(False, "delta_derivation", (i, j), value)
    return Verdict(True, "delta_derivation")


def symmetric_leibniz_of_mutation(A: Algebra, delta) -> Verdict:
    """Is (A, [.,.]_d) a left and right d-Leibniz algebra?"""
    mutated = mutate_commutator(A, delta)
    for name in ("delta_leibniz_right", "delta_leibniz_left"):
        v = evaluate_identity(mutated, REGISTRY[name], delta)
        if not v.passed:
            return Verdict(False, f"symmetric_leibniz_mutation:{name}", v.witness, v.value)
    return Verdict(True, "symmetric_leibniz_mutation")


def sla_passing_deltas(A: Algebra) -> PassingDeltas:
    """Exact set of d with (A, [.,.]_d) a symmetric d-Leibniz algebra."""
    mutated = mutate_commutator(A, DELTA)
    return evaluate_identity_all_delta(
        mutated, [REGISTRY["delta_leibniz_right"], REGISTRY["delta_leibniz_left"]]
    )


def bd_passing_deltas(A: Algebra) -> PassingDeltas:
    """Exact set of d at which both biderivation-type identities hold."""
    return evaluate_identity_all_delta(A, [REGISTRY["bd_identity_1"], REGISTRY["bd_identity_2"]])


def bd_check_via_derivations(A: Algebra, delta: Frac) -> Verdict:
    """Cross-validate the biderivation identities: every left and right
    multiplication must be a d-derivation of the d-commutator algebra.
    The identity route and the operator route must agree."""
    delta = Frac(delta)
    identity_route = all(
        evaluate_identity(A, REGISTRY[n], delta).passed
        for n in ("bd_identity_1", "bd_identity_2")
    )
    mutated = mutate_commutator(A, delta)
    operator_route = True
    for i in range(1, A.dim + 1):
        a = A.basis_vector(i)
        for side in ("left", "right"):
            phi = mult_operator(A, a, side)
            if not check_delta_derivation(mutated, phi, delta).passed:
                operator_route = False
                break
        if not operator_route:
            break
    if identity_route != operator_route:
        raise AssertionError(
            f"biderivation routes disagree on {A.name} at d={delta}: "
            f"identities={identity_route}, operators={operator_route}"
        )
    return Verdict(identity_route, "bd_via_derivations")


def linearize(monomial, field=QQ) -> Element:
    """Full multilinearization of a one-variable tree monomial; equivalent
    to the power identity over characteristic 0."""
    from .algebra import linearize_power

    return linearize_power(monomial, field)
