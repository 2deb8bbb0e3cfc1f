"""Symbolic regression registry: every displayed identity, re-derived and diffed.

Each registry entry recomputes its left side from first principles through
the ring machinery (:func:`normal_chern`, :func:`twist_rank3`,
:func:`schur_values`, :func:`reduce_to_params`) and compares it
coefficient-by-coefficient against the independently stated right side.
The 17 canonical ids:

    L3.4          normal-bundle Chern classes (three components at once)
    L3.6.1-L3.6.5 consistency of the degree-3 substitution table
    L4.3.1-L4.3.6 the six Schur numbers of the twisted normal bundle
    DP            double-point identity: n3 reduces to d^2
    C4.5.1,C4.5.2 the two Hodge-index inequalities in expanded parameter form
    S5.QUAD       the closing quadratic in delta
    S5.SUM        s(20)*h + s(11)*h = 3d + 6*delta + 10*chi - u

``L3.4.1``/``L3.4.2``/``L3.4.3`` are accepted as sub-ids of ``L3.4`` for
checking one normal-bundle component at a time; they are not counted in the
canonical listing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownIdentityError
from .ring import (
    chi,
    d,
    delta,
    h,
    k,
    c2,
    c3,
    normal_chern,
    reduce_to_params,
    schur_values,
    twist_rank3,
    u,
    v,
)


@dataclass(frozen=True)
class Comparison:
    """One recomputed-vs-stated pair inside an identity check."""

    label: str
    lhs: str
    rhs: str
    diff: str
    equal: bool


@dataclass(frozen=True)
class IdentityResult:
    id: str
    description: str
    passed: bool
    comparisons: tuple[Comparison, ...]


def _compare(label, lhs, rhs) -> Comparison:
    diff = lhs - rhs
    return Comparison(label=label, lhs=lhs.text(), rhs=rhs.text(),
                      diff=diff.text(), equal=not diff)


def _twisted_normal():
    n1, n2, n3 = normal_chern()
    return twist_rank3(n1, n2, n3, -h)


def _schur_of_twisted_normal():
    return schur_values(*_twisted_normal())


# Stated right sides.  The GradedPoly forms for the normal bundle:
_N1_STATED = 7 * h + k
_N2_STATED = 21 * h * h + 7 * h * k + k * k - c2
_N3_STATED = (35 * h ** 3 + 21 * h * h * k + 7 * h * k * k + k ** 3
              - 7 * h * c2 - c3 + 48)

# ParamExpr forms of the six Schur numbers (order: s1*h^2, s20*h, s11*h,
# s300, s210, s111):
SCHUR_PARAM_FORMS = (
    2 * d + delta,
    2 * d + 4 * delta + 8 * chi - 2 * u,
    d + 2 * delta + 2 * chi + u,
    -5 * d - 5 * delta - 8 * chi + 2 * u + d * d,
    4 * d - 3 * delta - 30 * chi - 3 * u + v + 24 - d * d,
    -3 * d + 11 * delta + 68 * chi + 4 * u - v - 48 + d * d,
)


def _check_normal_chern(which=None):
    computed = normal_chern()
    stated = (_N1_STATED, _N2_STATED, _N3_STATED)
    labels = ("n1", "n2", "n3")
    idx = range(3) if which is None else [which]
    return [_compare(labels[i], computed[i], stated[i]) for i in idx]


def _check_table_h2k():
    # Adjunction on the sectional curve: delta = h^2*(k + 2h).
    return [_compare("", reduce_to_params(h * h * (k + 2 * h)), delta)]


def _check_table_hk2():
    # Canonical square of the hyperplane surface: (k+h)^2*h = 10*chi - u
    # (Noether's formula combined with the topological Euler number).
    return [_compare("", reduce_to_params(h * (h + k) ** 2), 10 * chi - u)]


def _check_table_k3():
    # v is by definition the cube of the twisted normal determinant 4h + k.
    return [_compare("", reduce_to_params((4 * h + k) ** 3), v)]


def _check_table_hc2():
    # Tangent sequence of the hyperplane surface:
    # h*c2 = c2(S) - (k+h)*h^2 with c2(S) = 2*chi + u.
    lhs = reduce_to_params(h * c2 + h * h * (h + k))
    return [_compare("", lhs, 2 * chi + u)]


def _check_table_c3():
    # The c3 table row is forced by the n3 formula plus n3 = d^2:
    # c3 = (35h^3 + 21h^2k + 7hk^2 + k^3 - 7h*c2) + 48 - d^2.
    forced = reduce_to_params(
        35 * h ** 3 + 21 * h * h * k + 7 * h * k * k + k ** 3 - 7 * h * c2
    ) + 48 - d * d
    return [_compare("", reduce_to_params(c3), forced)]


def _check_schur(i):
    s1, s20, s300, s11, s210, s111 = _schur_of_twisted_normal()
    numbers = (s1 * h * h, s20 * h, s11 * h, s300, s210, s111)
    return [_compare("", reduce_to_params(numbers[i]), SCHUR_PARAM_FORMS[i])]


def _check_double_point():
    _, _, n3 = normal_chern()
    return [_compare("", reduce_to_params(n3), d * d)]


def _check_hodge_det():
    # Hodge index on a member of |4H + K| (the globally generated twisted
    # normal determinant), applied to the hyperplane restriction:
    # (h*D^2)^2 >= (h^2*D)*(D^3) with D = 4h + k.
    D = 4 * h + k
    lhs = (reduce_to_params(h * D * D) ** 2
           - reduce_to_params(D ** 3) * reduce_to_params(h * h * D))
    rhs = (3 * d + 6 * delta + 10 * chi - u) ** 2 - v * (2 * d + delta)
    return [_compare("", lhs, rhs)]


def _check_hodge_hyperplane():
    # Hodge index on the hyperplane surface: (h^2*k)^2 >= (h^3)*(h*k^2).
    lhs = (reduce_to_params(h * h * k) ** 2
           - reduce_to_params(h ** 3) * reduce_to_params(h * k * k))
    rhs = delta ** 2 - (2 * delta + 10 * chi - u) * d + d * d
    return [_compare("", lhs, rhs)]


def _check_closing_quadratic():
    # Eliminating v between the upper bound (Hodge index, cap 9) and the
    # lower bound (s210 >= 0 with 30*chi + 3*u - 24 >= 9) gives a quadratic
    # in delta that must be non-negative.
    lhs = ((3 * d + 6 * delta + 9) ** 2
           - (2 * d + delta) * (d * d - 4 * d + 3 * delta + 9))
    rhs = (33 * delta ** 2
           + (-d * d + 34 * d + 99) * delta
           + (81 + 17 * d * d + 36 * d - 2 * d ** 3))
    return [_compare("", lhs, rhs)]


def _check_schur_sum():
    _, s20, _, s11, _, _ = _schur_of_twisted_normal()
    lhs = reduce_to_params(s20 * h) + reduce_to_params(s11 * h)
    return [_compare("", lhs, 3 * d + 6 * delta + 10 * chi - u)]


REGISTRY = {
    "L3.4": ("normal-bundle Chern classes n1, n2, n3",
             _check_normal_chern),
    "L3.6.1": ("substitution table: h^2*k from adjunction",
               _check_table_h2k),
    "L3.6.2": ("substitution table: h*k^2 from the canonical square",
               _check_table_hk2),
    "L3.6.3": ("substitution table: k^3 from the definition of v",
               _check_table_k3),
    "L3.6.4": ("substitution table: h*c2 from the surface tangent sequence",
               _check_table_hc2),
    "L3.6.5": ("substitution table: c3 forced by the double-point identity",
               _check_table_c3),
    "L4.3.1": ("Schur number s(1)*h^2 of the twisted normal bundle",
               lambda: _check_schur(0)),
    "L4.3.2": ("Schur number s(20)*h of the twisted normal bundle",
               lambda: _check_schur(1)),
    "L4.3.3": ("Schur number s(11)*h of the twisted normal bundle",
               lambda: _check_schur(2)),
    "L4.3.4": ("Schur number s(300) of the twisted normal bundle",
               lambda: _check_schur(3)),
    "L4.3.5": ("Schur number s(210) of the twisted normal bundle",
               lambda: _check_schur(4)),
    "L4.3.6": ("Schur number s(111) of the twisted normal bundle",
               lambda: _check_schur(5)),
    "DP": ("double-point identity: n3 reduces to d^2",
           _check_double_point),
    "C4.5.1": ("Hodge index on the twisted-determinant divisor, expanded",
               _check_hodge_det),
    "C4.5.2": ("Hodge index on the hyperplane divisor, expanded",
               _check_hodge_hyperplane),
    "S5.QUAD": ("closing quadratic in delta from the two v-bounds",
                _check_closing_quadratic),
    "S5.SUM": ("s(20)*h + s(11)*h = 3d + 6*delta + 10*chi - u",
               _check_schur_sum),
}

# Sub-ids for verifying one normal-bundle component at a time.
_SUB_IDS = {
    "L3.4.1": ("normal-bundle Chern class n1",
               lambda: _check_normal_chern(0)),
    "L3.4.2": ("normal-bundle Chern class n2",
               lambda: _check_normal_chern(1)),
    "L3.4.3": ("normal-bundle Chern class n3",
               lambda: _check_normal_chern(2)),
}


def identity_ids() -> list[str]:
    """The canonical registry ids, in listing order."""
    return list(REGISTRY)


def verify_identity(identity_id: str) -> IdentityResult:
    """Recompute one identity and diff it against its stated form."""
    entry = REGISTRY.get(identity_id) or _SUB_IDS.get(identity_id)
    if entry is None:
        raise UnknownIdentityError(identity_id)
    description, check = entry
    comparisons = tuple(check())
    return IdentityResult(
        id=identity_id,
        description=description,
        passed=all(cmp.equal for cmp in comparisons),
        comparisons=comparisons,
    )


def verify_all() -> list[IdentityResult]:
    """Run the whole registry in listing order."""
    return [verify_identity(identity_id) for identity_id in REGISTRY]
