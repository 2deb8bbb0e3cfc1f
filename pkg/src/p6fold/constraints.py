"""The full inequality system a genuine threefold must satisfy, with exact slack.

Constraints, in fixed report order:

* ``B1``–``B5`` (geometric mode only): d at least the minimal degree, delta
  even, delta >= -2, chi >= 1, u >= 1.
* ``S1``–``S6``: the six Schur numbers of the twisted normal bundle, each
  required non-negative because the bundle is globally generated.
* ``H1``, ``H2``: the two Hodge-index inequalities, in multiplied-out form so
  they stay total even when 2d + delta = 0.
* ``K`` (only when a cap is configured): K_S^2 = 10*chi - u at most the cap.

Inequality constraints are satisfied iff their value is >= 0; the parity
constraint ``B2`` is satisfied iff its value (delta mod 2) is 0.  All values
are exact integers on integer tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .formatting import rat_str
from .invariants import InvariantTuple

COVER_FLAGS = frozenset(
    {"covered_by_lines", "section_not_general_type", "kx_plus_h_empty"}
)


@dataclass(frozen=True)
class HypothesisConfig:
    """Which optional hypotheses to enforce on top of the Schur/Hodge system.

    Any cover flag expresses a geometric condition that forces
    K_S^2 <= 9, so setting one implies a cap of 9 unless an explicit
    ``ks2_cap`` overrides it.
    """

    geometric_mode: bool = True
    ks2_cap: Optional[int] = None
    cover_flags: frozenset = field(default_factory=frozenset)
    min_degree: int = 1

    def __post_init__(self):
        unknown = set(self.cover_flags) - COVER_FLAGS
        if unknown:
            raise ValueError(f"unknown cover flags: {sorted(unknown)}")

    @property
    def effective_cap(self) -> Optional[int]:
        if self.ks2_cap is not None:
            return self.ks2_cap
        return 9 if self.cover_flags else None


@dataclass(frozen=True)
class ConstraintValue:
    id: str
    value: int
    satisfied: bool


@dataclass(frozen=True)
class ConstraintReport:
    tuple: InvariantTuple
    entries: tuple
    feasible: bool

    def value_of(self, constraint_id: str) -> int:
        for entry in self.entries:
            if entry.id == constraint_id:
                return entry.value
        raise KeyError(constraint_id)

    def to_json_dict(self) -> dict:
        d, delta, chi, u, v = self.tuple
        return {
            "tuple": {"d": d, "delta": delta, "chi": chi, "u": u, "v": v},
            "constraints": [
                {"id": e.id, "value": rat_str(e.value), "ok": e.satisfied}
                for e in self.entries
            ],
            "feasible": self.feasible,
        }


def _iter_constraints(t: InvariantTuple,
                      cfg: HypothesisConfig) -> Iterator[ConstraintValue]:
    d, delta, chi, u, v = t

    if cfg.geometric_mode:
        yield ConstraintValue("B1", d - cfg.min_degree, d >= cfg.min_degree)
        parity = delta % 2
        yield ConstraintValue("B2", parity, parity == 0)
        yield ConstraintValue("B3", delta + 2, delta >= -2)
        yield ConstraintValue("B4", chi - 1, chi >= 1)
        yield ConstraintValue("B5", u - 1, u >= 1)

    schur = (
        ("S1", 2 * d + delta),
        ("S2", 2 * d + 4 * delta + 8 * chi - 2 * u),
        ("S3", d + 2 * delta + 2 * chi + u),
        ("S4", -5 * d - 5 * delta - 8 * chi + 2 * u + d * d),
        ("S5", 4 * d - 3 * delta - 30 * chi - 3 * u + v + 24 - d * d),
        ("S6", -3 * d + 11 * delta + 68 * chi + 4 * u - v - 48 + d * d),
    )
    for cid, value in schur:
        yield ConstraintValue(cid, value, value >= 0)

    h1 = (3 * d + 6 * delta + 10 * chi - u) ** 2 - v * (2 * d + delta)
    yield ConstraintValue("H1", h1, h1 >= 0)
    h2 = delta * delta - (2 * delta + 10 * chi - u) * d + d * d
    yield ConstraintValue("H2", h2, h2 >= 0)

    cap = cfg.effective_cap
    if cap is not None:
        slack = cap - (10 * chi - u)
        yield ConstraintValue("K", slack, slack >= 0)


def evaluate(t: InvariantTuple, cfg: HypothesisConfig) -> ConstraintReport:
    """Evaluate every constraint; the report keeps all exact slacks."""
    t = InvariantTuple(*t)
    entries = tuple(_iter_constraints(t, cfg))
    return ConstraintReport(
        tuple=t,
        entries=entries,
        feasible=all(e.satisfied for e in entries),
    )


def is_feasible(t: InvariantTuple, cfg: HypothesisConfig) -> bool:
    """Conjunction shortcut: stops at the first violated constraint."""
    return all(e.satisfied for e in _iter_constraints(InvariantTuple(*t), cfg))
