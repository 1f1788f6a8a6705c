"""Named-inequality reports with signed margins.

Every check's margin is the inequality rewritten as ``margin > 0`` (or
``>= 0`` for the non-strict ones), so a report never loses the distance to
the boundary.  Margins within ``BOUNDARY_REL`` of zero, relative to
``max(|lhs|, |rhs|)``, are flagged as boundary cases instead of being
silently rounded to a verdict.  The scale is purely relative: entries of a
profile scaled by c > 0 scale uniformly, so verdicts are invariant under
rescaling the underlying classes.
"""

from __future__ import annotations

from dataclasses import dataclass

#: relative tolerance for boundary / equality detection
BOUNDARY_REL = 1e-12


@dataclass(frozen=True)
class InequalityEntry:
    """One checked inequality ``lhs <relation> rhs``."""

    name: str
    lhs: float
    rhs: float
    margin: float
    passed: bool
    relation: str = ">"
    boundary: bool = False

    def to_dict(self):
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "pass": self.passed,
            "relation": self.relation,
            "boundary": self.boundary,
        }


def compare(name: str, lhs: float, rhs: float, relation: str = ">") -> InequalityEntry:
    """Build an entry for ``lhs relation rhs`` with a signed margin.

    relation is one of ``">"`` (strict), ``">="`` (non-strict, roundoff
    tolerated) or ``"=="`` (equality within the boundary tolerance).
    """
    margin = lhs - rhs
    scale = max(abs(lhs), abs(rhs))
    boundary = abs(margin) <= BOUNDARY_REL * scale
    if relation == ">":
        passed = margin > 0.0
    elif relation == ">=":
        passed = margin >= -BOUNDARY_REL * scale
    elif relation == "==":
        passed = boundary
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return InequalityEntry(name, lhs, rhs, margin, passed, relation, boundary)


@dataclass(frozen=True)
class InequalityReport:
    """A labelled, ordered collection of inequality entries."""

    label: str
    entries: tuple[InequalityEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, name: str) -> InequalityEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def margin(self, name: str) -> float:
        return self.entry(name).margin

    def names(self):
        return [e.name for e in self.entries]

    def to_dict(self):
        return {
            "label": self.label,
            "pass": self.passed,
            "entries": {e.name: e.to_dict() for e in self.entries},
        }
