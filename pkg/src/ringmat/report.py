"""Verification reports produced by identity checks.

Every check in this library reduces to an exact equality between two ring
elements or two matrices.  A report records which identity was checked,
whether its hypothesis was satisfied, whether the equality held, and (on
failure) the nonzero difference as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

# Identity names whose checks are deliberately corrupted.  Test-only hook:
# populated via set_mutation() or the RINGMAT_MUTATE environment variable
# (read by the CLI), never in normal library use.
_MUTATED: set[str] = set()


def set_mutation(names) -> None:
    """Corrupt the named identities so their checks produce nonzero residuals.

    Passing an empty iterable (or None) clears the hook.
    """
    _MUTATED.clear()
    if names:
        _MUTATED.update(names)


@dataclass
class VerificationReport:
    """Outcome of one identity check.

    passed is True exactly when the hypothesis was met and the computed
    residual was zero.  hypothesis_met is False when the inputs do not
    satisfy the identity's hypothesis; such reports are not failures and
    carry no residual.  residual is None on success, otherwise a ring
    element (with residual_ring set) or a Matrix.
    """

    identity: str
    passed: bool
    hypothesis_met: bool = True
    residual: Any = None
    residual_ring: Any = None
    inputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        if self.residual is None:
            res = None
        elif self.residual_ring is not None:
            res = {
                "ring": self.residual_ring.descriptor(),
                "value": self.residual_ring.element_to_json(self.residual),
            }
        else:
            res = self.residual.to_json()
        return {
            "identity": self.identity,
            "passed": self.passed,
            "hypothesis_met": self.hypothesis_met,
            "residual": res,
            "inputs": self.inputs,
        }


def make_report(identity: str, residual, *, ring=None, inputs=None,
                part: str | None = None) -> VerificationReport:
    """Build a report from a computed residual (element or matrix).

    residual must be the exact difference of the two sides.  ring is
    required when residual is a bare ring element.  part names the first
    failing clause of a multi-clause identity.
    """
    inputs = dict(inputs) if inputs else {}
    if identity in _MUTATED:
        residual = _bump(residual, ring)
    if ring is not None:
        failed = not ring.is_zero(residual)
    else:
        failed = not residual.is_zero()
    if failed and part is not None:
        inputs["failed_part"] = part
    return VerificationReport(
        identity=identity,
        passed=not failed,
        residual=residual if failed else None,
        residual_ring=ring if failed else None,
        inputs=inputs,
    )


def hypothesis_not_met(identity: str, reason: str, inputs=None) -> VerificationReport:
    inputs = dict(inputs) if inputs else {}
    inputs["reason"] = reason
    return VerificationReport(
        identity=identity, passed=True, hypothesis_met=False, inputs=inputs,
    )


def _bump(residual, ring):
    # Add 1 somewhere so the corrupted check yields a genuine witness.
    if ring is not None:
        return ring.add(residual, ring.one())
    if residual.rows == 0 or residual.cols == 0:
        return residual
    entries = list(residual._e)
    entries[0] = residual.ring.add(entries[0], residual.ring.one())
    return type(residual)(residual.ring, residual.rows, residual.cols, entries)


def summarize(reports) -> dict:
    """Aggregate counts used for the one-line suite summary."""
    total = len(reports)
    unmet = sum(1 for r in reports if not r.hypothesis_met)
    failed = sum(1 for r in reports if r.hypothesis_met and not r.passed)
    return {
        "total": total,
        "passed": total - unmet - failed,
        "failed": failed,
        "hypothesis_not_met": unmet,
    }
