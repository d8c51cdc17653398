from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, order=True)
class Violation:
    """One failed instance of a defining condition.

    ``law`` names the condition, ``names`` the offending elements in a
    law-specific order (documented at each checker).
    """

    law: str
    names: tuple[str, ...]
    detail: str = field(default="", compare=False)

    def to_json(self) -> dict:
        out = {"law": self.law, "names": list(self.names)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check: ok iff there are no violations."""

    violations: tuple[Violation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(sorted(set(self.violations))))

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def laws(self) -> list[str]:
        return sorted({v.law for v in self.violations})

    def by_law(self) -> dict[str, list[Violation]]:
        groups: dict[str, list[Violation]] = {}
        for v in self.violations:
            groups.setdefault(v.law, []).append(v)
        return groups

    def to_json(self) -> dict:
        return {
            "verdict": "ok" if self.ok else "violation",
            "violations": [v.to_json() for v in self.violations],
        }

    @classmethod
    def merge(cls, *verdicts: "Verdict") -> "Verdict":
        return cls(tuple(v for verdict in verdicts for v in verdict.violations))


OK = Verdict()
