from __future__ import annotations

from dataclasses import dataclass, field

from .graph import VertexSubset


@dataclass
class SolveResult:
    size: int
    subset: VertexSubset
    algorithm: str
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "subset": list(self.subset),
            "algorithm": self.algorithm,
            "stats": dict(self.stats),
        }
