from __future__ import annotations

from typing import NamedTuple, Optional

from ..graphs import Graph
from ..labeling import EdgeLabeling, VerificationReport, verify


class Labeled(NamedTuple):
    """A constructed graph, its labeling and the color set the construction predicts.

    ``expected`` is ``None`` when the construction makes no prediction.
    """

    graph: Graph
    labeling: EdgeLabeling
    expected: Optional[frozenset[int]]

    def verify(self) -> VerificationReport:
        return verify(self.graph, self.labeling)

    def rows(self) -> list[list[int]]:
        return self.labeling.rows(self.graph)
