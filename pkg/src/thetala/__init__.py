"""Local antimagic labelings of theta graphs.

Subpackages and modules:

* :mod:`thetala.graphs`: theta graphs, spiders, one-point unions of cycles;
* :mod:`thetala.labeling`: edge labelings, the verifier, text and DOT I/O;
* :mod:`thetala.sequences`: interleaved arithmetic progressions;
* :mod:`thetala.constructions`: explicit labelings with few colors;
* :mod:`thetala.analysis`: the chi_la = 2 classifier and lower bounds;
* :mod:`thetala.solver`: exact search for small graphs;
* :mod:`thetala.cli`: the ``thetala`` command.
"""

from .graphs import CycleUnionSpec, Graph, SpiderSpec, ThetaSpec, build_cycle_union, build_spider, build_theta
from .labeling import EdgeLabeling, VerificationReport, parse, serialize_labeling, verify

__version__ = "0.1.0"

__all__ = [
    "CycleUnionSpec", "Graph", "SpiderSpec", "ThetaSpec", "build_cycle_union", "build_spider",
    "build_theta", "EdgeLabeling", "VerificationReport", "parse", "serialize_labeling", "verify",
]
