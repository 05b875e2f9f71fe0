from .ett import EulerTourForest, NotATreeEdge, SameTree, check_tour
from .hdt import ForestChange, HdtConnectivity, NO_CHANGE
from .lct import LinkCutForest

__all__ = [
    "EulerTourForest", "LinkCutForest", "HdtConnectivity", "ForestChange",
    "NO_CHANGE", "SameTree", "NotATreeEdge", "check_tour",
]
