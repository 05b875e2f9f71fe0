"""dyncore: dynamic 2-core index, static decompositions and circuit reductions."""

__version__ = "0.1.0"
