from .approx import ApproxLibrary
from .base import (
    Builder, ContractViolation, Gadget, GadgetLibrary, ReductionArtifact,
    compile_mcvp, replay_wire_update,
)
from .kcore import KCoreLibrary
from .klcore import KLCoreLibrary
from .truss import TrussLibrary
from .verify import Report, library, verify_gadget_library

__all__ = [
    "ApproxLibrary", "Builder", "ContractViolation", "Gadget", "GadgetLibrary",
    "KCoreLibrary", "KLCoreLibrary", "ReductionArtifact", "Report", "TrussLibrary",
    "compile_mcvp", "compile_mcvp_to_approx_kcore", "compile_mcvp_to_kcore",
    "compile_mcvp_to_klcore", "compile_mcvp_to_truss", "library", "replay_wire_update",
    "verify_gadget_library",
]


def compile_mcvp_to_kcore(c, k=3):
    return compile_mcvp(c, KCoreLibrary(k))


def compile_mcvp_to_approx_kcore(c, k=2):
    return compile_mcvp(c, ApproxLibrary(k))


def compile_mcvp_to_truss(c, k=4):
    return compile_mcvp(c, TrussLibrary(k))


def compile_mcvp_to_klcore(c, k=2, l=0):
    return compile_mcvp(c, KLCoreLibrary(k, l))
