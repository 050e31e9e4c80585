"""Construction and exhaustive verification of quantum locally testable codes."""

from .codes import (
    INFINITE,
    ClassicalCode,
    CssCode,
    SoundnessInterval,
    SoundnessMethod,
    classical_distance,
    classical_soundness_exact,
    classical_soundness_sampled,
    css_distances,
    css_new,
    quantum_soundness_interval,
)
from .config import get_cap, set_cap
from .errors import QltcError
from .f2 import BinaryMatrix, kernel_basis, rank, standard_form
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INFINITE",
    "BinaryMatrix",
    "ClassicalCode",
    "CssCode",
    "QltcError",
    "SoundnessInterval",
    "SoundnessMethod",
    "classical_distance",
    "classical_soundness_exact",
    "classical_soundness_sampled",
    "css_distances",
    "css_new",
    "get_cap",
    "kernel_basis",
    "quantum_soundness_interval",
    "rank",
    "set_cap",
    "standard_form",
]
