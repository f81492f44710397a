"""Rigged configuration bijection for KR crystals of types A_n and D_n."""

from .bijection import combinatorial_r, delta, delta_inv, phi, phi_inv
from .crystal_tableaux import KRTableau, Path, kr_elements, path_op
from .rigged_config import RiggedConfiguration, enumerate_all, enumerate_highest, rc_op
from .root_data import DynkinSpec

__all__ = [
    "DynkinSpec",
    "KRTableau",
    "Path",
    "RiggedConfiguration",
    "combinatorial_r",
    "delta",
    "delta_inv",
    "enumerate_all",
    "enumerate_highest",
    "kr_elements",
    "path_op",
    "phi",
    "phi_inv",
    "rc_op",
]
