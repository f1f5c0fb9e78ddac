"""Derived categories of interval representations over L = T x Z and D_L."""
from .errors import (Ambiguous, DercatError, InputError, MarginTooSmall, NotInCatalog,
                     NotQuasiSimple, NotUnique, ParseError, WindowExceeded, ZeroMap)
from .linalg import GF2, RATIONALS, ExactField
from .model import (ClosedFormHom, ComponentId, ar_triangle, component_of, enumerate_window,
                    hom_dim, is_partial_tilting, sectional_path, serre, tau)
from .objects import A, A1, A2, B, DObj, IndClass, IndObj, format_obj, parse_obj
from .order import Kind, LPoint, PosetSpec
from .probing import cone_by_probing, identify, phi_c, phi_o
from .tilting import TiltingSet, tilting_set
from .workspace import Workspace

__all__ = [
    "A", "A1", "A2", "Ambiguous", "B", "ClosedFormHom", "ComponentId", "DObj", "DercatError",
    "ExactField", "GF2", "IndClass", "IndObj", "InputError", "Kind", "LPoint", "MarginTooSmall",
    "NotInCatalog", "NotQuasiSimple", "NotUnique", "ParseError", "PosetSpec", "RATIONALS",
    "TiltingSet", "WindowExceeded", "Workspace", "ZeroMap", "ar_triangle", "component_of",
    "cone_by_probing", "enumerate_window", "format_obj", "hom_dim", "identify",
    "is_partial_tilting", "parse_obj", "phi_c", "phi_o", "sectional_path", "serre", "tau",
    "tilting_set",
]
