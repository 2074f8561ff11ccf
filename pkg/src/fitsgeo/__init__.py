"""Constructive solid geometry kernel and CLI for PHITS input files.

Define surfaces, materials and cells as typed objects, verify them
geometrically (analytic properties cross-checked by Monte Carlo sampling),
build 3D scene documents for the browser viewer, and export everything as
deterministic [Material] / [Surface] / [Cell] sections.
"""

from .__about__ import __version__
from ._mc_common import backend_name as mc_backend
from .cells import (
    OUTER,
    VOID,
    Cell,
    Complement,
    Intersection,
    McVolume,
    Model,
    RegionExpr,
    SenseRef,
    Union,
    cell_contains,
    mc_cell_volume,
    parse_region,
    region_normalize,
    region_surface_ids,
    region_to_text,
    sense_neg,
    sense_pos,
    validate_model,
)
from .colors import COLOR_TABLE, ColorEntry, angel_color
from .diagnostics import Diagnostic, SourceSpan
from .errors import FitsGeoError
from .geometry import (
    Aabb,
    Box,
    PlaneGeneral,
    PlaneX,
    PlaneY,
    PlaneZ,
    Rcc,
    Rec,
    Rpp,
    Sphere,
    Surface,
    SurfaceKind,
    TorusX,
    TorusY,
    TorusZ,
    Trc,
    Vec3,
    Wed,
    aabb,
    analytic_area,
    analytic_volume,
    centroid,
    implicit_value,
    is_bounded,
    make_surface,
    sense,
)
from .materials import (
    Material,
    MaterialDb,
    db_load,
    default_db,
    define_material,
    material_from_db,
)
from .phits_export import (
    ExportFlags,
    export_cell_section,
    export_input,
    export_material_section,
    export_surface_section,
    format_number,
)
from .phits_import import ParseResult, parse_input
from .scene import SceneDoc, SceneObject, build_scene, write_scene
from .tessellate import TriMesh, is_watertight, mesh_volume, tessellate

__all__ = [name for name in dir() if not name.startswith("_")]
