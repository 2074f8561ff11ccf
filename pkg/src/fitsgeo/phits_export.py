"""Deterministic serializer for [Material], [Surface] and [Cell] sections.

All numbers go through :func:`format_number` (shortest exact round-trip
form), section content follows model order, and the output is byte-stable
across runs and platforms. Positive senses are printed unsigned, so exported
regions never contain a ``+``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import __about__
from .cells import OUTER, VOID, Model, region_to_text
from .errors import NonFiniteNumber, NothingSelected
from .geometry import (
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
    TorusX,
    TorusY,
    TorusZ,
    Trc,
    Vec3,
    Wed,
)

# region text wraps beyond this width; indented lines continue the card
REGION_WRAP_WIDTH = 200
_CONT_INDENT = "    "


def format_number(v: float) -> str:
    """Shortest decimal string that parses back to exactly ``v``.

    Lowercase exponent with no '+' or leading zeros; ``-0`` normalizes
    to ``0``.
    """
    v = float(v)
    if not math.isfinite(v):
        raise NonFiniteNumber(f"cannot format {v!r}")
    if v == 0.0:
        return "0"
    s = repr(v)
    if "e" in s:
        mantissa, exponent = s.split("e")
        if mantissa.endswith(".0"):
            mantissa = mantissa[:-2]
        return f"{mantissa}e{int(exponent)}"
    if s.endswith(".0"):
        s = s[:-2]
    return s


def _vec(v: Vec3) -> str:
    return f"{format_number(v.x)} {format_number(v.y)} {format_number(v.z)}"


def surface_card_params(kind) -> str:
    if isinstance(kind, PlaneGeneral):
        return (f"{format_number(kind.a)} {format_number(kind.b)} "
                f"{format_number(kind.c)} {format_number(kind.d)}")
    if isinstance(kind, (PlaneX, PlaneY, PlaneZ)):
        return format_number(kind.d)
    if isinstance(kind, Sphere):
        return f"{_vec(kind.center)} {format_number(kind.r)}"
    if isinstance(kind, Box):
        return f"{_vec(kind.base)} {_vec(kind.e1)} {_vec(kind.e2)} {_vec(kind.e3)}"
    if isinstance(kind, Rpp):
        return (f"{format_number(kind.xmin)} {format_number(kind.xmax)} "
                f"{format_number(kind.ymin)} {format_number(kind.ymax)} "
                f"{format_number(kind.zmin)} {format_number(kind.zmax)}")
    if isinstance(kind, Rcc):
        return f"{_vec(kind.base)} {_vec(kind.h)} {format_number(kind.r)}"
    if isinstance(kind, Trc):
        return (f"{_vec(kind.base)} {_vec(kind.h)} "
                f"{format_number(kind.r_base)} {format_number(kind.r_top)}")
    if isinstance(kind, (TorusX, TorusY, TorusZ)):
        return (f"{_vec(kind.center)} {format_number(kind.a)} "
                f"{format_number(kind.b)} {format_number(kind.c)}")
    if isinstance(kind, Rec):
        return f"{_vec(kind.base)} {_vec(kind.h)} {_vec(kind.v1)} {_vec(kind.v2)}"
    if isinstance(kind, Wed):
        return f"{_vec(kind.vertex)} {_vec(kind.e1)} {_vec(kind.e2)} {_vec(kind.e3)}"
    raise TypeError(f"unsupported kind {type(kind).__name__}")


def export_surface_section(surfaces: list[Surface]) -> str:
    lines = ["[Surface]"]
    for s in surfaces:
        lines.append(f"{s.id} {s.kind.mnemonic} {surface_card_params(s.kind)} $ {s.name}")
    return "\n".join(lines) + "\n"


def export_material_section(materials) -> str:
    lines = ["[Material]"]
    for m in materials:
        lines.append(f"MAT[{m.id}] $ {m.name} {format_number(m.density)} g/cc")
        sign = 1.0 if m.ratio_mode == "atom" else -1.0
        for species, ratio in m.composition:
            lines.append(f"  {species} {format_number(sign * ratio)}")
        if m.gas:
            lines.append("  GAS=1")
    return "\n".join(lines) + "\n"


def _cell_lines(prefix: str, region: str, name: str) -> list[str]:
    if len(region) <= REGION_WRAP_WIDTH:
        return [f"{prefix} {region} $ {name}"]
    lines = []
    current = prefix
    width = 0
    for token in region.split(" "):
        if width and width + 1 + len(token) > REGION_WRAP_WIDTH:
            lines.append(current)
            current = _CONT_INDENT + token
            width = len(token)
        else:
            current += " " + token
            width += (1 if width else 0) + len(token)
    lines.append(current + f" $ {name}")
    return lines


def export_cell_section(model: Model) -> str:
    lines = ["[Cell]"]
    for cell in model.cells:
        region = region_to_text(cell.region)
        if cell.material == VOID:
            prefix = f"{cell.id} 0"
        elif cell.material == OUTER:
            prefix = f"{cell.id} -1"
        else:
            density = model.effective_density(cell)
            prefix = f"{cell.id} {cell.material} {format_number(-density)}"
        lines.extend(_cell_lines(prefix, region, cell.name))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ExportFlags:
    include_material: bool = True
    include_surface: bool = True
    include_cell: bool = True
    header_comment: str | None = None


def export_input(model: Model, flags: ExportFlags = ExportFlags()) -> str:
    """Selected sections in Material, Surface, Cell order, preceded by a
    comment block. Byte-deterministic for identical inputs."""
    if not (flags.include_material or flags.include_surface or flags.include_cell):
        raise NothingSelected("select at least one section to export")
    header = [f"$ generated by fitsgeo {__about__.__version__}"]
    if model.title:
        header.append(f"$ title: {model.title}")
    if flags.header_comment:
        for line in flags.header_comment.splitlines():
            header.append(f"$ {line}")
    parts = ["\n".join(header) + "\n"]
    if flags.include_material:
        parts.append(export_material_section(model.materials))
    if flags.include_surface:
        parts.append(export_surface_section(model.surfaces))
    if flags.include_cell:
        parts.append(export_cell_section(model))
    return "\n".join(parts)
