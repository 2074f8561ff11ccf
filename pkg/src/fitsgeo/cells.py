"""Region expression algebra, cells, the model container, membership
evaluation, model validation and the Monte Carlo volume estimator.

Region expressions are boolean trees over signed surface references. The
text form follows transport-code conventions: whitespace is intersection,
``:`` is union, ``#`` complements, and a bare surface number is the positive
(exterior) sense, so printed regions never need a ``+``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import _mc_common as _mc
from .diagnostics import ERROR, WARNING, Diagnostic
from .errors import (
    EmptyExpression,
    InvalidDensity,
    InvalidId,
    InvalidName,
    RegionSyntaxError,
    UnboundedRegionNeedsBox,
    UnknownCell,
    UnknownSurfaceName,
    UnknownSurfaceRef,
)
from .geometry import Aabb, Surface, aabb, implicit_value, is_bounded

VOID = "void"
OUTER = "outer"


# ---------------------------------------------------------------------------
# region expressions


@dataclass(frozen=True)
class SenseRef:
    """Signed reference to a surface: -1 interior side, +1 exterior side."""

    surface_id: int
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be -1 or +1, got {self.sign}")
        if not isinstance(self.surface_id, int) or self.surface_id < 1:
            raise InvalidId(f"surface id must be >= 1, got {self.surface_id!r}")


@dataclass(frozen=True)
class Intersection:
    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise EmptyExpression("intersection needs at least one term")
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class Union:
    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise EmptyExpression("union needs at least one term")
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class Complement:
    inner: "RegionExpr"


RegionExpr = SenseRef | Intersection | Union | Complement


def sense_neg(surface: Surface | int) -> SenseRef:
    sid = surface.id if isinstance(surface, Surface) else surface
    return SenseRef(sid, -1)


def sense_pos(surface: Surface | int) -> SenseRef:
    sid = surface.id if isinstance(surface, Surface) else surface
    return SenseRef(sid, +1)


def region_surface_ids(expr: RegionExpr) -> set[int]:
    if isinstance(expr, SenseRef):
        return {expr.surface_id}
    if isinstance(expr, Complement):
        return region_surface_ids(expr.inner)
    ids: set[int] = set()
    for t in expr.terms:
        ids |= region_surface_ids(t)
    return ids


def region_normalize(expr: RegionExpr) -> RegionExpr:
    """Canonical structure: nested same-operator nodes flattened and
    single-term intersections/unions collapsed."""
    if isinstance(expr, SenseRef):
        return expr
    if isinstance(expr, Complement):
        return Complement(region_normalize(expr.inner))
    cls = type(expr)
    flat: list[RegionExpr] = []
    for t in expr.terms:
        t = region_normalize(t)
        if isinstance(t, cls):
            flat.extend(t.terms)
        else:
            flat.append(t)
    if len(flat) == 1:
        return flat[0]
    return cls(tuple(flat))


# -- parser -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s+|(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([()#:+\-])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise RegionSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is not None:
            out.append(("int", m.group(1), pos))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), pos))
        elif m.group(3) is not None:
            out.append(("punct", m.group(3), pos))
        pos = m.end()
    return out


class _RegionParser:
    def __init__(self, text: str, resolver):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.resolver = resolver

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def at_punct(self, ch: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "punct" and tok[1] == ch

    def parse(self) -> RegionExpr:
        if not self.tokens:
            raise EmptyExpression("empty region expression")
        expr = self.expr()
        tok = self.peek()
        if tok is not None:
            raise RegionSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return expr

    def expr(self) -> RegionExpr:
        terms = [self.term()]
        while self.at_punct(":"):
            self.take()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Union(tuple(terms))

    def term(self) -> RegionExpr:
        factors = []
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "punct" and tok[1] in "):"):
                break
            factors.append(self.factor())
        if not factors:
            pos = self.peek()[2] if self.peek() else len(self.text)
            raise RegionSyntaxError("expected a region term", pos)
        return factors[0] if len(factors) == 1 else Intersection(tuple(factors))

    def factor(self) -> RegionExpr:
        tok = self.peek()
        if tok[0] == "punct" and tok[1] == "#":
            self.take()
            nxt = self.peek()
            if nxt is None:
                raise RegionSyntaxError("dangling '#'", tok[2])
            if nxt[0] == "punct" and nxt[1] == "(":
                return Complement(self.parens())
            return Complement(self.signed_ref())
        if tok[0] == "punct" and tok[1] == "(":
            return self.parens()
        return self.signed_ref()

    def parens(self) -> RegionExpr:
        open_tok = self.take()
        inner = self.expr()
        if not self.at_punct(")"):
            raise RegionSyntaxError("unbalanced '('", open_tok[2])
        self.take()
        return inner

    def signed_ref(self) -> SenseRef:
        tok = self.take()
        sign = +1
        if tok[0] == "punct" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else +1
            ref = self.take()
        else:
            ref = tok
        if ref is None:
            raise RegionSyntaxError("expected a surface reference", tok[2])
        if ref[0] == "int":
            sid = int(ref[1])
            if sid < 1:
                raise RegionSyntaxError(f"surface id must be >= 1, got {sid}", ref[2])
            return SenseRef(sid, sign)
        if ref[0] == "name":
            if self.resolver is None:
                raise UnknownSurfaceName(
                    f"no resolver for surface name {ref[1]!r}")
            sid = self.resolver(ref[1])
            if sid is None:
                raise UnknownSurfaceName(f"unknown surface name {ref[1]!r}")
            return SenseRef(int(sid), sign)
        raise RegionSyntaxError(f"expected a surface reference, got {ref[1]!r}", ref[2])


def parse_region(text: str, resolver=None) -> RegionExpr:
    """Parse the region mini-language.

    Grammar: union of ``:``-separated terms; a term is whitespace-separated
    factors (intersection); a factor is an optionally ``#``-complemented
    signed reference or parenthesized expression. A bare reference means the
    positive sense. ``resolver`` maps surface names to ids.
    """
    return _RegionParser(text, resolver).parse()


def region_to_text(expr: RegionExpr) -> str:
    """Canonical, minimal-parentheses text form (positive senses unsigned)."""
    expr = region_normalize(expr)
    return _print_region(expr, in_intersection=False)


def _print_region(expr: RegionExpr, in_intersection: bool) -> str:
    if isinstance(expr, SenseRef):
        return str(expr.surface_id) if expr.sign > 0 else f"-{expr.surface_id}"
    if isinstance(expr, Complement):
        return f"#({_print_region(expr.inner, False)})"
    if isinstance(expr, Intersection):
        return " ".join(_print_region(t, True) for t in expr.terms)
    text = " : ".join(_print_region(t, False) for t in expr.terms)
    return f"({text})" if in_intersection else text


# ---------------------------------------------------------------------------
# cells and model


@dataclass(frozen=True)
class Cell:
    """Identified region bound to a material (or the void/outer markers)."""

    id: int
    name: str
    region: RegionExpr
    material: int | str = VOID
    density_override: float | None = None
    volume_hint: float | None = None

    def __post_init__(self):
        if not isinstance(self.id, int) or isinstance(self.id, bool) or self.id < 1:
            raise InvalidId(f"cell id must be a positive integer, got {self.id!r}")
        if not isinstance(self.name, str) or not self.name.strip() \
                or "\n" in self.name or "$" in self.name:
            raise InvalidName(f"bad cell name {self.name!r}")
        m = self.material
        if not (m in (VOID, OUTER) or (isinstance(m, int) and m >= 1)):
            raise ValueError(f"material must be 'void', 'outer' or an id, got {m!r}")
        if self.density_override is not None and not self.density_override > 0.0:
            raise InvalidDensity(
                f"density override must be > 0, got {self.density_override!r}")


@dataclass
class Model:
    """Ordered collections of surfaces, materials and cells.

    The container itself allows inconsistent content (duplicate ids,
    dangling references); ``validate_model`` reports such problems as
    diagnostics so partially parsed decks remain representable.
    """

    title: str = ""
    surfaces: list = None
    materials: list = None
    cells: list = None

    def __post_init__(self):
        self.surfaces = list(self.surfaces or [])
        self.materials = list(self.materials or [])
        self.cells = list(self.cells or [])

    def surface(self, sid: int) -> Surface:
        for s in self.surfaces:
            if s.id == sid:
                return s
        raise UnknownSurfaceRef(f"surface {sid} is not defined")

    def material(self, mid: int):
        for m in self.materials:
            if m.id == mid:
                return m
        from .errors import UnknownMaterialRef

        raise UnknownMaterialRef(f"material {mid} is not defined")

    def cell(self, cid: int) -> Cell:
        for c in self.cells:
            if c.id == cid:
                return c
        raise UnknownCell(f"cell {cid} is not defined")

    def effective_density(self, cell: Cell) -> float | None:
        """g/cm3 for material cells; None for void/outer."""
        if cell.material in (VOID, OUTER):
            return None
        if cell.density_override is not None:
            return cell.density_override
        return self.material(cell.material).density


def cell_contains(model: Model, cell_id: int, p) -> bool:
    """Point membership by recursive region evaluation. Points exactly on a
    surface count as the positive (exterior) side."""
    cell = model.cell(cell_id)
    return _eval_region(model, cell.region, p)


def _eval_region(model: Model, expr: RegionExpr, p) -> bool:
    if isinstance(expr, SenseRef):
        surf = model.surface(expr.surface_id)
        negative = implicit_value(surf.kind, p) < 0.0
        return negative if expr.sign < 0 else not negative
    if isinstance(expr, Complement):
        return not _eval_region(model, expr.inner, p)
    if isinstance(expr, Intersection):
        return all(_eval_region(model, t, p) for t in expr.terms)
    return any(_eval_region(model, t, p) for t in expr.terms)


# ---------------------------------------------------------------------------
# Monte Carlo volume


@dataclass(frozen=True)
class McVolume:
    estimate: float
    std_error: float
    hits: int
    n: int
    seed: int
    box: Aabb


def _default_box(model: Model, expr: RegionExpr) -> Aabb:
    box = None
    for sid in sorted(region_surface_ids(expr)):
        surf = model.surface(sid)
        if not is_bounded(surf.kind):
            raise UnboundedRegionNeedsBox(
                f"surface {sid} is unbounded; pass an explicit sampling box")
        b = aabb(surf.kind)
        box = b if box is None else box.union(b)
    return box


def mc_cell_volume(model: Model, cell_id: int, n: int, seed: int = 0,
                   box: Aabb | None = None) -> McVolume:
    """Rejection-sampling volume estimate over an axis-aligned box.

    Deterministic for fixed (n, seed) regardless of chunking or thread
    count: the RNG is a counter generator keyed by (seed, sample index).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"sample count must be a positive integer, got {n!r}")
    cell = model.cell(cell_id)
    if box is None:
        box = _default_box(model, cell.region)
    compiled = _mc.compile_region(model, cell.region)
    hits = _mc.count_hits(compiled, box, n, seed)
    p_hat = hits / n
    vol = box.volume()
    estimate = vol * p_hat
    std_error = vol * math.sqrt(p_hat * (1.0 - p_hat) / n)
    return McVolume(estimate, std_error, hits, n, seed, box)


# ---------------------------------------------------------------------------
# validation

_PROBE_SAMPLES = 10_000
_PROBE_SEED = 1905


def validate_model(model: Model, volume_probe: bool = True) -> list[Diagnostic]:
    """Structural and geometric sanity diagnostics for a model."""
    diags: list[Diagnostic] = []

    def dup_check(items, code: str, what: str):
        seen: set[int] = set()
        for it in items:
            if it.id in seen:
                diags.append(Diagnostic(ERROR, code, f"duplicate {what} id {it.id}",
                                        f"{what} {it.id}"))
            seen.add(it.id)

    dup_check(model.surfaces, "DuplicateSurfaceId", "surface")
    dup_check(model.materials, "DuplicateMaterialId", "material")
    dup_check(model.cells, "DuplicateCellId", "cell")

    surface_ids = {s.id for s in model.surfaces}
    material_ids = {m.id for m in model.materials}

    used_surfaces: set[int] = set()
    outer_cells = []
    for cell in model.cells:
        refs = region_surface_ids(cell.region)
        used_surfaces |= refs
        for sid in sorted(refs - surface_ids):
            diags.append(Diagnostic(ERROR, "UnknownSurfaceRef",
                                    f"cell {cell.id} references undefined surface {sid}",
                                    f"cell {cell.id}"))
        if isinstance(cell.material, int) and cell.material not in material_ids:
            diags.append(Diagnostic(ERROR, "UnknownMaterialRef",
                                    f"cell {cell.id} references undefined material"
                                    f" {cell.material}", f"cell {cell.id}"))
        if cell.material == OUTER:
            outer_cells.append(cell)
            if cell.density_override is not None:
                diags.append(Diagnostic(ERROR, "OuterWithDensity",
                                        f"outer cell {cell.id} must not carry a density",
                                        f"cell {cell.id}"))

    if not outer_cells:
        diags.append(Diagnostic(ERROR, "MissingOuter",
                                "model defines no outer cell", "model"))
    elif len(outer_cells) > 1:
        ids = ", ".join(str(c.id) for c in outer_cells)
        diags.append(Diagnostic(ERROR, "MultipleOuter",
                                f"model defines {len(outer_cells)} outer cells ({ids})",
                                "model"))

    for s in model.surfaces:
        if s.id not in used_surfaces:
            diags.append(Diagnostic(WARNING, "UnusedSurface",
                                    f"surface {s.id} ({s.name}) is never referenced",
                                    f"surface {s.id}"))

    if volume_probe and not any(d.severity == ERROR for d in diags):
        for cell in model.cells:
            if cell.material == OUTER:
                continue
            try:
                result = mc_cell_volume(model, cell.id, _PROBE_SAMPLES,
                                        seed=_PROBE_SEED)
            except UnboundedRegionNeedsBox:
                continue
            if result.hits == 0:
                diags.append(Diagnostic(
                    WARNING, "ZeroVolumeCell",
                    f"cell {cell.id} ({cell.name}) has no volume in a"
                    f" {_PROBE_SAMPLES}-sample probe", f"cell {cell.id}"))
    return diags
