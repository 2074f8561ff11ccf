"""Parser for [Material], [Surface] and [Cell] sections.

Reads everything the exporter emits plus the usual hand-written variants:
``$`` comments, ``#`` comment lines (column 1 only), blank lines,
continuation by indentation, unsigned positive senses, and Fortran-style
``1.0D-3`` exponents. Never raises on malformed input; problems surface as
diagnostics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .cells import OUTER, VOID, Cell, Model, parse_region
from .diagnostics import ERROR, WARNING, Diagnostic, SourceSpan
from .errors import FitsGeoError
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
    TorusX,
    TorusY,
    TorusZ,
    Trc,
    Vec3,
    Wed,
    make_surface,
)
from .materials import define_material

_NUMBER_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eEdD][+-]?\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")
_MAT_RE = re.compile(r"^mat\[(\d+)\]$", re.IGNORECASE)
_SECTION_ALIASES = {"material": "material", "surface": "surface", "cell": "cell"}


@dataclass(frozen=True)
class ParseResult:
    model: Model
    diagnostics: list[Diagnostic]


def _parse_float(token: str) -> float:
    if not _NUMBER_RE.match(token):
        raise ValueError(f"bad number {token!r}")
    return float(token.replace("d", "e").replace("D", "e"))


def _parse_int(token: str) -> int:
    if not _INT_RE.match(token):
        raise ValueError(f"bad integer {token!r}")
    return int(token)


def _safe_name(comment: str, fallback: str) -> str:
    name = " ".join(comment.replace("$", " ").split())
    return name if name else fallback


@dataclass
class _Card:
    line: int
    tokens: list[str] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.line)

    @property
    def comment(self) -> str:
        return " ".join(c for c in self.comments if c)


_SURFACE_BUILDERS = {
    "P": (4, lambda p: PlaneGeneral(p[0], p[1], p[2], p[3])),
    "PX": (1, lambda p: PlaneX(p[0])),
    "PY": (1, lambda p: PlaneY(p[0])),
    "PZ": (1, lambda p: PlaneZ(p[0])),
    "SPH": (4, lambda p: Sphere(Vec3(p[0], p[1], p[2]), p[3])),
    "BOX": (12, lambda p: Box(Vec3(*p[0:3]), Vec3(*p[3:6]), Vec3(*p[6:9]),
                              Vec3(*p[9:12]))),
    "RPP": (6, lambda p: Rpp(p[0], p[1], p[2], p[3], p[4], p[5])),
    "RCC": (7, lambda p: Rcc(Vec3(*p[0:3]), Vec3(*p[3:6]), p[6])),
    "TRC": (8, lambda p: Trc(Vec3(*p[0:3]), Vec3(*p[3:6]), p[6], p[7])),
    "TX": (6, lambda p: TorusX(Vec3(*p[0:3]), p[3], p[4], p[5])),
    "TY": (6, lambda p: TorusY(Vec3(*p[0:3]), p[3], p[4], p[5])),
    "TZ": (6, lambda p: TorusZ(Vec3(*p[0:3]), p[3], p[4], p[5])),
    "REC": (12, lambda p: Rec(Vec3(*p[0:3]), Vec3(*p[3:6]), Vec3(*p[6:9]),
                              Vec3(*p[9:12]))),
    "WED": (12, lambda p: Wed(Vec3(*p[0:3]), Vec3(*p[3:6]), Vec3(*p[6:9]),
                              Vec3(*p[9:12]))),
}


class _Parser:
    def __init__(self, text: str):
        self.model = Model()
        self.diags: list[Diagnostic] = []
        self.text = text

    def error(self, code: str, message: str, span: SourceSpan):
        self.diags.append(Diagnostic(ERROR, code, message, span))

    def warning(self, code: str, message: str, span: SourceSpan):
        self.diags.append(Diagnostic(WARNING, code, message, span))

    # -- card assembly ------------------------------------------------------

    def run(self) -> ParseResult:
        section: str | None = None
        card: _Card | None = None

        def flush():
            nonlocal card
            if card is not None and card.tokens:
                self.dispatch(section, card)
            card = None

        for line_no, raw in enumerate(self.text.splitlines(), start=1):
            if raw.startswith("#"):
                continue
            code, _, comment = raw.partition("$")
            comment = comment.strip()
            if not code.strip():
                # blank or comment-only lines terminate the current card
                flush()
                continue
            stripped = code.strip()
            if stripped.startswith("[") and stripped.endswith("]"):
                flush()
                name = "".join(stripped[1:-1].split()).lower()
                section = _SECTION_ALIASES.get(name)
                if section is None:
                    self.warning("UnknownSectionSkipped",
                                 f"section [{stripped[1:-1].strip()}] is not"
                                 " understood; skipping", SourceSpan(line_no))
                continue
            if section is None:
                self.warning("ContentOutsideSection",
                             f"ignoring content before any known section:"
                             f" {stripped[:40]!r}", SourceSpan(line_no))
                continue
            is_continuation = code[0] in " \t"
            starts_material = _MAT_RE.match(stripped.split()[0]) is not None
            if card is not None and is_continuation and not starts_material:
                card.tokens.extend(stripped.split())
                card.comments.append(comment)
            else:
                flush()
                card = _Card(line_no, stripped.split(), [comment])
        flush()
        return ParseResult(self.model, self.diags)

    # -- card parsers -------------------------------------------------------

    def dispatch(self, section: str, card: _Card):
        try:
            if section == "surface":
                self.surface_card(card)
            elif section == "material":
                self.material_card(card)
            else:
                self.cell_card(card)
        except (FitsGeoError, ValueError, OverflowError) as exc:
            self.error(type(exc).__name__, str(exc), card.span)

    def surface_card(self, card: _Card):
        tokens = card.tokens
        if len(tokens) < 2:
            self.error("ParseError", "surface card needs an id and a mnemonic",
                       card.span)
            return
        try:
            sid = _parse_int(tokens[0])
        except ValueError:
            self.error("ParseError", f"bad surface id {tokens[0]!r}", card.span)
            return
        mnemonic = tokens[1].upper()
        builder = _SURFACE_BUILDERS.get(mnemonic)
        if builder is None:
            self.error("UnknownMnemonic",
                       f"unknown surface mnemonic {tokens[1]!r}", card.span)
            return
        arity, build = builder
        raw_params = tokens[2:]
        if len(raw_params) != arity:
            self.error("ParseError",
                       f"{mnemonic} expected {arity} parameters,"
                       f" got {len(raw_params)}", card.span)
            return
        params = [_parse_float(t) for t in raw_params]
        kind = build(params)
        self.model.surfaces.append(
            make_surface(sid, _safe_name(card.comment, f"s{sid}"), kind))

    def material_card(self, card: _Card):
        tokens = card.tokens
        m = _MAT_RE.match(tokens[0])
        if m is None:
            self.error("ParseError",
                       f"expected MAT[<id>] to open a material, got {tokens[0]!r}",
                       card.span)
            return
        mid = int(m.group(1))
        gas = False
        pairs: list[tuple[str, float]] = []
        rest = tokens[1:]
        i = 0
        while i < len(rest):
            token = rest[i]
            upper = token.upper()
            if upper.startswith("GAS="):
                gas = upper == "GAS=1"
                i += 1
                continue
            if i + 1 >= len(rest):
                self.error("ParseError",
                           f"dangling species token {token!r} without a ratio",
                           card.span)
                return
            pairs.append((token, _parse_float(rest[i + 1])))
            i += 2
        if not pairs:
            self.error("EmptyComposition",
                       f"material {mid} defines no components", card.span)
            return
        signs = {r > 0 for _, r in pairs}
        if len(signs) != 1 or any(r == 0 for _, r in pairs):
            self.error("ParseError",
                       "component ratios must be all positive (atom) or all"
                       " negative (mass)", card.span)
            return
        mode = "atom" if signs == {True} else "mass"
        name, density = self._material_comment(card, mid)
        self.model.materials.append(define_material(
            mid, name, density, [(sp, abs(r)) for sp, r in pairs], mode, gas))

    def _material_comment(self, card: _Card, mid: int) -> tuple[str, float]:
        words = card.comment.split()
        if len(words) >= 3 and words[-1] == "g/cc":
            try:
                density = _parse_float(words[-2])
                name = " ".join(words[:-2])
                if name and density > 0:
                    return _safe_name(name, f"m{mid}"), density
            except ValueError:
                pass
        self.warning("DensityDefaulted",
                     f"material {mid} carries no '$ name density g/cc' comment;"
                     " density defaults to 1", card.span)
        return _safe_name(card.comment, f"m{mid}"), 1.0

    def cell_card(self, card: _Card):
        tokens = card.tokens
        if len(tokens) < 2:
            self.error("ParseError", "cell card needs an id and a material number",
                       card.span)
            return
        cid = _parse_int(tokens[0])
        matnum = _parse_int(tokens[1])
        density = None
        region_start = 2
        if matnum == 0:
            material = VOID
        elif matnum == -1:
            material = OUTER
        elif matnum > 0:
            material = matnum
            if len(tokens) < 3:
                self.error("ParseError", f"cell {cid} is missing its density",
                           card.span)
                return
            value = _parse_float(tokens[2])
            if value >= 0:
                self.error("UnsupportedDensity",
                           f"cell {cid}: positive density (atoms/b-cm) is not"
                           " supported; use negative g/cm3", card.span)
                return
            density = -value
            region_start = 3
        else:
            self.error("ParseError",
                       f"cell {cid}: bad material number {matnum}", card.span)
            return
        region_text = " ".join(tokens[region_start:])
        region = parse_region(region_text)
        self.model.cells.append(Cell(cid, _safe_name(card.comment, f"c{cid}"),
                                     region, material, density))


def parse_input(text: str) -> ParseResult:
    """Parse exported (or hand-written) sections into a model.

    Total over arbitrary input: malformed cards become error diagnostics,
    unknown sections are skipped with a warning, and whatever parsed cleanly
    lands in the returned model. Run ``validate_model`` for cross-reference
    checks.
    """
    return _Parser(text).run()
