"""Exception types raised across the package."""

from __future__ import annotations


class FitsGeoError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------------------
# geometry


class DegenerateGeometry(FitsGeoError):
    """Surface parameters describe a degenerate or invalid shape."""


class InvalidId(FitsGeoError):
    """Object id must be a positive integer."""


class InvalidName(FitsGeoError):
    """Object name must be nonempty printable text without '$' or newlines."""


class InvalidOpacity(FitsGeoError):
    """Opacity must lie in [0, 1]."""


class UnboundedSurface(FitsGeoError):
    """Operation requires a bounded surface but got a plane."""


class ResolutionTooLow(FitsGeoError):
    """Tessellation resolution must be at least 3."""


# ---------------------------------------------------------------------------
# materials


class MaterialError(FitsGeoError):
    """Base class for material definition problems."""


class InvalidDensity(MaterialError):
    pass


class EmptyComposition(MaterialError):
    pass


class BadSpecies(MaterialError):
    """Species token is neither an element symbol nor a nuclide code."""


class DuplicateWithinFile(MaterialError):
    """Same material name appears twice in one database file."""


class NotFound(MaterialError):
    """Database lookup failed; carries up to three nearest-name suggestions."""

    def __init__(self, name: str, suggestions: list[str]):
        self.name = name
        self.suggestions = suggestions
        hint = f" (did you mean: {', '.join(suggestions)}?)" if suggestions else ""
        super().__init__(f"material {name!r} not found{hint}")


class ParseError(FitsGeoError):
    """Text input could not be parsed.

    ``file`` and ``line`` locate the failure when parsing files; region
    parse errors carry a character ``position`` instead.
    """

    def __init__(self, reason: str, *, file: str | None = None,
                 line: int | None = None, position: int | None = None):
        self.reason = reason
        self.file = file
        self.line = line
        self.position = position
        loc = ""
        if file is not None:
            loc += f"{file}:"
        if line is not None:
            loc += f"{line}:"
        if position is not None:
            loc += f"col {position + 1}:"
        super().__init__(f"{loc} {reason}" if loc else reason)


# ---------------------------------------------------------------------------
# regions / cells / model


class RegionError(FitsGeoError):
    """Base class for region expression problems."""


class RegionSyntaxError(RegionError, ParseError):
    def __init__(self, reason: str, position: int):
        ParseError.__init__(self, reason, position=position)


class UnknownSurfaceName(RegionError):
    pass


class EmptyExpression(RegionError):
    pass


class UnknownCell(FitsGeoError):
    pass


class UnknownSurfaceRef(FitsGeoError):
    """A region references a surface id the model does not define."""


class UnknownMaterialRef(FitsGeoError):
    pass


class UnboundedRegionNeedsBox(FitsGeoError):
    """MC sampling over a region with unbounded surfaces needs an explicit box."""


# ---------------------------------------------------------------------------
# export / scene


class NonFiniteNumber(FitsGeoError):
    pass


class NothingSelected(FitsGeoError):
    """Export was asked for no sections at all."""


class UnknownColor(FitsGeoError):
    def __init__(self, name: str, suggestions: list[str]):
        self.name = name
        self.suggestions = suggestions
        hint = f" (did you mean: {', '.join(suggestions)}?)" if suggestions else ""
        super().__init__(f"unknown color {name!r}{hint}")


class EmptyScene(FitsGeoError):
    """Scene building needs at least one visible surface."""


class ModelDocError(FitsGeoError):
    """Model document failed JSON or schema validation."""
