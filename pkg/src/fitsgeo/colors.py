"""Color table shared by surfaces, the scene builder and the exporter.

Every color token accepted by :func:`fitsgeo.geometry.make_surface` has an
entry here, giving its display RGB and the ANGEL color identifier used by
PHITS plotting. Names shared by both worlds map to themselves.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass

from .errors import UnknownColor


@dataclass(frozen=True)
class ColorEntry:
    name: str
    rgb: tuple[float, float, float]
    angel_name: str


def _e(name: str, r: float, g: float, b: float, angel: str | None = None) -> ColorEntry:
    return ColorEntry(name, (r, g, b), angel if angel is not None else name)


_ENTRIES = [
    _e("red", 1.00, 0.10, 0.10),
    _e("orange", 1.00, 0.55, 0.00),
    _e("yellow", 1.00, 0.95, 0.10),
    _e("green", 0.10, 0.75, 0.15),
    _e("cyan", 0.10, 0.85, 0.90),
    _e("blue", 0.15, 0.25, 0.95),
    _e("violet", 0.55, 0.15, 0.90),
    _e("magenta", 0.90, 0.15, 0.80),
    _e("pink", 1.00, 0.60, 0.75),
    _e("purple", 0.50, 0.10, 0.60),
    _e("brown", 0.55, 0.30, 0.10),
    _e("gray", 0.55, 0.55, 0.55),
    _e("lightgray", 0.80, 0.80, 0.80),
    _e("darkgray", 0.30, 0.30, 0.30),
    _e("white", 1.00, 1.00, 1.00),
    _e("black", 0.02, 0.02, 0.02),
    _e("darkred", 0.55, 0.05, 0.05),
    _e("darkgreen", 0.05, 0.40, 0.10),
    _e("yellowgreen", 0.65, 0.85, 0.15),
    _e("orangeyellow", 1.00, 0.75, 0.10),
    _e("pastelred", 1.00, 0.55, 0.50, "pastelpink"),
    _e("pastelpink", 1.00, 0.75, 0.80),
    _e("pastelyellow", 1.00, 0.95, 0.60),
    _e("pastelgreen", 0.60, 0.90, 0.60),
    _e("pastelcyan", 0.65, 0.95, 0.95),
    _e("pastelblue", 0.60, 0.70, 0.95),
    _e("pastelviolet", 0.75, 0.60, 0.95),
    _e("pastelmagenta", 0.95, 0.60, 0.90),
    _e("pastelpurple", 0.75, 0.55, 0.80),
]

COLOR_TABLE: dict[str, ColorEntry] = {c.name: c for c in _ENTRIES}

DEFAULT_COLOR = "gray"


def color_entry(name: str) -> ColorEntry:
    """Look up a color token, raising UnknownColor with suggestions."""
    try:
        return COLOR_TABLE[name]
    except KeyError:
        hints = difflib.get_close_matches(name, COLOR_TABLE, n=3, cutoff=0.4)
        raise UnknownColor(name, hints) from None


def angel_color(name: str) -> str:
    """ANGEL color identifier for a surface color token."""
    return color_entry(name).angel_name
