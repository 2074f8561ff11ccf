"""Material definitions: user-defined compositions plus a curated on-disk
database of predefined materials.

Database files are plain text, one entry per line::

    # comment
    name | density | mode | species ratio, species ratio, ... [| flags]

``density`` is g/cm3, ``mode`` is ``atom`` or ``mass``, species are element
symbols or integer ZZZAAA nuclide codes. The optional flags field accepts
``gas`` and ``color=<token>``. The ``FITSGEO_MATERIAL_PATH`` environment
variable (os.pathsep separated) appends extra database files; later files
override earlier entries of the same name.
"""

from __future__ import annotations

import difflib
import os
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .colors import DEFAULT_COLOR, color_entry
from .errors import (
    BadSpecies,
    DuplicateWithinFile,
    EmptyComposition,
    InvalidDensity,
    InvalidId,
    InvalidName,
    MaterialError,
    NotFound,
    ParseError,
)

ELEMENT_SYMBOLS = frozenset("""
    H He Li Be B C N O F Ne Na Mg Al Si P S Cl Ar K Ca Sc Ti V Cr Mn Fe Co Ni
    Cu Zn Ga Ge As Se Br Kr Rb Sr Y Zr Nb Mo Tc Ru Rh Pd Ag Cd In Sn Sb Te I
    Xe Cs Ba La Ce Pr Nd Pm Sm Eu Gd Tb Dy Ho Er Tm Yb Lu Hf Ta W Re Os Ir Pt
    Au Hg Tl Pb Bi Po At Rn Fr Ra Ac Th Pa U Np Pu Am Cm Bk Cf Es Fm Md No Lr
    Rf Db Sg Bh Hs Mt Ds Rg Cn Nh Fl Mc Lv Ts Og
""".split())

Species = str | int
Composition = tuple[tuple[Species, float], ...]

RATIO_MODES = ("atom", "mass")


class InvalidRatio(MaterialError):
    pass


def _check_species(sp: Species) -> Species:
    if isinstance(sp, str):
        if sp.isdigit():
            sp = int(sp)
        elif sp not in ELEMENT_SYMBOLS:
            raise BadSpecies(f"{sp!r} is not an element symbol")
    if isinstance(sp, int):
        z, a = divmod(sp, 1000)
        if not (1 <= z <= 118) or sp < 1000:
            raise BadSpecies(f"{sp} is not a valid ZZZAAA nuclide code")
    return sp


@dataclass(frozen=True)
class Material:
    """Identified composition with mass density (g/cm3)."""

    id: int
    name: str
    density: float
    composition: Composition
    ratio_mode: str = "atom"
    gas: bool = False
    color: str = DEFAULT_COLOR


def define_material(id: int, name: str, density: float, composition,
                    ratio_mode: str = "atom", gas: bool = False,
                    color: str = DEFAULT_COLOR) -> Material:
    """Build a validated Material from explicit composition data."""
    if not isinstance(id, int) or isinstance(id, bool) or id < 1:
        raise InvalidId(f"material id must be a positive integer, got {id!r}")
    if not isinstance(name, str) or not name.strip() or "\n" in name or "$" in name:
        raise InvalidName(f"bad material name {name!r}")
    if not isinstance(density, (int, float)) or not density > 0.0:
        raise InvalidDensity(f"density must be > 0 g/cm3, got {density!r}")
    comp = tuple((sp, r) for sp, r in composition)
    if not comp:
        raise EmptyComposition(f"material {name!r} has no components")
    checked = []
    for sp, ratio in comp:
        sp = _check_species(sp)
        if not (isinstance(ratio, (int, float)) and ratio > 0.0):
            raise InvalidRatio(f"ratio for {sp} must be > 0, got {ratio!r}")
        checked.append((sp, float(ratio)))
    if ratio_mode not in RATIO_MODES:
        raise MaterialError(f"ratio_mode must be one of {RATIO_MODES}, got {ratio_mode!r}")
    color_entry(color)
    return Material(id, name, float(density), tuple(checked), ratio_mode,
                    bool(gas), color)


def canonical_name(name: str) -> str:
    """Lower-cased with internal whitespace collapsed."""
    return " ".join(name.split()).lower()


@dataclass(frozen=True)
class DbEntry:
    name: str
    density: float
    ratio_mode: str
    composition: Composition
    gas: bool
    color: str
    provenance: str


@dataclass
class MaterialDb:
    entries: dict[str, DbEntry] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return canonical_name(name) in self.entries

    def names(self) -> list[str]:
        return sorted(self.entries)

    def get(self, name: str) -> DbEntry:
        key = canonical_name(name)
        try:
            return self.entries[key]
        except KeyError:
            hints = difflib.get_close_matches(key, self.entries, n=3, cutoff=0.4)
            raise NotFound(name, hints) from None


def material_from_db(db: MaterialDb, name: str, id: int) -> Material:
    """Copy of a database entry with the caller's id. Case-insensitive and
    whitespace-collapsing lookup."""
    entry = db.get(name)
    return define_material(id, entry.name, entry.density, entry.composition,
                           entry.ratio_mode, entry.gas, entry.color)


def _parse_line(text: str, *, file: str, line_no: int) -> DbEntry:
    parts = [p.strip() for p in text.split("|")]
    if len(parts) not in (4, 5):
        raise ParseError("expected 'name | density | mode | composition [| flags]'",
                         file=file, line=line_no)
    name, density_s, mode, comp_s = parts[:4]
    if not name:
        raise ParseError("empty material name", file=file, line=line_no)
    try:
        density = float(density_s)
    except ValueError:
        raise ParseError(f"bad density {density_s!r}", file=file, line=line_no) from None
    if mode not in RATIO_MODES:
        raise ParseError(f"mode must be 'atom' or 'mass', got {mode!r}",
                         file=file, line=line_no)
    comp: list[tuple[Species, float]] = []
    for item in comp_s.split(","):
        tokens = item.split()
        if len(tokens) != 2:
            raise ParseError(f"bad composition item {item.strip()!r}"
                             " (expected 'species ratio')", file=file, line=line_no)
        sp_s, ratio_s = tokens
        try:
            sp = _check_species(sp_s)
        except BadSpecies as exc:
            raise ParseError(str(exc), file=file, line=line_no) from None
        try:
            ratio = float(ratio_s)
        except ValueError:
            raise ParseError(f"bad ratio {ratio_s!r}", file=file, line=line_no) from None
        comp.append((sp, ratio))
    gas = False
    color = DEFAULT_COLOR
    if len(parts) == 5 and parts[4]:
        for flag in parts[4].split(","):
            flag = flag.strip()
            if flag == "gas":
                gas = True
            elif flag.startswith("color="):
                color = flag[len("color="):].strip()
                color_entry(color)
            else:
                raise ParseError(f"unknown flag {flag!r}", file=file, line=line_no)
    try:
        probe = define_material(1, name, density, comp, mode, gas, color)
    except MaterialError as exc:
        raise ParseError(str(exc), file=file, line=line_no) from None
    return DbEntry(name, probe.density, mode, probe.composition, gas, color,
                   provenance=f"{file}:{line_no}")


def db_load(paths) -> MaterialDb:
    """Load and merge database files; later files override earlier entries
    (with a warning). Duplicate names within one file are an error."""
    db = MaterialDb()
    for path in paths:
        path = Path(path)
        seen_here: set[str] = set()
        with open(path, encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, start=1):
                text = raw.strip()
                if not text or text.startswith("#"):
                    continue
                entry = _parse_line(text, file=str(path), line_no=line_no)
                key = canonical_name(entry.name)
                if key in seen_here:
                    raise DuplicateWithinFile(
                        f"{path}:{line_no}: duplicate material {entry.name!r}")
                seen_here.add(key)
                if key in db.entries:
                    warnings.warn(
                        f"{path}:{line_no}: material {entry.name!r} overrides an"
                        f" earlier definition ({db.entries[key].provenance})",
                        stacklevel=2)
                db.entries[key] = entry
    return db


MATERIAL_PATH_ENV = "FITSGEO_MATERIAL_PATH"


def bundled_db_path() -> Path:
    return Path(resources.files("fitsgeo").joinpath("data/materials.txt"))


def default_db() -> MaterialDb:
    """Bundled database plus any files named in FITSGEO_MATERIAL_PATH."""
    paths = [bundled_db_path()]
    extra = os.environ.get(MATERIAL_PATH_ENV, "")
    for piece in extra.split(os.pathsep):
        if piece:
            paths.append(Path(piece))
    return db_load(paths)
