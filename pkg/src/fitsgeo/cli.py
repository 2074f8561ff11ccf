"""Command-line interface.

Subcommands: ``validate``, ``export``, ``volume``, ``scene``, ``view``,
``materials`` and ``example``. Exit codes: 0 success, 1 validation errors,
2 I/O or parse failures.
"""

from __future__ import annotations

import argparse
import sys
import webbrowser
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from importlib import resources
from pathlib import Path

from .__about__ import __version__
from .cells import Model, mc_cell_volume
from .diagnostics import ERROR
from .errors import FitsGeoError, ModelDocError
from .geometry import Aabb, Vec3
from .jsonio import canonical_json
from .materials import default_db
from .modeldoc import LoadResult, load_model_doc, save_model_doc
from .phits_export import ExportFlags, export_input, format_number
from .scene import build_scene, write_scene
from .snake import SnakeParams, example_snake

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2


def _print_diags(diags, stream=None) -> None:
    stream = stream or sys.stderr
    for d in diags:
        print(str(d), file=stream)


def _load(path: str) -> LoadResult:
    try:
        return load_model_doc(path)
    except (OSError, ModelDocError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO) from None


def _load_valid(path: str) -> Model:
    result = _load(path)
    _print_diags(result.diagnostics)
    if not result.ok:
        raise SystemExit(EXIT_VALIDATION)
    return result.model


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    result = _load(args.model)
    _print_diags(result.diagnostics)
    n_err = sum(1 for d in result.diagnostics if d.severity == ERROR)
    if n_err:
        print(f"{args.model}: {n_err} error(s)")
        return EXIT_VALIDATION
    print(f"{args.model}: OK ({len(result.model.surfaces)} surfaces,"
          f" {len(result.model.materials)} materials,"
          f" {len(result.model.cells)} cells)")
    return EXIT_OK


def cmd_export(args) -> int:
    model = _load_valid(args.model)
    sections = {s.strip() for s in args.sections.split(",") if s.strip()}
    unknown = sections - {"material", "surface", "cell"}
    if unknown:
        print(f"error: unknown sections: {sorted(unknown)}", file=sys.stderr)
        return EXIT_IO
    flags = ExportFlags(
        include_material="material" in sections,
        include_surface="surface" in sections,
        include_cell="cell" in sections,
        header_comment=args.header_comment,
    )
    try:
        text = export_input(model, flags)
    except FitsGeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    print(f"wrote {args.output}")
    return EXIT_OK


def cmd_volume(args) -> int:
    model = _load_valid(args.model)
    box = None
    if args.box is not None:
        x0, x1, y0, y1, z0, z1 = args.box
        box = Aabb(Vec3(x0, y0, z0), Vec3(x1, y1, z1))
    try:
        result = mc_cell_volume(model, args.cell, args.samples, seed=args.seed,
                                box=box)
    except (FitsGeoError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    payload = {
        "cell": args.cell,
        "estimate": result.estimate,
        "std_error": result.std_error,
        "hits": result.hits,
        "n": result.n,
        "seed": result.seed,
        "box": {"min": [result.box.min.x, result.box.min.y, result.box.min.z],
                "max": [result.box.max.x, result.box.max.y, result.box.max.z]},
    }
    sys.stdout.write(canonical_json(payload).decode("utf-8"))
    return EXIT_OK


def _scene_bytes(args) -> bytes:
    model = _load_valid(args.model)
    doc = build_scene(model, resolution=args.resolution, labels=args.labels,
                      opacity_override=args.opacity)
    return write_scene(doc)


def cmd_scene(args) -> int:
    try:
        data = _scene_bytes(args)
    except FitsGeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    Path(args.output).write_bytes(data)
    print(f"wrote {args.output} ({len(data)} bytes)")
    return EXIT_OK


# -- view server -------------------------------------------------------------

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".json": "application/json",
    ".svg": "image/svg+xml",
}


def _viewer_assets() -> Path:
    return Path(resources.files("fitsgeo").joinpath("viewer_assets"))


class _ViewerHandler(BaseHTTPRequestHandler):
    scene_data: bytes = b"{}"
    assets_dir: Path | None = None

    def log_message(self, fmt, *args):  # quiet server
        pass

    def _send(self, status: int, content_type: str, body: bytes) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Cache-Control", "no-store")
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):  # noqa: N802  (http.server API)
        path = self.path.split("?", 1)[0]
        if path == "/healthz":
            self._send(200, "application/json", b'{"status":"ok"}')
            return
        if path == "/scene.json":
            self._send(200, "application/json", self.scene_data)
            return
        if path == "/":
            path = "/index.html"
        assets = self.assets_dir
        target = (assets / path.lstrip("/")).resolve()
        if assets is None or not str(target).startswith(str(assets.resolve())) \
                or not target.is_file():
            self._send(404, "text/plain; charset=utf-8", b"not found")
            return
        ctype = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        self._send(200, ctype, target.read_bytes())


def make_view_server(scene_data: bytes, host: str = "127.0.0.1",
                     port: int = 0) -> ThreadingHTTPServer:
    """HTTP server for the viewer: /, /scene.json, /healthz plus assets."""
    handler = type("Handler", (_ViewerHandler,), {
        "scene_data": scene_data,
        "assets_dir": _viewer_assets(),
    })
    return ThreadingHTTPServer((host, port), handler)


def cmd_view(args) -> int:
    try:
        data = _scene_bytes(args)
    except FitsGeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    server = make_view_server(data, args.host, args.port)
    host, port = server.server_address[:2]
    url = f"http://{host}:{port}/"
    print(f"serving viewer at {url} (Ctrl-C to stop)", flush=True)
    if args.open:
        webbrowser.open_new_tab(url)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def cmd_materials(args) -> int:
    try:
        db = default_db()
    except FitsGeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.action == "list":
        for name in db.names():
            entry = db.entries[name]
            print(f"{entry.name:24s} {format_number(entry.density):>10s} g/cc"
                  f"  {entry.ratio_mode}")
        return EXIT_OK
    try:
        entry = db.get(args.name)
    except FitsGeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    comp = ", ".join(f"{sp} {format_number(r)}" for sp, r in entry.composition)
    print(f"name:     {entry.name}")
    print(f"density:  {format_number(entry.density)} g/cc")
    print(f"mode:     {entry.ratio_mode}")
    print(f"gas:      {'yes' if entry.gas else 'no'}")
    print(f"color:    {entry.color}")
    print(f"makeup:   {comp}")
    print(f"source:   {entry.provenance}")
    return EXIT_OK


def cmd_example(args) -> int:
    params = SnakeParams(n_segments=args.segments, x_max=args.x_max)
    model = example_snake(params)
    save_model_doc(model, args.output)
    print(f"wrote {args.output}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fitsgeo",
        description="CSG geometry kernel and PHITS input generator")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a model document")
    p.add_argument("model")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("export", help="write PHITS sections")
    p.add_argument("model")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--sections", default="material,surface,cell",
                   help="comma list from material,surface,cell")
    p.add_argument("--header-comment", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("volume", help="Monte Carlo cell volume")
    p.add_argument("model")
    p.add_argument("--cell", type=int, required=True)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=float, nargs=6, default=None,
                   metavar=("XMIN", "XMAX", "YMIN", "YMAX", "ZMIN", "ZMAX"))
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("scene", help="write the viewer scene document")
    p.add_argument("model")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--resolution", type=int, default=32)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--opacity", type=float, default=None)
    p.set_defaults(func=cmd_scene)

    p = sub.add_parser("view", help="serve the interactive 3D viewer")
    p.add_argument("model")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8137)
    p.add_argument("--resolution", type=int, default=48)
    p.add_argument("--labels", action="store_true", default=True)
    p.add_argument("--no-labels", dest="labels", action="store_false")
    p.add_argument("--opacity", type=float, default=None)
    p.add_argument("--open", action="store_true",
                   help="open a browser tab once serving")
    p.set_defaults(func=cmd_view)

    p = sub.add_parser("materials", help="inspect the material database")
    msub = p.add_subparsers(dest="action", required=True)
    pl = msub.add_parser("list")
    pl.set_defaults(func=cmd_materials, action="list")
    ps = msub.add_parser("show")
    ps.add_argument("name")
    ps.set_defaults(func=cmd_materials, action="show")

    p = sub.add_parser("example", help="generate a bundled example model")
    esub = p.add_subparsers(dest="which", required=True)
    pe = esub.add_parser("snake")
    pe.add_argument("-o", "--output", required=True)
    pe.add_argument("--segments", type=int, default=50)
    pe.add_argument("--x-max", type=float, default=5.0)
    pe.set_defaults(func=cmd_example)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
