/** Scene document (version 1) served by `fitsgeo view` at /scene.json. */

export interface Vec3Tuple {
  x: number;
  y: number;
  z: number;
}

export interface SceneLabel {
  text: string;
  anchor: Vec3Tuple;
}

export interface SceneMesh {
  /** Flat x,y,z triples. */
  vertices: Float32Array;
  /** Flat vertex-index triples. */
  triangles: Uint32Array;
}

export interface SceneObject {
  surfaceId: number;
  name: string;
  rgb: [number, number, number];
  opacity: number;
  mesh: SceneMesh;
  label: SceneLabel | null;
}

export interface SceneDoc {
  version: number;
  title: string;
  bboxMin: Vec3Tuple;
  bboxMax: Vec3Tuple;
  objects: SceneObject[];
}

export class SceneFormatError extends Error {}

function fail(path: string, message: string): never {
  throw new SceneFormatError(`${path}: ${message}`);
}

function isRecord(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function numberArray(v: unknown, path: string, exact?: number): number[] {
  if (!Array.isArray(v)) fail(path, "expected an array of numbers");
  if (exact !== undefined && v.length !== exact) {
    fail(path, `expected exactly ${exact} numbers, got ${v.length}`);
  }
  for (const x of v) {
    if (typeof x !== "number" || !Number.isFinite(x)) {
      fail(path, "expected finite numbers");
    }
  }
  return v as number[];
}

function vec3(v: unknown, path: string): Vec3Tuple {
  const [x, y, z] = numberArray(v, path, 3) as [number, number, number];
  return { x, y, z };
}

function parseMesh(v: unknown, path: string): SceneMesh {
  if (!isRecord(v)) fail(path, "expected a mesh object");
  const vertices = numberArray(v.vertices, `${path}.vertices`);
  const triangles = numberArray(v.triangles, `${path}.triangles`);
  if (vertices.length < 9 || vertices.length % 3 !== 0) {
    fail(`${path}.vertices`, "length must be a positive multiple of 3");
  }
  if (triangles.length < 3 || triangles.length % 3 !== 0) {
    fail(`${path}.triangles`, "length must be a positive multiple of 3");
  }
  const nVerts = vertices.length / 3;
  for (const i of triangles) {
    if (!Number.isInteger(i) || i < 0 || i >= nVerts) {
      fail(`${path}.triangles`, `vertex index ${i} out of range`);
    }
  }
  return {
    vertices: new Float32Array(vertices),
    triangles: new Uint32Array(triangles),
  };
}

function parseObject(v: unknown, path: string): SceneObject {
  if (!isRecord(v)) fail(path, "expected an object entry");
  const id = v.surface_id;
  if (typeof id !== "number" || !Number.isInteger(id) || id < 1) {
    fail(`${path}.surface_id`, "expected a positive integer");
  }
  if (typeof v.name !== "string" || v.name.length === 0) {
    fail(`${path}.name`, "expected a nonempty string");
  }
  const rgb = numberArray(v.rgb, `${path}.rgb`, 3);
  for (const c of rgb) {
    if (c < 0 || c > 1) fail(`${path}.rgb`, "components must be in [0, 1]");
  }
  if (typeof v.opacity !== "number" || v.opacity < 0 || v.opacity > 1) {
    fail(`${path}.opacity`, "expected a number in [0, 1]");
  }
  let label: SceneLabel | null = null;
  if (v.label !== null && v.label !== undefined) {
    if (!isRecord(v.label) || typeof v.label.text !== "string") {
      fail(`${path}.label`, "expected null or {text, anchor}");
    }
    label = {
      text: v.label.text,
      anchor: vec3(v.label.anchor, `${path}.label.anchor`),
    };
  }
  return {
    surfaceId: id as number,
    name: v.name,
    rgb: rgb as [number, number, number],
    opacity: v.opacity,
    mesh: parseMesh(v.mesh, `${path}.mesh`),
    label,
  };
}

/** Validate and convert a parsed /scene.json payload. */
export function parseSceneDoc(data: unknown): SceneDoc {
  if (!isRecord(data)) fail("$", "scene document must be a JSON object");
  if (data.version !== 1) fail("$.version", `unsupported version ${data.version}`);
  if (typeof data.title !== "string") fail("$.title", "expected a string");
  if (!isRecord(data.bbox)) fail("$.bbox", "expected {min, max}");
  if (!Array.isArray(data.objects) || data.objects.length === 0) {
    fail("$.objects", "expected a nonempty array");
  }
  const objects = data.objects.map((o, i) => parseObject(o, `$.objects[${i}]`));
  const ids = new Set(objects.map((o) => o.surfaceId));
  if (ids.size !== objects.length) {
    fail("$.objects", "surface ids must be unique");
  }
  return {
    version: 1,
    title: data.title,
    bboxMin: vec3(data.bbox.min, "$.bbox.min"),
    bboxMax: vec3(data.bbox.max, "$.bbox.max"),
    objects,
  };
}
