import { describe, expect, it } from "vitest";

import { parseSceneDoc, SceneFormatError } from "../src/types.js";
import { rawDoc } from "./fixtures.js";

describe("parseSceneDoc", () => {
  it("accepts a well-formed document", () => {
    const doc = parseSceneDoc(rawDoc());
    expect(doc.version).toBe(1);
    expect(doc.objects).toHaveLength(3);
    expect(doc.objects[0]!.mesh.vertices).toHaveLength(24);
    expect(doc.objects[0]!.label?.text).toBe("left cube");
    expect(doc.objects[2]!.label).toBeNull();
  });

  it("rejects wrong versions", () => {
    const raw = rawDoc();
    raw.version = 2;
    expect(() => parseSceneDoc(raw)).toThrow(SceneFormatError);
  });

  it("rejects non-objects and empty object lists", () => {
    expect(() => parseSceneDoc(null)).toThrow(SceneFormatError);
    expect(() => parseSceneDoc([1, 2])).toThrow(SceneFormatError);
    const raw = rawDoc();
    raw.objects = [];
    expect(() => parseSceneDoc(raw)).toThrow(/nonempty/);
  });

  it("rejects out-of-range triangle indices", () => {
    const raw = rawDoc();
    (raw.objects as any)[0].mesh.triangles[0] = 99;
    expect(() => parseSceneDoc(raw)).toThrow(/out of range/);
  });

  it("rejects bad rgb and opacity", () => {
    let raw = rawDoc();
    (raw.objects as any)[0].rgb = [2, 0, 0];
    expect(() => parseSceneDoc(raw)).toThrow(/rgb/);
    raw = rawDoc();
    (raw.objects as any)[0].opacity = -0.5;
    expect(() => parseSceneDoc(raw)).toThrow(/opacity/);
  });

  it("rejects duplicate surface ids", () => {
    const raw = rawDoc();
    (raw.objects as any)[1].surface_id = 1;
    expect(() => parseSceneDoc(raw)).toThrow(/unique/);
  });

  it("reports the failing path", () => {
    const raw = rawDoc();
    (raw.objects as any)[1].mesh.vertices = [1, 2];
    expect(() => parseSceneDoc(raw)).toThrow(/objects\[1\].mesh.vertices/);
  });
});
