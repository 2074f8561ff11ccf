/** Small handmade scene documents for unit tests. */

import { parseSceneDoc, type SceneDoc } from "../src/types.js";

export function cubeMesh(cx = 0, cy = 0, cz = 0, half = 1): {
  vertices: number[];
  triangles: number[];
} {
  const vertices: number[] = [];
  for (const dz of [-half, half]) {
    for (const dy of [-half, half]) {
      for (const dx of [-half, half]) {
        vertices.push(cx + dx, cy + dy, cz + dz);
      }
    }
  }
  const quads = [
    [0, 2, 3, 1],
    [4, 5, 7, 6],
    [0, 1, 5, 4],
    [2, 6, 7, 3],
    [0, 4, 6, 2],
    [1, 3, 7, 5],
  ];
  const triangles: number[] = [];
  for (const [a, b, c, d] of quads as [number, number, number, number][]) {
    triangles.push(a, b, c, a, c, d);
  }
  return { vertices, triangles };
}

export function rawDoc(): Record<string, unknown> {
  return {
    version: 1,
    title: "fixture",
    bbox: { min: [-4, -2, -2], max: [4, 2, 2] },
    objects: [
      {
        surface_id: 1,
        name: "left cube",
        rgb: [1, 0.2, 0.2],
        opacity: 1,
        mesh: cubeMesh(-2, 0, 0, 1),
        label: { text: "left cube", anchor: [-2, 0, 0] },
      },
      {
        surface_id: 2,
        name: "right cube",
        rgb: [0.2, 0.4, 1],
        opacity: 0.6,
        mesh: cubeMesh(2, 0, 0, 1),
        label: { text: "right cube", anchor: [2, 0, 0] },
      },
      {
        surface_id: 5,
        name: "quiet cube",
        rgb: [0.5, 0.9, 0.5],
        opacity: 1,
        mesh: cubeMesh(0, 0, 0, 0.5),
        label: null,
      },
    ],
  };
}

export function fixtureDoc(): SceneDoc {
  return parseSceneDoc(rawDoc());
}
