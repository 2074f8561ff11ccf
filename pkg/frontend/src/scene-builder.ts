/** three.js scene graph construction from a scene document.
 *
 * Meshes are rendered exactly as delivered; there is no client-side
 * re-tessellation. Geometry, materials and the bbox helpers are plain data
 * structures, so everything here also runs headless (tests).
 */

import * as THREE from "three";

import type { SceneDoc, SceneObject } from "./types.js";

export interface SceneGraph {
  group: THREE.Group;
  meshes: Map<number, THREE.Mesh>;
  axes: THREE.AxesHelper;
  bboxMin: THREE.Vector3;
  bboxMax: THREE.Vector3;
}

export function buildObjectMesh(obj: SceneObject): THREE.Mesh {
  const geometry = new THREE.BufferGeometry();
  geometry.setAttribute(
    "position",
    new THREE.BufferAttribute(obj.mesh.vertices, 3),
  );
  geometry.setIndex(new THREE.BufferAttribute(obj.mesh.triangles, 1));
  geometry.computeVertexNormals();
  const material = new THREE.MeshStandardMaterial({
    color: new THREE.Color(obj.rgb[0], obj.rgb[1], obj.rgb[2]),
    roughness: 0.75,
    metalness: 0.05,
    transparent: obj.opacity < 1,
    opacity: obj.opacity,
    side: THREE.DoubleSide,
  });
  const mesh = new THREE.Mesh(geometry, material);
  mesh.name = obj.name;
  mesh.userData.surfaceId = obj.surfaceId;
  return mesh;
}

export function buildSceneGraph(doc: SceneDoc): SceneGraph {
  const group = new THREE.Group();
  group.name = doc.title || "scene";
  const meshes = new Map<number, THREE.Mesh>();
  for (const obj of doc.objects) {
    const mesh = buildObjectMesh(obj);
    meshes.set(obj.surfaceId, mesh);
    group.add(mesh);
  }
  const bboxMin = new THREE.Vector3(doc.bboxMin.x, doc.bboxMin.y, doc.bboxMin.z);
  const bboxMax = new THREE.Vector3(doc.bboxMax.x, doc.bboxMax.y, doc.bboxMax.z);
  const span = bboxMax.clone().sub(bboxMin).length();
  const axes = new THREE.AxesHelper(span > 0 ? span * 0.6 : 1);
  axes.visible = false;
  group.add(axes);
  return { group, meshes, axes, bboxMin, bboxMax };
}

/** Apply visibility/opacity/wireframe state to a built graph. */
export function applyObjectState(
  graph: SceneGraph,
  id: number,
  state: { visible: boolean; opacity: number },
  wireframe: boolean,
): void {
  const mesh = graph.meshes.get(id);
  if (!mesh) return;
  mesh.visible = state.visible;
  const material = mesh.material as THREE.MeshStandardMaterial;
  material.opacity = state.opacity;
  material.transparent = state.opacity < 1;
  material.wireframe = wireframe;
  material.needsUpdate = true;
}

/** Mesh bbox center; used for click reporting when a label is absent. */
export function meshCenter(mesh: THREE.Mesh): THREE.Vector3 {
  mesh.geometry.computeBoundingBox();
  const box = mesh.geometry.boundingBox;
  return box ? box.getCenter(new THREE.Vector3()) : new THREE.Vector3();
}
