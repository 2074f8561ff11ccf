/** HTML overlay labels anchored to 3D points.
 *
 * Each labeled object gets an absolutely positioned div that tracks the
 * projected anchor every frame. DOM-only, so it works without WebGL.
 */

import * as THREE from "three";

import type { SceneDoc } from "./types.js";

export interface LabelEntry {
  surfaceId: number;
  element: HTMLDivElement;
  anchor: THREE.Vector3;
}

export class LabelOverlay {
  readonly container: HTMLDivElement;
  readonly entries: LabelEntry[] = [];
  private visible = true;

  constructor(doc: SceneDoc, parent: HTMLElement) {
    this.container = parent.ownerDocument.createElement("div");
    this.container.className = "label-overlay";
    parent.appendChild(this.container);
    for (const obj of doc.objects) {
      if (!obj.label) continue;
      const el = parent.ownerDocument.createElement("div");
      el.className = "object-label";
      el.textContent = obj.label.text;
      this.container.appendChild(el);
      this.entries.push({
        surfaceId: obj.surfaceId,
        element: el,
        anchor: new THREE.Vector3(
          obj.label.anchor.x,
          obj.label.anchor.y,
          obj.label.anchor.z,
        ),
      });
    }
  }

  setVisible(on: boolean): void {
    this.visible = on;
    this.container.style.display = on ? "" : "none";
  }

  /** Project anchors into CSS coordinates for the given viewport. */
  update(
    camera: THREE.PerspectiveCamera,
    width: number,
    height: number,
    objectVisible: (id: number) => boolean,
  ): void {
    if (!this.visible) return;
    const v = new THREE.Vector3();
    for (const entry of this.entries) {
      v.copy(entry.anchor).project(camera);
      const behind = v.z > 1 || v.z < -1;
      if (behind || !objectVisible(entry.surfaceId)) {
        entry.element.style.display = "none";
        continue;
      }
      entry.element.style.display = "";
      entry.element.style.left = `${((v.x + 1) / 2) * width}px`;
      entry.element.style.top = `${((1 - v.y) / 2) * height}px`;
    }
  }

  dispose(): void {
    this.container.remove();
  }
}
