/** Viewer UI state: per-object visibility and opacity plus global toggles.
 *
 * The state never mutates scene geometry; it only drives how the loaded
 * document is displayed. Restoring defaults reproduces the initial render
 * exactly.
 */

import type { SceneDoc } from "./types.js";

export interface ObjectState {
  visible: boolean;
  opacity: number;
}

export interface StateSnapshot {
  objects: Record<number, ObjectState>;
  labelsOn: boolean;
  axesOn: boolean;
  wireframe: boolean;
}

export type StateListener = (state: ViewerState) => void;

const clamp01 = (v: number) => Math.min(1, Math.max(0, v));

export class ViewerState {
  private readonly defaults: Map<number, ObjectState> = new Map();
  private readonly objects: Map<number, ObjectState> = new Map();
  private readonly listeners: Set<StateListener> = new Set();

  readonly hasLabels: boolean;
  labelsOn: boolean;
  axesOn = false;
  wireframe = false;

  constructor(doc: SceneDoc) {
    for (const obj of doc.objects) {
      this.defaults.set(obj.surfaceId, { visible: true, opacity: obj.opacity });
      this.objects.set(obj.surfaceId, { visible: true, opacity: obj.opacity });
    }
    this.hasLabels = doc.objects.some((o) => o.label !== null);
    this.labelsOn = this.hasLabels;
  }

  ids(): number[] {
    return [...this.objects.keys()];
  }

  get(id: number): ObjectState {
    const st = this.objects.get(id);
    if (!st) throw new Error(`unknown object ${id}`);
    return { ...st };
  }

  onChange(listener: StateListener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this);
  }

  setVisible(id: number, visible: boolean): void {
    const st = this.objects.get(id);
    if (!st) throw new Error(`unknown object ${id}`);
    st.visible = visible;
    this.emit();
  }

  setOpacity(id: number, opacity: number): void {
    const st = this.objects.get(id);
    if (!st) throw new Error(`unknown object ${id}`);
    st.opacity = clamp01(opacity);
    this.emit();
  }

  setGlobalOpacity(opacity: number): void {
    const value = clamp01(opacity);
    for (const st of this.objects.values()) st.opacity = value;
    this.emit();
  }

  setLabels(on: boolean): void {
    this.labelsOn = on;
    this.emit();
  }

  setAxes(on: boolean): void {
    this.axesOn = on;
    this.emit();
  }

  setWireframe(on: boolean): void {
    this.wireframe = on;
    this.emit();
  }

  /** Back to the document's own visibility/opacity and default toggles. */
  resetDefaults(): void {
    for (const [id, def] of this.defaults) {
      this.objects.set(id, { ...def });
    }
    this.labelsOn = this.hasLabels;
    this.axesOn = false;
    this.wireframe = false;
    this.emit();
  }

  snapshot(): StateSnapshot {
    const objects: Record<number, ObjectState> = {};
    for (const [id, st] of this.objects) objects[id] = { ...st };
    return {
      objects,
      labelsOn: this.labelsOn,
      axesOn: this.axesOn,
      wireframe: this.wireframe,
    };
  }
}
