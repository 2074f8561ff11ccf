/** Application wiring: scene graph + state + panel + camera + labels.
 *
 * The WebGL renderer is injected so the whole app (minus actual pixels) can
 * run under jsdom; the browser entry point passes the real one.
 */

import * as THREE from "three";

import { OrbitCameraControls } from "./controls.js";
import { LabelOverlay } from "./labels.js";
import { Panel, type HighlightInfo } from "./panel.js";
import {
  applyObjectState,
  buildSceneGraph,
  meshCenter,
  type SceneGraph,
} from "./scene-builder.js";
import { ViewerState } from "./state.js";
import type { SceneDoc } from "./types.js";

export interface RendererLike {
  domElement: HTMLCanvasElement | HTMLElement;
  setSize(width: number, height: number): void;
  render(scene: THREE.Object3D, camera: THREE.Camera): void;
  dispose?(): void;
}

export interface ViewerOptions {
  createRenderer?: (width: number, height: number) => RendererLike;
  autoStart?: boolean;
}

function defaultRenderer(width: number, height: number): RendererLike {
  const renderer = new THREE.WebGLRenderer({ antialias: true });
  renderer.setSize(width, height);
  renderer.setPixelRatio(window.devicePixelRatio ?? 1);
  return renderer;
}

export class ViewerApp {
  readonly scene = new THREE.Scene();
  readonly camera: THREE.PerspectiveCamera;
  readonly state: ViewerState;
  readonly graph: SceneGraph;
  readonly controls: OrbitCameraControls;
  readonly panel: Panel;
  readonly labels: LabelOverlay;
  readonly renderer: RendererLike;
  highlighted: HighlightInfo | null = null;
  private raf = 0;

  constructor(
    readonly doc: SceneDoc,
    readonly viewport: HTMLElement,
    panelParent: HTMLElement,
    options: ViewerOptions = {},
  ) {
    const width = viewport.clientWidth || 800;
    const height = viewport.clientHeight || 600;

    this.state = new ViewerState(doc);
    this.graph = buildSceneGraph(doc);
    this.scene.add(this.graph.group);
    this.scene.background = new THREE.Color(0x10141a);

    const ambient = new THREE.AmbientLight(0xffffff, 0.55);
    const key = new THREE.DirectionalLight(0xffffff, 1.4);
    key.position.set(1, 0.6, 1.8);
    const fill = new THREE.DirectionalLight(0xffffff, 0.5);
    fill.position.set(-1.2, -0.8, -0.5);
    this.scene.add(ambient, key, fill);

    this.camera = new THREE.PerspectiveCamera(50, width / height, 0.01, 1e6);
    this.controls = new OrbitCameraControls(this.camera, viewport);
    this.controls.frame(this.graph.bboxMin, this.graph.bboxMax);

    this.renderer = (options.createRenderer ?? defaultRenderer)(width, height);
    viewport.appendChild(this.renderer.domElement);

    this.labels = new LabelOverlay(doc, viewport);
    this.panel = new Panel(doc, this.state, panelParent, {
      onHighlightRequest: (id) => this.highlightById(id),
    });

    this.state.onChange(() => this.applyState());
    this.applyState();

    this.renderer.domElement.addEventListener("click", (ev) => {
      this.pick(ev as MouseEvent);
    });

    if (options.autoStart !== false && typeof requestAnimationFrame === "function") {
      const loop = () => {
        this.renderOnce();
        this.raf = requestAnimationFrame(loop);
      };
      this.raf = requestAnimationFrame(loop);
    }
  }

  /** Push every piece of UI state into the three.js graph. */
  applyState(): void {
    for (const id of this.state.ids()) {
      applyObjectState(this.graph, id, this.state.get(id), this.state.wireframe);
    }
    this.graph.axes.visible = this.state.axesOn;
    this.labels.setVisible(this.state.labelsOn);
  }

  renderOnce(): void {
    this.controls.update();
    this.renderer.render(this.scene, this.camera);
    const width = this.viewport.clientWidth || 800;
    const height = this.viewport.clientHeight || 600;
    this.labels.update(this.camera, width, height, (id) =>
      this.state.get(id).visible,
    );
  }

  /** Raycast a pointer event against visible objects. */
  pick(ev: MouseEvent): HighlightInfo | null {
    const el = this.renderer.domElement as HTMLElement;
    const rect = el.getBoundingClientRect();
    const width = rect.width || this.viewport.clientWidth || 800;
    const height = rect.height || this.viewport.clientHeight || 600;
    const ndc = new THREE.Vector2(
      ((ev.clientX - rect.left) / width) * 2 - 1,
      -((ev.clientY - rect.top) / height) * 2 + 1,
    );
    return this.pickNdc(ndc.x, ndc.y);
  }

  /** Pick in normalized device coordinates (test-friendly entry point). */
  pickNdc(x: number, y: number): HighlightInfo | null {
    const raycaster = new THREE.Raycaster();
    raycaster.setFromCamera(new THREE.Vector2(x, y), this.camera);
    const visibles = [...this.graph.meshes.values()].filter((m) => m.visible);
    const hits = raycaster.intersectObjects(visibles, false);
    const first = hits[0];
    if (!first) {
      this.setHighlight(null);
      return null;
    }
    const mesh = first.object as THREE.Mesh;
    return this.highlightById(mesh.userData.surfaceId as number);
  }

  highlightById(surfaceId: number): HighlightInfo | null {
    const mesh = this.graph.meshes.get(surfaceId);
    if (!mesh) return null;
    const obj = this.doc.objects.find((o) => o.surfaceId === surfaceId);
    const center = obj?.label
      ? new THREE.Vector3(obj.label.anchor.x, obj.label.anchor.y, obj.label.anchor.z)
      : meshCenter(mesh);
    const info: HighlightInfo = {
      surfaceId,
      name: mesh.name,
      center: { x: center.x, y: center.y, z: center.z },
    };
    this.setHighlight(info);
    return info;
  }

  private setHighlight(info: HighlightInfo | null): void {
    this.highlighted = info;
    this.panel.setHighlight(info);
  }

  dispose(): void {
    if (this.raf && typeof cancelAnimationFrame === "function") {
      cancelAnimationFrame(this.raf);
    }
    this.controls.dispose();
    this.labels.dispose();
    this.renderer.dispose?.();
  }
}
