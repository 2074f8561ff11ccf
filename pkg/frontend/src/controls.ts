/** Orbit / zoom / pan camera rig.
 *
 * Spherical orbit around a target point: drag rotates, wheel zooms toward
 * the target, right-drag (or shift-drag) pans in the view plane. The math
 * lives in plain methods so tests can drive it without a pointer.
 */

import * as THREE from "three";

const EPS = 1e-6;

export class OrbitCameraControls {
  readonly target = new THREE.Vector3();
  private radius = 10;
  private theta = Math.PI / 4; // azimuth
  private phi = Math.PI / 3; // polar, 0 = straight up
  private dragging: "orbit" | "pan" | null = null;
  private lastX = 0;
  private lastY = 0;
  private readonly disposers: Array<() => void> = [];

  rotateSpeed = 0.005;
  panSpeed = 0.0015;
  minRadius = 1e-3;
  maxRadius = 1e6;

  constructor(
    private readonly camera: THREE.PerspectiveCamera,
    private readonly dom?: HTMLElement,
  ) {
    if (dom) this.bind(dom);
    this.update();
  }

  /** Frame the camera so the given box fills the view comfortably. */
  frame(min: THREE.Vector3, max: THREE.Vector3): void {
    const center = min.clone().add(max).multiplyScalar(0.5);
    const size = max.clone().sub(min).length();
    this.target.copy(center);
    this.radius = Math.max(size * 1.2, this.minRadius);
    this.camera.near = Math.max(this.radius / 1e4, 1e-6);
    this.camera.far = this.radius * 1e3;
    this.camera.updateProjectionMatrix();
    this.update();
  }

  orbit(dTheta: number, dPhi: number): void {
    this.theta += dTheta;
    this.phi = Math.min(Math.PI - EPS, Math.max(EPS, this.phi + dPhi));
    this.update();
  }

  /** factor > 1 moves away from the target, < 1 moves closer. */
  zoom(factor: number): void {
    this.radius = Math.min(
      this.maxRadius,
      Math.max(this.minRadius, this.radius * factor),
    );
    this.update();
  }

  /** Shift the target in the camera's screen plane. */
  pan(dx: number, dy: number): void {
    const scale = this.radius * this.panSpeed;
    const right = new THREE.Vector3();
    const up = new THREE.Vector3();
    this.camera.updateMatrixWorld();
    right.setFromMatrixColumn(this.camera.matrixWorld, 0);
    up.setFromMatrixColumn(this.camera.matrixWorld, 1);
    this.target.addScaledVector(right, -dx * scale);
    this.target.addScaledVector(up, dy * scale);
    this.update();
  }

  distance(): number {
    return this.radius;
  }

  update(): void {
    const sinPhi = Math.sin(this.phi);
    this.camera.position.set(
      this.target.x + this.radius * sinPhi * Math.cos(this.theta),
      this.target.y + this.radius * sinPhi * Math.sin(this.theta),
      this.target.z + this.radius * Math.cos(this.phi),
    );
    this.camera.up.set(0, 0, 1); // z-up, matching the geometry convention
    this.camera.lookAt(this.target);
  }

  private bind(dom: HTMLElement): void {
    const down = (ev: PointerEvent) => {
      this.dragging = ev.button === 2 || ev.shiftKey ? "pan" : "orbit";
      this.lastX = ev.clientX;
      this.lastY = ev.clientY;
    };
    const move = (ev: PointerEvent) => {
      if (!this.dragging) return;
      const dx = ev.clientX - this.lastX;
      const dy = ev.clientY - this.lastY;
      this.lastX = ev.clientX;
      this.lastY = ev.clientY;
      if (this.dragging === "orbit") {
        this.orbit(-dx * this.rotateSpeed, -dy * this.rotateSpeed);
      } else {
        this.pan(dx, dy);
      }
    };
    const up = () => {
      this.dragging = null;
    };
    const wheel = (ev: WheelEvent) => {
      ev.preventDefault();
      this.zoom(ev.deltaY > 0 ? 1.1 : 1 / 1.1);
    };
    const context = (ev: Event) => ev.preventDefault();

    dom.addEventListener("pointerdown", down);
    dom.addEventListener("pointermove", move);
    dom.addEventListener("pointerup", up);
    dom.addEventListener("pointerleave", up);
    dom.addEventListener("wheel", wheel, { passive: false });
    dom.addEventListener("contextmenu", context);
    this.disposers.push(() => {
      dom.removeEventListener("pointerdown", down);
      dom.removeEventListener("pointermove", move);
      dom.removeEventListener("pointerup", up);
      dom.removeEventListener("pointerleave", up);
      dom.removeEventListener("wheel", wheel);
      dom.removeEventListener("contextmenu", context);
    });
  }

  dispose(): void {
    for (const dispose of this.disposers) dispose();
    this.disposers.length = 0;
  }
}
