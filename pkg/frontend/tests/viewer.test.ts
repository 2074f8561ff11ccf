// @vitest-environment jsdom
import * as THREE from "three";
import { beforeEach, describe, expect, it } from "vitest";

import { buildSceneGraph } from "../src/scene-builder.js";
import { ViewerApp, type RendererLike } from "../src/viewer.js";
import { fixtureDoc } from "./fixtures.js";

class StubRenderer implements RendererLike {
  domElement = document.createElement("canvas");
  renders = 0;
  setSize(): void {}
  render(): void {
    this.renders += 1;
  }
}

function makeApp() {
  const viewport = document.createElement("div");
  const sidebar = document.createElement("div");
  document.body.append(viewport, sidebar);
  const renderer = new StubRenderer();
  const app = new ViewerApp(fixtureDoc(), viewport, sidebar, {
    createRenderer: () => renderer,
    autoStart: false,
  });
  return { app, viewport, sidebar, renderer };
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("buildSceneGraph", () => {
  it("builds one mesh per object with normals and ids", () => {
    const graph = buildSceneGraph(fixtureDoc());
    expect(graph.meshes.size).toBe(3);
    const mesh = graph.meshes.get(1)!;
    expect(mesh.userData.surfaceId).toBe(1);
    expect(mesh.geometry.getAttribute("position").count).toBe(8);
    expect(mesh.geometry.getAttribute("normal")).toBeDefined();
    expect(mesh.geometry.index!.count).toBe(36);
  });

  it("translucent objects get transparent materials", () => {
    const graph = buildSceneGraph(fixtureDoc());
    const material = graph.meshes.get(2)!.material as THREE.MeshStandardMaterial;
    expect(material.transparent).toBe(true);
    expect(material.opacity).toBeCloseTo(0.6);
  });
});

describe("ViewerApp", () => {
  it("lists every object and renders through the injected backend", () => {
    const { app, sidebar, renderer } = makeApp();
    expect(sidebar.querySelectorAll("ul.object-list li")).toHaveLength(3);
    app.renderOnce();
    expect(renderer.renders).toBe(1);
  });

  it("visibility checkbox drives the three.js mesh", () => {
    const { app, sidebar } = makeApp();
    const firstRow = sidebar.querySelector("ul.object-list li")!;
    const checkbox = firstRow.querySelector(
      "input[type=checkbox]",
    ) as HTMLInputElement;
    checkbox.checked = false;
    checkbox.dispatchEvent(new Event("change"));
    expect(app.graph.meshes.get(1)!.visible).toBe(false);
    checkbox.checked = true;
    checkbox.dispatchEvent(new Event("change"));
    expect(app.graph.meshes.get(1)!.visible).toBe(true);
  });

  it("restoring defaults reproduces the initial render state", () => {
    const { app, sidebar } = makeApp();
    const initial = app.state.snapshot();
    const initialOpacity = (
      app.graph.meshes.get(2)!.material as THREE.MeshStandardMaterial
    ).opacity;

    app.state.setGlobalOpacity(0.25);
    app.state.setVisible(5, false);
    app.state.setWireframe(true);
    const reset = sidebar.querySelector("button.reset") as HTMLButtonElement;
    reset.click();

    expect(app.state.snapshot()).toEqual(initial);
    const material = app.graph.meshes.get(2)!.material as THREE.MeshStandardMaterial;
    expect(material.opacity).toBe(initialOpacity);
    expect(material.wireframe).toBe(false);
    expect(app.graph.meshes.get(5)!.visible).toBe(true);
  });

  it("label toggle hides the overlay; axes toggle shows the helper", () => {
    const { app } = makeApp();
    expect(app.labels.entries).toHaveLength(2);
    expect(app.labels.container.style.display).toBe("");
    app.state.setLabels(false);
    expect(app.labels.container.style.display).toBe("none");
    expect(app.graph.axes.visible).toBe(false);
    app.state.setAxes(true);
    expect(app.graph.axes.visible).toBe(true);
  });

  it("click picking reports the frontmost object with its center", () => {
    const { app } = makeApp();
    // aim straight at the left cube's center (nothing obstructs that ray)
    const ndc = new THREE.Vector3(-2, 0, 0).project(app.camera);
    const info = app.pickNdc(ndc.x, ndc.y);
    expect(info).not.toBeNull();
    expect(info!.surfaceId).toBe(1);
    expect(info!.name).toBe("left cube");
    expect(info!.center.x).toBeCloseTo(-2, 6);
    expect(app.panel.root.querySelector(".highlight-info")!.textContent)
      .toContain("surface 1");
  });

  it("picking skips hidden objects", () => {
    const { app } = makeApp();
    const ndc = new THREE.Vector3(-2, 0, 0).project(app.camera);
    app.state.setVisible(1, false);
    const info = app.pickNdc(ndc.x, ndc.y);
    // the left cube is hidden; that ray now hits nothing else
    expect(info).toBeNull();
    expect(app.highlighted).toBeNull();
  });

  it("labels project into the viewport and follow visibility", () => {
    const { app } = makeApp();
    app.renderOnce();
    const shown = app.labels.entries.filter(
      (e) => e.element.style.display !== "none",
    );
    expect(shown.length).toBeGreaterThan(0);
    app.state.setVisible(1, false);
    app.renderOnce();
    const left = app.labels.entries.find((e) => e.surfaceId === 1)!;
    expect(left.element.style.display).toBe("none");
  });

  it("orbit, zoom and pan are wired to the camera rig", () => {
    const { app } = makeApp();
    const before = app.camera.position.clone();
    app.controls.orbit(0.5, 0.1);
    expect(app.camera.position.distanceTo(before)).toBeGreaterThan(0.01);
    const d = app.controls.distance();
    app.controls.zoom(2);
    expect(app.controls.distance()).toBeCloseTo(d * 2, 9);
    app.controls.pan(30, 10);
    expect(app.controls.target.length()).toBeGreaterThan(0);
  });
});
