/** Browser entry point: fetch /scene.json, boot the viewer, or show why not. */

import { loadScene, SceneLoadError } from "./loader.js";
import { ViewerApp } from "./viewer.js";

function errorPanel(parent: HTMLElement, message: string): void {
  const box = parent.ownerDocument.createElement("div");
  box.className = "error-panel";
  const head = parent.ownerDocument.createElement("h2");
  head.textContent = "could not load the scene";
  const body = parent.ownerDocument.createElement("pre");
  body.textContent = message;
  box.append(head, body);
  parent.appendChild(box);
}

export async function boot(root: HTMLElement): Promise<ViewerApp | null> {
  const viewport = root.querySelector<HTMLElement>("#viewport");
  const sidebar = root.querySelector<HTMLElement>("#sidebar");
  if (!viewport || !sidebar) {
    throw new Error("viewer containers missing from the page");
  }
  try {
    const doc = await loadScene("/scene.json");
    return new ViewerApp(doc, viewport, sidebar);
  } catch (err) {
    const message =
      err instanceof SceneLoadError ? err.message : `unexpected: ${String(err)}`;
    errorPanel(viewport, message);
    return null;
  }
}

if (typeof document !== "undefined" && document.getElementById("viewport")) {
  void boot(document.body);
}
