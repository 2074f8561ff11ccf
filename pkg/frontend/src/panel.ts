/** Sidebar: scene header, global toggles, the object list, and the
 * click-to-highlight readout. Talks to the rest of the app only through
 * ViewerState and a highlight callback. */

import type { SceneDoc } from "./types.js";
import type { ViewerState } from "./state.js";

export interface HighlightInfo {
  surfaceId: number;
  name: string;
  center: { x: number; y: number; z: number };
}

export interface PanelHooks {
  onHighlightRequest?: (surfaceId: number) => void;
}

export class Panel {
  readonly root: HTMLElement;
  private readonly rows = new Map<
    number,
    { check: HTMLInputElement; slider: HTMLInputElement; row: HTMLLIElement }
  >();
  private readonly info: HTMLDivElement;
  private readonly labelToggle: HTMLInputElement;
  private readonly axesToggle: HTMLInputElement;
  private readonly wireToggle: HTMLInputElement;
  private readonly globalOpacity: HTMLInputElement;

  constructor(
    doc: SceneDoc,
    private readonly state: ViewerState,
    parent: HTMLElement,
    hooks: PanelHooks = {},
  ) {
    const d = parent.ownerDocument;
    this.root = d.createElement("aside");
    this.root.className = "panel";
    parent.appendChild(this.root);

    const title = d.createElement("h1");
    title.textContent = doc.title || "untitled scene";
    this.root.appendChild(title);
    const counts = d.createElement("p");
    counts.className = "counts";
    counts.textContent = `${doc.objects.length} objects`;
    this.root.appendChild(counts);

    const toggles = d.createElement("div");
    toggles.className = "toggles";
    this.root.appendChild(toggles);
    this.labelToggle = this.addToggle(toggles, "labels", state.labelsOn, (on) =>
      state.setLabels(on),
    );
    this.axesToggle = this.addToggle(toggles, "axes", state.axesOn, (on) =>
      state.setAxes(on),
    );
    this.wireToggle = this.addToggle(toggles, "wireframe", state.wireframe,
      (on) => state.setWireframe(on),
    );

    const globalRow = d.createElement("label");
    globalRow.className = "global-opacity";
    globalRow.textContent = "opacity (all)";
    this.globalOpacity = d.createElement("input");
    this.globalOpacity.type = "range";
    this.globalOpacity.min = "0";
    this.globalOpacity.max = "1";
    this.globalOpacity.step = "0.05";
    this.globalOpacity.value = "1";
    this.globalOpacity.addEventListener("input", () => {
      state.setGlobalOpacity(Number(this.globalOpacity.value));
    });
    globalRow.appendChild(this.globalOpacity);
    this.root.appendChild(globalRow);

    const reset = d.createElement("button");
    reset.className = "reset";
    reset.textContent = "reset view state";
    reset.addEventListener("click", () => state.resetDefaults());
    this.root.appendChild(reset);

    const list = d.createElement("ul");
    list.className = "object-list";
    this.root.appendChild(list);
    for (const obj of doc.objects) {
      const row = d.createElement("li");
      row.dataset.surfaceId = String(obj.surfaceId);

      const check = d.createElement("input");
      check.type = "checkbox";
      check.checked = true;
      check.addEventListener("change", () => {
        state.setVisible(obj.surfaceId, check.checked);
      });
      row.appendChild(check);

      const swatch = d.createElement("span");
      swatch.className = "swatch";
      const [r, g, b] = obj.rgb;
      swatch.style.backgroundColor =
        `rgb(${Math.round(r * 255)},${Math.round(g * 255)},${Math.round(b * 255)})`;
      row.appendChild(swatch);

      const name = d.createElement("span");
      name.className = "name";
      name.textContent = `${obj.surfaceId} ${obj.name}`;
      name.addEventListener("click", () => {
        hooks.onHighlightRequest?.(obj.surfaceId);
      });
      row.appendChild(name);

      const slider = d.createElement("input");
      slider.type = "range";
      slider.min = "0";
      slider.max = "1";
      slider.step = "0.05";
      slider.value = String(obj.opacity);
      slider.addEventListener("input", () => {
        state.setOpacity(obj.surfaceId, Number(slider.value));
      });
      row.appendChild(slider);

      list.appendChild(row);
      this.rows.set(obj.surfaceId, { check, slider, row });
    }

    this.info = d.createElement("div");
    this.info.className = "highlight-info";
    this.info.textContent = "click an object to inspect it";
    this.root.appendChild(this.info);

    state.onChange(() => this.sync());
  }

  private addToggle(
    parent: HTMLElement,
    label: string,
    initial: boolean,
    onChange: (on: boolean) => void,
  ): HTMLInputElement {
    const d = parent.ownerDocument;
    const wrap = d.createElement("label");
    const input = d.createElement("input");
    input.type = "checkbox";
    input.checked = initial;
    input.addEventListener("change", () => onChange(input.checked));
    wrap.appendChild(input);
    wrap.appendChild(d.createTextNode(` ${label}`));
    parent.appendChild(wrap);
    return input;
  }

  /** Pull widget values back in line with the state (e.g. after reset). */
  sync(): void {
    for (const [id, widgets] of this.rows) {
      const st = this.state.get(id);
      widgets.check.checked = st.visible;
      widgets.slider.value = String(st.opacity);
    }
    this.labelToggle.checked = this.state.labelsOn;
    this.axesToggle.checked = this.state.axesOn;
    this.wireToggle.checked = this.state.wireframe;
  }

  setHighlight(info: HighlightInfo | null): void {
    for (const { row } of this.rows.values()) row.classList.remove("selected");
    if (!info) {
      this.info.textContent = "click an object to inspect it";
      return;
    }
    this.rows.get(info.surfaceId)?.row.classList.add("selected");
    const { x, y, z } = info.center;
    const fmt = (v: number) => v.toPrecision(5);
    this.info.textContent =
      `surface ${info.surfaceId} "${info.name}" ` +
      `center (${fmt(x)}, ${fmt(y)}, ${fmt(z)})`;
  }
}
