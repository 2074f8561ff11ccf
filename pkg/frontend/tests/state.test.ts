import { describe, expect, it, vi } from "vitest";

import { ViewerState } from "../src/state.js";
import { fixtureDoc } from "./fixtures.js";

describe("ViewerState", () => {
  it("starts from the document's opacities, everything visible", () => {
    const state = new ViewerState(fixtureDoc());
    expect(state.get(1)).toEqual({ visible: true, opacity: 1 });
    expect(state.get(2)).toEqual({ visible: true, opacity: 0.6 });
    expect(state.labelsOn).toBe(true);
    expect(state.axesOn).toBe(false);
  });

  it("round-trips: toggling then resetting restores the initial snapshot", () => {
    const state = new ViewerState(fixtureDoc());
    const initial = state.snapshot();
    state.setVisible(1, false);
    state.setOpacity(2, 0.1);
    state.setGlobalOpacity(0.3);
    state.setLabels(false);
    state.setAxes(true);
    state.setWireframe(true);
    expect(state.snapshot()).not.toEqual(initial);
    state.resetDefaults();
    expect(state.snapshot()).toEqual(initial);
  });

  it("clamps opacities", () => {
    const state = new ViewerState(fixtureDoc());
    state.setOpacity(1, 7);
    expect(state.get(1).opacity).toBe(1);
    state.setOpacity(1, -3);
    expect(state.get(1).opacity).toBe(0);
  });

  it("rejects unknown objects", () => {
    const state = new ViewerState(fixtureDoc());
    expect(() => state.setVisible(404, true)).toThrow(/unknown object/);
    expect(() => state.get(404)).toThrow(/unknown object/);
  });

  it("notifies listeners and supports unsubscribe", () => {
    const state = new ViewerState(fixtureDoc());
    const seen = vi.fn();
    const off = state.onChange(seen);
    state.setVisible(1, false);
    state.setAxes(true);
    expect(seen).toHaveBeenCalledTimes(2);
    off();
    state.setVisible(1, true);
    expect(seen).toHaveBeenCalledTimes(2);
  });

  it("labels default off when the document has none", () => {
    const doc = fixtureDoc();
    for (const obj of doc.objects) (obj as { label: null }).label = null;
    const state = new ViewerState(doc);
    expect(state.labelsOn).toBe(false);
  });
});
