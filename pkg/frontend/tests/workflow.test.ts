// Scripted walkthrough: upload the dense graph, apply the tapered-edge
// guideline (medium: density chip yellow), look at the cluttered result,
// loop back, apply partially-drawn (all criteria green), and check chip
// colors, gray-out behavior, and the result banner at every step.

import { beforeEach, describe, expect, it } from "vitest";

import { initApp, type App } from "../src/app.js";
import { ApiClient } from "../src/api.js";
import { FakeService, fixtures } from "./fakeService.js";

let service: FakeService;
let app: App;

async function until(check: () => boolean, what = "condition"): Promise<void> {
  const deadline = Date.now() + 2000;
  while (Date.now() < deadline) {
    if (check()) return;
    await new Promise((resolve) => setTimeout(resolve, 5));
  }
  throw new Error(`timed out waiting for ${what}`);
}

function cell(id: string): HTMLElement {
  const node = document.querySelector<HTMLElement>(
    `.guideline-cell[data-id="${id}"]`,
  );
  if (!node) throw new Error(`no cell for ${id}`);
  return node;
}

function bannerTexts(): string[] {
  return [...document.querySelectorAll(".applied-statement")].map(
    (node) => node.textContent ?? "",
  );
}

beforeEach(() => {
  document.body.innerHTML = "";
  service = new FakeService();
  service.install();
  app = initApp(document.body, new ApiClient());
});

async function uploadDenseGraph(): Promise<void> {
  const input = document.querySelector<HTMLInputElement>("#upload-input")!;
  const file = new File([new TextEncoder().encode("<graphml/>")], "dense.graphml");
  Object.defineProperty(input, "files", { value: [file], configurable: true });
  input.dispatchEvent(new Event("change", { bubbles: true }));
  await until(
    () => document.querySelectorAll(".guideline-cell").length > 0,
    "overview cells after upload",
  );
}

describe("dense-graph walkthrough", () => {
  it("runs the full narrative", async () => {
    // -- upload ----------------------------------------------------------
    await uploadDenseGraph();
    const description = document.querySelector("#graph-description")!;
    expect(description.textContent).toContain("50 nodes");
    expect(description.textContent).toContain("248 edges");
    // base rendering of the chosen graph appears
    await until(
      () => document.querySelector("#base-render svg") !== null,
      "base render",
    );

    // -- chips derived solely from the service ---------------------------
    const tapered = cell("tapered-edges");
    expect(tapered.querySelector(".icon-medium")).not.toBeNull();
    expect(tapered.querySelector(".chip-gt.chip-match")).not.toBeNull();
    expect(tapered.querySelector(".chip-n.chip-match")).not.toBeNull();
    expect(tapered.querySelector(".chip-d.chip-no_match")).not.toBeNull(); // yellow #D

    const partially = cell("partially-drawn-edges");
    expect(partially.querySelector(".icon-well_suited")).not.toBeNull();
    expect(partially.querySelectorAll(".chip-match")).toHaveLength(3);

    const curved = cell("curved-edges");
    expect(curved.classList.contains("grayed")).toBe(true);
    expect(curved.querySelector(".chip-gt.chip-mismatch")).not.toBeNull();
    expect(curved.querySelector(".chip-n.chip-moot")).not.toBeNull();

    // -- apply tapered (the designer tries it although #D is yellow) -----
    const rendersBefore = service.renderCalls().length;
    tapered.click();
    await until(
      () => document.querySelector("#result-svg svg") !== null,
      "tapered render result",
    );
    expect(service.renderCalls().at(-1)!.params.get("guideline")).toBe("tapered-edges");
    expect(cell("tapered-edges").classList.contains("applied")).toBe(true);
    expect(bannerTexts().join(" ")).toContain("tapered stroke");
    // the cluttered result is on screen (tapered polygons present)
    expect(document.querySelector("#result-svg svg")!.innerHTML).toContain("polygon");

    // -- grayed cells never fire a request -------------------------------
    const callsBeforeGrayedClick = service.renderCalls().length;
    cell("curved-edges").click();
    await new Promise((resolve) => setTimeout(resolve, 30));
    expect(service.renderCalls().length).toBe(callsBeforeGrayedClick);
    expect(cell("curved-edges").classList.contains("applied")).toBe(false);

    // -- loop back: apply partially-drawn instead ------------------------
    cell("partially-drawn-edges").click();
    await until(
      () =>
        service.renderCalls().at(-1)?.params.get("guideline") ===
        "partially-drawn-edges",
      "partially-drawn render request",
    );
    await until(
      () => bannerTexts().join(" ").includes("stub of each edge"),
      "banner text swap",
    );
    expect(cell("partially-drawn-edges").classList.contains("applied")).toBe(true);
    expect(cell("tapered-edges").classList.contains("applied")).toBe(false);
    expect(service.renderCalls().length).toBeGreaterThan(rendersBefore);
  });

  it("shows the violation list when a combination is refused", async () => {
    await uploadDenseGraph();
    cell("partially-drawn-edges").click();
    await until(
      () => document.querySelector("#result-svg svg") !== null,
      "main render",
    );
    // open details of tapered-edges, combine it with the selected main
    cell("tapered-edges")
      .querySelector<HTMLButtonElement>(".details-btn")!
      .click();
    await until(
      () => document.querySelector("#combine-btn") !== null,
      "details panel",
    );
    const combineBtn = document.querySelector<HTMLButtonElement>("#combine-btn")!;
    expect(combineBtn.disabled).toBe(false);
    combineBtn.click();
    await until(
      () => document.querySelectorAll("#violations .violation").length > 0,
      "violation list",
    );
    const violation = document.querySelector<HTMLElement>("#violations .violation")!;
    expect(violation.dataset.rule).toBe("R2");
    expect(violation.textContent).toContain("same decision category");
  });

  it("details view shows sources, ranges, and scholar links", async () => {
    await uploadDenseGraph();
    cell("tapered-edges").querySelector<HTMLButtonElement>(".details-btn")!.click();
    await until(() => document.querySelector(".details-content") !== null, "details");
    const content = document.querySelector(".details-content")!;
    expect(content.textContent).toContain("edges / directed");
    const link = content.querySelector<HTMLAnchorElement>(".source a")!;
    expect(link.href).toContain("scholar.google.com");
    expect(content.textContent).toContain("50–50 nodes");
    expect(content.textContent).toContain("density 0.02–0.08");
  });

  it("sort popup previews another perspective and keeps decision reachable", async () => {
    await uploadDenseGraph();
    document.querySelector<HTMLButtonElement>("#sort-btn")!.click();
    await until(
      () => document.querySelectorAll("#sort-preview .preview-entry").length > 0,
      "initial sort preview",
    );
    // switch the perspective radio to task: the preview restructures
    const taskRadio = document.querySelector<HTMLInputElement>(
      '#sort-popup input[name="perspective"][value="task"]',
    )!;
    taskRadio.checked = true;
    taskRadio.dispatchEvent(new Event("change", { bubbles: true }));
    await until(() => {
      const names = [...document.querySelectorAll("#sort-preview strong")].map(
        (n) => n.textContent,
      );
      return names.includes("topology");
    }, "task-perspective preview");
    // the foundational perspective stays reachable
    expect(
      document.querySelector('#sort-popup input[name="perspective"][value="decision"]'),
    ).not.toBeNull();
    document.querySelector<HTMLButtonElement>("#sort-apply")!.click();
    expect(app.store.get().perspective).toBe("task");
  });

  it("unimplemented additions would badge their cells", async () => {
    await uploadDenseGraph();
    // all seeded guidelines are implemented: no badges in the overview
    expect(document.querySelectorAll(".badge-unimplemented")).toHaveLength(0);
  });

  it("surfaces the parser detail on a failed upload and keeps state", async () => {
    const input = document.querySelector<HTMLInputElement>("#upload-input")!;
    const file = new File([new ArrayBuffer(0)], "empty.graphml");
    Object.defineProperty(input, "files", { value: [file], configurable: true });
    input.dispatchEvent(new Event("change", { bubbles: true }));
    await until(() => {
      const error = document.querySelector<HTMLElement>("#upload-error");
      return error !== null && !error.hidden && (error.textContent ?? "").length > 0;
    }, "upload error");
    expect(document.querySelector("#upload-error")!.textContent).toContain(
      "malformed XML",
    );
    // state unchanged: no graph, exploration view still hidden
    expect(app.store.get().graph).toBeNull();
    expect(
      document.querySelector<HTMLElement>("#exploration-view")!.hidden,
    ).toBe(true);
  });
});
