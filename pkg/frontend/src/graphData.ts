// Graph data view: three ways in (generate, example gallery, upload), plus
// the textual description and a base rendering of the active graph.

import type { ApiClient } from "./api.js";
import { el, clear } from "./dom.js";
import type { SessionGraph } from "./types.js";

export interface GraphDataView {
  root: HTMLElement;
  setGraph(session: SessionGraph, baseSvg: string | null): void;
  showError(message: string): void;
}

export function buildGraphDataView(
  api: ApiClient,
  onGraph: (session: SessionGraph) => void,
): GraphDataView {
  const error = el("p.upload-error", { id: "upload-error", hidden: "hidden" });
  const description = el("p.graph-description", { id: "graph-description" });
  const baseRender = el("div.base-render", { id: "base-render" });

  async function guarded(action: () => Promise<SessionGraph>) {
    try {
      error.hidden = true;
      const session = await action();
      onGraph(session);
    } catch (exc) {
      error.hidden = false;
      error.textContent = exc instanceof Error ? exc.message : String(exc);
    }
  }

  const nodesInput = el("input", { id: "gen-nodes", type: "number", value: "30", min: "2" });
  const clustersInput = el("input", { id: "gen-clusters", type: "number", value: "1", min: "1" });
  const slicesInput = el("input", { id: "gen-timesteps", type: "number", value: "1", min: "1" });
  const directedInput = el("input", { id: "gen-directed", type: "checkbox" });
  const seedInput = el("input", { id: "gen-seed", type: "number", value: "42" });
  const generateForm = el(
    "form.generate-form",
    {
      id: "generate-form",
      onsubmit: (event: Event) => {
        event.preventDefault();
        void guarded(() =>
          api.generateGraph({
            node_count: Number(nodesInput.value),
            cluster_count: Number(clustersInput.value),
            timestep_count: Number(slicesInput.value),
            directed: directedInput.checked,
            seed: Number(seedInput.value),
          }),
        );
      },
    },
    el("label", {}, "nodes ", nodesInput),
    el("label", {}, "clusters ", clustersInput),
    el("label", {}, "time slices ", slicesInput),
    el("label", {}, "directed ", directedInput),
    el("label", {}, "seed ", seedInput),
    el("button", { type: "submit" }, "Generate"),
  );

  const gallery = el("div.example-gallery", { id: "example-gallery" });
  void api
    .listExamples()
    .then((examples) => {
      for (const example of examples) {
        gallery.append(
          el(
            "button.example",
            {
              dataset: { kind: example.kind },
              title: example.description,
              onclick: () => void guarded(() => api.instantiateExample(example.kind)),
            },
            example.kind,
          ),
        );
      }
    })
    .catch(() => {
      gallery.append(el("span", {}, "examples unavailable"));
    });

  const fileInput = el("input", {
    id: "upload-input",
    type: "file",
    accept: ".graphml,.xml",
    onchange: () => {
      const file = fileInput.files?.[0];
      if (!file) return;
      void guarded(async () => api.uploadGraph(await file.arrayBuffer()));
    },
  });

  const root = el(
    "section.graph-data-view",
    { id: "graph-data-view" },
    el("h2", {}, "Graph data"),
    el("div.entry", {}, el("h3", {}, "Generate"), generateForm),
    el("div.entry", {}, el("h3", {}, "Examples"), gallery),
    el("div.entry", {}, el("h3", {}, "Upload GraphML"), fileInput, error),
    description,
    baseRender,
  );

  return {
    root,
    setGraph(session, baseSvg) {
      description.textContent = session.description;
      clear(baseRender);
      if (baseSvg) baseRender.innerHTML = baseSvg;
    },
    showError(message) {
      error.hidden = false;
      error.textContent = message;
    },
  };
}
