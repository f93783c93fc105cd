// Application wiring: one store, one API client, two views, and the
// feedback loop (any selection change re-renders immediately; in-flight
// render requests are cancelled when the selection moves on).

import { ApiClient } from "./api.js";
import { el } from "./dom.js";
import { buildExplorationView } from "./exploration.js";
import { buildGraphDataView } from "./graphData.js";
import { Store, combineWith, selectMain } from "./state.js";
import type {
  Grouping,
  NewGuideline,
  Perspective,
  SessionGraph,
  TaxonomyView,
  ViewEntry,
} from "./types.js";

const BASE_GUIDELINE = "force-directed-layout";

export interface App {
  store: Store;
  root: HTMLElement;
  refreshOverview(): Promise<void>;
  setGraph(session: SessionGraph): Promise<void>;
  selectGuideline(id: string): Promise<void>;
  combineGuideline(id: string): Promise<void>;
  showDetails(id: string): Promise<void>;
  submitRecord(record: NewGuideline, replace: boolean): Promise<void>;
}

function allEntries(view: TaxonomyView): ViewEntry[] {
  const out: ViewEntry[] = [];
  const walk = (node: TaxonomyView["roots"][number]) => {
    for (const group of node.groups) out.push(...group);
    node.children.forEach(walk);
  };
  view.roots.forEach(walk);
  return out;
}

export function initApp(mount: HTMLElement, api = new ApiClient()): App {
  const store = new Store();
  let currentView: TaxonomyView | null = null;
  let inflight: AbortController | null = null;

  const statements = new Map<string, { text: string; unimplemented: boolean }>();

  const graphData = buildGraphDataView(api, (session) => void app.setGraph(session));
  const exploration = buildExplorationView(api, {
    onSelect: (id) => void app.selectGuideline(id),
    onShowDetails: (id) => void app.showDetails(id),
    onCombine: (id) => void app.combineGuideline(id),
    onSortApplied: (perspective: Perspective, grouping: Grouping) => {
      store.update({ perspective, grouping });
      void app.refreshOverview();
    },
    onSubmitRecord: (record, replace) => void app.submitRecord(record, replace),
  });
  exploration.root.hidden = true;

  const root = el(
    "main.app",
    {},
    el("h1", {}, "Guideline explorer for node-link graphs"),
    graphData.root,
    exploration.root,
  );
  mount.append(root);

  function paintOverview(): void {
    if (!currentView) return;
    const state = store.get();
    exploration.renderOverview(
      currentView, state.selected, state.combined, state.detailsTarget,
    );
  }

  async function renderSelection(): Promise<void> {
    const state = store.get();
    if (!state.graph || !state.selected) return;
    inflight?.abort();
    inflight = new AbortController();
    try {
      const result = await api.render(
        state.graph.graph_id, state.selected, state.combined, inflight.signal,
      );
      if (result.ok) {
        const applied = [state.selected, ...state.combined].map((id) => ({
          id,
          text: statements.get(id)?.text ?? id,
          unimplemented: statements.get(id)?.unimplemented ?? false,
        }));
        exploration.showResult(result.svg, applied);
      } else {
        exploration.showViolations(result.violations, result.detail);
      }
    } catch (exc) {
      if ((exc as Error).name === "AbortError") return;
      throw exc;
    }
  }

  const app: App = {
    store,
    root,

    async refreshOverview() {
      const state = store.get();
      currentView = await api.getView(
        state.perspective, state.grouping, state.graph?.graph_id ?? null,
      );
      statements.clear();
      const ids: string[] = [];
      for (const entry of allEntries(currentView)) {
        ids.push(entry.id);
        statements.set(entry.id, {
          text: `${entry.if}, then: ${entry.then}`,
          unimplemented: entry.unimplemented,
        });
      }
      store.update({ knownIds: [...new Set(ids)] });
      paintOverview();
    },

    async setGraph(session) {
      store.update({ graph: session, selected: null, combined: [] });
      exploration.root.hidden = false;
      let baseSvg: string | null = null;
      const base = await api.render(session.graph_id, BASE_GUIDELINE, []);
      if (base.ok) baseSvg = base.svg;
      graphData.setGraph(session, baseSvg);
      await this.refreshOverview();
    },

    async selectGuideline(id) {
      selectMain(store, id);
      paintOverview();
      await renderSelection();
    },

    async combineGuideline(id) {
      const state = store.get();
      if (!state.selected) return;
      if (id === state.selected) return;
      combineWith(store, id);
      paintOverview();
      await renderSelection();
    },

    async showDetails(id) {
      store.update({ detailsTarget: id });
      const record = await api.getDetails(id);
      const state = store.get();
      exploration.renderDetails(
        record, state.selected !== null && state.selected !== id,
      );
      paintOverview();
    },

    async submitRecord(record, replace) {
      if (replace) {
        await api.replaceGuideline(record);
      } else {
        await api.addGuideline(record);
      }
      await this.refreshOverview();
    },
  };

  return app;
}
