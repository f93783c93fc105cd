// Central UI state. Invariants:
//   - combined nonempty implies a selected main guideline
//   - detailsTarget is cleared whenever its id disappears from view
// Both are enforced in update(), not at call sites.

import type { Grouping, Perspective, SessionGraph } from "./types.js";

export interface UiState {
  graph: SessionGraph | null;
  perspective: Perspective;
  grouping: Grouping;
  selected: string | null;
  combined: string[];
  detailsTarget: string | null;
  knownIds: string[];
}

export const initialState: UiState = {
  graph: null,
  perspective: "decision",
  grouping: "none",
  selected: null,
  combined: [],
  detailsTarget: null,
  knownIds: [],
};

export type Listener = (state: UiState) => void;

export class Store {
  private state: UiState;
  private listeners: Listener[] = [];

  constructor(state: UiState = initialState) {
    this.state = { ...state };
  }

  get(): UiState {
    return this.state;
  }

  update(patch: Partial<UiState>): UiState {
    const next: UiState = { ...this.state, ...patch };
    if (!next.selected) {
      next.combined = [];
    }
    next.combined = [...new Set(next.combined)].filter((id) => id !== next.selected);
    if (next.detailsTarget && next.knownIds.length > 0 &&
        !next.knownIds.includes(next.detailsTarget)) {
      next.detailsTarget = null;
    }
    this.state = next;
    for (const listener of this.listeners) listener(next);
    return next;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }
}

export function selectMain(store: Store, id: string): UiState {
  // picking a new main guideline resets the combination
  return store.update({ selected: id, combined: [] });
}

export function combineWith(store: Store, id: string): UiState {
  const { selected, combined } = store.get();
  if (!selected) {
    throw new Error("select a main guideline before combining");
  }
  if (id === selected || combined.includes(id)) {
    return store.get();
  }
  return store.update({ combined: [...combined, id] });
}

export function removeCombined(store: Store, id: string): UiState {
  return store.update({ combined: store.get().combined.filter((c) => c !== id) });
}
