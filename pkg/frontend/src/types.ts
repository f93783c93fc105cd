// Shapes of the service's JSON responses.

export interface GraphMetrics {
  node_count: number;
  edge_count: number;
  density: number;
  detected_types: string[];
  timestep_count: number;
  per_timestep_edge_counts: number[];
}

export interface SessionGraph {
  graph_id: string;
  metrics: GraphMetrics;
  description: string;
}

export type Summary = "well_suited" | "medium" | "not_suited";
export type Status = "match" | "no_match" | "mismatch" | "moot";

export interface Assessment {
  gt: Status;
  n: Status;
  d: Status;
  summary: Summary;
  applicable: boolean;
}

export interface ViewEntry {
  id: string;
  if: string;
  then: string;
  vis_type: string;
  unimplemented: boolean;
  assessment: Assessment | null;
}

export interface CategoryNode {
  name: string;
  groups: ViewEntry[][];
  children: CategoryNode[];
}

export interface TaxonomyView {
  perspective: string;
  grouping: string;
  roots: CategoryNode[];
}

export interface StudySource {
  citation: string;
  scholar_url: string;
  study_node_range: [number, number] | null;
  study_density_range: [number, number] | null;
}

export interface GuidelineDetails {
  id: string;
  if: string;
  then: string;
  if_types: string[];
  graph_types: string[];
  decision_path: string[];
  vis_type: string;
  tasks: string[];
  sources: StudySource[];
  mapping: string | null;
  unimplemented: boolean;
}

export interface Violation {
  rule: string;
  guideline_ids: string[];
  message: string;
}

export interface ExampleDescriptor {
  kind: string;
  description: string;
}

export interface NewGuideline {
  id: string;
  if: string;
  then: string;
  if_types: string[];
  graph_types: string[];
  decision_path: string[];
  vis_type: string;
  tasks: string[];
  sources: StudySource[];
  mapping: string | null;
}

export type Perspective = "decision" | "graph_type" | "if_type" | "task";
export type Grouping = "none" | "same_if" | "same_then";

export type RenderResult =
  | { ok: true; svg: string }
  | { ok: false; violations: Violation[]; detail: string };
