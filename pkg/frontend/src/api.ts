// Thin typed client over the service's HTTP contract. All scoring and
// validation happens server-side; this module only moves JSON and SVG.

import type {
  ExampleDescriptor,
  Grouping,
  GuidelineDetails,
  NewGuideline,
  Perspective,
  RenderResult,
  SessionGraph,
  TaxonomyView,
  Violation,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private url(path: string): string {
    return this.baseUrl + path;
  }

  async uploadGraph(data: Blob | ArrayBuffer | string): Promise<SessionGraph> {
    const response = await fetch(this.url("/graphs/upload"), {
      method: "POST",
      body: data,
      headers: { "Content-Type": "application/xml" },
    });
    return asJson<SessionGraph>(response);
  }

  async generateGraph(spec: {
    node_count: number;
    cluster_count: number;
    timestep_count: number;
    directed: boolean;
    seed: number;
  }): Promise<SessionGraph> {
    const response = await fetch(this.url("/graphs/generate"), {
      method: "POST",
      body: JSON.stringify(spec),
      headers: { "Content-Type": "application/json" },
    });
    return asJson<SessionGraph>(response);
  }

  async listExamples(): Promise<ExampleDescriptor[]> {
    return asJson(await fetch(this.url("/graphs/examples")));
  }

  async instantiateExample(kind: string): Promise<SessionGraph> {
    return asJson(await fetch(this.url(`/graphs/examples/${kind}`)));
  }

  async getView(
    perspective: Perspective,
    grouping: Grouping,
    graphId: string | null,
  ): Promise<TaxonomyView> {
    const params = new URLSearchParams({ perspective, grouping });
    if (graphId) params.set("graph", graphId);
    return asJson(await fetch(this.url(`/guidelines?${params}`)));
  }

  async getDetails(id: string): Promise<GuidelineDetails> {
    return asJson(await fetch(this.url(`/guidelines/${id}`)));
  }

  async addGuideline(record: NewGuideline): Promise<{ id: string }> {
    const response = await fetch(this.url("/guidelines"), {
      method: "POST",
      body: JSON.stringify(record),
      headers: { "Content-Type": "application/json" },
    });
    return asJson(response);
  }

  async replaceGuideline(record: NewGuideline): Promise<{ id: string }> {
    const response = await fetch(this.url(`/guidelines/${record.id}`), {
      method: "PUT",
      body: JSON.stringify(record),
      headers: { "Content-Type": "application/json" },
    });
    return asJson(response);
  }

  previewUrl(id: string): string {
    return this.url(`/guidelines/${id}/preview`);
  }

  /** Render returning either SVG text or the violation list (409). */
  async render(
    graphId: string,
    guideline: string,
    combine: string[],
    signal?: AbortSignal,
  ): Promise<RenderResult> {
    const params = new URLSearchParams({ guideline });
    if (combine.length) params.set("combine", combine.join(","));
    const response = await fetch(
      this.url(`/graphs/${graphId}/render?${params}`),
      { signal },
    );
    if (response.ok) {
      return { ok: true, svg: await response.text() };
    }
    if (response.status === 409) {
      const body = (await response.json()) as {
        detail: string;
        violations?: Violation[];
      };
      return { ok: false, violations: body.violations ?? [], detail: body.detail };
    }
    throw new ApiError(response.status, await response.text());
  }
}
