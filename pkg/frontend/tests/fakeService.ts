// fetch stub backed by recorded responses of the real service
// (tests/fixtures.json, regenerated by record_fixtures.py).

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));
export const fixtures = JSON.parse(
  readFileSync(join(here, "fixtures.json"), "utf-8"),
);

export interface RecordedCall {
  method: string;
  path: string;
  params: URLSearchParams;
}

export class FakeService {
  calls: RecordedCall[] = [];

  renderCalls(): RecordedCall[] {
    return this.calls.filter((c) => c.path.endsWith("/render"));
  }

  install(): void {
    globalThis.fetch = ((input: RequestInfo | URL, init?: RequestInit) => {
      const url = new URL(String(input), "http://fake");
      const method = init?.method ?? "GET";
      this.calls.push({ method, path: url.pathname, params: url.searchParams });
      return Promise.resolve(this.route(url, method, init));
    }) as typeof fetch;
  }

  private json(body: unknown, status = 200): Response {
    return new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  }

  private svg(text: string): Response {
    return new Response(text, {
      status: 200,
      headers: { "Content-Type": "image/svg+xml" },
    });
  }

  private route(url: URL, method: string, init?: RequestInit): Response {
    const path = url.pathname;
    if (method === "POST" && path === "/graphs/upload") {
      const body = init?.body;
      const empty =
        body == null ||
        (typeof body === "string" && body.length === 0) ||
        (body instanceof ArrayBuffer && body.byteLength === 0) ||
        (ArrayBuffer.isView(body) && body.byteLength === 0);
      if (empty) {
        return this.json(
          { detail: "malformed XML: no element found (line 1, column 0)",
            error: "GraphmlParseError" },
          400,
        );
      }
      return this.json(fixtures.upload_dense);
    }
    if (method === "GET" && path === "/graphs/examples") {
      return this.json([
        { kind: "directed", description: "d" },
        { kind: "undirected", description: "u" },
        { kind: "dag", description: "a" },
        { kind: "tree", description: "t" },
        { kind: "flow_graph", description: "f" },
        { kind: "trajectory", description: "j" },
      ]);
    }
    if (method === "GET" && path === "/guidelines") {
      if (url.searchParams.get("graph")) return this.json(fixtures.view_dense);
      if (url.searchParams.get("perspective") === "task") {
        return this.json(fixtures.view_no_graph_task);
      }
      return this.json(fixtures.view_no_graph);
    }
    const details = path.match(/^\/guidelines\/([^/]+)$/);
    if (details && method === "GET") {
      const record = fixtures.details[details[1]!];
      return record ? this.json(record) : this.json({ detail: "unknown id" }, 404);
    }
    if (path.match(/^\/guidelines\/[^/]+\/preview$/)) {
      return this.svg("<svg xmlns='http://www.w3.org/2000/svg'/>");
    }
    const render = path.match(/^\/graphs\/([^/]+)\/render$/);
    if (render && method === "GET") {
      const guideline = url.searchParams.get("guideline")!;
      const combine = (url.searchParams.get("combine") ?? "").split(",").filter(Boolean);
      if (combine.length > 0) {
        // the recorded conflict: partially-drawn + tapered share a category
        return this.json(fixtures.render_conflict, 409);
      }
      const svg = fixtures.render[guideline];
      if (svg) return this.svg(svg);
      return this.json(
        { detail: "combination rejected",
          violations: [{ rule: "R4", guideline_ids: [guideline],
                         message: `${guideline} is not applicable to this graph` }] },
        409,
      );
    }
    if (method === "GET" && path === "/analytics") {
      return this.json(fixtures.analytics);
    }
    return this.json({ detail: `unhandled ${method} ${path}` }, 500);
  }
}
