// Guideline exploration view: the overview list (suitability icon, GT/#N/#D
// chips, short statement, thumbnail, details trigger), the details panel
// with combine/edit, the sort popup with live preview, the add form, and
// the result panel. All colors/gray-out derive from service assessments.

import type { ApiClient } from "./api.js";
import { el, clear } from "./dom.js";
import type {
  Assessment,
  CategoryNode,
  GuidelineDetails,
  Grouping,
  NewGuideline,
  Perspective,
  TaxonomyView,
  ViewEntry,
  Violation,
} from "./types.js";

export interface ExplorationActions {
  onSelect(id: string): void;
  onShowDetails(id: string): void;
  onCombine(id: string): void;
  onSortApplied(perspective: Perspective, grouping: Grouping): void;
  onSubmitRecord(record: NewGuideline, replace: boolean): void;
}

export interface ExplorationView {
  root: HTMLElement;
  renderOverview(view: TaxonomyView, selected: string | null, combined: string[],
                 detailsTarget: string | null): void;
  renderDetails(details: GuidelineDetails | null, canCombine: boolean): void;
  showResult(svg: string, statements: { id: string; text: string; unimplemented: boolean }[]): void;
  showViolations(violations: Violation[], detail: string): void;
  openSortPopup(): void;
  openRecordForm(prefill: GuidelineDetails | null): void;
}

const IF_TYPES = ["graph_type", "answer_characteristic", "graph_property",
                  "wanted_detail", "task", "interaction"];
const GRAPH_TYPES = ["undirected", "directed", "dag", "tree", "flow_graph", "trajectory"];
const DECISION_PATHS = [
  "layout", "nodes", "edges/directed", "edges/undirected",
  "additional_information/group", "additional_information/multivariate",
  "readability", "dynamic_graphs",
];

function chips(assessment: Assessment | null): HTMLElement {
  const holder = el("span.chips");
  if (!assessment) return holder;
  holder.append(
    el("span", { class: `chip chip-gt chip-${assessment.gt}` }, "GT"),
    el("span", { class: `chip chip-n chip-${assessment.n}` }, "#N"),
    el("span", { class: `chip chip-d chip-${assessment.d}` }, "#D"),
  );
  return holder;
}

export function buildExplorationView(
  api: ApiClient,
  actions: ExplorationActions,
): ExplorationView {
  const overview = el("div.overview", { id: "overview" });
  const details = el("div.details", { id: "details" });
  const banner = el("div.result-banner", { id: "result-banner" });
  const violationsBox = el("ul.violations", { id: "violations" });
  const svgBox = el("div.result-svg", { id: "result-svg" });
  const popover = el("div.popover", { id: "popover", hidden: "hidden" });

  // ---------------------------------------------------------------- overview

  function entryCell(entry: ViewEntry, selected: string | null, combined: string[],
                     detailsTarget: string | null): HTMLElement {
    const assessment = entry.assessment;
    const grayed = assessment !== null && !assessment.applicable;
    const cellClasses = [
      "guideline-cell",
      assessment ? `suit-${assessment.summary}` : "suit-unknown",
    ];
    if (grayed) cellClasses.push("grayed");
    if (entry.id === selected) cellClasses.push("applied");
    if (combined.includes(entry.id)) cellClasses.push("combined");

    const statement = el(
      "span.statement",
      {},
      `${entry.if}, then: ${entry.then}`,
    );
    const cell = el(
      "div",
      {
        class: cellClasses.join(" "),
        dataset: { id: entry.id },
        onclick: () => {
          if (grayed) return; // not applicable: no request is ever fired
          actions.onSelect(entry.id);
        },
      },
      el("span", { class: assessment ? `icon icon-${assessment.summary}` : "icon" }),
      chips(assessment),
      statement,
      entry.unimplemented ? el("span.badge-unimplemented", {}, "unimplemented") : null,
      el("img.thumb", { src: api.previewUrl(entry.id), alt: "", loading: "lazy" }),
      el(
        "button.details-btn",
        {
          class: `details-btn${entry.id === detailsTarget ? " active" : ""}`,
          title: "details",
          onclick: (event: Event) => {
            event.stopPropagation();
            actions.onShowDetails(entry.id);
          },
        },
        "\u{1F50D}",
      ),
    );
    return cell;
  }

  function categoryBlock(node: CategoryNode, selected: string | null,
                         combined: string[], detailsTarget: string | null): HTMLElement {
    const block = el("div.category", { dataset: { category: node.name } },
                     el("h4", {}, node.name.replaceAll("_", " ")));
    for (const group of node.groups) {
      const holder = group.length > 1 ? el("div.statement-group") : block;
      for (const entry of group) {
        holder.append(entryCell(entry, selected, combined, detailsTarget));
      }
      if (holder !== block) block.append(holder);
    }
    for (const child of node.children) {
      block.append(categoryBlock(child, selected, combined, detailsTarget));
    }
    return block;
  }

  // ----------------------------------------------------------------- details

  function sourceRow(source: GuidelineDetails["sources"][number]): HTMLElement {
    const nodes = source.study_node_range
      ? `${source.study_node_range[0]}–${source.study_node_range[1]} nodes`
      : "node counts unknown";
    const density = source.study_density_range
      ? `density ${source.study_density_range[0]}–${source.study_density_range[1]}`
      : "density unknown";
    return el(
      "li.source",
      {},
      el("a", { href: source.scholar_url, target: "_blank", rel: "noopener" },
         source.citation),
      ` (${nodes}, ${density})`,
    );
  }

  function detailsContent(record: GuidelineDetails, canCombine: boolean): HTMLElement {
    return el(
      "div.details-content",
      {},
      el("h3", {}, record.id),
      el("p.details-statement", {}, `${record.if}, then: ${record.then}`),
      el("p", {}, `decision: ${record.decision_path.join(" / ")} | graph types: ${record.graph_types.join(", ")} | ${record.vis_type}`),
      el("p", {}, `studied with tasks: ${record.tasks.join(", ")}`),
      el("ul.sources", {}, ...record.sources.map(sourceRow)),
      el(
        "div.details-actions",
        {},
        el(
          "button",
          {
            id: "combine-btn",
            disabled: canCombine ? null : "disabled",
            onclick: () => actions.onCombine(record.id),
          },
          "Combine with selection",
        ),
        el(
          "button",
          { id: "edit-btn", onclick: () => view.openRecordForm(record) },
          "Edit (replace record)",
        ),
      ),
    );
  }

  // -------------------------------------------------------------- sort popup

  const sortPopup = el("div.sort-popup", { id: "sort-popup", hidden: "hidden" });

  function buildSortPopup(): void {
    clear(sortPopup);
    let perspective: Perspective = "decision";
    let grouping: Grouping = "none";
    const preview = el("div.sort-preview", { id: "sort-preview" });

    async function refreshPreview() {
      const tree = await api.getView(perspective, grouping, null);
      clear(preview);
      for (const root of tree.roots) {
        preview.append(previewNode(root));
      }
    }

    function previewNode(node: CategoryNode): HTMLElement {
      const block = el("div.preview-category", {},
                       el("strong", {}, node.name.replaceAll("_", " ")));
      for (const group of node.groups) {
        for (const entry of group) {
          block.append(
            el(
              "div.preview-entry",
              { dataset: { id: entry.id } },
              el("span", {}, entry.id),
              el(
                "button.preview-details",
                {
                  title: "details",
                  onclick: async () => {
                    const record = await api.getDetails(entry.id);
                    clear(popover);
                    popover.hidden = false;
                    popover.append(
                      el("button.close", { onclick: () => (popover.hidden = true) }, "x"),
                      detailsContent(record, false),
                    );
                  },
                },
                "\u{1F50D}",
              ),
            ),
          );
        }
      }
      for (const child of node.children) block.append(previewNode(child));
      return block;
    }

    const radios = (name: string, values: string[], set: (v: string) => void) =>
      el(
        "div.radio-row",
        {},
        ...values.map((value) =>
          el(
            "label",
            {},
            el("input", {
              type: "radio",
              name,
              value,
              checked: value === (name === "perspective" ? perspective : grouping) ? "checked" : null,
              onchange: () => {
                set(value);
                void refreshPreview();
              },
            }),
            value.replaceAll("_", " "),
          ),
        ),
      );

    sortPopup.append(
      el("h3", {}, "Sort guidelines"),
      radios("perspective", ["decision", "graph_type", "if_type", "task"],
             (v) => (perspective = v as Perspective)),
      radios("grouping", ["none", "same_if", "same_then"],
             (v) => (grouping = v as Grouping)),
      preview,
      el(
        "div.popup-actions",
        {},
        el("button", {
          id: "sort-apply",
          onclick: () => {
            sortPopup.hidden = true;
            actions.onSortApplied(perspective, grouping);
          },
        }, "Apply"),
        el("button", { onclick: () => (sortPopup.hidden = true) }, "Cancel"),
      ),
    );
    void refreshPreview();
  }

  // --------------------------------------------------------------- add form

  const recordForm = el("div.record-form", { id: "record-form", hidden: "hidden" });

  function buildRecordForm(prefill: GuidelineDetails | null): void {
    clear(recordForm);
    const replace = prefill !== null;
    const idInput = el("input", { id: "rec-id", value: prefill?.id ?? "" });
    if (replace) idInput.setAttribute("readonly", "readonly");
    const ifInput = el("input", { id: "rec-if", value: prefill?.if ?? "" });
    const thenInput = el("input", { id: "rec-then", value: prefill?.then ?? "" });
    const tasksInput = el("input", {
      id: "rec-tasks",
      value: prefill?.tasks.join(", ") ?? "overview",
    });
    const pathSelect = el("select", { id: "rec-path" });
    for (const path of DECISION_PATHS) {
      pathSelect.append(el("option", {
        value: path,
        selected: prefill && path === prefill.decision_path.join("/") ? "selected" : null,
      }, path));
    }
    const checkboxes = (name: string, values: string[], chosen: string[]) =>
      el(
        "div.checkbox-row",
        { dataset: { group: name } },
        ...values.map((value) =>
          el(
            "label",
            {},
            el("input", {
              type: "checkbox",
              name,
              value,
              checked: chosen.includes(value) ? "checked" : null,
            }),
            value,
          ),
        ),
      );
    const ifTypes = checkboxes("if_types", IF_TYPES, prefill?.if_types ?? ["wanted_detail"]);
    const graphTypes = checkboxes("graph_types", GRAPH_TYPES,
                                  prefill?.graph_types ?? ["undirected", "directed"]);
    const visSelect = el("select", { id: "rec-vis" },
                         el("option", { value: "node_link" }, "node_link"),
                         el("option", {
                           value: "matrix",
                           selected: prefill?.vis_type === "matrix" ? "selected" : null,
                         }, "matrix"));
    const checked = (group: HTMLElement) =>
      [...group.querySelectorAll<HTMLInputElement>("input:checked")].map((i) => i.value);

    recordForm.append(
      el("h3", {}, replace ? `Edit ${prefill.id}` : "Add guideline"),
      el("label", {}, "id ", idInput),
      el("label", {}, "if ", ifInput),
      el("label", {}, "then ", thenInput),
      el("label", {}, "if-types ", ifTypes),
      el("label", {}, "graph types ", graphTypes),
      el("label", {}, "decision ", pathSelect),
      el("label", {}, "vis type ", visSelect),
      el("label", {}, "tasks ", tasksInput),
      el("p.form-note", {},
         "New guidelines start as stubs: they render the graph unchanged until a mapping is implemented."),
      el(
        "div.popup-actions",
        {},
        el("button", {
          id: "record-submit",
          onclick: () => {
            const record: NewGuideline = {
              id: idInput.value.trim(),
              if: ifInput.value,
              then: thenInput.value,
              if_types: checked(ifTypes),
              graph_types: checked(graphTypes),
              decision_path: (pathSelect.value ?? "nodes").split("/"),
              vis_type: visSelect.value || "node_link",
              tasks: tasksInput.value.split(",").map((t) => t.trim()).filter(Boolean),
              sources: [],
              mapping: prefill?.mapping ?? null,
            };
            recordForm.hidden = true;
            actions.onSubmitRecord(record, replace);
          },
        }, replace ? "Replace" : "Add"),
        el("button", { onclick: () => (recordForm.hidden = true) }, "Cancel"),
      ),
    );
  }

  // ------------------------------------------------------------------- root

  const root = el(
    "section.exploration-view",
    { id: "exploration-view" },
    el(
      "div.toolbar",
      {},
      el("h2", {}, "Guideline exploration"),
      el("button", {
        id: "sort-btn",
        onclick: () => {
          buildSortPopup();
          sortPopup.hidden = false;
        },
      }, "Sort"),
      el("button", {
        id: "add-btn",
        onclick: () => view.openRecordForm(null),
      }, "+"),
    ),
    sortPopup,
    recordForm,
    popover,
    el(
      "div.panes",
      {},
      overview,
      details,
      el("div.result", { id: "result" }, banner, violationsBox, svgBox),
    ),
  );

  const view: ExplorationView = {
    root,
    renderOverview(taxonomy, selected, combined, detailsTarget) {
      clear(overview);
      for (const rootNode of taxonomy.roots) {
        overview.append(categoryBlock(rootNode, selected, combined, detailsTarget));
      }
    },
    renderDetails(record, canCombine) {
      clear(details);
      if (record) details.append(detailsContent(record, canCombine));
    },
    showResult(svg, statements) {
      clear(banner);
      clear(violationsBox);
      for (const applied of statements) {
        banner.append(
          el(
            "p.applied-statement",
            { dataset: { id: applied.id } },
            (applied.unimplemented ? "[unimplemented] " : "") + applied.text,
          ),
        );
      }
      svgBox.innerHTML = svg;
    },
    showViolations(violations, detail) {
      clear(violationsBox);
      violationsBox.append(el("li.violation-heading", {}, detail));
      for (const violation of violations) {
        violationsBox.append(
          el("li.violation", { dataset: { rule: violation.rule } },
             `${violation.rule}: ${violation.message} (${violation.guideline_ids.join(", ")})`),
        );
      }
    },
    openSortPopup() {
      buildSortPopup();
      sortPopup.hidden = false;
    },
    openRecordForm(prefill) {
      buildRecordForm(prefill);
      recordForm.hidden = false;
    },
  };
  return view;
}
