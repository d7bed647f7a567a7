/** DOM rendering for results, package details, stats, and errors. */

import type { PackageFeatures, SearchResult, StatsResponse } from "./api.js";
import type { FormField } from "./state.js";

export interface RenderCallbacks {
  onSelectPackage: (name: string) => void;
  onPickFeature: (field: FormField, value: string) => void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

export function renderResults(
  container: HTMLElement,
  results: SearchResult[],
  callbacks: RenderCallbacks,
): void {
  container.replaceChildren();
  if (results.length === 0) {
    container.append(el("p", "empty", "No results."));
    return;
  }
  const list = el("ol", "results");
  for (const result of results) {
    const item = el("li", "result");
    const button = el("button", "result-name", result.package);
    button.type = "button";
    button.addEventListener("click", () =>
      callbacks.onSelectPackage(result.package),
    );
    const score = el("span", "result-score", result.score.toFixed(4));
    const bar = el("div", "score-bar");
    const fill = el("div", "score-bar-fill");
    fill.style.width = `${Math.round(Math.max(0, Math.min(1, result.score)) * 100)}%`;
    bar.append(fill);
    const breakdown = el("dl", "breakdown");
    for (const [dimension, value] of Object.entries(result.per_dimension)) {
      breakdown.append(el("dt", undefined, dimension));
      breakdown.append(el("dd", undefined, value.toFixed(4)));
    }
    item.append(button, score, bar, breakdown);
    list.append(item);
  }
  container.append(list);
}

const FEATURE_FIELDS: ReadonlyArray<[keyof PackageFeatures, FormField]> = [
  ["robots", "robot"],
  ["sensors", "sensor"],
  ["functions", "function"],
  ["characteristics", "characteristics"],
  ["actions", "action"],
  ["nodes", "node"],
  ["services", "service"],
  ["messages", "message"],
  ["launches", "launch"],
];

export function renderPackage(
  container: HTMLElement,
  features: PackageFeatures,
  callbacks: RenderCallbacks,
): void {
  container.replaceChildren();
  container.append(el("h2", "package-name", features.package));
  const category = el("button", "feature", `${features.category} package`);
  category.type = "button";
  category.addEventListener("click", () =>
    callbacks.onPickFeature("category", `${features.category} package`),
  );
  const categoryRow = el("div", "feature-row");
  categoryRow.append(el("span", "feature-label", "category"), category);
  container.append(categoryRow);
  for (const [attribute, field] of FEATURE_FIELDS) {
    const values = features[attribute] as string[];
    if (values.length === 0) {
      continue;
    }
    const row = el("div", "feature-row");
    row.append(el("span", "feature-label", field));
    for (const value of values) {
      const chip = el("button", "feature", value);
      chip.type = "button";
      chip.addEventListener("click", () => callbacks.onPickFeature(field, value));
      row.append(chip);
    }
    container.append(row);
  }
}

export function renderStats(container: HTMLElement, stats: StatsResponse): void {
  container.replaceChildren();
  const table = el("table", "stats");
  const head = el("tr");
  head.append(el("th", undefined, "type"), el("th", undefined, "count"));
  table.append(head);
  for (const [type, count] of Object.entries(stats.entities)) {
    const row = el("tr");
    row.append(el("td", undefined, type), el("td", undefined, String(count)));
    table.append(row);
  }
  container.append(table);
}

export function renderError(container: HTMLElement, message: string, onRetry?: () => void): void {
  container.replaceChildren();
  const banner = el("div", "error-banner", message);
  if (onRetry) {
    const retry = el("button", "retry", "Retry");
    retry.type = "button";
    retry.addEventListener("click", onRetry);
    banner.append(retry);
  }
  container.append(banner);
}

export function clearError(container: HTMLElement): void {
  container.replaceChildren();
}
