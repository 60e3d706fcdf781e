/** DOM builders for the reader panes. No framework, just elements. */

import type { ArticleDetail, ArticleSummary, RelatedArticle, Tag } from "./api";

export const METHOD_LABELS: Record<Tag["method"], string> = {
  phrase: "statistical phrase",
  entity: "entity",
  topic: "graphical topic",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function categoryChip(
  name: string,
  active: boolean,
  onClick: () => void,
): HTMLButtonElement {
  const chip = el("button", `chip chip-category${active ? " chip-active" : ""}`, name);
  chip.dataset.category = name;
  chip.addEventListener("click", onClick);
  return chip;
}

export function tagChip(tag: Tag, onClick?: () => void): HTMLButtonElement {
  const chip = el("button", `chip chip-tag chip-method-${tag.method}`);
  chip.dataset.tag = tag.normalized;
  chip.dataset.method = tag.method;
  chip.title = `${METHOD_LABELS[tag.method]} · score ${tag.score.toFixed(2)}`;
  chip.append(el("span", "chip-label", tag.surface));
  if (onClick) chip.addEventListener("click", onClick);
  return chip;
}

export function activeFilterChip(kind: string, value: string, onRemove: () => void): HTMLElement {
  const chip = el("span", "chip chip-filter");
  chip.dataset.filter = kind;
  chip.append(el("span", undefined, `${kind}: ${value}`));
  const close = el("button", "chip-remove", "×");
  close.setAttribute("aria-label", `remove ${kind} filter`);
  close.addEventListener("click", onRemove);
  chip.append(close);
  return chip;
}

export function feedRow(article: ArticleSummary, onOpen: () => void): HTMLElement {
  const row = el("article", "feed-row");
  row.dataset.id = article.id;
  const title = el("h3", "feed-title", article.title);
  title.addEventListener("click", onOpen);
  row.append(title);
  const meta = el("div", "feed-meta");
  meta.append(el("span", "feed-source", article.source || "unknown source"));
  meta.append(el("time", "feed-date", article.published_at.slice(0, 10)));
  if (article.category) {
    meta.append(el("span", "badge badge-category", article.category));
  }
  row.append(meta);
  if (article.tags && article.tags.length) {
    const tags = el("div", "feed-tags");
    for (const tag of article.tags.slice(0, 5)) tags.append(tagChip(tag));
    row.append(tags);
  }
  return row;
}

export function spinner(message: string): HTMLElement {
  const box = el("div", "spinner");
  box.setAttribute("role", "status");
  box.append(el("span", "spinner-dot"), el("span", undefined, message));
  return box;
}

export function errorBanner(message: string, onRetry: () => void): HTMLElement {
  const banner = el("div", "banner banner-error");
  banner.append(el("span", undefined, message));
  const retry = el("button", "banner-retry", "Retry");
  retry.addEventListener("click", onRetry);
  banner.append(retry);
  return banner;
}

export function notFoundPane(id: string): HTMLElement {
  const pane = el("div", "pane pane-missing");
  pane.append(el("h2", undefined, "Article not found"));
  pane.append(el("p", undefined, `No article with id ${id}.`));
  return pane;
}

export function methodLegend(): HTMLElement {
  const legend = el("div", "legend");
  for (const method of ["phrase", "entity", "topic"] as const) {
    const item = el("span", `legend-item chip-method-${method}`);
    item.append(el("span", "legend-swatch"));
    item.append(el("span", undefined, METHOD_LABELS[method]));
    legend.append(item);
  }
  return legend;
}

export function detailPane(
  article: ArticleDetail,
  onTagClick: (tag: Tag) => void,
  onBack: () => void,
): HTMLElement {
  const pane = el("section", "pane pane-detail");
  pane.dataset.id = article.id;
  const back = el("button", "back-link", "← feed");
  back.addEventListener("click", onBack);
  pane.append(back);
  pane.append(el("h2", "detail-title", article.title));
  const meta = el("div", "detail-meta");
  meta.append(el("span", undefined, article.source || "unknown source"));
  if (article.category) meta.append(el("span", "badge badge-category", article.category));
  if (article.elapsed_ms !== undefined) {
    meta.append(el("span", "detail-elapsed", `labeled in ${article.elapsed_ms.toFixed(1)} ms`));
  }
  pane.append(meta);
  if (article.tags && article.tags.length) {
    const tags = el("div", "detail-tags");
    for (const tag of article.tags) {
      tags.append(tagChip(tag, () => onTagClick(tag)));
    }
    pane.append(tags);
    pane.append(methodLegend());
  }
  pane.append(el("p", "detail-body", article.body));
  const related = el("div", "related");
  related.append(el("h3", undefined, "Related articles"));
  related.append(el("ul", "related-list"));
  pane.append(related);
  return pane;
}

export function relatedItems(
  items: RelatedArticle[],
  onOpen: (id: string) => void,
): HTMLElement[] {
  return items.map((item) => {
    const li = el("li", "related-item");
    li.dataset.id = item.id;
    const link = el("button", "related-link", item.title);
    link.addEventListener("click", () => onOpen(item.id));
    li.append(link);
    li.append(el("span", "related-score", item.similarity.toFixed(3)));
    return li;
  });
}
