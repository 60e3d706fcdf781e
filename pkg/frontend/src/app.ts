/**
 * Reader application controller.
 *
 * Renders the feed and article panes from URL-hash navigation state.
 * Every pane's fetches carry a request sequence number; responses from a
 * superseded navigation are discarded, so slow requests never clobber
 * the current view.
 */

import { ApiClient, ApiError, type Tag } from "./api";
import { encodeHash, feedState, type NavState, PAGE_SIZE, parseHash } from "./state";
import {
  activeFilterChip,
  categoryChip,
  detailPane,
  errorBanner,
  feedRow,
  notFoundPane,
  relatedItems,
  spinner,
} from "./views";

export class App {
  private sequence = 0;
  private categories: string[] = [];

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly navigate: (hash: string) => void,
  ) {}

  /** Entry point: (re)render for the given location hash. */
  async render(hash: string): Promise<void> {
    const state = parseHash(hash);
    const seq = ++this.sequence;
    if (!this.categories.length) {
      try {
        this.categories = await this.api.categories();
      } catch (err) {
        this.showError(err, hash);
        return;
      }
    }
    if (seq !== this.sequence) return;
    if (state.view === "article" && state.articleId) {
      await this.renderArticle(state, seq);
    } else {
      await this.renderFeed(state, seq);
    }
  }

  private go(state: NavState): void {
    this.navigate(encodeHash(state));
  }

  private showError(err: unknown, retryHash: string): void {
    const message =
      err instanceof ApiError && err.status > 0
        ? `Service error (${err.status}): ${err.message}`
        : "Service is unreachable.";
    this.root.replaceChildren(errorBanner(message, () => void this.render(retryHash)));
  }

  private header(state: NavState): HTMLElement {
    const header = document.createElement("header");
    header.className = "app-header";
    const title = document.createElement("h1");
    title.textContent = "inflo reader";
    title.addEventListener("click", () => this.go(feedState({})));
    header.append(title);

    const chips = document.createElement("div");
    chips.className = "category-chips";
    for (const name of this.categories) {
      const active = state.category === name;
      chips.append(
        categoryChip(name, active, () =>
          this.go(feedState({ category: active ? undefined : name, tag: state.tag })),
        ),
      );
    }
    header.append(chips);

    const filters = document.createElement("div");
    filters.className = "active-filters";
    if (state.category) {
      filters.append(
        activeFilterChip("category", state.category, () =>
          this.go(feedState({ tag: state.tag })),
        ),
      );
    }
    if (state.tag) {
      filters.append(
        activeFilterChip("tag", state.tag, () =>
          this.go(feedState({ category: state.category })),
        ),
      );
    }
    header.append(filters);
    return header;
  }

  private async renderFeed(state: NavState, seq: number): Promise<void> {
    this.root.replaceChildren(this.header(state), spinner("Loading feed…"));
    let page;
    try {
      page = await this.api.articles({
        category: state.category,
        tag: state.tag,
        limit: PAGE_SIZE,
        offset: state.offset,
      });
    } catch (err) {
      if (seq === this.sequence) this.showError(err, encodeHash(state));
      return;
    }
    if (seq !== this.sequence) return;

    const list = document.createElement("main");
    list.className = "feed";
    if (!page.articles.length) {
      const empty = document.createElement("p");
      empty.className = "feed-empty";
      empty.textContent = "No articles match the current filters.";
      list.append(empty);
    }
    for (const article of page.articles) {
      list.append(
        feedRow(article, () =>
          this.go({ ...state, view: "article", articleId: article.id }),
        ),
      );
    }

    const pager = document.createElement("nav");
    pager.className = "pager";
    const prev = document.createElement("button");
    prev.textContent = "← newer";
    prev.disabled = state.offset === 0;
    prev.addEventListener("click", () =>
      this.go({ ...state, view: "feed", offset: Math.max(0, state.offset - PAGE_SIZE) }),
    );
    const next = document.createElement("button");
    next.textContent = "older →";
    next.disabled = state.offset + PAGE_SIZE >= page.total;
    next.addEventListener("click", () =>
      this.go({ ...state, view: "feed", offset: state.offset + PAGE_SIZE }),
    );
    const count = document.createElement("span");
    count.className = "pager-count";
    count.textContent = `${page.total} article${page.total === 1 ? "" : "s"}`;
    pager.append(prev, count, next);

    this.root.replaceChildren(this.header(state), list, pager);
  }

  private async renderArticle(state: NavState, seq: number): Promise<void> {
    this.root.replaceChildren(this.header(state), spinner("Labeling article…"));
    let article;
    try {
      article = await this.api.article(state.articleId!);
    } catch (err) {
      if (seq !== this.sequence) return;
      if (err instanceof ApiError && err.status === 404) {
        this.root.replaceChildren(this.header(state), notFoundPane(state.articleId!));
        return;
      }
      this.showError(err, encodeHash(state));
      return;
    }
    if (seq !== this.sequence) return;

    const onTagClick = (tag: Tag) =>
      this.go(feedState({ category: state.category, tag: tag.normalized }));
    const onBack = () => this.go({ ...state, view: "feed" });
    const pane = detailPane(article, onTagClick, onBack);
    this.root.replaceChildren(this.header(state), pane);

    const listNode = pane.querySelector(".related-list");
    if (listNode) {
      listNode.replaceChildren(spinner("Finding related…"));
      try {
        const related = await this.api.related(article.id, 5);
        if (seq !== this.sequence) return;
        listNode.replaceChildren(
          ...relatedItems(related, (id) =>
            this.go({ ...state, view: "article", articleId: id }),
          ),
        );
        if (!related.length) {
          const none = document.createElement("li");
          none.className = "related-empty";
          none.textContent = "No related articles yet.";
          listNode.replaceChildren(none);
        }
      } catch {
        if (seq !== this.sequence) return;
        const failed = document.createElement("li");
        failed.className = "related-empty";
        failed.textContent = "Related lookup failed.";
        listNode.replaceChildren(failed);
      }
    }
  }
}

export function mount(root: HTMLElement, api: ApiClient = new ApiClient()): App {
  const app = new App(root, api, (hash) => {
    window.location.hash = hash;
  });
  window.addEventListener("hashchange", () => void app.render(window.location.hash));
  void app.render(window.location.hash);
  return app;
}
