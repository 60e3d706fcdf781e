/**
 * Navigation state, fully encoded in the URL hash so every view is
 * shareable and bookmarkable.
 *
 *   #/feed?category=Sports&tag=copper%20mill&offset=20
 *   #/article/123abc?category=Sports   (filters survive the detail view)
 */

export interface NavState {
  view: "feed" | "article";
  articleId?: string;
  category?: string;
  tag?: string;
  offset: number;
}

export const PAGE_SIZE = 20;

export function parseHash(hash: string): NavState {
  const cleaned = hash.replace(/^#\/?/, "");
  const [pathPart, queryPart] = cleaned.split("?", 2);
  const params = new URLSearchParams(queryPart ?? "");
  const segments = pathPart.split("/").filter(Boolean);
  const state: NavState = {
    view: "feed",
    category: params.get("category") ?? undefined,
    tag: params.get("tag") ?? undefined,
    offset: Math.max(0, Number(params.get("offset") ?? "0") || 0),
  };
  if (segments[0] === "article" && segments[1]) {
    state.view = "article";
    state.articleId = decodeURIComponent(segments[1]);
  }
  return state;
}

export function encodeHash(state: NavState): string {
  const params = new URLSearchParams();
  if (state.category) params.set("category", state.category);
  if (state.tag) params.set("tag", state.tag);
  if (state.offset) params.set("offset", String(state.offset));
  const query = params.toString();
  const path =
    state.view === "article" && state.articleId
      ? `/article/${encodeURIComponent(state.articleId)}`
      : "/feed";
  return `#${path}${query ? "?" + query : ""}`;
}

export function feedState(partial: Partial<NavState>): NavState {
  return { view: "feed", offset: 0, ...partial, articleId: undefined };
}
