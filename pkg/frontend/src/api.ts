/**
 * Typed client for the labeling service HTTP API.
 *
 * The shapes mirror the service JSON contract exactly; the UI never
 * mutates labels client-side.
 */

export interface Tag {
  surface: string;
  normalized: string;
  score: number;
  method: "phrase" | "entity" | "topic";
}

export interface ArticleSummary {
  id: string;
  title: string;
  source: string;
  published_at: string;
  category?: string;
  tags?: Tag[];
}

export interface ArticleDetail extends ArticleSummary {
  url: string;
  body: string;
  category_scores?: Record<string, number>;
  elapsed_ms?: number;
  labeled_at?: string | null;
}

export interface ArticlePage {
  articles: ArticleSummary[];
  total: number;
  limit: number;
  offset: number;
}

export interface RelatedArticle {
  id: string;
  title: string;
  similarity: number;
}

export interface FeedFilters {
  category?: string;
  tag?: string;
  limit?: number;
  offset?: number;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function getJson<T>(base: string, path: string): Promise<T> {
  let response: Response;
  try {
    response = await fetch(base + path, { headers: { Accept: "application/json" } });
  } catch (err) {
    throw new ApiError(0, `service unreachable: ${String(err)}`);
  }
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  categories(): Promise<string[]> {
    return getJson(this.base, "/v1/categories");
  }

  articles(filters: FeedFilters): Promise<ArticlePage> {
    const params = new URLSearchParams();
    if (filters.category) params.set("category", filters.category);
    if (filters.tag) params.set("tag", filters.tag);
    if (filters.limit !== undefined) params.set("limit", String(filters.limit));
    if (filters.offset) params.set("offset", String(filters.offset));
    const query = params.toString();
    return getJson(this.base, `/v1/articles${query ? "?" + query : ""}`);
  }

  article(id: string): Promise<ArticleDetail> {
    return getJson(this.base, `/v1/articles/${encodeURIComponent(id)}`);
  }

  related(id: string, k = 5): Promise<RelatedArticle[]> {
    return getJson(this.base, `/v1/articles/${encodeURIComponent(id)}/related?k=${k}`);
  }
}
