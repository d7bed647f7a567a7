/** Typed client for the search service HTTP API. */

export interface SearchResult {
  package: string;
  score: number;
  per_dimension: Record<string, number>;
}

export interface SearchResponse {
  results: SearchResult[];
}

export interface PackageFeatures {
  package: string;
  robots: string[];
  sensors: string[];
  category: string;
  functions: string[];
  characteristics: string[];
  nodes: string[];
  services: string[];
  messages: string[];
  actions: string[];
  launches: string[];
}

export interface StatsResponse {
  entities: Record<string, number>;
  relations: Record<string, number>;
  total_entities: number;
  total_relations: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${base}${path}`, init);
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const detail =
      body && typeof body.error === "string" ? body.error : response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  search(query: Record<string, unknown>): Promise<SearchResponse> {
    return request<SearchResponse>(this.base, "/api/search", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(query),
    });
  }

  getPackage(name: string): Promise<PackageFeatures> {
    return request<PackageFeatures>(
      this.base,
      `/api/packages/${encodeURIComponent(name)}`,
    );
  }

  getStats(): Promise<StatsResponse> {
    return request<StatsResponse>(this.base, "/api/stats");
  }
}
