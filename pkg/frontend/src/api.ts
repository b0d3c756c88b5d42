// Typed client for the local service.  Responses keep their raw text so
// views can be snapshot-compared byte-for-byte against what the server
// actually sent; this file performs no combinatorial computation.

import {
  CollectionDoc,
  MutabilityReport,
  MutateResponse,
  QuiverDoc,
  ServiceError,
  Subset,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(readonly status: number, readonly body: ServiceError) {
    super(`${body.error}: ${body.detail}`);
  }
}

export interface Raw<T> {
  text: string;
  data: T;
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(url: string, init?: RequestInit): Promise<Raw<T>> {
    const response = await this.fetchFn(this.base + url, init);
    const text = await response.text();
    if (!response.ok) {
      let body: ServiceError;
      try {
        body = JSON.parse(text) as ServiceError;
      } catch {
        body = { error: `http-${response.status}`, detail: text };
      }
      throw new ApiError(response.status, body);
    }
    return { text, data: JSON.parse(text) as T };
  }

  private post<T>(url: string, body: unknown): Promise<Raw<T>> {
    return this.request<T>(url, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  standardSlice(n: number, l: number): Promise<Raw<CollectionDoc>> {
    return this.request(`/api/slice/standard?n=${n}&l=${l}`);
  }

  construct(n: number, l: number, k: number): Promise<Raw<CollectionDoc>> {
    return this.post("/api/collection/construct", { n, l, k, slice: "standard" });
  }

  validate(collection: CollectionDoc): Promise<Raw<{ ok: boolean; pair?: Subset[] }>> {
    return this.post("/api/collection/validate", collection);
  }

  isMutable(collection: CollectionDoc, element: Subset): Promise<Raw<MutabilityReport>> {
    return this.post("/api/collection/is-mutable", { collection, element });
  }

  mutate(
    collection: CollectionDoc,
    element: Subset,
    direction: "+" | "-",
  ): Promise<Raw<MutateResponse>> {
    return this.post("/api/mutate", { collection, element, direction });
  }

  quiver(kind: "tensor" | "gamma" | "strip" | "apr", n: number, k: number, l: number): Promise<Raw<QuiverDoc>> {
    return this.request(`/api/quiver/${kind}?n=${n}&k=${k}&l=${l}`);
  }

  aprMutate(n: number, k: number, l: number): Promise<Raw<QuiverDoc>> {
    return this.post("/api/quiver/apr-mutate", { n, k, l });
  }
}
