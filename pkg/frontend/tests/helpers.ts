import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { FetchLike } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture(name: string): string {
  return readFileSync(join(here, "fixtures", name), "utf8");
}

export interface Route {
  match: (url: string, init?: RequestInit) => boolean;
  body: string;
  status?: number;
}

export function fakeFetch(routes: Route[]): { fetch: FetchLike; calls: string[] } {
  const calls: string[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    calls.push(url);
    for (const route of routes) {
      if (route.match(url, init)) {
        return new Response(route.body, {
          status: route.status ?? 200,
          headers: { "content-type": "application/json" },
        });
      }
    }
    return new Response(JSON.stringify({ error: "no-route", detail: url }), { status: 500 });
  };
  return { fetch: fetchFn, calls };
}
