import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { History } from "../src/history.js";
import { RequestQueue } from "../src/queue.js";
import { fakeFetch } from "./helpers.js";

describe("history", () => {
  it("undo and redo walk the snapshots", () => {
    const h = new History("a");
    h.push("b");
    h.push("c");
    expect(h.undo()).toBe("b");
    expect(h.undo()).toBe("a");
    expect(h.canUndo()).toBe(false);
    expect(h.redo()).toBe("b");
    h.push("d"); // divergence clears the redo branch
    expect(h.canRedo()).toBe(false);
    expect(h.current).toBe("d");
  });
});

describe("request queue", () => {
  it("runs at most one task at a time, in order", async () => {
    const q = new RequestQueue();
    const order: number[] = [];
    let running = 0;
    let maxRunning = 0;
    const task = (i: number) => () =>
      new Promise<void>((resolve) => {
        running += 1;
        maxRunning = Math.max(maxRunning, running);
        setTimeout(() => {
          order.push(i);
          running -= 1;
          resolve();
        }, 5 * (3 - i));
      });
    await Promise.all([q.enqueue(task(1)), q.enqueue(task(2)), q.enqueue(task(3))]);
    expect(order).toEqual([1, 2, 3]);
    expect(maxRunning).toBe(1);
  });

  it("keeps going after a rejection", async () => {
    const q = new RequestQueue();
    await expect(q.enqueue(() => Promise.reject(new Error("boom")))).rejects.toThrow("boom");
    await expect(q.enqueue(() => Promise.resolve(7))).resolves.toBe(7);
  });
});

describe("api client", () => {
  it("keeps the raw response text", async () => {
    const body = '{"n":6,"k":2,"l":2,"members":[[1,3],[1,4],[1,5]]}\n';
    const { fetch, calls } = fakeFetch([
      { match: (url) => url.includes("/api/slice/standard"), body },
    ]);
    const api = new ApiClient("", fetch);
    const raw = await api.standardSlice(6, 2);
    expect(raw.text).toBe(body);
    expect(raw.data.members).toHaveLength(3);
    expect(calls).toEqual(["/api/slice/standard?n=6&l=2"]);
  });

  it("maps error statuses to ApiError with the body", async () => {
    const { fetch } = fakeFetch([
      {
        match: () => true,
        body: '{"error":"guard-exceeded","detail":"too big"}',
        status: 422,
      },
    ]);
    const api = new ApiClient("", fetch);
    await expect(api.standardSlice(12, 3)).rejects.toThrow(ApiError);
    await expect(api.standardSlice(12, 3)).rejects.toMatchObject({
      status: 422,
      body: { error: "guard-exceeded" },
    });
  });
});
