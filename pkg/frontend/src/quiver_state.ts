// View-model for the quiver panel.  The displayed document is always one
// verbatim service response; the mutated-vertex pair is derived purely by
// diffing two such responses (the server decides what mutates).

import { ApiClient } from "./api.js";
import { InlineError, toInlineError } from "./state.js";
import { QuiverDoc, Subset, subsetKey } from "./types.js";

export type QuiverKind = "tensor" | "gamma" | "strip" | "apr";

export interface QuiverState {
  kind: QuiverKind;
  text: string;
  doc: QuiverDoc;
}

export function vertexDiff(before: QuiverDoc, after: QuiverDoc): {
  removed: Subset[];
  added: Subset[];
} {
  const beforeKeys = new Set(before.vertices.map(subsetKey));
  const afterKeys = new Set(after.vertices.map(subsetKey));
  return {
    removed: before.vertices.filter((v) => !afterKeys.has(subsetKey(v))),
    added: after.vertices.filter((v) => !beforeKeys.has(subsetKey(v))),
  };
}

export class QuiverStore {
  state: QuiverState | null = null;
  params: { n: number; k: number; l: number } | null = null;
  highlight: Subset | null = null;
  message: string | null = null;
  error: InlineError | null = null;
  private listeners: Array<() => void> = [];

  constructor(private readonly api: ApiClient) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  get currentText(): string | null {
    return this.state?.text ?? null;
  }

  async load(kind: QuiverKind, n: number, k: number, l: number): Promise<void> {
    try {
      const raw = await this.api.quiver(kind, n, k, l);
      this.state = { kind, text: raw.text, doc: raw.data };
      this.params = { n, k, l };
      this.highlight = null;
      this.message = null;
      this.error = null;
    } catch (err) {
      this.error = toInlineError(err);
    }
    this.emit();
  }

  /** Click on a vertex of the gamma view: ask the server for the mutated
   * quiver; adopt it only when the clicked vertex is the one it relabels. */
  async clickVertex(vertex: Subset): Promise<void> {
    if (!this.state || !this.params) return;
    if (this.state.kind !== "gamma") {
      this.message = "mutation acts on the preprojective view";
      this.emit();
      return;
    }
    const { n, k, l } = this.params;
    try {
      const raw = await this.api.aprMutate(n, k, l);
      const diff = vertexDiff(this.state.doc, raw.data);
      const clicked = subsetKey(vertex);
      if (diff.removed.some((v) => subsetKey(v) === clicked)) {
        this.state = { kind: "apr", text: raw.text, doc: raw.data };
        this.highlight = diff.added[0] ?? null;
        this.message =
          diff.removed[0] && diff.added[0]
            ? `relabeled ${diff.removed[0].join("")} to ${diff.added[0]!.join("")}`
            : null;
      } else {
        const target = diff.removed[0];
        this.message = target
          ? `mutation acts at the unique vertex ${target.join("")}, not ${vertex.join("")}`
          : "no vertex mutates at these parameters";
      }
      this.error = null;
    } catch (err) {
      this.error = toInlineError(err);
    }
    this.emit();
  }
}
