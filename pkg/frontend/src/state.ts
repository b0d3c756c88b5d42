// View-model for the collection explorer.  The store never computes
// legality or membership itself: the current collection is always the
// parse of a raw service response kept verbatim, and every transition is
// the result of an API call.

import { ApiClient, ApiError } from "./api.js";
import { History } from "./history.js";
import { RequestQueue } from "./queue.js";
import { CollectionDoc, MutabilityReport, Subset, subsetKey } from "./types.js";

export interface CollectionSnapshot {
  text: string; // raw bytes of the service response this state came from
  doc: CollectionDoc;
}

export interface InlineError {
  code: string;
  detail: string;
  pair?: Subset[];
}

export class CollectionStore {
  private history: History<CollectionSnapshot> | null = null;
  selected: Subset | null = null;
  mutability: MutabilityReport | null = null;
  error: InlineError | null = null;
  private queue = new RequestQueue();
  private listeners: Array<() => void> = [];

  constructor(private readonly api: ApiClient) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  get current(): CollectionSnapshot | null {
    return this.history ? this.history.current : null;
  }

  get currentText(): string | null {
    return this.current?.text ?? null;
  }

  canUndo(): boolean {
    return this.history?.canUndo() ?? false;
  }

  canRedo(): boolean {
    return this.history?.canRedo() ?? false;
  }

  async load(n: number, l: number, k: number): Promise<void> {
    const raw = await this.api.construct(n, l, k);
    this.history = new History({ text: raw.text, doc: raw.data });
    this.selected = null;
    this.mutability = null;
    this.error = null;
    this.emit();
  }

  /** Replace the whole state from one raw collection response. */
  adopt(text: string): void {
    this.history = new History({ text, doc: JSON.parse(text) as CollectionDoc });
    this.selected = null;
    this.mutability = null;
    this.error = null;
    this.emit();
  }

  async select(element: Subset): Promise<void> {
    const doc = this.current?.doc;
    if (!doc) return;
    this.selected = element;
    this.mutability = null;
    this.error = null;
    this.emit();
    try {
      const raw = await this.queue.enqueue(() => this.api.isMutable(doc, element));
      this.mutability = raw.data;
    } catch (err) {
      this.error = toInlineError(err);
    }
    this.emit();
  }

  async applyMutation(direction: "+" | "-"): Promise<void> {
    const doc = this.current?.doc;
    const element = this.selected;
    if (!doc || !element || !this.history) return;
    try {
      const raw = await this.queue.enqueue(() => this.api.mutate(doc, element, direction));
      // the displayed collection is exactly the service's result document
      this.history.push({
        text: JSON.stringify(raw.data.result),
        doc: raw.data.result,
      });
      this.selected = null;
      this.mutability = null;
      this.error = null;
    } catch (err) {
      this.error = toInlineError(err);
    }
    this.emit();
  }

  undo(): void {
    this.history?.undo();
    this.selected = null;
    this.mutability = null;
    this.emit();
  }

  redo(): void {
    this.history?.redo();
    this.selected = null;
    this.mutability = null;
    this.emit();
  }

  isMember(element: Subset): boolean {
    const doc = this.current?.doc;
    if (!doc) return false;
    const key = subsetKey(element);
    return doc.members.some((m) => subsetKey(m) === key);
  }
}

export function toInlineError(err: unknown): InlineError {
  if (err instanceof ApiError) {
    return { code: err.body.error, detail: err.body.detail, pair: err.body.pair };
  }
  return { code: "client-error", detail: String(err) };
}
