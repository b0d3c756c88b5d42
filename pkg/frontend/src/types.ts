// Wire types mirroring the service's canonical JSON schemas.

export type Subset = number[];

export interface CollectionDoc {
  n: number;
  k: number;
  l: number;
  members: Subset[];
}

export interface MutateResponse {
  ok: boolean;
  result: CollectionDoc;
}

export interface MutabilityReport {
  plus: boolean;
  minus: boolean;
  reasons: Record<string, { error: string; detail: string; pair?: Subset[] }>;
}

export interface QuiverArrow {
  from: Subset;
  to: Subset;
  tag: string;
}

export interface QuiverDoc {
  vertices: Subset[];
  arrows: QuiverArrow[];
  relations: unknown[];
  strip?: StripObjectDoc[];
}

export interface StripObjectDoc {
  pair: [Subset, Subset];
  iota: Subset;
  projective: boolean;
}

export interface ServiceError {
  error: string;
  detail: string;
  pair?: Subset[];
}

export const subsetKey = (s: Subset): string => s.join(",");
