// Wire types, mirroring the service JSON schema exactly.

export type Point = [number, number];

export interface VectorMapJson {
  name: string;
  mode: "exact" | "float";
  // exact maps carry "p/q" strings, float maps numbers
  vectors: Array<[number | string, number | string]>;
}

export interface TerminatingClass {
  kind: "terminating";
  steps: number;
}

export interface PeriodicClass {
  kind: "periodic";
  preperiod: number;
  lag: number;
  drift: Point;
  closed: boolean;
}

export interface NoPeriodClass {
  kind: "no_period_found";
  horizon: number;
  max_lag: number;
}

export type Classification = TerminatingClass | PeriodicClass | NoPeriodClass;

export interface PeriodDoc {
  preperiod: number;
  period_len: number;
  preperiod_digits: number[];
  period_digits: number[];
}

export interface WalkResponse {
  number: string;
  map: VectorMapJson;
  digits: number[];
  points: Point[];
  classification: Classification;
  period: PeriodDoc | null;
  bbox: { min: Point; max: Point };
  terminated: boolean;
  request: Record<string, unknown>;
  limits: { max_digits: number; step_budget: number | null };
}

export interface WalkRequest {
  number: string;
  n: number;
  map: string | VectorMapJson;
  origin?: Point;
  max_lag?: number;
  include_integer_part?: boolean;
  pad_zeros?: boolean;
}

export interface ApiError {
  error: string;
  detail: string;
}

// An editable client-side map is always float-mode: dragging produces reals.
export interface EditableMap {
  name: string;
  mode: "float";
  vectors: Point[];
}
