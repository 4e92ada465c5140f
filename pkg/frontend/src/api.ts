// Typed client for the walk service, with cancel-supersede semantics: a new
// request on the same slot aborts the one in flight, and a stale response
// can never overwrite a newer one.

import type { ApiError, WalkRequest, WalkResponse } from "./types";

export class SupersededError extends Error {
  constructor() {
    super("superseded by a newer request");
    this.name = "SupersededError";
  }
}

export class ServiceError extends Error {
  readonly status: number;
  readonly body: ApiError;

  constructor(status: number, body: ApiError) {
    super(`${body.error}: ${body.detail}`);
    this.name = "ServiceError";
    this.status = status;
    this.body = body;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

interface Slot {
  generation: number;
  controller: AbortController | null;
}

export class ApiClient {
  readonly base: string;
  private readonly fetchImpl: FetchLike;
  private readonly slots = new Map<string, Slot>();

  constructor(base: string, fetchImpl: FetchLike = fetch.bind(globalThis)) {
    this.base = base.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl;
  }

  async health(): Promise<{ status: string; version: string; max_digits: number }> {
    const resp = await this.fetchImpl(`${this.base}/api/health`);
    return (await resp.json()) as { status: string; version: string; max_digits: number };
  }

  /** POST /api/walk.  Requests sharing a slot key supersede each other. */
  async walk(request: WalkRequest, slot = "default"): Promise<WalkResponse> {
    let entry = this.slots.get(slot);
    if (!entry) {
      entry = { generation: 0, controller: null };
      this.slots.set(slot, entry);
    }
    entry.controller?.abort();
    const controller = typeof AbortController !== "undefined" ? new AbortController() : null;
    entry.controller = controller;
    const generation = ++entry.generation;

    let resp: Response;
    try {
      resp = await this.fetchImpl(`${this.base}/api/walk`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(request),
        signal: controller?.signal,
      });
    } catch (err) {
      if (entry.generation !== generation) throw new SupersededError();
      throw err;
    }
    if (entry.generation !== generation) throw new SupersededError();
    const body = await resp.json();
    if (entry.generation !== generation) throw new SupersededError();
    if (!resp.ok) throw new ServiceError(resp.status, body as ApiError);
    return body as WalkResponse;
  }

  async period(number: string): Promise<{ preperiod: number; period_len: number; period: string }> {
    const resp = await this.fetchImpl(`${this.base}/api/period`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ number }),
    });
    const body = await resp.json();
    if (!resp.ok) throw new ServiceError(resp.status, body as ApiError);
    return body as { preperiod: number; period_len: number; period: string };
  }
}
