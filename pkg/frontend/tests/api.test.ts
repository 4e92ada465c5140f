import { describe, expect, it } from "vitest";

import { ApiClient, ServiceError, SupersededError } from "../src/api";

interface Deferred {
  resolve: (resp: Response) => void;
  reject: (err: unknown) => void;
  url: string;
  signal: AbortSignal | null | undefined;
}

/** A fetch stub that parks every call until the test releases it. */
function fetchStub() {
  const calls: Deferred[] = [];
  const impl = (url: string, init?: RequestInit): Promise<Response> =>
    new Promise<Response>((resolve, reject) => {
      const entry: Deferred = { resolve, reject, url, signal: init?.signal };
      init?.signal?.addEventListener("abort", () =>
        reject(new DOMException("aborted", "AbortError")));
      calls.push(entry);
    });
  return { impl, calls };
}

function jsonResponse(doc: unknown, status = 200): Response {
  return new Response(JSON.stringify(doc), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("cancel-supersede", () => {
  it("a newer request on the same slot aborts the older one", async () => {
    const { impl, calls } = fetchStub();
    const client = new ApiClient("http://x", impl);
    const first = client.walk({ number: "1/14", n: 10, map: "decagon" }, "slot");
    const second = client.walk({ number: "1/7", n: 10, map: "decagon" }, "slot");

    expect(calls.length).toBe(2);
    expect(calls[0].signal?.aborted).toBe(true);
    expect(calls[1].signal?.aborted).toBe(false);

    calls[1].resolve(jsonResponse({ number: "1/7" }));
    await expect(second).resolves.toMatchObject({ number: "1/7" });
    await expect(first).rejects.toThrow(SupersededError);
  });

  it("a stale response that arrives after being superseded is discarded", async () => {
    const { impl, calls } = fetchStub();
    const client = new ApiClient("http://x", impl);
    // no AbortController race: resolve the first call *after* the second starts
    const first = client.walk({ number: "a", n: 1, map: "decagon" }, "s");
    const second = client.walk({ number: "b", n: 1, map: "decagon" }, "s");
    calls[0].resolve(jsonResponse({ number: "a" }));
    calls[1].resolve(jsonResponse({ number: "b" }));
    await expect(first).rejects.toThrow(SupersededError);
    await expect(second).resolves.toMatchObject({ number: "b" });
  });

  it("different slots are independent", async () => {
    const { impl, calls } = fetchStub();
    const client = new ApiClient("http://x", impl);
    const a = client.walk({ number: "a", n: 1, map: "decagon" }, "slot-a");
    const b = client.walk({ number: "b", n: 1, map: "decagon" }, "slot-b");
    calls[0].resolve(jsonResponse({ number: "a" }));
    calls[1].resolve(jsonResponse({ number: "b" }));
    await expect(a).resolves.toMatchObject({ number: "a" });
    await expect(b).resolves.toMatchObject({ number: "b" });
  });
});

describe("service errors", () => {
  it("non-2xx responses surface the JSON error body", async () => {
    const { impl, calls } = fetchStub();
    const client = new ApiClient("http://x", impl);
    const call = client.walk({ number: "1/0", n: 10, map: "decagon" });
    calls[0].resolve(jsonResponse({ error: "parse error", detail: "zero denominator" }, 400));
    await expect(call).rejects.toThrow(ServiceError);
    await call.catch((err: ServiceError) => {
      expect(err.status).toBe(400);
      expect(err.body.error).toBe("parse error");
    });
  });

  it("trailing slashes in the base URL are tolerated", async () => {
    const { impl, calls } = fetchStub();
    const client = new ApiClient("http://x:1234///", impl);
    void client.walk({ number: "1", n: 1, map: "decagon" });
    expect(calls[0].url).toBe("http://x:1234/api/walk");
  });
});
