// Typed client for the kernel's /v1 JSON API. All math stays server-side;
// this module only moves documents and exact strings.

import type { Partition } from "./partition.js";

export interface CurveDocument {
  partition: Partition;
  n: number;
  interval: [string, string];
  points: string[][];
}

export interface ExactPoint {
  exact: string[];
  decimal: number[];
}

export interface SampleResponse {
  samples: { t: string; exact: string[]; decimal: number[] }[];
}

export interface ElevationWeight {
  k: number;
  rho: { exact: string; decimal: number };
  xi: { exact: string; decimal: number };
}

export interface ElevateResponse {
  curve: CurveDocument;
  points: ExactPoint[];
  weights: ElevationWeight[];
}

export interface JoinIntervalResponse {
  c: { exact: string; decimal: number };
}

export interface JoinPointResponse {
  q1: ExactPoint;
}

export interface FieldError {
  field: string;
  message: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly errors: FieldError[],
  ) {
    super(errors.map((e) => `${e.field}: ${e.message}`).join("; "));
  }
}

export class ApiClient {
  constructor(readonly base: string = "http://127.0.0.1:8776") {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetch(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = await resp.json();
    if (!resp.ok) {
      throw new ApiError(resp.status, payload.errors ?? []);
    }
    return payload as T;
  }

  health(): Promise<Response> {
    return fetch(this.base + "/v1/health");
  }

  sample(curve: CurveDocument, m: number): Promise<SampleResponse> {
    return this.post("/v1/sample", { curve, m });
  }

  evalAt(curve: CurveDocument, t: string): Promise<{ point: ExactPoint }> {
    return this.post("/v1/eval", { curve, t });
  }

  elevate(curve: CurveDocument, target: Partition): Promise<ElevateResponse> {
    return this.post("/v1/elevate", { curve, target });
  }

  elevationPartitions(
    partition: Partition,
    n: number,
    rMax: number,
  ): Promise<{ partitions: Partition[] }> {
    return this.post("/v1/elevation-partitions", { partition, n, r_max: rMax });
  }

  joinInterval(
    left: CurveDocument,
    mu: Partition,
    rho: string,
  ): Promise<JoinIntervalResponse> {
    return this.post("/v1/join", { left, mu, rho });
  }

  joinPoint(
    left: CurveDocument,
    mu: Partition,
    c: string,
  ): Promise<JoinPointResponse> {
    return this.post("/v1/join", { left, mu, c });
  }
}
