import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import type { CurveDocument, ElevateResponse } from "../src/api.js";
import { checkOverlay, exactOverlayPoint } from "../src/overlay.js";
import { eq, parseRat } from "../src/rational.js";

interface Fixture {
  request: { curve: CurveDocument; target: number[] };
  response: ElevateResponse;
}

const FIXTURES = [
  "elevate_single_box.json",
  "elevate_square.json",
  "elevate_order6.json",
];

function load(name: string): Fixture {
  const raw = readFileSync(join(__dirname, "fixtures", name), "utf-8");
  return JSON.parse(raw) as Fixture;
}

describe("elevation overlay geometry (recorded service responses)", () => {
  it.each(FIXTURES)("%s: lifted points sit on polygon segments", (name) => {
    const { request, response } = load(name);
    const checks = checkOverlay(request.curve, response, 1000);
    expect(checks.length).toBe(request.curve.n);
    for (const check of checks) {
      // exact: rho + xi = 1 with both weights strictly inside (0, 1)
      expect(check.convex).toBe(true);
      // exact: recombining the original points with the server's weights
      // reproduces the served lifted point coordinate for coordinate
      expect(check.exactOnSegment).toBe(true);
      // pixel criterion at a 1000 x 1000 canvas
      expect(check.distancePx).toBeLessThanOrEqual(0.5);
    }
  });

  it.each(FIXTURES)("%s: endpoints are kept verbatim", (name) => {
    const { request, response } = load(name);
    const first = response.curve.points[0];
    const last = response.curve.points[response.curve.points.length - 1];
    request.curve.points[0].forEach((x, d) =>
      expect(eq(parseRat(x), parseRat(first[d]))).toBe(true),
    );
    request.curve.points[request.curve.points.length - 1].forEach((x, d) =>
      expect(eq(parseRat(x), parseRat(last[d]))).toBe(true),
    );
  });

  it("recombination matches the served point exactly on a worked case", () => {
    const { request, response } = load("elevate_square.json");
    for (const w of response.weights) {
      const exact = exactOverlayPoint(request.curve, response, w.k);
      const served = response.curve.points[w.k].map(parseRat);
      exact.forEach((x, d) => expect(eq(x, served[d])).toBe(true));
    }
  });
});
