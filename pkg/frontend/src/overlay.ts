// Elevation overlay geometry: the lifted control points must land on the
// original polygon's segments. The convex combination is re-checked in
// exact arithmetic from the server-returned weights, then projected to
// pixels for the on-screen assertion.

import type { CurveDocument, ElevateResponse } from "./api.js";
import { add, cmp, eq, mul, ONE, parseRat, Rat, toNumber, ZERO } from "./rational.js";
import {
  boundsOf,
  fitTransform,
  pointSegmentDistance,
  toPixel,
  Transform,
} from "./transform.js";

export interface OverlayCheck {
  k: number;
  pixel: [number, number];
  distancePx: number;
  exactOnSegment: boolean;
  convex: boolean;
}

function parsePoint(coords: string[]): Rat[] {
  return coords.map(parseRat);
}

// Exact convex recombination rho * P_{k-1} + xi * P_k.
export function exactOverlayPoint(
  original: CurveDocument,
  response: ElevateResponse,
  k: number,
): Rat[] {
  const w = response.weights.find((entry) => entry.k === k);
  if (!w) throw new Error(`no weight entry for k=${k}`);
  const rho = parseRat(w.rho.exact);
  const xi = parseRat(w.xi.exact);
  const prev = parsePoint(original.points[k - 1]);
  const cur = parsePoint(original.points[k]);
  return prev.map((p, d) => add(mul(rho, p), mul(xi, cur[d])));
}

export function overlayTransform(
  original: CurveDocument,
  size: number,
): Transform {
  const pts = original.points.map(
    (p) => [toNumber(parseRat(p[0])), toNumber(parseRat(p[1]))] as [number, number],
  );
  return fitTransform(boundsOf(pts), size, size);
}

// Check every interior lifted point: exact convexity, exact membership in
// the response, and the pixel distance to its polygon segment.
export function checkOverlay(
  original: CurveDocument,
  response: ElevateResponse,
  size: number,
): OverlayCheck[] {
  const t = overlayTransform(original, size);
  const out: OverlayCheck[] = [];
  for (const w of response.weights) {
    const k = w.k;
    const rho = parseRat(w.rho.exact);
    const xi = parseRat(w.xi.exact);
    const convex =
      cmp(rho, ZERO) > 0 &&
      cmp(xi, ZERO) > 0 &&
      eq(add(rho, xi), ONE);
    const exact = exactOverlayPoint(original, response, k);
    const served = response.curve.points[k].map(parseRat);
    const exactOnSegment = exact.every((x, d) => eq(x, served[d]));
    const pixel = project(t, exact);
    const a = project(t, original.points[k - 1].map(parseRat));
    const b = project(t, original.points[k].map(parseRat));
    out.push({
      k,
      pixel,
      distancePx: pointSegmentDistance(pixel, a, b),
      exactOnSegment,
      convex,
    });
  }
  return out;
}

function project(t: Transform, coords: Rat[]): [number, number] {
  return toPixel(t, toNumber(coords[0]), toNumber(coords[1]));
}
