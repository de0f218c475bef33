import { describe, expect, it } from "vitest";

import {
  boundsOf,
  fitTransform,
  fromPixel,
  pointSegmentDistance,
  toPixel,
} from "../src/transform.js";

describe("world-to-canvas fitting", () => {
  it("keeps all data inside the padded canvas", () => {
    const pts: [number, number][] = [
      [-3, 2],
      [5, 9],
      [1, -4],
    ];
    const t = fitTransform(boundsOf(pts), 1000, 1000);
    for (const [x, y] of pts) {
      const [px, py] = toPixel(t, x, y);
      expect(px).toBeGreaterThanOrEqual(39.9);
      expect(py).toBeGreaterThanOrEqual(39.9);
      expect(px).toBeLessThanOrEqual(960.1);
      expect(py).toBeLessThanOrEqual(960.1);
    }
  });

  it("round-trips pixel coordinates", () => {
    const t = fitTransform({ minX: 0, minY: 0, maxX: 8, maxY: 4 }, 640, 640);
    const [px, py] = toPixel(t, 3.25, 1.5);
    const [wx, wy] = fromPixel(t, px, py);
    expect(wx).toBeCloseTo(3.25, 12);
    expect(wy).toBeCloseTo(1.5, 12);
  });

  it("flips y so world up is screen up", () => {
    const t = fitTransform({ minX: 0, minY: 0, maxX: 1, maxY: 1 }, 100, 100);
    const [, low] = toPixel(t, 0, 0);
    const [, high] = toPixel(t, 0, 1);
    expect(high).toBeLessThan(low);
  });
});

describe("point-segment distance", () => {
  it("is zero on the segment and projects inside it", () => {
    expect(pointSegmentDistance([1, 1], [0, 0], [2, 2])).toBeCloseTo(0, 12);
    expect(pointSegmentDistance([1, 0], [0, 0], [2, 0])).toBe(0);
    expect(pointSegmentDistance([1, 3], [0, 0], [2, 0])).toBe(3);
  });

  it("clamps to the nearest endpoint beyond the ends", () => {
    expect(pointSegmentDistance([-3, 4], [0, 0], [2, 0])).toBe(5);
    expect(pointSegmentDistance([5, 4], [2, 0], [2, 0])).toBe(5);
  });
});
