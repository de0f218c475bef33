// World-to-canvas fitting and the pixel geometry used by the overlay
// assertions. This is the single place where exact values become floats.

export interface Box {
  minX: number;
  minY: number;
  maxX: number;
  maxY: number;
}

export interface Transform {
  scale: number;
  offsetX: number;
  offsetY: number;
  height: number;
}

export function boundsOf(points: [number, number][]): Box {
  if (points.length === 0) return { minX: 0, minY: 0, maxX: 1, maxY: 1 };
  let minX = Infinity,
    minY = Infinity,
    maxX = -Infinity,
    maxY = -Infinity;
  for (const [x, y] of points) {
    minX = Math.min(minX, x);
    minY = Math.min(minY, y);
    maxX = Math.max(maxX, x);
    maxY = Math.max(maxY, y);
  }
  return { minX, minY, maxX, maxY };
}

// Uniform scale fit with padding; y flipped so world y grows upward.
export function fitTransform(
  box: Box,
  width: number,
  height: number,
  pad = 40,
): Transform {
  const span = Math.max(box.maxX - box.minX, box.maxY - box.minY, 1e-12);
  const scale = (Math.min(width, height) - 2 * pad) / span;
  return {
    scale,
    offsetX: pad - box.minX * scale,
    offsetY: pad - box.minY * scale,
    height,
  };
}

export function toPixel(t: Transform, x: number, y: number): [number, number] {
  return [x * t.scale + t.offsetX, t.height - (y * t.scale + t.offsetY)];
}

export function fromPixel(t: Transform, px: number, py: number): [number, number] {
  return [(px - t.offsetX) / t.scale, (t.height - py - t.offsetY) / t.scale];
}

export function pointSegmentDistance(
  p: [number, number],
  a: [number, number],
  b: [number, number],
): number {
  const vx = b[0] - a[0];
  const vy = b[1] - a[1];
  const wx = p[0] - a[0];
  const wy = p[1] - a[1];
  const len2 = vx * vx + vy * vy;
  const s = len2 === 0 ? 0 : Math.max(0, Math.min(1, (wx * vx + wy * vy) / len2));
  const dx = wx - s * vx;
  const dy = wy - s * vy;
  return Math.hypot(dx, dy);
}

export function distance(a: [number, number], b: [number, number]): number {
  return Math.hypot(a[0] - b[0], a[1] - b[1]);
}
