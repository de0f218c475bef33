// Scene rendering for the design canvas. Everything arrives as decimal
// renderings of exact server output; this module only paints and hit-tests.

import type { CurveDocument, SampleResponse } from "./api.js";
import { parseRat, toNumber } from "./rational.js";
import {
  boundsOf,
  distance,
  fitTransform,
  toPixel,
  Transform,
} from "./transform.js";

export interface Scene {
  document: CurveDocument;
  samples: [number, number][];
  overlay?: [number, number][]; // lifted polygon (decimal), if previewing
  join?: {
    samples: [number, number][];
    polygon: [number, number][];
  };
}

export function controlPolygon(doc: CurveDocument): [number, number][] {
  return doc.points.map(
    (p) => [toNumber(parseRat(p[0])), toNumber(parseRat(p[1]))] as [number, number],
  );
}

export function samplesToPoints(resp: SampleResponse): [number, number][] {
  return resp.samples.map((s) => [s.decimal[0], s.decimal[1]] as [number, number]);
}

export function sceneTransform(scene: Scene, width: number, height: number): Transform {
  const everything = [
    ...controlPolygon(scene.document),
    ...scene.samples,
    ...(scene.overlay ?? []),
    ...(scene.join ? [...scene.join.samples, ...scene.join.polygon] : []),
  ];
  return fitTransform(boundsOf(everything), width, height);
}

export function hitControlPoint(
  scene: Scene,
  t: Transform,
  px: number,
  py: number,
  radius = 12,
): number | null {
  const polygon = controlPolygon(scene.document);
  let best: number | null = null;
  let bestDist = radius;
  polygon.forEach(([x, y], i) => {
    const d = distance(toPixel(t, x, y), [px, py]);
    if (d <= bestDist) {
      best = i;
      bestDist = d;
    }
  });
  return best;
}

function polyline(
  ctx: CanvasRenderingContext2D,
  t: Transform,
  pts: [number, number][],
  color: string,
  width: number,
  dash: number[] = [],
): void {
  if (pts.length < 2) return;
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.setLineDash(dash);
  ctx.beginPath();
  pts.forEach(([x, y], i) => {
    const [cx, cy] = toPixel(t, x, y);
    if (i === 0) ctx.moveTo(cx, cy);
    else ctx.lineTo(cx, cy);
  });
  ctx.stroke();
  ctx.setLineDash([]);
}

function dots(
  ctx: CanvasRenderingContext2D,
  t: Transform,
  pts: [number, number][],
  color: string,
  r: number,
  label?: string,
): void {
  ctx.fillStyle = color;
  pts.forEach(([x, y], i) => {
    const [cx, cy] = toPixel(t, x, y);
    ctx.beginPath();
    ctx.arc(cx, cy, r, 0, 2 * Math.PI);
    ctx.fill();
    if (label) {
      ctx.font = "12px monospace";
      ctx.fillText(`${label}${i}`, cx + 8, cy - 8);
    }
  });
}

export function drawScene(ctx: CanvasRenderingContext2D, scene: Scene): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, width, height);
  const t = sceneTransform(scene, width, height);

  const polygon = controlPolygon(scene.document);
  polyline(ctx, t, polygon, "#9ecae1", 1.5, [6, 4]);
  polyline(ctx, t, scene.samples, "#111111", 2.2);
  dots(ctx, t, polygon, "#1f77b4", 5, "P");

  if (scene.overlay) {
    polyline(ctx, t, scene.overlay, "#d62728", 1.5, [3, 3]);
    dots(ctx, t, scene.overlay, "#d62728", 4, "Q");
  }
  if (scene.join) {
    polyline(ctx, t, scene.join.polygon, "#a1d99b", 1.5, [6, 4]);
    polyline(ctx, t, scene.join.samples, "#2ca02c", 2.2);
    dots(ctx, t, scene.join.polygon, "#2ca02c", 4);
    // tangency marker at the junction
    const junction = polygon[polygon.length - 1];
    const [jx, jy] = toPixel(t, junction[0], junction[1]);
    ctx.strokeStyle = "#9467bd";
    ctx.beginPath();
    ctx.arc(jx, jy, 9, 0, 2 * Math.PI);
    ctx.stroke();
  }
}
