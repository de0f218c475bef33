// Application wiring: one design session, one scene canvas, one diagram
// editor, elevation and join composers. Every action round-trips through
// the JSON service and repaints; stale responses are dropped by tag.

import { ApiClient, ApiError, CurveDocument, ElevateResponse } from "./api.js";
import {
  controlPolygon,
  drawScene,
  hitControlPoint,
  samplesToPoints,
  Scene,
  sceneTransform,
} from "./canvas.js";
import { clickAction, drawDiagram } from "./diagram.js";
import { checkOverlay } from "./overlay.js";
import { Partition, partitionLabel } from "./partition.js";
import { add, div, formatRat, mul, parseRat, rat, sub } from "./rational.js";
import { DesignSession, debounce } from "./session.js";
import { fromPixel } from "./transform.js";

const SAMPLES = 96;

const INITIAL: CurveDocument = {
  partition: [2, 1],
  n: 3,
  interval: ["1", "2"],
  points: [
    ["0", "0"],
    ["2", "4"],
    ["6", "4"],
    ["8", "0"],
  ],
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

// Follower polygon defaults: continue from Q0 along the solved leg, so the
// composite renders immediately; the user drags the rest afterwards.
function defaultFollowerPoints(doc: CurveDocument, q1: string[]): string[][] {
  const q0 = doc.points[doc.points.length - 1];
  const leg = q1.map((x, d) => sub(parseRat(x), parseRat(q0[d])));
  const points = [q0.slice(), q1.slice()];
  for (let i = 2; i <= doc.n; i++) {
    points.push(
      q0.map((x, d) =>
        formatRat(add(parseRat(x), mul(rat(BigInt(i)), leg[d]))),
      ),
    );
  }
  return points;
}

function main(): void {
  const api = new ApiClient(
    new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8776",
  );
  const session = new DesignSession(INITIAL);

  const sceneCanvas = el<HTMLCanvasElement>("scene");
  const diagramCanvas = el<HTMLCanvasElement>("diagram");
  const status = el<HTMLSpanElement>("status");
  const latency = el<HTMLSpanElement>("latency");
  const shapeLabel = el<HTMLSpanElement>("shape-label");
  const exponentsLabel = el<HTMLSpanElement>("exponents");
  const targetSelect = el<HTMLSelectElement>("elevation-targets");

  const sceneCtx = sceneCanvas.getContext("2d")!;
  const diagramCtx = diagramCanvas.getContext("2d")!;

  const scene: Scene = { document: session.document, samples: [] };
  let flash = false;
  let elevation: { response: ElevateResponse } | null = null;
  const latencies: number[] = [];

  function report(text: string, isError = false): void {
    status.textContent = text;
    status.style.color = isError ? "#d62728" : "#333";
  }

  function paint(): void {
    scene.document = session.document;
    drawScene(sceneCtx, scene);
    drawDiagram(diagramCtx, scene.document.partition, flash);
    shapeLabel.textContent = partitionLabel(scene.document.partition);
    (el<HTMLInputElement>("interval-a")).value = scene.document.interval[0];
    (el<HTMLInputElement>("interval-b")).value = scene.document.interval[1];
  }

  function recordLatency(ms: number): void {
    latencies.push(ms);
    if (latencies.length > 40) latencies.shift();
    const sorted = [...latencies].sort((a, b) => a - b);
    const median = sorted[Math.floor(sorted.length / 2)];
    latency.textContent = `${ms.toFixed(0)} ms (median ${median.toFixed(0)} ms)`;
  }

  // Fetch samples for the current document; drop the response if a newer
  // request for the same topic has been issued meanwhile.
  function refresh(): void {
    const doc = session.document;
    const tag = session.nextTag("scene");
    const t0 = performance.now();
    api
      .sample(doc, SAMPLES)
      .then((resp) => {
        if (!session.isCurrent("scene", tag)) return;
        scene.samples = samplesToPoints(resp);
        paint();
        recordLatency(performance.now() - t0);
        const first = scene.samples[0];
        const last = scene.samples[scene.samples.length - 1];
        const polygon = controlPolygon(doc);
        // endpoint coincidence in world coordinates implies it in pixels
        const okEnds =
          Math.hypot(first[0] - polygon[0][0], first[1] - polygon[0][1]) < 1e-9 &&
          Math.hypot(
            last[0] - polygon[polygon.length - 1][0],
            last[1] - polygon[polygon.length - 1][1],
          ) < 1e-9;
        report(okEnds ? "ok" : "warning: endpoint drift in decimals");
        refreshElevationTargets();
      })
      .catch((err) => reportApi(err));
  }

  function reportApi(err: unknown): void {
    if (err instanceof ApiError) {
      report(`server ${err.status}: ${err.message}`, true);
    } else {
      report(`service unreachable: ${err}`, true);
    }
  }

  function refreshElevationTargets(): void {
    const doc = session.document;
    const tag = session.nextTag("targets");
    api
      .elevationPartitions(doc.partition, doc.n, 2)
      .then((resp) => {
        if (!session.isCurrent("targets", tag)) return;
        targetSelect.innerHTML = "";
        for (const target of resp.partitions) {
          const option = document.createElement("option");
          option.value = JSON.stringify(target);
          option.textContent = partitionLabel(target);
          targetSelect.appendChild(option);
        }
      })
      .catch(() => undefined);
  }

  // Basis metadata (the exponent list) changes only with partition, order,
  // or interval; fetched separately from per-drag sampling.
  function refreshBasis(): void {
    const doc = session.document;
    const tag = session.nextTag("basis");
    fetch(api.base + "/v1/basis", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        partition: doc.partition,
        n: doc.n,
        interval: doc.interval,
      }),
    })
      .then((resp) => resp.json())
      .then((body) => {
        if (!session.isCurrent("basis", tag)) return;
        if (Array.isArray(body.exponents)) {
          exponentsLabel.textContent = `span(1, ${body.exponents
            .map((e: number) => `t^${e}`)
            .join(", ")})`;
        }
      })
      .catch(() => undefined);
  }

  function applyDocument(next: CurveDocument): void {
    elevation = null;
    scene.overlay = undefined;
    scene.join = undefined;
    session.apply(next);
    paint();
    refresh();
    refreshBasis();
  }

  // -- diagram editor -------------------------------------------------------

  diagramCanvas.addEventListener("pointerdown", (ev) => {
    const rect = diagramCanvas.getBoundingClientRect();
    const doc = session.document;
    const action = clickAction(
      doc.partition,
      ev.clientX - rect.left,
      ev.clientY - rect.top,
    );
    const legal =
      action.kind !== "illegal" &&
      action.next.length <= doc.n; // curve order caps the number of rows
    if (!legal) {
      flash = true;
      paint();
      setTimeout(() => {
        flash = false;
        paint();
      }, 180);
      return;
    }
    applyDocument({ ...doc, partition: action.next });
  });

  // -- control point dragging ------------------------------------------------

  let dragging: number | null = null;
  const debouncedRefresh = debounce(refresh, 60);

  sceneCanvas.addEventListener("pointerdown", (ev) => {
    const rect = sceneCanvas.getBoundingClientRect();
    const t = sceneTransform(scene, sceneCanvas.width, sceneCanvas.height);
    const hit = hitControlPoint(
      scene,
      t,
      ev.clientX - rect.left,
      ev.clientY - rect.top,
    );
    if (hit === null) return;
    dragging = hit;
    session.apply(session.document); // one undo entry per drag
    sceneCanvas.setPointerCapture(ev.pointerId);
  });

  sceneCanvas.addEventListener("pointermove", (ev) => {
    if (dragging === null) return;
    const rect = sceneCanvas.getBoundingClientRect();
    const t = sceneTransform(scene, sceneCanvas.width, sceneCanvas.height);
    const [wx, wy] = fromPixel(t, ev.clientX - rect.left, ev.clientY - rect.top);
    const doc = session.document;
    const points = doc.points.map((p) => p.slice());
    // quantize to 1/64 so documents stay exact and human-readable
    points[dragging] = [
      formatRat(parseRat((Math.round(wx * 64) / 64).toString())),
      formatRat(parseRat((Math.round(wy * 64) / 64).toString())),
    ];
    session.replace({ ...doc, points });
    scene.overlay = undefined;
    scene.join = undefined;
    elevation = null;
    paint();
    debouncedRefresh();
  });

  const endDrag = () => {
    dragging = null;
  };
  sceneCanvas.addEventListener("pointerup", endDrag);
  sceneCanvas.addEventListener("pointercancel", endDrag);

  // -- interval --------------------------------------------------------------

  el<HTMLButtonElement>("apply-interval").addEventListener("click", () => {
    const a = el<HTMLInputElement>("interval-a").value.trim();
    const b = el<HTMLInputElement>("interval-b").value.trim();
    applyDocument({ ...session.document, interval: [a, b] });
  });

  // -- elevation --------------------------------------------------------------

  el<HTMLButtonElement>("elevate-preview").addEventListener("click", () => {
    const doc = session.document;
    const target = JSON.parse(targetSelect.value || "[]") as Partition;
    api
      .elevate(doc, target)
      .then((resp) => {
        elevation = { response: resp };
        scene.overlay = resp.points.map(
          (p) => [p.decimal[0], p.decimal[1]] as [number, number],
        );
        const checks = checkOverlay(doc, resp, sceneCanvas.width);
        const worst = Math.max(0, ...checks.map((c) => c.distancePx));
        const exact = checks.every((c) => c.exactOnSegment && c.convex);
        report(
          `elevation preview: lifted points on polygon segments ` +
            `(exact: ${exact}, worst pixel drift ${worst.toFixed(4)}px)`,
        );
        paint();
      })
      .catch((err) => reportApi(err));
  });

  el<HTMLButtonElement>("elevate-apply").addEventListener("click", () => {
    if (!elevation) {
      report("nothing to apply: preview an elevation first", true);
      return;
    }
    applyDocument(elevation.response.curve);
  });

  // -- join composer -----------------------------------------------------------

  el<HTMLButtonElement>("join-solve").addEventListener("click", () => {
    const doc = session.document;
    const mu = JSON.parse(
      el<HTMLInputElement>("join-mu").value.trim() || "[]",
    ) as Partition;
    const rho = el<HTMLInputElement>("join-rho").value.trim();
    const cText = el<HTMLInputElement>("join-c").value.trim();
    // rho mode: the leg relation P_n - P_{n-1} = rho (Q_1 - Q_0) fixes Q_1.
    const solved = rho
      ? api.joinInterval(doc, mu, rho).then((resp) => {
          const q0 = doc.points[doc.points.length - 1];
          const prev = doc.points[doc.points.length - 2];
          const r = parseRat(rho);
          const q1 = q0.map((x, d) => {
            const leg = sub(parseRat(x), parseRat(prev[d]));
            return formatRat(add(parseRat(x), div(leg, r)));
          });
          return { c: resp.c.exact, q1 };
        })
      : api.joinPoint(doc, mu, cText).then((resp) => ({
          c: cText,
          q1: resp.q1.exact,
        }));
    solved
      .then(({ c, q1 }) => {
        const follower: CurveDocument = {
          partition: mu,
          n: doc.n,
          interval: [doc.interval[1], c],
          points: defaultFollowerPoints(doc, q1),
        };
        return api.sample(follower, SAMPLES).then((resp) => {
          scene.join = {
            samples: samplesToPoints(resp),
            polygon: controlPolygon(follower),
          };
          report(`join composed over [${follower.interval[0]}, ${c}]`);
          paint();
        });
      })
      .catch((err) => reportApi(err));
  });

  // -- undo / redo ---------------------------------------------------------------

  el<HTMLButtonElement>("undo").addEventListener("click", () => {
    if (session.undo()) {
      elevation = null;
      scene.overlay = undefined;
      scene.join = undefined;
      paint();
      refresh();
    }
  });
  el<HTMLButtonElement>("redo").addEventListener("click", () => {
    if (session.redo()) {
      paint();
      refresh();
    }
  });

  paint();
  refresh();
  refreshBasis();
  api
    .health()
    .then(() => report("connected"))
    .catch(() => report("start the service: muntzcad serve", true));
}

main();
