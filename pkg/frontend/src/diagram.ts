// Young diagram editor: draws the current shape, highlights the legal
// corner moves, and maps clicks to add/remove-box actions. Illegal clicks
// flash the frame and produce no action (and therefore no request).

import {
  addableRows,
  addBox,
  Partition,
  removableRows,
  removeBox,
} from "./partition.js";

const CELL = 26;
const PAD = 10;

export type DiagramAction =
  | { kind: "add"; next: Partition }
  | { kind: "remove"; next: Partition }
  | { kind: "illegal" };

export function hitCell(px: number, py: number): [number, number] {
  return [Math.floor((py - PAD) / CELL), Math.floor((px - PAD) / CELL)];
}

// Interpret a click at diagram pixel coordinates.
export function clickAction(parts: Partition, px: number, py: number): DiagramAction {
  const [row, col] = hitCell(px, py);
  if (row < 0 || col < 0) return { kind: "illegal" };
  const len = row < parts.length ? parts[row] : 0;
  if (col === len && addableRows(parts).includes(row)) {
    return { kind: "add", next: addBox(parts, row) };
  }
  if (col === len - 1 && removableRows(parts).includes(row)) {
    return { kind: "remove", next: removeBox(parts, row) };
  }
  return { kind: "illegal" };
}

export function drawDiagram(
  ctx: CanvasRenderingContext2D,
  parts: Partition,
  flash: boolean,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, width, height);

  const removable = new Set(removableRows(parts));
  for (let i = 0; i < parts.length; i++) {
    for (let j = 0; j < parts[i]; j++) {
      const x = PAD + j * CELL;
      const y = PAD + i * CELL;
      const corner = removable.has(i) && j === parts[i] - 1;
      ctx.fillStyle = corner ? "#fdd0a2" : "#c6dbef";
      ctx.fillRect(x, y, CELL - 2, CELL - 2);
      ctx.strokeStyle = "#333333";
      ctx.strokeRect(x + 0.5, y + 0.5, CELL - 2, CELL - 2);
    }
  }
  ctx.setLineDash([4, 3]);
  ctx.strokeStyle = "#2b8a3e";
  for (const row of addableRows(parts)) {
    const col = row < parts.length ? parts[row] : 0;
    ctx.strokeRect(PAD + col * CELL + 0.5, PAD + row * CELL + 0.5, CELL - 2, CELL - 2);
  }
  ctx.setLineDash([]);
  if (flash) {
    ctx.strokeStyle = "#d62728";
    ctx.lineWidth = 3;
    ctx.strokeRect(1.5, 1.5, width - 3, height - 3);
    ctx.lineWidth = 1;
  }
}
