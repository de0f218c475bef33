// Young diagram model for the shape editor. A partition is a list of
// non-increasing positive row lengths; the editor only ever offers corner
// moves that keep it one.

export type Partition = number[];

export function isPartition(parts: number[]): boolean {
  return parts.every(
    (p, i) => Number.isInteger(p) && p > 0 && (i === 0 || parts[i - 1] >= p),
  );
}

export function normalize(parts: number[]): Partition {
  const out = parts.filter((p) => p > 0);
  if (!isPartition(out)) throw new Error(`not a partition: ${parts}`);
  return out;
}

export function weight(parts: Partition): number {
  return parts.reduce((a, b) => a + b, 0);
}

// Rows (0-based) where one box may be appended. Row 0 is always legal;
// an existing row i needs strictly shorter length than the row above;
// a fresh row below the diagram is always legal.
export function addableRows(parts: Partition): number[] {
  const rows: number[] = [0];
  for (let i = 1; i < parts.length; i++) {
    if (parts[i] < parts[i - 1]) rows.push(i);
  }
  if (parts.length > 0) rows.push(parts.length);
  return rows;
}

// Rows (0-based) whose last box may be removed: the row must be strictly
// longer than the one below.
export function removableRows(parts: Partition): number[] {
  const rows: number[] = [];
  for (let i = 0; i < parts.length; i++) {
    const below = i + 1 < parts.length ? parts[i + 1] : 0;
    if (parts[i] > below) rows.push(i);
  }
  return rows;
}

export function addBox(parts: Partition, row: number): Partition {
  if (!addableRows(parts).includes(row)) {
    throw new Error(`cannot add a box at row ${row} of (${parts})`);
  }
  const out = parts.slice();
  if (row === parts.length) out.push(1);
  else out[row] += 1;
  return out;
}

export function removeBox(parts: Partition, row: number): Partition {
  if (!removableRows(parts).includes(row)) {
    throw new Error(`cannot remove a box at row ${row} of (${parts})`);
  }
  const out = parts.slice();
  out[row] -= 1;
  return normalize(out);
}

// A whole-column / whole-row move used by the scripted shape experiments.
export function addColumn(parts: Partition): Partition {
  const out = parts.map((p) => p + 1);
  if (out.length === 0) out.push(1);
  return out;
}

export function addToFirstRow(parts: Partition): Partition {
  return parts.length === 0 ? [1] : [parts[0] + 1, ...parts.slice(1)];
}

export function partitionLabel(parts: Partition): string {
  return parts.length ? `(${parts.join(",")})` : "()";
}
