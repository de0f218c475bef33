// Design session state: the current curve document, snapshot undo history,
// and latest-wins tagging so stale server responses never repaint.

import type { CurveDocument } from "./api.js";

const MAX_HISTORY = 200;

function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value));
}

export function deepEqual(a: unknown, b: unknown): boolean {
  return JSON.stringify(a) === JSON.stringify(b);
}

export class DesignSession {
  private undoStack: CurveDocument[] = [];
  private redoStack: CurveDocument[] = [];
  private current: CurveDocument;

  // Monotone request tags per topic; a response repaints only if it still
  // carries the newest tag for its topic.
  private tags = new Map<string, number>();

  constructor(initial: CurveDocument) {
    this.current = clone(initial);
  }

  get document(): CurveDocument {
    return clone(this.current);
  }

  // Record the current document and switch to the new one.
  apply(next: CurveDocument): void {
    this.undoStack.push(clone(this.current));
    if (this.undoStack.length > MAX_HISTORY) this.undoStack.shift();
    this.redoStack = [];
    this.current = clone(next);
  }

  // Replace without recording (used while a drag is in flight; the drag
  // records one undo entry at pointer-down).
  replace(next: CurveDocument): void {
    this.current = clone(next);
  }

  canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  undo(): CurveDocument | null {
    const prev = this.undoStack.pop();
    if (!prev) return null;
    this.redoStack.push(clone(this.current));
    this.current = prev;
    return clone(prev);
  }

  redo(): CurveDocument | null {
    const next = this.redoStack.pop();
    if (!next) return null;
    this.undoStack.push(clone(this.current));
    this.current = next;
    return clone(next);
  }

  nextTag(topic: string): number {
    const tag = (this.tags.get(topic) ?? 0) + 1;
    this.tags.set(topic, tag);
    return tag;
  }

  isCurrent(topic: string, tag: number): boolean {
    return this.tags.get(topic) === tag;
  }
}

// Trailing-edge debounce used to coalesce drag events into one request.
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
  timers: { set: typeof setTimeout; clear: typeof clearTimeout } = {
    set: setTimeout,
    clear: clearTimeout,
  },
): (...args: A) => void {
  let handle: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (handle !== undefined) timers.clear(handle);
    handle = timers.set(() => fn(...args), waitMs);
  };
}
