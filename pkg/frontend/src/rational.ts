// Exact rational arithmetic over bigint, for values arriving from the
// service as "p/q" strings. The UI never re-implements curve math; exact
// numbers exist here only so invariants (convex weights, on-segment overlay
// points) can be checked before the final pixel transform.

export interface Rat {
  readonly n: bigint;
  readonly d: bigint; // always > 0
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rat(n: bigint, d: bigint = 1n): Rat {
  if (d === 0n) throw new Error("zero denominator");
  if (d < 0n) {
    n = -n;
    d = -d;
  }
  const g = gcd(n, d) || 1n;
  return { n: n / g, d: d / g };
}

// Accepts "p/q", integer text, or plain decimal text (exact base-10).
export function parseRat(text: string | number): Rat {
  if (typeof text === "number") {
    if (!Number.isFinite(text)) throw new Error(`not a rational: ${text}`);
    return parseRat(text.toString());
  }
  const s = text.trim();
  const slash = s.indexOf("/");
  if (slash >= 0) {
    return rat(BigInt(s.slice(0, slash)), BigInt(s.slice(slash + 1)));
  }
  const dot = s.indexOf(".");
  if (dot >= 0) {
    const frac = s.slice(dot + 1);
    const whole = s.slice(0, dot) || "0";
    const scale = 10n ** BigInt(frac.length);
    const sign = whole.startsWith("-") ? -1n : 1n;
    return rat(BigInt(whole) * scale + sign * BigInt(frac || "0"), scale);
  }
  return rat(BigInt(s));
}

export function add(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d + b.n * a.d, a.d * b.d);
}

export function sub(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d - b.n * a.d, a.d * b.d);
}

export function mul(a: Rat, b: Rat): Rat {
  return rat(a.n * b.n, a.d * b.d);
}

export function div(a: Rat, b: Rat): Rat {
  if (b.n === 0n) throw new Error("division by zero");
  return rat(a.n * b.d, a.d * b.n);
}

export function eq(a: Rat, b: Rat): boolean {
  return a.n === b.n && a.d === b.d;
}

export function cmp(a: Rat, b: Rat): number {
  const diff = a.n * b.d - b.n * a.d;
  return diff === 0n ? 0 : diff > 0n ? 1 : -1;
}

export function isZero(a: Rat): boolean {
  return a.n === 0n;
}

export function toNumber(a: Rat): number {
  // Split to keep precision for large numerators.
  const q = a.n / a.d;
  const r = a.n - q * a.d;
  return Number(q) + Number(r) / Number(a.d);
}

export function formatRat(a: Rat): string {
  return a.d === 1n ? a.n.toString() : `${a.n}/${a.d}`;
}

export const ZERO: Rat = { n: 0n, d: 1n };
export const ONE: Rat = { n: 1n, d: 1n };
