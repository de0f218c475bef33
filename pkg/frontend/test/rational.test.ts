import { describe, expect, it } from "vitest";

import {
  add,
  cmp,
  div,
  eq,
  formatRat,
  mul,
  parseRat,
  rat,
  sub,
  toNumber,
} from "../src/rational.js";

describe("exact rationals", () => {
  it("parses fraction, integer, and decimal text exactly", () => {
    expect(eq(parseRat("3/4"), rat(3n, 4n))).toBe(true);
    expect(eq(parseRat("-7"), rat(-7n))).toBe(true);
    expect(eq(parseRat("0.1"), rat(1n, 10n))).toBe(true);
    expect(eq(parseRat("-2.25"), rat(-9n, 4n))).toBe(true);
    expect(eq(parseRat("507/140"), rat(507n, 140n))).toBe(true);
  });

  it("normalizes sign and lowest terms", () => {
    expect(formatRat(rat(4n, -8n))).toBe("-1/2");
    expect(formatRat(rat(8n, 4n))).toBe("2");
  });

  it("field operations are exact", () => {
    const a = parseRat("1/3");
    const b = parseRat("1/6");
    expect(formatRat(add(a, b))).toBe("1/2");
    expect(formatRat(sub(a, b))).toBe("1/6");
    expect(formatRat(mul(a, b))).toBe("1/18");
    expect(formatRat(div(a, b))).toBe("2");
  });

  it("compares without rounding", () => {
    expect(cmp(parseRat("1/3"), parseRat("333333333333333333/1000000000000000000"))).toBe(1);
  });

  it("converts to number for rendering", () => {
    expect(toNumber(parseRat("3/2"))).toBe(1.5);
    expect(toNumber(parseRat("-1/4"))).toBe(-0.25);
  });

  it("rejects zero denominators", () => {
    expect(() => rat(1n, 0n)).toThrow();
    expect(() => div(rat(1n), rat(0n))).toThrow();
  });
});
