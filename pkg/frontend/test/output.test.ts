import { describe, expect, it } from "vitest";

import {
  OutputFormatError,
  parseClassify,
  parseClosureTable,
  parseCoalgebraView,
  parseCount,
  parseFamily,
  parseLawReport,
  parseSubset,
} from "../src/output.js";

describe("parseSubset", () => {
  it("splits brace lists", () => {
    expect(parseSubset("{a,b}")).toEqual(["a", "b"]);
    expect(parseSubset("{}")).toEqual([]);
    expect(parseSubset("{L.a}")).toEqual(["L.a"]);
  });

  it("rejects junk", () => {
    expect(() => parseSubset("a,b")).toThrow(OutputFormatError);
  });
});

describe("parseFamily", () => {
  it("splits nested braces", () => {
    expect(parseFamily("{{a},{a,b}}")).toEqual([["a"], ["a", "b"]]);
    expect(parseFamily("{}")).toEqual([]);
    expect(parseFamily("{{}}")).toEqual([[]]);
  });
});

describe("parseClosureTable", () => {
  it("parses the golden table", () => {
    const text = "{} => {}\n{a} => {a,b}\n{b} => {b}\n{a,b} => {a,b}\n";
    expect(parseClosureTable(text)).toEqual([
      { subset: [], closure: [] },
      { subset: ["a"], closure: ["a", "b"] },
      { subset: ["b"], closure: ["b"] },
      { subset: ["a", "b"], closure: ["a", "b"] },
    ]);
  });

  it("rejects malformed lines", () => {
    expect(() => parseClosureTable("{a} -> {b}")).toThrow(OutputFormatError);
  });
});

describe("parseClassify", () => {
  it("parses the six flags in order", () => {
    const text =
      "preserving: true\nconservative: false\ncontinuous: true\n" +
      "initial: false\nopen: true\nprogressive: true\n";
    expect(parseClassify(text)).toEqual({
      preserving: true,
      conservative: false,
      continuous: true,
      initial: false,
      open: true,
      progressive: true,
    });
  });

  it("rejects wrong order", () => {
    const text =
      "conservative: false\npreserving: true\ncontinuous: true\n" +
      "initial: false\nopen: true\nprogressive: true\n";
    expect(() => parseClassify(text)).toThrow(OutputFormatError);
  });
});

describe("parseLawReport", () => {
  it("parses pass and FAIL lines", () => {
    const text =
      "LAW rel.shuffle 2726 pass\n" +
      "LAW mrel.kleisli_agreement 12 FAIL 1,1,1 r=(2,) s=(2,)\n";
    expect(parseLawReport(text)).toEqual([
      { id: "rel.shuffle", cases: 2726, ok: true },
      {
        id: "mrel.kleisli_agreement",
        cases: 12,
        ok: false,
        witness: "1,1,1 r=(2,) s=(2,)",
      },
    ]);
  });
});

describe("parseCoalgebraView", () => {
  it("parses structure lines", () => {
    const text = "alpha(a) = {{a},{a,b}}\nalpha(b) = {}\n";
    expect(parseCoalgebraView(text)).toEqual([
      { element: "a", upset: [["a"], ["a", "b"]] },
      { element: "b", upset: [] },
    ]);
  });
});

describe("parseCount", () => {
  it("parses a single integer", () => {
    expect(parseCount("168\n")).toBe(168);
    expect(() => parseCount("168\n61\n")).toThrow(OutputFormatError);
  });
});
