/** Integration tests: drive the real CLI and pin its observable behavior. */

import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { UlogClient } from "../src/client.js";
import { renderSpec } from "../src/spec.js";

const REPO_ROOT = resolve(__dirname, "../..");

const client = new UlogClient({
  command: ["python3", "-m", "ulog"],
  env: { PYTHONPATH: join(REPO_ROOT, "src") },
});

let dir: string;
let specPath: string;

beforeAll(() => {
  dir = mkdtempSync(join(tmpdir(), "ulog-frontend-"));
  specPath = join(dir, "demo.ulog");
  const source = renderSpec(
    [
      { name: "L", elements: ["a", "b"], rules: [{ premises: ["a"], head: "b" }] },
      { name: "M", elements: ["x"] },
    ],
    [
      {
        name: "ident",
        from: "L",
        to: "L",
        pairs: [
          ["a", "a"],
          ["b", "b"],
        ],
      },
      {
        name: "collapse",
        from: "L",
        to: "M",
        pairs: [
          ["a", "x"],
          ["b", "x"],
        ],
      },
    ],
  );
  writeFileSync(specPath, source, "utf-8");
});

afterAll(() => {
  rmSync(dir, { recursive: true, force: true });
});

describe("check", () => {
  it("accepts the generated file", () => {
    expect(() => client.check(specPath)).not.toThrow();
  });

  it("reports parse errors with exit code 2", () => {
    const bad = join(dir, "bad.ulog");
    writeFileSync(bad, "logic L elements a!!\nend\n", "utf-8");
    const result = client.run(["check", bad]);
    expect(result.status).toBe(2);
    expect(result.stderr).toMatch(/parse error/);
  });

  it("reports validation errors with exit code 1", () => {
    const bad = join(dir, "invalid.ulog");
    writeFileSync(bad, "logic L elements a\nrule b -> a\nend\n", "utf-8");
    const result = client.run(["check", bad]);
    expect(result.status).toBe(1);
    expect(result.stderr).toMatch(/unknown element 'b'/);
  });
});

describe("close", () => {
  it("prints the golden closure table", () => {
    expect(client.close(specPath, "L")).toEqual([
      { subset: [], closure: [] },
      { subset: ["a"], closure: ["a", "b"] },
      { subset: ["b"], closure: ["b"] },
      { subset: ["a", "b"], closure: ["a", "b"] },
    ]);
  });

  it("agrees with the closure view", () => {
    expect(client.viewClosure(specPath, "L")).toEqual(client.close(specPath, "L"));
  });
});

describe("views", () => {
  it("lists entailment pairs deterministically", () => {
    expect(client.viewEntailments(specPath, "L")).toEqual([
      "{a} |- a",
      "{a} |- b",
      "{b} |- b",
      "{a,b} |- a",
      "{a,b} |- b",
    ]);
  });

  it("prints the coalgebra structure", () => {
    expect(client.viewCoalgebra(specPath, "L")).toEqual([
      { element: "a", upset: [["a"], ["a", "b"]] },
      { element: "b", upset: [["a"], ["b"], ["a", "b"]] },
    ]);
  });
});

describe("classify", () => {
  it("marks the identity with every flag", () => {
    expect(client.classify(specPath, "ident")).toEqual({
      preserving: true,
      conservative: true,
      continuous: true,
      initial: true,
      open: true,
      progressive: true,
    });
  });

  it("keeps the cross-view flags equal on the collapse", () => {
    const flags = client.classify(specPath, "collapse");
    expect(flags.continuous).toBe(flags.preserving);
    expect(flags.initial).toBe(flags.conservative);
    expect(flags.preserving).toBe(true);
    expect(flags.conservative).toBe(false);
  });
});

describe("sum", () => {
  it("prefixes labels with summand names", () => {
    const table = client.sum(specPath, ["L", "M"]);
    expect(table).toHaveLength(8);
    expect(table[1]).toEqual({ subset: ["L.a"], closure: ["L.a", "L.b"] });
    expect(table[7]?.closure).toEqual(["L.a", "L.b", "M.x"]);
  });
});

describe("count", () => {
  it("matches the known sequences", () => {
    expect([0, 1, 2, 3, 4].map((n) => client.countUpsets(n))).toEqual([
      2, 3, 6, 20, 168,
    ]);
    expect([0, 1, 2, 3].map((n) => client.countLogics(n))).toEqual([1, 2, 7, 61]);
  });

  it("rejects counts past the cap", () => {
    expect(client.run(["count", "upsets", "--n", "6"]).status).toBe(1);
  });
});

describe("laws", () => {
  it("runs a quick green suite with at least 25 laws", () => {
    const { ok, laws } = client.laws({ samples: 2, seed: 9 });
    expect(ok).toBe(true);
    expect(laws.length).toBeGreaterThanOrEqual(25);
    expect(laws.every((law) => law.ok && law.cases > 0)).toBe(true);
  });

  it("is deterministic for a fixed seed", () => {
    const first = client.laws({ samples: 2, seed: 42 });
    const second = client.laws({ samples: 2, seed: 42 });
    expect(first).toEqual(second);
  });
});
