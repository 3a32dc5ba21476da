/**
 * Parsers for the ulog CLI's plain-text output formats.
 *
 * Every format is line-oriented and deterministic, so the parsers are strict:
 * anything that does not match the documented shape throws.
 */

export interface ClosureLine {
  subset: string[];
  closure: string[];
}

export interface ClassifyFlags {
  preserving: boolean;
  conservative: boolean;
  continuous: boolean;
  initial: boolean;
  open: boolean;
  progressive: boolean;
}

export interface LawLine {
  id: string;
  cases: number;
  ok: boolean;
  witness?: string;
}

export interface CoalgebraLine {
  element: string;
  upset: string[][];
}

export class OutputFormatError extends Error {}

/** "{a,b}" -> ["a", "b"]; "{}" -> [] */
export function parseSubset(text: string): string[] {
  const m = /^\{(.*)\}$/.exec(text.trim());
  if (m === null) {
    throw new OutputFormatError(`not a subset: ${JSON.stringify(text)}`);
  }
  const body = m[1] ?? "";
  return body === "" ? [] : body.split(",");
}

/** "{{a},{a,b}}" -> [["a"], ["a","b"]]; "{}" -> [] */
export function parseFamily(text: string): string[][] {
  const trimmed = text.trim();
  if (!trimmed.startsWith("{") || !trimmed.endsWith("}")) {
    throw new OutputFormatError(`not a family: ${JSON.stringify(text)}`);
  }
  const body = trimmed.slice(1, -1);
  if (body === "") {
    return [];
  }
  const members: string[] = [];
  let depth = 0;
  let start = 0;
  for (let i = 0; i < body.length; i += 1) {
    const ch = body[i];
    if (ch === "{") depth += 1;
    if (ch === "}") depth -= 1;
    if (ch === "," && depth === 0) {
      members.push(body.slice(start, i));
      start = i + 1;
    }
  }
  members.push(body.slice(start));
  return members.map(parseSubset);
}

export function parseClosureTable(text: string): ClosureLine[] {
  return nonEmptyLines(text).map((line) => {
    const parts = line.split(" => ");
    if (parts.length !== 2) {
      throw new OutputFormatError(`bad closure line: ${JSON.stringify(line)}`);
    }
    return { subset: parseSubset(parts[0]!), closure: parseSubset(parts[1]!) };
  });
}

const CLASSIFY_KEYS: readonly (keyof ClassifyFlags)[] = [
  "preserving",
  "conservative",
  "continuous",
  "initial",
  "open",
  "progressive",
];

export function parseClassify(text: string): ClassifyFlags {
  const lines = nonEmptyLines(text);
  if (lines.length !== CLASSIFY_KEYS.length) {
    throw new OutputFormatError(`expected 6 classifier lines, got ${lines.length}`);
  }
  const flags: Partial<Record<keyof ClassifyFlags, boolean>> = {};
  lines.forEach((line, i) => {
    const key = CLASSIFY_KEYS[i]!;
    const m = new RegExp(`^${key}: (true|false)$`).exec(line);
    if (m === null) {
      throw new OutputFormatError(`bad classifier line: ${JSON.stringify(line)}`);
    }
    flags[key] = m[1] === "true";
  });
  return flags as ClassifyFlags;
}

export function parseLawReport(text: string): LawLine[] {
  return nonEmptyLines(text).map((line) => {
    const m = /^LAW (\S+) (\d+) (pass|FAIL)(?: (.*))?$/.exec(line);
    if (m === null) {
      throw new OutputFormatError(`bad law line: ${JSON.stringify(line)}`);
    }
    const entry: LawLine = {
      id: m[1]!,
      cases: Number(m[2]),
      ok: m[3] === "pass",
    };
    if (m[4] !== undefined) {
      entry.witness = m[4];
    }
    return entry;
  });
}

/** "alpha(a) = {{a},{a,b}}" lines from `view --as coalg`. */
export function parseCoalgebraView(text: string): CoalgebraLine[] {
  return nonEmptyLines(text).map((line) => {
    const m = /^alpha\(([^)]*)\) = (.*)$/.exec(line);
    if (m === null) {
      throw new OutputFormatError(`bad coalgebra line: ${JSON.stringify(line)}`);
    }
    return { element: m[1]!, upset: parseFamily(m[2]!) };
  });
}

export function parseCount(text: string): number {
  const lines = nonEmptyLines(text);
  if (lines.length !== 1 || !/^\d+$/.test(lines[0]!)) {
    throw new OutputFormatError(`expected one integer, got ${JSON.stringify(text)}`);
  }
  return Number(lines[0]);
}

function nonEmptyLines(text: string): string[] {
  return text.split("\n").filter((line) => line.trim() !== "");
}
