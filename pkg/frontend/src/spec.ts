/** Builders for the spec-language source text the CLI consumes. */

export interface RuleSpec {
  premises: string[];
  head: string;
}

export interface LogicSpec {
  name: string;
  elements: string[];
  rules?: RuleSpec[];
}

export interface MapSpec {
  name: string;
  from: string;
  to: string;
  pairs: [string, string][];
}

const IDENT = /^[A-Za-z_][A-Za-z0-9_]*$/;
const KEYWORDS = new Set(["logic", "map", "elements", "rule", "end", ":", "->"]);

function checkIdent(name: string): string {
  if (!IDENT.test(name) || KEYWORDS.has(name)) {
    throw new Error(`not a valid identifier: ${JSON.stringify(name)}`);
  }
  return name;
}

export function renderSpec(logics: LogicSpec[], maps: MapSpec[] = []): string {
  const chunks: string[] = [];
  for (const logic of logics) {
    const lines = [`logic ${checkIdent(logic.name)}`];
    lines.push(["  elements", ...logic.elements.map(checkIdent)].join(" "));
    for (const rule of logic.rules ?? []) {
      lines.push(
        ["  rule", ...rule.premises.map(checkIdent), "->", checkIdent(rule.head)].join(" "),
      );
    }
    lines.push("end");
    chunks.push(lines.join("\n"));
  }
  for (const map of maps) {
    const lines = [
      `map ${checkIdent(map.name)} : ${checkIdent(map.from)} -> ${checkIdent(map.to)}`,
    ];
    for (const [source, target] of map.pairs) {
      lines.push(`  ${checkIdent(source)} -> ${checkIdent(target)}`);
    }
    lines.push("end");
    chunks.push(lines.join("\n"));
  }
  return chunks.join("\n") + (chunks.length > 0 ? "\n" : "");
}
