/**
 * A thin typed client around the ulog CLI.
 *
 * The CLI is the only interface used: every method spawns the tool and
 * parses its plain-text output.  The command defaults to `ulog` on PATH and
 * can be overridden with the ULOG_CMD environment variable (split on
 * whitespace) or per instance.
 */

import { spawnSync } from "node:child_process";

import {
  ClassifyFlags,
  ClosureLine,
  CoalgebraLine,
  LawLine,
  parseClassify,
  parseClosureTable,
  parseCoalgebraView,
  parseCount,
  parseLawReport,
} from "./output.js";

export interface RunResult {
  status: number;
  stdout: string;
  stderr: string;
}

export interface ClientOptions {
  command?: string[];
  env?: Record<string, string>;
}

export interface LawsOptions {
  maxSize?: number;
  samples?: number;
  seed?: number;
}

export class UlogError extends Error {
  constructor(
    message: string,
    public readonly result: RunResult,
  ) {
    super(message);
  }
}

export class UlogClient {
  private readonly command: string[];
  private readonly env: Record<string, string>;

  constructor(options: ClientOptions = {}) {
    const fromEnv = process.env.ULOG_CMD?.split(/\s+/).filter(Boolean);
    this.command = options.command ?? fromEnv ?? ["ulog"];
    this.env = { ...(process.env as Record<string, string>), ...options.env };
  }

  run(args: string[]): RunResult {
    const [head, ...rest] = this.command;
    if (head === undefined) {
      throw new Error("empty command");
    }
    const proc = spawnSync(head, [...rest, ...args], {
      encoding: "utf-8",
      env: this.env,
      timeout: 600_000,
    });
    if (proc.error !== undefined) {
      throw proc.error;
    }
    return { status: proc.status ?? -1, stdout: proc.stdout, stderr: proc.stderr };
  }

  private expectOk(args: string[]): string {
    const result = this.run(args);
    if (result.status !== 0) {
      throw new UlogError(
        `ulog ${args.join(" ")} exited ${result.status}: ${result.stderr.trim()}`,
        result,
      );
    }
    return result.stdout;
  }

  check(file: string): void {
    this.expectOk(["check", file]);
  }

  close(file: string, logic: string): ClosureLine[] {
    return parseClosureTable(this.expectOk(["close", file, "--logic", logic]));
  }

  viewEntailments(file: string, logic: string): string[] {
    return this.expectOk(["view", file, "--logic", logic, "--as", "rel"])
      .split("\n")
      .filter((line) => line !== "");
  }

  viewClosure(file: string, logic: string): ClosureLine[] {
    return parseClosureTable(
      this.expectOk(["view", file, "--logic", logic, "--as", "closure"]),
    );
  }

  viewCoalgebra(file: string, logic: string): CoalgebraLine[] {
    return parseCoalgebraView(
      this.expectOk(["view", file, "--logic", logic, "--as", "coalg"]),
    );
  }

  classify(file: string, map: string): ClassifyFlags {
    return parseClassify(this.expectOk(["classify", file, "--map", map]));
  }

  sum(file: string, logics: string[]): ClosureLine[] {
    return parseClosureTable(
      this.expectOk(["sum", file, "--logics", logics.join(",")]),
    );
  }

  countUpsets(n: number): number {
    return parseCount(this.expectOk(["count", "upsets", "--n", String(n)]));
  }

  countLogics(n: number): number {
    return parseCount(this.expectOk(["count", "logics", "--n", String(n)]));
  }

  /** Runs the law suite; a failing suite is a result, not an exception. */
  laws(options: LawsOptions = {}): { ok: boolean; laws: LawLine[] } {
    const args = ["laws"];
    if (options.maxSize !== undefined) args.push("--max-size", String(options.maxSize));
    if (options.samples !== undefined) args.push("--samples", String(options.samples));
    if (options.seed !== undefined) args.push("--seed", String(options.seed));
    const result = this.run(args);
    if (result.status !== 0 && result.status !== 1) {
      throw new UlogError(`ulog laws exited ${result.status}`, result);
    }
    const laws = parseLawReport(result.stdout);
    return { ok: result.status === 0, laws };
  }
}
