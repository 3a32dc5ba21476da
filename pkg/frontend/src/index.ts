export {
  UlogClient,
  UlogError,
  type ClientOptions,
  type LawsOptions,
  type RunResult,
} from "./client.js";
export {
  OutputFormatError,
  parseClassify,
  parseClosureTable,
  parseCoalgebraView,
  parseCount,
  parseFamily,
  parseLawReport,
  parseSubset,
  type ClassifyFlags,
  type ClosureLine,
  type CoalgebraLine,
  type LawLine,
} from "./output.js";
export { renderSpec, type LogicSpec, type MapSpec, type RuleSpec } from "./spec.js";
