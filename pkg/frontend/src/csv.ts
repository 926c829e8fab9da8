/** Reading the bench CSV schema.
 *
 * The report starts with `#` comment lines, then a header naming fifteen
 * columns, then one row per (entry, phase).  Values never contain commas
 * or quotes, so splitting on commas is exact.  Rows for failed runs keep
 * their identity cells but leave every measurement cell empty.
 */

export const REQUIRED_COLUMNS = [
  "family",
  "n",
  "k",
  "h",
  "variant",
  "engine",
  "phase",
  "time_ms",
  "time_sd",
  "rec_firings",
  "base_firings",
  "probes",
  "iterations",
  "tables_created",
  "paths",
] as const;

export interface BenchRow {
  family: string;
  n: number | null;
  k: number | null;
  h: number | null;
  variant: string;
  engine: string;
  phase: string;
  timeMs: number | null;
  timeSd: number | null;
  recFirings: number | null;
  baseFirings: number | null;
  probes: number | null;
  iterations: number | null;
  tablesCreated: number | null;
  paths: number | null;
}

function intOrNull(cell: string | undefined): number | null {
  if (cell === undefined || cell === "") {
    return null;
  }
  const value = Number(cell);
  if (!Number.isInteger(value)) {
    throw new Error(`bench CSV has a non-integer count ${JSON.stringify(cell)}`);
  }
  return value;
}

function floatOrNull(cell: string | undefined): number | null {
  if (cell === undefined || cell === "") {
    return null;
  }
  const value = Number(cell);
  if (!Number.isFinite(value)) {
    throw new Error(`bench CSV has a non-numeric time ${JSON.stringify(cell)}`);
  }
  return value;
}

/** Parse the report.  Comment-only or completely empty input yields no
 * rows; a header missing any schema column is an error naming it. */
export function parseBenchCsv(text: string): BenchRow[] {
  const lines = text
    .split(/\r?\n/)
    .map((line) => line.trim())
    .filter((line) => line !== "" && !line.startsWith("#"));
  if (lines.length === 0) {
    return [];
  }
  const header = (lines[0] as string).split(",");
  const position = new Map<string, number>();
  header.forEach((name, index) => position.set(name, index));
  const missing = REQUIRED_COLUMNS.filter((name) => !position.has(name));
  if (missing.length > 0) {
    const quoted = missing.map((name) => JSON.stringify(name)).join(", ");
    throw new Error(`bench CSV is missing column ${quoted}`);
  }
  const rows: BenchRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = (lines[i] as string).split(",");
    const at = (name: string): string | undefined => cells[position.get(name) as number];
    rows.push({
      family: at("family") ?? "",
      n: intOrNull(at("n")),
      k: intOrNull(at("k")),
      h: intOrNull(at("h")),
      variant: at("variant") ?? "",
      engine: at("engine") ?? "",
      phase: at("phase") ?? "",
      timeMs: floatOrNull(at("time_ms")),
      timeSd: floatOrNull(at("time_sd")),
      recFirings: intOrNull(at("rec_firings")),
      baseFirings: intOrNull(at("base_firings")),
      probes: intOrNull(at("probes")),
      iterations: intOrNull(at("iterations")),
      tablesCreated: intOrNull(at("tables_created")),
      paths: intOrNull(at("paths")),
    });
  }
  return rows;
}
