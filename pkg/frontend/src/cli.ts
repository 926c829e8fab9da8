/** Command line: `render <csv> --out <dir> [--log-y] [--raster]`.
 *
 * Exit codes: 0 on success (including an empty report, which only
 * warns), 1 on read/schema errors, 2 on usage errors.
 */

import { render } from "./render.js";

export const USAGE =
  "usage: closurelab-report render <csv> --out <dir> [--log-y] [--raster]";

export async function main(argv: string[]): Promise<number> {
  if (argv[0] !== "render") {
    console.error(USAGE);
    return 2;
  }
  let csvPath: string | null = null;
  let outDir: string | null = null;
  let logY = false;
  let raster = false;
  for (let i = 1; i < argv.length; i++) {
    const arg = argv[i] as string;
    if (arg === "--out") {
      i += 1;
      const value = argv[i];
      if (value === undefined) {
        console.error(USAGE);
        return 2;
      }
      outDir = value;
    } else if (arg === "--log-y") {
      logY = true;
    } else if (arg === "--raster") {
      raster = true;
    } else if (arg.startsWith("-")) {
      console.error(`unknown option ${arg}`);
      console.error(USAGE);
      return 2;
    } else if (csvPath === null) {
      csvPath = arg;
    } else {
      console.error(USAGE);
      return 2;
    }
  }
  if (csvPath === null || outDir === null) {
    console.error(USAGE);
    return 2;
  }
  try {
    const result = await render(csvPath, outDir, { logY, raster });
    for (const warning of result.warnings) {
      console.error(`warning: ${warning}`);
    }
    console.log(`wrote ${result.written.length} image(s) to ${outDir}`);
    return 0;
  } catch (error) {
    console.error(`error: ${error instanceof Error ? error.message : String(error)}`);
    return 1;
  }
}
