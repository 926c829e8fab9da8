/** render(csv, outDir): one image per (family, variant) in the report.
 *
 * Vector SVG by default, PNG with raster=true; files are named
 * `<family>_<variant>.<ext>`.  An empty report renders nothing and only
 * warns; a header missing schema columns is an error naming them.
 */

import { mkdir, readFile, writeFile } from "node:fs/promises";
import * as path from "node:path";

import { parseBenchCsv } from "./csv.js";
import { layoutChart } from "./layout.js";
import { groupCharts } from "./model.js";
import { sceneToPng } from "./png.js";
import { sceneToSvg } from "./svg.js";

export interface RenderOptions {
  logY?: boolean;
  raster?: boolean;
}

export interface RenderResult {
  /** Absolute paths of the images written, in write order. */
  written: string[];
  warnings: string[];
}

export async function render(
  csvPath: string,
  outDir: string,
  options: RenderOptions = {},
): Promise<RenderResult> {
  const text = await readFile(csvPath, "utf-8");
  const rows = parseBenchCsv(text);
  if (rows.length === 0) {
    return {
      written: [],
      warnings: [`${csvPath} has no data rows; nothing to render`],
    };
  }
  const { charts, warnings } = groupCharts(rows);
  if (charts.length === 0) {
    warnings.push(`${csvPath} has no successful runs; nothing to render`);
    return { written: [], warnings };
  }
  await mkdir(outDir, { recursive: true });
  const written: string[] = [];
  for (const chart of charts) {
    const scene = layoutChart(chart, { logY: options.logY === true });
    const ext = options.raster === true ? "png" : "svg";
    const file = path.resolve(outDir, `${chart.family}_${chart.variant}.${ext}`);
    if (options.raster === true) {
      await writeFile(file, sceneToPng(scene));
    } else {
      await writeFile(file, sceneToSvg(scene), "utf-8");
    }
    written.push(file);
  }
  return { written, warnings };
}
