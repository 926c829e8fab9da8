/** Serialize a Scene to SVG.  Coordinates are written with two decimals
 * so output is byte-deterministic; stacked phase segments carry data-*
 * attributes with their source numbers for downstream checking.
 */

import type { Scene } from "./layout.js";

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function num(value: number): string {
  return value.toFixed(2);
}

export function sceneToSvg(scene: Scene): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${scene.width}" ` +
      `height="${scene.height}" viewBox="0 0 ${scene.width} ${scene.height}">`,
  );
  parts.push(
    `<rect x="0" y="0" width="${scene.width}" height="${scene.height}" fill="#ffffff"/>`,
  );
  for (const line of scene.lines) {
    parts.push(
      `<line x1="${num(line.x1)}" y1="${num(line.y1)}" x2="${num(line.x2)}" ` +
        `y2="${num(line.y2)}" stroke="${line.stroke}" stroke-width="1"/>`,
    );
  }
  for (const rect of scene.rects) {
    const data =
      rect.data === undefined
        ? ""
        : ` data-engine="${escapeXml(rect.data.engine)}"` +
          ` data-category="${escapeXml(rect.data.category)}"` +
          ` data-phase="${escapeXml(rect.data.phase)}"` +
          ` data-ms="${rect.data.ms.toFixed(6)}"`;
    parts.push(
      `<rect x="${num(rect.x)}" y="${num(rect.y)}" width="${num(rect.w)}" ` +
        `height="${num(rect.h)}" fill="${rect.fill}"${data}/>`,
    );
  }
  for (const text of scene.texts) {
    const anchor =
      text.anchor === "start" ? "" : ` text-anchor="${text.anchor}"`;
    parts.push(
      `<text x="${num(text.x)}" y="${num(text.y)}" font-family="sans-serif" ` +
        `font-size="${text.size}" fill="${text.fill}"${anchor}>` +
        `${escapeXml(text.text)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
