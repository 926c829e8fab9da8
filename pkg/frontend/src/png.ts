/** Raster output: paint a Scene into an RGBA buffer and encode it as a
 * PNG (8-bit RGBA, filter 0 rows, one zlib-deflated IDAT).  Text uses
 * the embedded 5x7 font, so the raster is self-contained.
 */

import { deflateSync } from "node:zlib";

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyph } from "./font.js";
import type { Scene } from "./layout.js";

const CRC_TABLE = (() => {
  const table = new Uint32Array(256);
  for (let i = 0; i < 256; i++) {
    let value = i;
    for (let bit = 0; bit < 8; bit++) {
      value = value & 1 ? 0xedb88320 ^ (value >>> 1) : value >>> 1;
    }
    table[i] = value >>> 0;
  }
  return table;
})();

export function crc32(bytes: Uint8Array): number {
  let crc = 0xffffffff;
  for (let i = 0; i < bytes.length; i++) {
    crc = (CRC_TABLE[(crc ^ (bytes[i] as number)) & 0xff] as number) ^ (crc >>> 8);
  }
  return (crc ^ 0xffffffff) >>> 0;
}

function parseColor(hex: string): [number, number, number] {
  return [
    parseInt(hex.slice(1, 3), 16),
    parseInt(hex.slice(3, 5), 16),
    parseInt(hex.slice(5, 7), 16),
  ];
}

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4).fill(255);
  }

  setPixel(x: number, y: number, rgb: [number, number, number]): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) {
      return;
    }
    const at = (y * this.width + x) * 4;
    this.data[at] = rgb[0];
    this.data[at + 1] = rgb[1];
    this.data[at + 2] = rgb[2];
    this.data[at + 3] = 255;
  }

  getPixel(x: number, y: number): [number, number, number] {
    const at = (y * this.width + x) * 4;
    return [
      this.data[at] as number,
      this.data[at + 1] as number,
      this.data[at + 2] as number,
    ];
  }

  fillRect(x: number, y: number, w: number, h: number, hex: string): void {
    const rgb = parseColor(hex);
    const x0 = Math.max(0, Math.round(x));
    const y0 = Math.max(0, Math.round(y));
    const x1 = Math.min(this.width, Math.round(x + w));
    const y1 = Math.min(this.height, Math.round(y + h));
    for (let py = y0; py < y1; py++) {
      for (let px = x0; px < x1; px++) {
        this.setPixel(px, py, rgb);
      }
    }
  }

  line(x1: number, y1: number, x2: number, y2: number, hex: string): void {
    const rgb = parseColor(hex);
    if (Math.round(x1) === Math.round(x2)) {
      const x = Math.round(x1);
      for (let y = Math.round(Math.min(y1, y2)); y <= Math.round(Math.max(y1, y2)); y++) {
        this.setPixel(x, y, rgb);
      }
      return;
    }
    if (Math.round(y1) === Math.round(y2)) {
      const y = Math.round(y1);
      for (let x = Math.round(Math.min(x1, x2)); x <= Math.round(Math.max(x1, x2)); x++) {
        this.setPixel(x, y, rgb);
      }
      return;
    }
    const steps = Math.max(Math.abs(x2 - x1), Math.abs(y2 - y1));
    for (let i = 0; i <= steps; i++) {
      this.setPixel(
        Math.round(x1 + ((x2 - x1) * i) / steps),
        Math.round(y1 + ((y2 - y1) * i) / steps),
        rgb,
      );
    }
  }

  /** Draw text with the 5x7 font; baseline semantics match the scene's
   * text primitives (y is the text baseline). */
  text(
    x: number,
    y: number,
    content: string,
    scale: number,
    anchor: "start" | "middle" | "end",
    hex: string,
  ): void {
    const rgb = parseColor(hex);
    const advance = (GLYPH_WIDTH + 1) * scale;
    const textWidth = content.length * advance - scale;
    let originX = Math.round(x);
    if (anchor === "middle") {
      originX -= Math.round(textWidth / 2);
    } else if (anchor === "end") {
      originX -= textWidth;
    }
    const originY = Math.round(y) - GLYPH_HEIGHT * scale;
    for (let index = 0; index < content.length; index++) {
      const rows = glyph(content[index] as string);
      for (let gy = 0; gy < GLYPH_HEIGHT; gy++) {
        const row = rows[gy] as string;
        for (let gx = 0; gx < GLYPH_WIDTH; gx++) {
          if (row[gx] !== "X") {
            continue;
          }
          for (let sy = 0; sy < scale; sy++) {
            for (let sx = 0; sx < scale; sx++) {
              this.setPixel(
                originX + index * advance + gx * scale + sx,
                originY + gy * scale + sy,
                rgb,
              );
            }
          }
        }
      }
    }
  }
}

function chunk(type: string, payload: Uint8Array): Uint8Array {
  const out = new Uint8Array(12 + payload.length);
  const view = new DataView(out.buffer);
  view.setUint32(0, payload.length);
  for (let i = 0; i < 4; i++) {
    out[4 + i] = type.charCodeAt(i);
  }
  out.set(payload, 8);
  view.setUint32(8 + payload.length, crc32(out.subarray(4, 8 + payload.length)));
  return out;
}

export function encodePng(raster: Raster): Buffer {
  const { width, height, data } = raster;
  const ihdr = new Uint8Array(13);
  const view = new DataView(ihdr.buffer);
  view.setUint32(0, width);
  view.setUint32(4, height);
  ihdr[8] = 8; // bit depth
  ihdr[9] = 6; // color type RGBA
  const stride = width * 4;
  const filtered = new Uint8Array((stride + 1) * height);
  for (let y = 0; y < height; y++) {
    filtered[y * (stride + 1)] = 0; // filter type None
    filtered.set(data.subarray(y * stride, (y + 1) * stride), y * (stride + 1) + 1);
  }
  const signature = Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]);
  return Buffer.concat([
    signature,
    chunk("IHDR", ihdr),
    chunk("IDAT", deflateSync(filtered, { level: 6 })),
    chunk("IEND", new Uint8Array(0)),
  ]);
}

export function sceneToPng(scene: Scene): Buffer {
  const raster = new Raster(scene.width, scene.height);
  for (const line of scene.lines) {
    raster.line(line.x1, line.y1, line.x2, line.y2, line.stroke);
  }
  for (const rect of scene.rects) {
    raster.fillRect(rect.x, rect.y, rect.w, rect.h, rect.fill);
  }
  for (const text of scene.texts) {
    raster.text(
      text.x,
      text.y,
      text.text,
      text.size >= 14 ? 2 : 1,
      text.anchor,
      text.fill,
    );
  }
  return encodePng(raster);
}
