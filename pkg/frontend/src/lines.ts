/**
 * Temperature line plots: one curve per quantity column against a single
 * axis column (mK), in the style of the entanglement-vs-temperature figure.
 */

import { CsvFormatError, quantityValues, readSweepCsv, SweepTable } from "./csv.js";
import { formatTick, linearScale } from "./color.js";
import { axisLabel, svgDocument, text, tickPosition } from "./svg.js";

export interface LinesJob {
  csvPath: string;
  /** quantity columns to draw; default: all of them */
  quantities?: string[];
  outPath?: string;
  width?: number;
  height?: number;
}

export interface LinesResult {
  svg: string;
  /** per-quantity data extent over unmasked points */
  series: { name: string; min: number; max: number; points: number }[];
}

const PALETTE = ["#4053d3", "#ddb310", "#b51d14", "#00beff", "#fb49b0", "#00b25d"];

export function renderLinesTable(
  table: SweepTable, job: Omit<LinesJob, "csvPath">,
): LinesResult {
  if (table.axisColumns.length !== 1) {
    throw new CsvFormatError(
      `line plots need one axis column, CSV has ${table.axisColumns.length}`);
  }
  const quantities = job.quantities ?? table.quantityColumns;
  if (quantities.length === 0) {
    throw new CsvFormatError("no quantity columns to draw");
  }
  const xs = table.axes.map((a) => a[0]);
  const series = quantities.map((name) => {
    const pairs = quantityValues(table, name)
      .map((v, i) => [xs[i], v] as const)
      .filter((p): p is readonly [number, number] => p[1] !== null);
    if (pairs.length === 0) {
      throw new CsvFormatError(`column '${name}' has no unmasked values`);
    }
    return { name, pairs };
  });

  const allY = series.flatMap((s) => s.pairs.map((p) => p[1]));
  const yScale = linearScale(Math.min(0, ...allY), Math.max(...allY) * 1.05);
  const xScale = linearScale(Math.min(...xs), Math.max(...xs));

  const width = job.width ?? 640;
  const height = job.height ?? 440;
  const m = { top: 30, right: 140, bottom: 55, left: 70 };
  const plotW = width - m.left - m.right;
  const plotH = height - m.top - m.bottom;
  const px = (x: number) => m.left + xScale.normalize(x) * plotW;
  const py = (y: number) => m.top + plotH - yScale.normalize(y) * plotH;

  const parts: string[] = [];
  parts.push(
    `<rect x="${m.left}" y="${m.top}" width="${plotW}" height="${plotH}" ` +
    `fill="none" stroke="black"/>`);
  series.forEach((s, k) => {
    const d = s.pairs
      .map(([x, y], i) => `${i === 0 ? "M" : "L"}${px(x).toFixed(2)},${py(y).toFixed(2)}`)
      .join(" ");
    const color = PALETTE[k % PALETTE.length];
    parts.push(
      `<path class="series" d="${d}" fill="none" stroke="${color}" stroke-width="2"/>`);
    const ly = m.top + 16 + 18 * k;
    parts.push(
      `<line x1="${m.left + plotW + 12}" y1="${ly - 4}" x2="${m.left + plotW + 36}" ` +
      `y2="${ly - 4}" stroke="${color}" stroke-width="2"/>`);
    parts.push(text(m.left + plotW + 42, ly, s.name, { size: 12, anchor: "start" }));
  });

  const nTicks = 5;
  for (let t = 0; t < nTicks; t++) {
    const xv = tickPosition(t, nTicks, xScale.min, xScale.max);
    const yv = tickPosition(t, nTicks, yScale.min, yScale.max);
    parts.push(text(px(xv), m.top + plotH + 18, formatTick(xv), { size: 11 }));
    parts.push(text(m.left - 8, py(yv) + 4, formatTick(yv),
                    { size: 11, anchor: "end" }));
  }
  parts.push(text(m.left + plotW / 2, m.top + plotH + 42,
                  axisLabel(table.axisColumns[0], 1.0)));

  return {
    svg: svgDocument(width, height, parts.join("\n")),
    series: series.map((s) => ({
      name: s.name,
      min: Math.min(...s.pairs.map((p) => p[1])),
      max: Math.max(...s.pairs.map((p) => p[1])),
      points: s.pairs.length,
    })),
  };
}

export function renderLines(job: LinesJob): LinesResult {
  return renderLinesTable(readSweepCsv(job.csvPath), job);
}
