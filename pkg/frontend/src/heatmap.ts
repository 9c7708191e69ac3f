/**
 * Detuning-plane heatmaps in the style of the entanglement and occupation
 * figures: one colored cell per stable grid point, blank (background) cells
 * where the sweep masked an unstable point, explicit colorbar.
 */

import { quantityValues, readSweepCsv, SweepTable } from "./csv.js";
import { formatTick, linearScale, logScale, ValueScale, viridis } from "./color.js";
import { Grid, toGrid } from "./grid.js";
import { axisLabel, svgDocument, text, tickPosition } from "./svg.js";

export interface HeatmapJob {
  csvPath: string;
  quantity: string;
  outPath?: string;
  /** axis normalization constant, MHz (the gamma of the figure captions) */
  gammaMhz?: number;
  /** use a decade color scale (occupations); default linear (entanglement) */
  logColor?: boolean;
  width?: number;
  height?: number;
}

export interface HeatmapResult {
  svg: string;
  /** number of colored (stable) cells */
  cellCount: number;
  /** number of blank (masked) cells */
  blankCount: number;
  /** colorbar range */
  min: number;
  max: number;
}

export function renderHeatmapTable(
  table: SweepTable, job: Omit<HeatmapJob, "csvPath">,
): HeatmapResult {
  const gamma = job.gammaMhz ?? 1.0;
  const values = quantityValues(table, job.quantity);
  const grid = toGrid(table, values);
  const present = values.filter((v): v is number => v !== null);
  if (present.length === 0) {
    throw new Error(`column '${job.quantity}' is fully masked; nothing to draw`);
  }
  const lo = Math.min(...present);
  const hi = Math.max(...present);
  const scale: ValueScale = job.logColor
    ? logScale(Math.min(...present.filter((v) => v > 0)), hi)
    : linearScale(Math.min(0, lo), hi);

  const width = job.width ?? 640;
  const height = job.height ?? 520;
  const m = { top: 40, right: 110, bottom: 60, left: 75 };
  const plotW = width - m.left - m.right;
  const plotH = height - m.top - m.bottom;
  const cellW = plotW / grid.x.length;
  const cellH = plotH / grid.y.length;

  const parts: string[] = [];
  let cellCount = 0;
  let blankCount = 0;
  grid.cells.forEach((column, i) => {
    column.forEach((value, j) => {
      if (value === null) {
        blankCount += 1;
        return; // masked: leave background showing
      }
      const cx = m.left + i * cellW;
      // SVG y grows downward; grid y grows upward
      const cy = m.top + plotH - (j + 1) * cellH;
      const fill = viridis(scale.normalize(value));
      parts.push(
        `<rect class="cell" x="${cx.toFixed(2)}" y="${cy.toFixed(2)}" ` +
        `width="${(cellW + 0.5).toFixed(2)}" height="${(cellH + 0.5).toFixed(2)}" ` +
        `fill="${fill}"/>`);
      cellCount += 1;
    });
  });

  parts.push(...frameAndAxes(grid, table, gamma, m, plotW, plotH));
  parts.push(...colorbar(scale, m, plotW, plotH, job.quantity));
  parts.push(text(m.left + plotW / 2, 22, job.quantity, { size: 14 }));

  return {
    svg: svgDocument(width, height, parts.join("\n")),
    cellCount,
    blankCount,
    min: scale.min,
    max: hi,
  };
}

function frameAndAxes(
  grid: Grid, table: SweepTable, gamma: number,
  m: { top: number; left: number }, plotW: number, plotH: number,
): string[] {
  const parts: string[] = [];
  parts.push(
    `<rect x="${m.left}" y="${m.top}" width="${plotW}" height="${plotH}" ` +
    `fill="none" stroke="black"/>`);
  const nTicks = 5;
  for (let t = 0; t < nTicks; t++) {
    const xv = tickPosition(t, nTicks, grid.x[0], grid.x[grid.x.length - 1]);
    const yv = tickPosition(t, nTicks, grid.y[0], grid.y[grid.y.length - 1]);
    const px = tickPosition(t, nTicks, m.left, m.left + plotW);
    const py = tickPosition(t, nTicks, m.top + plotH, m.top);
    parts.push(text(px, m.top + plotH + 18, formatTick(xv / gamma), { size: 11 }));
    parts.push(text(m.left - 8, py + 4, formatTick(yv / gamma),
                    { size: 11, anchor: "end" }));
  }
  parts.push(text(m.left + plotW / 2, m.top + plotH + 42,
                  axisLabel(table.axisColumns[0], gamma)));
  parts.push(text(18, m.top + plotH / 2, axisLabel(table.axisColumns[1], gamma),
                  { rotate: -90 }));
  return parts;
}

function colorbar(
  scale: ValueScale, m: { top: number; left: number },
  plotW: number, plotH: number, quantity: string,
): string[] {
  const parts: string[] = [];
  const barX = m.left + plotW + 25;
  const barW = 16;
  const steps = 64;
  for (let s = 0; s < steps; s++) {
    const y = m.top + plotH - ((s + 1) * plotH) / steps;
    parts.push(
      `<rect x="${barX}" y="${y.toFixed(2)}" width="${barW}" ` +
      `height="${(plotH / steps + 0.5).toFixed(2)}" fill="${viridis((s + 0.5) / steps)}"/>`);
  }
  parts.push(
    `<rect x="${barX}" y="${m.top}" width="${barW}" height="${plotH}" ` +
    `fill="none" stroke="black"/>`);
  const ticks = scale.ticks(5);
  ticks.forEach((value, i) => {
    const y = tickPosition(i, ticks.length, m.top + plotH, m.top);
    parts.push(text(barX + barW + 6, y + 4, formatTick(value),
                    { size: 11, anchor: "start" }));
  });
  return parts;
}

export function renderHeatmap(job: HeatmapJob): HeatmapResult {
  return renderHeatmapTable(readSweepCsv(job.csvPath), job);
}
