/**
 * Rectangular-grid reconstruction from the two axis columns of a sweep CSV.
 */

import { CsvFormatError, SweepTable } from "./csv.js";

export interface Grid {
  /** sorted unique coordinates along axis 1 (CSV outer loop, plot x) */
  x: number[];
  /** sorted unique coordinates along axis 2 (plot y) */
  y: number[];
  /** cells[i][j] = value at (x[i], y[j]); null = masked */
  cells: (number | null)[][];
}

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

/** Arrange one quantity column on the (axis1, axis2) grid. */
export function toGrid(table: SweepTable, values: (number | null)[]): Grid {
  if (table.axisColumns.length !== 2) {
    throw new CsvFormatError(
      `heatmaps need two axis columns, CSV has ${table.axisColumns.length}`);
  }
  const x = uniqueSorted(table.axes.map((a) => a[0]));
  const y = uniqueSorted(table.axes.map((a) => a[1]));
  if (x.length * y.length !== table.axes.length) {
    throw new CsvFormatError(
      `rows do not form a grid: ${x.length} x ${y.length} != ${table.axes.length}`);
  }
  const xIndex = new Map(x.map((v, i) => [v, i]));
  const yIndex = new Map(y.map((v, i) => [v, i]));
  const cells: (number | null)[][] = x.map(() => y.map(() => null));
  const seen = new Set<number>();
  table.axes.forEach(([ax, ay], r) => {
    const i = xIndex.get(ax)!;
    const j = yIndex.get(ay)!;
    const flat = i * y.length + j;
    if (seen.has(flat)) {
      throw new CsvFormatError(`duplicate grid point (${ax}, ${ay})`);
    }
    seen.add(flat);
    cells[i][j] = values[r];
  });
  return { x, y, cells };
}
