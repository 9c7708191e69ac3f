/**
 * Reader for the sweep CSV contract.
 *
 * Layout: one or two axis columns, then a `stable` flag column (1/0), then
 * quantity columns. Empty quantity cells mark masked (unstable) grid points
 * and parse to null. Numbers use `.` as the decimal separator.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

export interface SweepTable {
  /** column names before the `stable` column */
  axisColumns: string[];
  /** quantity column names after `stable` */
  quantityColumns: string[];
  /** per-row axis coordinates */
  axes: number[][];
  /** per-row stability flag */
  stable: boolean[];
  /** per-row quantity values; null = masked cell */
  values: (number | null)[][];
}

export class CsvFormatError extends Error {}

export function parseSweepCsv(text: string): SweepTable {
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new CsvFormatError(`malformed CSV: ${first.message} (row ${first.row})`);
  }
  const rows = parsed.data;
  if (rows.length < 2) {
    throw new CsvFormatError("CSV needs a header row and at least one data row");
  }
  const header = rows[0];
  const stableIdx = header.indexOf("stable");
  if (stableIdx < 1) {
    throw new CsvFormatError(
      "header must contain a 'stable' column after the axis columns");
  }
  const axisColumns = header.slice(0, stableIdx);
  const quantityColumns = header.slice(stableIdx + 1);

  const axes: number[][] = [];
  const stable: boolean[] = [];
  const values: (number | null)[][] = [];
  for (let r = 1; r < rows.length; r++) {
    const row = rows[r];
    if (row.length !== header.length) {
      throw new CsvFormatError(
        `row ${r} has ${row.length} cells, header has ${header.length}`);
    }
    const coords = row.slice(0, stableIdx).map((cell) => {
      const v = Number(cell);
      if (!Number.isFinite(v)) {
        throw new CsvFormatError(`row ${r}: axis cell '${cell}' is not a number`);
      }
      return v;
    });
    axes.push(coords);
    stable.push(row[stableIdx] === "1");
    values.push(row.slice(stableIdx + 1).map((cell) => {
      if (cell === "") return null;
      const v = Number(cell);
      if (!Number.isFinite(v)) {
        throw new CsvFormatError(`row ${r}: cell '${cell}' is not a number`);
      }
      return v;
    }));
  }
  return { axisColumns, quantityColumns, axes, stable, values };
}

export function readSweepCsv(path: string): SweepTable {
  return parseSweepCsv(readFileSync(path, "utf-8"));
}

/** Values of one quantity column (null where masked). */
export function quantityValues(table: SweepTable, quantity: string): (number | null)[] {
  const idx = table.quantityColumns.indexOf(quantity);
  if (idx < 0) {
    throw new CsvFormatError(
      `column '${quantity}' not in CSV (have: ${table.quantityColumns.join(", ")})`);
  }
  return table.values.map((row) => row[idx]);
}
