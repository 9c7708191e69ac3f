/**
 * Standalone plot script: sweep CSV in, SVG out.
 *
 *   cavmag-plot --csv fig3.csv --quantity E_m1m2 --out fig3_em1m2.svg
 *   cavmag-plot --csv fig2.csv --quantity N_a1 --log --out fig2_na1.svg
 *   cavmag-plot --csv fig7.csv --kind line --out fig7.svg
 *
 * The kind is inferred from the CSV when omitted: two axis columns make a
 * heatmap, one makes a line plot.
 */

import { writeFileSync } from "node:fs";
import { parseArgs } from "node:util";
import { readSweepCsv } from "./csv.js";
import { renderHeatmapTable } from "./heatmap.js";
import { renderLinesTable } from "./lines.js";

export function run(argv: string[]): string {
  const { values } = parseArgs({
    args: argv,
    options: {
      csv: { type: "string" },
      quantity: { type: "string", multiple: true },
      out: { type: "string" },
      kind: { type: "string" },
      gamma: { type: "string", default: "1.0" },
      log: { type: "boolean", default: false },
    },
  });
  if (!values.csv || !values.out) {
    throw new Error("--csv and --out are required");
  }
  const table = readSweepCsv(values.csv);
  const kind = values.kind ?? (table.axisColumns.length === 2 ? "heatmap" : "line");

  let svg: string;
  if (kind === "heatmap") {
    const quantity = values.quantity?.[0];
    if (!quantity) {
      throw new Error("heatmaps need exactly one --quantity");
    }
    svg = renderHeatmapTable(table, {
      quantity,
      gammaMhz: Number(values.gamma),
      logColor: values.log,
    }).svg;
  } else if (kind === "line") {
    svg = renderLinesTable(table, { quantities: values.quantity }).svg;
  } else {
    throw new Error(`unknown --kind '${kind}' (heatmap or line)`);
  }
  writeFileSync(values.out, svg, "utf-8");
  return values.out;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  try {
    const out = run(process.argv.slice(2));
    console.log(`wrote ${out}`);
  } catch (err) {
    console.error(String(err instanceof Error ? err.message : err));
    process.exit(1);
  }
}
