import { describe, expect, it } from "vitest";
import { parseSweepCsv, quantityValues } from "../src/csv.js";
import { toGrid } from "../src/grid.js";

const SAMPLE = [
  "x_MHz,y_MHz,stable,q",
  "0,0,1,1",
  "0,5,1,2",
  "10,0,1,3",
  "10,5,0,",
].join("\n");

describe("toGrid", () => {
  it("reconstructs a 2x2 grid in sorted axis order", () => {
    const t = parseSweepCsv(SAMPLE);
    const g = toGrid(t, quantityValues(t, "q"));
    expect(g.x).toEqual([0, 10]);
    expect(g.y).toEqual([0, 5]);
    expect(g.cells).toEqual([[1, 2], [3, null]]);
  });

  it("rejects non-rectangular data", () => {
    const rows = ["x_MHz,y_MHz,stable,q", "0,0,1,1", "0,5,1,2", "10,0,1,3"];
    const t = parseSweepCsv(rows.join("\n"));
    expect(() => toGrid(t, quantityValues(t, "q"))).toThrow(/grid/);
  });

  it("rejects duplicate grid points", () => {
    const rows = ["x_MHz,y_MHz,stable,q",
                  "0,0,1,1", "0,0,1,2", "1,0,1,3", "1,1,1,4"];
    const t = parseSweepCsv(rows.join("\n"));
    expect(() => toGrid(t, quantityValues(t, "q"))).toThrow(/grid|duplicate/);
  });

  it("rejects single-axis tables", () => {
    const t = parseSweepCsv("T_mK,stable,q\n20,1,1\n40,1,2");
    expect(() => toGrid(t, quantityValues(t, "q"))).toThrow(/two axis/);
  });
});
