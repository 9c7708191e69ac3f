/**
 * Color mapping: a compact viridis ramp plus linear and log value scales.
 */

/** viridis anchors (matplotlib), interpolated linearly in RGB */
const VIRIDIS: [number, number, number][] = [
  [68, 1, 84], [71, 24, 106], [72, 40, 120], [69, 55, 129],
  [64, 71, 136], [57, 85, 140], [51, 98, 141], [45, 112, 142],
  [40, 125, 142], [35, 138, 141], [31, 150, 139], [32, 163, 134],
  [41, 175, 127], [59, 187, 114], [86, 198, 103], [116, 208, 85],
  [149, 216, 64], [184, 222, 41], [221, 227, 24], [253, 231, 37],
];

/** Map t in [0, 1] to a CSS color on the viridis ramp. */
export function viridis(t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (VIRIDIS.length - 1);
  const i = Math.min(VIRIDIS.length - 2, Math.floor(pos));
  const f = pos - i;
  const [r0, g0, b0] = VIRIDIS[i];
  const [r1, g1, b1] = VIRIDIS[i + 1];
  const ch = (a: number, b: number) => Math.round(a + f * (b - a));
  return `rgb(${ch(r0, r1)},${ch(g0, g1)},${ch(b0, b1)})`;
}

export interface ValueScale {
  /** normalized position in [0, 1] for a data value */
  normalize(value: number): number;
  /** tick values with labels for the colorbar / axis */
  ticks(count: number): number[];
  readonly min: number;
  readonly max: number;
  readonly kind: "linear" | "log";
}

export function linearScale(min: number, max: number): ValueScale {
  const span = max - min || 1;
  return {
    kind: "linear",
    min,
    max,
    normalize: (v) => (v - min) / span,
    ticks: (count) =>
      Array.from({ length: count }, (_, i) => min + (span * i) / (count - 1)),
  };
}

/**
 * Decade scale for occupation-style data. Nonpositive values clamp to the
 * bottom of the range, which spans the data's positive decades.
 */
export function logScale(min: number, max: number): ValueScale {
  if (max <= 0) throw new Error("log scale needs at least one positive value");
  const lo = Math.log10(min > 0 ? min : max / 1e6);
  const hi = Math.log10(max);
  const span = hi - lo || 1;
  return {
    kind: "log",
    min: 10 ** lo,
    max,
    normalize: (v) => (v <= 0 ? 0 : (Math.log10(v) - lo) / span),
    ticks: (count) =>
      Array.from({ length: count }, (_, i) => 10 ** (lo + (span * i) / (count - 1))),
  };
}

export function formatTick(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 0.01 && abs < 10000) {
    return Number(value.toPrecision(3)).toString();
  }
  return value.toExponential(1);
}
