/**
 * Minimal SVG document assembly shared by the heatmap and line renderers.
 */

export interface Margins {
  top: number;
  right: number;
  bottom: number;
  left: number;
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function svgDocument(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="sans-serif">\n` +
    `<rect width="${width}" height="${height}" fill="white"/>\n` +
    body +
    "\n</svg>\n"
  );
}

export function text(
  x: number, y: number, content: string,
  opts: { size?: number; anchor?: string; rotate?: number } = {},
): string {
  const size = opts.size ?? 12;
  const anchor = opts.anchor ?? "middle";
  const transform = opts.rotate ? ` transform="rotate(${opts.rotate} ${x} ${y})"` : "";
  return (
    `<text x="${x}" y="${y}" font-size="${size}" text-anchor="${anchor}"` +
    `${transform}>${escapeXml(content)}</text>`
  );
}

/** Evenly-spaced position for tick i of n along [lo, hi]. */
export function tickPosition(i: number, n: number, lo: number, hi: number): number {
  return lo + ((hi - lo) * i) / (n - 1);
}

/** Pretty label for a sweep axis column, applying gamma normalization. */
export function axisLabel(column: string, gammaMhz: number): string {
  if (column.endsWith("_mK")) {
    return `${column.slice(0, -3)} (mK)`;
  }
  if (column.endsWith("_MHz")) {
    const name = column.slice(0, -4);
    return gammaMhz === 1.0 ? `${name} / gamma` : `${name} / (${gammaMhz} MHz)`;
  }
  return column;
}
