/**
 * Minimal deterministic SVG line charts: log-scaled temperature axis,
 * solid/dashed stroking, per-curve colors, optional vertical marker lines.
 *
 * The output is a pure function of the inputs - coordinates are fixed to two
 * decimals and nothing time- or environment-dependent is embedded - so
 * re-rendering identical data yields byte-identical files.
 */

export interface Series {
  x: number[];
  y: number[];
  color: string;
  dashed: boolean;
  label: string;
  /** which CSV column this series came from, kept as a data- attribute */
  name: string;
}

export interface VLine {
  x: number;
  color: string;
  label?: string;
}

export interface ChartSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  vlines?: VLine[];
  width?: number;
  height?: number;
}

const MARGIN = { top: 42, right: 24, bottom: 48, left: 64 };

const fmt = (v: number): string => v.toFixed(2);

function niceExponentLabel(exp: number): string {
  return `1e${exp}`;
}

/** decade tick exponents covering [min, max] */
export function decadeTicks(min: number, max: number): number[] {
  const lo = Math.ceil(Math.log10(min) - 1e-9);
  const hi = Math.floor(Math.log10(max) + 1e-9);
  const ticks: number[] = [];
  for (let e = lo; e <= hi; e++) ticks.push(e);
  // thin out crowded axes, keeping first and last
  const step = Math.max(1, Math.ceil(ticks.length / 9));
  return ticks.filter((_, i) => i % step === 0 || i === ticks.length - 1);
}

/** round-ish linear ticks for the y axis */
export function linearTicks(max: number, count = 5): number[] {
  if (max <= 0) return [0];
  const rawStep = max / count;
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const candidates = [1, 2, 2.5, 5, 10].map((m) => m * mag);
  const step = candidates.find((s) => s >= rawStep) ?? candidates[4];
  const ticks: number[] = [];
  for (let v = 0; v <= max + 1e-12; v += step) ticks.push(v);
  return ticks;
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderChart(spec: ChartSpec): string {
  const width = spec.width ?? 760;
  const height = spec.height ?? 520;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const xs = spec.series.flatMap((s) => s.x);
  const ys = spec.series.flatMap((s) => s.y);
  if (xs.length === 0) throw new Error("nothing to plot: no series data");
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  if (xMin <= 0) throw new Error("log axis requires positive temperatures");
  const yMax = Math.max(...ys, 1e-12) * 1.06;

  const lxMin = Math.log10(xMin);
  const lxMax = Math.log10(xMax);
  const px = (t: number): number =>
    MARGIN.left + ((Math.log10(t) - lxMin) / (lxMax - lxMin)) * plotW;
  const py = (v: number): number => MARGIN.top + plotH - (v / yMax) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" data-x-scale="log" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${fmt(width / 2)}" y="24" text-anchor="middle" font-size="15">${esc(spec.title)}</text>`,
  );

  // frame
  const x0 = MARGIN.left;
  const y0 = MARGIN.top + plotH;
  parts.push(
    `<rect x="${x0}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="black" stroke-width="1"/>`,
  );

  // x decade ticks and grid
  for (const exp of decadeTicks(xMin, xMax)) {
    const t = 10 ** exp;
    if (t < xMin * 0.999 || t > xMax * 1.001) continue;
    const x = px(t);
    parts.push(
      `<line class="x-tick" x1="${fmt(x)}" y1="${fmt(y0)}" x2="${fmt(x)}" y2="${fmt(y0 + 6)}" stroke="black" stroke-width="1"/>`,
    );
    parts.push(
      `<line x1="${fmt(x)}" y1="${fmt(MARGIN.top)}" x2="${fmt(x)}" y2="${fmt(y0)}" stroke="#dddddd" stroke-width="0.5"/>`,
    );
    parts.push(
      `<text x="${fmt(x)}" y="${fmt(y0 + 20)}" text-anchor="middle" font-size="12">${niceExponentLabel(exp)}</text>`,
    );
  }

  // y ticks
  for (const v of linearTicks(yMax / 1.06)) {
    const y = py(v);
    parts.push(
      `<line class="y-tick" x1="${fmt(x0 - 6)}" y1="${fmt(y)}" x2="${fmt(x0)}" y2="${fmt(y)}" stroke="black" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${fmt(x0 - 10)}" y="${fmt(y + 4)}" text-anchor="end" font-size="12">${Number(v.toPrecision(3))}</text>`,
    );
  }

  // axis labels
  parts.push(
    `<text x="${fmt(MARGIN.left + plotW / 2)}" y="${fmt(height - 10)}" text-anchor="middle" font-size="13">${esc(spec.xLabel)}</text>`,
  );
  parts.push(
    `<text x="18" y="${fmt(MARGIN.top + plotH / 2)}" text-anchor="middle" font-size="13" ` +
      `transform="rotate(-90 18 ${fmt(MARGIN.top + plotH / 2)})">${esc(spec.yLabel)}</text>`,
  );

  // vertical markers
  for (const vline of spec.vlines ?? []) {
    if (vline.x < xMin || vline.x > xMax) continue;
    const x = px(vline.x);
    parts.push(
      `<line class="marker-vline" x1="${fmt(x)}" y1="${fmt(MARGIN.top)}" x2="${fmt(x)}" y2="${fmt(y0)}" ` +
        `stroke="${vline.color}" stroke-width="1.5"/>`,
    );
  }

  // curves
  for (const series of spec.series) {
    const points = series.x.map((t, i) => `${fmt(px(t))},${fmt(py(series.y[i]))}`);
    const d = `M ${points.join(" L ")}`;
    const dash = series.dashed ? ` stroke-dasharray="7 5"` : "";
    const kind = series.dashed ? "curve-dashed" : "curve-solid";
    parts.push(
      `<path class="curve ${kind}" data-series="${esc(series.name)}" data-label="${esc(series.label)}" ` +
        `d="${d}" fill="none" stroke="${series.color}" stroke-width="1.8"${dash}/>`,
    );
  }

  // legend (top-right inside the frame)
  const legendX = MARGIN.left + plotW - 200;
  spec.series.forEach((series, i) => {
    const y = MARGIN.top + 16 + i * 18;
    const dash = series.dashed ? ` stroke-dasharray="7 5"` : "";
    parts.push(
      `<line x1="${fmt(legendX)}" y1="${fmt(y)}" x2="${fmt(legendX + 28)}" y2="${fmt(y)}" ` +
        `stroke="${series.color}" stroke-width="1.8"${dash}/>`,
    );
    parts.push(
      `<text x="${fmt(legendX + 34)}" y="${fmt(y + 4)}" font-size="11">${esc(series.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
