/**
 * Per-figure styling: which CSV columns become curves, their colors as
 * captioned in the source material, and solid/dashed pairing (solid
 * concurrence, dashed l1 coherence).  Figures whose captions name no colors
 * fall back to the documented red/blue/green palette.
 */

import { basename } from "node:path";
import type { Curve } from "./csv.js";
import type { Series, VLine } from "./chart.js";

export const FIGURE_IDS = ["2", "3", "4", "5", "6", "7", "8", "9a", "9b"] as const;
export type FigureId = (typeof FIGURE_IDS)[number];

export interface FigureRecipe {
  figure: FigureId;
  csvPaths: string[];
  outPath: string;
  /** optional vertical marker (e.g. a threshold temperature) */
  vline?: number;
  /** optional per-curve labels overriding the filename-derived ones */
  labels?: string[];
}

const FALLBACK_PALETTE = ["red", "blue", "green", "black", "orange", "purple"];

interface FigureStyle {
  colors: string[];
  /** series drawn per CSV: concurrence only, the C/l1 pair, or the l1/g1/g2 trio */
  kind: "concurrence" | "pair" | "coherence-parts";
  curveCount: number | null; // expected number of CSVs, null = any
  yLabel: string;
}

export const FIGURE_STYLES: Record<FigureId, FigureStyle> = {
  "2": { colors: ["green", "red", "blue", "black"], kind: "concurrence", curveCount: 4, yLabel: "C" },
  "3": { colors: ["red", "blue", "green"], kind: "concurrence", curveCount: 3, yLabel: "C" },
  "4": { colors: ["red", "blue", "green"], kind: "pair", curveCount: 3, yLabel: "C, C_l1" },
  "5": { colors: ["green", "blue", "red"], kind: "coherence-parts", curveCount: 1, yLabel: "C_l1, g1, g2" },
  "6": { colors: ["red", "blue", "green"], kind: "pair", curveCount: 3, yLabel: "C, C_l1" },
  "7": { colors: FALLBACK_PALETTE.slice(0, 3), kind: "pair", curveCount: 3, yLabel: "C, C_l1" },
  "8": { colors: ["red", "blue"], kind: "pair", curveCount: 1, yLabel: "C, C_l1" },
  "9a": { colors: ["red", "blue"], kind: "pair", curveCount: 1, yLabel: "C, C_l1" },
  "9b": { colors: ["red", "blue"], kind: "pair", curveCount: 1, yLabel: "C, C_l1" },
};

/** "fig4_w1.0_delta0.2.csv" -> "w=1.0 delta=0.2"; otherwise the stem */
export function curveLabel(path: string): string {
  const stem = basename(path).replace(/\.csv$/i, "");
  const match = stem.match(/_w(.+)_delta(.+)$/);
  if (match) return `w=${match[1]} delta=${match[2]}`;
  return stem;
}

export function buildSeries(figure: FigureId, curves: Curve[], labels?: string[]): Series[] {
  const style = FIGURE_STYLES[figure];
  const series: Series[] = [];
  curves.forEach((curve, i) => {
    const label = labels?.[i] ?? curveLabel(curve.path);
    if (style.kind === "coherence-parts") {
      const [cL1, cG1, cG2] = style.colors;
      series.push(
        { x: curve.t, y: curve.l1Norm, color: cL1, dashed: false, label: `C_l1 ${label}`, name: "l1_norm" },
        { x: curve.t, y: curve.g1, color: cG1, dashed: false, label: `g1 ${label}`, name: "g1" },
        { x: curve.t, y: curve.g2, color: cG2, dashed: false, label: `g2 ${label}`, name: "g2" },
      );
      return;
    }
    const color = style.colors[i % style.colors.length];
    series.push({
      x: curve.t,
      y: curve.concurrence,
      color,
      dashed: false,
      label: `C ${label}`,
      name: "concurrence",
    });
    if (style.kind === "pair") {
      series.push({
        x: curve.t,
        y: curve.l1Norm,
        color,
        dashed: true,
        label: `C_l1 ${label}`,
        name: "l1_norm",
      });
    }
  });
  return series;
}

export function buildVLines(recipe: FigureRecipe): VLine[] {
  if (recipe.vline === undefined) return [];
  return [{ x: recipe.vline, color: "magenta" }];
}

export function validateRecipe(recipe: FigureRecipe): void {
  if (!FIGURE_IDS.includes(recipe.figure)) {
    throw new Error(`unknown figure "${recipe.figure}" (expected ${FIGURE_IDS.join(", ")})`);
  }
  if (recipe.csvPaths.length === 0) {
    throw new Error("no CSV inputs given");
  }
  const expected = FIGURE_STYLES[recipe.figure].curveCount;
  if (expected !== null && recipe.csvPaths.length !== expected) {
    throw new Error(
      `figure ${recipe.figure} expects ${expected} CSV file(s), got ${recipe.csvPaths.length}`,
    );
  }
  if (recipe.labels && recipe.labels.length !== recipe.csvPaths.length) {
    throw new Error("--labels must match the number of CSV files");
  }
}
