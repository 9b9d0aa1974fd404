/**
 * Recipe execution: read the CSVs, style them per figure, write the SVG.
 * No physics happens here - every plotted point comes verbatim from a row.
 */

import { writeFileSync } from "node:fs";
import { renderChart } from "./chart.js";
import { readCurve } from "./csv.js";
import {
  buildSeries,
  buildVLines,
  FIGURE_STYLES,
  validateRecipe,
  type FigureRecipe,
} from "./figures.js";

export function renderRecipeToSvg(recipe: FigureRecipe): string {
  validateRecipe(recipe);
  const curves = recipe.csvPaths.map(readCurve);
  const style = FIGURE_STYLES[recipe.figure];
  return renderChart({
    title: `Figure ${recipe.figure}`,
    xLabel: "T (log scale)",
    yLabel: style.yLabel,
    series: buildSeries(recipe.figure, curves, recipe.labels),
    vlines: buildVLines(recipe),
  });
}

export function renderRecipe(recipe: FigureRecipe): void {
  const svg = renderRecipeToSvg(recipe);
  writeFileSync(recipe.outPath, svg, "utf8");
}
