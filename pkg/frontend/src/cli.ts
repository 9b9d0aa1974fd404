#!/usr/bin/env node
/**
 * render --figure N --csv <paths...> --out <image.svg> [--vline T] [--labels ...]
 *
 * Consumes the gravcats CLI's CSV sweeps and writes a publication-style SVG.
 * Exit codes: 0 success, 1 usage error or unreadable/garbled CSV (the
 * offending file name is always in the message).
 */

import { CsvError } from "./csv.js";
import { FIGURE_IDS, type FigureId, type FigureRecipe } from "./figures.js";
import { renderRecipe } from "./render.js";

export function parseArgs(argv: string[]): FigureRecipe {
  let figure: string | undefined;
  let outPath: string | undefined;
  let vline: number | undefined;
  const csvPaths: string[] = [];
  const labels: string[] = [];

  let i = 0;
  const next = (flag: string): string => {
    i += 1;
    if (i >= argv.length) throw new Error(`${flag} needs a value`);
    return argv[i];
  };
  for (; i < argv.length; i++) {
    const arg = argv[i];
    switch (arg) {
      case "--figure":
        figure = next(arg);
        break;
      case "--out":
        outPath = next(arg);
        break;
      case "--vline": {
        const raw = next(arg);
        vline = Number(raw);
        if (!Number.isFinite(vline) || vline <= 0) {
          throw new Error(`--vline must be a positive number, got "${raw}"`);
        }
        break;
      }
      case "--csv":
        while (i + 1 < argv.length && !argv[i + 1].startsWith("--")) {
          csvPaths.push(argv[++i]);
        }
        break;
      case "--labels":
        while (i + 1 < argv.length && !argv[i + 1].startsWith("--")) {
          labels.push(argv[++i]);
        }
        break;
      default:
        throw new Error(`unknown argument "${arg}"`);
    }
  }

  if (!figure) throw new Error("missing --figure");
  if (!(FIGURE_IDS as readonly string[]).includes(figure)) {
    throw new Error(`unknown figure "${figure}" (expected ${FIGURE_IDS.join(", ")})`);
  }
  if (csvPaths.length === 0) throw new Error("missing --csv inputs");
  if (!outPath) throw new Error("missing --out");

  return {
    figure: figure as FigureId,
    csvPaths,
    outPath,
    vline,
    labels: labels.length > 0 ? labels : undefined,
  };
}

export function main(argv: string[]): number {
  try {
    renderRecipe(parseArgs(argv));
    return 0;
  } catch (err) {
    const message = err instanceof CsvError ? `bad CSV: ${err.message}` : (err as Error).message;
    console.error(`render: error: ${message}`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
