/**
 * Strict reader for the six-column sweep CSVs produced by the gravcats CLI.
 *
 * Schema: `T,concurrence,l1_norm,g1,g2,branch` with LF line endings and
 * full-precision decimal floats. Anything else is rejected with the file
 * name in the message, so a garbled input never renders silently.
 */

import { readFileSync } from "node:fs";

export const EXPECTED_HEADER = "T,concurrence,l1_norm,g1,g2,branch";

export interface Curve {
  path: string;
  t: number[];
  concurrence: number[];
  l1Norm: number[];
  g1: number[];
  g2: number[];
  branch: string[];
}

export class CsvError extends Error {}

function parseFinite(cell: string, path: string, line: number): number {
  // reject empty cells and anything Number() would silently coerce
  if (cell.trim() === "" || !/^[+-]?[0-9.eE+-]+$/.test(cell)) {
    throw new CsvError(`${path}:${line}: not a number: "${cell}"`);
  }
  const value = Number(cell);
  if (!Number.isFinite(value)) {
    throw new CsvError(`${path}:${line}: not a finite number: "${cell}"`);
  }
  return value;
}

export function parseCurve(text: string, path: string): Curve {
  const lines = text.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop(); // trailing newline
  }
  if (lines.length < 2) {
    throw new CsvError(`${path}: expected a header and at least one row`);
  }
  if (lines[0].trim() !== EXPECTED_HEADER) {
    throw new CsvError(
      `${path}: bad header "${lines[0]}" (expected "${EXPECTED_HEADER}")`,
    );
  }
  const curve: Curve = {
    path,
    t: [],
    concurrence: [],
    l1Norm: [],
    g1: [],
    g2: [],
    branch: [],
  };
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== 6) {
      throw new CsvError(`${path}:${i + 1}: expected 6 columns, got ${cells.length}`);
    }
    const t = parseFinite(cells[0], path, i + 1);
    if (t <= 0) {
      throw new CsvError(`${path}:${i + 1}: temperatures must be positive`);
    }
    if (curve.t.length > 0 && t <= curve.t[curve.t.length - 1]) {
      throw new CsvError(`${path}:${i + 1}: temperatures must be ascending`);
    }
    curve.t.push(t);
    curve.concurrence.push(parseFinite(cells[1], path, i + 1));
    curve.l1Norm.push(parseFinite(cells[2], path, i + 1));
    curve.g1.push(parseFinite(cells[3], path, i + 1));
    curve.g2.push(parseFinite(cells[4], path, i + 1));
    curve.branch.push(cells[5]);
  }
  return curve;
}

export function readCurve(path: string): Curve {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new CsvError(`${path}: cannot read (${(err as Error).message})`);
  }
  return parseCurve(text, path);
}
