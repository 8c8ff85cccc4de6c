/**
 * Reader for the sweep CSV contract.
 *
 * Exactly seven columns: param1,param2,param3,verdict,level,witness,margin.
 * param1/param2 are the plot axes; param3 is a fixed sweep parameter (may
 * be empty). level/witness/margin are optional per-row annotations.
 */

export const EXPECTED_HEADER = "param1,param2,param3,verdict,level,witness,margin";

export class SchemaError extends Error {
  readonly line: number;

  constructor(line: number, message: string) {
    super(`line ${line}: ${message}`);
    this.line = line;
  }
}

export interface SweepRow {
  param1: number;
  param2: number;
  param3: number | null;
  verdict: string;
  level: number | null;
  witness: string | null;
  margin: number | null;
}

function parseNumber(field: string, name: string, line: number): number {
  const v = Number(field);
  if (field.trim() === "" || !Number.isFinite(v)) {
    throw new SchemaError(line, `${name} must be a finite number, got ${JSON.stringify(field)}`);
  }
  return v;
}

function parseOptionalNumber(field: string, name: string, line: number): number | null {
  return field === "" ? null : parseNumber(field, name, line);
}

export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.split(/\r?\n/);
  while (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  if (lines.length === 0) throw new SchemaError(1, "empty file");
  if (lines[0] !== EXPECTED_HEADER) {
    throw new SchemaError(1, `header must be exactly ${JSON.stringify(EXPECTED_HEADER)}`);
  }
  if (lines.length === 1) throw new SchemaError(2, "no data rows");

  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const lineNo = i + 1;
    const fields = lines[i].split(",");
    if (fields.length !== 7) {
      throw new SchemaError(lineNo, `expected 7 fields, got ${fields.length}`);
    }
    const verdict = fields[3];
    if (verdict === "") throw new SchemaError(lineNo, "verdict must be nonempty");
    const level = fields[4] === "" ? null : Number(fields[4]);
    if (level !== null && !Number.isInteger(level)) {
      throw new SchemaError(lineNo, `level must be an integer, got ${JSON.stringify(fields[4])}`);
    }
    rows.push({
      param1: parseNumber(fields[0], "param1", lineNo),
      param2: parseNumber(fields[1], "param2", lineNo),
      param3: parseOptionalNumber(fields[2], "param3", lineNo),
      verdict,
      level,
      witness: fields[5] === "" ? null : fields[5],
      margin: parseOptionalNumber(fields[6], "margin", lineNo),
    });
  }
  return rows;
}

/** Distinct verdict tags in first-appearance order. */
export function verdictTags(rows: SweepRow[]): string[] {
  const seen: string[] = [];
  for (const r of rows) {
    if (!seen.includes(r.verdict)) seen.push(r.verdict);
  }
  return seen;
}
