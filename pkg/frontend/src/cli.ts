#!/usr/bin/env node
/** render --input <csv> --out <img> [--overlay <name>]...
 *
 * Exit codes: 0 success, 1 input/schema error, 2 usage error.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";

import { parseSweepCsv, SchemaError } from "./csv.js";
import { findOverlay, OVERLAYS, Overlay } from "./overlays.js";
import { renderSvg } from "./render.js";

const USAGE =
  "usage: polaralign-plots render --input <csv> --out <svg> " +
  "[--overlay <name>]... [--title <t>] [--x-label <l>] [--y-label <l>]\n" +
  `overlays: ${OVERLAYS.map((o) => o.name).join(", ")}`;

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      allowPositionals: true,
      options: {
        input: { type: "string" },
        out: { type: "string" },
        overlay: { type: "string", multiple: true },
        title: { type: "string" },
        "x-label": { type: "string" },
        "y-label": { type: "string" },
      },
    });
  } catch (e) {
    process.stderr.write(`${(e as Error).message}\n${USAGE}\n`);
    return 2;
  }
  const { values, positionals } = parsed;
  if (positionals.length !== 1 || positionals[0] !== "render") {
    process.stderr.write(`${USAGE}\n`);
    return 2;
  }
  if (!values.input || !values.out) {
    process.stderr.write(`--input and --out are required\n${USAGE}\n`);
    return 2;
  }
  if (!values.out.endsWith(".svg")) {
    if (values.out.endsWith(".png")) {
      process.stderr.write("PNG output is not supported; write .svg and rasterize externally\n");
    } else {
      process.stderr.write(`output must end in .svg, got ${values.out}\n`);
    }
    return 2;
  }

  let overlays: Overlay[];
  try {
    overlays = (values.overlay ?? []).map(findOverlay);
  } catch (e) {
    process.stderr.write(`${(e as Error).message}\n`);
    return 2;
  }

  let csvText: string;
  try {
    csvText = readFileSync(values.input, "utf8");
  } catch (e) {
    process.stderr.write(`cannot read ${values.input}: ${(e as Error).message}\n`);
    return 1;
  }

  try {
    const rows = parseSweepCsv(csvText);
    const svg = renderSvg({
      rows,
      overlays,
      title: values.title,
      xLabel: values["x-label"] ?? "param1",
      yLabel: values["y-label"] ?? "param2",
    });
    writeFileSync(values.out, svg);
  } catch (e) {
    if (e instanceof SchemaError) {
      process.stderr.write(`${values.input}: ${e.message}\n`);
    } else {
      process.stderr.write(`${(e as Error).message}\n`);
    }
    return 1;
  }
  return 0;
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(main(process.argv.slice(2)));
}
