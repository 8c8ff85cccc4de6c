import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { parseSweepCsv, verdictTags } from "../src/csv.js";
import { findOverlay, OVERLAYS } from "../src/overlays.js";
import { colorMap, renderSvg } from "../src/render.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

function load(name: string) {
  return parseSweepCsv(readFileSync(join(FIXTURES, name), "utf8"));
}

const GOLDEN: Array<[string, string[]]> = [
  ["alignment.csv", ["sqrt-boundary"]],
  ["wiretap.csv", ["less-noisy-boundary", "entropy-boundary"]],
  ["broadcast.csv", []],
  ["quantum.csv", ["q1-zero"]],
];

describe("renderSvg on golden sweeps", () => {
  it.each(GOLDEN)("renders %s without error", (name, overlayNames) => {
    const rows = load(name);
    const svg = renderSvg({ rows, overlays: overlayNames.map(findOverlay) });
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
    // one cell per data row plus background/frame rects and legend swatches
    const rects = svg.match(/<rect /g) ?? [];
    expect(rects.length).toBeGreaterThanOrEqual(rows.length + 2);
    // every verdict appears in the legend
    for (const tag of verdictTags(rows)) {
      expect(svg).toContain(`>${tag}</text>`);
    }
  });

  it.each(GOLDEN)("output for %s is byte-stable", (name, overlayNames) => {
    const overlays = overlayNames.map(findOverlay);
    const a = renderSvg({ rows: load(name), overlays });
    const b = renderSvg({ rows: load(name), overlays });
    expect(a).toBe(b);
  });

  it("draws one polyline per overlay", () => {
    const rows = load("alignment.csv");
    const svg = renderSvg({
      rows,
      overlays: ["sqrt-boundary", "less-noisy-boundary"].map(findOverlay),
    });
    expect((svg.match(/<polyline /g) ?? []).length).toBe(2);
  });
});

describe("color assignment", () => {
  it("assigns every tag a color, including unknown ones", () => {
    const tags = ["aligned", "mystery-verdict", "another-one"];
    const colors = colorMap(tags);
    for (const t of tags) {
      expect(colors.get(t)).toMatch(/^#[0-9a-f]{6}$/);
    }
    expect(new Set(colors.values()).size).toBe(3);
  });

  it("a single-verdict region renders as one color plus legend", () => {
    const rows = parseSweepCsv(
      ["param1,param2,param3,verdict,level,witness,margin",
       "0.1,0.1,,inconclusive,,,",
       "0.1,0.2,,inconclusive,,,",
       "0.2,0.1,,inconclusive,,,",
       "0.2,0.2,,inconclusive,,,",
       ""].join("\n"),
    );
    const svg = renderSvg({ rows, overlays: [] });
    expect(svg).toContain(">inconclusive</text>");
    const fills = [...svg.matchAll(/fill="(#[0-9a-f]{6})"/g)].map((m) => m[1]);
    // background white plus the single verdict color
    expect(new Set(fills).size).toBe(2);
  });
});

describe("overlays", () => {
  it("evaluates the closed forms", () => {
    expect(findOverlay("sqrt-boundary").evaluate(0.1)).toBeCloseTo(0.6, 12);
    expect(findOverlay("less-noisy-boundary").evaluate(0.25)).toBeCloseTo(0.75, 12);
    expect(findOverlay("entropy-boundary").evaluate(0.5)).toBeCloseTo(1.0, 12);
    // on the q1-zero locus the two entropies sum to one
    const qz = findOverlay("q1-zero").evaluate(0.05)!;
    const h = (p: number) => -p * Math.log2(p) - (1 - p) * Math.log2(1 - p);
    expect(h(0.05) + h(qz)).toBeCloseTo(1.0, 9);
  });

  it("rejects unknown names with the known list", () => {
    expect(() => findOverlay("nope")).toThrow(/known:/);
    expect(OVERLAYS.length).toBeGreaterThanOrEqual(4);
  });
});
