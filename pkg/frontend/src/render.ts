/**
 * Region-map renderer: one colored cell per grid point, optional analytic
 * overlay curves, legend built from the verdict tags present in the data.
 */

import { SweepRow, verdictTags } from "./csv.js";
import { Overlay } from "./overlays.js";
import { document, fmt, tag, text } from "./svg.js";

export interface RenderSpec {
  rows: SweepRow[];
  overlays: Overlay[];
  xLabel?: string;
  yLabel?: string;
  title?: string;
}

const WIDTH = 640;
const HEIGHT = 480;
const MARGIN = { left: 62, right: 160, top: 34, bottom: 48 };

// colors for the verdict tags the sweep tool emits; anything unexpected
// falls back to a spare palette, assigned in sorted tag order
const VERDICT_COLORS: Record<string, string> = {
  "aligned": "#2e7d32",
  "not-aligned": "#c62828",
  "aligned-less-noisy": "#2e7d32",
  "inconclusive": "#e0e0e0",
  "no-key-needed": "#2e7d32",
  "key-needed": "#ef6c00",
  "zero-capacity": "#546e7a",
  "no-assist": "#1565c0",
  "assist-needed": "#c62828",
  "good": "#2e7d32",
  "bad": "#c62828",
  "undecided": "#e0e0e0",
};
const SPARE_COLORS = ["#6a1b9a", "#00838f", "#9e9d24", "#4e342e", "#d81b60"];

export function colorMap(tags: string[]): Map<string, string> {
  const out = new Map<string, string>();
  let spare = 0;
  for (const t of [...tags].sort()) {
    out.set(t, VERDICT_COLORS[t] ?? SPARE_COLORS[spare++ % SPARE_COLORS.length]);
  }
  return out;
}

interface Scale {
  (v: number): number;
  min: number;
  max: number;
}

function linear(min: number, max: number, lo: number, hi: number): Scale {
  const span = max - min || 1;
  const f = (v: number) => lo + ((v - min) / span) * (hi - lo);
  return Object.assign(f, { min, max });
}

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

/** Half the median gap between adjacent grid values (cell half-width). */
function halfStep(grid: number[]): number {
  if (grid.length < 2) return 0.5;
  const gaps = grid.slice(1).map((v, i) => v - grid[i]).sort((a, b) => a - b);
  return gaps[Math.floor(gaps.length / 2)] / 2;
}

function tickLabel(v: number): string {
  return v.toFixed(2).replace(/^-(0\.0+)$/, "$1"); // no negative zero
}

function axisTicks(scale: Scale, n = 6): number[] {
  const ticks: number[] = [];
  for (let i = 0; i <= n; i++) ticks.push(scale.min + ((scale.max - scale.min) * i) / n);
  return ticks;
}

export function renderSvg(spec: RenderSpec): string {
  const { rows, overlays } = spec;
  const xs = uniqueSorted(rows.map((r) => r.param1));
  const ys = uniqueSorted(rows.map((r) => r.param2));
  const hx = halfStep(xs);
  const hy = halfStep(ys);

  const sx = linear(xs[0] - hx, xs[xs.length - 1] + hx, MARGIN.left, WIDTH - MARGIN.right);
  const sy = linear(ys[0] - hy, ys[ys.length - 1] + hy, HEIGHT - MARGIN.bottom, MARGIN.top);

  const colors = colorMap(verdictTags(rows));
  const body: string[] = [];

  body.push(tag("rect", { x: 0, y: 0, width: WIDTH, height: HEIGHT, fill: "#ffffff" }));

  // region cells
  for (const r of rows) {
    const x0 = sx(r.param1 - hx);
    const y0 = sy(r.param2 + hy);
    body.push(
      tag("rect", {
        x: x0,
        y: y0,
        width: sx(r.param1 + hx) - x0,
        height: sy(r.param2 - hy) - y0,
        fill: colors.get(r.verdict)!,
      }),
    );
  }

  // overlays, clipped to the plotted window
  for (const ov of overlays) {
    const pts: string[] = [];
    const steps = 256;
    for (let i = 0; i <= steps; i++) {
      const x = sx.min + ((sx.max - sx.min) * i) / steps;
      const y = ov.evaluate(x);
      if (y === null || y < sy.min || y > sy.max) continue;
      pts.push(`${fmt(sx(x))},${fmt(sy(y))}`);
    }
    if (pts.length > 1) {
      body.push(
        tag("polyline", {
          points: pts.join(" "),
          fill: "none",
          stroke: "#000000",
          "stroke-width": 1.5,
          "stroke-dasharray": "6 3",
        }),
      );
    }
  }

  // frame + ticks
  body.push(
    tag("rect", {
      x: MARGIN.left,
      y: MARGIN.top,
      width: WIDTH - MARGIN.left - MARGIN.right,
      height: HEIGHT - MARGIN.top - MARGIN.bottom,
      fill: "none",
      stroke: "#000000",
      "stroke-width": 1,
    }),
  );
  for (const t of axisTicks(sx)) {
    const px = sx(t);
    body.push(tag("line", {
      x1: px, y1: HEIGHT - MARGIN.bottom, x2: px, y2: HEIGHT - MARGIN.bottom + 5,
      stroke: "#000000", "stroke-width": 1,
    }));
    body.push(text(tickLabel(t), {
      x: px, y: HEIGHT - MARGIN.bottom + 18,
      "font-family": "sans-serif", "font-size": 11, "text-anchor": "middle",
    }));
  }
  for (const t of axisTicks(sy)) {
    const py = sy(t);
    body.push(tag("line", {
      x1: MARGIN.left - 5, y1: py, x2: MARGIN.left, y2: py,
      stroke: "#000000", "stroke-width": 1,
    }));
    body.push(text(tickLabel(t), {
      x: MARGIN.left - 8, y: py + 4,
      "font-family": "sans-serif", "font-size": 11, "text-anchor": "end",
    }));
  }

  if (spec.xLabel) {
    body.push(text(spec.xLabel, {
      x: (MARGIN.left + WIDTH - MARGIN.right) / 2, y: HEIGHT - 10,
      "font-family": "sans-serif", "font-size": 13, "text-anchor": "middle",
    }));
  }
  if (spec.yLabel) {
    const cy = (MARGIN.top + HEIGHT - MARGIN.bottom) / 2;
    body.push(text(spec.yLabel, {
      x: 16, y: cy,
      "font-family": "sans-serif", "font-size": 13, "text-anchor": "middle",
      transform: `rotate(-90 16 ${fmt(cy)})`,
    }));
  }
  if (spec.title) {
    body.push(text(spec.title, {
      x: (MARGIN.left + WIDTH - MARGIN.right) / 2, y: 20,
      "font-family": "sans-serif", "font-size": 14, "text-anchor": "middle",
    }));
  }

  // legend: one swatch per verdict, then overlay line styles
  let ly = MARGIN.top + 6;
  const lx = WIDTH - MARGIN.right + 14;
  for (const [tagName, color] of [...colors.entries()].sort()) {
    body.push(tag("rect", { x: lx, y: ly - 9, width: 12, height: 12, fill: color,
                            stroke: "#666666", "stroke-width": 0.5 }));
    body.push(text(tagName, {
      x: lx + 18, y: ly + 1, "font-family": "sans-serif", "font-size": 11,
    }));
    ly += 18;
  }
  for (const ov of overlays) {
    body.push(tag("line", {
      x1: lx, y1: ly - 3, x2: lx + 12, y2: ly - 3,
      stroke: "#000000", "stroke-width": 1.5, "stroke-dasharray": "6 3",
    }));
    body.push(text(ov.label, {
      x: lx + 18, y: ly + 1, "font-family": "sans-serif", "font-size": 11,
    }));
    ly += 18;
  }

  return document(WIDTH, HEIGHT, body);
}
