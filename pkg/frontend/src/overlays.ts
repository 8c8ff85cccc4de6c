/**
 * Closed-form boundary curves drawn on top of region maps.
 *
 * Each overlay maps the horizontal axis value to a vertical axis value
 * (or null where the curve leaves the plotted window).
 */

export interface Overlay {
  name: string;
  label: string;
  evaluate(x: number): number | null;
}

function binaryEntropy(p: number): number {
  if (p <= 0 || p >= 1) return 0;
  return -p * Math.log2(p) - (1 - p) * Math.log2(1 - p);
}

// h(q) = y solved for q in [0, 1/2]; h is increasing there
function inverseEntropy(y: number): number {
  if (y <= 0) return 0;
  if (y >= 1) return 0.5;
  let lo = 0;
  let hi = 0.5;
  for (let i = 0; i < 60; i++) {
    const mid = (lo + hi) / 2;
    if (binaryEntropy(mid) < y) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

export const OVERLAYS: Overlay[] = [
  {
    name: "sqrt-boundary",
    label: "b = 2√(a(1−a))",
    evaluate: (a) => (a >= 0 && a <= 1 ? 2 * Math.sqrt(a * (1 - a)) : null),
  },
  {
    name: "less-noisy-boundary",
    label: "b = 4a(1−a)",
    evaluate: (a) => (a >= 0 && a <= 1 ? 4 * a * (1 - a) : null),
  },
  {
    name: "entropy-boundary",
    label: "b = h(a)",
    evaluate: (a) => (a >= 0 && a <= 1 ? binaryEntropy(a) : null),
  },
  {
    // locus of zero single-letter coherent information for independent
    // bit/phase flips: h(qx) + h(qz) = 1
    name: "q1-zero",
    label: "Q¹ = 0",
    evaluate: (qx) => {
      if (qx < 0 || qx > 0.5) return null;
      const rest = 1 - binaryEntropy(qx);
      return rest <= 0 ? null : inverseEntropy(rest);
    },
  },
];

export function findOverlay(name: string): Overlay {
  const ov = OVERLAYS.find((o) => o.name === name);
  if (!ov) {
    const known = OVERLAYS.map((o) => o.name).join(", ");
    throw new Error(`unknown overlay ${JSON.stringify(name)} (known: ${known})`);
  }
  return ov;
}
