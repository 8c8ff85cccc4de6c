/** Minimal deterministic SVG assembly: fixed attribute order, fixed
 *  number formatting, no timestamps — identical input gives identical
 *  bytes. */

export function fmt(v: number): string {
  // trim trailing zeros but keep sub-pixel precision
  const s = v.toFixed(3);
  return s.replace(/\.?0+$/, "") || "0";
}

export function tag(
  name: string,
  attrs: Record<string, string | number>,
  children?: string[],
): string {
  const parts = Object.entries(attrs).map(
    ([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : v}"`,
  );
  const open = `<${name}${parts.length ? " " + parts.join(" ") : ""}`;
  if (!children || children.length === 0) return `${open}/>`;
  return `${open}>${children.join("")}</${name}>`;
}

export function text(
  content: string,
  attrs: Record<string, string | number>,
): string {
  const escaped = content
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;");
  return tag("text", attrs, [escaped]);
}

export function document(width: number, height: number, body: string[]): string {
  const head =
    `<svg xmlns="http://www.w3.org/2000/svg" ` +
    `width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`;
  return [head, ...body, "</svg>", ""].join("\n");
}
