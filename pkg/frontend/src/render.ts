// Schematic word diagrams: a central polygon (or three-ray star for a
// 3-vertex) with slot annotations. Combinatorial, not embedding-accurate.

export interface ParsedWord {
  kind: "V3" | "F3" | "F5";
  slots: string[];
}

const LEGAL = new Set(["3", "4", "5", "6p", "v3"]);
const LEN: Record<string, number> = { V3: 3, F3: 6, F5: 10 };

export function parseWord(text: string): ParsedWord {
  const m = /^(V3|F3|F5):\[([^\]]*)\]$/.exec(text.trim());
  if (!m) throw new Error(`malformed word: ${text}`);
  const kind = m[1] as ParsedWord["kind"];
  const slots = m[2].split("/").map((s) => s.trim());
  if (slots.length !== LEN[kind]) {
    throw new Error(`${kind} needs ${LEN[kind]} slots, got ${slots.length}`);
  }
  for (const [i, s] of slots.entries()) {
    if (!LEGAL.has(s)) throw new Error(`bad slot '${s}'`);
    if (s === "v3" && (kind === "V3" || i % 2 === 1)) {
      throw new Error(`v3 not allowed at position ${i} of ${kind}`);
    }
  }
  return { kind, slots };
}

function point(cx: number, cy: number, r: number, angle: number): [number, number] {
  return [cx + r * Math.cos(angle), cy + r * Math.sin(angle)];
}

const fmt = (x: number) => x.toFixed(1);

/** Deterministic SVG for a configuration word. Corner slots sit on the
 * polygon vertices (squares mark 3-vertices), edge slots at edge midpoints;
 * a 3-vertex word is drawn as a three-ray star with face labels. */
export function renderWord(text: string, size = 180): string {
  const { kind, slots } = parseWord(text);
  const c = size / 2;
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${size}" height="${size}" ` +
      `viewBox="0 0 ${size} ${size}" class="word-diagram" data-word="${text}">`,
  ];
  if (kind === "V3") {
    const r = size * 0.36;
    parts.push(`<circle cx="${c}" cy="${c}" r="4" fill="#1c2b3a"/>`);
    for (let i = 0; i < 3; i++) {
      const a = -Math.PI / 2 + (2 * Math.PI * i) / 3;
      const [x, y] = point(c, c, r, a);
      parts.push(
        `<line x1="${c}" y1="${c}" x2="${fmt(x)}" y2="${fmt(y)}" stroke="#1c2b3a"/>`,
      );
      const [lx, ly] = point(c, c, r * 0.72, a + Math.PI / 3);
      parts.push(label(lx, ly, slots[i]));
    }
  } else {
    const d = slots.length / 2;
    const r = size * 0.33;
    const corners: [number, number][] = [];
    for (let i = 0; i < d; i++) {
      corners.push(point(c, c, r, -Math.PI / 2 + (2 * Math.PI * i) / d));
    }
    const path = corners.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    parts.push(`<polygon points="${path}" fill="none" stroke="#1c2b3a"/>`);
    for (let i = 0; i < d; i++) {
      const [x, y] = corners[i];
      const corner = slots[2 * i];
      if (corner === "v3") {
        parts.push(
          `<rect x="${fmt(x - 5)}" y="${fmt(y - 5)}" width="10" height="10" ` +
            `fill="#1c2b3a" data-slot="corner-${i}"/>`,
        );
      } else {
        const [lx, ly] = point(c, c, r * 1.28, -Math.PI / 2 + (2 * Math.PI * i) / d);
        parts.push(`<circle cx="${fmt(x)}" cy="${fmt(y)}" r="4" fill="#fff" stroke="#1c2b3a"/>`);
        parts.push(label(lx, ly, corner, `corner-${i}`));
      }
      const [nx, ny] = corners[(i + 1) % d];
      const [ex, ey] = [(x + nx) / 2, (y + ny) / 2];
      const ang = Math.atan2(ey - c, ex - c);
      const [lx, ly] = point(c, c, r * 1.18, ang);
      parts.push(label(lx, ly, slots[2 * i + 1], `edge-${i}`));
    }
  }
  parts.push("</svg>");
  return parts.join("");
}

function label(x: number, y: number, text: string, slot = ""): string {
  const attr = slot ? ` data-slot="${slot}"` : "";
  return (
    `<text x="${fmt(x)}" y="${fmt(y)}" text-anchor="middle" dominant-baseline="middle" ` +
    `font-size="12" fill="#314154"${attr}>${text === "6p" ? "6+" : text}</text>`
  );
}

/** Exact rational "p/q" (or integer) to a float for charting. */
export function rationalToNumber(text: string): number {
  const m = /^(-?\d+)(?:\/(\d+))?$/.exec(text.trim());
  if (!m) throw new Error(`not a rational: ${text}`);
  return Number(m[1]) / Number(m[2] ?? "1");
}

/** Minimal inline SVG line chart of the alpha trajectory. */
export function renderAlphaChart(
  points: { seq: number; value: number }[],
  width = 420,
  height = 140,
): string {
  const top = 4.05;
  const bottom = 2.95;
  const x = (i: number) =>
    points.length > 1 ? 24 + (i * (width - 40)) / (points.length - 1) : width / 2;
  const y = (v: number) => {
    const clamped = Math.max(bottom, Math.min(top, v));
    return height - 18 - ((clamped - bottom) * (height - 36)) / (top - bottom);
  };
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" class="alpha-chart">`,
    `<line x1="24" y1="${fmt(y(4))}" x2="${width - 16}" y2="${fmt(y(4))}" ` +
      `stroke="#2e9e5b" stroke-dasharray="4 3"/>`,
    `<text x="${width - 14}" y="${fmt(y(4))}" font-size="10" fill="#2e9e5b">4</text>`,
  ];
  if (points.length) {
    const path = points.map((p, i) => `${fmt(x(i))},${fmt(y(p.value))}`).join(" ");
    parts.push(`<polyline points="${path}" fill="none" stroke="#2457a7" stroke-width="2"/>`);
    for (const [i, p] of points.entries()) {
      parts.push(
        `<circle cx="${fmt(x(i))}" cy="${fmt(y(p.value))}" r="3" fill="#2457a7" ` +
          `data-seq="${p.seq}" data-alpha="${p.value}"/>`,
      );
    }
  }
  parts.push("</svg>");
  return parts.join("");
}
