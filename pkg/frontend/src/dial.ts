// Circumplex dial renderer: pure function from engine frames to SVG markup.
// Sector geometry is drawn from the bundled word table (boundaries are the
// circular midpoints of adjacent word angles); which sector lights up comes
// verbatim from the frame's emotion field, never from local angle math.

import { StateFrame } from "./protocol.js";
import { SectorWord } from "./sectorTable.js";

export interface DialSector {
  word: string;
  centerDeg: number;
  startDeg: number;
  endDeg: number;
}

export function dialSectors(words: SectorWord[]): DialSector[] {
  const ordered = [...words].sort((a, b) => a.degrees - b.degrees);
  const n = ordered.length;
  return ordered.map((entry, i) => {
    const lo = ordered[(i - 1 + n) % n].degrees;
    const hi = ordered[(i + 1) % n].degrees;
    const start = lo > entry.degrees ? ((lo + entry.degrees + 360) / 2) % 360 : (lo + entry.degrees) / 2;
    const end = hi < entry.degrees ? ((entry.degrees + hi + 360) / 2) % 360 : (entry.degrees + hi) / 2;
    return { word: entry.word, centerDeg: entry.degrees, startDeg: start, endDeg: end };
  });
}

const fmt = (x: number): string => (Math.round(x * 100) / 100).toString();

export interface DialOptions {
  size?: number;
  dimmed?: boolean;
}

export function renderDial(
  words: SectorWord[],
  frame: StateFrame | null,
  neutralRadius: number,
  options: DialOptions = {},
): string {
  const size = options.size ?? 420;
  const cx = size / 2;
  const cy = size / 2;
  const outer = size * 0.46;
  const inner = outer * Math.min(1, Math.max(0, neutralRadius));
  const labelRadius = outer * 0.82;

  const px = (deg: number, r: number): [number, number] => {
    const rad = (deg * Math.PI) / 180;
    return [cx + r * Math.cos(rad), cy - r * Math.sin(rad)];
  };

  const parts: string[] = [];
  const classes = ["dial", options.dimmed ? "dimmed" : ""].filter(Boolean).join(" ");
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" ` +
      `class="${classes}" data-connection="${options.dimmed ? "down" : "up"}">`,
  );

  const highlighted = frame && frame.emotion !== "neutral" ? frame.emotion : null;
  for (const sector of dialSectors(words)) {
    const span = (sector.endDeg - sector.startDeg + 360) % 360;
    const [x1, y1] = px(sector.startDeg, outer);
    const [x2, y2] = px(sector.startDeg + span, outer);
    const [x3, y3] = px(sector.startDeg + span, inner);
    const [x4, y4] = px(sector.startDeg, inner);
    const d =
      `M ${fmt(x1)} ${fmt(y1)} ` +
      `A ${fmt(outer)} ${fmt(outer)} 0 0 0 ${fmt(x2)} ${fmt(y2)} ` +
      `L ${fmt(x3)} ${fmt(y3)} ` +
      `A ${fmt(inner)} ${fmt(inner)} 0 0 1 ${fmt(x4)} ${fmt(y4)} Z`;
    const active = sector.word === highlighted;
    parts.push(
      `<path class="sector${active ? " active" : ""}" data-word="${sector.word}"` +
        `${active ? ' data-highlight="true"' : ""} d="${d}"><title>${sector.word}</title></path>`,
    );
    const [lx, ly] = px(sector.centerDeg, labelRadius);
    parts.push(
      `<text class="sector-label" x="${fmt(lx)}" y="${fmt(ly)}" ` +
        `text-anchor="middle" dominant-baseline="middle">${sector.word}</text>`,
    );
  }

  const neutralActive = frame !== null && frame.emotion === "neutral";
  parts.push(
    `<circle class="core${neutralActive ? " active" : ""}"` +
      `${neutralActive ? ' data-highlight="true"' : ""} cx="${fmt(cx)}" cy="${fmt(cy)}" ` +
      `r="${fmt(inner)}"><title>neutral</title></circle>`,
  );

  // axes: valence right, arousal up
  parts.push(`<line class="axis" x1="${fmt(cx - outer)}" y1="${fmt(cy)}" x2="${fmt(cx + outer)}" y2="${fmt(cy)}"/>`);
  parts.push(`<line class="axis" x1="${fmt(cx)}" y1="${fmt(cy - outer)}" x2="${fmt(cx)}" y2="${fmt(cy + outer)}"/>`);

  if (frame !== null) {
    const [pxX, pxY] = [cx + frame.V * outer, cy - frame.A * outer];
    parts.push(
      `<circle class="av-point" cx="${fmt(pxX)}" cy="${fmt(pxY)}" r="5">` +
        `<title>V=${frame.V.toFixed(3)} A=${frame.A.toFixed(3)} ${frame.emotion}</title></circle>`,
    );
    parts.push(
      `<text class="readout" x="${fmt(cx)}" y="${fmt(size - 6)}" text-anchor="middle">` +
        `tick ${frame.tick} · ${frame.emotion} · ${frame.active_motive}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
