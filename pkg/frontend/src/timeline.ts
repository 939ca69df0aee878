// Strip chart of the recent history: arousal and valence curves over the
// last N ticks, a motive band underneath, and vertical markers at motive
// switches. Hovering a tick column shows the full record via a tooltip.

import { StateFrame } from "./protocol.js";
import { motiveSwitches } from "./state.js";

const MOTIVE_COLORS: Record<string, string> = {
  ObeyHumans: "#b5179e",
  SelfPreservation: "#d00000",
  CaptureSkeleton: "#f48c06",
  Greeting: "#2d6a4f",
  Interact: "#1d3557",
  SelfEntertainment: "#6a4c93",
  NoActiveMotive: "#adb5bd",
};

const fmt = (x: number): string => (Math.round(x * 100) / 100).toString();

function polyline(
  history: StateFrame[],
  pick: (f: StateFrame) => number,
  x: (i: number) => number,
  y: (v: number) => number,
): string {
  return history.map((f, i) => `${fmt(x(i))},${fmt(y(pick(f)))}`).join(" ");
}

function describe(f: StateFrame): string {
  const theta = f.theta === null ? "-" : f.theta.toFixed(2);
  const behavior = f.behavior ?? "-";
  return (
    `tick ${f.tick} | ${f.active_motive} S=${f.S.toFixed(3)} | ` +
    `A=${f.A.toFixed(3)} V=${f.V.toFixed(3)} theta=${theta} r=${f.radius.toFixed(3)} | ` +
    `${f.emotion} | behavior ${behavior}`
  );
}

export interface TimelineOptions {
  width?: number;
  height?: number;
}

export function renderTimeline(history: StateFrame[], options: TimelineOptions = {}): string {
  const width = options.width ?? 640;
  const chartHeight = options.height ?? 150;
  const bandHeight = 16;
  const total = chartHeight + bandHeight;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${total}" class="timeline">`,
  );
  if (history.length === 0) {
    parts.push(`<text class="empty" x="${width / 2}" y="${chartHeight / 2}" text-anchor="middle">no history</text>`);
    parts.push("</svg>");
    return parts.join("\n");
  }

  const n = history.length;
  const x = (i: number): number => (n === 1 ? width / 2 : (i * width) / (n - 1));
  const y = (value: number): number => ((1 - value) * chartHeight) / 2;
  const colWidth = width / Math.max(1, n);

  parts.push(`<line class="zero-axis" x1="0" y1="${fmt(y(0))}" x2="${width}" y2="${fmt(y(0))}"/>`);

  // motive band: one rect per contiguous run of the same active motive
  let runStart = 0;
  for (let i = 1; i <= n; i++) {
    if (i === n || history[i].active_motive !== history[runStart].active_motive) {
      const motive = history[runStart].active_motive;
      const color = MOTIVE_COLORS[motive] ?? "#888888";
      parts.push(
        `<rect class="motive-band" data-motive="${motive}" x="${fmt(x(runStart))}" ` +
          `y="${chartHeight}" width="${fmt(Math.max(1, x(i - 1) - x(runStart) + colWidth))}" ` +
          `height="${bandHeight}" fill="${color}"><title>${motive}</title></rect>`,
      );
      runStart = i;
    }
  }

  parts.push(
    `<polyline class="curve arousal" fill="none" points="${polyline(history, (f) => f.A, x, y)}"/>`,
  );
  parts.push(
    `<polyline class="curve valence" fill="none" points="${polyline(history, (f) => f.V, x, y)}"/>`,
  );

  for (const sw of motiveSwitches(history)) {
    const idx = history.findIndex((f) => f.tick === sw.tick);
    parts.push(
      `<line class="switch-marker" data-to="${sw.to}" x1="${fmt(x(idx))}" y1="0" ` +
        `x2="${fmt(x(idx))}" y2="${total}"><title>${sw.from} -&gt; ${sw.to} @ ${sw.tick}</title></line>`,
    );
  }

  // invisible hover columns carrying the full record tooltip
  for (let i = 0; i < n; i++) {
    parts.push(
      `<rect class="hover-col" x="${fmt(x(i) - colWidth / 2)}" y="0" ` +
        `width="${fmt(colWidth)}" height="${total}" fill="transparent">` +
        `<title>${describe(history[i])}</title></rect>`,
    );
  }

  parts.push(
    `<text class="legend" x="4" y="12">A</text>`,
    `<text class="legend legend-v" x="16" y="12">V</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n");
}
