// Injection controls: a percept palette generated from the engine's catalog
// (so the vocabularies cannot drift) plus sliders for intensity, movement
// speed, and distance. Every control sends exactly one protocol message.

import { CatalogEntry, InjectMessage } from "./protocol.js";

export interface SliderValues {
  useIntensity: boolean;
  intensity: number;
  useSpeed: boolean;
  speed: number;
  useDistance: boolean;
  distance: number;
}

export function buildInjectMessage(entry: CatalogEntry, sliders: SliderValues): InjectMessage {
  const percept: InjectMessage["percept"] = { kind: entry.kind, name: entry.name };
  if (sliders.useIntensity) {
    percept.base_intensity = sliders.intensity;
  }
  if (sliders.useSpeed) {
    percept.movement_speed = sliders.speed;
  }
  if (sliders.useDistance) {
    percept.distance_m = sliders.distance;
  }
  return { type: "inject", percept };
}

export function renderPalette(catalog: CatalogEntry[], connected: boolean): string {
  const groups = new Map<string, CatalogEntry[]>();
  for (const entry of catalog) {
    const list = groups.get(entry.kind) ?? [];
    list.push(entry);
    groups.set(entry.kind, list);
  }
  const parts: string[] = [];
  for (const [kind, entries] of groups) {
    parts.push(`<fieldset class="palette-group"><legend>${kind}</legend>`);
    for (const entry of entries) {
      parts.push(
        `<button class="percept-btn" data-name="${entry.name}"` +
          `${connected ? "" : " disabled"} title="base ${entry.base_intensity}, ` +
          `speed ${entry.default_movement_speed}">${entry.name}</button>`,
      );
    }
    parts.push(`</fieldset>`);
  }
  return parts.join("\n");
}

export function renderMotiveStack(
  motives: { name: string; S: number; a: 0 | 1; inhibited: boolean }[],
): string {
  const rows = motives
    .map((m) => {
      const status = m.a === 1 ? "active" : m.inhibited ? "inhibited" : "idle";
      return (
        `<tr class="motive-${status}"><td>${m.name}</td>` +
        `<td>${m.S.toFixed(3)}</td><td>${status}</td></tr>`
      );
    })
    .join("");
  return `<table class="motive-stack"><thead><tr><th>motive</th><th>S</th><th>state</th></tr></thead><tbody>${rows}</tbody></table>`;
}
