// Message types of the engine's live websocket protocol. The console renders
// these frames verbatim and never recomputes appraisal values locally.

export interface CatalogEntry {
  kind: string;
  name: string;
  base_intensity: number;
  default_movement_speed: number;
}

export interface SectorTableInfo {
  version: string;
  digest: string;
  words: { word: string; degrees: number }[];
}

export interface HelloFrame {
  type: "hello";
  engine_version: string;
  tick_hz: number;
  neutral_radius: number;
  sector_table: SectorTableInfo;
  percept_catalog: CatalogEntry[];
  motives: string[];
}

export interface MotiveRow {
  name: string;
  S: number;
  a: 0 | 1;
  inhibited: boolean;
}

export interface AppliedPercept {
  kind: string;
  name?: string;
  base_intensity?: number;
  movement_speed?: number;
  distance_m?: number;
  partner_id?: string;
}

export interface StateFrame {
  type: "state";
  tick: number;
  active_motive: string;
  S: number;
  A: number;
  V: number;
  theta: number | null;
  radius: number;
  emotion: string;
  behavior: string | null;
  motives: MotiveRow[];
  applied_percepts: AppliedPercept[];
}

export interface ErrorFrame {
  type: "error";
  detail: string;
}

export type ServerFrame = HelloFrame | StateFrame | ErrorFrame;

export interface InjectMessage {
  type: "inject";
  percept: AppliedPercept;
}

export interface CommandMessage {
  type: "command";
  name: string;
}

export type ClientMessage = InjectMessage | CommandMessage;

export function parseServerFrame(text: string): ServerFrame | null {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    return null;
  }
  if (typeof raw !== "object" || raw === null || !("type" in raw)) {
    return null;
  }
  const type = (raw as { type: unknown }).type;
  if (type === "hello" || type === "state" || type === "error") {
    return raw as ServerFrame;
  }
  return null;
}
