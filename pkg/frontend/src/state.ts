// Console state: a reducer over server frames plus a fixed-size history ring.
// All rendered values come verbatim from the engine's frames.

import {
  AppliedPercept,
  HelloFrame,
  ServerFrame,
  StateFrame,
} from "./protocol.js";
import { SECTOR_TABLE_DIGEST } from "./sectorTable.js";

export const HISTORY_TICKS = 600;

export type ConnectionStatus = "connecting" | "connected" | "disconnected";

export interface PendingInjection {
  key: string;
  percept: AppliedPercept;
  sentAt: number;
}

export interface ConsoleState {
  connection: ConnectionStatus;
  hello: HelloFrame | null;
  latest: StateFrame | null;
  history: StateFrame[];
  pending: PendingInjection[];
  lastError: string | null;
  sectorDigestMismatch: boolean;
}

export function initialState(): ConsoleState {
  return {
    connection: "connecting",
    hello: null,
    latest: null,
    history: [],
    pending: [],
    lastError: null,
    sectorDigestMismatch: false,
  };
}

export function perceptKey(p: AppliedPercept): string {
  return [p.kind, p.name ?? "", p.distance_m ?? "", p.partner_id ?? ""].join("|");
}

export function applyFrame(state: ConsoleState, frame: ServerFrame): ConsoleState {
  switch (frame.type) {
    case "hello":
      return {
        ...state,
        connection: "connected",
        hello: frame,
        sectorDigestMismatch: frame.sector_table.digest !== SECTOR_TABLE_DIGEST,
      };
    case "state": {
      const history = state.history.concat(frame);
      if (history.length > HISTORY_TICKS) {
        history.splice(0, history.length - HISTORY_TICKS);
      }
      // an injection stops being "pending" once echoed in a state frame
      const echoed = new Set(frame.applied_percepts.map(perceptKey));
      const pending = state.pending.filter((p) => !echoed.has(p.key));
      return { ...state, connection: "connected", latest: frame, history, pending };
    }
    case "error":
      return { ...state, lastError: frame.detail };
  }
}

export function markDisconnected(state: ConsoleState): ConsoleState {
  return { ...state, connection: "disconnected", pending: [] };
}

export function trackInjection(state: ConsoleState, percept: AppliedPercept): ConsoleState {
  const pending = state.pending.concat({
    key: perceptKey(percept),
    percept,
    sentAt: state.latest ? state.latest.tick : 0,
  });
  return { ...state, pending };
}

export interface MotiveSwitch {
  tick: number;
  from: string;
  to: string;
}

export function motiveSwitches(history: StateFrame[]): MotiveSwitch[] {
  const switches: MotiveSwitch[] = [];
  for (let i = 1; i < history.length; i++) {
    if (history[i].active_motive !== history[i - 1].active_motive) {
      switches.push({
        tick: history[i].tick,
        from: history[i - 1].active_motive,
        to: history[i].active_motive,
      });
    }
  }
  return switches;
}
