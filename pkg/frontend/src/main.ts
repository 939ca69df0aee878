// Wires the socket, reducer, and renderers to the DOM. The console is a pure
// view over the engine's frames; the only state it owns is the ring-buffer
// history and the pending-injection bookkeeping.

import { buildInjectMessage, renderMotiveStack, renderPalette, SliderValues } from "./controls.js";
import { renderDial } from "./dial.js";
import { ConsoleSocket, serverUrlFromLocation } from "./net.js";
import { CatalogEntry } from "./protocol.js";
import {
  ConsoleState,
  applyFrame,
  initialState,
  markDisconnected,
  trackInjection,
} from "./state.js";
import { SECTOR_WORDS } from "./sectorTable.js";
import { renderTimeline } from "./timeline.js";

const $ = (id: string): HTMLElement => {
  const el = document.getElementById(id);
  if (el === null) {
    throw new Error(`missing element #${id}`);
  }
  return el;
};

let state: ConsoleState = initialState();
let toastTimer: ReturnType<typeof setTimeout> | null = null;

function sliderValues(): SliderValues {
  return {
    useIntensity: ($("use-intensity") as HTMLInputElement).checked,
    intensity: Number(($("intensity") as HTMLInputElement).value),
    useSpeed: ($("use-speed") as HTMLInputElement).checked,
    speed: Number(($("speed") as HTMLInputElement).value),
    useDistance: ($("use-distance") as HTMLInputElement).checked,
    distance: Number(($("distance") as HTMLInputElement).value),
  };
}

function toast(message: string): void {
  const el = $("toast");
  el.textContent = message;
  el.classList.add("visible");
  if (toastTimer !== null) {
    clearTimeout(toastTimer);
  }
  toastTimer = setTimeout(() => el.classList.remove("visible"), 4000);
}

function render(): void {
  const connected = state.connection === "connected";
  const words = state.hello ? state.hello.sector_table.words : SECTOR_WORDS;
  const neutralRadius = state.hello ? state.hello.neutral_radius : 0.15;

  $("dial").innerHTML = renderDial(words, state.latest, neutralRadius, {
    dimmed: !connected,
  });
  $("timeline").innerHTML = renderTimeline(state.history);
  $("motives").innerHTML = state.latest ? renderMotiveStack(state.latest.motives) : "";
  $("status").textContent = state.connection;
  $("status").className = `status ${state.connection}`;
  ($("reconnect") as HTMLButtonElement).hidden = connected;
  $("digest-banner").hidden = !state.sectorDigestMismatch;
  $("pending").textContent = state.pending.length
    ? `pending: ${state.pending.map((p) => p.percept.name ?? p.percept.kind).join(", ")}`
    : "";

  if (state.hello && !paletteBuilt) {
    buildPaletteDom(state.hello.percept_catalog);
    paletteBuilt = true;
  }
  for (const btn of document.querySelectorAll<HTMLButtonElement>(".percept-btn")) {
    btn.disabled = !connected;
  }
  ($("send-command") as HTMLButtonElement).disabled = !connected;
}

let paletteBuilt = false;
let catalogByName = new Map<string, CatalogEntry>();

function buildPaletteDom(catalog: CatalogEntry[]): void {
  catalogByName = new Map(catalog.map((e) => [e.name, e]));
  $("palette").innerHTML = renderPalette(catalog, state.connection === "connected");
  $("palette").addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (!target.classList.contains("percept-btn")) {
      return;
    }
    const entry = catalogByName.get(target.dataset.name ?? "");
    if (!entry) {
      return;
    }
    const message = buildInjectMessage(entry, sliderValues());
    if (socket.send(message)) {
      state = trackInjection(state, message.percept);
      render();
    }
  });
}

const socket = new ConsoleSocket(serverUrlFromLocation(window.location), {
  onFrame: (frame) => {
    if (frame.type === "error") {
      toast(`engine: ${frame.detail}`);
    }
    state = applyFrame(state, frame);
    render();
  },
  onOpen: () => {
    state = { ...state, connection: "connected" };
    render();
  },
  onClose: () => {
    state = markDisconnected(state);
    render();
  },
});

$("reconnect").addEventListener("click", () => socket.connect());
$("send-command").addEventListener("click", () => {
  const name = ($("command-name") as HTMLInputElement).value.trim();
  if (name) {
    socket.send({ type: "command", name });
  }
});
for (const id of ["intensity", "speed", "distance"]) {
  $(id).addEventListener("input", () => {
    $(`${id}-value`).textContent = ($(id) as HTMLInputElement).value;
  });
}

socket.connect();
render();
