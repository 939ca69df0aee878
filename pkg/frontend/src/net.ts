// Thin websocket wrapper: parses server frames, reconnects with backoff,
// and refuses to send while disconnected.

import { ClientMessage, ServerFrame, parseServerFrame } from "./protocol.js";

export interface SocketEvents {
  onFrame: (frame: ServerFrame) => void;
  onOpen: () => void;
  onClose: () => void;
}

export class ConsoleSocket {
  private ws: WebSocket | null = null;
  private attempts = 0;
  private closed = false;

  constructor(
    private readonly url: string,
    private readonly events: SocketEvents,
  ) {}

  connect(): void {
    this.closed = false;
    this.ws = new WebSocket(this.url);
    this.ws.onopen = () => {
      this.attempts = 0;
      this.events.onOpen();
    };
    this.ws.onmessage = (event: MessageEvent) => {
      const frame = parseServerFrame(String(event.data));
      if (frame !== null) {
        this.events.onFrame(frame);
      }
    };
    this.ws.onclose = () => {
      this.events.onClose();
      if (!this.closed) {
        const backoff = Math.min(1000 * 2 ** this.attempts, 15000);
        this.attempts += 1;
        setTimeout(() => this.connect(), backoff);
      }
    };
  }

  get connected(): boolean {
    return this.ws !== null && this.ws.readyState === WebSocket.OPEN;
  }

  send(message: ClientMessage): boolean {
    if (!this.connected || this.ws === null) {
      return false;
    }
    this.ws.send(JSON.stringify(message));
    return true;
  }

  close(): void {
    this.closed = true;
    this.ws?.close();
  }
}

export function serverUrlFromLocation(loc: Location): string {
  const params = new URLSearchParams(loc.search);
  const explicit = params.get("server");
  if (explicit) {
    return explicit;
  }
  const scheme = loc.protocol === "https:" ? "wss" : "ws";
  return `${scheme}://${loc.host}/ws`;
}
