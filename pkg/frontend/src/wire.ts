/**
 * Message wire schema shared with the engine package: control messages are
 * {type, seq, payload}, replies are {type, payload}, and every value is
 * structured-clone/JSON safe (binary payloads travel as integer arrays).
 */

export type EventKind = "note" | "end" | "release";

export interface WireEvent {
  kind: EventKind;
  instr: number;
  start: number;
  dur: number;
  pfields: number[];
  key: number | null;
}

export interface WireMessage {
  type: string;
  seq: number;
  payload: Record<string, unknown>;
}

export interface WireReply {
  type: string;
  payload: Record<string, unknown>;
}

export const MESSAGE_TYPES = [
  "compile-orc",
  "read-score",
  "event",
  "set-channel",
  "get-channel",
  "midi",
  "write-file",
  "list-files",
  "start",
  "stop",
  "reset",
] as const;

export const REPLY_TYPES = [
  "channel-value",
  "file-list",
  "console",
  "compile-result",
  "finished",
] as const;

// Builders; seq is stamped by the node when posting.
export const compileOrc = (source: string): WireMessage =>
  ({ type: "compile-orc", seq: 0, payload: { source } });

export const readScore = (text: string): WireMessage =>
  ({ type: "read-score", seq: 0, payload: { text } });

export const event = (ev: WireEvent): WireMessage =>
  ({ type: "event", seq: 0, payload: { event: ev } });

export const setChannel = (name: string, value: number): WireMessage =>
  ({ type: "set-channel", seq: 0, payload: { name, value } });

export const getChannel = (name: string, requestId: number): WireMessage =>
  ({ type: "get-channel", seq: 0, payload: { name, request_id: requestId } });

export const midi = (status: number, d1: number, d2: number): WireMessage =>
  ({ type: "midi", seq: 0, payload: { status, d1, d2 } });

export const writeFile = (path: string, data: number[]): WireMessage =>
  ({ type: "write-file", seq: 0, payload: { path, data } });

export const listFiles = (prefix: string, requestId: number): WireMessage =>
  ({ type: "list-files", seq: 0, payload: { prefix, request_id: requestId } });

export const start = (): WireMessage => ({ type: "start", seq: 0, payload: {} });
export const stop = (): WireMessage => ({ type: "stop", seq: 0, payload: {} });
export const reset = (): WireMessage => ({ type: "reset", seq: 0, payload: {} });

/** Validate an incoming reply shape (untrusted: it crossed a port). */
export function isReply(value: unknown): value is WireReply {
  if (typeof value !== "object" || value === null) return false;
  const v = value as Record<string, unknown>;
  return typeof v.type === "string" &&
    (REPLY_TYPES as readonly string[]).includes(v.type) &&
    typeof v.payload === "object" && v.payload !== null;
}

export function isMessage(value: unknown): value is WireMessage {
  if (typeof value !== "object" || value === null) return false;
  const v = value as Record<string, unknown>;
  return typeof v.type === "string" &&
    (MESSAGE_TYPES as readonly string[]).includes(v.type) &&
    typeof v.seq === "number" &&
    typeof v.payload === "object" && v.payload !== null;
}
