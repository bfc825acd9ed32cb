/**
 * Message wire schema shared with the engine package: control messages are
 * {type, seq, payload}, replies are {type, payload}, and every value is
 * structured-clone/JSON safe (binary payloads travel as integer arrays).
 */
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
];
export const REPLY_TYPES = [
    "channel-value",
    "file-list",
    "console",
    "compile-result",
    "finished",
];
// Builders; seq is stamped by the node when posting.
export const compileOrc = (source) => ({ type: "compile-orc", seq: 0, payload: { source } });
export const readScore = (text) => ({ type: "read-score", seq: 0, payload: { text } });
export const event = (ev) => ({ type: "event", seq: 0, payload: { event: ev } });
export const setChannel = (name, value) => ({ type: "set-channel", seq: 0, payload: { name, value } });
export const getChannel = (name, requestId) => ({ type: "get-channel", seq: 0, payload: { name, request_id: requestId } });
export const midi = (status, d1, d2) => ({ type: "midi", seq: 0, payload: { status, d1, d2 } });
export const writeFile = (path, data) => ({ type: "write-file", seq: 0, payload: { path, data } });
export const listFiles = (prefix, requestId) => ({ type: "list-files", seq: 0, payload: { prefix, request_id: requestId } });
export const start = () => ({ type: "start", seq: 0, payload: {} });
export const stop = () => ({ type: "stop", seq: 0, payload: {} });
export const reset = () => ({ type: "reset", seq: 0, payload: {} });
/** Validate an incoming reply shape (untrusted: it crossed a port). */
export function isReply(value) {
    if (typeof value !== "object" || value === null)
        return false;
    const v = value;
    return typeof v.type === "string" &&
        REPLY_TYPES.includes(v.type) &&
        typeof v.payload === "object" && v.payload !== null;
}
export function isMessage(value) {
    if (typeof value !== "object" || value === null)
        return false;
    const v = value;
    return typeof v.type === "string" &&
        MESSAGE_TYPES.includes(v.type) &&
        typeof v.seq === "number" &&
        typeof v.payload === "object" && v.payload !== null;
}
