/**
 * Self-contained engine module for the render scope: orchestra language,
 * score parsing, block engine, and the processor core (cnt automaton +
 * message handling over the wire schema).
 *
 * No imports/exports: the compiled output is a plain script so it can be
 * instantiated synchronously from packaged bytes inside the audio render
 * scope (which has no loading facilities). The module registers itself as
 * globalThis.__blocksynthEngineModule.
 */

(() => {
  if ((globalThis as any).__blocksynthEngineModule) return;

  const TWO_PI = 2 * Math.PI;
  const FRAME_EPS = 1e-9;

  // ---- diagnostics ----------------------------------------------------------

  interface Diag { line: number; column: number; message: string }

  const diag = (line: number, column: number, message: string): Diag =>
    ({ line, column, message });

  // ---- engine config --------------------------------------------------------

  interface EngineConfig {
    sr: number;
    ksmps: number;
    nchnls: number;
    nchnlsIn: number;
    zerodbfs: number;
  }

  function validateConfig(c: EngineConfig): void {
    if (c.sr < 1 || c.ksmps < 1 || c.nchnls < 1 || c.nchnlsIn < 0 || !(c.zerodbfs > 0)) {
      throw new Error("invalid engine config");
    }
  }

  // ---- orchestra tokenizer ----------------------------------------------------

  interface Token { kind: string; text: string; line: number; column: number }

  const TOKEN_RE =
    /([ \t]+)|(;[^\n]*)|(\r?\n)|((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|("[^"\n]*")|([+\-*/(),=])/y;

  const RESERVED = new Set(["instr", "endin", "out", "oscil", "line", "in", "chan"]);

  function tokenize(source: string): Token[] {
    const tokens: Token[] = [];
    let line = 1;
    let col = 1;
    let pos = 0;
    while (pos < source.length) {
      TOKEN_RE.lastIndex = pos;
      const m = TOKEN_RE.exec(source);
      if (!m) {
        tokens.push({ kind: "error", text: source[pos], line, column: col });
        pos += 1;
        col += 1;
        continue;
      }
      const text = m[0];
      if (m[3] !== undefined) {
        tokens.push({ kind: "nl", text: "\n", line, column: col });
        line += 1;
        col = 1;
      } else if (m[1] !== undefined || m[2] !== undefined) {
        col += text.length;
      } else {
        let kind = "op";
        if (m[4] !== undefined) kind = "number";
        else if (m[5] !== undefined) kind = /^p\d+$/.test(text) ? "pfield" : "ident";
        else if (m[6] !== undefined) kind = "string";
        tokens.push({ kind, text, line, column: col });
        col += text.length;
      }
      pos = m.index + text.length;
    }
    tokens.push({ kind: "eof", text: "", line, column: col });
    return tokens;
  }

  // ---- orchestra AST + parser ---------------------------------------------------

  type Expr =
    | { t: "num"; value: number }
    | { t: "pfield"; index: number }
    | { t: "var"; name: string }
    | { t: "bin"; op: string; left: Expr; right: Expr }
    | { t: "oscil"; amp: Expr; freq: Expr }
    | { t: "line"; a: Expr; dur: Expr; b: Expr }
    | { t: "in"; channel: number }
    | { t: "chan"; name: string };

  type Stmt =
    | { t: "assign"; name: string; expr: Expr; line: number; column: number }
    | { t: "out"; exprs: Expr[]; line: number; column: number };

  interface InstrumentDef { number: number; body: Stmt[]; line: number }

  class ParseAbort extends Error {}

  class Parser {
    tokens: Token[];
    pos = 0;
    diagnostics: Diag[] = [];

    constructor(tokens: Token[]) {
      this.tokens = tokens;
    }

    peek(): Token { return this.tokens[this.pos]; }

    advance(): Token {
      const tok = this.tokens[this.pos];
      if (tok.kind !== "eof") this.pos += 1;
      return tok;
    }

    fail(tok: Token, message: string): ParseAbort {
      this.diagnostics.push(diag(tok.line, tok.column, message));
      return new ParseAbort(message);
    }

    skipNewlines(): void {
      while (this.peek().kind === "nl") this.advance();
    }

    skipToNewline(): void {
      while (this.peek().kind !== "nl" && this.peek().kind !== "eof") this.advance();
    }

    expectOp(ch: string): void {
      const tok = this.peek();
      if (tok.kind === "op" && tok.text === ch) { this.advance(); return; }
      throw this.fail(tok, `expected '${ch}'`);
    }

    parseProgram(): InstrumentDef[] {
      const out: InstrumentDef[] = [];
      for (;;) {
        this.skipNewlines();
        const tok = this.peek();
        if (tok.kind === "eof") return out;
        if (tok.kind === "ident" && tok.text === "instr") {
          const instr = this.parseInstr();
          if (instr) out.push(instr);
        } else {
          this.diagnostics.push(diag(tok.line, tok.column, "expected 'instr'"));
          this.skipToNewline();
        }
      }
    }

    parseInstr(): InstrumentDef | null {
      const header = this.advance();
      const tok = this.peek();
      if (tok.kind !== "number" || !/^\d+$/.test(tok.text) || parseInt(tok.text, 10) < 1) {
        this.diagnostics.push(diag(tok.line, tok.column,
          "instrument number must be a positive integer"));
        this.skipToEndin();
        return null;
      }
      const number = parseInt(this.advance().text, 10);
      const body: Stmt[] = [];
      let bad = false;
      for (;;) {
        this.skipNewlines();
        const t = this.peek();
        if (t.kind === "eof") {
          this.diagnostics.push(diag(header.line, header.column,
            "'instr' without matching 'endin'"));
          return null;
        }
        if (t.kind === "ident" && t.text === "endin") {
          this.advance();
          return bad ? null : { number, body, line: header.line };
        }
        try {
          body.push(this.parseStmt());
          const nxt = this.peek();
          if (nxt.kind !== "nl" && nxt.kind !== "eof") {
            throw this.fail(nxt, `unexpected '${nxt.text}' after statement`);
          }
        } catch (e) {
          if (!(e instanceof ParseAbort)) throw e;
          bad = true;
          this.skipToNewline();
        }
      }
    }

    skipToEndin(): void {
      for (;;) {
        const tok = this.peek();
        if (tok.kind === "eof") return;
        this.advance();
        if (tok.kind === "ident" && tok.text === "endin") return;
      }
    }

    parseStmt(): Stmt {
      const tok = this.peek();
      if (tok.kind === "ident" && tok.text === "out") {
        this.advance();
        const exprs = [this.parseExpr()];
        while (this.peek().kind === "op" && this.peek().text === ",") {
          this.advance();
          exprs.push(this.parseExpr());
        }
        return { t: "out", exprs, line: tok.line, column: tok.column };
      }
      if (tok.kind === "ident") {
        if (RESERVED.has(tok.text)) throw this.fail(tok, `'${tok.text}' is reserved`);
        const name = this.advance().text;
        this.expectOp("=");
        return { t: "assign", name, expr: this.parseExpr(), line: tok.line, column: tok.column };
      }
      throw this.fail(tok, `expected a statement, found '${tok.text || tok.kind}'`);
    }

    parseExpr(): Expr {
      let left = this.parseTerm();
      while (this.peek().kind === "op" && (this.peek().text === "+" || this.peek().text === "-")) {
        const op = this.advance().text;
        left = { t: "bin", op, left, right: this.parseTerm() };
      }
      return left;
    }

    parseTerm(): Expr {
      let left = this.parseFactor();
      while (this.peek().kind === "op" && (this.peek().text === "*" || this.peek().text === "/")) {
        const op = this.advance().text;
        left = { t: "bin", op, left, right: this.parseFactor() };
      }
      return left;
    }

    parseFactor(): Expr {
      const tok = this.peek();
      if (tok.kind === "number") {
        this.advance();
        return { t: "num", value: parseFloat(tok.text) };
      }
      if (tok.kind === "pfield") {
        this.advance();
        const index = parseInt(tok.text.slice(1), 10);
        if (index < 1) throw this.fail(tok, "p-field index must be 1 or greater");
        return { t: "pfield", index };
      }
      if (tok.kind === "op" && tok.text === "(") {
        this.advance();
        const inner = this.parseExpr();
        this.expectOp(")");
        return inner;
      }
      if (tok.kind === "ident") {
        const name = tok.text;
        if (name === "oscil" || name === "line" || name === "in" || name === "chan") {
          return this.parseCall(name);
        }
        if (RESERVED.has(name)) throw this.fail(tok, `'${name}' is reserved`);
        this.advance();
        return { t: "var", name };
      }
      throw this.fail(tok, `expected an expression, found '${tok.text || tok.kind}'`);
    }

    parseCall(name: string): Expr {
      const tok = this.advance();
      this.expectOp("(");
      if (name === "in") {
        const arg = this.peek();
        if (arg.kind !== "number" || !/^\d+$/.test(arg.text)) {
          throw this.fail(arg, "in() takes an integer channel");
        }
        this.advance();
        this.expectOp(")");
        return { t: "in", channel: parseInt(arg.text, 10) };
      }
      if (name === "chan") {
        const arg = this.peek();
        if (arg.kind !== "string") throw this.fail(arg, "chan() takes a quoted channel name");
        this.advance();
        const chanName = arg.text.slice(1, -1);
        if (!chanName) throw this.fail(arg, "channel name must be non-empty");
        this.expectOp(")");
        return { t: "chan", name: chanName };
      }
      const args = [this.parseExpr()];
      while (this.peek().kind === "op" && this.peek().text === ",") {
        this.advance();
        args.push(this.parseExpr());
      }
      this.expectOp(")");
      if (name === "oscil") {
        if (args.length !== 2) throw this.fail(tok, "oscil() takes exactly 2 arguments");
        return { t: "oscil", amp: args[0], freq: args[1] };
      }
      if (args.length !== 3) throw this.fail(tok, "line() takes exactly 3 arguments");
      return { t: "line", a: args[0], dur: args[1], b: args[2] };
    }
  }

  function parseOrchestra(source: string): { instruments: InstrumentDef[]; diagnostics: Diag[] } {
    const parser = new Parser(tokenize(source));
    const instruments = parser.parseProgram();
    return { instruments, diagnostics: parser.diagnostics };
  }

  // ---- semantic checks ------------------------------------------------------------

  const BUILTINS = ["sr", "ksmps", "nchnls", "nchnls_i", "zerodbfs"];

  function checkInstrument(instr: InstrumentDef, nchnls: number, nchnlsIn: number): Diag[] {
    const diags: Diag[] = [];
    const assigned = new Set(BUILTINS);
    let outSeen = false;

    const walk = (node: Expr, line: number, column: number): void => {
      switch (node.t) {
        case "var":
          if (!assigned.has(node.name)) {
            diags.push(diag(line, column, `unknown identifier '${node.name}'`));
          }
          break;
        case "bin":
          walk(node.left, line, column);
          walk(node.right, line, column);
          break;
        case "oscil":
          walk(node.amp, line, column);
          walk(node.freq, line, column);
          break;
        case "line":
          walk(node.a, line, column);
          walk(node.dur, line, column);
          walk(node.b, line, column);
          break;
        case "in":
          if (node.channel >= nchnlsIn) {
            diags.push(diag(line, column,
              `in(${node.channel}) out of range: engine has ${nchnlsIn} input channel(s)`));
          }
          break;
        default:
          break;
      }
    };

    for (const stmt of instr.body) {
      if (stmt.t === "assign") {
        walk(stmt.expr, stmt.line, stmt.column);
        assigned.add(stmt.name);
      } else {
        if (outSeen) diags.push(diag(stmt.line, stmt.column, "more than one out statement"));
        outSeen = true;
        if (stmt.exprs.length > nchnls) {
          diags.push(diag(stmt.line, stmt.column,
            `out has ${stmt.exprs.length} channels but engine has ${nchnls}`));
        }
        for (const e of stmt.exprs) walk(e, stmt.line, stmt.column);
      }
    }
    return diags;
  }

  // ---- closure compiler --------------------------------------------------------------

  interface RenderCtx {
    vals: Float64Array;
    state: Float64Array;
    chans: Float64Array;
    pfields: number[];
    spin: Float64Array;
    inOff: number;
    k: number;
  }

  type Sampler = (ctx: RenderCtx) => number;

  interface CompiledInstrument {
    number: number;
    assigns: Array<[number, Sampler]>;
    outs: Sampler[];
    nvals: number;
    nstate: number;
    chanNames: string[];
  }

  function compileInstrument(instr: InstrumentDef, cfg: EngineConfig): CompiledInstrument {
    const slots = new Map<string, number>();
    const chanNames: string[] = [];
    let nstate = 0;
    const builtins: Record<string, number> = {
      sr: cfg.sr, ksmps: cfg.ksmps, nchnls: cfg.nchnls,
      nchnls_i: cfg.nchnlsIn, zerodbfs: cfg.zerodbfs,
    };

    const compile = (node: Expr): Sampler => {
      switch (node.t) {
        case "num": {
          const v = node.value;
          return () => v;
        }
        case "pfield": {
          const idx = node.index - 1;
          return (ctx) => idx < ctx.pfields.length ? ctx.pfields[idx] : 0;
        }
        case "var": {
          if (node.name in builtins && !slots.has(node.name)) {
            const v = builtins[node.name];
            return () => v;
          }
          const slot = slots.get(node.name)!;
          return (ctx) => ctx.vals[slot];
        }
        case "bin": {
          const lf = compile(node.left);
          const rf = compile(node.right);
          switch (node.op) {
            case "+": return (ctx) => lf(ctx) + rf(ctx);
            case "-": return (ctx) => lf(ctx) - rf(ctx);
            case "*": return (ctx) => lf(ctx) * rf(ctx);
            default: return (ctx) => lf(ctx) / rf(ctx); // IEEE inf/nan, clamped on write
          }
        }
        case "oscil": {
          const ampf = compile(node.amp);
          const freqf = compile(node.freq);
          const slot = nstate++;
          const invSr = 1 / cfg.sr;
          return (ctx) => {
            let ph = ctx.state[slot];
            const y = ampf(ctx) * Math.sin(TWO_PI * ph);
            ph += freqf(ctx) * invSr;
            if (!(ph >= 0 && ph < 1)) ph -= Math.floor(ph);
            ctx.state[slot] = ph;
            return y;
          };
        }
        case "line": {
          const af = compile(node.a);
          const df = compile(node.dur);
          const bf = compile(node.b);
          const invSr = 1 / cfg.sr;
          return (ctx) => {
            const dur = df(ctx);
            const b = bf(ctx);
            const t = ctx.k * invSr;
            if (dur <= 0 || t >= dur) return b;
            const a = af(ctx);
            return a + (b - a) * (t / dur);
          };
        }
        case "in": {
          const ch = node.channel;
          return (ctx) => ctx.spin[ctx.inOff + ch];
        }
        default: {
          let idx = chanNames.indexOf(node.name);
          if (idx < 0) { idx = chanNames.length; chanNames.push(node.name); }
          return (ctx) => ctx.chans[idx];
        }
      }
    };

    const assigns: Array<[number, Sampler]> = [];
    let outs: Sampler[] = [];
    for (const stmt of instr.body) {
      if (stmt.t === "assign") {
        const fn = compile(stmt.expr);
        if (!slots.has(stmt.name)) slots.set(stmt.name, slots.size);
        assigns.push([slots.get(stmt.name)!, fn]);
      } else {
        outs = stmt.exprs.map(compile);
      }
    }
    return { number: instr.number, assigns, outs, nvals: slots.size, nstate, chanNames };
  }

  // ---- score events -----------------------------------------------------------------

  interface ScoreEvent {
    kind: "note" | "end" | "release";
    instr: number;
    start: number;
    dur: number;
    pfields: number[];
    key: number | null;
  }

  function parseScore(text: string): { events: ScoreEvent[]; diagnostics: Diag[] } {
    const events: ScoreEvent[] = [];
    const diags: Diag[] = [];
    const lines = text.split(/\r?\n/);
    for (let i = 0; i < lines.length; i++) {
      const lineno = i + 1;
      const line = lines[i].split(";", 1)[0].trim();
      if (!line) continue;
      const fields = line.split(/\s+/);
      const op = fields[0];
      if (op === "i") {
        if (fields.length < 4) {
          diags.push(diag(lineno, 1, "note line needs INSTR START DUR"));
          continue;
        }
        const instr = Number(fields[1]);
        if (!/^\d+$/.test(fields[1]) || instr < 1) {
          diags.push(diag(lineno, 1, `instrument must be a positive integer: '${fields[1]}'`));
          continue;
        }
        const nums = fields.slice(2).map(Number);
        if (nums.some((n) => Number.isNaN(n))) {
          diags.push(diag(lineno, 1, "malformed number in note line"));
          continue;
        }
        const [startT, dur, ...pfields] = nums;
        if (startT < 0) { diags.push(diag(lineno, 1, "start must be >= 0")); continue; }
        if (dur === 0) {
          diags.push(diag(lineno, 1, "duration must be nonzero (negative = held)"));
          continue;
        }
        events.push({ kind: "note", instr, start: startT, dur, pfields, key: null });
      } else if (op === "e") {
        if (fields.length > 2) { diags.push(diag(lineno, 1, "end line takes at most one time")); continue; }
        let time = 0;
        if (fields.length === 2) {
          time = Number(fields[1]);
          if (Number.isNaN(time)) { diags.push(diag(lineno, 1, "malformed end time")); continue; }
          if (time < 0) { diags.push(diag(lineno, 1, "end time must be >= 0")); continue; }
        }
        events.push({ kind: "end", instr: 0, start: time, dur: 0, pfields: [], key: null });
      } else {
        diags.push(diag(lineno, 1, `unknown score statement '${op}'`));
      }
    }
    return { events, diagnostics: diags };
  }

  function midiToEvent(status: number, d1: number, d2: number): ScoreEvent | null {
    const kind = status & 0xf0;
    const channel = status & 0x0f;
    if (kind === 0x90 && d2 > 0) {
      const freq = 440 * Math.pow(2, (d1 - 69) / 12);
      return { kind: "note", instr: channel + 1, start: 0, dur: -1,
               pfields: [d2 / 127, freq], key: d1 };
    }
    if (kind === 0x80 || (kind === 0x90 && d2 === 0)) {
      return { kind: "release", instr: channel + 1, start: 0, dur: 0, pfields: [], key: d1 };
    }
    return null;
  }

  // ---- the engine ----------------------------------------------------------------------

  interface ActiveNote {
    instrNum: number;
    compiled: CompiledInstrument;
    ctx: RenderCtx;
    framesDone: number;
    blocksLeft: number | null;
    held: boolean;
    key: number | null;
  }

  interface QueuedEvent { block: number; start: number; seq: number; event: ScoreEvent }

  class Engine {
    config: EngineConfig;
    console: ((text: string) => void) | null = null;
    spin: Float64Array;
    spout: Float64Array;
    blockIndex = 0;
    finished = false;
    clampedSamples = 0;
    private instruments = new Map<number, CompiledInstrument>();
    private bus = new Map<string, number>();
    private pending: QueuedEvent[] = [];
    private active: ActiveNote[] = [];
    private seq = 0;
    private endReached = false;

    constructor(config: EngineConfig) {
      validateConfig(config);
      this.config = config;
      this.spin = new Float64Array(config.ksmps * config.nchnlsIn);
      this.spout = new Float64Array(config.ksmps * config.nchnls);
    }

    private say(text: string): void {
      if (this.console) this.console(text);
    }

    get timeSeconds(): number {
      return this.blockIndex * this.config.ksmps / this.config.sr;
    }

    compileOrc(source: string): { ok: boolean; diagnostics: Diag[]; instruments: number[] } {
      const { instruments, diagnostics } = parseOrchestra(source);
      const diags = [...diagnostics];
      if (!diags.length) {
        for (const instr of instruments) {
          diags.push(...checkInstrument(instr, this.config.nchnls, this.config.nchnlsIn));
        }
      }
      if (diags.length) {
        for (const d of diags) this.say(`error: line ${d.line}:${d.column}: ${d.message}`);
        return { ok: false, diagnostics: diags, instruments: [] };
      }
      const numbers: number[] = [];
      for (const instr of instruments) {
        this.instruments.set(instr.number, compileInstrument(instr, this.config));
        numbers.push(instr.number);
      }
      numbers.sort((a, b) => a - b);
      this.say(numbers.length ? `compiled instr ${numbers.join(", ")}` : "compiled empty orchestra");
      return { ok: true, diagnostics: [], instruments: numbers };
    }

    readScore(text: string): Diag[] {
      const { events, diagnostics } = parseScore(text);
      if (diagnostics.length) return diagnostics;
      for (const ev of events) this.sendEvent(ev);
      return [];
    }

    sendEvent(ev: ScoreEvent): void {
      const cfg = this.config;
      const startAbs = this.timeSeconds + Math.max(ev.start, 0);
      const frame = Math.floor(startAbs * cfg.sr + FRAME_EPS);
      const block = Math.max(Math.floor(frame / cfg.ksmps), this.blockIndex);
      this.seq += 1;
      const q: QueuedEvent = { block, start: startAbs, seq: this.seq, event: ev };
      // keep pending sorted by (block, start, seq)
      let lo = 0;
      let hi = this.pending.length;
      while (lo < hi) {
        const mid = (lo + hi) >> 1;
        const p = this.pending[mid];
        if (p.block < q.block || (p.block === q.block &&
            (p.start < q.start || (p.start === q.start && p.seq < q.seq)))) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      this.pending.splice(lo, 0, q);
    }

    setChannel(name: string, value: number): void {
      if (!name) throw new Error("channel name must be non-empty");
      this.bus.set(name, value);
    }

    getChannel(name: string): number {
      if (!name) throw new Error("channel name must be non-empty");
      return this.bus.get(name) ?? 0;
    }

    performBlock(): number {
      if (this.finished) return 1;
      this.activateDue();
      this.spout.fill(0);
      for (const note of this.active) this.renderNote(note);
      this.active = this.active.filter((n) => n.blocksLeft === null || n.blocksLeft > 0);
      this.blockIndex += 1;
      if (this.endReached) {
        this.finished = true;
        return 1;
      }
      return 0;
    }

    private activateDue(): void {
      let taken = 0;
      for (const q of this.pending) {
        if (q.block > this.blockIndex) break;
        taken += 1;
        const ev = q.event;
        if (ev.kind === "end") this.endReached = true;
        else if (ev.kind === "release") this.release(ev.instr, ev.key);
        else this.startNote(q);
      }
      if (taken) this.pending.splice(0, taken);
    }

    private startNote(q: QueuedEvent): void {
      const ev = q.event;
      const compiled = this.instruments.get(ev.instr);
      if (!compiled) {
        this.say(`warning: instr ${ev.instr} not defined; note dropped`);
        return;
      }
      const cfg = this.config;
      const blocks = ev.dur < 0 ? null
        : Math.max(1, Math.ceil(ev.dur * cfg.sr / cfg.ksmps - FRAME_EPS));
      const ctx: RenderCtx = {
        vals: new Float64Array(compiled.nvals),
        state: new Float64Array(compiled.nstate),
        chans: new Float64Array(compiled.chanNames.length),
        pfields: [ev.instr, q.start, ev.dur, ...ev.pfields],
        spin: this.spin,
        inOff: 0,
        k: 0,
      };
      this.active.push({
        instrNum: ev.instr, compiled, ctx, framesDone: 0,
        blocksLeft: blocks, held: blocks === null, key: ev.key,
      });
    }

    private release(instr: number, key: number | null): void {
      // released notes do not render the block the release lands in
      for (let i = 0; i < this.active.length; i++) {
        const n = this.active[i];
        if (n.held && n.instrNum === instr && n.key === key) {
          this.active.splice(i, 1);
          return;
        }
      }
    }

    private renderNote(note: ActiveNote): void {
      const { compiled, ctx } = note;
      for (let i = 0; i < compiled.chanNames.length; i++) {
        ctx.chans[i] = this.bus.get(compiled.chanNames[i]) ?? 0;
      }
      const cfg = this.config;
      const spout = this.spout;
      const k0 = note.framesDone;
      for (let i = 0; i < cfg.ksmps; i++) {
        ctx.k = k0 + i;
        ctx.inOff = i * cfg.nchnlsIn;
        for (const [slot, fn] of compiled.assigns) ctx.vals[slot] = fn(ctx);
        const base = i * cfg.nchnls;
        for (let ch = 0; ch < compiled.outs.length; ch++) {
          const v = compiled.outs[ch](ctx);
          if (Number.isFinite(v)) spout[base + ch] += v;
          else this.clampedSamples += 1;
        }
      }
      note.framesDone += cfg.ksmps;
      if (note.blocksLeft !== null) note.blocksLeft -= 1;
    }

    reset(): void {
      this.instruments.clear();
      this.bus.clear();
      this.pending = [];
      this.active = [];
      this.spin.fill(0);
      this.spout.fill(0);
      this.blockIndex = 0;
      this.finished = false;
      this.endReached = false;
      this.clampedSamples = 0;
      this.seq = 0;
    }
  }

  // ---- sandbox filesystem -----------------------------------------------------------------

  class Vfs {
    private files = new Map<string, Uint8Array>();

    normalize(path: string): string {
      if (!path || path.includes("\\") || path.startsWith("/")) {
        throw new Error(`invalid path: ${path}`);
      }
      const parts = path.split("/").filter((p) => p !== "" && p !== ".");
      if (!parts.length || parts.includes("..")) throw new Error(`invalid path: ${path}`);
      return parts.join("/");
    }

    write(path: string, data: Uint8Array): void {
      this.files.set(this.normalize(path), data.slice());
    }

    list(prefix: string): Array<[string, number]> {
      const out: Array<[string, number]> = [];
      for (const [path, data] of this.files) {
        if (path.startsWith(prefix)) out.push([path, data.length]);
      }
      out.sort((a, b) => (a[0] < b[0] ? -1 : a[0] > b[0] ? 1 : 0));
      return out;
    }
  }

  // ---- processor core ------------------------------------------------------------------------

  const INBOX_CAPACITY = 1024;

  type WireMessage = { type: string; seq: number; payload: any };
  type WireReply = { type: string; payload: any };
  type EmitReply = (reply: WireReply) => void;

  /**
   * Render-context state machine: owns the engine and adapts its ksmps
   * block to any host buffer via the cnt automaton. Messages are applied
   * only at the start of a process call. Once the engine finishes, output
   * frames are zeros and cnt freezes so buffer indices stay bounded.
   */
  class ProcessorCore {
    engine: Engine;
    vfs = new Vfs();
    cnt: number;
    status = 0;
    running = false;
    droppedMessages = 0;
    private inbox: WireMessage[] = [];
    private emit: EmitReply;
    private finishedEmitted = false;

    constructor(config: EngineConfig, emit: EmitReply) {
      this.engine = new Engine(config);
      this.emit = emit;
      this.engine.console = (text) => this.emit({ type: "console", payload: { text } });
      this.cnt = config.ksmps; // first running process call performs at once
    }

    post(msg: WireMessage): boolean {
      if (this.inbox.length >= INBOX_CAPACITY) {
        this.droppedMessages += 1;
        return false;
      }
      this.inbox.push(msg);
      return true;
    }

    applyMessages(): void {
      const engine = this.engine;
      for (const msg of this.inbox.splice(0)) {
        try {
          const p = msg.payload ?? {};
          switch (msg.type) {
            case "compile-orc": {
              const result = engine.compileOrc(p.source);
              this.emit({
                type: "compile-result",
                payload: {
                  ok: result.ok,
                  diagnostics: result.diagnostics.map((d) => [d.line, d.column, d.message]),
                },
              });
              break;
            }
            case "read-score": {
              const diags = engine.readScore(p.text);
              for (const d of diags) {
                this.emit({ type: "console",
                            payload: { text: `error: line ${d.line}:${d.column}: ${d.message}` } });
              }
              break;
            }
            case "event":
              engine.sendEvent(p.event);
              break;
            case "set-channel":
              engine.setChannel(p.name, p.value);
              break;
            case "get-channel":
              this.emit({ type: "channel-value",
                          payload: { request_id: p.request_id, value: engine.getChannel(p.name) } });
              break;
            case "midi": {
              const ev = midiToEvent(p.status, p.d1, p.d2);
              if (ev) engine.sendEvent(ev);
              break;
            }
            case "write-file":
              this.vfs.write(p.path, Uint8Array.from(p.data));
              break;
            case "list-files":
              this.emit({ type: "file-list",
                          payload: { request_id: p.request_id, entries: this.vfs.list(p.prefix) } });
              break;
            case "start":
              this.running = true;
              break;
            case "stop":
              this.running = false;
              break;
            case "reset":
              engine.reset();
              this.cnt = engine.config.ksmps;
              this.status = 0;
              this.finishedEmitted = false;
              break;
            default:
              this.emit({ type: "console", payload: { text: `error: unknown message '${msg.type}'` } });
          }
        } catch (e) {
          this.emit({ type: "console", payload: { text: `error: ${(e as Error).message}` } });
        }
      }
    }

    process(inputs: ArrayLike<number>[], outputs: Float32Array[]): boolean {
      this.applyMessages();
      if (!this.running) return true;
      const engine = this.engine;
      const cfg = engine.config;
      const ksmps = cfg.ksmps;
      const zerodbfs = cfg.zerodbfs;
      const spin = engine.spin;
      const spout = engine.spout;
      let cnt = this.cnt;
      let status = this.status;
      const bufferLen = outputs[0].length;
      const nIn = Math.min(inputs.length, cfg.nchnlsIn);
      const nOut = outputs.length;
      for (let i = 0; i < bufferLen; i++) {
        if (cnt === ksmps && status === 0) {
          status = engine.performBlock();
          cnt = 0;
          if (status !== 0 && !this.finishedEmitted) {
            this.finishedEmitted = true;
            this.emit({ type: "finished", payload: {} });
          }
        }
        if (status === 0) {
          const inBase = cnt * cfg.nchnlsIn;
          for (let ch = 0; ch < nIn; ch++) {
            spin[inBase + ch] = inputs[ch][i] * zerodbfs;
          }
          const outBase = cnt * cfg.nchnls;
          for (let ch = 0; ch < nOut; ch++) {
            outputs[ch][i] = ch < cfg.nchnls ? spout[outBase + ch] / zerodbfs : 0;
          }
          cnt += 1;
        } else {
          for (let ch = 0; ch < nOut; ch++) outputs[ch][i] = 0;
        }
      }
      this.cnt = cnt;
      this.status = status;
      return true;
    }
  }

  (globalThis as any).__blocksynthEngineModule = {
    version: "0.1.0",
    createEngine: (config: EngineConfig) => new Engine(config),
    createProcessorCore: (config: EngineConfig, emit: EmitReply) =>
      new ProcessorCore(config, emit),
    parseOrchestra,
    parseScore,
    midiToEvent,
  };
})();
