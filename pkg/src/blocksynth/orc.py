"""Orchestra mini-language: tokenizer, parser, semantic checks, and a
closure compiler that turns instrument bodies into per-sample callables.

Grammar (newline-separated statements, ';' comments):

    program := { instr }
    instr   := "instr" INT NL { stmt NL } "endin"
    stmt    := IDENT "=" expr | "out" expr { "," expr }
    expr    := NUMBER | PFIELD | IDENT | "(" expr ")"
             | expr ("+"|"-"|"*"|"/") expr        ; */ bind tighter, left-assoc
             | "oscil" "(" expr "," expr ")"      ; amp, freq Hz; phase 0 per note
             | "line" "(" expr "," expr "," expr ")"  ; a over dur seconds to b, clamps
             | "in" "(" INT ")"                   ; input channel, engine scale
             | "chan" "(" STRING ")"              ; control bus read, block rate

p1 is the instrument number, p2 the start in seconds, p3 the duration,
p4 onward come from the event. The identifiers sr, ksmps, nchnls,
nchnls_i and zerodbfs resolve to the engine configuration.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "Diagnostic",
    "InstrumentDef",
    "CompiledInstrument",
    "RenderContext",
    "parse_orchestra",
    "compile_instrument",
]

_RESERVED = {"instr", "endin", "out", "oscil", "line", "in", "chan"}
_BUILTIN_VARS = ("sr", "ksmps", "nchnls", "nchnls_i", "zerodbfs")

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Diagnostic:
    """One compile or parse error with its source position."""

    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}:{self.column}: {self.message}"


# --- AST ------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class PField:
    index: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class OscilOp:
    amp: object
    freq: object


@dataclass(frozen=True)
class LineOp:
    start: object
    dur: object
    end: object


@dataclass(frozen=True)
class InOp:
    channel: int


@dataclass(frozen=True)
class ChanOp:
    name: str


@dataclass(frozen=True)
class Assign:
    name: str
    expr: object
    line: int
    column: int


@dataclass(frozen=True)
class Out:
    exprs: tuple
    line: int
    column: int


@dataclass(frozen=True)
class InstrumentDef:
    """Parsed instrument: ordered assignments and at most one out statement."""

    number: int
    body: tuple
    line: int


# --- tokenizer ------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<comment>;[^\n]*)
  | (?P<nl>\r?\n)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<op>[+\-*/(),=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # number ident pfield string op nl eof
    text: str
    line: int
    column: int


class _ParseAbort(Exception):
    """Internal: unrecoverable position, handled by the statement recovery loop."""


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    pos = 0
    n = len(source)
    while pos < n:
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            tokens.append(_Token("error", source[pos], line, col))
            pos += 1
            col += 1
            continue
        kind = m.lastgroup
        text = m.group()
        if kind == "nl":
            tokens.append(_Token("nl", "\n", line, col))
            line += 1
            col = 1
        elif kind in ("ws", "comment"):
            col += len(text)
        else:
            if kind == "ident" and re.fullmatch(r"p\d+", text):
                kind = "pfield"
            tokens.append(_Token(kind, text, line, col))
            col += len(text)
        pos = m.end() or pos + 1
    tokens.append(_Token("eof", "", line, col))
    return tokens


# --- parser ---------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0
        self.diagnostics: list[Diagnostic] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, tok: _Token, message: str) -> _ParseAbort:
        self.diagnostics.append(Diagnostic(tok.line, tok.column, message))
        return _ParseAbort()

    def skip_newlines(self) -> None:
        while self.peek().kind == "nl":
            self.advance()

    def skip_to_newline(self) -> None:
        while self.peek().kind not in ("nl", "eof"):
            self.advance()

    def expect_op(self, char: str) -> _Token:
        tok = self.peek()
        if tok.kind == "op" and tok.text == char:
            return self.advance()
        raise self.error(tok, f"expected '{char}'")

    def parse_program(self) -> list[InstrumentDef]:
        instruments: list[InstrumentDef] = []
        while True:
            self.skip_newlines()
            tok = self.peek()
            if tok.kind == "eof":
                return instruments
            if tok.kind == "ident" and tok.text == "instr":
                instr = self.parse_instr()
                if instr is not None:
                    instruments.append(instr)
            else:
                self.diagnostics.append(
                    Diagnostic(tok.line, tok.column, "expected 'instr'")
                )
                self.skip_to_newline()

    def parse_instr(self) -> InstrumentDef | None:
        header = self.advance()  # "instr"
        tok = self.peek()
        if tok.kind != "number" or not tok.text.isdigit() or int(tok.text) < 1:
            self.diagnostics.append(
                Diagnostic(tok.line, tok.column, "instrument number must be a positive integer")
            )
            self.skip_to_endin()
            return None
        number = int(self.advance().text)
        body: list = []
        bad = False
        while True:
            self.skip_newlines()
            tok = self.peek()
            if tok.kind == "eof":
                self.diagnostics.append(
                    Diagnostic(header.line, header.column, "'instr' without matching 'endin'")
                )
                return None
            if tok.kind == "ident" and tok.text == "endin":
                self.advance()
                return None if bad else InstrumentDef(number, tuple(body), header.line)
            try:
                body.append(self.parse_stmt())
                nxt = self.peek()
                if nxt.kind not in ("nl", "eof"):
                    raise self.error(nxt, f"unexpected '{nxt.text}' after statement")
            except _ParseAbort:
                bad = True
                self.skip_to_newline()

    def skip_to_endin(self) -> None:
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                return
            if tok.kind == "ident" and tok.text == "endin":
                self.advance()
                return
            self.advance()

    def parse_stmt(self):
        tok = self.peek()
        if tok.kind == "ident" and tok.text == "out":
            self.advance()
            exprs = [self.parse_expr()]
            while self.peek().kind == "op" and self.peek().text == ",":
                self.advance()
                exprs.append(self.parse_expr())
            return Out(tuple(exprs), tok.line, tok.column)
        if tok.kind == "ident":
            if tok.text in _RESERVED:
                raise self.error(tok, f"'{tok.text}' is reserved")
            name = self.advance().text
            self.expect_op("=")
            return Assign(name, self.parse_expr(), tok.line, tok.column)
        if tok.kind == "pfield":
            raise self.error(tok, "cannot assign to a p-field")
        raise self.error(tok, f"expected a statement, found '{tok.text or tok.kind}'")

    def parse_expr(self):
        left = self.parse_term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            left = BinOp(op, left, self.parse_term())
        return left

    def parse_term(self):
        left = self.parse_factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            left = BinOp(op, left, self.parse_factor())
        return left

    def parse_factor(self):
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "pfield":
            self.advance()
            index = int(tok.text[1:])
            if index < 1:
                raise self.error(tok, "p-field index must be 1 or greater")
            return PField(index)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if tok.kind == "ident":
            name = tok.text
            if name in ("oscil", "line", "in", "chan"):
                return self.parse_call(name)
            if name in _RESERVED:
                raise self.error(tok, f"'{name}' is reserved")
            self.advance()
            return Var(name)
        raise self.error(tok, f"expected an expression, found '{tok.text or tok.kind}'")

    def parse_call(self, name: str):
        tok = self.advance()  # opcode name
        self.expect_op("(")
        if name == "in":
            arg = self.peek()
            if arg.kind != "number" or not arg.text.isdigit():
                raise self.error(arg, "in() takes an integer channel")
            self.advance()
            self.expect_op(")")
            return InOp(int(arg.text))
        if name == "chan":
            arg = self.peek()
            if arg.kind != "string":
                raise self.error(arg, "chan() takes a quoted channel name")
            self.advance()
            chan_name = arg.text[1:-1]
            if not chan_name:
                raise self.error(arg, "channel name must be non-empty")
            self.expect_op(")")
            return ChanOp(chan_name)
        args = [self.parse_expr()]
        while self.peek().kind == "op" and self.peek().text == ",":
            self.advance()
            args.append(self.parse_expr())
        self.expect_op(")")
        if name == "oscil":
            if len(args) != 2:
                raise self.error(tok, "oscil() takes exactly 2 arguments")
            return OscilOp(args[0], args[1])
        if len(args) != 3:
            raise self.error(tok, "line() takes exactly 3 arguments")
        return LineOp(args[0], args[1], args[2])


def parse_orchestra(source: str) -> tuple[list[InstrumentDef], list[Diagnostic]]:
    """Parse orchestra source. Returns (instruments, diagnostics); any
    diagnostic means the source must be rejected as a whole."""
    parser = _Parser(_tokenize(source))
    instruments = parser.parse_program()
    return instruments, parser.diagnostics


# --- semantic checks ------------------------------------------------------

def check_instrument(instr: InstrumentDef, nchnls: int, nchnls_i: int) -> list[Diagnostic]:
    """Validate identifier use, out arity, and input channel range."""
    diags: list[Diagnostic] = []
    assigned: set[str] = set(_BUILTIN_VARS)
    out_seen = False

    def walk(node, line: int, column: int) -> None:
        if isinstance(node, Var):
            if node.name not in assigned:
                diags.append(
                    Diagnostic(line, column, f"unknown identifier '{node.name}'")
                )
        elif isinstance(node, BinOp):
            walk(node.left, line, column)
            walk(node.right, line, column)
        elif isinstance(node, OscilOp):
            walk(node.amp, line, column)
            walk(node.freq, line, column)
        elif isinstance(node, LineOp):
            walk(node.start, line, column)
            walk(node.dur, line, column)
            walk(node.end, line, column)
        elif isinstance(node, InOp):
            if node.channel >= nchnls_i:
                diags.append(
                    Diagnostic(
                        line, column,
                        f"in({node.channel}) out of range: engine has {nchnls_i} input channel(s)",
                    )
                )

    for stmt in instr.body:
        if isinstance(stmt, Assign):
            walk(stmt.expr, stmt.line, stmt.column)
            assigned.add(stmt.name)
        else:
            if out_seen:
                diags.append(Diagnostic(stmt.line, stmt.column, "more than one out statement"))
            out_seen = True
            if len(stmt.exprs) > nchnls:
                diags.append(
                    Diagnostic(
                        stmt.line, stmt.column,
                        f"out has {len(stmt.exprs)} channels but engine has {nchnls}",
                    )
                )
            for e in stmt.exprs:
                walk(e, stmt.line, stmt.column)
    return diags


# --- closure compiler -----------------------------------------------------

class RenderContext:
    """Mutable per-note evaluation state threaded through compiled closures.

    vals holds local variables, state the per-opcode slots (oscil phases),
    chans the block-rate bus snapshot. k is the note-local frame index,
    in_off the spin offset of the current frame.
    """

    __slots__ = ("vals", "state", "chans", "pfields", "spin", "in_off", "k")

    def __init__(self, nvals: int, nstate: int, nchans: int, pfields: tuple):
        self.vals = [0.0] * nvals
        self.state = [0.0] * nstate
        self.chans = [0.0] * nchans
        self.pfields = pfields
        self.spin: list[float] = []
        self.in_off = 0
        self.k = 0


@dataclass(frozen=True)
class CompiledInstrument:
    """Closure-compiled instrument ready for per-sample evaluation."""

    number: int
    assigns: tuple  # (slot, fn) pairs, in body order
    outs: tuple  # one fn per output channel
    nvals: int
    nstate: int
    chan_names: tuple
    source: InstrumentDef

    def new_context(self, pfields: tuple) -> RenderContext:
        return RenderContext(self.nvals, self.nstate, len(self.chan_names), pfields)


class _Compiler:
    def __init__(self, sr: int, nchnls_i: int, builtins: dict[str, float]):
        self.sr = float(sr)
        self.nchnls_i = nchnls_i
        self.builtins = builtins
        self.slots: dict[str, int] = {}
        self.nstate = 0
        self.chan_names: list[str] = []

    def compile(self, node) -> Callable[[RenderContext], float]:
        if isinstance(node, Num):
            value = node.value

            def const(ctx, _v=value):
                return _v

            return const
        if isinstance(node, PField):
            idx = node.index - 1

            def pfield(ctx, _i=idx):
                pf = ctx.pfields
                return pf[_i] if _i < len(pf) else 0.0

            return pfield
        if isinstance(node, Var):
            if node.name in self.builtins and node.name not in self.slots:
                value = self.builtins[node.name]

                def builtin(ctx, _v=value):
                    return _v

                return builtin
            slot = self.slots[node.name]

            def var(ctx, _s=slot):
                return ctx.vals[_s]

            return var
        if isinstance(node, BinOp):
            lf = self.compile(node.left)
            rf = self.compile(node.right)
            return _binop(node.op, lf, rf)
        if isinstance(node, OscilOp):
            ampf = self.compile(node.amp)
            freqf = self.compile(node.freq)
            slot = self.nstate
            self.nstate += 1
            inv_sr = 1.0 / self.sr
            sin = math.sin
            floor = math.floor

            def oscil(ctx, _s=slot, _a=ampf, _f=freqf, _isr=inv_sr):
                st = ctx.state
                ph = st[_s]
                y = _a(ctx) * sin(_TWO_PI * ph)
                ph += _f(ctx) * _isr
                if not 0.0 <= ph < 1.0:
                    ph -= floor(ph)
                st[_s] = ph
                return y

            return oscil
        if isinstance(node, LineOp):
            af = self.compile(node.start)
            df = self.compile(node.dur)
            bf = self.compile(node.end)
            inv_sr = 1.0 / self.sr

            def line(ctx, _a=af, _d=df, _b=bf, _isr=inv_sr):
                dur = _d(ctx)
                b = _b(ctx)
                t = ctx.k * _isr
                if dur <= 0.0 or t >= dur:
                    return b
                a = _a(ctx)
                return a + (b - a) * (t / dur)

            return line
        if isinstance(node, InOp):
            ch = node.channel

            def inop(ctx, _c=ch):
                return ctx.spin[ctx.in_off + _c]

            return inop
        if isinstance(node, ChanOp):
            try:
                idx = self.chan_names.index(node.name)
            except ValueError:
                idx = len(self.chan_names)
                self.chan_names.append(node.name)

            def chan(ctx, _i=idx):
                return ctx.chans[_i]

            return chan
        raise TypeError(f"unexpected AST node {node!r}")

    def slot_for(self, name: str) -> int:
        if name not in self.slots:
            self.slots[name] = len(self.slots)
        return self.slots[name]


def _binop(op: str, lf, rf) -> Callable[[RenderContext], float]:
    if op == "+":
        def add(ctx):
            return lf(ctx) + rf(ctx)
        return add
    if op == "-":
        def sub(ctx):
            return lf(ctx) - rf(ctx)
        return sub
    if op == "*":
        def mul(ctx):
            return lf(ctx) * rf(ctx)
        return mul

    def div(ctx):
        r = rf(ctx)
        if r == 0.0:
            # IEEE-style result; the sign is dropped because non-finite
            # samples are clamped to 0 before they reach the output.
            return math.nan if lf(ctx) == 0.0 else math.inf
        return lf(ctx) / r
    return div


def compile_instrument(
    instr: InstrumentDef,
    sr: int,
    nchnls: int,
    nchnls_i: int,
    builtins: dict[str, float],
) -> CompiledInstrument:
    """Compile a checked instrument body to closures. Assumes
    check_instrument reported no diagnostics."""
    comp = _Compiler(sr, nchnls_i, builtins)
    assigns: list[tuple[int, Callable]] = []
    outs: tuple = ()
    for stmt in instr.body:
        if isinstance(stmt, Assign):
            fn = comp.compile(stmt.expr)
            assigns.append((comp.slot_for(stmt.name), fn))
        else:
            outs = tuple(comp.compile(e) for e in stmt.exprs)
    return CompiledInstrument(
        number=instr.number,
        assigns=tuple(assigns),
        outs=outs,
        nvals=len(comp.slots),
        nstate=comp.nstate,
        chan_names=tuple(comp.chan_names),
        source=instr,
    )
