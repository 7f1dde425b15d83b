"""Text formats: the BES grammar, the mu-calculus grammar, Aldebaran .aut
labelled transition systems, the line-oriented structure-graph format, and
DOT export.

BES grammar (one equation per line, ';'-terminated, '%' comments):

    eqn  := ("mu" | "nu") IDENT "=" form ";"
    form := "true" | "false" | IDENT | "(" form ")" | form "&&" form | form "||" form

'&&' binds tighter than '||', both left-associative; explicit parentheses fix
the tree and the printer always parenthesises composite operands, so
parse(print(b)) reproduces b exactly.

Mu-calculus grammar:

    form := ("nu" | "mu") IDENT "." form | disj
    disj := conj ("||" conj)*
    conj := prefix ("&&" prefix)*
    prefix := "[" A "]" prefix | "<" A ">" prefix | atom
    atom := "true" | "false" | IDENT | "(" form ")"
    A := ["!"] IDENT ("," IDENT)*

'!' complements the action list against the alphabet in use.  A fixpoint
body extends as far right as possible.
"""

from __future__ import annotations

import re

from .bes import (And, Bes, Const, Equation, Or, PropFormula, Sign, Var,
                  check_identifier)
from .errors import BesgError, ParseError
from .mucalc import (ActionSet, Box, Diamond, Fix, Lts, MAnd, MConst, MOr,
                     MVar, MuFormula, make_lts)
from .sgraph import Dec, StructureGraph, id_key, make_graph

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>%[^\n]*)
  | (?P<nl>\n)
  | (?P<ident>[A-Za-z0-9_']+)
  | (?P<op>&&|\|\||[()\[\]<>,.=;!])
""", re.VERBOSE)


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "nl":
            line += 1
            col = 1
        else:
            if kind in ("ident", "op"):
                tokens.append((kind, value, line, col))
            col += len(value)
        pos = m.end()
    tokens.append(("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, line, col = self.peek()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", line, col)
        return self.next()

    def error(self, msg: str):
        _, v, line, col = self.peek()
        raise ParseError(msg, line, col)

    def at_end(self):
        return self.peek()[0] == "eof"


# ---------------------------------------------------------------------------
# Proposition formulae and equation systems.

_KEYWORDS = {"true", "false", "mu", "nu"}


def _parse_form(p: _Parser) -> PropFormula:
    f = _parse_conj(p)
    while p.peek()[1] == "||":
        p.next()
        f = Or(f, _parse_conj(p))
    return f


def _parse_conj(p: _Parser) -> PropFormula:
    f = _parse_atom(p)
    while p.peek()[1] == "&&":
        p.next()
        f = And(f, _parse_atom(p))
    return f


def _parse_atom(p: _Parser) -> PropFormula:
    kind, v, line, col = p.peek()
    if v == "(":
        p.next()
        f = _parse_form(p)
        p.expect(")")
        return f
    if kind == "ident":
        p.next()
        if v == "true":
            return Const(True)
        if v == "false":
            return Const(False)
        if v in _KEYWORDS:
            raise ParseError(f"{v!r} cannot be a variable", line, col)
        return Var(v)
    raise ParseError(f"expected a formula, found {v or 'end of input'!r}", line, col)


def parse_formula(text: str) -> PropFormula:
    p = _Parser(text)
    f = _parse_form(p)
    if not p.at_end():
        p.error("trailing input after formula")
    return f


def parse_bes(text: str) -> Bes:
    p = _Parser(text)
    eqs = []
    while not p.at_end():
        kind, v, line, col = p.next()
        if v not in ("mu", "nu"):
            raise ParseError(f"expected 'mu' or 'nu', found {v!r}", line, col)
        sign = Sign.MU if v == "mu" else Sign.NU
        kind, x, line, col = p.next()
        if kind != "ident" or x in _KEYWORDS:
            raise ParseError("expected a variable name", line, col)
        p.expect("=")
        rhs = _parse_form(p)
        p.expect(";")
        eqs.append(Equation(sign, x, rhs))
    try:
        return Bes(tuple(eqs))
    except BesgError as e:
        raise ParseError(str(e)) from e


def print_formula(f: PropFormula) -> str:
    match f:
        case Const(v):
            return "true" if v else "false"
        case Var(name):
            return name
        case And(l, r):
            return f"{_operand(l)} && {_operand(r)}"
        case Or(l, r):
            return f"{_operand(l)} || {_operand(r)}"
    raise TypeError(f"not a formula: {f!r}")


def _operand(f: PropFormula) -> str:
    if isinstance(f, (And, Or)):
        return f"({print_formula(f)})"
    return print_formula(f)


def print_bes(system: Bes) -> str:
    return "".join(f"{eq.sign} {eq.lhs} = {print_formula(eq.rhs)};\n"
                   for eq in system.equations)


# ---------------------------------------------------------------------------
# Mu-calculus formulae.

def _parse_mu(p: _Parser) -> MuFormula:
    kind, v, line, col = p.peek()
    if v in ("mu", "nu"):
        p.next()
        sign = Sign.MU if v == "mu" else Sign.NU
        kind, x, line, col = p.next()
        if kind != "ident" or x in _KEYWORDS:
            raise ParseError("expected a variable after the fixpoint sign", line, col)
        p.expect(".")
        return Fix(sign, x, _parse_mu(p))
    return _parse_mu_or(p)


def _parse_mu_or(p: _Parser) -> MuFormula:
    f = _parse_mu_and(p)
    while p.peek()[1] == "||":
        p.next()
        f = MOr(f, _parse_mu_and(p))
    return f


def _parse_mu_and(p: _Parser) -> MuFormula:
    f = _parse_mu_prefix(p)
    while p.peek()[1] == "&&":
        p.next()
        f = MAnd(f, _parse_mu_prefix(p))
    return f


def _parse_action_set(p: _Parser, closing: str) -> ActionSet:
    complement = False
    if p.peek()[1] == "!":
        p.next()
        complement = True
    names = []
    while True:
        kind, v, line, col = p.next()
        if kind != "ident":
            raise ParseError("expected an action name", line, col)
        names.append(v)
        if p.peek()[1] != ",":
            break
        p.next()
    p.expect(closing)
    return ActionSet(frozenset(names), complement)


def _parse_mu_prefix(p: _Parser) -> MuFormula:
    kind, v, line, col = p.peek()
    if v == "[":
        p.next()
        a = _parse_action_set(p, "]")
        return Box(a, _parse_mu_prefix(p))
    if v == "<":
        p.next()
        a = _parse_action_set(p, ">")
        return Diamond(a, _parse_mu_prefix(p))
    if v in ("mu", "nu"):
        return _parse_mu(p)
    if v == "(":
        p.next()
        f = _parse_mu(p)
        p.expect(")")
        return f
    if kind == "ident":
        p.next()
        if v == "true":
            return MConst(True)
        if v == "false":
            return MConst(False)
        return MVar(v)
    raise ParseError(f"expected a formula, found {v or 'end of input'!r}", line, col)


def parse_mu_formula(text: str) -> MuFormula:
    p = _Parser(text)
    f = _parse_mu(p)
    if not p.at_end():
        p.error("trailing input after formula")
    return f


# ---------------------------------------------------------------------------
# Aldebaran .aut.

_AUT_HEADER = re.compile(r"\s*des\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*\Z")
_AUT_EDGE = re.compile(r"""\s*\(\s*(\d+)\s*,\s*(?:"([^"]*)"|([^,"]*?))\s*,\s*(\d+)\s*\)\s*\Z""")


def parse_aut(text: str) -> Lts:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty .aut input")
    m = _AUT_HEADER.match(lines[0])
    if not m:
        raise ParseError("malformed des header", 1)
    init, n_trans, n_states = (int(g) for g in m.groups())
    if n_states < 1:
        raise ParseError("an LTS needs at least one state", 1)
    transitions = []
    actions = set()
    for k, raw in enumerate(lines[1:], start=2):
        if not raw.strip() or raw.lstrip().startswith("%"):
            continue
        m = _AUT_EDGE.match(raw)
        if not m:
            raise ParseError("malformed transition", k)
        src, quoted, bare, dst = m.groups()
        label = quoted if quoted is not None else bare.strip()
        if not label:
            raise ParseError("empty action label", k)
        if int(src) >= n_states or int(dst) >= n_states:
            raise ParseError("state number out of range", k)
        actions.add(label)
        transitions.append((src, label, dst))
    if len(transitions) != n_trans:
        raise ParseError(f"header promises {n_trans} transitions, found {len(transitions)}")
    states = [str(i) for i in range(n_states)]
    if not actions:
        actions = {"a"}  # alphabet must be non-empty even with no transitions
    return make_lts(states, actions, transitions, str(init))


def print_aut(lts: Lts) -> str:
    index = {s: i for i, s in enumerate(sorted(lts.states, key=id_key))}
    edges = sorted((index[s], a, index[t]) for (s, a, t) in lts.transitions)
    out = [f"des ({index[lts.initial]},{len(edges)},{len(lts.states)})"]
    out.extend(f'({s},"{a}",{t})' for s, a, t in edges)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Structure graphs: line-oriented serialisation and DOT.

_DECS = {d.value: d for d in Dec}


def parse_sg(text: str) -> StructureGraph:
    verts = []
    root = None
    n_promised = None
    edges = []
    dec: dict[str, Dec] = {}
    rank: dict[str, int] = {}
    fv: dict[str, str] = {}
    for k, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "sg":
            if len(fields) != 3:
                raise ParseError("header must be: sg <num_vertices> <root_id>", k)
            n_promised, root = int(fields[1]), fields[2]
        elif fields[0] == "v":
            if len(fields) < 2:
                raise ParseError("vertex line needs an id", k)
            v = fields[1]
            if v in set(verts):
                raise ParseError(f"vertex {v!r} declared twice", k)
            verts.append(v)
            for opt in fields[2:]:
                if "=" not in opt:
                    raise ParseError(f"malformed vertex option {opt!r}", k)
                key, val = opt.split("=", 1)
                if key == "rank":
                    rank[v] = int(val)
                elif key == "dec":
                    if val not in _DECS:
                        raise ParseError(f"unknown decoration {val!r}", k)
                    dec[v] = _DECS[val]
                elif key == "fv":
                    fv[v] = check_identifier(val)
                else:
                    raise ParseError(f"unknown vertex option {key!r}", k)
        elif fields[0] == "e":
            if len(fields) != 3:
                raise ParseError("edge line must be: e <from> <to>", k)
            edges.append((fields[1], fields[2]))
        else:
            raise ParseError(f"unknown directive {fields[0]!r}", k)
    if root is None:
        raise ParseError("missing sg header")
    if n_promised != len(verts):
        raise ParseError(f"header promises {n_promised} vertices, found {len(verts)}")
    try:
        return make_graph(verts, root, edges, dec, rank, fv)
    except BesgError as e:
        raise ParseError(str(e)) from e


def print_sg(sg: StructureGraph) -> str:
    out = [f"sg {len(sg.vertices)} {sg.root}"]
    for v in sg.vertices:
        opts = []
        if v in sg.rank:
            opts.append(f"rank={sg.rank[v]}")
        if v in sg.dec:
            opts.append(f"dec={sg.dec[v].value}")
        if v in sg.fv:
            opts.append(f"fv={sg.fv[v]}")
        out.append(" ".join(["v", v] + opts))
    for u in sg.vertices:
        for w in sg.successors(u):
            out.append(f"e {u} {w}")
    return "\n".join(out) + "\n"


def vertex_label(sg: StructureGraph, v: str, unicode: bool = True) -> str:
    parts = [v]
    if v in sg.dec:
        parts.append(sg.dec[v].symbol if unicode else sg.dec[v].ascii)
    if v in sg.rank:
        parts.append(str(sg.rank[v]))
    if v in sg.fv:
        parts.append(("↗" if unicode else "fv ") + sg.fv[v])
    return " ".join(parts)


def print_dot(sg: StructureGraph) -> str:
    out = ["digraph sg {"]
    for v in sg.vertices:
        attrs = [f'label="{vertex_label(sg, v)}"']
        if v == sg.root:
            attrs.append("peripheries=2")
        out.append(f'  "{v}" [{", ".join(attrs)}];')
    for u in sg.vertices:
        for w in sg.successors(u):
            out.append(f'  "{u}" -> "{w}";')
    out.append("}")
    return "\n".join(out) + "\n"
