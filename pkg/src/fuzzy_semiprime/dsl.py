"""Text format for structures, fuzzy subsets and crisp subsets.

Example::

    # two-element chain with constant product
    groupoid G {
      elements: a b
      order: a<=b
      mul: a*a=a, a*b=a, b*a=a, b*b=a
    }
    fuzzy f on G { a: 3/10, b: 7/10 }
    set T on G { b }

The order may be any relation; its reflexive-transitive closure is used and
must be antisymmetric. Every product cell must be given exactly once.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .calculus import FuzzySubset, GradeError, format_grade, grade
from .structures import AxiomError, OrderedGroupoid, StructureError, order_closure

_TOKEN = re.compile(r"(?P<ws>[ \t\r\n]+|#[^\n]*)|(?P<word>[A-Za-z0-9_]+)|(?P<punct><=|[{}:,*=/])")


class DSLError(ValueError):
    def __init__(self, line: int, col: int, reason: str):
        self.line, self.col, self.reason = line, col, reason
        super().__init__(f"{line}:{col}: {reason}")


@dataclass(frozen=True)
class Token:
    kind: str  # "word", "punct" or "eof"
    text: str
    line: int
    col: int


def tokenize(source: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise DSLError(line, pos - line_start + 1, f"unexpected character {source[pos]!r}")
        text = m.group()
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, text, line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass(frozen=True)
class FuzzyDef:
    on: str
    subset: FuzzySubset


@dataclass(frozen=True)
class SetDef:
    on: str
    elements: frozenset


@dataclass
class Document:
    structures: dict = field(default_factory=dict)
    fuzzies: dict = field(default_factory=dict)
    sets: dict = field(default_factory=dict)

    def fuzzy(self, name: str) -> FuzzySubset:
        return self.fuzzies[name].subset

    def crisp(self, name: str) -> tuple:
        d = self.sets[name]
        return self.structures[d.on], d.elements


class _Parser:
    def __init__(self, source: str):
        self.toks = tokenize(source)
        self.i = 0
        self.doc = Document()

    def peek(self, k: int = 0) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.peek()
        self.i += 1
        return t

    def fail(self, tok: Token, reason: str):
        raise DSLError(tok.line, tok.col, reason)

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.text != text or t.kind == "eof":
            self.fail(t, f"expected {text!r}, found {t.text or 'end of input'!r}")
        return t

    def word(self, what: str) -> Token:
        t = self.next()
        if t.kind != "word":
            self.fail(t, f"expected {what}, found {t.text or 'end of input'!r}")
        return t

    def at_section(self, name: str) -> bool:
        return self.peek().text == name and self.peek(1).text == ":"

    def document(self) -> Document:
        while self.peek().kind != "eof":
            t = self.peek()
            if t.text == "groupoid":
                self.groupoid()
            elif t.text == "fuzzy":
                self.fuzzy()
            elif t.text == "set":
                self.crisp_set()
            else:
                self.fail(t, f"expected 'groupoid', 'fuzzy' or 'set', found {t.text!r}")
        return self.doc

    def groupoid(self):
        self.expect("groupoid")
        name = self.word("structure name")
        if name.text in self.doc.structures:
            self.fail(name, f"duplicate groupoid name {name.text!r}")
        self.expect("{")
        self.expect("elements")
        self.expect(":")
        labels, index = [], {}
        while not self.at_section("order"):
            t = self.word("element name or 'order:'")
            if t.text in index:
                self.fail(t, f"duplicate element {t.text!r}")
            index[t.text] = len(labels)
            labels.append(t.text)
        if not labels:
            self.fail(self.peek(), "a groupoid needs at least one element")
        self.expect("order")
        self.expect(":")
        pairs = []
        if not self.at_section("mul"):
            pairs.append(self.order_pair(index))
            while self.peek().text == ",":
                self.next()
                pairs.append(self.order_pair(index))
        self.expect("mul")
        mul_tok = self.expect(":")
        n = len(labels)
        cells = {}
        while self.peek().text != "}":
            first = self.peek()
            x = self.element(index)
            self.expect("*")
            y = self.element(index)
            self.expect("=")
            z = self.element(index)
            if (x, y) in cells:
                self.fail(first, f"duplicate mul cell {labels[x]}*{labels[y]}")
            cells[(x, y)] = z
            if self.peek().text == ",":
                self.next()
        close = self.expect("}")
        if not cells:
            self.fail(mul_tok, "mul: needs at least one product")
        missing = [f"{labels[x]}*{labels[y]}" for x in range(n) for y in range(n) if (x, y) not in cells]
        if missing:
            self.fail(close, f"incomplete mul table, missing {', '.join(missing[:6])}"
                      + (" ..." if len(missing) > 6 else ""))
        try:
            leq = order_closure(n, pairs)
            mul = [[cells[(x, y)] for y in range(n)] for x in range(n)]
            S = OrderedGroupoid.from_tables(mul, leq, labels)
        except AxiomError as e:
            v = e.report.violations[0]
            shown = ", ".join(labels[w] for w in v.witness)
            self.fail(name, f"axiom violation in {name.text}: {v.axiom} at ({shown})")
        except StructureError as e:
            self.fail(name, str(e))
        self.doc.structures[name.text] = S

    def order_pair(self, index) -> tuple:
        a = self.element(index)
        self.expect("<=")
        b = self.element(index)
        return a, b

    def element(self, index) -> int:
        t = self.word("element name")
        if t.text not in index:
            self.fail(t, f"unknown element {t.text!r}")
        return index[t.text]

    def structure_ref(self):
        t = self.word("groupoid name")
        if t.text not in self.doc.structures:
            self.fail(t, f"unknown groupoid {t.text!r}")
        return t.text, self.doc.structures[t.text]

    def fuzzy(self):
        self.expect("fuzzy")
        name = self.word("fuzzy subset name")
        if name.text in self.doc.fuzzies:
            self.fail(name, f"duplicate fuzzy subset name {name.text!r}")
        self.expect("on")
        on, S = self.structure_ref()
        index = {lab: i for i, lab in enumerate(S.labels)}
        self.expect("{")
        values = {}
        while True:
            t = self.peek()
            x = self.element(index)
            if x in values:
                self.fail(t, f"element {t.text!r} assigned twice")
            self.expect(":")
            values[x] = self.grade()
            if self.peek().text == ",":
                self.next()
            if self.peek().text == "}":
                break
        close = self.expect("}")
        missing = [S.labels[x] for x in S.elements if x not in values]
        if missing:
            self.fail(close, f"fuzzy subset {name.text} has no grade for {', '.join(missing)}")
        subset = FuzzySubset(S, tuple(values[x] for x in S.elements))
        self.doc.fuzzies[name.text] = FuzzyDef(on, subset)

    def grade(self):
        t = self.word("grade")
        text = t.text
        if self.peek().text == "/":
            self.next()
            text += "/" + self.word("denominator").text
        try:
            return grade(text)
        except GradeError as e:
            self.fail(t, str(e))

    def crisp_set(self):
        self.expect("set")
        name = self.word("set name")
        if name.text in self.doc.sets:
            self.fail(name, f"duplicate set name {name.text!r}")
        self.expect("on")
        on, S = self.structure_ref()
        index = {lab: i for i, lab in enumerate(S.labels)}
        self.expect("{")
        members = set()
        while self.peek().text != "}":
            members.add(self.element(index))
        self.expect("}")
        self.doc.sets[name.text] = SetDef(on, frozenset(members))


def parse(source: str) -> Document:
    return _Parser(source).document()


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump_structure(name: str, S: OrderedGroupoid) -> str:
    lab = S.labels
    order = ", ".join(f"{lab[a]}<={lab[b]}" for a, b in S.covering_pairs())
    rows = [
        ", ".join(f"{lab[x]}*{lab[y]}={lab[S.mul[x][y]]}" for y in S.elements) for x in S.elements
    ]
    mul = (",\n       ").join(rows)
    return (
        f"groupoid {name} {{\n"
        f"  elements: {' '.join(lab)}\n"
        f"  order: {order}\n".replace("order: \n", "order:\n")
        + f"  mul: {mul}\n"
        "}\n"
    )


def dump(doc: Document) -> str:
    """Canonical text; ``parse(dump(doc)) == doc``."""
    out = [dump_structure(name, S) for name, S in doc.structures.items()]
    for name, d in doc.fuzzies.items():
        f = d.subset
        body = ", ".join(f"{lab}: {format_grade(g)}" for lab, g in zip(f.structure.labels, f.grades))
        out.append(f"fuzzy {name} on {d.on} {{ {body} }}\n")
    for name, d in doc.sets.items():
        S = doc.structures[d.on]
        body = " ".join(S.labels[x] for x in sorted(d.elements))
        out.append(f"set {name} on {d.on} {{ {body} }}\n" if body else f"set {name} on {d.on} {{ }}\n")
    return "".join(out)
