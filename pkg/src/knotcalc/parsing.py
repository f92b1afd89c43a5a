"""Text formats: complex files and knot recipe expressions.

Complex file grammar (line oriented):

    # comment
    gen IDENT GRU GRV
    d IDENT = 0
    d IDENT = TERM + TERM + ...      TERM := ("U^"K | "V^"K | "1") IDENT

Omitted d lines mean zero differential.  Serialization writes generators in
declaration order and one d line per source with a nonzero differential, so
serialize(parse(text)) is stable.

Recipe grammar:

    expr := term (("+" | "-") term)*
    term := [UINT "*"] atom
    atom := "T(" p "," q ")" | "Cable(" atom ";" p "," q ")"
          | "Thin(" int ")" | "Std(" intlist ")" | "D"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .algebra import Complex, Monomial, mono, validate
from .errors import ParseError

_GEN_RE = re.compile(r"gen\s+(\S+)\s+(-?\d+)\s+(-?\d+)\s*$")
_D_RE = re.compile(r"d\s+(\S+)\s*=\s*(.*)$")
_TERM_RE = re.compile(r"(U\^(\d+)|V\^(\d+)|1)\s+(\S+)\s*$")


def parse_complex_file(text: str) -> Complex:
    """Parse and validate a complex file."""
    generators: list[tuple[str, tuple[int, int]]] = []
    differential: list[tuple[str, list[tuple[Monomial, str]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gen"):
            m = _GEN_RE.match(line)
            if not m:
                raise ParseError(f"bad gen line {raw!r}", line=lineno)
            generators.append((m.group(1), (int(m.group(2)), int(m.group(3)))))
        elif line.startswith("d"):
            m = _D_RE.match(line)
            if not m:
                raise ParseError(f"bad d line {raw!r}", line=lineno)
            src, rhs = m.group(1), m.group(2).strip()
            if any(s == src for s, _ in differential):
                raise ParseError(f"duplicate differential for {src!r}", line=lineno)
            terms: list[tuple[Monomial, str]] = []
            if rhs != "0":
                for chunk in rhs.split("+"):
                    tm = _TERM_RE.match(chunk.strip())
                    if not tm:
                        raise ParseError(f"bad term {chunk.strip()!r}", line=lineno)
                    if tm.group(2):
                        monomial = mono("U", int(tm.group(2)))
                    elif tm.group(3):
                        monomial = mono("V", int(tm.group(3)))
                    else:
                        monomial = mono("1", 0)
                    terms.append((monomial, tm.group(4)))
            differential.append((src, terms))
        else:
            raise ParseError(f"unrecognized line {raw!r}", line=lineno)
    return validate(generators, differential)


def serialize_complex(c: Complex) -> str:
    lines = []
    for g in c.gens:
        lines.append(f"gen {g.name} {g.grading.gru} {g.grading.grv}")
    for s in range(len(c.gens)):
        row = c.diff.get(s)
        if not row:
            continue
        terms = " + ".join(f"{row[t]} {c.gens[t].name}" for t in sorted(row))
        lines.append(f"d {c.gens[s].name} = {terms}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Recipe expressions


@dataclass(frozen=True)
class Torus:
    p: int
    q: int


@dataclass(frozen=True)
class CableAtom:
    inner: "Atom"
    p: int
    q: int


@dataclass(frozen=True)
class Thin:
    tau: int


@dataclass(frozen=True)
class StdLiteral:
    params: tuple[int, ...]


@dataclass(frozen=True)
class DAlias:
    pass


Atom = Union[Torus, CableAtom, Thin, StdLiteral, DAlias]


@dataclass(frozen=True)
class KnotExpr:
    """Signed combination of atoms: (sign, multiplicity, atom) terms."""

    terms: tuple[tuple[int, int, Atom], ...]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text):
            raise ParseError(f"expected {ch!r}, got end of input", column=self.pos)
        if self.text[self.pos] != ch:
            raise ParseError(
                f"expected {ch!r}, got {self.text[self.pos]!r}", column=self.pos
            )
        self.pos += 1

    def integer(self, signed: bool = True) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] in ("+", "-"):
            raise ParseError("expected an integer", column=start)
        return int(self.text[start:self.pos])

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]


def _parse_atom(sc: _Scanner) -> Atom:
    start = sc.pos
    head = sc.word()
    if head == "T":
        sc.expect("(")
        p = sc.integer()
        sc.expect(",")
        q = sc.integer()
        sc.expect(")")
        return Torus(p, q)
    if head == "Cable":
        sc.expect("(")
        inner = _parse_atom(sc)
        sc.expect(";")
        p = sc.integer()
        sc.expect(",")
        q = sc.integer()
        sc.expect(")")
        return CableAtom(inner, p, q)
    if head == "Thin":
        sc.expect("(")
        t = sc.integer()
        sc.expect(")")
        return Thin(t)
    if head == "Std":
        sc.expect("(")
        params = []
        if sc.peek() != ")":
            params.append(sc.integer())
            while sc.peek() == ",":
                sc.expect(",")
                params.append(sc.integer())
        sc.expect(")")
        return StdLiteral(tuple(params))
    if head == "D":
        return DAlias()
    raise ParseError(f"unknown atom {head!r}" if head else "expected an atom", column=start)


def _parse_term(sc: _Scanner) -> tuple[int, Atom]:
    sc.skip_ws()
    save = sc.pos
    mult = 1
    if sc.peek().isdigit():
        mult = sc.integer(signed=False)
        if sc.peek() == "*":
            sc.expect("*")
        else:
            sc.pos = save
            mult = 1
    if mult < 1:
        raise ParseError("multiplier must be >= 1", column=save)
    return mult, _parse_atom(sc)


def parse_knot_expr(text: str) -> KnotExpr:
    """Parse a recipe expression like "Cable(D;3,4) - T(3,4)"."""
    sc = _Scanner(text)
    terms: list[tuple[int, int, Atom]] = []
    mult, atom = _parse_term(sc)
    terms.append((1, mult, atom))
    while True:
        sc.skip_ws()
        if sc.pos >= len(sc.text):
            break
        ch = sc.text[sc.pos]
        if ch not in "+-":
            raise ParseError(f"expected '+' or '-', got {ch!r}", column=sc.pos)
        sc.pos += 1
        mult, atom = _parse_term(sc)
        terms.append((1 if ch == "+" else -1, mult, atom))
    return KnotExpr(terms=tuple(terms))
