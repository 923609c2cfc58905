"""Text formats: algebra description files and module expressions.

Algebra files are line oriented::

    algebra A
    vertices 2
    arrow x : 1 -> 1
    arrow y : 1 -> 2
    arrow z : 2 -> 1
    relation x*y
    relation x^3
    field GF(3)

Module expressions are terms such as ``taun(quot(x + z), 3)`` or
``sum(S(1), rad(P(2)))``; see :func:`parse_module_expr` for the grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .algebra import MonomialAlgebra, Path, Quiver, build_algebra, make_path, trivial
from .errors import DSLError, InfiniteDimensional, RelationViolation
from .linalg import PrimeField, is_prime, MAX_PRIME
from . import homology, repmod

EXAMPLE_ALGEBRA = """\
algebra A
vertices 2
arrow x : 1 -> 1
arrow y : 1 -> 2
arrow z : 2 -> 1
relation x*y
relation y*z
relation z*x
relation x^3
field GF(3)
"""

_LABEL = r"[A-Za-z_][A-Za-z0-9_]*"


# -- words -------------------------------------------------------------------------


def _parse_word(word: str, line: int, col: int) -> list[tuple[str, int]]:
    """``x*y^2`` -> [("x", 1), ("y", 2)] with column offsets relative to ``col``."""
    out = []
    pos = 0
    for part in word.split("*"):
        m = re.fullmatch(rf"\s*({_LABEL})\s*(?:\^\s*(\d+))?\s*", part)
        if not m:
            raise DSLError(f"malformed path word {word!r}", line, col + pos)
        power = int(m.group(2)) if m.group(2) else 1
        if power < 1:
            raise DSLError("powers must be positive", line, col + pos + m.start(2))
        out.append((m.group(1), col + pos + m.start(1)))
        out.extend((m.group(1), col + pos + m.start(1)) for _ in range(power - 1))
        pos += len(part) + 1
    return out


def _word_to_path(quiver: Quiver, labels: list[tuple[str, int]], line: int) -> Path:
    for k, (label, c) in enumerate(labels):
        if label not in quiver.arrow:
            raise DSLError(f"unknown arrow {label!r}", line, c)
        if k and quiver.arrow[labels[k - 1][0]].target != quiver.arrow[label].source:
            raise DSLError(f"arrow {labels[k - 1][0]!r} does not compose with {label!r}", line, c)
    return make_path(quiver, [l for l, _ in labels])


# -- algebra files --------------------------------------------------------------------


def parse_algebra(text: str, field: int | None = None) -> MonomialAlgebra:
    """Parse an algebra description; ``field`` overrides the declared GF(p)."""
    name = "A"
    n_vertices = None
    arrows: list[tuple[str, int, int, int]] = []
    relations: list[tuple[str, int, int]] = []
    p = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        key, _, rest = stripped.partition(" ")
        rest_col = indent + len(key) + 2 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if key == "algebra":
            if not re.fullmatch(r"\S+", rest):
                raise DSLError("expected: algebra <name>", lineno, rest_col)
            name = rest
        elif key == "vertices":
            if not re.fullmatch(r"\d+", rest) or int(rest) < 1:
                raise DSLError("expected a positive vertex count", lineno, rest_col)
            n_vertices = int(rest)
        elif key == "arrow":
            m = re.fullmatch(rf"({_LABEL})\s*:\s*(\d+)\s*->\s*(\d+)", rest)
            if not m:
                raise DSLError("expected: arrow <label> : <i> -> <j>", lineno, rest_col)
            if any(a[0] == m.group(1) for a in arrows):
                raise DSLError(f"duplicate arrow {m.group(1)!r}", lineno, rest_col)
            arrows.append((m.group(1), int(m.group(2)), int(m.group(3)), lineno))
        elif key == "relation":
            if not rest:
                raise DSLError("expected a relation word", lineno, rest_col)
            relations.append((rest, lineno, rest_col))
        elif key == "field":
            m = re.fullmatch(r"GF\(\s*(\d+)\s*\)", rest)
            if not m:
                raise DSLError("expected: field GF(<p>)", lineno, rest_col)
            p = int(m.group(1))
            if not is_prime(p) or p >= MAX_PRIME:
                raise DSLError(f"GF({p}): modulus must be a prime below {MAX_PRIME}", lineno, rest_col)
        else:
            raise DSLError(f"unknown directive {key!r}", lineno, indent + 1)
    if n_vertices is None:
        raise DSLError("missing 'vertices' declaration", 1, 1)
    for label, s, t, lineno in arrows:
        for v in (s, t):
            if not 1 <= v <= n_vertices:
                raise DSLError(f"arrow {label!r}: vertex {v} out of range 1..{n_vertices}", lineno, 1)
    quiver = Quiver.from_triples(n_vertices, [(l, s, t) for l, s, t, _ in arrows])
    paths = []
    for word, lineno, col in relations:
        path = _word_to_path(quiver, _parse_word(word, lineno, col), lineno)
        if path.length < 2:
            raise DSLError("relations must have length at least 2", lineno, col)
        paths.append(path)
    if field is not None:
        if not is_prime(field) or field >= MAX_PRIME:
            raise DSLError(f"GF({field}): modulus must be a prime below {MAX_PRIME}", 1, 1)
        p = field
    try:
        return build_algebra(quiver, paths, PrimeField(p or 3), name=name)
    except InfiniteDimensional as exc:
        raise DSLError(str(exc), 1, 1) from exc


def format_algebra(a: MonomialAlgebra) -> str:
    lines = [f"algebra {a.name}", f"vertices {a.vertex_count}"]
    lines += [f"arrow {x.label} : {x.source} -> {x.target}" for x in a.quiver.arrows]
    lines += [f"relation {_format_word(r)}" for r in a.relations]
    lines.append(f"field GF({a.p})")
    return "\n".join(lines) + "\n"


def _format_word(path: Path) -> str:
    parts = []
    for label in path.arrows:
        if parts and parts[-1][0] == label:
            parts[-1][1] += 1
        else:
            parts.append([label, 1])
    return "*".join(l if k == 1 else f"{l}^{k}" for l, k in parts)


# -- module expressions ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[()\[\],+\-*^=]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    col: int


def _tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise DSLError(f"unexpected character {text[start]!r}", 1, start + 1)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


@dataclass(frozen=True)
class Node:
    """A parsed module expression: ``head(args...)``."""

    head: str
    args: tuple
    col: int
    kwargs: tuple = ()


@dataclass(frozen=True)
class Term:
    """``coeff * word`` inside an ideal; ``word`` is a list of (label, col) or a vertex for e<i>."""

    coeff: int
    word: tuple
    col: int


_UNARY = {"rad", "soc", "top", "socquot", "tau", "tauinv"}
_WITH_INT = {"syz", "cosyz", "taun"}
_VERTEX = {"P", "I", "S"}


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self) -> Token:
        return self.toks[self.k]

    def take(self, kind: str | None = None, text: str | None = None) -> Token:
        t = self.toks[self.k]
        if (kind and t.kind != kind) or (text and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise DSLError(f"expected {want!r}, found {got!r}", 1, t.col)
        self.k += 1
        return t

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().kind != "end"

    def parse(self) -> Node:
        node = self.expr()
        self.take("end")
        return node

    def integer(self) -> int:
        neg = False
        if self.at("-"):
            self.take()
            neg = True
        v = int(self.take("int").text)
        return -v if neg else v

    def expr(self) -> Node:
        name = self.take("name")
        head = name.text
        self.take("op", "(")
        if head in _VERTEX:
            args = (self.integer(),)
        elif head in _UNARY:
            args = (self.expr(),)
        elif head in _WITH_INT:
            inner = self.expr()
            self.take("op", ",")
            args = (inner, self.integer())
        elif head == "sum":
            items = [self.expr()]
            while self.at(","):
                self.take()
                items.append(self.expr())
            args = tuple(items)
        elif head == "pquot":
            gens = [self.integer()]
            while self.at(","):
                self.take()
                gens.append(self.ideal_element())
            args = tuple(gens)
        elif head == "quot":
            gens = []
            if not self.at(")"):
                gens.append(self.ideal_element())
                while self.at(","):
                    self.take()
                    gens.append(self.ideal_element())
            args = tuple(gens)
        elif head == "rep":
            return self.rep_block(name)
        else:
            raise DSLError(f"unknown module constructor {head!r}", 1, name.col)
        self.take("op", ")")
        return Node(head, args, name.col)

    def ideal_element(self) -> tuple[Term, ...]:
        terms = []
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.take().text == "-" else 1
        terms.append(self.term(sign))
        while self.at("+") or self.at("-"):
            sign = -1 if self.take().text == "-" else 1
            terms.append(self.term(sign))
        return tuple(terms)

    def term(self, sign: int) -> Term:
        col = self.peek().col
        coeff = 1
        if self.peek().kind == "int":
            coeff = int(self.take().text)
            if not self.at("*"):
                raise DSLError("expected '*' after coefficient", 1, self.peek().col)
            self.take()
        word = [self.atom()]
        while self.at("*"):
            self.take()
            word.append(self.atom())
        flat = tuple(a for group in word for a in group)
        return Term(sign * coeff, flat, col)

    def atom(self) -> list:
        t = self.take("name")
        power = 1
        if self.at("^"):
            self.take()
            power = int(self.take("int").text)
            if power < 1:
                raise DSLError("powers must be positive", 1, t.col)
        return [(t.text, t.col)] * power

    def rep_block(self, name: Token) -> Node:
        dims = self.int_list()
        kwargs = []
        while self.at(","):
            self.take()
            label = self.take("name")
            self.take("op", "=")
            kwargs.append((label.text, label.col, self.matrix()))
        self.take("op", ")")
        return Node("rep", (dims,), name.col, tuple(kwargs))

    def int_list(self) -> tuple[int, ...]:
        self.take("op", "[")
        out = []
        if not self.at("]"):
            out.append(self.integer())
            while self.at(","):
                self.take()
                out.append(self.integer())
        self.take("op", "]")
        return tuple(out)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        self.take("op", "[")
        rows = []
        if not self.at("]"):
            rows.append(self.int_list())
            while self.at(","):
                self.take()
                rows.append(self.int_list())
        self.take("op", "]")
        return tuple(rows)


def parse_module_expr(text: str) -> Node:
    """Parse a module expression.

    Grammar::

        expr  := P(i) | I(i) | S(i)
               | rad(expr) | soc(expr) | top(expr) | socquot(expr)
               | tau(expr) | tauinv(expr)
               | syz(expr, n) | cosyz(expr, n) | taun(expr, i)
               | sum(expr, expr, ...)
               | quot(ideal, ...)          A / (sum of right ideals)
               | pquot(i, ideal, ...)      e_i A / (sum of right ideals)
               | rep([d1, ..., dn], label=[[...], ...], ...)
        ideal := ['-'] term (('+' | '-') term)*
        term  := [int '*'] atom ('*' atom)*
        atom  := label ['^' int] | e<i>
    """
    return _Parser(text).parse()


def _ideal_element(algebra: MonomialAlgebra, terms: tuple[Term, ...]):
    acc = algebra.element({})
    quiver = algebra.quiver
    for t in terms:
        labels = list(t.word)
        if len(labels) == 1 and labels[0][0] not in quiver.arrow:
            m = re.fullmatch(r"e(\d+)", labels[0][0])
            if m:
                v = int(m.group(1))
                if not 1 <= v <= algebra.vertex_count:
                    raise DSLError(f"vertex {v} out of range", 1, labels[0][1])
                acc = acc + algebra.element({trivial(v): t.coeff})
                continue
        path = _word_to_path(quiver, labels, 1)
        acc = acc + algebra.element({path: t.coeff})
    return acc


def eval_module(algebra: MonomialAlgebra, expr: str | Node) -> repmod.Representation:
    node = parse_module_expr(expr) if isinstance(expr, str) else expr
    return _eval(algebra, node)


def _eval(algebra: MonomialAlgebra, node: Node) -> repmod.Representation:
    h = node.head
    if h in _VERTEX:
        i = node.args[0]
        if not 1 <= i <= algebra.vertex_count:
            raise DSLError(f"vertex {i} out of range 1..{algebra.vertex_count}", 1, node.col)
        return {"P": repmod.projective, "I": repmod.injective, "S": repmod.simple}[h](algebra, i)
    if h == "quot":
        gens = [_ideal_element(algebra, g) for g in node.args]
        return repmod.quotient_by_right_ideal(algebra, gens)
    if h == "pquot":
        i = node.args[0]
        if not 1 <= i <= algebra.vertex_count:
            raise DSLError(f"vertex {i} out of range 1..{algebra.vertex_count}", 1, node.col)
        gens = [_ideal_element(algebra, g) for g in node.args[1:]]
        try:
            return repmod.quotient_of_projective(algebra, i, gens)
        except ValueError as exc:
            raise DSLError(str(exc), 1, node.col) from exc
    if h == "rep":
        (dims,) = node.args
        if len(dims) != algebra.vertex_count:
            raise DSLError(f"expected {algebra.vertex_count} dimensions", 1, node.col)
        action = {}
        for label, col, rows in node.kwargs:
            if label not in algebra.quiver.arrow:
                raise DSLError(f"unknown arrow {label!r}", 1, col)
            a = algebra.quiver.arrow[label]
            shape = (dims[a.source - 1], dims[a.target - 1])
            if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
                raise DSLError(f"arrow {label!r}: expected a {shape[0]}x{shape[1]} matrix", 1, col)
            action[label] = [list(r) for r in rows] if shape[0] else []
        try:
            return repmod.Representation(algebra, dims, action)
        except (ValueError, RelationViolation) as exc:
            raise DSLError(str(exc), 1, node.col) from exc
    if h == "sum":
        return repmod.direct_sum([_eval(algebra, a) for a in node.args], algebra)[0]
    inner = _eval(algebra, node.args[0])
    unary: dict[str, Callable] = {
        "rad": lambda m: repmod.radical(m)[0],
        "soc": lambda m: repmod.socle(m)[0],
        "top": lambda m: repmod.top(m)[0],
        "socquot": lambda m: repmod.cokernel(repmod.socle(m)[1])[0],
        "tau": homology.tau,
        "tauinv": homology.tau_inverse,
    }
    if h in unary:
        return unary[h](inner)
    n = node.args[1]
    if n < 1:
        raise DSLError(f"{h}: second argument must be >= 1, got {n}", 1, node.col)
    return {"syz": homology.syzygy, "cosyz": homology.cosyzygy, "taun": homology.tau_n}[h](inner, n)
