"""Text formats: dictionary files, regular expressions inside ``re(...)``, tree files.

Dictionary file, one statement per line::

    alphabet 2
    # comment
    A0 = { 010, 011 }
    A1 = ext(11)
    S  = star(A0)
    D  = A1 \\ S
    U  = A0 | A1
    R  = re(1 0* 1 1 1*)
    main = D

``\\`` and ``|`` associate to the left with equal precedence; parentheses
group. Inside ``re(...)`` the operators are ``|``, ``*``, ``+``, ``?``, ``.``
(any letter), ``e`` (empty word) and grouping parentheses; blanks are
ignored.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from .dictionary import (
    AllWords,
    Concat,
    Diff,
    Dictionary,
    Expr,
    Ext,
    Finite,
    Letter,
    Star,
    Union,
)
from .words import EMPTY, Word, format_word, parse_word, shortlex_key

_DIGITS = "0123456789ABCDEF"


class FormatError(ValueError):
    """Malformed input file or literal."""


# -- regular expressions ---------------------------------------------------


class _RegexParser:
    def __init__(self, text: str, n: int):
        self.s = "".join(text.split())
        self.i = 0
        self.n = n

    def peek(self) -> Optional[str]:
        return self.s[self.i] if self.i < len(self.s) else None

    def parse(self) -> Expr:
        e = self.alt()
        if self.i != len(self.s):
            raise FormatError(f"unexpected {self.s[self.i]!r} in regex {self.s!r}")
        return e

    def alt(self) -> Expr:
        parts = [self.seq()]
        while self.peek() == "|":
            self.i += 1
            parts.append(self.seq())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def seq(self) -> Expr:
        parts = []
        while self.peek() is not None and self.peek() not in "|)":
            parts.append(self.postfix())
        if not parts:
            return Finite([EMPTY])
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def postfix(self) -> Expr:
        e = self.atom()
        while self.peek() in ("*", "+", "?"):
            op = self.s[self.i]
            self.i += 1
            if op == "*":
                e = Star(e)
            elif op == "+":
                e = Concat((e, Star(e)))
            else:
                e = Union((e, Finite([EMPTY])))
        return e

    def atom(self) -> Expr:
        c = self.peek()
        if c == "(":
            self.i += 1
            e = self.alt()
            if self.peek() != ")":
                raise FormatError(f"unbalanced parenthesis in regex {self.s!r}")
            self.i += 1
            return e
        if c == "e":
            self.i += 1
            return Finite([EMPTY])
        if c == ".":
            self.i += 1
            return Union(tuple(Letter(a) for a in range(self.n)))
        if c is not None and c in _DIGITS:
            a = _DIGITS.index(c)
            if a >= self.n:
                raise FormatError(f"letter {c} outside alphabet of size {self.n}")
            self.i += 1
            return Letter(a)
        raise FormatError(f"unexpected {c!r} in regex {self.s!r}")


def parse_regex(text: str, n: int = 2) -> Expr:
    return _RegexParser(text, n).parse()


# -- dictionary files ------------------------------------------------------

class _ExprParser:
    def __init__(self, text: str, env: Dict[str, Expr], n: int):
        self.s = text
        self.i = 0
        self.env = env
        self.n = n

    def skip_ws(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> Optional[str]:
        self.skip_ws()
        return self.s[self.i] if self.i < len(self.s) else None

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise FormatError(f"expected {ch!r} at column {self.i} in {self.s!r}")
        self.i += 1

    def ident(self) -> str:
        self.skip_ws()
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(self.s, self.i)
        if not m:
            raise FormatError(f"expected a name at column {self.i} in {self.s!r}")
        self.i = m.end()
        return m.group(0)

    def word(self) -> Word:
        self.skip_ws()
        m = re.compile(r"[0-9A-F]+|e\b").match(self.s, self.i)
        if not m:
            raise FormatError(f"expected a word at column {self.i} in {self.s!r}")
        self.i = m.end()
        w = parse_word(m.group(0))
        if any(a >= self.n for a in w):
            raise FormatError(f"word {m.group(0)} outside alphabet of size {self.n}")
        return w

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek() is not None:
            raise FormatError(f"trailing input at column {self.i} in {self.s!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek() in ("|", "\\"):
            op = self.s[self.i]
            self.i += 1
            rhs = self.term()
            e = Union((e, rhs)) if op == "|" else Diff(e, rhs)
        return e

    def term(self) -> Expr:
        c = self.peek()
        if c == "{":
            self.i += 1
            words = []
            if self.peek() != "}":
                words.append(self.word())
                while self.peek() == ",":
                    self.i += 1
                    words.append(self.word())
            self.expect("}")
            return Finite(words)
        if c == "(":
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        name = self.ident()
        if name in ("ext", "star", "re") and self.peek() == "(":
            self.i += 1
            if name == "ext":
                e: Expr = Ext(self.word())
            elif name == "star":
                e = Star(self.expr())
            else:
                depth, j = 1, self.i
                while j < len(self.s) and depth:
                    depth += {"(": 1, ")": -1}.get(self.s[j], 0)
                    j += 1
                if depth:
                    raise FormatError(f"unbalanced re( in {self.s!r}")
                e = parse_regex(self.s[self.i : j - 1], self.n)
                self.i = j - 1
            self.expect(")")
            return e
        if name == "all":
            return AllWords()
        if name not in self.env:
            raise FormatError(f"undefined name {name!r}")
        return self.env[name]


def parse_dictionary_text(text: str, name: str = "") -> Tuple[Dictionary, Dict[str, Dictionary]]:
    """Parse a dictionary file; returns (main dictionary, every named dictionary)."""
    n = 2
    env: Dict[str, Expr] = {}
    order: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"alphabet\s+(\d+)", line)
        if m:
            if env:
                raise FormatError(f"line {lineno}: alphabet must come before definitions")
            n = int(m.group(1))
            if not 2 <= n <= 16:
                raise FormatError(f"line {lineno}: alphabet size must be in 2..16")
            continue
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)", line)
        if not m:
            raise FormatError(f"line {lineno}: cannot parse {raw!r}")
        key, body = m.groups()
        if key in ("ext", "star", "re", "all", "e", "alphabet"):
            raise FormatError(f"line {lineno}: {key!r} is reserved")
        try:
            env[key] = _ExprParser(body, env, n).parse()
        except FormatError as err:
            raise FormatError(f"line {lineno}: {err}") from None
        order.append(key)
    if not order:
        raise FormatError("no definitions")
    main_key = "main" if "main" in env else order[-1]
    named = {k: Dictionary(env[k], n, k) for k in order}
    main = Dictionary(env[main_key], n, name or main_key)
    return main, named


def load_dictionary(path) -> Dictionary:
    path = Path(path)
    main, _ = parse_dictionary_text(path.read_text(), name=path.stem)
    return main


def dump_finite_dictionary(words: Iterable[Word], n: int = 2, name: str = "main") -> str:
    words = sorted(set(words), key=shortlex_key)
    body = ", ".join(format_word(w) for w in words)
    return f"alphabet {n}\n{name} = {{ {body} }}\n"


# -- trees -----------------------------------------------------------------


def parse_tree_text(text: str) -> frozenset:
    """One node per line: comma-separated naturals, ``()`` for the root."""
    nodes = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "()":
            nodes.add(())
            continue
        try:
            nodes.add(tuple(int(x) for x in line.strip("()").split(",")))
        except ValueError:
            raise FormatError(f"line {lineno}: malformed node {raw!r}") from None
    for t in nodes:
        if any(x < 0 for x in t):
            raise FormatError(f"negative label in node {t}")
        if t and t[:-1] not in nodes:
            raise FormatError(f"tree is not prefix-closed: {t} present but {t[:-1]} missing")
    return frozenset(nodes)


def load_tree(path) -> frozenset:
    return parse_tree_text(Path(path).read_text())


def format_tree(nodes) -> str:
    lines = []
    for t in sorted(nodes, key=lambda t: (len(t), t)):
        lines.append("()" if not t else ",".join(str(x) for x in t))
    return "\n".join(lines) + "\n"
