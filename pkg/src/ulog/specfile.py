"""Parser and printer for the little logic-and-map spec language.

The grammar is a flat whitespace-separated token stream; ``#`` starts a
comment running to the end of the line::

    file  := (logic | map)*
    logic := "logic" IDENT "elements" IDENT* rule* "end"
    rule  := "rule" IDENT* "->" IDENT
    map   := "map" IDENT ":" IDENT "->" IDENT pair* "end"
    pair  := IDENT "->" IDENT
    IDENT := [A-Za-z_][A-Za-z0-9_]*   (keywords are reserved)

Grammar trouble raises :class:`ParseError`; a structurally well-formed file
that breaks the naming, totality or cap rules raises
:class:`ValidationError`.  Both carry the 1-based line and column of the
offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import HARD_CAP, TotalMap, Universe
from .monotone import AbstractLogic, generate

_KEYWORDS = {"logic", "map", "elements", "rule", "end", ":", "->"}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class SpecError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class ParseError(SpecError):
    """Token-level or grammar-level failure."""


class ValidationError(SpecError):
    """Well-formed input that violates the file's semantic rules."""


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class LogicDecl:
    name: str
    elements: tuple[str, ...]
    rules: tuple[tuple[tuple[str, ...], str], ...]


@dataclass(frozen=True)
class MapDecl:
    name: str
    domain: str
    codomain: str
    pairs: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class SpecFile:
    logics: tuple[LogicDecl, ...]
    maps: tuple[MapDecl, ...]

    def logic(self, name: str) -> LogicDecl:
        for decl in self.logics:
            if decl.name == name:
                return decl
        raise KeyError(f"no logic named {name!r}")

    def map(self, name: str) -> MapDecl:
        for decl in self.maps:
            if decl.name == name:
                return decl
        raise KeyError(f"no map named {name!r}")


def tokenize(text: str) -> list[Token]:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for match in re.finditer(r"\S+", body):
            tokens.append(Token(match.group(), lineno, match.start() + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("", 1, 1)
            raise ParseError("unexpected end of input", last.line, last.column)
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}",
                             tok.line, tok.column)
        return tok

    def ident(self) -> Token:
        tok = self.take()
        if tok.text in _KEYWORDS or not _IDENT.match(tok.text):
            raise ParseError(f"expected an identifier, found {tok.text!r}",
                             tok.line, tok.column)
        return tok

    def parse_file(self) -> SpecFile:
        logics: list[LogicDecl] = []
        maps: list[MapDecl] = []
        names: dict[str, Token] = {}
        map_tokens: dict[str, "_MapTokens"] = {}
        while (tok := self.peek()) is not None:
            if tok.text == "logic":
                decl, name_tok = self.parse_logic()
                self.declare(names, decl.name, name_tok)
                logics.append(decl)
            elif tok.text == "map":
                decl, tokens = self.parse_map()
                self.declare(names, decl.name, tokens.name)
                map_tokens[decl.name] = tokens
                maps.append(decl)
            else:
                raise ParseError(f"expected 'logic' or 'map', found {tok.text!r}",
                                 tok.line, tok.column)
        spec = SpecFile(tuple(logics), tuple(maps))
        _validate(spec, names, map_tokens)
        return spec

    @staticmethod
    def declare(names: dict[str, Token], name: str, tok: Token) -> None:
        if name in names:
            raise ValidationError(f"duplicate name {name!r}", tok.line, tok.column)
        names[name] = tok

    def parse_logic(self) -> tuple[LogicDecl, Token]:
        self.expect("logic")
        name = self.ident()
        self.expect("elements")
        elements: list[Token] = []
        while (tok := self.peek()) is not None and tok.text not in ("rule", "end"):
            elements.append(self.ident())
        seen: dict[str, Token] = {}
        for tok in elements:
            if tok.text in seen:
                raise ValidationError(f"duplicate element {tok.text!r}",
                                      tok.line, tok.column)
            seen[tok.text] = tok
        rules: list[tuple[tuple[Token, ...], Token]] = []
        while (tok := self.peek()) is not None and tok.text == "rule":
            self.take()
            premises: list[Token] = []
            while (tok := self.peek()) is not None and tok.text != "->":
                premises.append(self.ident())
            self.expect("->")
            rules.append((tuple(premises), self.ident()))
        self.expect("end")
        for premises, head in rules:
            for tok in (*premises, head):
                if tok.text not in seen:
                    raise ValidationError(
                        f"unknown element {tok.text!r} in rule", tok.line, tok.column)
        decl = LogicDecl(
            name.text,
            tuple(tok.text for tok in elements),
            tuple((tuple(p.text for p in ps), h.text) for ps, h in rules),
        )
        return decl, name

    def parse_map(self) -> tuple[MapDecl, "_MapTokens"]:
        self.expect("map")
        name = self.ident()
        self.expect(":")
        domain = self.ident()
        self.expect("->")
        codomain = self.ident()
        pairs: list[tuple[Token, Token]] = []
        while (tok := self.peek()) is not None and tok.text != "end":
            source = self.ident()
            self.expect("->")
            pairs.append((source, self.ident()))
        self.expect("end")
        decl = MapDecl(
            name.text, domain.text, codomain.text,
            tuple((a.text, b.text) for a, b in pairs),
        )
        return decl, _MapTokens(name, domain, codomain, tuple(pairs))


@dataclass(frozen=True)
class _MapTokens:
    # source positions of a map declaration, kept out of the public decl
    name: Token
    domain: Token
    codomain: Token
    pairs: tuple[tuple[Token, Token], ...]


def parse(text: str) -> SpecFile:
    return _Parser(tokenize(text)).parse_file()


def _validate(spec: SpecFile, names: dict[str, Token],
              map_tokens: dict[str, _MapTokens]) -> None:
    logic_names = {decl.name for decl in spec.logics}
    for decl in spec.logics:
        if len(decl.elements) > HARD_CAP:
            tok = names[decl.name]
            raise ValidationError(
                f"logic {decl.name!r} has {len(decl.elements)} elements, "
                f"cap is {HARD_CAP}", tok.line, tok.column)
    for decl in spec.maps:
        tokens = map_tokens[decl.name]
        for ref, tok in ((decl.domain, tokens.domain),
                         (decl.codomain, tokens.codomain)):
            if ref not in logic_names:
                raise ValidationError(f"unknown logic {ref!r}", tok.line, tok.column)
        domain = spec.logic(decl.domain)
        codomain = spec.logic(decl.codomain)
        assigned: dict[str, str] = {}
        for (source, target), (stok, ttok) in zip(decl.pairs, tokens.pairs):
            if source not in domain.elements:
                raise ValidationError(
                    f"{source!r} is not an element of {decl.domain!r}",
                    stok.line, stok.column)
            if target not in codomain.elements:
                raise ValidationError(
                    f"{target!r} is not an element of {decl.codomain!r}",
                    ttok.line, ttok.column)
            if source in assigned:
                raise ValidationError(
                    f"element {source!r} assigned twice in map {decl.name!r}",
                    stok.line, stok.column)
            assigned[source] = target
        missing = [e for e in domain.elements if e not in assigned]
        if missing:
            raise ValidationError(
                f"map {decl.name!r} is not total: missing {missing[0]!r}",
                tokens.name.line, tokens.name.column)


def render(spec: SpecFile) -> str:
    """Canonical text whose reparse equals ``spec``."""
    chunks = []
    for decl in spec.logics:
        lines = [f"logic {decl.name}"]
        lines.append("  " + " ".join(("elements", *decl.elements)))
        for premises, head in decl.rules:
            lines.append("  " + " ".join(("rule", *premises, "->", head)))
        lines.append("end")
        chunks.append("\n".join(lines))
    for decl in spec.maps:
        lines = [f"map {decl.name} : {decl.domain} -> {decl.codomain}"]
        for source, target in decl.pairs:
            lines.append(f"  {source} -> {target}")
        lines.append("end")
        chunks.append("\n".join(lines))
    return "\n".join(chunks) + ("\n" if chunks else "")


def build_logic(decl: LogicDecl) -> AbstractLogic:
    universe = Universe(decl.elements)
    rules = [
        (universe.subset(premises), universe.index(head))
        for premises, head in decl.rules
    ]
    return generate(universe, rules)


def build_map(decl: MapDecl, domain: AbstractLogic, codomain: AbstractLogic) -> TotalMap:
    lookup = {label: i for i, label in enumerate(codomain.carrier.labels)}
    targets = [0] * domain.carrier.size
    for source, target in decl.pairs:
        targets[domain.carrier.index(source)] = lookup[target]
    return TotalMap(domain.carrier, codomain.carrier, tuple(targets))
