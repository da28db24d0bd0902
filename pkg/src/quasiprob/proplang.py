"""Propositional formulas over a finite atom vocabulary.

Grammar, loosest binding first::

    iff     := implies ("<->" implies)*        left-associative
    implies := or ("->" implies)?              right-associative
    or      := and ("|" and)*                  left-associative
    and     := unary ("&" unary)*              left-associative
    unary   := "!" unary | primary
    primary := ATOM | "true" | "false" | "(" iff ")"

``¬ ∧ ∨ → ↔ ⊤ ⊥`` are accepted as input aliases; output is ASCII only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .errors import FormulaSyntaxError, UnknownAtom
from .measure.space import Event, WorldSpace

MAX_ATOMS = 20
EMPTY_WORLD = "true"

ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_KEYWORDS = {"true", "false"}


@dataclass(frozen=True)
class Top:
    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self) -> None:
        if not ATOM_RE.fullmatch(self.name) or self.name in _KEYWORDS:
            raise ValueError(f"invalid atom name {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not:
    arg: Formula

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Iff:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return format_formula(self)


Formula = Union[Top, Bottom, Atom, Not, And, Or, Implies, Iff]


# -- lexer ---------------------------------------------------------------

_ALIASES = {"¬": "!", "∧": "&", "∨": "|", "→": "->", "↔": "<->", "⊤": "true", "⊥": "false"}
_TOKEN = re.compile(r"\s*(?:(<->|->|[!&|()])|([A-Za-z_][A-Za-z0-9_]*)|([¬∧∨→↔⊤⊥]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # operator text, "atom", "true", "false" or "eof"
    text: str
    offset: int  # byte offset


def _tokens(text: str) -> list[_Tok]:
    out = []
    pos = 0
    byte = 0  # running UTF-8 offset of ``pos``
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if not rest.strip():
                break
            lead = len(rest) - len(rest.lstrip())
            off = byte + len(rest[:lead].encode())
            raise FormulaSyntaxError(off, frozenset({"formula or operator"}), repr(rest.lstrip()[0]))
        start = m.start(m.lastindex)
        off = byte + len(text[pos:start].encode())
        op, name, uni = m.group(1), m.group(2), m.group(3)
        if op:
            out.append(_Tok(op, op, off))
        elif name:
            out.append(_Tok(name if name in _KEYWORDS else "atom", name, off))
        else:
            out.append(_Tok(_ALIASES[uni], uni, off))
        byte += len(text[pos : m.end()].encode())
        pos = m.end()
    out.append(_Tok("eof", "", len(text.encode())))
    return out


# -- parser --------------------------------------------------------------

_PRIMARY_START = frozenset({"atom", "true", "false", "(", "!"})


class _Parser:
    def __init__(self, text: str) -> None:
        self.toks = _tokens(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected: frozenset[str]) -> FormulaSyntaxError:
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        return FormulaSyntaxError(t.offset, expected, found)

    def take(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    def parse(self) -> Formula:
        f = self.iff()
        if self.tok.kind != "eof":
            raise self.fail(frozenset({"&", "|", "->", "<->", "end of input"}))
        return f

    def iff(self) -> Formula:
        f = self.implies()
        while self.take("<->"):
            f = Iff(f, self.implies())
        return f

    def implies(self) -> Formula:
        f = self.disj()
        if self.take("->"):
            return Implies(f, self.implies())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.take("|"):
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.take("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.take("!"):
            return Not(self.unary())
        t = self.tok
        if t.kind == "atom":
            self.i += 1
            return Atom(t.text)
        if t.kind == "true":
            self.i += 1
            return Top()
        if t.kind == "false":
            self.i += 1
            return Bottom()
        if self.take("("):
            f = self.iff()
            if not self.take(")"):
                raise self.fail(frozenset({"&", "|", "->", "<->", ")"}))
            return f
        raise self.fail(_PRIMARY_START)


def parse(text: str) -> Formula:
    """Parse a formula.

    >>> parse("!p & q -> r")
    Implies(left=And(left=Not(arg=Atom(name='p')), right=Atom(name='q')), right=Atom(name='r'))
    """
    return _Parser(text).parse()


def as_formula(f: Formula | str) -> Formula:
    return parse(f) if isinstance(f, str) else f


# -- printer ---------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6, Top: 6, Bottom: 6}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def format_formula(f: Formula) -> str:
    """Render ``f`` with the fewest parentheses that re-parse to the same tree."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Not):
        inner = format_formula(f.arg)
        return "!" + (inner if _PREC[type(f.arg)] >= 5 else f"({inner})")
    p = _PREC[type(f)]
    left, right = format_formula(f.left), format_formula(f.right)  # type: ignore[union-attr]
    lp, rp = _PREC[type(f.left)], _PREC[type(f.right)]  # type: ignore[union-attr]
    if isinstance(f, Implies):
        lparen, rparen = lp <= p, rp < p
    else:
        lparen, rparen = lp < p, rp <= p
    if lparen:
        left = f"({left})"
    if rparen:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


def atoms_of(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, (Top, Bottom)):
        return set()
    if isinstance(f, Not):
        return atoms_of(f.arg)
    return atoms_of(f.left) | atoms_of(f.right)  # type: ignore[union-attr]


def holds(f: Formula, assignment: dict[str, bool]) -> bool:
    """Classical truth value of ``f`` under ``assignment``."""
    if isinstance(f, Atom):
        try:
            return assignment[f.name]
        except KeyError:
            raise UnknownAtom(f.name) from None
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not holds(f.arg, assignment)
    a = holds(f.left, assignment)  # type: ignore[union-attr]
    b = holds(f.right, assignment)  # type: ignore[union-attr]
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Implies):
        return (not a) or b
    return a == b


# -- worlds and events -------------------------------------------------------


def world_name(atoms: Sequence[str], bits: Sequence[bool]) -> str:
    if not atoms:
        return EMPTY_WORLD
    return "".join(a if b else "!" + a for a, b in zip(atoms, bits))


def enumerate_worlds(atoms: Sequence[str]) -> WorldSpace:
    """All truth assignments of ``atoms`` in binary counting order.

    The first atom is the most significant bit, so ``[p, q]`` yields
    ``!p!q, !pq, p!q, pq``.
    """
    atoms = tuple(atoms)
    if len(atoms) > MAX_ATOMS:
        raise ValueError(f"at most {MAX_ATOMS} atoms are supported, got {len(atoms)}")
    if len(set(atoms)) != len(atoms):
        raise ValueError("duplicate atom in vocabulary")
    for a in atoms:
        Atom(a)
    k = len(atoms)
    names = [
        world_name(atoms, [bool((i >> (k - 1 - j)) & 1) for j in range(k)]) for i in range(1 << k)
    ]
    if len(set(names)) != len(names):
        raise ValueError("atom names make world identifiers ambiguous")
    return WorldSpace(tuple(names), atoms)


@lru_cache(maxsize=32)
def _atom_masks(space: WorldSpace) -> dict[str, int]:
    assert space.atoms is not None
    k = len(space.atoms)
    size = 1 << k
    masks = {}
    for j, a in enumerate(space.atoms):
        half = 1 << (k - 1 - j)
        # worlds i with bit (k-1-j) set: runs of ``half`` ones after ``half`` zeros
        m, period = ((1 << half) - 1) << half, 2 * half
        while period < size:
            m |= m << period
            period *= 2
        masks[a] = m
    return masks


def eval_event(f: Formula | str, space: WorldSpace) -> Event:
    """The set of worlds of ``space`` satisfying ``f``."""
    f = as_formula(f)
    if space.atoms is None and atoms_of(f):
        raise UnknownAtom(min(atoms_of(f)))
    full = space.full_mask
    masks = _atom_masks(space) if space.atoms else {}

    def go(g: Formula) -> int:
        if isinstance(g, Atom):
            try:
                return masks[g.name]
            except KeyError:
                raise UnknownAtom(g.name) from None
        if isinstance(g, Top):
            return full
        if isinstance(g, Bottom):
            return 0
        if isinstance(g, Not):
            return full & ~go(g.arg)
        a, b = go(g.left), go(g.right)  # type: ignore[union-attr]
        if isinstance(g, And):
            return a & b
        if isinstance(g, Or):
            return a | b
        if isinstance(g, Implies):
            return (full & ~a) | b
        return full & ~(a ^ b)

    return Event(space, go(f))


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.arg)
    elif isinstance(f, (And, Or, Implies, Iff)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
