"""Free pregroup types: atoms with a partial order, iterated adjoints,
beta modality tags, and k-brace decorations.

A type is a string of simple types.  Each simple type is an atom together
with an integer adjoint exponent (0 = plain, -1 = left adjoint, +1 = right
adjoint, iterated adjoints allowed) and a boolean beta tag.  Braced types
split a string into distinguished segments; they only matter to brace-wise
morphisms and are flattened before reduction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union


class PregroupError(Exception):
    """Base class for all errors raised by this package."""


class UnknownAtomError(PregroupError):
    def __init__(self, name: str):
        super().__init__(f"unknown atom {name!r}")
        self.name = name


class CyclicOrderError(PregroupError):
    pass


class TypeParseError(PregroupError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_FORBIDDEN = set("^()<>")


def _valid_atom_name(name: str) -> bool:
    return bool(name) and not any(c.isspace() or c in _FORBIDDEN for c in name)


class AtomTable:
    """Atomic grammatical types plus a partial order between them.

    The order is given as generating pairs ``(lesser, greater)``; ``leq``
    answers against the reflexive-transitive closure.  Cycles between
    distinct atoms are rejected (antisymmetry).

    >>> table = AtomTable({"n", "pi", "s"}, [("n", "pi")])
    >>> table.leq("n", "pi"), table.leq("pi", "n")
    (True, False)
    """

    def __init__(self, atoms: Iterable[str], order_pairs: Iterable[tuple[str, str]] = ()):
        self.atoms = frozenset(atoms)
        for name in self.atoms:
            if not _valid_atom_name(name):
                raise PregroupError(f"invalid atom name {name!r}")
        self.order_pairs = frozenset(tuple(p) for p in order_pairs)
        for a, b in self.order_pairs:
            for name in (a, b):
                if name not in self.atoms:
                    raise UnknownAtomError(name)
        self._up = self._close()

    def _close(self) -> dict[str, frozenset[str]]:
        succ: dict[str, set[str]] = {a: set() for a in self.atoms}
        for a, b in self.order_pairs:
            succ[a].add(b)
        up = {}
        for start in self.atoms:
            seen = {start}
            stack = [start]
            while stack:
                for nxt in succ[stack.pop()]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            up[start] = frozenset(seen)
        for a in self.atoms:
            for b in up[a]:
                if a != b and a in up[b]:
                    raise CyclicOrderError(f"order cycle between {a!r} and {b!r}")
        return up

    def __contains__(self, name: str) -> bool:
        return name in self.atoms

    def leq(self, a: str, b: str) -> bool:
        for name in (a, b):
            if name not in self.atoms:
                raise UnknownAtomError(name)
        return b in self._up[a]

    def __repr__(self):
        return f"AtomTable({sorted(self.atoms)!r}, {sorted(self.order_pairs)!r})"


@dataclass(frozen=True, order=True)
class SimpleType:
    """An atom with an adjoint exponent and an optional beta tag."""

    atom: str
    exponent: int = 0
    beta: bool = False

    @property
    def left(self) -> "SimpleType":
        return SimpleType(self.atom, self.exponent - 1, self.beta)

    @property
    def right(self) -> "SimpleType":
        return SimpleType(self.atom, self.exponent + 1, self.beta)

    def render(self) -> str:
        base = f"b({self.atom})" if self.beta else self.atom
        z = self.exponent
        return base + ("^l" * -z if z < 0 else "^r" * z)

    def __str__(self):
        return self.render()


@dataclass(frozen=True, order=True)
class CompoundType:
    """An ordered string of simple types; the empty string is the unit."""

    parts: tuple[SimpleType, ...] = ()

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[SimpleType]:
        return iter(self.parts)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return CompoundType(self.parts[key])
        return self.parts[key]

    def __add__(self, other: "CompoundType") -> "CompoundType":
        return CompoundType(self.parts + other.parts)

    def render(self) -> str:
        return " ".join(p.render() for p in self.parts)

    def __str__(self):
        return self.render()


@dataclass(frozen=True, order=True)
class BracedType:
    """A type split into k >= 1 distinguished segments."""

    segments: tuple[CompoundType, ...]

    def __post_init__(self):
        if not self.segments:
            raise PregroupError("a braced type needs at least one segment")

    def flatten(self) -> CompoundType:
        flat = CompoundType()
        for seg in self.segments:
            flat = flat + seg
        return flat

    def render(self) -> str:
        return " ".join(f"< {seg.render()} >".replace("<  >", "< >") for seg in self.segments)

    def __str__(self):
        return self.render()


Type = Union[CompoundType, BracedType]

EMPTY = CompoundType()


def left_adjoint(t: CompoundType) -> CompoundType:
    """(xy)^l = y^l x^l: reverse the parts and decrement every exponent."""
    return CompoundType(tuple(p.left for p in reversed(t.parts)))


def right_adjoint(t: CompoundType) -> CompoundType:
    """(xy)^r = y^r x^r: reverse the parts and increment every exponent."""
    return CompoundType(tuple(p.right for p in reversed(t.parts)))


def atom_leq(a: str, b: str, table: AtomTable) -> bool:
    return table.leq(a, b)


def simple_leq(x: SimpleType, y: SimpleType, table: AtomTable) -> bool:
    """Order between simple types: equal exponent and tag, with the atom
    order flipped at odd exponents (if x <= y then y^l <= x^l)."""
    if x.exponent != y.exponent or x.beta != y.beta:
        return False
    if x.exponent % 2 == 0:
        return table.leq(x.atom, y.atom)
    return table.leq(y.atom, x.atom)


def contracts(x: SimpleType, y: SimpleType, table: AtomTable) -> bool:
    """Whether x y -> 1 is a licensed contraction (x at exponent z, y at
    z + 1, matching beta tags, atom order adjusted for parity)."""
    if y.exponent != x.exponent + 1 or x.beta != y.beta:
        return False
    if x.exponent % 2 == 0:
        return table.leq(x.atom, y.atom)
    return table.leq(y.atom, x.atom)


_TOKEN = re.compile(r"<|>|[^\s<>]+")
_SIMPLE = re.compile(r"(b\()?([^\s^()<>]+)(\))?((?:\^[lr])*)\Z")


def _parse_simple(token: str, table: AtomTable, pos: int) -> SimpleType:
    m = _SIMPLE.match(token)
    if m is None:
        raise TypeParseError(f"malformed token {token!r}", pos)
    opened, name, closed, suffix = m.groups()
    if bool(opened) != bool(closed):
        raise TypeParseError(f"unbalanced 'b(' in token {token!r}", pos)
    if name not in table:
        raise TypeParseError(f"unknown atom {name!r}", pos)
    exponent = suffix.count("^r") - suffix.count("^l")
    return SimpleType(name, exponent, beta=bool(opened))


def parse_type(text: str, table: AtomTable) -> Type:
    """Parse a type string; `< ... >` groups produce a :class:`BracedType`.

    >>> table = AtomTable({"n", "s"})
    >>> parse_type("n n^r s", table).render()
    'n n^r s'
    """
    segments: list[CompoundType] = []
    current: list[SimpleType] = []
    in_brace = False
    braced = False
    for m in _TOKEN.finditer(text):
        token, pos = m.group(), m.start()
        if token == "<":
            if in_brace:
                raise TypeParseError("brace segments may not nest", pos)
            if current:
                raise TypeParseError("material outside brace segments", pos)
            in_brace = True
            braced = True
        elif token == ">":
            if not in_brace:
                raise TypeParseError("unmatched '>'", pos)
            if not current:
                raise TypeParseError("empty brace segment", pos)
            segments.append(CompoundType(tuple(current)))
            current = []
            in_brace = False
        else:
            if braced and not in_brace:
                raise TypeParseError("material outside brace segments", pos)
            current.append(_parse_simple(token, table, pos))
    if in_brace:
        raise TypeParseError("unclosed '<'", len(text))
    if braced:
        return BracedType(tuple(segments))
    return CompoundType(tuple(current))


def render_type(t: Type) -> str:
    return t.render()
