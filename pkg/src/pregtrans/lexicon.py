"""Per-language lexicons: word -> type assignments, atom tables, empty
words, and metarules that expand each word's type set.

Lexicon files are UTF-8 JSON with fields ``language``, ``atoms``,
``order`` (list of [lesser, greater] pairs), ``entries`` (word, optional
aliases, type strings), ``metarules`` and ``empty_words``.
"""

from __future__ import annotations

import difflib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .core import (
    AtomTable,
    CompoundType,
    PregroupError,
    SimpleType,
    parse_type,
    render_type,
)

EMPTY_TOKENS = {"∅", "@0"}  # the explicit empty word

METARULE_KINDS = {"argument-swap", "atom-expansion", "slot-flip"}

CLOSURE_DEPTH = 3


class LexiconError(PregroupError):
    pass


class UnknownWordError(LexiconError):
    def __init__(self, word: str, candidates=()):
        hint = f" (did you mean: {', '.join(candidates)}?)" if candidates else ""
        super().__init__(f"unknown word {word!r}{hint}")
        self.word = word


@dataclass(frozen=True)
class Metarule:
    """A schema that derives extra lexical types from existing ones.

    * ``argument-swap``: `X^r Y^r T...` also types as `Y^r X^r T...` when
      X, Y are case atoms and the remainder is sentence-headed.
    * ``atom-expansion``: a plain atom rewrites to a fixed type wherever it
      occurs at exponent 0 (genitive: o4 -> n n^l).
    * ``slot-flip``: `S X^l W...` <-> `X^r S W...` with S sentence-headed,
      applied in both directions.
    """

    kind: str
    params: tuple[tuple[str, object], ...]

    @classmethod
    def make(cls, kind: str, **params) -> "Metarule":
        if kind not in METARULE_KINDS:
            raise LexiconError(f"unknown metarule kind {kind!r}")
        frozen = tuple(
            (k, tuple(v) if isinstance(v, list) else v) for k, v in sorted(params.items())
        )
        p = dict(frozen)
        if kind == "argument-swap" and (len(p.get("cases", ())) < 2 or not p.get("head")):
            raise LexiconError("argument-swap needs at least two case atoms and a head atom")
        if kind == "atom-expansion" and (not p.get("atom") or not p.get("replacement")):
            raise LexiconError("atom-expansion needs an atom and a replacement type")
        if kind == "slot-flip" and not p.get("head"):
            raise LexiconError("slot-flip needs a head atom")
        return cls(kind, frozen)

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    @classmethod
    def from_json(cls, data: dict, table: AtomTable) -> "Metarule":
        data = dict(data)
        kind = data.pop("kind", None)
        rule = cls.make(kind, **data)
        rule._check(table)
        return rule

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        for k, v in self.params:
            out[k] = list(v) if isinstance(v, tuple) else v
        return out

    def _check(self, table: AtomTable):
        p = self.param_dict
        if self.kind == "argument-swap":
            for a in list(p.get("cases", ())) + [p.get("head")]:
                if a not in table:
                    raise LexiconError(f"metarule references unknown atom {a!r}")
        elif self.kind == "atom-expansion":
            if p.get("atom") not in table:
                raise LexiconError(f"metarule references unknown atom {p.get('atom')!r}")
            parse_type(p.get("replacement", ""), table)
        elif self.kind == "slot-flip":
            if p.get("head") not in table:
                raise LexiconError(f"metarule references unknown atom {p.get('head')!r}")

    def apply(self, t: CompoundType, table: AtomTable) -> list[CompoundType]:
        """All types derivable from ``t`` by one application."""
        p = self.param_dict
        out: list[CompoundType] = []
        parts = t.parts
        if self.kind == "argument-swap":
            cases = set(p["cases"])
            head = p["head"]
            if (
                len(parts) >= 3
                and parts[0].exponent == 1
                and parts[1].exponent == 1
                and not parts[0].beta
                and not parts[1].beta
                and parts[0].atom in cases
                and parts[1].atom in cases
                and parts[0].atom != parts[1].atom
                and any(
                    q.exponent == 0 and not q.beta and table.leq(q.atom, head)
                    for q in parts[2:]
                )
            ):
                out.append(CompoundType((parts[1], parts[0]) + parts[2:]))
        elif self.kind == "atom-expansion":
            replacement = parse_type(p["replacement"], table)
            for i, q in enumerate(parts):
                if q.atom == p["atom"] and q.exponent == 0 and not q.beta:
                    out.append(CompoundType(parts[:i] + replacement.parts + parts[i + 1 :]))
        elif self.kind == "slot-flip":
            head = p["head"]
            if len(parts) >= 2:
                s, x = parts[0], parts[1]
                if s.exponent == 0 and not s.beta and table.leq(s.atom, head) and x.exponent == -1:
                    out.append(
                        CompoundType((SimpleType(x.atom, 1, x.beta), s) + parts[2:])
                    )
                if s.exponent == 1 and x.exponent == 0 and not x.beta and table.leq(x.atom, head):
                    out.append(
                        CompoundType((x, SimpleType(s.atom, -1, s.beta)) + parts[2:])
                    )
        return out

    def apply_once(self, t: CompoundType, table: AtomTable) -> CompoundType:
        """Deterministic single application: the first derived type if the
        rule matches, otherwise the input unchanged."""
        derived = self.apply(t, table)
        return derived[0] if derived else t


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    types: tuple[CompoundType, ...]
    aliases: tuple[str, ...] = ()


class Lexicon:
    """An immutable word -> types store for one language."""

    def __init__(
        self,
        language: str,
        table: AtomTable,
        entries: dict[str, LexiconEntry],
        metarules: list[Metarule] = (),
        empty_words: tuple[CompoundType, ...] = (),
    ):
        self.language = language
        self.table = table
        self.entries = dict(entries)
        self.metarules = list(metarules)
        self.empty_words = tuple(empty_words)
        self._aliases = {}
        for entry in self.entries.values():
            for alias in entry.aliases:
                self._aliases[alias] = entry.word

    def resolve(self, token: str) -> str | None:
        if token in self.entries:
            return token
        return self._aliases.get(token)

    def words(self) -> list[str]:
        return sorted(self.entries)

    def types_of(self, word: str) -> frozenset[CompoundType]:
        """The word's types closed under the metarules (bounded depth)."""
        if word in EMPTY_TOKENS:
            return frozenset(self.empty_words)
        key = self.resolve(word)
        if key is None:
            near = difflib.get_close_matches(word, list(self.entries) + list(self._aliases))
            raise UnknownWordError(word, near)
        closed = set(self.entries[key].types)
        frontier = set(closed)
        for _ in range(CLOSURE_DEPTH):
            new = set()
            for t in frontier:
                for rule in self.metarules:
                    for derived in rule.apply(t, self.table):
                        if derived not in closed:
                            new.add(derived)
            if not new:
                break
            closed |= new
            frontier = new
        return frozenset(closed)

    def type_sentence(self, tokens: list[str]) -> list[tuple[str, frozenset[CompoundType]]]:
        return [(tok, self.types_of(tok)) for tok in tokens]

    def to_dict(self) -> dict:
        return {
            "language": self.language,
            "atoms": sorted(self.table.atoms),
            "order": sorted(list(p) for p in self.table.order_pairs),
            "entries": [
                {
                    "word": e.word,
                    **({"aliases": list(e.aliases)} if e.aliases else {}),
                    "types": sorted(render_type(t) for t in e.types),
                }
                for e in (self.entries[w] for w in sorted(self.entries))
            ],
            "metarules": [r.to_json() for r in self.metarules],
            "empty_words": sorted(render_type(t) for t in self.empty_words),
        }

    @classmethod
    def from_dict(cls, data: dict, source: str = "<data>") -> "Lexicon":
        errors: list[str] = []
        try:
            table = AtomTable(data.get("atoms", []), [tuple(p) for p in data.get("order", [])])
        except PregroupError as exc:
            # keep collecting entry errors against an order-free table so one
            # load reports every problem in the file
            errors.append(str(exc))
            try:
                table = AtomTable(data.get("atoms", []))
            except PregroupError:
                raise LexiconError(f"{source}: " + "; ".join(errors)) from exc
        entries: dict[str, LexiconEntry] = {}
        for raw in data.get("entries", []):
            word = raw.get("word")
            if not word:
                errors.append("entry with missing word")
                continue
            types = []
            for text in raw.get("types", []):
                try:
                    t = parse_type(text, table)
                except PregroupError as exc:
                    errors.append(f"word {word!r}: {exc}")
                    continue
                if not isinstance(t, CompoundType):
                    errors.append(f"word {word!r}: braced types not allowed in entries")
                    continue
                types.append(t)
            if not types:
                errors.append(f"word {word!r} has no valid types")
                continue
            entry = LexiconEntry(word, tuple(sorted(set(types))), tuple(raw.get("aliases", [])))
            if word in entries and entries[word] != entry:
                errors.append(f"duplicate word {word!r} with conflicting entry")
                continue
            entries[word] = entry
        metarules = []
        for raw in data.get("metarules", []):
            try:
                metarules.append(Metarule.from_json(raw, table))
            except PregroupError as exc:
                errors.append(str(exc))
        empty_words = []
        for text in data.get("empty_words", []):
            try:
                empty_words.append(parse_type(text, table))
            except PregroupError as exc:
                errors.append(f"empty word: {exc}")
        if errors:
            raise LexiconError(f"{source}: " + "; ".join(errors))
        return cls(data.get("language", "und"), table, entries, metarules, tuple(empty_words))


def load_lexicon(path: str | Path) -> Lexicon:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise LexiconError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return Lexicon.from_dict(data, source=str(path))


def save_lexicon(lex: Lexicon, path: str | Path):
    Path(path).write_text(
        json.dumps(lex.to_dict(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )


def types_of(lex: Lexicon, word: str) -> frozenset[CompoundType]:
    return lex.types_of(word)


def type_sentence(lex: Lexicon, tokens: list[str]):
    return lex.type_sentence(tokens)
