"""Planar contraction search: decide whether a type string reduces to a
target and enumerate all distinct reduction witnesses.

A witness is a non-crossing, well-nested set of contraction links plus the
ordered residue of unlinked positions.  Search is a span dynamic program:
for every span we enumerate the link sets reducing it to the unit, then
assemble residues against the target.  Induced order steps (s1 -> s,
n -> pi) are folded into the contraction and residue checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    AtomTable,
    BracedType,
    CompoundType,
    PregroupError,
    Type,
    contracts,
    simple_leq,
)

DEFAULT_LIMIT = 1024

Link = tuple[int, int]


class WitnessError(PregroupError):
    pass


class OracleSizeError(PregroupError):
    pass


@dataclass(frozen=True)
class ReductionWitness:
    """A planar set of contraction links plus the residue positions."""

    links: frozenset[Link]
    residue: tuple[int, ...]

    @property
    def sort_key(self):
        return (sorted(self.links), self.residue)

    def covers(self, n: int) -> bool:
        touched = sorted([i for link in self.links for i in link] + list(self.residue))
        return touched == list(range(n))

    def is_planar(self) -> bool:
        links = sorted(self.links)
        for a, (i, j) in enumerate(links):
            for i2, j2 in links[a + 1 :]:
                if i < i2 < j < j2:
                    return False
        return True

    def is_well_nested(self) -> bool:
        # every interior position of a link must itself be linked inside it
        for i, j in self.links:
            for k in range(i + 1, j):
                partners = [l for l in self.links if k in l]
                if not partners:
                    return False
                (a, b), = partners
                if not (i < a and b < j) and (a, b) != (i, j):
                    return False
        return True


def _flatten(t: Type) -> CompoundType:
    return t.flatten() if isinstance(t, BracedType) else t


def enumerate_reductions(
    input: Type,
    target: CompoundType,
    table: AtomTable,
    limit: int = DEFAULT_LIMIT,
) -> list[ReductionWitness]:
    """All distinct witnesses reducing ``input`` to ``target`` (up to
    ``limit``), ordered lexicographically on sorted link lists."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    parts = _flatten(input).parts
    goal = target.parts
    n, m = len(parts), len(goal)

    @lru_cache(maxsize=None)
    def unit(i: int, j: int) -> tuple[frozenset[Link], ...]:
        # link sets reducing parts[i:j] to the unit
        if i == j:
            return (frozenset(),)
        if (j - i) % 2:
            return ()
        out = []
        for k in range(i + 1, j, 2):
            if contracts(parts[i], parts[k], table):
                for inner in unit(i + 1, k):
                    for rest in unit(k + 1, j):
                        out.append(inner | rest | {(i, k)})
        return tuple(out)

    results: list[ReductionWitness] = []

    def assemble(pos: int, t_idx: int, links: frozenset[Link], residue: list[int]):
        if len(results) >= limit:
            return
        if pos == n:
            if t_idx == m:
                results.append(ReductionWitness(links, tuple(residue)))
            return
        if t_idx < m and simple_leq(parts[pos], goal[t_idx], table):
            residue.append(pos)
            assemble(pos + 1, t_idx + 1, links, residue)
            residue.pop()
        for k in range(pos + 1, n, 2):
            if contracts(parts[pos], parts[k], table):
                for inner in unit(pos + 1, k):
                    assemble(k + 1, t_idx, links | inner | {(pos, k)}, residue)
                    if len(results) >= limit:
                        return

    assemble(0, 0, frozenset(), [])
    return sorted(results, key=lambda w: w.sort_key)


def reduce(input: Type, target: CompoundType, table: AtomTable) -> ReductionWitness | None:
    """First witness reducing ``input`` to ``target``, or None."""
    found = enumerate_reductions(input, target, table, limit=1)
    return found[0] if found else None


def oracle_reduce(input: Type, target: CompoundType, table: AtomTable) -> list[ReductionWitness]:
    """Brute-force reference: apply single adjacent contractions in every
    order and collect the distinct witnesses whose remainder matches the
    target pointwise.  Test-only; guarded against blow-up."""
    parts = _flatten(input).parts
    if len(parts) > 12:
        raise OracleSizeError(f"oracle limited to length <= 12, got {len(parts)}")
    goal = target.parts
    results: set[ReductionWitness] = set()
    seen: set[tuple] = set()

    def walk(state: tuple[int, ...], links: frozenset[Link]):
        key = (state, links)
        if key in seen:
            return
        seen.add(key)
        if len(state) == len(goal) and all(
            simple_leq(parts[i], g, table) for i, g in zip(state, goal)
        ):
            results.add(ReductionWitness(links, state))
        for p in range(len(state) - 1):
            i, j = state[p], state[p + 1]
            if contracts(parts[i], parts[j], table):
                walk(state[:p] + state[p + 2 :], links | {(i, j)})

    walk(tuple(range(len(parts))), frozenset())
    return sorted(results, key=lambda w: w.sort_key)


def _validate(parts, w: ReductionWitness):
    n = len(parts)
    if not w.covers(n):
        raise WitnessError("witness does not partition the input positions")
    if not w.is_planar() or not w.is_well_nested():
        raise WitnessError("witness is not planar/well-nested")


def render_diagram(input: Type, w: ReductionWitness, format: str = "text") -> str:
    """Render a reduction witness; ``text`` draws ASCII under-brackets,
    ``dot`` emits a deterministic graph description."""
    parts = _flatten(input).parts
    _validate(parts, w)
    if format == "dot":
        return _render_dot(parts, w)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    return _render_text(parts, w)


def _render_text(parts, w: ReductionWitness) -> str:
    if not parts:
        return ""
    tokens = [p.render() for p in parts]
    cols = []
    offset = 0
    for tok in tokens:
        cols.append(offset + (len(tok) - 1) // 2)
        offset += len(tok) + 1
    width = offset - 1

    def row(link):
        i, j = link
        inner = [l for l in w.links if i < l[0] and l[1] < j]
        if not inner:
            return 0
        return 1 + max(row(l) for l in inner)

    rows: dict[int, list[Link]] = {}
    for link in sorted(w.links):
        rows.setdefault(row(link), []).append(link)
    lines = [" ".join(tokens)]
    for r in range(len(rows)):
        line = [" "] * width
        for i, j in rows[r]:
            line[cols[i]] = "|"
            line[cols[j]] = "|"
            for c in range(cols[i] + 1, cols[j]):
                line[c] = "_"
        for i in w.residue:
            line[cols[i]] = "|"
        lines.append("".join(line).rstrip())
    if w.residue:
        line = [" "] * width
        for i in w.residue:
            line[cols[i]] = "|"
        lines.append("".join(line).rstrip())
    return "\n".join(lines)


def _render_dot(parts, w: ReductionWitness) -> str:
    lines = ["graph reduction {"]
    for i, p in enumerate(parts):
        lines.append(f'  t{i} [label="{p.render()}"];')
    for i, j in sorted(w.links):
        lines.append(f"  t{i} -- t{j};")
    for i in w.residue:
        lines.append(f'  t{i} -- out [style=dashed];')
    lines.append("}")
    return "\n".join(lines)
