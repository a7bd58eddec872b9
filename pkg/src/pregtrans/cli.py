"""Command-line front end.

Exit codes: 0 success, 1 configuration or input-file error, 2 linguistic
failure (not reducible / not translatable).  Tokens are separated by
whitespace, `|` separates brace segments, and `@0` is the empty word.
"""

from __future__ import annotations

import itertools
import json
import random
import sys
from pathlib import Path

import click
import numpy as np

from . import data as bundled
from .core import AtomTable, CompoundType, PregroupError, parse_type, render_type
from .functors import (
    FunctorSpec,
    NotTranslatableError,
    check_functor_laws,
    load_functor,
    load_wordmap,
    translate_sentence,
)
from .lexicon import Lexicon, UnknownWordError, load_lexicon
from .reduction import enumerate_reductions, oracle_reduce, reduce, render_diagram
from .semantics import (
    AlphaSpec,
    check_naturality,
    lcg_array,
    load_tensor_fixture,
)

EXIT_CONFIG = 1
EXIT_LINGUISTIC = 2


class CliError(click.ClickException):
    exit_code = EXIT_CONFIG


def _resolve_lexicon(name: str) -> Lexicon:
    path = Path(name)
    if not path.exists():
        try:
            path = bundled.lexicon_path(name)
        except FileNotFoundError as exc:
            raise CliError(str(exc)) from exc
    try:
        return load_lexicon(path)
    except PregroupError as exc:
        raise CliError(str(exc)) from exc


def _resolve_functor(name: str, src: Lexicon | None, tgt: Lexicon | None):
    path = Path(name)
    defaults = bundled.FUNCTOR_REGISTRY.get(name, {})
    if not path.exists():
        try:
            path = bundled.functor_path(name)
        except FileNotFoundError as exc:
            raise CliError(str(exc)) from exc
    if src is None:
        if "src" not in defaults:
            raise CliError(f"functor {name!r} needs an explicit --src lexicon")
        src = _resolve_lexicon(defaults["src"])
    if tgt is None:
        if "tgt" not in defaults:
            raise CliError(f"functor {name!r} needs an explicit --tgt lexicon")
        tgt = _resolve_lexicon(defaults["tgt"])
    try:
        spec = load_functor(path, src.table, tgt.table)
    except PregroupError as exc:
        raise CliError(str(exc)) from exc
    return spec, src, tgt


def _resolve_wordmap(name: str | None, functor_name: str):
    if name is None:
        try:
            return load_wordmap(bundled.wordmap_path(functor_name))
        except FileNotFoundError as exc:
            raise CliError(f"functor {functor_name!r} needs an explicit --wordmap") from exc
    path = Path(name)
    if not path.exists():
        try:
            path = bundled.wordmap_path(name)
        except FileNotFoundError as exc:
            raise CliError(str(exc)) from exc
    return load_wordmap(path)


def _sentences(sentence: str | None):
    if sentence is not None:
        return [sentence]
    return [line.strip() for line in sys.stdin if line.strip()]


@click.group()
def main():
    """Pregroup parsing, translation, and semantic checks."""


@main.command(name="parse")
@click.argument("sentence", required=False)
@click.option("--lex", "lexicon_name", required=True, help="Lexicon name or path.")
@click.option("--target", default="s", show_default=True, help="Target type string.")
@click.option("--all", "enumerate_all", is_flag=True, help="Enumerate all witnesses.")
@click.option("--limit", default=1024, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "dot", "json"]), default="text")
def cmd_parse(sentence, lexicon_name, target, enumerate_all, limit, fmt):
    """Decide grammaticality and render reduction diagrams.

    Without SENTENCE, reads one sentence per line from standard input.
    """
    lex = _resolve_lexicon(lexicon_name)
    try:
        goal = parse_type(target, lex.table)
    except PregroupError as exc:
        raise CliError(str(exc)) from exc
    exit_code = 0
    for line in _sentences(sentence):
        tokens = line.split()
        found = []
        try:
            candidates = [sorted(lex.types_of(tok), key=render_type) for tok in tokens]
            for selection in itertools.product(*candidates):
                flat = CompoundType()
                for t in selection:
                    flat = flat + t
                witnesses = enumerate_reductions(
                    flat, goal, lex.table, limit=limit if enumerate_all else 1
                )
                for w in witnesses:
                    found.append((flat, w))
                    if not enumerate_all:
                        break
                if found and not enumerate_all:
                    break
                if len(found) >= limit:
                    break
        except UnknownWordError as exc:
            raise CliError(str(exc)) from exc
        if fmt == "json":
            click.echo(
                json.dumps(
                    {
                        "sentence": line,
                        "reducible": bool(found),
                        "witnesses": [
                            {
                                "type": render_type(flat),
                                "links": sorted(list(l) for l in w.links),
                                "residue": list(w.residue),
                            }
                            for flat, w in found
                        ],
                    },
                    ensure_ascii=False,
                )
            )
        elif not found:
            click.echo(f"not reducible: {line!r} does not reduce to {target!r}")
        else:
            for flat, w in found:
                click.echo(render_diagram(flat, w, format="text" if fmt == "text" else "dot"))
                click.echo()
        if not found:
            exit_code = EXIT_LINGUISTIC
    sys.exit(exit_code)


@main.command(name="translate")
@click.argument("sentence", required=False)
@click.option("--functor", "functor_name", required=True, help="Functor name or path.")
@click.option("--wordmap", "wordmap_name", default=None, help="Word map name or path.")
@click.option("--src", "src_name", default=None, help="Source lexicon name or path.")
@click.option("--tgt", "tgt_name", default=None, help="Target lexicon name or path.")
@click.option("--target", default="s", show_default=True, help="Source target type.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_translate(sentence, functor_name, wordmap_name, src_name, tgt_name, target, fmt):
    """Translate a sentence; `|` marks brace segment boundaries.

    Without SENTENCE, reads one sentence per line from standard input.
    """
    src = _resolve_lexicon(src_name) if src_name else None
    tgt = _resolve_lexicon(tgt_name) if tgt_name else None
    functor, src, tgt = _resolve_functor(functor_name, src, tgt)
    wm = _resolve_wordmap(wordmap_name, functor_name)
    exit_code = 0
    for line in _sentences(sentence):
        tokens, bracing = [], []
        for piece in line.split():
            if piece == "|":
                bracing.append(len(tokens))
            else:
                tokens.append(piece)
        try:
            result = translate_sentence(
                src, tgt, functor, wm, tokens, tuple(bracing) or None, source_target=target
            )
        except (NotTranslatableError, UnknownWordError) as exc:
            click.echo(f"not translatable: {exc}")
            exit_code = EXIT_LINGUISTIC
            continue
        except PregroupError as exc:
            raise CliError(str(exc)) from exc
        if fmt == "json":
            click.echo(
                json.dumps(
                    {
                        "sentence": line,
                        "source_type": render_type(result.source_type),
                        "translated_type": render_type(result.translated),
                        "translation": result.text,
                        "target_reducible": result.target_witness is not None,
                        "diagnostic": result.diagnostic,
                    },
                    ensure_ascii=False,
                )
            )
        else:
            click.echo(f"source type:     {render_type(result.source_type)}")
            click.echo(render_diagram(result.source_type, result.source_witness))
            click.echo(f"translated type: {render_type(result.translated)}")
            if result.target_witness is not None:
                click.echo(render_diagram(result.translated, result.target_witness))
            else:
                click.echo(result.diagnostic)
            click.echo(f"translation:     {result.text}")
        if result.target_witness is None:
            exit_code = EXIT_LINGUISTIC
    sys.exit(exit_code)


def _law_suite() -> list[str]:
    from .core import left_adjoint, right_adjoint, SimpleType, contracts, simple_leq

    table = AtomTable({"a", "b", "c", "d"}, [("a", "b")])
    rng = random.Random(0)
    failures = []

    def random_type(max_len=6):
        parts = tuple(
            SimpleType(rng.choice("abcd"), rng.randint(-2, 2), rng.random() < 0.2)
            for _ in range(rng.randint(0, max_len))
        )
        return CompoundType(parts)

    for _ in range(1000):
        t, u = random_type(), random_type()
        if right_adjoint(left_adjoint(t)) != t or left_adjoint(right_adjoint(t)) != t:
            failures.append(f"involution fails on {render_type(t)!r}")
        if left_adjoint(t + u) != left_adjoint(u) + left_adjoint(t):
            failures.append(f"anti-distribution fails on {render_type(t + u)!r}")
        for p in t.parts:
            if not contracts(p, p.right, table) or not contracts(p.left, p, table):
                failures.append(f"contraction law fails on {p.render()!r}")
    if left_adjoint(CompoundType()) != CompoundType():
        failures.append("unit law fails")

    en = AtomTable({"a", "b", "c", "d"})
    samples = [random_type(3) for _ in range(20)]
    for mode in ("homomorphism", "antihomomorphism"):
        spec = FunctorSpec(
            "x", "y", mode, {a: parse_type(a, en) for a in "abcd"}, en
        )
        report = check_functor_laws(spec, samples)
        if not report.ok:
            failures.append(f"{mode} law violations: {len(report.violations)}")
    return failures


def _naturality_suite(tol: float) -> list[str]:
    failures = []
    en_table = AtomTable({"n", "s", "o1", "o2", "o5"})
    identity_map = {a: parse_type(a, en_table) for a in en_table.atoms}

    # adjective-noun square, homomorphism
    spaces, tensors = load_tensor_fixture(bundled.tensor_path("adj_noun"))
    table = AtomTable(dict(spaces.dims).keys())
    flat = tensors[0].type + tensors[1].type
    w = reduce(flat, parse_type("n", table), table)
    hom = FunctorSpec("ja", "en", "homomorphism", identity_map, en_table)
    dim_n = spaces.dim("n")
    alpha = AlphaSpec.make({"n": np.eye(dim_n) + 0.2 * lcg_array(1, (dim_n, dim_n))})
    report = check_naturality(alpha, w, tensors, hom, w, tol)
    if not report.ok:
        failures.append(f"adjective-noun square residual {report.max_residual:.3e}")

    # five-word square, anti-homomorphism
    spaces, tensors = load_tensor_fixture(bundled.tensor_path("mori"))
    table = AtomTable(dict(spaces.dims).keys())
    flat = CompoundType()
    for wt in tensors:
        flat = flat + wt.type
    src_w = reduce(flat, parse_type("s", table), table)
    anti = FunctorSpec("ja", "en", "antihomomorphism", identity_map, en_table)
    from .functors import apply_antihomomorphism

    image = apply_antihomomorphism(anti, flat)
    tgt_w = reduce(image, parse_type("s", en_table), en_table)
    d = spaces.dim("n")
    mat_n = np.eye(d) + 0.2 * lcg_array(2, (d, d))
    mat_s = np.eye(spaces.dim("s")) + 0.2 * lcg_array(3, (spaces.dim("s"),) * 2)
    alpha = AlphaSpec.make({"n": mat_n, "o1": mat_n, "o5": mat_n, "s": mat_s})
    report = check_naturality(alpha, src_w, tensors, anti, tgt_w, tol)
    if not report.ok:
        failures.append(f"five-word square residual {report.max_residual:.3e}")
    return failures


def _oracle_suite(max_len: int, count: int) -> list[str]:
    from .core import SimpleType

    table = AtomTable({"a", "b", "c", "d"}, [("a", "b")])
    rng = random.Random(42)
    failures = []
    goal = CompoundType((SimpleType("b"),))
    for _ in range(count):
        parts = tuple(
            SimpleType(rng.choice("abcd"), rng.randint(-1, 1))
            for _ in range(rng.randint(0, max_len))
        )
        t = CompoundType(parts)
        fast = set(enumerate_reductions(t, goal, table))
        slow = set(oracle_reduce(t, goal, table))
        if fast != slow:
            failures.append(f"mismatch on {render_type(t)!r}")
    return failures


@main.command(name="check")
@click.argument("suite", type=click.Choice(["laws", "naturality", "oracle"]))
@click.option("--tol", default=1e-9, show_default=True)
@click.option("--max-len", default=8, show_default=True)
@click.option("--count", default=300, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_check(suite, tol, max_len, count, fmt):
    """Run a property suite: pregroup/functor laws, naturality squares,
    or the DP-versus-brute-force reduction oracle."""
    if suite == "laws":
        failures = _law_suite()
    elif suite == "naturality":
        failures = _naturality_suite(tol)
    else:
        failures = _oracle_suite(max_len, count)
    if fmt == "json":
        click.echo(json.dumps({"suite": suite, "ok": not failures, "failures": failures}))
    else:
        for f in failures:
            click.echo(f"FAIL {f}")
        click.echo(f"{suite}: {'ok' if not failures else f'{len(failures)} failure(s)'}")
    sys.exit(0 if not failures else EXIT_CONFIG)


@main.command(name="validate")
@click.argument("lexicon_name")
def cmd_validate(lexicon_name):
    """Load and validate a lexicon file (or bundled lexicon name)."""
    lex = _resolve_lexicon(lexicon_name)
    click.echo(
        f"ok: language {lex.language!r}, {len(lex.entries)} entries, "
        f"{len(lex.table.atoms)} atoms, {len(lex.metarules)} metarules"
    )


if __name__ == "__main__":
    main()
