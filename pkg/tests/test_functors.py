"""Translation functors: images, laws, brace-wise application, end-to-end."""

import pytest

from pregtrans import data as bundled
from pregtrans.core import AtomTable, CompoundType, parse_type, render_type
from pregtrans.functors import (
    FunctorError,
    FunctorSpec,
    NotTranslatableError,
    WordMap,
    apply_antihomomorphism,
    apply_bracewise,
    apply_functor,
    apply_homomorphism,
    check_functor_laws,
    load_functor,
    load_wordmap,
    translate_sentence,
)
from pregtrans.lexicon import load_lexicon


def bundle(functor_name):
    reg = bundled.FUNCTOR_REGISTRY[functor_name]
    src = load_lexicon(bundled.lexicon_path(reg["src"]))
    tgt = load_lexicon(bundled.lexicon_path(reg["tgt"]))
    f = load_functor(bundled.functor_path(functor_name), src.table, tgt.table)
    wm = load_wordmap(bundled.wordmap_path(functor_name))
    return src, tgt, f, wm


# ---- homomorphism / anti-homomorphism images --------------------------------

def test_homomorphism_raises_image_to_exponent():
    en = AtomTable({"n", "s"})
    spec = FunctorSpec("x", "y", "homomorphism", {a: parse_type(a, en) for a in "ns"}, en)
    src = AtomTable({"n", "s"})
    assert render_type(apply_homomorphism(spec, parse_type("n^r s n^l", src))) == "n^r s n^l"
    # compound image: F(a) = n s, so F(a^l) = (n s)^l = s^l n^l
    spec2 = FunctorSpec("x", "y", "homomorphism", {"a": parse_type("n s", en)}, en)
    img = apply_homomorphism(spec2, parse_type("a^l", AtomTable({"a"})))
    assert render_type(img) == "s^l n^l"


def test_antihomomorphism_reverses_and_swaps_adjoints():
    en = AtomTable({"n", "s"})
    spec = FunctorSpec("x", "y", "antihomomorphism", {a: parse_type(a, en) for a in "ns"}, en)
    img = apply_antihomomorphism(spec, parse_type("n n^r s", AtomTable({"n", "s"})))
    assert render_type(img) == "s n^l n"


def test_five_word_sentence_image():
    src, tgt, f, wm = bundle("jp-en-anti")
    flat = parse_type("n n^r o5 n n^r o1 o1^r o5^r s", src.table)
    img = apply_antihomomorphism(f, flat)
    assert render_type(img) == "s o5^l o1^l o1 n^l n o5 n^l n"


def test_bracewise_psi_image():
    src, tgt, f, wm = bundle("psi")
    braced = parse_type("< n n^r o1 > < n n^r o2 o2^r o1^r s >", src.table)
    img = apply_bracewise(f, braced)
    assert render_type(img) == "< o1 n^l n > < o1^r s o2^l o2 n^l n >"


def test_bracewise_psi3_image():
    src, tgt, f, wm = bundle("psi3")
    braced = parse_type("< n n^r o5 o5^r s > < s^r s s^l > < n n^r o2 o2^r s >", src.table)
    img = apply_bracewise(f, braced)
    assert render_type(img) == "< s o5^l o5 n^l n > < s^r s s^l > < s o2^l o2 n^l n >"


def test_bracewise_xi_image():
    src, tgt, f, wm = bundle("xi")
    braced = parse_type("< nu nu^r o > < w nu^l nu > < w^r o^r sigma >", src.table)
    img = apply_bracewise(f, braced)
    assert render_type(img) == "< n n^r o2 > < n n^r o5 > < o5^r o2^r s >"


def test_bracewise_all_false_mask_equals_homomorphism():
    src, tgt, f, wm = bundle("psi")
    plain = FunctorSpec(
        f.source_language, f.target_language, "bracewise", f.atom_map, f.target_table,
        reversal_mask=(False, False),
    )
    braced = parse_type("< n n^r o1 > < n n^r o2 o2^r o1^r s >", src.table)
    img = apply_bracewise(plain, braced)
    hom = FunctorSpec(
        f.source_language, f.target_language, "homomorphism", f.atom_map, f.target_table
    )
    assert img.flatten() == apply_homomorphism(hom, braced.flatten())


def test_bracewise_mask_length_mismatch():
    src, tgt, f, wm = bundle("psi")
    three = parse_type("< n > < n > < n >", src.table)
    with pytest.raises(FunctorError):
        apply_bracewise(f, three)


def test_apply_functor_dispatch():
    src, tgt, f, wm = bundle("jp-en-anti")
    flat = parse_type("n n^r o1", src.table)
    assert apply_functor(f, flat) == apply_antihomomorphism(f, flat)


# ---- functor laws -------------------------------------------------------------

def test_homomorphism_laws_hold_for_identity_map():
    en = AtomTable({"n", "s"})
    spec = FunctorSpec("x", "y", "homomorphism", {a: parse_type(a, en) for a in "ns"}, en)
    samples = [parse_type(t, en) for t in ["n", "n^l", "n n^r s", "s^l^l"]]
    assert check_functor_laws(spec, samples).ok


def test_antihomomorphism_laws_hold():
    en = AtomTable({"n", "s"})
    spec = FunctorSpec("x", "y", "antihomomorphism", {a: parse_type(a, en) for a in "ns"}, en)
    samples = [parse_type(t, en) for t in ["n", "n^l", "n n^r s", "s^l^l"]]
    assert check_functor_laws(spec, samples).ok


def test_word_order_obstruction_flagged():
    # post-posed adjectives force F(n^l) = F(n)^r, violating F(x^l) = F(x)^l
    reg = bundled.FUNCTOR_REGISTRY["jp-ro-hom"]
    src = load_lexicon(bundled.lexicon_path(reg["src"]))
    tgt = load_lexicon(bundled.lexicon_path(reg["tgt"]))
    f = load_functor(bundled.functor_path("jp-ro-hom"), src.table, tgt.table)
    samples = [parse_type("n^l", src.table), parse_type("n n^l", src.table)]
    report = check_functor_laws(f, samples)
    assert not report.ok
    assert any(v.law == "F(x^l) = F(x)^l" for v in report.violations)


# ---- end-to-end translation ----------------------------------------------------

def test_translate_five_word_sentence():
    src, tgt, f, wm = bundle("jp-en-anti")
    res = translate_sentence(src, tgt, f, wm, "mori ni neko ga iru".split())
    assert res.text == "there is a cat in the forest"
    assert render_type(res.translated) == "< s o5^l o1^l o1 n^l n o5 n^l n >"
    assert res.target_witness is not None
    assert sorted(res.target_witness.links) == [(1, 6), (2, 3), (4, 5), (7, 8)]
    assert res.target_witness.residue == (0,)


def test_translate_two_brace_sentence():
    src, tgt, f, wm = bundle("psi")
    res = translate_sentence(
        src, tgt, f, wm, "issya ga tegami wo kaku".split(), bracing=(2,)
    )
    assert res.text == "(A/The) doctor write(s) (a/the) letter"
    assert render_type(res.translated) == "< o1 n^l n > < o1^r s o2^l o2 n^l n >"
    assert res.target_witness is not None


def test_translate_three_brace_sentence():
    src, tgt, f, wm = bundle("psi3")
    res = translate_sentence(
        src, tgt, f, wm, "ie ni tuita ga tegami wo kaita".split(), bracing=(3, 4)
    )
    assert res.text == "(I) arrived home and (I) wrote (a) letter"
    assert (
        render_type(res.translated)
        == "< s o5^l o5 n^l n > < s^r s s^l > < s o2^l o2 n^l n >"
    )
    assert res.target_witness is not None


def test_translate_farsi_to_japanese():
    src, tgt, f, wm = bundle("xi")
    res = translate_sentence(
        src, tgt, f, wm, "ketab ra dar bazar xarid".split(), bracing=(2, 4),
        source_target="sigma",
    )
    assert res.text == "hon wo itiba de kaimasita"
    assert render_type(res.translated) == "< n n^r o2 > < n n^r o5 > < o5^r o2^r s >"
    assert res.target_witness is not None


def test_untranslatable_sentence_raises():
    src, tgt, f, wm = bundle("jp-en-anti")
    with pytest.raises(NotTranslatableError):
        translate_sentence(src, tgt, f, wm, ["mori", "neko"])


def test_wordmap_missing_word_raises():
    wm = WordMap((("a", "x"),))
    assert wm.get("a") == "x"
    with pytest.raises(FunctorError):
        wm.get("b")


def test_functor_atom_map_must_be_total():
    src, tgt, f, wm = bundle("jp-en-anti")
    partial = FunctorSpec(
        f.source_language, f.target_language, "homomorphism",
        {"n": f.atom_map["n"]}, f.target_table,
    )
    with pytest.raises(FunctorError):
        apply_homomorphism(partial, parse_type("s", src.table))
