"""Type algebra: adjoints, ordering, contraction, parsing."""

import pytest
from hypothesis import given, strategies as st

from pregtrans.core import (
    AtomTable,
    BracedType,
    CompoundType,
    CyclicOrderError,
    SimpleType,
    TypeParseError,
    UnknownAtomError,
    atom_leq,
    contracts,
    left_adjoint,
    parse_type,
    render_type,
    right_adjoint,
    simple_leq,
)

TABLE = AtomTable({"n", "s", "s1", "sbar", "pi"}, [("s1", "s"), ("sbar", "s"), ("n", "pi")])


def T(text, table=TABLE):
    return parse_type(text, table)


# ---- strategies ----------------------------------------------------------

atoms = st.sampled_from(["n", "s", "s1", "sbar", "pi"])
simples = st.builds(SimpleType, atoms, st.integers(-3, 3), st.booleans())
compounds = st.builds(lambda ps: CompoundType(tuple(ps)), st.lists(simples, max_size=8))


# ---- atom table ----------------------------------------------------------

def test_atom_order_reflexive_transitive():
    assert TABLE.leq("s1", "s1")
    assert TABLE.leq("s1", "s")
    assert TABLE.leq("n", "pi")
    assert not TABLE.leq("s", "s1")
    assert not TABLE.leq("n", "s")


def test_cyclic_order_rejected():
    with pytest.raises(CyclicOrderError):
        AtomTable({"a", "b"}, [("a", "b"), ("b", "a")])


def test_unknown_atom_rejected():
    with pytest.raises(UnknownAtomError):
        AtomTable({"a"}, [("a", "b")])
    with pytest.raises(TypeParseError):
        parse_type("q", TABLE)


# ---- adjoints ------------------------------------------------------------

def test_left_adjoint_example():
    # (o2^r o1^r s)^l = s^l o1 o2  [exponents decrement, order reverses]
    src = parse_type("o2^r o1^r s", AtomTable({"o1", "o2", "s"}))
    out = left_adjoint(src)
    assert render_type(out) == "s^l o1 o2"


def test_right_adjoint_example():
    # (n^l s)^r = s^r n  [exponents increment, order reverses]
    assert render_type(right_adjoint(T("n^l s"))) == "s^r n"


def test_right_adjoint_of_verb_type():
    # (o2^r o1^r s)^r reverses and increments every exponent
    src = parse_type("o2^r o1^r s", AtomTable({"o1", "o2", "s"}))
    out = right_adjoint(src)
    assert [(p.atom, p.exponent) for p in out.parts] == [("s", 1), ("o1", 2), ("o2", 2)]


def test_adjoints_preserve_beta():
    t = T("b(n)^l b(n)")
    assert all(p.beta for p in left_adjoint(t).parts)
    assert all(p.beta for p in right_adjoint(t).parts)


@given(compounds)
def test_adjoint_involution(t):
    assert right_adjoint(left_adjoint(t)) == t
    assert left_adjoint(right_adjoint(t)) == t


@given(compounds, compounds)
def test_adjoint_anti_distribution(t, u):
    assert left_adjoint(t + u) == left_adjoint(u) + left_adjoint(t)
    assert right_adjoint(t + u) == right_adjoint(u) + right_adjoint(t)


def test_adjoint_unit():
    assert left_adjoint(CompoundType()) == CompoundType()
    assert right_adjoint(CompoundType()) == CompoundType()


# ---- ordering and contraction --------------------------------------------

def test_simple_leq_parity_flip():
    a, b = SimpleType("s1"), SimpleType("s")
    assert simple_leq(a, b, TABLE)
    assert not simple_leq(b, a, TABLE)
    # at odd exponent the atom order flips
    ar, br = SimpleType("s1", 1), SimpleType("s", 1)
    assert simple_leq(br, ar, TABLE)
    assert not simple_leq(ar, br, TABLE)


def test_simple_leq_requires_matching_exponent_and_beta():
    assert not simple_leq(SimpleType("n"), SimpleType("n", 1), TABLE)
    assert not simple_leq(SimpleType("n"), SimpleType("n", beta=True), TABLE)


def test_contracts_basic():
    assert contracts(SimpleType("n"), SimpleType("n", 1), TABLE)       # n n^r
    assert contracts(SimpleType("n", -1), SimpleType("n"), TABLE)      # n^l n
    assert not contracts(SimpleType("n", 1), SimpleType("n"), TABLE)   # n^r n
    assert not contracts(SimpleType("n"), SimpleType("s", 1), TABLE)


def test_contracts_with_order():
    # s1 s^r contracts because s1 <= s (even-exponent side)
    assert contracts(SimpleType("s1"), SimpleType("s", 1), TABLE)
    assert not contracts(SimpleType("s"), SimpleType("s1", 1), TABLE)
    # s^l s1 contracts because odd side flips the direction
    assert contracts(SimpleType("s", -1), SimpleType("s1"), TABLE)


def test_contracts_beta_must_match():
    assert contracts(SimpleType("n", -1, True), SimpleType("n", 0, True), TABLE)
    assert not contracts(SimpleType("n", -1, True), SimpleType("n"), TABLE)
    assert not contracts(SimpleType("n", -1), SimpleType("n", 0, True), TABLE)


@given(simples)
def test_contraction_laws(p):
    assert contracts(p, p.right, TABLE)
    assert contracts(p.left, p, TABLE)


# ---- parsing and rendering ------------------------------------------------

def test_parse_simple_forms():
    t = T("b(n)^l s^r^r pi")
    assert t.parts[0] == SimpleType("n", -1, True)
    assert t.parts[1] == SimpleType("s", 2)
    assert t.parts[2] == SimpleType("pi")


def test_parse_braced():
    b = T("< n n^r s > < s^l n >")
    assert isinstance(b, BracedType)
    assert len(b.segments) == 2
    assert render_type(b) == "< n n^r s > < s^l n >"
    assert render_type(b.flatten()) == "n n^r s s^l n"


def test_parse_errors():
    for bad in ["< n", "n >", "< n < s > >", "n^x", "b(n", "< >"]:
        with pytest.raises(TypeParseError):
            parse_type(bad, TABLE)


@given(compounds)
def test_render_parse_roundtrip(t):
    assert parse_type(render_type(t), TABLE) == t


def test_render_iterated_adjoints():
    assert SimpleType("n", -2).render() == "n^l^l"
    assert SimpleType("n", 2, True).render() == "b(n)^r^r"
