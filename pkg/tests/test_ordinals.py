import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scatterkit.errors import ParseError
from scatterkit.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Kind,
    Ordinal,
    add,
    compare,
    divide_by_power,
    format_ordinal,
    kind,
    mul_power,
    omega_power,
    parse,
)

w = OMEGA


def o(text):
    return parse(text)


# --- strategies -------------------------------------------------------------

_exponents = st.one_of(
    st.integers(0, 3).map(Ordinal.from_int),
    st.sampled_from(
        [
            o("w"),
            o("w + 1"),
            o("w + 2"),
            o("w^2"),
            o("w^2 + w*3 + 1"),
            o("w^(w)"),
            o("w^(w)*2 + w^(w + 1)"),  # = w^(w+1), exercises absorption in exponents
            o("w^(w^2 + w)"),
        ]
    ),
)


@st.composite
def ordinals(draw):
    count = draw(st.integers(0, 3))
    exps = draw(st.lists(_exponents, min_size=count, max_size=count, unique=True))
    exps.sort(reverse=True)
    coeffs = draw(st.lists(st.integers(1, 4), min_size=count, max_size=count))
    return Ordinal(tuple(zip(exps, coeffs)))


@st.composite
def small_triples(draw):
    """Ordinals below w^3, as (a, b, c) with value w^2*a + w*b + c."""
    return draw(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)))


def triple_ordinal(t):
    a, b, c = t
    value = ZERO
    if a:
        value = add(value, omega_power(2, a))
    if b:
        value = add(value, omega_power(1, b))
    return add(value, Ordinal.from_int(c))


# --- parsing and formatting -------------------------------------------------

def test_parse_zero():
    assert o("0") == ZERO
    assert kind(o("0")) is Kind.ZERO


def test_parse_left_absorption():
    assert o("w + w^2") == o("w^2")


def test_parse_full_expression():
    value = o("w^(w^2)*3 + w*2 + 5")
    assert value.terms == (
        (o("w^2"), 3),
        (ONE, 2),
        (ZERO, 5),
    )


def test_parse_whitespace_and_comments():
    assert o("w^2 # trailing comment\n + 3") == o("w^2 + 3")
    assert o("  w *  2 ") == o("w*2")


def test_parse_errors_report_position():
    with pytest.raises(ParseError) as err:
        o("w^")
    assert err.value.position == 2
    with pytest.raises(ParseError):
        o("")
    with pytest.raises(ParseError):
        o("w + ")
    with pytest.raises(ParseError):
        o("(w)")  # parens are only atoms of a power
    with pytest.raises(ParseError):
        o("w^2 w")


def test_parse_depth_limit():
    deep = "w^(" * 80 + "1" + ")" * 80
    with pytest.raises(ParseError, match="depth"):
        parse(deep)
    assert parse("w^(" * 10 + "1" + ")" * 10, max_depth=12) is not None
    with pytest.raises(ParseError, match="depth"):
        parse("w^(" * 10 + "1" + ")" * 10, max_depth=5)


def test_format_examples():
    assert format_ordinal(ZERO) == "0"
    assert format_ordinal(o("w^2*3 + w*2 + 5")) == "w^2*3 + w*2 + 5"
    assert format_ordinal(o("w^(w)")) == "w^(w)"
    assert format_ordinal(o("w^(w + 1)*2 + 1")) == "w^(w + 1)*2 + 1"


@given(ordinals())
def test_parse_format_round_trip(x):
    assert parse(format_ordinal(x)) == x


def test_coefficient_zero_and_power_zero():
    assert o("w*0") == ZERO
    assert o("w^0*5") == Ordinal.from_int(5)
    assert o("w^0") == ONE


# --- comparison -------------------------------------------------------------

def test_compare_examples():
    assert compare(w, w) == 0
    assert compare(o("w*2 + 1"), o("w^2")) == -1
    assert compare(o("w^(w)"), o("w^3*9")) == 1


@given(small_triples(), small_triples())
def test_compare_against_lexicographic_model(s, t):
    # below w^3 the ordinal order is the lexicographic order on triples
    assert compare(triple_ordinal(s), triple_ordinal(t)) == (s > t) - (s < t)


@given(ordinals(), ordinals(), ordinals())
def test_compare_is_a_total_order(a, b, c):
    assert (a < b) + (b < a) + (a == b) == 1
    if a < b and b < c:
        assert a < c


# --- addition ---------------------------------------------------------------

def naive_add(a, b):
    """Left-absorption rewriting, term by term; independent of add()."""
    terms = list(a.terms) + list(b.terms)
    changed = True
    while changed:
        changed = False
        for i in range(len(terms) - 1):
            (e1, c1), (e2, c2) = terms[i], terms[i + 1]
            if e1 < e2:
                del terms[i]
                changed = True
                break
            if e1 == e2:
                terms[i] = (e1, c1 + c2)
                del terms[i + 1]
                changed = True
                break
    return Ordinal(tuple(terms))


def test_add_examples():
    assert add(w, o("w^2")) == o("w^2")
    assert add(o("w^2"), w) == o("w^2 + w")
    assert add(o("w^2*3 + w"), o("w*5 + 1")) == o("w^2*3 + w*6 + 1")
    assert add(o("w^2*3 + w"), o("w*5 + 1")) == naive_add(o("w^2*3 + w"), o("w*5 + 1"))


@given(ordinals(), ordinals())
def test_add_matches_rewriting_oracle(a, b):
    assert add(a, b) == naive_add(a, b)


@given(ordinals(), ordinals(), ordinals())
def test_add_associative_with_zero_identity(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, ZERO) == a
    assert add(ZERO, a) == a


@given(ordinals(), ordinals(), ordinals())
def test_add_monotone_and_strictly_increasing_on_the_right(a, a2, b):
    lo, hi = (a, a2) if a < a2 else (a2, a)
    assert not add(b, hi) < add(b, lo)
    if lo < hi:
        assert add(b, lo) < add(b, hi)


@given(ordinals(), _exponents)
def test_left_absorption(b, e):
    power = omega_power(e)
    if b < power:
        assert add(b, power) == power


def test_int_interop():
    assert w + 1 == o("w + 1")
    assert 1 + w == w
    assert o("w") < o("w*2")
    assert Ordinal.from_int(3) == 3
    assert int(o("5")) == 5
    with pytest.raises(ValueError):
        int(w)


# --- multiplication and division by powers of omega -------------------------

def test_mul_power_examples():
    assert mul_power(ONE, o("w*3 + 2")) == o("w^2*3 + w*2")
    assert mul_power(ZERO, o("w^2 + w*4 + 1")) == o("w^2 + w*4 + 1")
    assert mul_power(Ordinal.from_int(2), Ordinal.from_int(3)) == o("w^2*3")


def test_divide_examples():
    assert divide_by_power(o("w^2*3 + w*2 + 5"), ONE) == (o("w*3 + 2"), o("5"))
    gamma = o("w^(w)*2 + w^2")
    assert divide_by_power(gamma, ZERO) == (gamma, ZERO)
    assert divide_by_power(Ordinal.from_int(5), ONE) == (ZERO, Ordinal.from_int(5))


@given(ordinals(), _exponents)
@settings(max_examples=300)
def test_division_round_trip(gamma, beta):
    q, r = divide_by_power(gamma, beta)
    assert add(mul_power(beta, q), r) == gamma
    assert r < omega_power(beta)


# --- kind -------------------------------------------------------------------

def test_kind_examples():
    assert kind(ZERO) is Kind.ZERO
    assert kind(o("w^2*3 + 1")) is Kind.SUCCESSOR
    assert kind(o("w^(w) + w")) is Kind.LIMIT


def test_hash_and_repr():
    assert hash(o("w + 1")) == hash(o("w + 1"))
    assert {o("w"), parse("w")} == {w}
    assert "w + 1" in repr(o("w + 1"))
