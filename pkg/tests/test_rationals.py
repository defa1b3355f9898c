from hypothesis import given, strategies as st

from sextic19.rationals import (
    Rat,
    factorize,
    is_rat_square,
    rat,
    rat_sqrt,
    rat_squarefree_split,
    rat_str,
    squarefree_part,
)

nonzero = st.integers(min_value=-10**6, max_value=10**6).filter(bool)
positive = st.integers(min_value=1, max_value=10**6)


def test_parse_and_print():
    assert rat("81/2") == Rat(81, 2)
    assert rat("-34") == Rat(-34)
    assert rat_str(Rat(-6, 4)) == "-3/2"
    assert rat_str(Rat(8, 2)) == "4"


@given(nonzero, positive)
def test_square_roundtrip(p, q):
    x = Rat(p, q)
    assert rat_sqrt(x * x) == abs(x)
    assert is_rat_square(x * x)


@given(nonzero)
def test_squarefree_part(n):
    s, t = squarefree_part(n)
    assert s * t * t == n
    assert all(e == 1 for e in factorize(abs(s)).values())


@given(nonzero, positive)
def test_squarefree_split(p, q):
    x = Rat(p, q)
    s, c = rat_squarefree_split(x)
    assert Rat(s) * c * c == x
    assert c > 0


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(1) == {}
    assert factorize(97) == {97: 1}
