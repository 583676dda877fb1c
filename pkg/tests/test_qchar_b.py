import pytest

from qaffine.root_data import DomainError
from qaffine.qfield import QPoint, ONE, MINUS_ONE, minus_q, qs_power
from qaffine import qchar_b as Q


def test_alphabet_order():
  assert Q._alphabet(3) == [1, 2, 3, 0, -3, -2, -1]
  assert [Q._idx(3, i) for i in Q._alphabet(3)] == list(range(7))
  with pytest.raises(DomainError):
    Q._idx(3, 4)


def test_box_weight_unit():
  # the top-left unit box carries Y_{1,a} on the nose
  w = Q.box_weight(3, 1, 1, 1, 1, 1, ONE)
  assert w == {(1, ONE): 1}
  # letter 0 nets a Y_n / Y_n^{-1} pair
  w = Q.box_weight(3, 0, 1, 1, 1, 1, ONE)
  assert sorted(w.values()) == [-1, 1]
  assert all(i == 3 for i, _ in w)


def test_natural_count_and_dominant():
  for n in (2, 3, 4):
    ch = Q.qchar_rectangle(n, 1, 1)
    assert sum(ch.values()) == 2 * n + 1
    assert Q.unique_dominant(ch) == (((1, ONE), 1),)


def test_unique_dominant_every_rectangle():
  for n in (2, 3):
    for K in range(1, 2 * n):
      for M in (1, 2):
        ch = Q.qchar_rectangle(n, K, M)
        d = Q.unique_dominant(ch)
        if K < n:
          assert d == Q.dominant_rectangle(n, K, M)


def test_dominant_rectangle_string():
  d = Q.dominant_rectangle(3, 2, 2, ONE)
  assert d == (((2, qs_power(-2)), 1), ((2, qs_power(2)), 1))
  with pytest.raises(DomainError):
    Q.dominant_rectangle(3, 3, 1)


def test_trivial_and_domain_errors():
  assert Q.qchar_rectangle(3, 0, 5) == {(): 1}
  assert Q.qchar_rectangle(3, 2, 0) == {(): 1}
  with pytest.raises(DomainError):
    Q.qchar_rectangle(3, 6, 1)
  with pytest.raises(DomainError):
    Q.qchar_rectangle(3, 1, 1, budget=2)


def test_convolve_and_dominant_filter():
  ch = Q.qchar_rectangle(2, 1, 1)
  prod = Q.convolve(ch, ch)
  assert sum(prod.values()) == 25
  dom = Q.dominant_monomials(prod)
  assert dom[(((1, ONE), 2),)] == 1
  assert Q.dominant_monomials(Q.convolve()) == {(): 1}


def test_tall_rectangle_counts():
  # plain semistandard tall columns, including repeated zeros
  assert sum(Q.qchar_rectangle(3, 4, 1).values()) == 57
  assert sum(Q.qchar_rectangle(3, 5, 1).values()) == 63
  assert len(Q._columns(3, 5)) == 63


def test_folded_uniqueness_b3():
  for m in (1, 2):
    assert Q.folded_product_counts(3, 4, 1, m) == {'a': 1, 'b': 1, 'c': 1}


def test_folded_uniqueness_b4():
  for (k, l) in [(5, 1), (5, 2), (6, 1)]:
    assert Q.folded_product_counts(4, k, l, 1) == {'a': 1, 'b': 1, 'c': 1}


def test_folded_domain_errors():
  with pytest.raises(DomainError):
    Q.folded_product_counts(3, 3, 1, 1)   # k = n
  with pytest.raises(DomainError):
    Q.folded_product_counts(3, 4, 2, 1)   # k + l > 2n - 1
