import pytest

from qaffine.root_data import AffineType, DomainError
from qaffine.qfield import minus_q, minus_qs, qs_power, MINUS_ONE
from qaffine.denominators import DenomPoly, denom_fundamental, denom_kr

A3 = AffineType.parse('A3~1')
B3 = AffineType.parse('B3~1')
C3 = AffineType.parse('C3~1')
D4 = AffineType.parse('D4~1')


FUNDAMENTAL_ROWS = {
    ('A3~1', 1, 2): '(z - (-q)^3)',
    ('B3~1', 1, 1): '(z - (-q)^2)(z - q^5)',
    ('B3~1', 1, 3): '(z - qs^7)',
    ('B3~1', 2, 3): '(z - (-qs)^5)(z - (-qs)^9)',
    ('B3~1', 3, 3): '(z - q)(z - q^3)(z - q^5)',
    ('C3~1', 1, 1): '(z - q)(z - (-q)^4)',
    ('C3~1', 1, 3): '(z - q^3)',
    ('C3~1', 3, 3): '(z - (-q)^2)(z - q^3)(z - (-q)^4)',
    ('D4~1', 1, 1): '(z - (-q)^2)(z - (-q)^6)',
    ('D4~1', 1, 3): '(z - (-q)^4)',
    ('D4~1', 3, 4): '(z - (-q)^4)',
    ('A5~2', 1, 1): '(z - (-q)^2)(z - -(-q)^6)',
    ('A5~2', 1, 3): '(z - (-q)^4)(z - -(-q)^4)',
    ('D5~2', 1, 4): '(z - q^5)(z - (-q)^5)',
    ('D5~2', 4, 4): '(z - (-q)^2)(z - -(-q)^4)(z - (-q)^6)(z - -(-q)^8)',
    ('G2~1', 1, 2): '(z - (-qt)^7)(z - (-qt)^11)',
    ('D4~3', 1, 1): '(z - (-q)^2)(z - w*q^4)(z - w^2*q^4)(z - (-q)^6)',
}


@pytest.mark.parametrize('key', sorted(FUNDAMENTAL_ROWS))
def test_fundamental_table_rows(key):
  name, k, l = key
  d = denom_fundamental(AffineType.parse(name), k, l)
  assert d.is_exact()
  assert d.pretty() == FUNDAMENTAL_ROWS[key]


def test_fundamental_symmetry():
  for t in (A3, B3, C3, D4):
    for k in t.nodes():
      for l in t.nodes():
        assert (denom_fundamental(t, k, l).resolved()
                == denom_fundamental(t, l, k).resolved())


def test_kr_spot_values():
  assert denom_kr(A3, 1, 2, 2, 2).pretty() == '(z - (-q)^3)(z - (-q)^5)'
  assert denom_kr(B3, 1, 2, 3, 1).pretty() == '(z - (-qs)^9)'
  assert denom_kr(B3, 1, 2, 2, 2).pretty() == (
      '(z - (-q)^3)(z - -(-q)^4)(z - (-q)^5)(z - -(-q)^6)')
  assert denom_kr(C3, 1, 1, 1, 3).pretty() == '(z - (-q)^2)(z - q^5)'


def test_kr_symmetry_and_positivity():
  for t in (A3, B3, C3):
    for k in t.nodes():
      for l in t.nodes():
        for m in (1, 2):
          for p in (1, 2):
            d = denom_kr(t, k, m, l, p, assume_conjecture=True).resolved()
            assert d == denom_kr(t, l, p, k, m,
                                 assume_conjecture=True).resolved()
            for x, mult in d.roots.items():
              assert mult > 0 and x.qexp > 0, (t, k, m, l, p, x)


def test_kr_level_one_matches_fundamental():
  for t in (A3, B3, C3, D4):
    for k in t.nodes():
      for l in t.nodes():
        assert (denom_kr(t, k, 1, l, 1).resolved()
                == denom_fundamental(t, k, l).resolved())


def test_c_odd_odd_ambiguity():
  d = denom_kr(C3, 2, 3, 2, 5)
  assert not d.is_exact()
  assert sorted(x.qexp * 2 for x in d.ambiguous) == [6, 8, 10]
  dc = denom_kr(C3, 2, 3, 2, 5, assume_conjecture=True)
  assert d.resolved() == dc.certain
  assert dc.is_exact()
  assert dc.pretty() == ('(z - (-q)^2)(z - q^3)^2(z - (-q)^4)^3'
                         '(z - q^5)^3(z - (-q)^6)^2(z - q^7)')


def test_order_interval():
  d = denom_kr(C3, 2, 3, 2, 5)
  lo, hi = d.order_interval(qs_power(8))
  assert (lo, hi) == (2, 3)
  assert d.order_interval(qs_power(4)) == (1, 1)
  assert d.order_interval(qs_power(2)) == (0, 0)


def test_domain_errors():
  with pytest.raises(DomainError):
    denom_kr(A3, 4, 1, 1, 1)
  with pytest.raises(DomainError):
    denom_kr(A3, 1, -1, 1, 1)
  with pytest.raises(DomainError):
    denom_fundamental(AffineType.parse('G2~1'), 3, 1)
