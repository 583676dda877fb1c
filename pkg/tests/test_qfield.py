from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qaffine.qfield import (QPoint, ONE, MINUS_ONE, minus_q, minus_qs,
                            q_power, qs_power, sign_point, parse_point,
                            FactoredLaurent, PhiProduct, to_phi_product,
                            from_root_list)


fracs = st.fractions(min_value=-8, max_value=8, max_denominator=6)


@given(fracs, fracs, fracs, fracs)
def test_qpoint_group_laws(a, b, c, d):
  x, y = QPoint(a, b), QPoint(c, d)
  assert x * y == y * x
  assert x * x.inv() == ONE
  assert (x * y).inv() == x.inv() * y.inv()
  assert x ** 3 == x * x * x


def test_qpoint_constructors():
  assert minus_q(2) == QPoint(2, 0)
  assert minus_q(3) == QPoint(3, Fraction(1, 2))
  assert minus_qs(1) == QPoint(Fraction(1, 2), Fraction(1, 2))
  assert sign_point(-1) == MINUS_ONE
  assert minus_q(1) ** 2 == q_power(2)
  assert qs_power(2) == q_power(1)


def test_qpoint_bar_and_roots():
  x = minus_q(3)
  assert x.bar() == QPoint(-3, Fraction(1, 2))
  r1, r2 = x.sqrt_pair()
  assert r1 ** 2 == x and r2 ** 2 == x and r1 != r2


def test_parse_point_roundtrip():
  for s in ['1', '-1', '(-q)^3', '(-q)^-2', '(-qs)^5', 'q^2', 'qs^-1',
            '-(-q)^4', '-qs^3']:
    p = parse_point(s)
    assert parse_point(p.pretty()) == p
  assert parse_point('(-q)^3') == minus_q(3)
  assert parse_point('-(-q)^2') == MINUS_ONE * minus_q(2)


def test_factored_laurent_arithmetic():
  f = FactoredLaurent()
  f.add_root(minus_q(3))
  f.add_root(minus_q(5))
  assert f.degree() == 2
  assert f.order_at(minus_q(3)) == 1
  assert f.order_at(minus_q(4)) == 0
  assert str(f) == '(z - (-q)^3)(z - (-q)^5)'
  g = f / from_root_list([minus_q(5)])
  assert g == from_root_list([minus_q(3)])
  assert (f * g).order_at(minus_q(3)) == 2
  assert not (f / f ** 2).is_polynomial()


def test_factored_laurent_scale_and_bar():
  f = from_root_list([minus_q(2)])
  assert f.scale_roots(minus_q(1)).order_at(minus_q(3)) == 1
  assert f.bar().order_at(minus_q(-2)) == 1


def test_phi_product_deg_grading():
  base = q_power(4)
  c = PhiProduct(base)
  c.one_minus(ONE)            # phi(z)/phi(base z): on-ladder at k = 0, 1
  assert c.deg() == 2 and c.deg_inf() == 0
  c.one_minus(ONE, -1)
  assert c.deg() == 0 and not c.eta
  c.one_minus(base)           # k = 1, 2: both above zero, graded away
  assert c.deg() == 0
  c.add(minus_q(1))           # off-ladder factors do not grade at all
  assert c.deg() == 0 and c.deg_inf() == 0


def test_phi_product_algebra():
  base = q_power(4)
  c = PhiProduct(base)
  c.one_minus(ONE, 2)               # straddles the ladder origin
  assert c.deg() == 4 and c.deg_inf() == 0
  assert (c / c).eta == {}
  assert (c ** 3).deg() == 12
  d = c.shifted(q_power(4))         # pushed entirely above zero
  assert d.deg() == 0


def test_phi_pochhammer_expands_submodulus():
  base = q_power(4)
  c = PhiProduct(base)
  c.pochhammer(minus_q(1), q_power(2))   # base = modulus^2
  d = PhiProduct(base)
  d.add(minus_q(1))
  d.add(minus_q(1) * q_power(2))
  assert c == d
  c2 = PhiProduct(base)
  c2.pochhammer(minus_q(1), base)
  assert c2.eta == {minus_q(1): 1}


def test_to_phi_product_matches_linear_factors():
  base = q_power(4)
  f = from_root_list([minus_q(2), minus_q(6)])
  c = to_phi_product(f, base)
  d = PhiProduct(base)
  d.linear_factor(minus_q(2))
  d.linear_factor(minus_q(6))
  assert c == d
