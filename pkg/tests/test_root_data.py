from fractions import Fraction

import pytest

from qaffine.root_data import AffineType, DomainError
from qaffine.qfield import minus_q, minus_qs, q_power, MINUS_ONE


def test_parse_and_kind():
  assert AffineType.parse('A3~1').kind == 'A1'
  assert AffineType.parse('B3~1').kind == 'B1'
  assert AffineType.parse('A5~2').kind == 'A2odd'
  assert AffineType.parse('A4~2').kind == 'A2even'
  assert AffineType.parse('D5~2').kind == 'D2'
  assert AffineType.parse('D4~3').kind == 'D3'
  assert AffineType.parse('G2~1').kind == 'G1'
  for bad in ['B2~1', 'C1~1', 'D3~1', 'A4~3', 'E6~1', 'x', 'A3']:
    with pytest.raises(DomainError):
      AffineType.parse(bad)


def test_rank_and_n():
  t = AffineType.parse('A3~1')
  assert t.n == 4 and t.rank == 3
  assert AffineType.parse('B4~1').rank == 4
  assert AffineType.parse('A5~2').n == 3
  assert AffineType.parse('D5~2').n == 4
  assert list(AffineType.parse('C3~1').nodes()) == [1, 2, 3]


def test_finite_family():
  assert AffineType.parse('A3~1').finite_family() == ('A', 3)
  assert AffineType.parse('A5~2').finite_family() == ('C', 3)
  assert AffineType.parse('A4~2').finite_family() == ('B', 2)
  assert AffineType.parse('D5~2').finite_family() == ('B', 4)
  assert AffineType.parse('D4~3').finite_family() == ('G', 2)


def test_kr_shift_points():
  B3 = AffineType.parse('B3~1')
  assert B3.kr_shift_point(1) == minus_q(1)
  assert B3.kr_shift_point(3) == minus_qs(1)
  C3 = AffineType.parse('C3~1')
  assert C3.kr_shift_point(1) == minus_qs(1)
  assert C3.kr_shift_point(3) == minus_q(1)
  D2 = AffineType.parse('D5~2')
  assert D2.kr_shift_point(4) == MINUS_ONE * q_power(1)
  assert D2.kr_shift_point(1) == MINUS_ONE * q_power(2)
  with pytest.raises(DomainError):
    B3.kr_shift_point(4)


def test_p_star():
  assert AffineType.parse('A3~1').p_star() == minus_q(4)
  assert AffineType.parse('B3~1').p_star() == MINUS_ONE * minus_q(5)
  assert AffineType.parse('C3~1').p_star() == minus_qs(8)
  assert AffineType.parse('D4~1').p_star() == minus_q(6)
  t = AffineType.parse('B3~1')
  assert t.p_tilde() == t.p_star() ** 2


def test_node_dual():
  A3 = AffineType.parse('A3~1')
  assert [A3.node_dual(i) for i in A3.nodes()] == [3, 2, 1]
  D5 = AffineType.parse('D5~1')
  assert D5.node_dual(4) == 5 and D5.node_dual(5) == 4
  D4 = AffineType.parse('D4~1')
  assert D4.node_dual(3) == 3 and D4.node_dual(4) == 4


def test_cartan_matrices_are_affine():
  for name in ['A3~1', 'B3~1', 'C3~1', 'D4~1', 'D5~1', 'A5~2', 'A4~2',
               'D5~2', 'D4~3', 'G2~1']:
    t = AffineType.parse(name)
    A = t.cartan_matrix()
    marks = t.marks()
    assert len(A) == t.rank + 1 == len(marks)
    for row in A:
      assert sum(a * m for a, m in zip(row, marks)) == 0, name
    # connectivity: no isolated node
    for i, row in enumerate(A):
      assert any(row[j] < 0 for j in range(len(row)) if j != i), (name, i)


def test_node_classes():
  B3 = AffineType.parse('B3~1')
  assert B3.is_minuscule(3) and not B3.is_minuscule(1)
  assert B3.is_special(3) and not B3.is_special(2)
  assert B3.is_adjoint(2)
  D5 = AffineType.parse('D5~1')
  assert all(D5.is_minuscule(i) for i in (1, 4, 5))
  assert D5.is_special(4) and D5.is_special(5) and not D5.is_special(1)


def test_fundamental_only_levels():
  G2 = AffineType.parse('G2~1')
  assert G2.fundamental_only
  with pytest.raises(DomainError):
    G2.require_kr_level(2)
  AffineType.parse('B3~1').require_kr_level(5)
