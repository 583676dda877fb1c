"""Affine type bookkeeping: admissible types, Cartan matrices, node data,
the point p* governing duality shifts, and the finite type underlying each
affine algebra."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .qfield import (QPoint, ONE, MINUS_ONE, minus_q, minus_qs, q_power,
                     qs_power)


class DomainError(ValueError):
  """A precondition of an operation is violated (exit code 1 in the CLI)."""


_TYPE_RE = re.compile(r'^([ABCDG])(\d+)~([123])$')

# (family, twist) -> kind; admissibility checked in AffineType
_KINDS = {
    ('A', 1): 'A1', ('B', 1): 'B1', ('C', 1): 'C1', ('D', 1): 'D1',
    ('G', 1): 'G1', ('A', 2): None, ('D', 2): 'D2', ('D', 3): 'D3',
}


@dataclass(frozen=True)
class AffineType:
  """An admissible affine type, e.g. A3~1, D5~2, D4~3.

  `sub` is the printed subscript; `n` is the rank parameter of the family
  (A_{n-1}^(1), B_n^(1), C_n^(1), D_n^(1), A_{2n-1}^(2), A_{2n}^(2),
  D_{n+1}^(2), D_4^(3), G_2^(1)).
  """
  family: str
  sub: int
  twist: int

  @staticmethod
  def parse(s: str) -> 'AffineType':
    m = _TYPE_RE.match(s.strip())
    if not m:
      raise DomainError(f'cannot parse affine type {s!r}')
    t = AffineType(m.group(1), int(m.group(2)), int(m.group(3)))
    t.kind  # validates
    return t

  @property
  def kind(self) -> str:
    fam, sub, tw = self.family, self.sub, self.twist
    if tw == 1:
      if fam == 'A' and sub >= 1:
        return 'A1'
      if fam == 'B' and sub >= 3:
        return 'B1'
      if fam == 'C' and sub >= 2:
        return 'C1'
      if fam == 'D' and sub >= 4:
        return 'D1'
      if fam == 'G' and sub == 2:
        return 'G1'
    elif tw == 2:
      if fam == 'A' and sub >= 5 and sub % 2 == 1:
        return 'A2odd'   # A_{2n-1}^(2), n >= 3
      if fam == 'A' and sub >= 2 and sub % 2 == 0:
        return 'A2even'  # A_{2n}^(2), n >= 1
      if fam == 'D' and sub >= 3:
        return 'D2'      # D_{n+1}^(2), n >= 2
    elif tw == 3:
      if fam == 'D' and sub == 4:
        return 'D3'
    raise DomainError(f'inadmissible affine type {self}')

  @property
  def n(self) -> int:
    k = self.kind
    if k in ('A1', 'B1', 'C1', 'D1', 'G1'):
      return self.sub if k != 'A1' else self.sub + 1
    if k == 'A2odd':
      return (self.sub + 1) // 2
    if k == 'A2even':
      return self.sub // 2
    if k == 'D2':
      return self.sub - 1
    return 2  # D3

  @property
  def rank(self) -> int:
    # size of I_0
    if self.kind == 'A1':
      return self.sub
    return self.n

  @property
  def fundamental_only(self) -> bool:
    return self.kind in ('G1', 'D3')

  def nodes(self):
    return range(1, self.rank + 1)

    # -- per-node data --------------------------------------------------

  def d_i(self, i: int) -> Fraction:
    """Half the squared length of alpha_i, normalized so short = the
    smallest q-power appearing in the type's denominators."""
    self._check_node(i)
    k, n = self.kind, self.n
    if k in ('A1', 'D1', 'G1', 'D3', 'A2even'):
      if k == 'G1':
        return Fraction(3) if i == 2 else Fraction(1)
      if k == 'D3':
        return Fraction(1) if i == 2 else Fraction(1)
      return Fraction(1)
    if k == 'B1':
      return Fraction(1) if i == n else Fraction(2)
    if k == 'C1':
      return Fraction(2) if i == n else Fraction(1)
    if k == 'A2odd':
      return Fraction(2) if i == n else Fraction(1)
    if k == 'D2':
      return Fraction(1) if i == n else Fraction(2)
    raise AssertionError

  def kr_shift_point(self, i: int) -> QPoint:
    """-k_i, the elementary spectral shift of the node-i KR tower.

    Defined so that W^{(i)}_m is a string with steps (-k_i)^2; coincides
    with -q^{d_i} in the natural normalization except for the short-node
    exception in A_{2n}^(2)."""
    self._check_node(i)
    k, n = self.kind, self.n
    if k == 'B1':
      return minus_qs(1) if i == n else minus_q(1)
    if k == 'C1':
      return minus_q(1) if i == n else minus_qs(1)
    if k == 'D2':
      return MINUS_ONE * q_power(1) if i == n else MINUS_ONE * q_power(2)
    # simply-laced, A^(2) (incl. the A_{2n}^(2) node-n exception), G/D3
    return minus_q(1)

  def _check_node(self, i: int):
    if not 1 <= i <= self.rank:
      raise DomainError(f'node {i} out of range for {self}')

  def is_minuscule(self, i: int) -> bool:
    self._check_node(i)
    fam, n = self.finite_family()
    if fam == 'A':
      return True
    if fam == 'B':
      return i == n
    if fam == 'C':
      return i == 1
    if fam == 'D':
      return i in (1, n - 1, n)
    return False

  def is_special(self, i: int) -> bool:
    """Nodes whose KR modules restrict irreducibly (classically)."""
    self._check_node(i)
    fam, n = self.finite_family()
    if fam == 'A':
      return True
    if fam in ('B', 'C'):
      return i == n
    if fam == 'D':
      return i in (n - 1, n)
    return False

  def is_adjoint(self, i: int) -> bool:
    self._check_node(i)
    fam, n = self.finite_family()
    if fam == 'A':
      return i in (1, n)
    if fam == 'B':
      return i == 2
    if fam == 'C':
      return i == 1
    if fam == 'D':
      return i == 2
    if fam == 'G':
      return i == 2
    return False

  # -- global data ------------------------------------------------------

  def finite_family(self):
    """(family, rank) of the underlying finite-dimensional g_0."""
    k, n = self.kind, self.n
    return {
        'A1': ('A', self.sub), 'B1': ('B', n), 'C1': ('C', n),
        'D1': ('D', n), 'G1': ('G', 2), 'A2odd': ('C', n),
        'A2even': ('B', n), 'D2': ('B', n), 'D3': ('G', 2),
    }[k]

  def sigma_order(self) -> int:
    return self.twist

  def p_star(self) -> QPoint:
    k, n = self.kind, self.n
    if k == 'A1':
      return minus_q(n)
    if k == 'B1':
      return MINUS_ONE * minus_q(2 * n - 1)
    if k == 'C1':
      return minus_qs(2 * n + 2)
    if k == 'D1':
      return minus_q(2 * n - 2)
    if k == 'A2odd':
      return MINUS_ONE * minus_q(2 * n)
    if k == 'A2even':
      return minus_q(2 * n + 1)
    if k == 'D2':
      return MINUS_ONE * (MINUS_ONE * q_power(2)) ** n
    if k == 'D3':
      return q_power(6)
    if k == 'G1':
      return q_power(4)
    raise AssertionError

  def p_tilde(self) -> QPoint:
    return self.p_star() ** 2

  def node_dual(self, i: int) -> int:
    self._check_node(i)
    k = self.kind
    if k == 'A1':
      return self.sub + 1 - i
    if k == 'D1' and self.n % 2 == 1 and i >= self.n - 1:
      return (2 * self.n - 1) - i
    return i

  def cartan_matrix(self):
    """The (rank+1) x (rank+1) affine Cartan matrix, node 0 first."""
    r = self.rank
    A = [[0] * (r + 1) for _ in range(r + 1)]
    for i in range(r + 1):
      A[i][i] = 2

    def edge(i, j, aij=-1, aji=-1):
      A[i][j] = aij
      A[j][i] = aji

    k, n = self.kind, self.n
    if k == 'A1':
      if r == 1:
        edge(0, 1, -2, -2)
      else:
        for i in range(r):
          edge(i, i + 1)
        edge(0, r)
    elif k == 'B1':
      edge(0, 2)
      for i in range(1, n - 1):
        edge(i, i + 1)
      edge(n - 1, n, -1, -2)
    elif k == 'C1':
      edge(0, 1, -1, -2)
      for i in range(1, n - 1):
        edge(i, i + 1)
      edge(n - 1, n, -2, -1)
    elif k == 'D1':
      edge(0, 2)
      for i in range(1, n - 1):
        edge(i, i + 1)
      edge(n - 2, n)
    elif k == 'A2odd':
      edge(0, 2)
      for i in range(1, n - 1):
        edge(i, i + 1)
      edge(n - 1, n, -2, -1)
    elif k == 'A2even':
      if n == 1:
        edge(0, 1, -4, -1)
      else:
        edge(0, 1, -1, -2)
        for i in range(1, n - 1):
          edge(i, i + 1)
        edge(n - 1, n, -2, -1)
    elif k == 'D2':
      edge(0, 1, -2, -1)
      for i in range(1, n - 1):
        edge(i, i + 1)
      edge(n - 1, n, -1, -2)
    elif k == 'D3':
      edge(0, 1)
      edge(1, 2, -3, -1)
    elif k == 'G1':
      edge(0, 1)
      edge(1, 2, -1, -3)
    return A

  def marks(self):
    """Null vector of the affine Cartan matrix (Kac labels up to scale)."""
    r, k, n = self.rank, self.kind, self.n
    if k == 'A1':
      return [1] * (r + 1)
    if k == 'B1':
      return [1, 1] + [2] * (n - 2) + [2]
    if k == 'C1':
      return [1] + [2] * (n - 1) + [1]
    if k == 'D1':
      return [1, 1] + [2] * (n - 3) + [1, 1]
    if k == 'A2odd':
      return [1, 1] + [2] * (n - 2) + [1]
    if k == 'A2even':
      if n == 1:
        return [2, 1]
      return [1] + [2] * (n - 1) + [1]
    if k == 'D2':
      return [1] * (n + 1)
    if k == 'D3':
      return [1, 2, 1]
    if k == 'G1':
      return [1, 2, 3]
    raise AssertionError

  def require_kr_level(self, m: int):
    if m < 0:
      raise DomainError('KR level must be nonnegative')
    if m > 1 and self.fundamental_only:
      raise DomainError(
          f'{self}: only fundamental-level modules are supported')

  def __str__(self):
    return f'{self.family}{self.sub}~{self.twist}'


def cartan_matrix(t: AffineType):
  return t.cartan_matrix()


def p_star(t: AffineType) -> QPoint:
  return t.p_star()


def node_dual(t: AffineType, k: int) -> int:
  return t.node_dual(k)


def g_fin(t: AffineType):
  fam, r = t.finite_family()
  return (fam, r), t.sigma_order()
