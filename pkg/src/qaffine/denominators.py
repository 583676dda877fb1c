"""Denominator polynomials d_{k^m, l^p}(z) between Kirillov-Reshetikhin
modules, stored as factored root multisets.

Quadratic (z^2 - c) and cubic (z^3 - c) factors of the twisted types are
pre-split into linear roots over the coefficient group of QPoints.

The only regime where multiplicities are not pinned down is C_n^(1) with
k = l < n and both tensor levels odd and > 1; there `DenomPoly.ambiguous`
lists the roots whose multiplicity carries an undetermined bonus in {0,1}.
The zero set itself is known in all cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .qfield import (QPoint, FactoredLaurent, ONE, MINUS_ONE, minus_q,
                     minus_qs, q_power, qs_power, qt_power, sign_point)
from .root_data import AffineType, DomainError


@dataclass
class DenomPoly:
  certain: FactoredLaurent = field(default_factory=FactoredLaurent)
  # roots with an undetermined multiplicity bonus in {0,1}
  ambiguous: list = field(default_factory=list)

  def order_interval(self, x: QPoint):
    lo = self.certain.order_at(x)
    return (lo, lo + sum(1 for a in self.ambiguous if a == x))

  def zero_set(self):
    s = {x for x, m in self.certain.roots.items() if m > 0}
    s.update(self.ambiguous)
    return s

  def is_exact(self) -> bool:
    return not self.ambiguous

  def resolved(self) -> FactoredLaurent:
    """All ambiguity bonuses set to 1 (the conjectural formula)."""
    f = self.certain.copy()
    for a in self.ambiguous:
      f.add_root(a)
    return f

  def scale_roots(self, c: QPoint) -> 'DenomPoly':
    return DenomPoly(self.certain.scale_roots(c),
                     [a * c for a in self.ambiguous])

  def pretty(self) -> str:
    s = self.certain.pretty()
    if self.ambiguous:
      amb = ''.join(f'(z - {a.pretty()})^[0 or 1]'
                    for a in sorted(self.ambiguous,
                                    key=lambda q: (q.qexp, q.phase)))
      s = s + ' * ' + amb
    return s

  def __str__(self):
    return self.pretty()

  def to_json(self):
    return {'certain': self.certain.to_json(),
            'ambiguous': [a.to_json() for a in sorted(
                self.ambiguous, key=lambda q: (q.qexp, q.phase))]}


def _minus(x: QPoint) -> QPoint:
  return MINUS_ONE * x


def _mq2(a) -> QPoint:
  # (-q^2)^a
  return (MINUS_ONE * q_power(2)) ** a


# ----------------------------------------------------------------------
# fundamental denominators (roots with multiplicity, as a flat list)


def _fund_roots(t: AffineType, k: int, l: int):
  kind, n = t.kind, t.n
  roots = []

  if kind == 'A1':
    nA = t.sub + 1
    for s in range(1, min(k, l, nA - k, nA - l) + 1):
      roots.append(minus_q(2 * s + abs(k - l)))

  elif kind == 'B1':
    if k == n and l == n:
      roots += [qs_power(4 * s - 2) for s in range(1, n + 1)]
    elif k == n or l == n:
      a = min(k, l)  # the non-spin node
      sg = sign_point((-1) ** (n + a))
      roots += [sg * qs_power(2 * n - 2 * a - 1 + 4 * s)
                for s in range(1, a + 1)]
    else:
      for s in range(1, min(k, l) + 1):
        roots.append(minus_q(abs(k - l) + 2 * s))
        roots.append(_minus(minus_q(2 * n - k - l - 1 + 2 * s)))

  elif kind == 'C1':
    for s in range(1, min(k, l, n - k, n - l) + 1):
      roots.append(minus_qs(abs(k - l) + 2 * s))
    for s in range(1, min(k, l) + 1):
      roots.append(minus_qs(2 * n + 2 - k - l + 2 * s))

  elif kind == 'D1':
    spin = {n - 1, n}
    if k in spin and l in spin:
      if k == l:
        roots += [minus_q(4 * s - 2) for s in range(1, n // 2 + 1)]
      else:
        roots += [minus_q(4 * s) for s in range(1, (n - 1) // 2 + 1)]
    elif k in spin or l in spin:
      a = k if l in spin else l  # the non-spin node
      roots += [minus_q(n - a - 1 + 2 * s) for s in range(1, a + 1)]
    else:
      for s in range(1, min(k, l) + 1):
        roots.append(minus_q(abs(k - l) + 2 * s))
        roots.append(minus_q(2 * n - 2 - k - l + 2 * s))

  elif kind == 'A2odd':
    for s in range(1, min(k, l) + 1):
      roots.append(minus_q(abs(k - l) + 2 * s))
      roots.append(_minus(minus_q(2 * n - k - l + 2 * s)))

  elif kind == 'A2even':
    for s in range(1, min(k, l) + 1):
      roots.append(minus_q(abs(k - l) + 2 * s))
      roots.append(minus_q(2 * n + 1 - k - l + 2 * s))

  elif kind == 'D2':
    if k == n and l == n:
      roots += [_minus(_mq2(s)) for s in range(1, n + 1)]
    elif k == n or l == n:
      a = k if l == n else l
      for s in range(1, a + 1):
        roots += list(_minus(_mq2(n - a + 2 * s)).sqrt_pair())
    else:
      for s in range(1, min(k, l) + 1):
        roots += list(_mq2(abs(k - l) + 2 * s).sqrt_pair())
        roots += list(_mq2(2 * n - k - l + 2 * s).sqrt_pair())

  elif kind == 'D3':
    kk, ll = min(k, l), max(k, l)
    if (kk, ll) == (1, 1):
      roots = [q_power(2), q_power(6),
               QPoint(4, '1/3'), QPoint(4, '2/3')]
    elif (kk, ll) == (1, 2):
      roots = list(_minus(q_power(9)).cbrt_triple())
      roots += list(_minus(q_power(15)).cbrt_triple())
    else:
      roots = list(q_power(6).cbrt_triple())
      roots += 2 * list(q_power(12).cbrt_triple())
      roots += list(q_power(18).cbrt_triple())

  elif kind == 'G1':
    kk, ll = min(k, l), max(k, l)
    if (kk, ll) == (1, 1):
      roots = [qt_power(e) for e in (6, 8, 10, 12)]
    elif (kk, ll) == (1, 2):
      roots = [_minus(qt_power(7)), _minus(qt_power(11))]
    else:
      roots = [qt_power(e) for e in (2, 8, 12)]

  else:
    raise AssertionError(kind)
  return roots


def denom_fundamental(t: AffineType, k: int, l: int) -> DenomPoly:
  """d_{k,l}(z) between fundamental modules V(w_k)_1 and V(w_l)_1."""
  t._check_node(k)
  t._check_node(l)
  f = FactoredLaurent()
  for x in _fund_roots(t, k, l):
    f.add_root(x)
  return DenomPoly(f)


# ----------------------------------------------------------------------
# KR denominators


def _normal_form(t: AffineType, k: int, m: int, l: int, p: int,
                 shift: QPoint) -> DenomPoly:
  fund = _fund_roots(t, k, l)
  f = FactoredLaurent()
  for u in range(min(m, p)):
    c = shift ** (abs(p - m) + 2 * u)
    for x in fund:
      f.add_root(x * c)
  return DenomPoly(f)


def _b_spin_mixed(t, a, pa, m):
  """d_{a^pa, n^m} for type B, a < n."""
  n = t.n
  f = FactoredLaurent()
  sg = sign_point((-1) ** (n + a + pa + m))
  for u in range(min(2 * pa, m)):
    for s in range(1, a + 1):
      f.add_root(sg * qs_power(2 * n - 2 * a - 2 + abs(2 * pa - m)
                               + 4 * s + 2 * u))
  return DenomPoly(f)


def _c_generic(t, k, m, l, p):
  n = t.n
  f = FactoredLaurent()
  for u in range(min(m, p)):
    for s in range(1, min(k, l) + 1):
      f.add_root(minus_qs(abs(k - l) + abs(m - p) + 2 * (s + u)))
      f.add_root(minus_qs(2 * n + 2 - k - l + abs(m - p) + 2 * (s + u)))
  return DenomPoly(f)


def _c_spin_mixed(t, a, pa, m):
  """d_{a^pa, n^m} for type C, a < n."""
  n = t.n
  f = FactoredLaurent()
  sg = sign_point((-1) ** (n + pa + a + m))
  for u in range(min(pa, 2 * m)):
    for s in range(1, a + 1):
      f.add_root(sg * qs_power(n + 1 - a + abs(2 * m - pa) + 2 * s + 2 * u))
  return DenomPoly(f)


def _c_odd_odd(t, k, m, p, assume_conjecture):
  """C type, k = l < n, m and p odd and > 1."""
  n = t.n
  P, M = min(m, p), max(m, p)
  if assume_conjecture:
    f = FactoredLaurent()
    for u in range(P):
      for s in range(1, k + 1):
        f.add_root(minus_qs(M - P + 2 * (s + u)))
        f.add_root(minus_qs(2 * n + 2 - 2 * k + M - P + 2 * (s + u)))
    return DenomPoly(f)
  certain = FactoredLaurent()
  amb = []
  for u in range(P):
    for s in range(1, k):
      certain.add_root(minus_qs(M - P + 2 * s + 2 * u))
      certain.add_root(minus_qs(2 * n - 2 * k + M - P + 2 + 2 * s + 2 * u))
    certain.add_root(minus_qs(2 * n + 2 + M - P + 2 * u))
    amb.append(minus_qs(2 * k + M - P + 2 * u))
  return DenomPoly(certain, amb)


def _d2(t, k, m, l, p):
  n = t.n
  f = FactoredLaurent()
  if k == n and l == n:
    for u in range(min(m, p)):
      for s in range(1, n + 1):
        sg = sign_point((-1) ** (s + u + p + m))
        f.add_root(_minus(sg * q_power(2 * s + 2 * u + abs(p - m))))
    return DenomPoly(f)
  if k == n or l == n:
    a, pa = (l, p) if k == n else (k, m)
    mb = m if k == n else p
    sg = sign_point((-1) ** (n + a + pa + mb))
    for u in range(min(pa, mb)):
      for s in range(1, a + 1):
        c = _minus(sg * q_power(n - a + abs(pa - mb) + 2 * (s + u)))
        for r in c.sqrt_pair():
          f.add_root(r)
    return DenomPoly(f)
  for u in range(min(m, p)):
    for s in range(1, min(k, l) + 1):
      for e in (abs(k - l), 2 * n - k - l):
        c = _mq2(e + abs(p - m) + 2 * (s + u))
        for r in c.sqrt_pair():
          f.add_root(r)
  return DenomPoly(f)


def denom_kr(t: AffineType, k: int, m: int, l: int, p: int,
             assume_conjecture: bool = False) -> DenomPoly:
  """d_{k^m, l^p}(z), the denominator between the KR modules V(k^m) and
  V(l^p) in their standard normalization.  Symmetric in the two slots."""
  t._check_node(k)
  t._check_node(l)
  t.require_kr_level(m)
  t.require_kr_level(p)
  if m == 0 or p == 0:
    return DenomPoly()
  if m == 1 and p == 1:
    return denom_fundamental(t, k, l)

  kind, n = t.kind, t.n

  if kind in ('A1', 'D1', 'A2odd', 'A2even', 'D3', 'G1'):
    return _normal_form(t, k, m, l, p, minus_q(1))

  if kind == 'B1':
    if k != n and l != n:
      return _normal_form(t, k, m, l, p, minus_q(1))
    if k == n and l == n:
      return _normal_form(t, k, m, l, p, minus_qs(1))
    if k == n:
      return _b_spin_mixed(t, l, p, m)
    return _b_spin_mixed(t, k, m, p)

  if kind == 'C1':
    if k == n and l == n:
      f = FactoredLaurent()
      sg = sign_point((-1) ** (m + p))
      for u in range(min(m, p)):
        for s in range(1, n + 1):
          f.add_root(sg * qs_power(2 + 2 * abs(m - p) + 2 * s + 4 * u))
      return DenomPoly(f)
    if k == n:
      return _c_spin_mixed(t, l, p, m)
    if l == n:
      return _c_spin_mixed(t, k, m, p)
    if k != l or min(k, l) == 1 or m % 2 == 0 or p % 2 == 0 \
        or min(m, p) == 1:
      return _c_generic(t, k, m, l, p)
    return _c_odd_odd(t, k, m, p, assume_conjecture)

  if kind == 'D2':
    return _d2(t, k, m, l, p)

  raise AssertionError(kind)
