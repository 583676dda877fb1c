"""Tableau q-characters for the quantum affine algebra of type B_n^{(1)}:
rectangle characters as sums over semistandard fillings, dominant-monomial
extraction, and the uniqueness checks behind the folded higher rules.

A monomial is a finite map (node i, spectral point a) -> exponent of
Y_{i,a}; it is stored canonically as a sorted tuple of ((i, a), e) pairs
with the zero exponents dropped.  Characters are multisets (Counters) of
canonical monomials.
"""

from __future__ import annotations

from collections import Counter

from .qfield import QPoint, ONE, MINUS_ONE, minus_q, qs_power
from .root_data import DomainError


def _alphabet(n):
  """The ordered B_n letters 1 < ... < n < 0 < -n < ... < -1."""
  return list(range(1, n + 1)) + [0] + list(range(-n, 0))


def _idx(n, i):
  if 1 <= i <= n:
    return i - 1
  if i == 0:
    return n
  if -n <= i <= -1:
    return 2 * n + 1 + i
  raise DomainError(f'letter {i} outside the B_{n} alphabet')


def box_weight(n, i, r, j, K, M, a):
  """The Y-weight of letter i in row r, column j of a K x M rectangle
  anchored at spectral parameter a; Y_{0,*} = 1 is dropped."""
  _idx(n, i)  # validates
  ap = a * qs_power(-2 * M + 4 * j + 2 * K - 4 * r)
  out = {}

  def put(node, point, e):
    if node:
      key = (node, point)
      out[key] = out.get(key, 0) + e

  if 1 <= i <= n - 1:
    put(i - 1, ap * qs_power(2 * i), -1)
    put(i, ap * qs_power(2 * (i - 1)), 1)
  elif i == n:
    put(n - 1, ap * qs_power(2 * n), -1)
    put(n, ap * qs_power(2 * n - 3), 1)
    put(n, ap * qs_power(2 * n - 1), 1)
  elif i == 0:
    put(n, ap * qs_power(2 * n + 1), -1)
    put(n, ap * qs_power(2 * n - 3), 1)
  elif i == -n:
    put(n - 1, ap * qs_power(2 * n - 2), 1)
    put(n, ap * qs_power(2 * n - 1), -1)
    put(n, ap * qs_power(2 * n + 1), -1)
  else:
    ib = -i
    put(ib - 1, ap * qs_power(2 * (2 * n - ib - 1)), 1)
    put(ib, ap * qs_power(2 * (2 * n - ib)), -1)
  return out


def _canonical(mono):
  items = [(k, e) for k, e in mono.items() if e]
  items.sort(key=lambda kv: (kv[0][0], kv[0][1].qexp, kv[0][1].phase))
  return tuple(items)


def _merge(m1, m2):
  out = dict(m1)
  for k, e in m2.items():
    out[k] = out.get(k, 0) + e
    if not out[k]:
      del out[k]
  return out


def _columns(n, K):
  """All admissible columns of height K, top to bottom: strictly
  increasing in the B-order except that 0 may repeat."""
  letters = _alphabet(n)
  cols = []

  def rec(col):
    if len(col) == K:
      cols.append(tuple(col))
      return
    lo = -1 if not col else _idx(n, col[-1])
    for i in letters:
      x = _idx(n, i)
      if x > lo or (x == lo and i == 0):
        col.append(i)
        rec(col)
        col.pop()
  rec([])
  return cols


def _row_compatible(n, left, right):
  # rows weakly increase, but 0 cannot repeat within a row
  for u, v in zip(left, right):
    if _idx(n, u) > _idx(n, v) or (u == v == 0):
      return False
  return True


def qchar_rectangle(n, K, M, a=ONE, budget=500_000):
  """The q-character of the K x M rectangle at parameter a, as a Counter
  of canonical monomials over semistandard fillings."""
  if not 0 <= K <= 2 * n - 1:
    raise DomainError(f'column height {K} exceeds the B_{n} range')
  if M < 0:
    raise DomainError('negative width')
  if K == 0 or M == 0:
    return Counter({(): 1})
  cols = _columns(n, K)
  colwt = {}

  def weight(col, j):
    if (col, j) not in colwt:
      m = {}
      for r, i in enumerate(col, start=1):
        m = _merge(m, box_weight(n, i, r, j, K, M, a))
      colwt[col, j] = m
    return colwt[col, j]

  out = Counter()
  count = 0

  def rec(j, prev, mono):
    nonlocal count
    if j > M:
      out[_canonical(mono)] += 1
      count += 1
      if count > budget:
        raise DomainError('tableau budget exceeded')
      return
    for col in cols:
      if prev is None or _row_compatible(n, prev, col):
        rec(j + 1, col, _merge(mono, weight(col, j)))
  rec(1, None, {})
  return out


def convolve(*chars):
  """Pointwise product of q-characters (multiset convolution)."""
  chars = sorted(chars, key=len)
  acc = Counter({(): 1})
  for ch in chars:
    nxt = Counter()
    for m1, c1 in acc.items():
      d1 = dict(m1)
      for m2, c2 in ch.items():
        nxt[_canonical(_merge(d1, dict(m2)))] += c1 * c2
    acc = nxt
  return acc


def dominant_monomials(char):
  """The dominant part of a q-character: monomials with all exponents
  nonnegative (zero exponents are never stored, so all positive)."""
  return Counter({m: c for m, c in char.items()
                  if all(e > 0 for _, e in m)})


def unique_dominant(char):
  dom = dominant_monomials(char)
  if len(dom) != 1 or sum(dom.values()) != 1:
    raise DomainError(f'expected a unique dominant monomial, got {dom}')
  return next(iter(dom))


def dominant_rectangle(n, K, M, a=ONE):
  """Closed form of the rectangle's dominant monomial for K < n (at the
  node n the column picks up two spin factors per box instead)."""
  if not 1 <= K <= n - 1:
    raise DomainError('closed form requires a column height within 1..n-1')
  mono = {}
  for j in range(1, M + 1):
    key = (K, a * qs_power(4 * j - 2 - 2 * M))
    mono[key] = mono.get(key, 0) + 1
  return _canonical(mono)


def folded_product_counts(n, k, l, m, budget=500_000):
  """Count how often the dominant monomial of the folded (k+l)-rectangle
  of width m at parameter -1 appears in each of the three catalogued
  tensor factorizations; returns a dict over the variants 'a', 'b', 'c'.

  A rectangle label with height K > n denotes the module at node 2n-K
  with the same spectral parameter, so every factor is rendered as a
  short rectangle.  The rectangle anchor is the module's parameter times
  (-1)^{K+1} (the per-node sign gauge of the type-B Y-variables) times
  (-1)^{M+1} (the sign the width-M string puts on its odd q-powers)."""
  if not (1 <= l < n < k < 2 * n - 1 and k + l <= 2 * n - 1 and m >= 1):
    raise DomainError('parameters outside the folded catalogue range')

  def rect(K, M, a):
    if K > n:
      K = 2 * n - K
    if (K + M) % 2:
      a = MINUS_ONE * a
    return qchar_rectangle(n, K, M, a, budget)

  target = unique_dominant(rect(k + l, m, MINUS_ONE))
  mq = minus_q
  neg = lambda p: MINUS_ONE * p
  prods = {
      'a': [rect(l, m, mq(1 - k)), rect(k, m, neg(mq(l)))],
      'b': [rect(k, m - 1, neg(mq(l - 1))), rect(l, m, mq(1 - k)),
            rect(k, 1, neg(mq(m + l - 1)))],
      'c': [rect(k, m - 1, neg(mq(l - 1))), rect(l, m - 1, mq(-k)),
            rect(k + l, 1, neg(mq(m - 1)))],
  }
  return {v: convolve(*chars)[target] for v, chars in prods.items()}
