"""Repetition quivers, compatible readings, i-boxes, and the dictionary
between quiver vertices and fundamental modules.

The quiver lives on the *unfolded* simply-laced diagram (rows); each row
folds onto a node of g_0 and repeats with period 2d, d the orbit size.
Readings are lazy bidirectional enumerations Z -> vertices refining the
arrow order; i-boxes [a,b] with equal-row endpoints produce KR modules.
"""

from __future__ import annotations

from .qfield import QPoint, minus_q, minus_qs, minus_qt, qs_power, sign_point
from .root_data import AffineType, DomainError
from .invariants import KRModule

_STRATEGIES = ('SE', 'NE', 'N')

# twisted types borrow the repetition quiver of the untwisted algebra with
# the same unfolded diagram
_HOST = {'A2odd': 'A1', 'A2even': 'A1', 'D2': 'D1', 'D3': 'D1'}


class RepetitionQuiver:
  """Vertices (row, p) with p = xi_row mod 2*d(row); arrows step by
  min(d, d') between adjacent rows."""

  def __init__(self, t: AffineType, parity: int = 0):
    self.type = t
    kind = t.kind
    host = _HOST.get(kind, kind)
    n = t.n
    if host == 'A1':
      N = t.sub if kind == 'A1' else (2 * n if kind == 'A2even' else 2 * n - 1)
      self.rows = N
      self._color = list(range(N + 1))
      self._d = [1] * (N + 1)
      self._edges = [(r, r + 1) for r in range(1, N)]
      self._xi = [0] + [r - N for r in range(1, N + 1)]
    elif host == 'B1':
      N = 2 * n - 1
      self.rows = N
      self._color = [min(r, 2 * n - r) for r in range(N + 1)]
      self._d = [1 if self._color[r] == n else 2 for r in range(N + 1)]
      self._edges = [(r, r + 1) for r in range(1, N)]
      self._xi = [0] + [2 * (r - n) - 2 if r < n else
                        (-3 if r == n else 2 * (n - r))
                        for r in range(1, N + 1)]
    elif host == 'C1':
      N = n + 1
      self.rows = N
      self._color = [min(r, n) for r in range(N + 1)]
      self._d = [2 if self._color[r] == n else 1 for r in range(N + 1)]
      self._edges = [(r, r + 1) for r in range(1, n)] + [(n - 1, n + 1)]
      c = -3 if n % 2 else -2
      self._xi = [0] + [c - (n - 1 - r) for r in range(1, n)] + [c - 1, c + 1]
    elif host == 'D1':
      m = t.sub if kind == 'D3' else (n + 1 if kind == 'D2' else n)
      self.rows = m
      self._color = list(range(m + 1))
      self._d = [1] * (m + 1)
      self._edges = [(r, r + 1) for r in range(1, m - 1)] + [(m - 2, m)]
      self._xi = [0] + [r - m + 1 for r in range(1, m - 1)] + [0, 0]
    elif host == 'G1':
      self.rows = 4
      self._color = [0, 1, 2, 1, 1]
      self._d = [0, 3, 1, 3, 3]
      self._edges = [(1, 2), (2, 3), (2, 4)]
      self._xi = [0, -3, -2, -1, 1]
    else:
      raise AssertionError
    self._xi = [x + parity for x in self._xi]
    self._adj = {r: [] for r in range(1, self.rows + 1)}
    for r, s in self._edges:
      self._adj[r].append(s)
      self._adj[s].append(r)
    # diagonal staircase used by the SE/NE readings
    self._w = [0] * (self.rows + 1)
    seen = {1}
    stack = [1]
    while stack:
      r = stack.pop()
      for s in self._adj[r]:
        if s not in seen:
          seen.add(s)
          self._w[s] = self._w[r] + 2 * min(self._d[r], self._d[s])
          stack.append(s)

  def color(self, r: int) -> int:
    self._check_row(r)
    return self._color[r]

  def row_d(self, r: int) -> int:
    self._check_row(r)
    return self._d[r]

  def _check_row(self, r):
    if not 1 <= r <= self.rows:
      raise DomainError(f'row {r} out of range for the {self.type} quiver')

  def has_vertex(self, r: int, p: int) -> bool:
    self._check_row(r)
    return (p - self._xi[r]) % (2 * self._d[r]) == 0

  def arrows_from(self, r: int, p: int):
    if not self.has_vertex(r, p):
      return []
    out = []
    for s in self._adj[r]:
      q = p + min(self._d[r], self._d[s])
      if self.has_vertex(s, q):
        out.append((s, q))
    return out

  def p_le(self, r: int, p: int) -> int:
    """Largest lattice point of row r that is <= p."""
    self._check_row(r)
    return p - (p - self._xi[r]) % (2 * self._d[r])

  def p_ge(self, r: int, p: int) -> int:
    self._check_row(r)
    return p + (self._xi[r] - p) % (2 * self._d[r])

  def td(self, r: int, s: int) -> int:
    """Sum of min(d, d') along the unique row path from r to s."""
    self._check_row(r)
    self._check_row(s)
    prev = {r: None}
    stack = [r]
    while s not in prev:
      u = stack.pop()
      for v in self._adj[u]:
        if v not in prev:
          prev[v] = u
          stack.append(v)
    total = 0
    v = s
    while prev[v] is not None:
      total += min(self._d[v], self._d[prev[v]])
      v = prev[v]
    return total

  def point(self, r: int, p: int) -> QPoint:
    """Spectral parameter of the fundamental module sitting at (r, p)."""
    if not self.has_vertex(r, p):
      raise DomainError(f'({r},{p}) is not a vertex of the {self.type} quiver')
    kind = self.type.kind
    if kind in ('A1', 'D1'):
      return minus_q(p)
    if kind == 'B1':
      return sign_point(-1 if (self.type.n + self._color[r]) % 2 else 1) \
          * qs_power(p)
    if kind == 'C1':
      return minus_qs(p)
    if kind == 'G1':
      return minus_qt(p)
    raise DomainError(
        f'{self.type}: the fundamental dictionary is implemented for '
        'untwisted types only')

  def fundamental(self, r: int, p: int) -> KRModule:
    return KRModule.make(self.type, self._color[r], 1, self.point(r, p))

  def locate(self, param: QPoint, node: int):
    """Inverse dictionary: the vertex (r, p) whose fundamental module has
    the given node and parameter."""
    for r in range(1, self.rows + 1):
      if self._color[r] != node:
        continue
      step = {'A1': 1, 'D1': 1, 'B1': 2, 'C1': 2, 'G1': 3}[self.type.kind]
      p = param.qexp * step
      if p.denominator != 1:
        continue
      p = p.numerator
      if self.has_vertex(r, p) and self.point(r, p) == param:
        return (r, p)
    raise DomainError(f'{param.pretty()} is not a node-{node} vertex parameter')


class Reading:
  """A compatible reading: a bijection Z -> quiver vertices refining the
  arrow order, materialized lazily in both directions.

  Strategies sort by a scalar key that weakly increases along arrows:
  N by p itself (ties up the column), SE by 2p - w_r (diagonal sweeps top
  to bottom), NE by 2p + w_r (sweeps bottom to top).  Index 1 defaults to
  the first vertex with p >= 0.
  """

  def __init__(self, quiver: RepetitionQuiver, strategy: str, anchor=None):
    if strategy not in _STRATEGIES:
      raise DomainError(f'unknown reading strategy {strategy!r}')
    self.quiver = quiver
    self.strategy = strategy
    self._items = {}
    self._index = {}
    if anchor is None:
      anchor = self._default_anchor()
    else:
      anchor = self._parse_anchor(anchor)
    k, pos = self._key(*anchor)
    members = self._group(k)
    i = members.index(anchor)
    # index 1 goes to the anchor; the rest of its group spreads around it
    for j, v in enumerate(members):
      self._assign(1 + j - i, v)
    self._up_scalar, self._up_next = k, len(members) - i + 1  # next free up
    self._dn_scalar, self._dn_next = k, 1 - i

  # -- key machinery ----------------------------------------------------

  def _key(self, r, p):
    w = self.quiver._w[r]
    if self.strategy == 'N':
      return p, r
    if self.strategy == 'SE':
      return 2 * p - w, r
    return 2 * p + w, -r

  def _group(self, scalar):
    """Vertices with the given scalar key, in tie-break order."""
    q = self.quiver
    out = []
    rows = range(1, q.rows + 1)
    if self.strategy == 'NE':
      rows = reversed(rows)
    for r in rows:
      if self.strategy == 'N':
        p = scalar
      else:
        tp = scalar + q._w[r] if self.strategy == 'SE' else scalar - q._w[r]
        if tp % 2:
          continue
        p = tp // 2
      if q.has_vertex(r, p):
        out.append((r, p))
    return out

  def _step(self):
    return 1 if self.strategy == 'N' else 2

  def _default_anchor(self):
    q = self.quiver
    if self.strategy == 'SE':
      scalar = -max(q._w)
    else:
      scalar = 0
    while True:
      for v in self._group(scalar):
        if v[1] >= 0:
          return v
      scalar += self._step()

  def _parse_anchor(self, anchor):
    if isinstance(anchor, str):
      r, p = (int(x) for x in anchor.split(':'))
    else:
      r, p = anchor
    if not self.quiver.has_vertex(r, p):
      raise DomainError(f'anchor ({r},{p}) is not a quiver vertex')
    return (r, p)

  def _assign(self, idx, v):
    self._items[idx] = v
    self._index[v] = idx

  def _grow_up(self):
    while True:
      self._up_scalar += self._step()
      g = self._group(self._up_scalar)
      if g:
        for v in g:
          self._assign(self._up_next, v)
          self._up_next += 1
        return

  def _grow_down(self):
    while True:
      self._dn_scalar -= self._step()
      g = self._group(self._dn_scalar)
      if g:
        for v in reversed(g):
          self._dn_next -= 1
          self._assign(self._dn_next, v)
        return

  # -- public interface ---------------------------------------------------

  def __getitem__(self, k: int):
    while k >= self._up_next:
      self._grow_up()
    while k < self._dn_next:
      self._grow_down()
    return self._items[k]

  def index_of(self, v) -> int:
    r, p = v
    if not self.quiver.has_vertex(r, p):
      raise DomainError(f'({r},{p}) is not a quiver vertex')
    scalar, _ = self._key(r, p)
    while self._up_scalar < scalar:
      self._grow_up()
    while self._dn_scalar > scalar:
      self._grow_down()
    return self._index[(r, p)]

  def row(self, k: int) -> int:
    return self[k][0]

  def p(self, k: int) -> int:
    return self[k][1]

  def color(self, k: int) -> int:
    return self.quiver.color(self.row(k))

  def fundamental(self, k: int) -> KRModule:
    return self.quiver.fundamental(*self[k])

  def plus(self, s: int) -> int:
    """s^+: the next index on the same row (p advances by 2d)."""
    r, p = self[s]
    return self.index_of((r, p + 2 * self.quiver.row_d(r)))

  def minus(self, s: int) -> int:
    r, p = self[s]
    return self.index_of((r, p - 2 * self.quiver.row_d(r)))

  def row_plus(self, s: int, j: int) -> int:
    """s(j)^+: the least t >= s with row j."""
    self.quiver._check_row(j)
    t = s
    while self.row(t) != j:
      t += 1
    return t

  def row_minus(self, s: int, j: int) -> int:
    self.quiver._check_row(j)
    t = s
    while self.row(t) != j:
      t -= 1
    return t

  def check_prefix(self, lo: int, hi: int) -> bool:
    """Every arrow within the materialized window goes forward."""
    for k in range(lo, hi + 1):
      for v in self.quiver.arrows_from(*self[k]):
        if v in self._index and not lo <= self._index[v] <= hi + 1:
          continue
        if self.index_of(v) <= k:
          return False
    return True


class IBox:
  """An interval [a, b] of a reading whose endpoints sit on one row; the
  head of the corresponding tensor product is a KR module."""

  def __init__(self, reading: Reading, a: int, b: int):
    if a > b:
      raise DomainError('i-box endpoints must satisfy a <= b')
    if reading.row(a) != reading.row(b):
      raise DomainError('i-box endpoints must lie on one row')
    self.reading = reading
    self.a = a
    self.b = b

  @property
  def row(self) -> int:
    return self.reading.row(self.a)

  @property
  def level(self) -> int:
    return sum(1 for s in range(self.a, self.b + 1)
               if self.reading.row(s) == self.row)

  def module(self) -> KRModule:
    q = self.reading.quiver
    r, pa = self.reading[self.a]
    m = self.level
    # parameter = string center: lowest constituent times (-k)^{m-1}
    x = q.point(r, pa) * q.type.kr_shift_point(q.color(r)) ** (m - 1)
    return KRModule.make(q.type, q.color(r), m, x)

  def reach(self):
    return (self.reading.p(self.a), self.reading.p(self.b))

  def extended_reach(self, j: int):
    """The j-extended reach: reach widened by the folded distance to row j
    and one further lattice step on each side."""
    q = self.reading.quiver
    pa, pb = self.reach()
    t = q.td(self.row, j)
    dj = q.row_d(j)
    return (q.p_le(j, pa - t) - 2 * dj, q.p_ge(j, pb + t) + 2 * dj)

  def a_minus(self) -> int:
    return self.reading.minus(self.a)

  def b_plus(self) -> int:
    return self.reading.plus(self.b)


def repetition_quiver(t: AffineType, parity: int = 0) -> RepetitionQuiver:
  return RepetitionQuiver(t, parity)


def compatible_reading(t: AffineType, strategy: str, anchor=None,
                       parity: int = 0) -> Reading:
  return Reading(RepetitionQuiver(t, parity), strategy, anchor)


def ibox_module(r: Reading, a: int, b: int) -> KRModule:
  return IBox(r, a, b).module()


def _as_box(r: Reading, M):
  """Reconstruct the i-box data (row, p_a, p_b) of a KR module."""
  q = r.quiver
  low = M.param * q.type.kr_shift_point(M.node) ** (1 - M.level)
  row, pa = q.locate(low, M.node)
  return row, pa, pa + 2 * q.row_d(row) * (M.level - 1)


def reach(M, r: Reading = None):
  if isinstance(M, IBox):
    return M.reach()
  _, pa, pb = _as_box(r, M)
  return (pa, pb)


def extended_reach(M, j: int, r: Reading = None):
  if isinstance(M, IBox):
    return M.extended_reach(j)
  q = r.quiver
  row, pa, pb = _as_box(r, M)
  t = q.td(row, j)
  dj = q.row_d(j)
  return (q.p_le(j, pa - t) - 2 * dj, q.p_ge(j, pb + t) + 2 * dj)


def iboxes_commute(b1: IBox, b2: IBox) -> bool:
  if b1.reading is not b2.reading:
    raise DomainError('i-boxes must live on one reading')
  return (b1.a_minus() < b2.a and b2.b < b1.b_plus()) or \
         (b2.a_minus() < b1.a and b1.b < b2.b_plus())
