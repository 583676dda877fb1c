"""Kashiwara crystals for the finite types A-D and G2: natural crystals,
spin crystals, tensor products via the bracketing rule, BFS generation of
B(lambda), and highest-weight enumeration.

Elements are words: tuples of atoms, leftmost tensor factor first.  An atom
is either a letter of the natural crystal (int; barred letters negative,
plus 0 in types B and G2) or a spin vector (tuple of +-1) for the spin
nodes of types B and D.  A tableau is encoded by its column reading,
bottom-to-top within a column, columns left to right.

The tensor convention puts the bracket word ")"^phi "("^eps per factor,
leftmost factor first; f acts at the rightmost unmatched ")", e at the
leftmost unmatched "(".
"""

from __future__ import annotations

import re
from functools import lru_cache

from .root_data import DomainError

_G0_RE = re.compile(r'^([ABCDG])(\d+)$')


def parse_g0(s):
  m = _G0_RE.match(s.strip())
  if not m:
    raise DomainError(f'cannot parse finite type {s!r}')
  fam, r = m.group(1), int(m.group(2))
  if fam == 'G' and r != 2:
    raise DomainError('only G2 is supported')
  if fam == 'B' and r < 2 or fam == 'C' and r < 2 or fam == 'D' and r < 3:
    raise DomainError(f'rank {r} too small for type {fam}')
  return (fam, r)


def g0_rank(g0):
  fam, r = g0
  return 2 if fam == 'G' else r


@lru_cache(maxsize=None)
def natural_crystal(g0):
  """The crystal of the vector representation as (letters, f-edge dict)."""
  fam, n = g0
  f = {}
  if fam == 'A':
    letters = list(range(1, n + 2))
    for i in range(1, n + 1):
      f[i, i] = i + 1
  elif fam == 'B':
    letters = list(range(1, n + 1)) + [0] + [-i for i in range(n, 0, -1)]
    for i in range(1, n):
      f[i, i] = i + 1
      f[-(i + 1), i] = -i
    f[n, n] = 0
    f[0, n] = -n
  elif fam == 'C':
    letters = list(range(1, n + 1)) + [-i for i in range(n, 0, -1)]
    for i in range(1, n):
      f[i, i] = i + 1
      f[-(i + 1), i] = -i
    f[n, n] = -n
  elif fam == 'D':
    letters = (list(range(1, n + 1)) + [-i for i in range(n, 0, -1)])
    for i in range(1, n - 1):
      f[i, i] = i + 1
      f[-(i + 1), i] = -i
    f[n - 1, n - 1] = n
    f[n, n] = -(n - 1)
    f[n - 1, n] = -n
    f[-n, n - 1] = -(n - 1)
  elif fam == 'G':
    letters = [1, 2, 3, 0, -3, -2, -1]
    f[1, 1] = 2
    f[2, 2] = 3
    f[3, 1] = 0
    f[0, 1] = -3
    f[-3, 2] = -2
    f[-2, 1] = -1
  else:
    raise DomainError(f'unsupported finite type {g0}')
  return letters, f


def natural_order(g0):
  """The alphabet in the linear order of the crystal chain (type D's fork
  letters n and -n are mutually incomparable but both are listed)."""
  return natural_crystal(g0)[0]


# -- atom-level operators --------------------------------------------------

def _is_spin(atom):
  return isinstance(atom, tuple)


@lru_cache(maxsize=None)
def _atom_f(g0, atom, i):
  fam, n = g0
  if not _is_spin(atom):
    return natural_crystal(g0)[1].get((atom, i))
  s = atom
  if fam == 'B':
    if i < n:
      if s[i - 1] == 1 and s[i] == -1:
        return s[:i - 1] + (-1, 1) + s[i + 1:]
      return None
    return s[:n - 1] + (-1,) if s[n - 1] == 1 else None
  if fam == 'D':
    if i < n:
      if s[i - 1] == 1 and s[i] == -1:
        return s[:i - 1] + (-1, 1) + s[i + 1:]
      return None
    if s[n - 2] == 1 and s[n - 1] == 1:
      return s[:n - 2] + (-1, -1)
    return None
  raise DomainError(f'no spin atoms in type {fam}')


@lru_cache(maxsize=None)
def _atom_e(g0, atom, i):
  fam, n = g0
  if not _is_spin(atom):
    edges = natural_crystal(g0)[1]
    for src, lab in edges:
      if lab == i and edges[src, lab] == atom:
        return src
    return None
  s = atom
  if fam == 'B':
    if i < n:
      if s[i - 1] == -1 and s[i] == 1:
        return s[:i - 1] + (1, -1) + s[i + 1:]
      return None
    return s[:n - 1] + (1,) if s[n - 1] == -1 else None
  if fam == 'D':
    if i < n:
      if s[i - 1] == -1 and s[i] == 1:
        return s[:i - 1] + (1, -1) + s[i + 1:]
      return None
    if s[n - 2] == -1 and s[n - 1] == -1:
      return s[:n - 2] + (1, 1)
    return None
  raise DomainError(f'no spin atoms in type {fam}')


@lru_cache(maxsize=None)
def _atom_phi(g0, atom, i):
  k, b = 0, atom
  while True:
    b = _atom_f(g0, b, i)
    if b is None:
      return k
    k += 1


@lru_cache(maxsize=None)
def _atom_eps(g0, atom, i):
  k, b = 0, atom
  while True:
    b = _atom_e(g0, b, i)
    if b is None:
      return k
    k += 1


def atom_weight(g0, atom):
  r = g0_rank(g0)
  return tuple(_atom_phi(g0, atom, i) - _atom_eps(g0, atom, i)
               for i in range(1, r + 1))


# -- tensor words ----------------------------------------------------------

def _bracket_scan(g0, word, i):
  """Positions of unmatched ')' and '(' for color i; word leftmost-first."""
  open_stack = []
  unmatched_close = []
  for pos, atom in enumerate(word):
    for _ in range(_atom_phi(g0, atom, i)):
      if open_stack:
        open_stack.pop()
      else:
        unmatched_close.append(pos)
    for _ in range(_atom_eps(g0, atom, i)):
      open_stack.append(pos)
  return unmatched_close, open_stack


def kashiwara_f(g0, word, i):
  closes, _ = _bracket_scan(g0, word, i)
  if not closes:
    return None
  pos = closes[-1]
  new = _atom_f(g0, word[pos], i)
  return word[:pos] + (new,) + word[pos + 1:]


def kashiwara_e(g0, word, i):
  _, opens = _bracket_scan(g0, word, i)
  if not opens:
    return None
  pos = opens[0]
  new = _atom_e(g0, word[pos], i)
  return word[:pos] + (new,) + word[pos + 1:]


def word_eps(g0, word, i):
  return len(_bracket_scan(g0, word, i)[1])


def word_phi(g0, word, i):
  return len(_bracket_scan(g0, word, i)[0])


def word_weight(g0, word):
  r = g0_rank(g0)
  wt = [0] * r
  for atom in word:
    for j, c in enumerate(atom_weight(g0, atom)):
      wt[j] += c
  return tuple(wt)


def is_highest_weight(g0, word):
  return all(word_eps(g0, word, i) == 0 for i in range(1, g0_rank(g0) + 1))


# -- weights ---------------------------------------------------------------

_WT_RE = re.compile(r'([+-]?\d*)L(\d+)')


def parse_weight(g0, s):
  """Sums of fundamental weights like '2L1+L3' -> coefficient tuple."""
  r = g0_rank(g0)
  wt = [0] * r
  s = s.strip()
  if s in ('0', ''):
    return tuple(wt)
  if not re.fullmatch(r'(?:[+-]?\d*L\d+)+', s.replace(' ', '')):
    raise DomainError(f'cannot parse weight {s!r}')
  for cm, im in _WT_RE.findall(s.replace(' ', '')):
    c = int(cm) if cm not in ('', '+', '-') else (-1 if cm == '-' else 1)
    i = int(im)
    if not 1 <= i <= r:
      raise DomainError(f'weight node {i} out of range')
    wt[i - 1] += c
  return tuple(wt)


def weight_str(wt):
  parts = []
  for i, c in enumerate(wt, start=1):
    if c == 1:
      parts.append(f'L{i}')
    elif c:
      parts.append(f'{c}L{i}')
  return '+'.join(parts) if parts else '0'


def highest_weight_word(g0, lam):
  """u_lambda as a word: natural columns (tallest first) + spin atoms."""
  fam, n = g0
  r = g0_rank(g0)
  if any(c < 0 for c in lam):
    raise DomainError('weight is not dominant')
  spin_nodes = {'B': {n}, 'D': {n - 1, n}}.get(fam, set())
  word = []
  for i in range(r, 0, -1):
    for _ in range(lam[i - 1]):
      if i in spin_nodes:
        if fam == 'D' and i == n - 1:
          word.append((1,) * (n - 1) + (-1,))
        else:
          word.append((1,) * n)
      else:
        word.extend(range(i, 0, -1))
  return tuple(word)


class CrystalGraph:
  """A generated highest weight crystal: immutable element list in BFS
  order plus its highest weight."""

  def __init__(self, g0, lam, elements):
    self.g0 = g0
    self.lam = tuple(lam)
    self.elements = tuple(elements)

  @property
  def size(self):
    return len(self.elements)

  def weights(self):
    return [word_weight(self.g0, w) for w in self.elements]

  def highest_weight_elements(self):
    return [w for w in self.elements if is_highest_weight(self.g0, w)]

  def __iter__(self):
    return iter(self.elements)

  def __len__(self):
    return len(self.elements)


def generate_crystal(g0, lam, budget: int = 2_000_000):
  """B(lambda) as the closure of u_lambda under the lowering operators."""
  if isinstance(g0, str):
    g0 = parse_g0(g0)
  if isinstance(lam, str):
    lam = parse_weight(g0, lam)
  u = highest_weight_word(g0, lam)
  r = g0_rank(g0)
  seen = {u}
  order = [u]
  frontier = [u]
  while frontier:
    nxt = []
    for w in frontier:
      for i in range(1, r + 1):
        v = kashiwara_f(g0, w, i)
        if v is not None and v not in seen:
          seen.add(v)
          order.append(v)
          nxt.append(v)
    if len(seen) > budget:
      raise DomainError('crystal generation budget exceeded')
    frontier = nxt
  return CrystalGraph(g0, lam, order)


def highest_weight_elements(graphs, target=None):
  """All highest weight elements of graphs[0] x ... x graphs[-1] (leftmost
  factor first), optionally filtered by weight.  Prunes using the fact
  that every right suffix of a highest weight element is highest weight."""
  graphs = list(graphs)
  if not graphs:
    return []
  g0 = graphs[0].g0
  if any(g.g0 != g0 for g in graphs):
    raise DomainError('tensor factors live over different finite types')
  suffixes = [w for w in graphs[-1]
              if is_highest_weight(g0, w)]
  for g in reversed(graphs[:-1]):
    suffixes = [w + suf for suf in suffixes for w in g
                if is_highest_weight(g0, w + suf)]
  if target is not None:
    if isinstance(target, str):
      target = parse_weight(g0, target)
    suffixes = [w for w in suffixes if word_weight(g0, w) == target]
  return suffixes


# -- multiplicity-one verifications ---------------------------------------

def _graphs(g0, lams):
  return [generate_crystal(g0, lam) for lam in lams if any(lam)]


def _fw(r, i, c=1):
  wt = [0] * r
  if c and i:
    wt[i - 1] = c
  return tuple(wt)


def verify_multiplicity_one(rule: str, fam: str, n: int, k: int,
                            l: int, m: int) -> bool:
  """Check that the expected simple factor appears exactly once in the
  classical restriction of the catalogued tensor product.

  rule = '<variant>' with variant in a/b/c/d selecting the displayed
  factorization: (a) the level-m pair, (b) the level-(1, m-1, m) split,
  (c) the level-(m-1, m-1, 1) split, (d) the head itself."""
  if rule not in 'abcd' or len(rule) != 1:
    raise DomainError(f'unknown factorization variant {rule!r}')
  if fam == 'A':
    g0, hi = ('A', n - 1), n - 1
  else:
    g0, hi = (fam, n), n
  r = g0_rank(g0)
  if not (1 <= k <= hi and 1 <= l <= hi and m >= 1):
    raise DomainError('parameters out of range')
  cutoff = n - (1 if fam == 'D' else 0)
  if k + l < cutoff:
    target = _fw(r, k + l, m)
    head, unit_head = [_fw(r, k + l, m)], [_fw(r, k + l, 1)]
  elif fam == 'B' and k + l == n:
    # the spin-end head is the level-2m spin column, so the unit head in
    # the (m-1, m-1, 1) split carries weight 2 L_n
    target = _fw(r, n, 2 * m)
    head, unit_head = [_fw(r, n, 2 * m)], [_fw(r, n, 2)]
  elif fam == 'C' and k + l == n:
    target = _fw(r, n, m)
    head, unit_head = [_fw(r, n, m)], [_fw(r, n, 1)]
  elif fam == 'D' and k + l == n - 1:
    wt = [0] * r
    wt[n - 2] = wt[n - 1] = m
    target = tuple(wt)
    head = [_fw(r, n, m), _fw(r, n - 1, m)]
    unit_head = [tuple(int(j in (n - 2, n - 1)) for j in range(r))]
  else:
    raise DomainError(f'k={k}, l={l} outside the catalogued ranges')
  if rule == 'a':
    lams = [_fw(r, l, m), _fw(r, k, m)]
  elif rule == 'b':
    lams = [_fw(r, k, 1), _fw(r, k, m - 1), _fw(r, l, m)]
  elif rule == 'c':
    lams = [_fw(r, k, m - 1), _fw(r, l, m - 1)] + unit_head
  else:
    lams = head
  hw = highest_weight_elements(_graphs(g0, lams), target)
  return len(hw) == 1


def verify_multiplicity_one_spin(rule: str, fam: str, n: int,
                                 m: int) -> bool:
  """Spin analogue at the diagram end: type C with target 2m L_{n-2},
  type D with target m L_{n-3}; variants a/b/c/d as above."""
  if rule not in 'abcd' or len(rule) != 1:
    raise DomainError(f'unknown factorization variant {rule!r}')
  if fam == 'C':
    if n < 3:
      raise DomainError('type C spin verification needs n >= 3')
    g0, r = ('C', n), n
    target = _fw(r, n - 2, 2 * m)
    lams = {
        'a': [_fw(r, n, m), _fw(r, n, m)],
        'b': [_fw(r, n, m - 1), _fw(r, n, m), _fw(r, n, 1)],
        'c': [_fw(r, n, m - 1), _fw(r, n, m - 1), _fw(r, n - 2, 2)],
        'd': [target],
    }[rule]
  elif fam == 'D':
    if n < 4:
      raise DomainError('type D spin verification needs n >= 4')
    g0, r = ('D', n), n
    target = _fw(r, n - 3, m)
    lams = {
        'a': [_fw(r, n, m), _fw(r, n - 1, m)],
        'b': [_fw(r, n - 1, m - 1), _fw(r, n, m), _fw(r, n - 1, 1)],
        'c': [_fw(r, n - 1, m - 1), _fw(r, n, m - 1), _fw(r, n - 3, 1)],
        'd': [target],
    }[rule]
  else:
    raise DomainError('spin verification is for types C and D')
  hw = highest_weight_elements(_graphs(g0, lams), target)
  return len(hw) == 1


def atom_str(atom):
  if _is_spin(atom):
    return '(' + ','.join('+' if s > 0 else '-' for s in atom) + ')'
  if atom < 0:
    return f'{-atom}b'
  return str(atom)


def word_str(word):
  return '.'.join(atom_str(a) for a in word)
