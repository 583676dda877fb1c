"""Universal coefficients a_{k^m, l^p}(z) of normalized R-matrices, as
infinite phi-products with modulus (p*)^2.

Two independent routes are provided:

* `univ_coeff_derived` builds a from the denominator d_{k^m,l^p} and its
  dual-twisted partner d_{(k*)^m,l^p}:

      a(z) = prod_nu phi(p* y_nu z) phi(p* ybar_nu z)
             / prod_nu phi(x_nu z) phi(p*^2 xbar_nu z)

  with x_nu the roots of d_{k^m,l^p} and y_nu those of d_{(k*)^m,l^p}.

* `univ_coeff_closed` evaluates the catalogued closed product formulas
  (bracket factors ((-q)^a z; p*^2)_oo and friends): untwisted classical
  types at all levels, twisted classical types at fundamental level.

The two must agree exactly after normalization; tests enforce this.
"""

from __future__ import annotations

from fractions import Fraction

from .qfield import (QPoint, PhiProduct, MINUS_ONE, minus_q, minus_qs,
                     qs_power, q_power, sign_point, to_phi_product)
from .root_data import AffineType, DomainError
from .denominators import denom_kr


def _resolved_roots(t, k, m, l, p, assume_conjecture):
  d = denom_kr(t, k, m, l, p, assume_conjecture=assume_conjecture)
  if not d.is_exact():
    raise DomainError(
        'denominator has ambiguous multiplicities; pass the conjecture flag')
  return d.certain


def univ_coeff_derived(t: AffineType, k: int, m: int, l: int, p: int,
                       assume_conjecture: bool = False) -> PhiProduct:
  """a_{k^m, l^p}(z) from the two denominator polynomials."""
  ps = t.p_star()
  a = PhiProduct(t.p_tilde())
  dx = _resolved_roots(t, k, m, l, p, assume_conjecture)
  dy = _resolved_roots(t, t.node_dual(k), m, l, p, assume_conjecture)
  for y, mult in dy.roots.items():
    a.add(ps * y, mult)
    a.add(ps * y.bar(), mult)
  for x, mult in dx.roots.items():
    a.add(x, -mult)
    a.add(ps * ps * x.bar(), -mult)
  return a


# ----------------------------------------------------------------------
# closed forms


class _Builder:
  """Accumulates Pochhammer factors (point * z; p*^2)_oo^{+-1}."""

  def __init__(self, t: AffineType):
    self.acc = PhiProduct(t.p_tilde())

  def mq(self, a, n=1):
    # [a] = ((-q)^a z; .)_oo
    self.acc.add(minus_q(a), n)

  def nmq(self, a, n=1):
    # (-(-q)^a z; .)_oo
    self.acc.add(MINUS_ONE * minus_q(a), n)

  def mqs(self, a, n=1):
    # ((-qs)^a z; .)_oo
    self.acc.add(minus_qs(a), n)

  def sqs(self, sign_exp, a, n=1):
    # ((-1)^sign_exp qs^a z; .)_oo
    self.acc.add(sign_point((-1) ** sign_exp) * qs_power(a), n)

  def mq2(self, a, n=1):
    # ((-q^2)^a z; .)_oo, a possibly half-integral
    self.acc.add((MINUS_ONE * q_power(2)) ** Fraction(a), n)

  def nmq2(self, a, n=1):
    self.acc.add(MINUS_ONE * (MINUS_ONE * q_power(2)) ** Fraction(a), n)

  def imq2(self, a, n=1):
    # (i(-q^2)^a z; .)(-i(-q^2)^a z; .)
    base = (MINUS_ONE * q_power(2)) ** Fraction(a)
    self.acc.add(QPoint(0, Fraction(1, 4)) * base, n)
    self.acc.add(QPoint(0, Fraction(3, 4)) * base, n)

  def ratio4(self, fn, n1, n2, d1, d2):
    fn(n1)
    fn(n2)
    fn(d1, -1)
    fn(d2, -1)


def _closed_A(t, k, m, l, p):
  n = t.sub + 1
  b = _Builder(t)
  for s in range(1, min(k, l, n - k, n - l) + 1):
    for u in range(min(p, m)):
      w = abs(p - m) + 2 * (s + u)
      b.ratio4(b.mq,
               n + abs(n - k - l) + w, n - abs(n - k - l) - w,
               abs(k - l) + w, 2 * n - abs(k - l) - w)
  return b.acc


def _closed_B(t, k, m, l, p):
  n = t.n
  b = _Builder(t)
  if k != n and l != n:
    for s in range(1, min(k, l) + 1):
      for u in range(min(p, m)):
        w = abs(m - p) + 2 * (s + u)
        b.ratio4(b.mq, k + l - w, 4 * n - k - l - 2 + w,
                 abs(k - l) + w, 4 * n - abs(k - l) - 2 - w)
        b.ratio4(b.nmq,
                 2 * n - abs(k - l) - 1 - w, 2 * n + abs(k - l) - 1 + w,
                 2 * n + k + l - 1 - w, 2 * n - k - l - 1 + w)
    return b.acc
  if k == n and l == n:
    e = abs(m - p)
    sq = lambda a, mult=1: b.sqs(e, a, mult)
    for s in range(1, n + 1):
      for u in range(min(p, m)):
        b.ratio4(sq,
                 4 * n + 4 * s + 2 * u - 4 + e, 4 * n - 4 * s - 2 * u - e,
                 4 * s + 2 * u - 2 + e, 8 * n - 2 - 4 * s - 2 * u - e)
    return b.acc
  # mixed: a_{a^pa, n^mm} with a < n
  a, pa, mm = (l, p, m) if k == n else (k, m, p)
  dpar = mm + n + a + pa
  sq = lambda x, mult=1: b.sqs(dpar, x, mult)
  for s in range(1, a + 1):
    for u in range(min(2 * pa, mm)):
      w = abs(2 * pa - mm) + 4 * s + 2 * u
      b.ratio4(sq, 2 * n + 2 * a - w, 6 * n - 2 * a - 4 + w,
               2 * n - 2 * a - 2 + w, 6 * n - 2 + 2 * a - w)
  return b.acc


def _closed_C(t, k, m, l, p):
  n = t.n
  b = _Builder(t)
  if k != n and l != n:
    for s in range(1, min(k, l) + 1):
      for u in range(min(p, m)):
        w = abs(m - p) + 2 * s + 2 * u
        b.ratio4(b.mqs, k + l - w, 4 * n + 4 - k - l + w,
                 abs(k - l) + w, 4 * n + 4 - abs(k - l) - w)
        b.ratio4(b.mqs,
                 2 * n + 2 + abs(k - l) + w, 2 * n + 2 - abs(k - l) - w,
                 2 * n + 2 - k - l + w, 2 * n + 2 + k + l - w)
    return b.acc
  if k == n and l == n:
    e = m + p
    sq = lambda a, mult=1: b.sqs(e, a, mult)
    for s in range(1, n + 1):
      for u in range(min(p, m)):
        w = 2 * abs(m - p) + 2 * s + 4 * u
        b.ratio4(sq, 2 * n + 4 + w, 2 * n - w,
                 2 + w, 4 * n + 2 - w)
    return b.acc
  a, pa, mm = (l, p, m) if k == n else (k, m, p)
  dpar = mm + n + a + pa
  sq = lambda x, mult=1: b.sqs(dpar, x, mult)
  for s in range(1, a + 1):
    for u in range(min(pa, 2 * mm)):
      w = abs(2 * mm - pa) + 2 * s + 2 * u
      b.ratio4(sq, n + 1 + a - w, 3 * n + 3 - a + w,
               n + 1 - a + w, 3 * n + 3 + a - w)
  return b.acc


def _closed_D(t, k, m, l, p):
  n = t.n
  spin = {n - 1, n}
  b = _Builder(t)
  if k not in spin and l not in spin:
    for s in range(1, min(k, l) + 1):
      for u in range(min(p, m)):
        w = abs(m - p) + 2 * (s + u)
        b.ratio4(b.mq, k + l - w, 2 * n - 2 + abs(k - l) + w,
                 abs(k - l) + w, 2 * n - 2 + k + l - w)
        b.ratio4(b.mq,
                 2 * n - 2 - abs(k - l) - w, 4 * n - k - l - 4 + w,
                 2 * n - k - l - 2 + w, 4 * n - 4 - abs(k - l) - w)
    return b.acc
  if k in spin and l in spin:
    e = abs(m - p)
    if k == l:
      for u in range(min(m, p)):
        for s in range(1, n // 2 + 1):
          b.ratio4(b.mq,
                   2 * n + 4 * s + 2 * u - 4 + e, 2 * n - 4 * s - 2 * u - e,
                   4 * s + 2 * u - 2 + e, 4 * n - 2 - 4 * s - 2 * u - e)
    else:
      for u in range(min(m, p)):
        for s in range(1, (n - 1) // 2 + 1):
          b.ratio4(b.mq,
                   2 * n + 4 * s + 2 * u + e - 2, 2 * n - 4 * s - 2 * u - e - 2,
                   4 * s + 2 * u + e, 4 * n - 4 * s - 2 * u - e - 4)
    return b.acc
  a, pa, mm = (l, p, m) if k in spin else (k, m, p)
  for s in range(1, a + 1):
    for u in range(min(pa, mm)):
      w = abs(pa - mm) + 2 * (s + u)
      b.ratio4(b.mq, 3 * n - a - 3 + w, n - 1 + a - w,
               n - a - 1 + w, 3 * n - 3 + a - w)
  return b.acc


def _closed_fund_twisted(t, k, l):
  n = t.n
  b = _Builder(t)
  kind = t.kind
  if kind == 'A2odd':
    b.ratio4(b.mq, abs(k - l), 4 * n - abs(k - l),
             k + l, 4 * n - k - l)
    b.ratio4(b.nmq, 2 * n + k + l, 2 * n - k - l,
             2 * n + abs(k - l), 2 * n - abs(k - l))
  elif kind == 'A2even':
    b.ratio4(b.mq, abs(k - l), 4 * n + 2 - abs(k - l),
             k + l, 4 * n + 2 - k - l)
    b.ratio4(b.mq, 2 * n + 1 + k + l, 2 * n + 1 - k - l,
             2 * n + 1 + abs(k - l), 2 * n + 1 - abs(k - l))
  elif kind == 'D2':
    if k == n and l == n:
      for s in range(1, n + 1):
        b.mq2(n + s)
        b.mq2(n - s)
        b.nmq2(s, -1)
        b.nmq2(2 * n - s, -1)
    elif k == n or l == n:
      a = k if l == n else l
      b.ratio4(b.imq2,
               Fraction(3 * n + a, 2), Fraction(n - a, 2),
               Fraction(3 * n - a, 2), Fraction(n + a, 2))
    else:
      hd = Fraction(abs(k - l), 2)
      hs = Fraction(k + l, 2)
      for fn in (b.mq2, b.nmq2):
        b.ratio4(fn, hd, 2 * n - hd, hs, 2 * n - hs)
        b.ratio4(fn, n + hs, n - hs, n + hd, n - hd)
  else:
    raise DomainError(f'no catalogued closed form for {t}')
  return b.acc


def univ_coeff_closed(t: AffineType, k: int, m: int, l: int,
                      p: int) -> PhiProduct:
  """a_{k^m, l^p}(z) from the catalogued closed product formulas."""
  t._check_node(k)
  t._check_node(l)
  t.require_kr_level(m)
  t.require_kr_level(p)
  kind = t.kind
  if kind == 'A1':
    return _closed_A(t, k, m, l, p)
  if kind == 'B1':
    return _closed_B(t, k, m, l, p)
  if kind == 'C1':
    return _closed_C(t, k, m, l, p)
  if kind == 'D1':
    return _closed_D(t, k, m, l, p)
  if m == 1 and p == 1 and kind in ('A2odd', 'A2even', 'D2'):
    return _closed_fund_twisted(t, k, l)
  raise DomainError(f'no catalogued closed form for {t} at levels {m},{p}')


def renorm_coeff(M, N, assume_conjecture: bool = False):
  """The renormalizing coefficient c_{M,N}(z) = d_{M,N}(z)/a_{M,N}(z) for
  parameterized KR modules, as the pair (denominator with the parameter
  shift applied, phi-product of c with the parameter shift applied)."""
  t = M.type
  if t != N.type:
    raise DomainError('modules live over different affine types')
  d = denom_kr(t, M.node, M.level, N.node, N.level,
               assume_conjecture=assume_conjecture)
  if not d.is_exact():
    raise DomainError(
        'denominator has ambiguous multiplicities; pass the conjecture flag')
  a = univ_coeff_derived(t, M.node, M.level, N.node, N.level,
                         assume_conjecture=assume_conjecture)
  c = to_phi_product(d.certain, t.p_tilde()) / a
  # the second module carries the formal variable: c_{M_x,N_y}(z) = c(yz/x)
  shift = N.param * M.param.inv()
  return d.certain.scale_roots(shift.inv()), c.shifted(shift)
