"""Exact arithmetic in the multiplicative group generated by q-powers and
roots of unity, plus factored Laurent polynomials and infinite phi-products.

A spectral point is written exp(2*pi*i*phase) * q^qexp with phase a rational
mod 1 (denominator dividing 12) and qexp a rational (denominator dividing 6).
This is enough to host (-q)^a, (-qs)^a = (-q^{1/2})^a, (-qt)^a = (-q^{1/3})^a,
i and the primitive cube root w.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Frac = Fraction


def _frac(x) -> Fraction:
  if isinstance(x, Fraction):
    return x
  return Fraction(x)


@dataclass(frozen=True, order=True)
class QPoint:
  """A point exp(2*pi*i*phase) * q^qexp, phase reduced mod 1."""
  qexp: Fraction
  phase: Fraction

  def __post_init__(self):
    object.__setattr__(self, 'qexp', _frac(self.qexp))
    object.__setattr__(self, 'phase', _frac(self.phase) % 1)

  def __mul__(self, other: 'QPoint') -> 'QPoint':
    return QPoint(self.qexp + other.qexp, self.phase + other.phase)

  def __pow__(self, n: int) -> 'QPoint':
    return QPoint(self.qexp * n, self.phase * n)

  def inv(self) -> 'QPoint':
    return QPoint(-self.qexp, -self.phase)

  def bar(self) -> 'QPoint':
    # q -> q^{-1}; the root-of-unity part is fixed
    return QPoint(-self.qexp, self.phase)

  def sqrt_pair(self):
    """The two square roots, as QPoints."""
    h = QPoint(self.qexp / 2, self.phase / 2)
    return (h, QPoint(h.qexp, h.phase + Fraction(1, 2)))

  def cbrt_triple(self):
    c = QPoint(self.qexp / 3, self.phase / 3)
    return tuple(QPoint(c.qexp, c.phase + Fraction(j, 3)) for j in range(3))

  # -- display ---------------------------------------------------------

  def pretty(self) -> str:
    e, ph = self.qexp, self.phase
    if e == 0 and ph == 0:
      return '1'
    den = e.denominator
    if den == 1:
      base, scale = 'q', 1
    elif den == 2:
      base, scale = 'qs', 2
    elif den == 3:
      base, scale = 'qt', 3
    else:
      base, scale = 'q', 1
    m = e * scale  # exponent in base units
    exp_s = _exp_str(m)
    # (-base)^m carries phase m/2
    if ph == (Fraction(m) / 2) % 1:
      return f'(-{base}){exp_s}' if m != 0 else _unit_str(ph)
    if ph == 0:
      return f'{base}{exp_s}'
    if ph == (Fraction(m) / 2 + Fraction(1, 2)) % 1 and m != 0:
      return f'-(-{base}){exp_s}'
    u = _unit_str(ph)
    if m == 0:
      return u
    return f'{u}*{base}{exp_s}'

  def __str__(self):
    return self.pretty()

  def to_json(self):
    return {'phase': str(self.phase), 'qexp': str(self.qexp)}

  @staticmethod
  def from_json(d) -> 'QPoint':
    return QPoint(Fraction(d['qexp']), Fraction(d['phase']))


ONE = QPoint(0, 0)
MINUS_ONE = QPoint(0, Fraction(1, 2))
IMAG = QPoint(0, Fraction(1, 4))
OMEGA = QPoint(0, Fraction(1, 3))


def minus_q(a=1) -> QPoint:
  """(-q)^a"""
  a = _frac(a)
  return QPoint(a, a / 2)


def minus_qs(a=1) -> QPoint:
  """(-qs)^a with qs = q^{1/2}"""
  a = _frac(a)
  return QPoint(a / 2, a / 2)


def minus_qt(a=1) -> QPoint:
  """(-qt)^a with qt = q^{1/3}"""
  a = _frac(a)
  return QPoint(a / 3, a / 2)


def q_power(a=1) -> QPoint:
  a = _frac(a)
  return QPoint(a, 0)


def qs_power(a=1) -> QPoint:
  a = _frac(a)
  return QPoint(a / 2, 0)


def qt_power(a=1) -> QPoint:
  a = _frac(a)
  return QPoint(a / 3, 0)


def sign_point(s: int) -> QPoint:
  return ONE if s in (1, 0) else MINUS_ONE


def _exp_str(m: Fraction) -> str:
  if m == 1:
    return ''
  if m.denominator == 1:
    return f'^{m.numerator}'
  return f'^{m}'


# phase k/12 -> shortest unit string built from -1, i, w
def _unit_table():
  tab = {}
  names = {(0, 0): '1', (1, 0): 'i', (2, 0): '-1', (3, 0): '-i',
           (0, 1): 'w', (0, 2): 'w^2'}
  for c in range(4):
    for b in range(3):
      ph = (Fraction(c, 4) + Fraction(b, 3)) % 1
      parts = []
      if (c, 0) in names and c:
        parts.append(names[(c, 0)])
      if b:
        parts.append(names[(0, b)])
      s = '*'.join(parts) if parts else '1'
      if ph not in tab or len(s) < len(tab[ph]):
        tab[ph] = s
  return tab


_UNITS = _unit_table()


def _unit_str(ph: Fraction) -> str:
  try:
    return _UNITS[ph % 1]
  except KeyError:
    return f'e(2pi*{ph})'


# -- parsing -----------------------------------------------------------

_FACTOR_RE = re.compile(
    r'^(?P<neg>-)?(?P<base>\(-q[st]?\)|q[st]?|i|w|1)'
    r'(?:\^(?P<exp>\(?-?\d+(?:/\d+)?\)?))?$')

_BASES = {
    'q': lambda a: q_power(a),
    'qs': lambda a: qs_power(a),
    'qt': lambda a: qt_power(a),
    '(-q)': lambda a: minus_q(a),
    '(-qs)': lambda a: minus_qs(a),
    '(-qt)': lambda a: minus_qt(a),
    'i': lambda a: IMAG ** _int_of(a),
    'w': lambda a: OMEGA ** _int_of(a),
    '1': lambda a: ONE,
}


def _int_of(a: Fraction) -> int:
  if a.denominator != 1:
    raise ValueError('root-of-unity exponent must be an integer')
  return a.numerator


def parse_point(s: str) -> QPoint:
  """Parse a spectral point literal, e.g. '(-q)^-2', '(-1)*qs^5', 'i*q^3/2'."""
  s = s.strip().replace(' ', '')
  if not s:
    raise ValueError('empty point literal')
  out = ONE
  for tok in s.split('*'):
    if tok == '(-1)' or tok == '-1':
      out = out * MINUS_ONE
      continue
    m = _FACTOR_RE.match(tok)
    if not m:
      raise ValueError(f'cannot parse point factor {tok!r}')
    if m.group('neg'):
      out = out * MINUS_ONE
    exp = m.group('exp')
    a = Fraction(exp.strip('()')) if exp else Fraction(1)
    out = out * _BASES[m.group('base')](a)
  return out


# -- factored Laurent polynomials --------------------------------------


class FactoredLaurent:
  """A Laurent polynomial up to a unit, stored as a root -> multiplicity map.

  Negative multiplicities are allowed (quotients of split polynomials).
  """

  __slots__ = ('roots',)

  def __init__(self, roots=None):
    self.roots: dict[QPoint, int] = {}
    if roots:
      for x, m in (roots.items() if isinstance(roots, dict) else roots):
        self.add_root(x, m)

  def add_root(self, x: QPoint, mult: int = 1):
    m = self.roots.get(x, 0) + mult
    if m:
      self.roots[x] = m
    else:
      self.roots.pop(x, None)

  def copy(self) -> 'FactoredLaurent':
    f = FactoredLaurent()
    f.roots = dict(self.roots)
    return f

  def __mul__(self, other: 'FactoredLaurent') -> 'FactoredLaurent':
    f = self.copy()
    for x, m in other.roots.items():
      f.add_root(x, m)
    return f

  def __truediv__(self, other: 'FactoredLaurent') -> 'FactoredLaurent':
    f = self.copy()
    for x, m in other.roots.items():
      f.add_root(x, -m)
    return f

  def __pow__(self, n: int) -> 'FactoredLaurent':
    f = FactoredLaurent()
    for x, m in self.roots.items():
      f.add_root(x, m * n)
    return f

  def __eq__(self, other):
    return isinstance(other, FactoredLaurent) and self.roots == other.roots

  def __hash__(self):
    return hash(frozenset(self.roots.items()))

  def bar(self) -> 'FactoredLaurent':
    return FactoredLaurent({x.bar(): m for x, m in self.roots.items()})

  def scale_roots(self, c: QPoint) -> 'FactoredLaurent':
    """Roots x -> x*c; this is f(z/c) up to a unit."""
    return FactoredLaurent({x * c: m for x, m in self.roots.items()})

  def order_at(self, x: QPoint) -> int:
    return self.roots.get(x, 0)

  def degree(self) -> int:
    return sum(self.roots.values())

  def is_polynomial(self) -> bool:
    return all(m >= 0 for m in self.roots.values())

  def sorted_roots(self):
    return sorted(self.roots.items(), key=lambda t: (t[0].qexp, t[0].phase))

  def pretty(self) -> str:
    if not self.roots:
      return '1'
    parts = []
    for x, m in self.sorted_roots():
      p = f'(z - {x.pretty()})'
      if m != 1:
        p += f'^{m}'
      parts.append(p)
    return ''.join(parts)

  def __str__(self):
    return self.pretty()

  def __repr__(self):
    return f'FactoredLaurent({self.pretty()})'

  def to_json(self):
    return [{'root': x.to_json(), 'mult': m} for x, m in self.sorted_roots()]


def from_root_list(roots) -> FactoredLaurent:
  f = FactoredLaurent()
  for x in roots:
    f.add_root(x)
  return f


def qpoint_mul(a: QPoint, b: QPoint) -> QPoint:
  return a * b


def qpoint_pow(a: QPoint, n: int) -> QPoint:
  return a ** n


def zero_order_at(f: FactoredLaurent, x: QPoint) -> int:
  return f.order_at(x)


# -- phi-products ------------------------------------------------------


class PhiProduct:
  """prod_a phi(a z)^{eta_a} with phi(z) = prod_{s>=0} (1 - base^s z).

  `base` is the square of the dual Coxeter point p*, i.e. the modulus of the
  infinite products the renormalizing coefficients live in.
  """

  __slots__ = ('base', 'eta')

  def __init__(self, base: QPoint, eta=None):
    self.base = base
    self.eta: dict[QPoint, int] = {}
    if eta:
      for a, n in (eta.items() if isinstance(eta, dict) else eta):
        self.add(a, n)

  def add(self, a: QPoint, n: int = 1):
    m = self.eta.get(a, 0) + n
    if m:
      self.eta[a] = m
    else:
      self.eta.pop(a, None)

  def copy(self) -> 'PhiProduct':
    p = PhiProduct(self.base)
    p.eta = dict(self.eta)
    return p

  def __mul__(self, other: 'PhiProduct') -> 'PhiProduct':
    assert self.base == other.base
    p = self.copy()
    for a, n in other.eta.items():
      p.add(a, n)
    return p

  def __truediv__(self, other: 'PhiProduct') -> 'PhiProduct':
    assert self.base == other.base
    p = self.copy()
    for a, n in other.eta.items():
      p.add(a, -n)
    return p

  def __pow__(self, n: int) -> 'PhiProduct':
    p = PhiProduct(self.base)
    for a, m in self.eta.items():
      p.add(a, m * n)
    return p

  def __eq__(self, other):
    return (isinstance(other, PhiProduct) and self.base == other.base
            and self.eta == other.eta)

  def shifted(self, c: QPoint) -> 'PhiProduct':
    """Substitute z -> c z, i.e. phi(az) -> phi(ac z)."""
    return PhiProduct(self.base, {a * c: n for a, n in self.eta.items()})

  def one_minus(self, a: QPoint, n: int = 1):
    """Multiply by (1 - a z)^n = (phi(az)/phi(base*az))^n."""
    self.add(a, n)
    self.add(a * self.base, -n)

  def linear_factor(self, x: QPoint, n: int = 1):
    """Multiply by (z - x)^n, up to a unit."""
    self.one_minus(x.inv(), n)

  def pochhammer(self, a: QPoint, modulus: QPoint, n: int = 1):
    """Multiply by (az; modulus)_oo^n; requires base = modulus^h, h >= 1."""
    if modulus == self.base:
      self.add(a, n)
      return
    h = self.base.qexp / modulus.qexp
    if h.denominator != 1 or (modulus.phase * h) % 1 != self.base.phase:
      raise ValueError('phi-product base is not a power of the modulus')
    step = ONE
    for _ in range(h.numerator):
      self.add(a * step, n)
      step = step * modulus

  def _ladder_index(self, a: QPoint):
    # a = base^k for integer k, else None
    if self.base.qexp == 0:
      return None
    k = a.qexp / self.base.qexp
    if k.denominator != 1:
      return None
    k = k.numerator
    if (self.base.phase * k) % 1 != a.phase:
      return None
    return k

  def deg(self) -> int:
    d = 0
    for a, n in self.eta.items():
      k = self._ladder_index(a)
      if k is None:
        continue
      d += n if k <= 0 else -n
    return d

  def deg_inf(self) -> int:
    return sum(n for a, n in self.eta.items()
               if self._ladder_index(a) is not None)

  def sorted_eta(self):
    return sorted(self.eta.items(), key=lambda t: (t[0].qexp, t[0].phase))

  def pretty(self) -> str:
    if not self.eta:
      return '1'
    parts = []
    for a, n in self.sorted_eta():
      p = f'phi({a.pretty()} z)'
      if n != 1:
        p += f'^{n}'
      parts.append(p)
    return ' '.join(parts)

  def __str__(self):
    return self.pretty()

  def __repr__(self):
    return f'PhiProduct[{self.base.pretty()}]({self.pretty()})'

  def to_json(self):
    return {'base': self.base.to_json(),
            'factors': [{'arg': a.to_json(), 'exp': n}
                        for a, n in self.sorted_eta()]}


def to_phi_product(f: FactoredLaurent, base: QPoint) -> PhiProduct:
  """Rewrite a split Laurent polynomial as a phi-product, up to a unit."""
  p = PhiProduct(base)
  for x, m in f.roots.items():
    p.linear_factor(x, m)
  return p


def deg(c: PhiProduct) -> int:
  return c.deg()


def deg_inf(c: PhiProduct) -> int:
  return c.deg_inf()
