"""KR modules with spectral parameters and the integer invariants d, Lambda,
Lambda^infinity between them.

A `KRModule` is k^m @ x: the m-fold Kirillov-Reshetikhin tower over node k
with string center x, i.e. the head of k^1 factors at x(-qhat_k)^{1-m},
x(-qhat_k)^{3-m}, ..., x(-qhat_k)^{m-1}.  The bare literal "k^m" has x = 1,
so its fundamental constituents sit symmetrically around 1.

All invariants are exact integers except in the C-type odd-odd regime,
where an (lo, hi) interval is returned whenever an evaluation point meets a
root of undetermined multiplicity; whether an invariant vanishes is always
definite because the zero sets are known.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .qfield import QPoint, ONE, parse_point
from .root_data import AffineType, DomainError
from .denominators import denom_kr, DenomPoly
from .univcoeff import renorm_coeff

_MOD_RE = re.compile(r'^(\d+)\^(\d+)(?:@(.*))?$')


@dataclass(frozen=True)
class KRModule:
  type: AffineType
  node: int
  level: int
  param: QPoint

  @staticmethod
  def make(t: AffineType, node: int, level: int, param=None) -> 'KRModule':
    t._check_node(node)
    t.require_kr_level(level)
    if param is None:
      param = ONE
    return KRModule(t, node, level, param)

  @staticmethod
  def parse(t: AffineType, s: str) -> 'KRModule':
    m = _MOD_RE.match(s.strip())
    if not m:
      raise DomainError(f'cannot parse module literal {s!r}')
    node, level = int(m.group(1)), int(m.group(2))
    param = parse_point(m.group(3)) if m.group(3) else None
    return KRModule.make(t, node, level, param)

  def at(self, x: QPoint) -> 'KRModule':
    """The same module with its parameter multiplied by x."""
    return KRModule(self.type, self.node, self.level, self.param * x)

  def pretty(self) -> str:
    return f'{self.node}^{self.level}@{self.param.pretty()}'

  def __str__(self):
    return self.pretty()


def parse_module_list(t: AffineType, s: str):
  return [KRModule.parse(t, tok) for tok in s.split(',') if tok.strip()]


def dual_shift(M: KRModule, k: int = 1) -> KRModule:
  """D^k M: the k-fold (right for k>0) dual, a KR module again."""
  node = M.node
  if k % 2:
    node = M.type.node_dual(node)
  return KRModule(M.type, node, M.level, M.param * M.type.p_star() ** k)


def _pair_denom(M: KRModule, N: KRModule,
                assume_conjecture=False) -> DenomPoly:
  if M.type != N.type:
    raise DomainError('modules live over different affine types')
  return denom_kr(M.type, M.node, M.level, N.node, N.level,
                  assume_conjecture=assume_conjecture)


def _interval_add(a, b):
  return (a[0] + b[0], a[1] + b[1])


def _collapse(iv):
  return iv[0] if iv[0] == iv[1] else iv


def d_invariant(M: KRModule, N: KRModule, assume_conjecture: bool = False):
  """d(M, N): pole order of the R-matrix pair, an integer (or an interval
  when a C-type ambiguous root is hit)."""
  d = _pair_denom(M, N, assume_conjecture)
  r = M.param * N.param.inv()
  iv = _interval_add(d.order_interval(r), d.order_interval(r.inv()))
  return _collapse(iv)


def strongly_commute(M: KRModule, N: KRModule) -> bool:
  """Whether M x N is simple (d(M,N) = 0); always definite since the zero
  set of the denominator is known even in the ambiguous C regime."""
  d = _pair_denom(M, N)
  zeros = d.zero_set()
  r = M.param * N.param.inv()
  return r not in zeros and r.inv() not in zeros


def is_simple_tensor(modules) -> bool:
  ms = list(modules)
  return all(strongly_commute(ms[i], ms[j])
             for i in range(len(ms)) for j in range(i + 1, len(ms)))


def _shift_candidates(M: KRModule, N: KRModule):
  """Integers k for which d(M, D^k N) can be nonzero."""
  t = M.type
  ps = t.p_star()
  ks = set()
  # D^k N has parameter y p*^k and possibly the dual node; the evaluation
  # points are x/(y p*^k) and its inverse, which must meet a root.
  for dual in (False, True):
    dd = _pair_denom(M, dual_shift(N, 1) if dual else N)
    roots = set(dd.certain.roots) | set(dd.ambiguous)
    r0 = M.param * N.param.inv()
    for rho in roots:
      for target in (rho, rho.inv()):
        # x / (y p*^k) = target
        diff = r0 * target.inv()
        if ps.qexp == 0:
          continue
        k = diff.qexp / ps.qexp
        if k.denominator != 1:
          continue
        k = k.numerator
        if (ps.phase * k) % 1 == diff.phase % 1 and (k % 2 == 1) == dual:
          ks.add(k)
  return sorted(ks)


def _signed_d_sum(M: KRModule, N: KRModule, sign, assume_conjecture):
  lo = hi = 0
  for k in _shift_candidates(M, N):
    dk = d_invariant(M, dual_shift(N, k), assume_conjecture)
    if isinstance(dk, int):
      dk = (dk, dk)
    s = sign(k)
    a, b = s * dk[0], s * dk[1]
    lo += min(a, b)
    hi += max(a, b)
  return _collapse((lo, hi))


def lambda_invariant(M: KRModule, N: KRModule,
                     assume_conjecture: bool = False):
  """Lambda(M,N) as the alternating sum sum_k (-1)^{k+[k<0]} d(M, D^k N)."""
  return _signed_d_sum(
      M, N, lambda k: 1 if (k + (1 if k < 0 else 0)) % 2 == 0 else -1,
      assume_conjecture)


def lambda_inf(M: KRModule, N: KRModule, assume_conjecture: bool = False):
  """Lambda^oo(M,N) = sum_k (-1)^k d(M, D^k N)."""
  return _signed_d_sum(M, N, lambda k: 1 if k % 2 == 0 else -1,
                       assume_conjecture)


def lambda_from_deg(M: KRModule, N: KRModule,
                    assume_conjecture: bool = False) -> int:
  """Lambda(M,N) as Deg of the renormalizing coefficient c_{M,N}."""
  _, c = renorm_coeff(M, N, assume_conjecture=assume_conjecture)
  return c.deg()


def lambda_inf_from_deg(M: KRModule, N: KRModule,
                        assume_conjecture: bool = False) -> int:
  _, c = renorm_coeff(M, N, assume_conjecture=assume_conjecture)
  return c.deg_inf()
