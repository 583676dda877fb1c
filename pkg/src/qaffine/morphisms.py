"""Catalog of homomorphisms between KR modules: fusion rules, Dorey-type
surjections, mesh rules, and classical/generalized T-system exact sequences,
together with the divisibility consistency engine that validates them.

A record stores a surjection  sources[0] x sources[1] ->> head  (tensor
factors listed explicitly) or, for exact-sequence kinds, the middle term as
`sources`, the right term as `head` and the left term as `socle` (None when
the socle has no closed KR factorization).

Validity of a record is checked by `check_ak_divisibility`: for a genuine
surjection M' x M'' ->> M and any simple N the ratio

    d_{N,M'} d_{N,M''} a_{N,M} / (d_{N,M} a_{N,M'} a_{N,M''})

must be a Laurent polynomial (and likewise with N in the second slot).
"""

from __future__ import annotations

from dataclasses import dataclass

from .qfield import (QPoint, ONE, MINUS_ONE, minus_q, minus_qs, qs_power,
                     q_power, FactoredLaurent, PhiProduct, to_phi_product)
from .root_data import AffineType, DomainError
from .denominators import denom_kr
from .univcoeff import univ_coeff_derived
from .invariants import KRModule, d_invariant

KINDS = ('fusion', 'dorey', 'higher_dorey', 'mesh', 'tsystem', 'gen_tsystem')

HIGHER_DOREY_RULES = ('k+l<n', 'k+l=n', 'B-folded', 'spin-B', 'spin-C',
                      'spin-D')


@dataclass(frozen=True)
class MorphismRecord:
  kind: str
  sources: tuple
  head: tuple
  socle: tuple | None
  tag: str

  def __post_init__(self):
    if self.kind not in KINDS:
      raise DomainError(f'unknown morphism kind {self.kind!r}')
    mods = list(self.sources) + list(self.head) + list(self.socle or ())
    if any(m.type != mods[0].type for m in mods):
      raise DomainError('record mixes modules over different affine types')

  @property
  def type(self) -> AffineType:
    return self.sources[0].type

  def pretty(self) -> str:
    src = ' (x) '.join(m.pretty() for m in self.sources)
    hd = ' (x) '.join(m.pretty() for m in self.head) or '1'
    if self.socle is None:
      return f'{src} ->> {hd}'
    soc = ' (x) '.join(m.pretty() for m in self.socle) or '1'
    return f'0 -> {soc} -> {src} -> {hd} -> 0'

  def __str__(self):
    return self.pretty()

  def to_json(self):
    d = {'kind': self.kind, 'tag': self.tag,
         'sources': [str(m) for m in self.sources],
         'head': [str(m) for m in self.head]}
    if self.socle is not None:
      d['socle'] = [str(m) for m in self.socle]
    return d


def _m1(e: int) -> QPoint:
  return MINUS_ONE if e % 2 else ONE


def _n_eff(t: AffineType) -> int:
  # formulas below index nodes as in A_{n-1}, B_n, C_n, D_n: t.n throughout
  return t.n


def _n_prime(t: AffineType) -> int:
  return _n_eff(t) - (1 if t.family == 'D' else 0)


def _require_classical_untwisted(t: AffineType):
  if t.twist != 1 or t.family not in 'ABCD':
    raise DomainError(f'no catalogued morphisms for {t}')


def fusion_rule(t: AffineType, k: int, m: int, split: int) -> MorphismRecord:
  """W^{k,m-t} at (-qhat)^t  x  W^{k,t} at (-qhat)^{t-m}  ->>  W^{k,m}."""
  t._check_node(k)
  t.require_kr_level(m)
  if not 1 <= split < m:
    raise DomainError(f'fusion split must satisfy 1 <= t < m, got t={split}')
  chk = t.kr_shift_point(k)
  return MorphismRecord(
      'fusion',
      (KRModule.make(t, k, m - split, chk ** split),
       KRModule.make(t, k, split, chk ** (split - m))),
      (KRModule.make(t, k, m, ONE),),
      None, f'fusion[{k}^{m}:{split}]')


def _neighbors(t: AffineType, i: int):
  cm = t.cartan_matrix()  # node 0 first, so node j sits at index j
  return [j for j in t.nodes() if j != i and cm[i][j] < 0]


def _c_spin_pair(t: AffineType, m: int, a: QPoint = ONE):
  """The level-m spin content V^{n,ceil(m/2)} x V^{n,floor(m/2)} in type C."""
  n = t.n
  hi, lo = (m + 1) // 2, m // 2
  if m % 2 == 0:
    return (KRModule.make(t, n, hi, a * minus_qs(-1)),
            KRModule.make(t, n, lo, a * minus_qs(1)))
  out = [KRModule.make(t, n, hi, a * _m1(lo))]
  if lo:
    out.append(KRModule.make(t, n, lo, a * _m1(hi)))
  return tuple(out)


def classical_tsystem(t: AffineType, i: int, m: int,
                      a: QPoint = ONE) -> MorphismRecord:
  """The T-system exact sequence with middle term
  V^{i,m}_{a(-qhat)^{-1}} x V^{i,m}_{a(-qhat)}."""
  _require_classical_untwisted(t)
  t._check_node(i)
  t.require_kr_level(m)
  n, fam = t.n, t.family
  chk = t.kr_shift_point(i)
  mid = (KRModule.make(t, i, m, a * chk.inv()),
         KRModule.make(t, i, m, a * chk))
  left = tuple(KRModule.make(t, i, lv, a) for lv in (m - 1, m + 1) if lv)

  if fam == 'B' and i == n - 1:
    right = [KRModule.make(t, n, 2 * m, _m1(m) * a)]
    if n - 2 >= 1:
      right.insert(0, KRModule.make(t, n - 2, m, a))
  elif fam == 'B' and i == n:
    h, r = divmod(m, 2)
    if r == 0:
      right = [KRModule.make(t, n - 1, h, _m1(h) * a * qs_power(-1)),
               KRModule.make(t, n - 1, h, _m1(h) * a * qs_power(1))]
    else:
      right = [KRModule.make(t, n - 1, h + 1, _m1(h) * a),
               KRModule.make(t, n - 1, h, _m1(h + 1) * a)]
  elif fam == 'C' and i == n - 1:
    h, r = divmod(m, 2)
    if r == 0:
      right = [KRModule.make(t, n, h, _m1(h) * a * qs_power(-1)),
               KRModule.make(t, n, h, _m1(h) * a * qs_power(1))]
    else:
      right = [KRModule.make(t, n, h + 1, _m1(h) * a),
               KRModule.make(t, n, h, _m1(h + 1) * a)]
    if n - 2 >= 1:
      right.insert(0, KRModule.make(t, n - 2, m, a))
  elif fam == 'C' and i == n:
    right = [KRModule.make(t, n - 1, 2 * m, _m1(m) * a)]
  else:
    right = [KRModule.make(t, j, m, a) for j in _neighbors(t, i)]
  return MorphismRecord('tsystem', mid, tuple(right), left,
                        f'tsystem[{t.family}:{i}^{m}]')


def higher_dorey(t: AffineType, rule_id: str, k: int | None, l: int,
                 m: int, assume_conjecture: bool = False) -> MorphismRecord:
  """Surjections onto (tensor products of) KR modules generalizing Dorey's
  rule to arbitrary level m; `rule_id` selects the family."""
  _require_classical_untwisted(t)
  t.require_kr_level(m)
  n, fam = _n_eff(t), t.family
  np = _n_prime(t)
  kind = 'dorey' if m == 1 else 'higher_dorey'
  V = KRModule.make

  if rule_id == 'k+l<n':
    if k is None:
      raise DomainError('rule k+l<n needs both k and l')
    if not (1 <= k < n and 1 <= l < n and k + l < np):
      raise DomainError(f'need 1 <= k,l < n and k+l < {np}, got k={k} l={l}')
    return MorphismRecord(
        kind,
        (V(t, l, m, t.kr_shift_point(l) ** -k),
         V(t, k, m, t.kr_shift_point(k) ** l)),
        (V(t, k + l, m, ONE),), None, f'higher-dorey[k+l<n:{k},{l}^{m}]')

  if rule_id == 'k+l=n':
    if k is None:
      raise DomainError('rule k+l=n needs both k and l')
    if fam == 'A' or k + l != np or not (1 <= k < n and 1 <= l < n):
      raise DomainError(f'need k+l = {np} in a non-A family')
    if fam == 'B':
      srcs = (V(t, k, m, _m1(m + l) * q_power(-l)),
              V(t, l, m, _m1(k + m) * q_power(k)))
      head = (V(t, n, 2 * m, ONE),)
    elif fam == 'C':
      srcs = (V(t, l, m, minus_qs(-k)), V(t, k, m, minus_qs(l)))
      head = _c_spin_pair(t, m)
    else:
      srcs = (V(t, l, m, minus_q(-k)), V(t, k, m, minus_q(l)))
      head = (V(t, n - 1, m, ONE), V(t, n, m, ONE))
    return MorphismRecord(kind, srcs, head, None,
                          f'higher-dorey[k+l=n:{k},{l}^{m}]')

  if rule_id == 'B-folded':
    if fam != 'B' or k is None:
      raise DomainError('rule B-folded needs type B and both k and l')
    if not (1 <= l < n < k < 2 * n - 1 and k + l <= 2 * n - 1):
      raise DomainError(f'need 1 <= l < n < k < 2n-1, k+l <= 2n-1')
    hc = min(k + l, 2 * n - (k + l))
    return MorphismRecord(
        kind,
        (V(t, l, m, minus_q(1 - k)),
         V(t, 2 * n - k, m, MINUS_ONE * minus_q(l))),
        (V(t, hc, m, MINUS_ONE),), None,
        f'higher-dorey[B-folded:{k},{l}^{m}]')

  if rule_id == 'spin-B':
    if fam != 'B' or not 1 <= l < n:
      raise DomainError('rule spin-B needs type B and 1 <= l < n')
    if m % 2:
      if not assume_conjecture:
        raise DomainError('odd-level spin-B rule is conjectural; '
                          'pass the conjecture flag')
      if l >= n - 1:
        raise DomainError('odd-level spin-B rule needs l < n-1')
    sgn = _m1(n + l)
    srcs = (V(t, n, m, sgn * qs_power(-2 * (n - l) + 1)),
            V(t, n, m, sgn * qs_power(2 * (n - l) - 1)))
    hi, lo = (m + 1) // 2, m // 2
    if m % 2 == 0:
      head = (V(t, l, hi, _m1(hi) * qs_power(1)),
              V(t, l, lo, _m1(lo) * qs_power(-1)))
    else:
      head = [V(t, l, hi, _m1(lo))]
      if lo:
        head.append(V(t, l, lo, _m1(hi)))
      head = tuple(head)
    return MorphismRecord(kind, srcs, head, None,
                          f'higher-dorey[spin-B:{l}^{m}]')

  if rule_id == 'spin-C':
    if fam != 'C' or not 1 <= l < n:
      raise DomainError('rule spin-C needs type C and 1 <= l < n')
    sgn = _m1(m + 1)
    return MorphismRecord(
        kind,
        (V(t, n, m, sgn * minus_qs(-1 - n + l)),
         V(t, n, m, sgn * minus_qs(n + 1 - l))),
        (V(t, l, 2 * m, ONE),), None, f'higher-dorey[spin-C:{l}^{m}]')

  if rule_id == 'spin-D':
    if fam != 'D' or not 1 <= l < n - 1:
      raise DomainError('rule spin-D needs type D and 1 <= l < n-1')
    n1, n2 = (n, n) if (n - l) % 2 == 0 else (n, n - 1)
    return MorphismRecord(
        kind,
        (V(t, n1, m, minus_q(-n + l + 1)), V(t, n2, m, minus_q(n - l - 1))),
        (V(t, l, m, ONE),), None, f'higher-dorey[spin-D:{l}^{m}]')

  raise DomainError(f'unknown higher Dorey rule {rule_id!r}; '
                    f'choose from {HIGHER_DOREY_RULES}')


def mesh_rule(t: AffineType, l: int, a: int, b: int, m: int,
              folded: bool = False) -> MorphismRecord:
  """V^{l-b,m}_{(-qhat)^{-b}} x V^{l-a,m}_{(-qhat)^{a}} ->>
  V^{l,m} x V^{l-a-b,m}_{(-qhat)^{a-b}} (with the spin replacements at the
  diagram end, and the folded variant in type B)."""
  _require_classical_untwisted(t)
  t.require_kr_level(m)
  n, fam = _n_eff(t), t.family
  np = _n_prime(t)
  kind = 'dorey' if m == 1 else 'mesh'
  V = KRModule.make
  if a < 1 or b < 1:
    raise DomainError('mesh offsets a, b must be positive')

  if folded:
    if fam != 'B':
      raise DomainError('folded mesh rule is specific to type B')
    if not (n < l <= 2 * n - 1 and l - a > n and l - b < n and a + b < l):
      raise DomainError('folded mesh needs l-a > n > l-b and a+b < l')
    srcs = (V(t, l - b, m, minus_q(1 - b)),
            V(t, 2 * n - (l - a), m, MINUS_ONE * minus_q(a)))
    head = [V(t, 2 * n - l, m, MINUS_ONE)]
    if l - a - b > 0:
      head.append(V(t, l - a - b, m, minus_q(a - b + 1)))
    return MorphismRecord(kind, srcs, tuple(head), None,
                          f'mesh[B-folded:{l},{a},{b}^{m}]')

  spin_end = fam != 'A' and l == np
  lmax = t.rank if fam == 'A' else np
  if not (a + b <= l <= lmax and (a + b < l or spin_end)):
    raise DomainError(
        f'mesh needs a+b < l <= {lmax} (a+b = l only at the spin end)')
  srcs = (V(t, l - b, m, t.kr_shift_point(l - b) ** -b),
          V(t, l - a, m, t.kr_shift_point(l - a) ** a))
  if not spin_end:
    head = [V(t, l, m, ONE)]
  elif fam == 'B':
    head = [V(t, n, 2 * m, _m1(m))]
  elif fam == 'C':
    head = list(_c_spin_pair(t, m))
  else:
    head = [V(t, n, m, ONE), V(t, n - 1, m, ONE)]
  if l - a - b > 0:
    head.append(V(t, l - a - b, m, t.kr_shift_point(l - a - b) ** (a - b)))
  return MorphismRecord(kind, srcs, tuple(head), None,
                        f'mesh[{fam}:{l},{a},{b}^{m}]')


def generalized_tsystem(t: AffineType, l: int, b: int, m: int,
                        folded: bool = False) -> MorphismRecord:
  """Exact sequence with middle V^{l-b,m}_{(-qhat)^{-b}} x
  V^{l-1,m}_{(-qhat)} and right term V^{l,m} x V^{l-1-b,m}_{(-qhat)^{1-b}};
  b = 1 recovers the classical T-system (socle then explicit)."""
  _require_classical_untwisted(t)
  t.require_kr_level(m)
  n, fam = _n_eff(t), t.family
  np = _n_prime(t)
  V = KRModule.make

  if folded:
    if fam != 'B':
      raise DomainError('folded sequence is specific to type B')
    if not (n < l <= 2 * n - 1 and 1 + b <= l and l - b < n < l - 1):
      raise DomainError('folded sequence needs l-b < n < l-1 and b+1 <= l')
    mid = (V(t, l - b, m, minus_q(1 - b)),
           V(t, 2 * n - (l - 1), m, MINUS_ONE * minus_q(1)))
    right = [V(t, 2 * n - l, m, MINUS_ONE)]
    if l - 1 - b > 0:
      right.append(V(t, l - 1 - b, m, minus_q(2 - b)))
    return MorphismRecord('gen_tsystem', mid, tuple(right), None,
                          f'gen-tsystem[B-folded:{l},{b}^{m}]')

  spin_end = fam != 'A' and l == np
  lmax = t.rank if fam == 'A' else np
  if not (1 <= b < l <= lmax):
    raise DomainError(f'need 1 <= b < l <= {lmax}, got l={l} b={b}')
  if b == 1:
    return classical_tsystem(t, l - 1, m)
  mid = (V(t, l - b, m, t.kr_shift_point(l - b) ** -b),
         V(t, l - 1, m, t.kr_shift_point(l - 1)))
  if not spin_end:
    right = [V(t, l, m, ONE)]
  elif fam == 'B':
    right = [V(t, n, 2 * m, _m1(m))]
  elif fam == 'C':
    right = list(_c_spin_pair(t, m))
  else:
    right = [V(t, n, m, ONE), V(t, n - 1, m, ONE)]
  if l - 1 - b > 0:
    right.append(V(t, l - 1 - b, m,
                   t.kr_shift_point(l - 1 - b) ** (1 - b)))
  return MorphismRecord('gen_tsystem', mid, tuple(right), None,
                        f'gen-tsystem[{fam}:{l},{b}^{m}]')


# ----------------------------------------------------------------------
# divisibility engine


def _pair_denom_shifted(A: KRModule, B: KRModule,
                        assume_conjecture: bool) -> FactoredLaurent:
  """d_{A,B}(z) with the parameter shift applied (B carries the variable)."""
  d = denom_kr(A.type, A.node, A.level, B.node, B.level,
               assume_conjecture=assume_conjecture)
  if not d.is_exact() and not assume_conjecture:
    raise DomainError(
        'denominator has ambiguous multiplicities; pass the conjecture flag')
  shift = B.param * A.param.inv()
  return d.resolved().scale_roots(shift.inv())


def _pair_univ_shifted(A: KRModule, B: KRModule,
                       assume_conjecture: bool) -> PhiProduct:
  a = univ_coeff_derived(A.type, A.node, A.level, B.node, B.level,
                         assume_conjecture=assume_conjecture)
  shift = B.param * A.param.inv()
  return a.shifted(shift)


def _ladders(c: PhiProduct):
  step = c.base.qexp
  out = {}
  for x, e in c.eta.items():
    if e == 0:
      continue
    r = x.qexp % step
    out.setdefault((x.phase, r), []).append((int((x.qexp - r) / step), x, e))
  for items in out.values():
    items.sort(key=lambda v: v[0])
  return out


def _phi_residual(c: PhiProduct):
  """Telescope a phi-product into linear factors.  Returns (ok, residual)
  where ok means every factor appears with nonnegative multiplicity and
  every ladder terminates (i.e. the product is a Laurent polynomial)."""
  ok = True
  res = FactoredLaurent()
  for items in _ladders(c).values():
    run = 0
    for idx, (j, x, e) in enumerate(items):
      run += e
      if run == 0:
        continue
      if run < 0:
        ok = False
      upto = items[idx + 1][0] if idx + 1 < len(items) else j + 1
      if idx + 1 == len(items):
        ok = False  # unterminated ladder: infinitely many factors remain
      for jj in range(j, upto):
        # phi-ladder prefix sums are the multiplicities of (1 - base^jj x z)
        res.add_root((x * c.base ** (jj - j)).inv(), run)
  return ok, res


def check_ak_divisibility(s: MorphismRecord, N: KRModule,
                          assume_conjecture: bool = False):
  """Test that the renormalized-coefficient ratio for the surjection in `s`
  against the probe module N is a Laurent polynomial, in both slot orders.
  Returns (bool, residual) with the residual of the first orientation."""
  if N.type != s.type:
    raise DomainError('probe module lives over a different affine type')
  pt = N.type.p_tilde()
  results = []
  for orient in (0, 1):
    c = PhiProduct(pt)
    def pair(X):
      A, B = (N, X) if orient == 0 else (X, N)
      return (_pair_denom_shifted(A, B, assume_conjecture),
              _pair_univ_shifted(A, B, assume_conjecture))
    for X in s.sources:
      d, a = pair(X)
      c = c * to_phi_product(d, pt) / a
    for X in s.head:
      d, a = pair(X)
      c = c * a / to_phi_product(d, pt)
    results.append(_phi_residual(c))
  ok = results[0][0] and results[1][0]
  return ok, results[0][1]


def predicted_mesh_de(a: int, b: int, m: int) -> int:
  """d(V^{l-b,m}_{(-qhat)^{-b}}, V^{l-a,m}_{(-qhat)^{a}}) for a+b < l."""
  if min(a, b, m) < 1:
    raise DomainError('mesh offsets and level must be positive')
  return min(a, b, m)


def extended_tsystem_chain(r, p: int, window) -> list:
  """All index sequences k_1 < ... < k_p inside `window` = (lo, hi) whose
  reading vertices satisfy d(R[k_s], R[k_{s+1}]) = 1 and
  d(R[k_s], R[k_{s+t}]) = 0 for t > 1."""
  lo, hi = window
  idxs = list(range(lo, hi + 1))
  if p < 1 or not idxs:
    return []
  funds = {k: r.fundamental(k) for k in idxs}
  dmat = {}
  def dv(i, j):
    if (i, j) not in dmat:
      dmat[i, j] = d_invariant(funds[i], funds[j])
    return dmat[i, j]
  out = []
  def grow(seq):
    if len(seq) == p:
      out.append(tuple(seq))
      return
    for k in idxs:
      if seq and k <= seq[-1]:
        continue
      if seq and dv(seq[-1], k) != 1:
        continue
      if any(dv(s, k) != 0 for s in seq[:-1]):
        continue
      grow(seq + [k])
  grow([])
  return out


# ----------------------------------------------------------------------
# catalog sweeps


def catalog(t: AffineType, max_m: int = 2) -> list:
  """Every cataloged record for the type at levels up to max_m."""
  _require_classical_untwisted(t)
  recs = []
  n, fam = _n_eff(t), t.family
  np = _n_prime(t)
  for m in range(1, max_m + 1):
    for k in t.nodes():
      for split in range(1, m):
        recs.append(fusion_rule(t, k, m, split))
      recs.append(classical_tsystem(t, k, m))
    for k in range(1, n):
      for l in range(1, n):
        if k + l < np:
          recs.append(higher_dorey(t, 'k+l<n', k, l, m))
        elif fam != 'A' and k + l == np:
          recs.append(higher_dorey(t, 'k+l=n', k, l, m))
    if fam == 'B':
      for l in range(1, n):
        for k in range(n + 1, 2 * n - 1):
          if k + l <= 2 * n - 1:
            recs.append(higher_dorey(t, 'B-folded', k, l, m))
        if m % 2 == 0:
          recs.append(higher_dorey(t, 'spin-B', None, l, m))
    if fam == 'C':
      for l in range(1, n):
        recs.append(higher_dorey(t, 'spin-C', None, l, m))
    if fam == 'D':
      for l in range(1, n - 1):
        recs.append(higher_dorey(t, 'spin-D', None, l, m))
    lmax = t.rank if fam == 'A' else np
    for l in range(1, lmax + 1):
      spin_end = fam != 'A' and l == np
      for a in range(1, l):
        for b in range(1, l - a + (1 if spin_end else 0)):
          recs.append(mesh_rule(t, l, a, b, m))
      for b in range(2, l):
        recs.append(generalized_tsystem(t, l, b, m))
    if fam == 'B':
      for l in range(n + 2, 2 * n):
        for b in range(l - n + 1, l):
          if l - b >= 1 and l - b < n < l - 1 and 1 + b <= l:
            recs.append(generalized_tsystem(t, l, b, m, folded=True))
  return recs
