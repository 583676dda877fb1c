import pytest

from qaffine.root_data import AffineType, DomainError
from qaffine.invariants import KRModule, d_invariant
from qaffine.qfield import minus_q, minus_qs, ONE, MINUS_ONE
from qaffine import morphisms as M

A3 = AffineType.parse('A3~1')
A4 = AffineType.parse('A4~1')
B3 = AffineType.parse('B3~1')
B4 = AffineType.parse('B4~1')
C3 = AffineType.parse('C3~1')
C4 = AffineType.parse('C4~1')
D4 = AffineType.parse('D4~1')


def probe_grid(t, levels=(1, 2), exps=range(-2, 4)):
  return [KRModule.make(t, i, lv, minus_q(e))
          for i in t.nodes() for lv in levels for e in exps]


def assert_divisible(rec, probes=None, conj=False):
  probes = probes or probe_grid(rec.type)
  for N in probes:
    ok, res = M.check_ak_divisibility(rec, N, assume_conjecture=conj)
    assert ok, f'{rec.tag} fails against {N}: residual {res}'


# -- record shapes frozen from the catalogued statements -----------------

def test_fusion_shape():
  rec = M.fusion_rule(A3, 1, 3, 1)
  assert str(rec) == '1^2@(-q) (x) 1^1@(-q)^-2 ->> 1^3@1'
  assert rec.kind == 'fusion'


def test_gen_tsystem_shape():
  rec = M.generalized_tsystem(A3, 3, 2, 2)
  assert str(rec) == '1^2@(-q)^-2 (x) 2^2@(-q) ->> 3^2@1'
  assert rec.kind == 'gen_tsystem' and rec.socle is None


def test_classical_tsystem_shapes():
  assert str(M.classical_tsystem(A3, 2, 2)) == (
      '0 -> 2^1@1 (x) 2^3@1 -> 2^2@(-q)^-1 (x) 2^2@(-q) '
      '-> 1^2@1 (x) 3^2@1 -> 0')
  # B spin column, even and odd levels
  assert str(M.classical_tsystem(B3, 3, 4)) == (
      '0 -> 3^3@1 (x) 3^5@1 -> 3^4@(-qs)^-1 (x) 3^4@(-qs) '
      '-> 2^2@qs^-1 (x) 2^2@qs -> 0')
  assert str(M.classical_tsystem(B3, 3, 3)) == (
      '0 -> 3^2@1 (x) 3^4@1 -> 3^3@(-qs)^-1 (x) 3^3@(-qs) '
      '-> 2^2@-1 (x) 2^1@1 -> 0')
  # C next-to-spin and spin rows
  assert str(M.classical_tsystem(C3, 2, 3)) == (
      '0 -> 2^2@1 (x) 2^4@1 -> 2^3@(-qs)^-1 (x) 2^3@(-qs) '
      '-> 1^3@1 (x) 3^2@-1 (x) 3^1@1 -> 0')
  assert str(M.classical_tsystem(C3, 3, 2)) == (
      '0 -> 3^1@1 (x) 3^3@1 -> 3^2@(-q)^-1 (x) 3^2@(-q) -> 2^4@1 -> 0')
  # D trivalent node has three right-hand factors
  rec = M.classical_tsystem(D4, 2, 1)
  assert sorted(m.node for m in rec.head) == [1, 3, 4]


def test_tsystem_unsupported_types():
  for tn in ['G2~1', 'D4~3', 'A5~2', 'D5~2']:
    with pytest.raises(DomainError):
      M.classical_tsystem(AffineType.parse(tn), 1, 2)


def test_higher_dorey_shapes():
  assert str(M.higher_dorey(C3, 'k+l=n', 1, 2, 3)) == (
      '2^3@(-qs)^-1 (x) 1^3@q ->> 3^2@-1 (x) 3^1@1')
  assert str(M.higher_dorey(B3, 'B-folded', 4, 1, 2)) == (
      '1^2@(-q)^-3 (x) 2^2@q ->> 1^2@-1')
  assert str(M.higher_dorey(B3, 'spin-B', None, 1, 3,
                            assume_conjecture=True)) == (
      '3^3@qs^-3 (x) 3^3@qs^3 ->> 1^2@-1 (x) 1^1@1')
  assert M.higher_dorey(A3, 'k+l<n', 1, 2, 1).kind == 'dorey'
  assert M.higher_dorey(A3, 'k+l<n', 1, 2, 2).kind == 'higher_dorey'


def test_higher_dorey_domain_errors():
  with pytest.raises(DomainError):
    M.higher_dorey(A3, 'k+l=n', 2, 2, 1)        # no A spin end
  with pytest.raises(DomainError):
    M.higher_dorey(A3, 'k+l<n', 2, 2, 1)        # k+l = n
  with pytest.raises(DomainError):
    M.higher_dorey(B3, 'spin-B', None, 1, 3)    # odd level needs the flag
  with pytest.raises(DomainError):
    M.higher_dorey(B3, 'spin-B', None, 2, 3, assume_conjecture=True)
  with pytest.raises(DomainError):
    M.higher_dorey(B3, 'nonsense', 1, 1, 1)


def test_folded_mesh_shape():
  assert str(M.mesh_rule(B4, 7, 1, 4, 2, folded=True)) == (
      '3^2@(-q)^-3 (x) 2^2@q ->> 1^2@-1 (x) 2^2@(-q)^-2')


# -- divisibility checks --------------------------------------------------

def test_fusion_divisible_and_negative_control():
  rec = M.fusion_rule(A3, 1, 3, 1)
  assert_divisible(rec)
  bogus = M.MorphismRecord('fusion', rec.sources,
                           (KRModule.make(A3, 1, 3, minus_q(2)),),
                           None, 'corrupt')
  fails = sum(1 for N in probe_grid(A3)
              if not M.check_ak_divisibility(bogus, N)[0])
  assert fails > 0


@pytest.mark.parametrize('t,build', [
    (B3, lambda t: M.higher_dorey(t, 'k+l=n', 1, 2, 2)),
    (C3, lambda t: M.higher_dorey(t, 'k+l=n', 1, 2, 3)),
    (D4, lambda t: M.higher_dorey(t, 'k+l=n', 1, 2, 2)),
    (B3, lambda t: M.higher_dorey(t, 'B-folded', 4, 1, 2)),
    (B3, lambda t: M.higher_dorey(t, 'spin-B', None, 1, 2)),
    (B3, lambda t: M.higher_dorey(t, 'spin-B', None, 1, 3,
                                  assume_conjecture=True)),
    (C3, lambda t: M.higher_dorey(t, 'spin-C', None, 2, 2)),
    (D4, lambda t: M.higher_dorey(t, 'spin-D', None, 1, 2)),
    (B3, lambda t: M.classical_tsystem(t, 3, 3)),
    (C3, lambda t: M.classical_tsystem(t, 2, 3)),
    (C3, lambda t: M.classical_tsystem(t, 3, 2)),
    (D4, lambda t: M.classical_tsystem(t, 2, 2)),
    (A3, lambda t: M.generalized_tsystem(t, 3, 2, 2)),
    (B3, lambda t: M.generalized_tsystem(t, 5, 3, 2, folded=True)),
    (A4, lambda t: M.mesh_rule(t, 4, 1, 2, 2)),
    (C3, lambda t: M.mesh_rule(t, 3, 1, 2, 3)),
    (B4, lambda t: M.mesh_rule(t, 7, 1, 4, 2, folded=True)),
])
def test_record_divisible(t, build):
  assert_divisible(build(t), conj=True)


def test_catalog_divisible_small():
  for t in (A3, B3, C3, D4):
    probes = probe_grid(t, levels=(1, 2), exps=range(-1, 3))[:10]
    for rec in M.catalog(t, max_m=2):
      assert_divisible(rec, probes, conj=True)


# -- numeric predictions ---------------------------------------------------

def test_predicted_mesh_de():
  assert M.predicted_mesh_de(2, 2, 3) == 2
  assert M.predicted_mesh_de(1, 5, 9) == 1
  assert M.predicted_mesh_de(3, 3, 1) == 1
  with pytest.raises(DomainError):
    M.predicted_mesh_de(0, 1, 1)


@pytest.mark.parametrize('t,l,a,b,m', [
    (A4, 4, 1, 2, 2),
    (AffineType.parse('A6~1'), 5, 2, 2, 3),
    (B3, 3, 1, 1, 2), (C3, 3, 1, 2, 2),
])
def test_mesh_source_d_invariant(t, l, a, b, m):
  rec = M.mesh_rule(t, l, a, b, m)
  assert d_invariant(*rec.sources) == M.predicted_mesh_de(a, b, m)


def test_chain_d_one():
  # d = 1 between the adjacent-level chain modules behind the fusion tower
  for t, k in [(A3, 1), (A4, 2), (B3, 1), (C3, 1), (D4, 1)]:
    chk = t.kr_shift_point(k)
    for m in (1, 2, 3):
      a = KRModule.make(t, k, m, chk)
      b = KRModule.make(t, 1, m, t.kr_shift_point(1) ** -k)
      c = KRModule.make(t, 1, 1, t.kr_shift_point(1) ** (1 - m - k))
      if k + 1 < t.n - (1 if t.family == 'D' else 0):
        assert d_invariant(a, b) == 1
        assert d_invariant(a, c) == 1


def test_extended_tsystem_chain():
  from qaffine.qdata_iboxes import RepetitionQuiver, Reading
  r = Reading(RepetitionQuiver(B3), 'NE')
  chains = M.extended_tsystem_chain(r, 2, (0, 6))
  assert chains  # nonempty: adjacent strongly-linked pairs exist
  for ch in chains:
    assert d_invariant(r.fundamental(ch[0]), r.fundamental(ch[1])) == 1


def test_record_json_roundtrip_fields():
  rec = M.classical_tsystem(B3, 3, 3)
  d = rec.to_json()
  assert d['kind'] == 'tsystem' and 'socle' in d
  assert len(d['sources']) == 2


def test_mixed_type_record_rejected():
  with pytest.raises(DomainError):
    M.MorphismRecord('fusion',
                     (KRModule.make(A3, 1, 1),),
                     (KRModule.make(B3, 1, 1),), None, 'bad')
