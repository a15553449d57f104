import math

import pytest

from specert.families import (Family, MembershipCapExceeded, biregular_bipartite, circulant_regular,
                              families_for, gen_EC, gen_EP, gen_ES, gen_union_cliques, membership,
                              validate_witness)
from specert.graph import (Graph, complement, complete, complete_bipartite, cycle, empty, is_connected,
                           is_regular, join, min_degree, union)
from specert.params import Theorem, TheoremParams
from specert.spectral import Verdict, compare_to_bound, spectral_radius
from specert.certify import radicand

from witness_check import check_family


def conn(k, s):
    return TheoremParams(Theorem.S_CONN, k, s=s)


def ham(k, s):
    return TheoremParams(Theorem.S_HAM, k, s=s)


def test_gen_EP_examples():
    g = gen_EP(6, 2, 0, core=empty(4), g2=complete(2))
    assert g == join(empty(4), complete(2))
    assert min_degree(g) == 2
    assert spectral_radius(complement(g)).value == pytest.approx(3, abs=1e-10)
    g = gen_EP(7, 3, 0, core=empty(4), g2=complete(3))
    assert min_degree(g) == 3
    with pytest.raises(ValueError):
        gen_EP(6, 2, 1, core=cycle(4))


def test_gen_EP_defaults_and_checks():
    g = gen_EP(8, 3, 2)
    assert min_degree(g) == 3
    assert gen_EP(6, 2, 0, g2_edges=0) == Graph.from_edges(
        6, [(u, v) for u in range(4) for v in (4, 5)])
    with pytest.raises(ValueError):
        gen_EP(6, 2, 3)
    with pytest.raises(ValueError):
        gen_EP(6, 2, 0, core=empty(5))
    with pytest.raises(ValueError):
        gen_EP(6, 2, 0, g2=complete(3))


def test_circulant_regular():
    assert circulant_regular(6, 3) == circulant_regular(6, 3)
    for order, r in [(7, 2), (8, 3), (9, 4), (10, 5), (5, 0)]:
        assert is_regular(circulant_regular(order, r)) == r
    with pytest.raises(ValueError):
        circulant_regular(7, 3)
    with pytest.raises(ValueError):
        circulant_regular(4, 4)


def test_biregular_bipartite():
    assert biregular_bipartite(2, 3, 3, 2) == complete_bipartite(2, 3)
    g = biregular_bipartite(4, 6, 3, 2)
    assert g.degrees() == [3] * 4 + [2] * 6
    with pytest.raises(ValueError):
        biregular_bipartite(3, 3, 2, 1)
    with pytest.raises(ValueError):
        biregular_bipartite(2, 2, 3, 3)


def test_gen_EC_default():
    # n=9, k=4, s=1: F = K_{4,5}, so G = K_4 + K_5 and nothing is joined.
    g = gen_EC(9, 4, 1)
    assert g == union(complete(4), complete(5))
    # The K_4 side has degree 3 < k: EC members reach delta >= k only when
    # n >= 2k - s + 3.
    assert min_degree(g) == 3
    assert membership(g, Family.EC, conn(4, 1)) is None


def test_gen_EC_boundary_instance():
    # n=10, k=4, s=2: (K_5 + K_4) v K_1 with complement K_{5,4} + K_1.
    g = gen_EC(10, 4, 2)
    assert g == join(union(complete(5), complete(4)), complete(1))
    assert min_degree(g) == 4
    p = conn(4, 2)
    mu = spectral_radius(complement(g))
    assert mu.value == pytest.approx(math.sqrt(20), abs=1e-10)
    assert compare_to_bound(mu, radicand(p, 10)).verdict is Verdict.EQUAL
    w = membership(g, Family.EC, p)
    assert w is not None and (w.r, w.m, w.t) == (0, 0, 0)
    assert check_family(g, w, 4, 2) and validate_witness(g, w, p)


def test_gen_EC_errors():
    with pytest.raises(ValueError):
        gen_EC(10, 4, 1, m=1)
    with pytest.raises(ValueError):
        gen_EC(10, 4, 2, m=1, t=0)


def test_gen_ES_example():
    g = gen_ES(7, 3, 0)
    assert g == join(union(complete(3), complete(3)), complete(1))
    assert min_degree(g) == 3
    assert spectral_radius(complement(g)).value == pytest.approx(3, abs=1e-10)
    w = membership(g, Family.ES, ham(3, 0))
    assert w is not None and check_family(g, w, 3, 0)
    with pytest.raises(ValueError):
        gen_ES(7, 3, 0, m=1, t=1)
    with pytest.raises(ValueError):
        gen_ES(7, 3, 0, m=1)


def test_gen_ES_with_offsets():
    # n=9, k=4, s=2, m=2, t=1: |X| = 6 with degree 2 and |Y| = 3 with degree 4,
    # built by the cyclic rule; the join part is empty.
    g = gen_ES(9, 4, 2, m=2, t=1)
    assert min_degree(g) == 4
    w = membership(g, Family.ES, ham(4, 2))
    assert w is not None and (w.m, w.t, w.r) == (2, 1, 3)
    assert len(w.join_part) == 0 and check_family(g, w, 4, 2)


def test_gen_union_cliques():
    assert gen_union_cliques(10, 4) == union(complete(5), complete(5))
    assert spectral_radius(complement(gen_union_cliques(10, 4))).value == pytest.approx(5, abs=1e-10)
    assert gen_union_cliques(3, 0) == union(complete(1), complete(2))
    g = gen_union_cliques(7, 2)
    assert g == union(complete(3), complete(4)) and not is_connected(g)
    with pytest.raises(ValueError):
        gen_union_cliques(5, 5)


def test_membership_examples():
    w = membership(join(empty(4), complete(2)), Family.EP, conn(2, 1))
    assert w.r == 0 and w.core == frozenset(range(4)) and w.join_part == frozenset({4, 5})
    uc = TheoremParams(Theorem.DEFICIENT, 4, beta=0)
    w = membership(gen_union_cliques(10, 4), Family.UNION_CLIQUES, uc)
    assert w is not None and w.core == frozenset(range(5))
    # C_7 is 2-regular on n - k + r = 7 vertices with r = k = 2, so it lies in
    # EP with an empty join part; at k = 1 no split works.
    w = membership(cycle(7), Family.EP, conn(2, 1))
    assert w.r == 2 and w.join_part == frozenset()
    assert membership(cycle(7), Family.EP, conn(1, 1)) is None


def test_membership_requires_min_degree():
    g = join(empty(4), complete(2))
    assert membership(g, Family.EP, conn(3, 1)) is None


def test_membership_cap():
    with pytest.raises(MembershipCapExceeded) as info:
        membership(complete(17), Family.EP, conn(2, 1))
    assert info.value.cap == 16
    assert membership(complete(17), Family.EP, conn(2, 1), cap=20) is None


def test_ep_search_over_optional_join_vertices():
    # K_{3,3} at k = 3: every vertex has degree k, so degrees do not force the
    # join part and either side may serve.
    g = complete_bipartite(3, 3)
    w = membership(g, Family.EP, conn(3, 1))
    assert w is not None and w.r == 0 and len(w.join_part) == 3
    assert check_family(g, w, 3, 1)


def test_round_trip_generators():
    cases = []
    for n in range(5, 12):
        for k in range(1, (n - 1) // 2 + 1):
            for r in range(0, k + 1):
                try:
                    cases.append((gen_EP(n, k, r), Family.EP, conn(k, 1)))
                except ValueError:
                    pass
            for s in range(1, k + 2):
                try:
                    cases.append((gen_EC(n, k, s), Family.EC, conn(k, s)))
                except ValueError:
                    pass
            for s in range(0, k):
                try:
                    cases.append((gen_ES(n, k, s), Family.ES, ham(k, s)))
                except ValueError:
                    pass
    checked = 0
    for g, fam, p in cases:
        if min_degree(g) < p.k:
            continue
        w = membership(g, fam, p)
        assert w is not None and w.family is fam
        assert validate_witness(g, w, p) and check_family(g, w, p.k, p.s)
        checked += 1
    assert checked > 50


def test_families_for():
    assert families_for(conn(2, 1)) == [Family.EP, Family.EC]
    assert families_for(TheoremParams(Theorem.S_EDGE_CONN, 2, s=1)) == [Family.EP, Family.EC]
    assert families_for(ham(2, 0)) == [Family.EP, Family.ES]
    assert families_for(TheoremParams(Theorem.DEFICIENT, 4, beta=0)) == [Family.UNION_CLIQUES, Family.EP]
    assert families_for(TheoremParams(Theorem.DEFICIENT, 4, beta=1)) == [Family.EP]
    assert families_for(TheoremParams(Theorem.PATH_COVER, 2, s=1)) == [Family.UNION_CLIQUES, Family.EP]
    assert families_for(TheoremParams(Theorem.PATH_COVER, 2, s=2)) == [Family.EP]


def test_validate_witness_rejects_tampering():
    g = join(empty(4), complete(2))
    p = conn(2, 1)
    w = membership(g, Family.EP, p)
    bad = type(w)(w.family, frozenset({0, 1, 2, 4}), frozenset({3, 5}), w.r)
    assert not validate_witness(g, bad, p)
    assert not check_family(g, bad, 2, 1)
