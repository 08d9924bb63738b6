import pytest

import bubblepat as bp


def p(text):
    return bp.parse(text)


def strs(perms):
    return sorted(str(q) for q in perms)


def test_version():
    assert bp.__version__ == "0.1.0"


def test_parse_and_render():
    q = p("3 1 5 2 7 4 6")
    assert len(q) == 7
    assert q.values == [3, 1, 5, 2, 7, 4, 6]
    assert str(q) == "3 1 5 2 7 4 6"
    assert q.display() == "3152746"
    assert p("231") == bp.Permutation([2, 3, 1])
    with pytest.raises(bp.Error):
        p("122")
    with pytest.raises(bp.Error):
        p("")


def test_passes():
    assert bp.bubble(p("3152746")) == p("1325467")
    assert bp.bubble_recursive(p("3152746")) == p("1325467")
    assert bp.stack_pass(p("231")) == p("213")
    assert bp.apply_chain(p("2431"), "SB") == p("2134")
    assert bp.bubble_k(p("4321"), 3) == p("1234")
    assert bp.bubble(p("213")).is_identity()


def test_containment():
    assert bp.contains(p("3152746"), p("231"))
    assert not bp.contains(p("123"), p("21"))
    assert bp.standardize([4, 9, 2]) == p("231")
    assert strs(bp.one_point_deletions(p("231"))) == ["1 2", "2 1"]


def test_classify():
    cls = bp.classify(p("231"))
    assert cls.case == "TwoLrGeneral"
    assert cls.good
    assert cls.lr_maxima_positions == [1, 2]
    assert cls.json()["case"] == "TwoLrGeneral"
    assert not bp.classify(p("2341")).good


def test_inverse_basis():
    r = bp.inverse_basis(p("231"))
    assert r.outcome == "Basis"
    assert strs(r.basis) == ["2 3 4 1", "2 4 3 1", "3 2 4 1", "4 2 3 1"]
    assert r.cross_checked
    assert r.case_used == "TwoLrGeneral"
    assert r.json()["outcome"] == "Basis"

    bad = bp.inverse_basis(p("1234"))
    assert bad.outcome == "NotAClass"
    t1, t2 = bad.witness
    assert str(t1) == "2 1 4 3"
    assert str(t2) == "5 2 1 4 3"


def test_inverse_basis_set():
    r = bp.inverse_basis_set([p("231"), p("321")])
    assert r.outcome == "Basis"
    assert len(r.basis) == 6
    with pytest.raises(bp.Error):
        bp.inverse_basis_set([p("21"), p("2341")])


def test_witness_pair():
    t1, t2 = bp.witness_pair(p("1234"))
    assert bp.contains(t2, t1)
    assert bp.contains(bp.bubble(t1), p("1234"))
    assert not bp.contains(bp.bubble(t2), p("1234"))


def test_oracle():
    assert bp.in_inverse_class(p("4321"), p("1234"))
    assert strs(bp.empirical_basis(p("21"), 5)) == ["2 3 1", "3 2 1"]
    rep = bp.downset_check(p("1234"), 6)
    assert not rep.is_downset
    assert str(rep.inside) == "2 4 1 5 3"
    assert str(rep.outside) == "2 1 4 3"
    assert bp.check_set_class(bp.gamma(2), 6).is_downset


def test_counting():
    cs = bp.count_av([p("231"), p("321")], 8)
    assert cs.counts == {n: 2 ** (n - 1) for n in range(1, 9)}
    assert bp.growth_estimate(cs) == pytest.approx(2 ** (7 / 8))
    assert cs.csv().startswith("n,count,root\n1,1,1.000000\n")
    naive = bp.count_av_naive([p("231"), p("321")], 6)
    assert naive.counts == {n: 2 ** (n - 1) for n in range(1, 7)}


def test_gamma():
    assert strs(bp.gamma(1)) == ["2 3 1", "3 2 1"]
    assert len(bp.gamma(2)) == 6
    assert bp.verify_gamma(2, 6)


def test_enumerate_sn():
    perms = bp.enumerate_sn(3)
    assert len(perms) == 6
    assert perms[0].is_identity()


def test_cap():
    assert bp.practical_cap() == 11
    with pytest.raises(bp.Error):
        bp.downset_check(p("21"), 12)


def test_run_suite():
    passed, text, report = bp.run_suite("operators", 5)
    assert passed
    assert text.startswith("suite operators (horizon 5)")
    assert report["passed"] is True
