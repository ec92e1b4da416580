import pytest

import gwpy


def chain2():
    return gwpy.Group(gwpy.Poset.chain(["a", "b"]), [2, 2])


def test_orders():
    assert chain2().theoretical_order() == 8
    assert gwpy.Group(gwpy.Poset(["a", "b"]), [2, 3]).theoretical_order() == 12
    py = gwpy.shape_instance("pyramid", [2, 2, 2])
    assert py.theoretical_order() == 32
    assert py.faithful_order() == 32
    big = gwpy.shape_instance("chain", [3, 3, 3])
    assert big.theoretical_order() == 6 * 6**3 * 6**9


def test_poset():
    p = gwpy.Poset(["k", "i", "j"], [("i", "k"), ("j", "k")])
    assert p.labels == ["i", "j", "k"]
    assert p.less("i", "k") and not p.less("i", "j")
    assert p.minimal_elements() == ["i", "j"]
    assert p.shape() == "pyramid"
    with pytest.raises(ValueError):
        gwpy.Poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_elements():
    g = chain2()
    f = g.parse_element("a[0] = ()\na[1] = (0 1)\nb[] = ()\n")
    h = g.parse_element("a[0] = ()\na[1] = ()\nb[] = (0 1)\n")
    assert (f * f).is_identity()
    assert f * f.inverse() == g.identity()
    assert f.act([0, 1]) == [1, 1]
    assert (h * f).act([0, 0]) == f.act(h.act([0, 0]))
    assert f.sign_vector() == [1, 0]
    assert str(g.parse_element(str(f))) == str(f)
    with pytest.raises(gwpy.InputError):
        g.parse_element("a[0] = (0 5)\n")


def test_instance_text():
    g = gwpy.parse_instance("elements: i j k\ncover: i < k\ncover: j < k\ndomain: i 2\ndomain: j 2\ndomain: k 2\n")
    assert g.theoretical_order() == 32
    with pytest.raises(ValueError, match="line 2"):
        gwpy.parse_instance("elements: a\ndomain: a x\n")


def test_certify_and_generators():
    g = gwpy.shape_instance("pyramid", [2, 2, 2])
    gens = gwpy.minimal_generators(g, seed=3)
    assert len(gens) == 3
    assert g.image_order(gens) == 32
    report = gwpy.certify(g)
    assert report["verdict"] == "Certified"
    assert report["d"] == 3
    assert report["oracle"]["d"] == 3
    assert gwpy.oracle_d(g, 4) == 3
    with pytest.raises(ValueError):
        gwpy.certify(gwpy.Group(gwpy.Poset(["a"]), [3]))


def test_decompose_and_suites():
    tree = gwpy.decompose(gwpy.shape_instance("antichain", [2, 3]))
    assert tree["kind"] == "product"
    assert tree["order"] == "12"
    assert all(c["passed"] for c in tree["checks"])
    g = gwpy.shape_instance("wrdi", [2, 2, 2])
    assert all(c["passed"] for c in gwpy.lemma_suite(g))
    assert all(c["passed"] for c in gwpy.axiom_suite(g))
    assert len(gwpy.desk_corpus()) >= 20
