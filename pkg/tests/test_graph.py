import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdfcheck.graph import Graph, MalformedListError, isomorphic, walk_rdf_list
from rdfcheck.namespaces import RDF_FIRST, RDF_NIL, RDF_REST
from rdfcheck.terms import BlankNode, Iri, Literal, Triple

from conftest import graph, iri, lit, triple


def _random_term(rng, kind):
    if kind == "iri":
        return Iri(f"http://t/{rng.randrange(8)}")
    if kind == "blank":
        return BlankNode(f"b{rng.randrange(4)}")
    return Literal(str(rng.randrange(6)))


def _random_graph(rng, size):
    triples = []
    for _ in range(size):
        s = _random_term(rng, rng.choice(["iri", "blank"]))
        p = _random_term(rng, "iri")
        o = _random_term(rng, rng.choice(["iri", "blank", "literal"]))
        triples.append(Triple(s, p, o))
    return Graph(triples)


def test_match_fully_bound():
    g = graph(("ex:s", "ex:p", "ex:o"))
    t = triple("ex:s", "ex:p", "ex:o")
    assert g.match(t.subject, t.predicate, t.object) == [t]


def test_match_empty_graph_is_empty():
    assert Graph().match() == []


def test_match_equals_linear_scan_on_random_graphs():
    # index-backed lookup must agree with a brute-force filter for every
    # pattern shape
    rng = random.Random(20250809)
    for _ in range(200):
        g = _random_graph(rng, rng.randrange(0, 40))
        universe = list(g) or [triple("ex:s", "ex:p", "ex:o")]
        probe = rng.choice(universe)
        for mask in range(8):
            s = probe.subject if mask & 1 else None
            p = probe.predicate if mask & 2 else None
            o = probe.object if mask & 4 else None
            expected = sorted(
                (
                    t
                    for t in g
                    if (s is None or t.subject == s)
                    and (p is None or t.predicate == p)
                    and (o is None or t.object == o)
                ),
                key=Triple.sort_key,
            )
            assert g.match(s, p, o) == expected


@given(st.integers(min_value=0, max_value=60), st.integers())
@settings(max_examples=40, deadline=None)
def test_graph_deduplicates_and_sorts(size, seed):
    rng = random.Random(seed)
    triples = [
        Triple(_random_term(rng, "iri"), _random_term(rng, "iri"),
               _random_term(rng, "literal"))
        for _ in range(size)
    ]
    g = Graph(triples)
    assert len(g) == len(set(triples))
    listed = list(g)
    assert listed == sorted(listed, key=Triple.sort_key)


def _list_graph(members):
    triples = []
    nodes = [BlankNode(f"l{i}") for i in range(len(members))]
    for i, member in enumerate(members):
        triples.append(Triple(nodes[i], Iri(RDF_FIRST), member))
        rest = nodes[i + 1] if i + 1 < len(members) else Iri(RDF_NIL)
        triples.append(Triple(nodes[i], Iri(RDF_REST), rest))
    return Graph(triples), (nodes[0] if nodes else Iri(RDF_NIL))


def test_walk_list_in_order():
    members = [iri("ex:a"), iri("ex:b"), iri("ex:c")]
    g, head = _list_graph(members)
    assert walk_rdf_list(g, head) == members


def test_walk_nil_is_empty():
    assert walk_rdf_list(Graph(), Iri(RDF_NIL)) == []


def test_walk_list_cycle_reports_prefix():
    members = [iri("ex:a"), iri("ex:b")]
    g, head = _list_graph(members)
    # bend the last rest back to the head
    bent = [t for t in g if t.object != Iri(RDF_NIL)]
    bent.append(Triple(BlankNode("l1"), Iri(RDF_REST), head))
    with pytest.raises(MalformedListError) as err:
        walk_rdf_list(Graph(bent), head)
    assert err.value.prefix == members


def test_walk_list_double_first_is_malformed():
    g, head = _list_graph([iri("ex:a")])
    extra = list(g) + [Triple(BlankNode("l0"), Iri(RDF_FIRST), iri("ex:z"))]
    with pytest.raises(MalformedListError):
        walk_rdf_list(Graph(extra), head)


def test_isomorphic_blank_relabeling():
    g1 = Graph([
        Triple(BlankNode("x"), iri("ex:p"), BlankNode("y")),
        Triple(BlankNode("y"), iri("ex:p"), iri("ex:end")),
    ])
    g2 = Graph([
        Triple(BlankNode("b7"), iri("ex:p"), BlankNode("b3")),
        Triple(BlankNode("b3"), iri("ex:p"), iri("ex:end")),
    ])
    assert isomorphic(g1, g2)


def test_isomorphic_detects_difference():
    g1 = Graph([Triple(BlankNode("x"), iri("ex:p"), lit("1"))])
    g2 = Graph([Triple(BlankNode("x"), iri("ex:p"), lit("2"))])
    assert not isomorphic(g1, g2)


def test_isomorphic_respects_structure_not_labels():
    # two blanks with distinct roles cannot be swapped
    g1 = Graph([
        Triple(BlankNode("a"), iri("ex:p"), lit("1")),
        Triple(BlankNode("b"), iri("ex:q"), lit("2")),
    ])
    g2 = Graph([
        Triple(BlankNode("a"), iri("ex:q"), lit("1")),
        Triple(BlankNode("b"), iri("ex:p"), lit("2")),
    ])
    assert not isomorphic(g1, g2)
