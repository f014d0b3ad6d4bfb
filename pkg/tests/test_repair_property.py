"""Adding the triple a missing-triple finding asks for removes exactly that
finding, for every checker that reports absent statements."""

import pytest

from rdfcheck.catalog import builtin_catalog
from rdfcheck.engine import validate
from rdfcheck.graph import Graph

from conftest import graph, lit, triple

CATALOG = builtin_catalog()


def _typed(node, cls):
    return (node, "rdf:type", cls)


CASES = [
    (
        "subsumption",
        "DISCO-C-SUBSUMPTION-01",
        [_typed("ex:u", "disco:Universe")],
        [_typed("ex:u", "skos:Concept")],
    ),
    (
        "subproperty",
        "DISCO-C-SUB-PROPERTIES-01",
        [("ex:s", "disco:fundedBy", "ex:agency")],
        [("ex:s", "dcterms:contributor", "ex:agency")],
    ),
    (
        "inverse-pair",
        "DISCO-C-INVERSE-OBJECT-PROPERTIES-02",
        [("ex:ss", "disco:statisticsVariable", "ex:v")],
        [("ex:v", "disco:summaryStatistics", "ex:ss")],
    ),
    (
        "equivalent-properties",
        "DISCO-C-EQUIVALENT-PROPERTIES-01",
        [("ex:d", "disco:containsVariable", "ex:v")],
        [("ex:d", "disco:variable", "ex:v")],
    ),
    (
        "presence",
        "DISCO-C-EXISTENTIAL-QUANTIFICATIONS-39",
        [_typed("ex:q", "disco:Question")],
        [("ex:q", "disco:questionText", lit("Question text?", lang="en"))],
    ),
    (
        "cardinality-min",
        "DISCO-C-EXISTENTIAL-QUANTIFICATIONS-02",
        [_typed("ex:study", "disco:Study")],
        [("ex:study", "disco:universe", "ex:u2"), _typed("ex:u2", "disco:Universe")],
    ),
    (
        "conditional",
        "DISCO-C-CONDITIONAL-PROPERTIES-01",
        [
            _typed("ex:c", "skos:Concept"),
            ("ex:c", "skos:notation", lit("1")),
            ("ex:c", "skos:prefLabel", lit("One", lang="en")),
        ],
        [("ex:c", "disco:isValid", lit("true", "xsd:boolean"))],
    ),
    (
        "uniqueness-totality",
        "SKOS-C-STRUCTURE-06",
        [
            _typed("ex:a", "skos:Concept"),
            _typed("ex:b", "skos:Concept"),
            ("ex:a", "skos:broader", "ex:b"),
        ],
        [("ex:b", "skos:narrower", "ex:a")],
    ),
]


@pytest.mark.parametrize("label, cid, broken_rows, repair_rows", CASES,
                         ids=[c[0] for c in CASES])
def test_satisfying_triple_removes_the_finding(label, cid, broken_rows, repair_rows):
    constraint = [CATALOG.constraints[cid]]
    broken = graph(*broken_rows)
    before = validate(broken, CATALOG, constraint)
    assert len(before.violations) >= 1
    keys = {(v.constraint_id, v.focus, v.detail) for v in before.violations}

    repaired = Graph(list(broken) + [triple(*row) for row in repair_rows])
    after = validate(repaired, CATALOG, constraint)
    after_keys = {(v.constraint_id, v.focus, v.detail) for v in after.violations}
    assert after_keys == set()
    assert keys - after_keys == keys
