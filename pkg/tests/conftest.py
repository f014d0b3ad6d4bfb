from __future__ import annotations

from pathlib import Path

import pytest

from rdfcheck.catalog import Catalog, builtin_catalog
from rdfcheck.checks.context import GraphContext
from rdfcheck.graph import Graph
from rdfcheck.namespaces import expand as _expand_wellknown
from rdfcheck.terms import BlankNode, Iri, Literal, Triple
from rdfcheck.turtle import parse_turtle

FIXTURES = Path(__file__).parent / "fixtures"


def expand(compact: str) -> str:
    if compact.startswith("ex:"):
        return "http://example.org/" + compact[3:]
    return _expand_wellknown(compact)


def iri(compact: str) -> Iri:
    return Iri(expand(compact))


def lit(lexical: str, datatype: str | None = None, lang: str | None = None) -> Literal:
    if lang is not None:
        return Literal(lexical, lang=lang)
    if datatype is not None:
        return Literal(lexical, datatype=expand(datatype))
    return Literal(lexical)


def triple(s, p, o) -> Triple:
    def term(x):
        if isinstance(x, (Iri, BlankNode, Literal)):
            return x
        return iri(x)

    return Triple(term(s), term(p), term(o))


def graph(*spo_rows) -> Graph:
    return Graph([triple(*row) for row in spo_rows])


def ctx_for(g: Graph, catalog: Catalog | None = None) -> GraphContext:
    return GraphContext(g, catalog)


def load_fixture(name: str) -> Graph:
    return parse_turtle((FIXTURES / name).read_bytes())


@pytest.fixture(scope="session")
def full_catalog() -> Catalog:
    return builtin_catalog()


@pytest.fixture(scope="session")
def disco_catalog() -> Catalog:
    return builtin_catalog({"disco"})


@pytest.fixture(scope="session")
def qb_catalog() -> Catalog:
    return builtin_catalog({"qb"})


@pytest.fixture(scope="session")
def skos_catalog() -> Catalog:
    return builtin_catalog({"skos"})


@pytest.fixture(scope="session")
def eusilc() -> Graph:
    return load_fixture("eusilc.ttl")


@pytest.fixture(scope="session")
def cube_fixture() -> Graph:
    return load_fixture("cube.ttl")
