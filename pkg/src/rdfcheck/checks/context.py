"""Shared evaluation context: graph plus catalog-declared hierarchy closure.

Type membership is closed-world: a node is an instance of a class iff an
rdf:type triple says so, directly or through the inventory's subclass
edges. No domain/range inference happens here, since inferring types would mask
the very modeling errors the checkers look for.
"""

from __future__ import annotations

from ..catalog import Catalog
from ..graph import Graph
from ..namespaces import RDF_TYPE
from ..terms import Iri, Literal, Term, term_sort_key

_EMPTY_CATALOG = Catalog({}, {})


class GraphContext:
    def __init__(self, graph: Graph, catalog: Catalog | None = None):
        self.graph = graph
        self.catalog = catalog if catalog is not None else _EMPTY_CATALOG
        self._types: dict[Term, frozenset[str]] | None = None
        self._extensions: dict[str, list[Term]] = {}

    def _type_map(self) -> dict[Term, frozenset[str]]:
        if self._types is None:
            mapping: dict[Term, set[str]] = {}
            for triple in self.graph.match(None, Iri(RDF_TYPE), None):
                if isinstance(triple.object, Iri):
                    closed = self.catalog.superclasses(triple.object.value)
                    mapping.setdefault(triple.subject, set()).update(closed)
            self._types = {node: frozenset(types) for node, types in mapping.items()}
        return self._types

    def types_of(self, node: Term) -> frozenset[str]:
        return self._type_map().get(node, frozenset())

    def has_type(self, node: Term, cls: str) -> bool:
        return cls in self.types_of(node)

    def extension(self, cls: str) -> list[Term]:
        """Instances of ``cls`` under closed-world typing, in sorted order."""
        cached = self._extensions.get(cls)
        if cached is None:
            cached = sorted(
                (node for node, types in self._type_map().items() if cls in types),
                key=term_sort_key,
            )
            self._extensions[cls] = cached
        return cached

    def statements(self, prop: str) -> list:
        return self.graph.match(None, Iri(prop), None)

    def objects(self, node: Term, prop: str) -> list[Term]:
        return self.graph.objects(node, Iri(prop))

    def subjects(self, prop: str, obj: Term) -> list[Term]:
        return self.graph.subjects(Iri(prop), obj)

    def literal_objects(self, node: Term, prop: str) -> list[Literal]:
        return [o for o in self.objects(node, prop) if isinstance(o, Literal)]

    def follow_path(self, node: Term, path: list[str]) -> list[Term]:
        """Walk a property path; ``^p`` steps go backward, ``@members``
        expands a code-list node (scheme members, collection members, or a
        memberList collection) into its member terms."""
        frontier: list[Term] = [node]
        for step in path:
            nxt: list[Term] = []
            for current in frontier:
                if step == "@members":
                    nxt.extend(collection_members(self, current))
                elif step.startswith("^"):
                    if not isinstance(current, Literal):
                        nxt.extend(self.subjects(step[1:], current))
                else:
                    nxt.extend(self.objects(current, step))
            seen: set[Term] = set()
            deduped: list[Term] = []
            for term in nxt:
                if term not in seen:
                    seen.add(term)
                    deduped.append(term)
            frontier = deduped
        return sorted(frontier, key=term_sort_key)


def collection_members(ctx: GraphContext, node: Term) -> list[Term]:
    """Members of a code-list-ish node, however it is organized.

    Tries, in order: skos:memberList (list walk, broken spines yield the
    sound prefix), skos:member, and inverse skos:inScheme.
    """
    from ..graph import MalformedListError, walk_rdf_list
    from ..namespaces import SKOS

    heads = ctx.objects(node, SKOS + "memberList")
    if heads:
        members: list[Term] = []
        for head in heads:
            try:
                members.extend(walk_rdf_list(ctx.graph, head))
            except MalformedListError as exc:
                members.extend(exc.prefix)
        return members
    members = ctx.objects(node, SKOS + "member")
    if members:
        return members
    return ctx.subjects(SKOS + "inScheme", node)
