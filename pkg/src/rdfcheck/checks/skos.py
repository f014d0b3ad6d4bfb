"""SKOS graph-structural, consistency-clash, and labeling checks.

These mirror the qSKOS quality issue catalog: structural issues over the
broader/narrower hierarchy, the S13/S27/S46 consistency conditions, and
labeling/documentation coverage.
"""

from __future__ import annotations

from ..catalog import Severity
from ..namespaces import DC11, DCTERMS, RDFS_LABEL, SKOS, compact
from ..terms import Iri, Literal, Term, term_sort_key
from ..violations import Violation, make_violation
from .context import GraphContext
from .graphalg import strongly_connected_components, weakly_connected_components
from .models import HierarchyGraph

SEMANTIC_RELATIONS = tuple(
    SKOS + local
    for local in (
        "semanticRelation",
        "broader",
        "narrower",
        "related",
        "broaderTransitive",
        "narrowerTransitive",
        "mappingRelation",
        "broadMatch",
        "narrowMatch",
        "relatedMatch",
        "exactMatch",
        "closeMatch",
    )
)

MAPPING_RELATIONS = tuple(
    SKOS + local
    for local in ("broadMatch", "narrowMatch", "relatedMatch", "exactMatch", "closeMatch")
)

#: Reciprocal assertions expected in the data (no owl:inverseOf reasoning).
INVERSE_TABLE = {
    SKOS + "broader": SKOS + "narrower",
    SKOS + "narrower": SKOS + "broader",
    SKOS + "hasTopConcept": SKOS + "topConceptOf",
    SKOS + "topConceptOf": SKOS + "hasTopConcept",
    SKOS + "related": SKOS + "related",
}

#: SKOS S46 mapping-clash table: skos:exactMatch may not be combined with
#: any of these on the same concept pair (derived from the SKOS reference,
#: where the condition is stated informally).
EXACT_MATCH_CLASHES = (SKOS + "broadMatch", SKOS + "narrowMatch", SKOS + "relatedMatch")

DOCUMENTATION_PROPERTIES = tuple(
    SKOS + local
    for local in (
        "note",
        "changeNote",
        "definition",
        "editorialNote",
        "example",
        "historyNote",
        "scopeNote",
    )
)

LABEL_PROPERTIES = (
    SKOS + "prefLabel",
    SKOS + "altLabel",
    RDFS_LABEL,
    DC11 + "title",
    DCTERMS + "title",
)

DEFAULT_REDUNDANCY_DEPTH = 50


def _concepts(ctx: GraphContext) -> list[Term]:
    return ctx.extension(SKOS + "Concept")


def _semantic_neighbours(ctx: GraphContext, node: Term) -> set[Term]:
    out: set[Term] = set()
    for prop in SEMANTIC_RELATIONS:
        for o in ctx.objects(node, prop):
            if not isinstance(o, Literal):
                out.add(o)
        out.update(ctx.subjects(prop, node))
    out.discard(node)
    return out


def check_skos_structure(
    ctx: GraphContext,
    hierarchy: HierarchyGraph,
    mode: str,
    *,
    depth_limit: int = DEFAULT_REDUNDANCY_DEPTH,
    cid: str = "skos-structure",
    severity: Severity = Severity.INFO,
) -> list[Violation]:
    handler = _STRUCTURE_MODES.get(mode)
    if handler is None:
        raise ValueError(f"unknown skos-structure mode {mode!r}")
    return handler(ctx, hierarchy, depth_limit, cid, severity)


def _orphans(ctx: GraphContext) -> list[Term]:
    return [c for c in _concepts(ctx) if not _semantic_neighbours(ctx, c)]


def _mode_orphan(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    return [
        make_violation(
            cid, severity, node, "orphan",
            "concept has no hierarchical or associative relation to any "
            "other resource", (),
        )
        for node in _orphans(ctx)
    ]


def _mode_disconnected(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    orphans = set(_orphans(ctx))
    nodes = [c for c in _concepts(ctx) if c not in orphans]
    node_set = set(nodes)
    edges = []
    for prop in SEMANTIC_RELATIONS:
        for triple in ctx.statements(prop):
            if triple.subject in node_set and triple.object in node_set:
                edges.append((triple.subject, triple.object))
    components = weakly_connected_components(nodes, edges)
    if len(components) <= 1:
        return []
    # all components except the largest are "islands"
    ranked = sorted(components, key=lambda c: (-len(c), [str(n) for n in c]))
    out = []
    for island in ranked[1:]:
        members = ", ".join(str(n) for n in island)
        out.append(
            make_violation(
                cid, severity, island[0], f"component:{len(island)}",
                f"disconnected concept cluster of size {len(island)}: {members}",
                (),
            )
        )
    return sorted(out, key=Violation.sort_key)


def _mode_cycles(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    succ = hierarchy.successor_map()
    components = strongly_connected_components(hierarchy.nodes, lambda n: succ.get(n, []))
    out = []
    for component in components:
        is_cycle = len(component) > 1 or (
            component[0] in succ.get(component[0], [])
            or (component[0], component[0]) in hierarchy.edges
        )
        if not is_cycle:
            continue
        members = ", ".join(str(n) for n in component)
        out.append(
            make_violation(
                cid, severity, component[0], f"cycle:{len(component)}",
                f"cyclic hierarchical relation through {len(component)} "
                f"concept(s): {members}", (),
            )
        )
    return sorted(out, key=Violation.sort_key)


def _mode_valueless(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    by_parent: dict[Term, list[Term]] = {}
    for child, parent in hierarchy.edges:
        by_parent.setdefault(parent, []).append(child)
    related = {
        (t.subject, t.object)
        for t in ctx.statements(SKOS + "related")
        if not isinstance(t.object, Literal)
    }
    out = []
    seen: set[tuple[Term, Term]] = set()
    for parent in sorted(by_parent, key=term_sort_key):
        siblings = sorted(set(by_parent[parent]), key=term_sort_key)
        for i, a in enumerate(siblings):
            for b in siblings[i + 1 :]:
                if (a, b) in seen:
                    continue
                if (a, b) in related or (b, a) in related:
                    seen.add((a, b))
                    out.append(
                        make_violation(
                            cid, severity, a, str(b),
                            f"sibling concepts {a} and {b} are also connected "
                            "by skos:related; the associative relation adds no "
                            "value", (),
                        )
                    )
    return sorted(out, key=Violation.sort_key)


def _mode_solely_transitive(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    out = []
    for trans, direct in (
        (SKOS + "broaderTransitive", SKOS + "broader"),
        (SKOS + "narrowerTransitive", SKOS + "narrower"),
    ):
        for triple in ctx.statements(trans):
            if isinstance(triple.object, Literal):
                continue
            if triple.object not in ctx.objects(triple.subject, direct):
                out.append(
                    make_violation(
                        cid, severity, triple.subject, f"{compact(trans)}|{triple.object}",
                        f"{compact(trans)} is not meant for assertions; "
                        f"{triple.subject} and {triple.object} are related by "
                        "it alone", (trans,),
                    )
                )
    return sorted(out, key=Violation.sort_key)


def _mode_unidirectional(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    out = []
    for prop, inverse in INVERSE_TABLE.items():
        for triple in ctx.statements(prop):
            if isinstance(triple.object, Literal):
                continue
            if prop == inverse and triple.subject == triple.object:
                continue
            if triple.subject not in ctx.graph.objects(triple.object, Iri(inverse)):
                out.append(
                    make_violation(
                        cid, severity, triple.subject,
                        f"{compact(prop)}|{triple.object}",
                        f"({triple.subject} {compact(prop)} {triple.object}) "
                        f"lacks the reciprocal {compact(inverse)} statement", (prop,),
                    )
                )
    return sorted(out, key=Violation.sort_key)


def _mode_omitted_top(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    out = []
    for scheme in ctx.extension(SKOS + "ConceptScheme"):
        has_top = bool(ctx.objects(scheme, SKOS + "hasTopConcept")) or bool(
            ctx.subjects(SKOS + "topConceptOf", scheme)
        )
        if not has_top:
            out.append(
                make_violation(
                    cid, severity, scheme, "no-top-concept",
                    "concept scheme declares no top concept as an entry point",
                    (),
                )
            )
    return out


def _mode_top_with_broader(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    tops: set[Term] = set()
    for triple in ctx.statements(SKOS + "hasTopConcept"):
        if not isinstance(triple.object, Literal):
            tops.add(triple.object)
    tops.update(t.subject for t in ctx.statements(SKOS + "topConceptOf"))
    out = []
    for top in sorted(tops, key=term_sort_key):
        broader = [o for o in ctx.objects(top, SKOS + "broader") if not isinstance(o, Literal)]
        for parent in broader:
            out.append(
                make_violation(
                    cid, severity, top, str(parent),
                    f"top concept has a broader concept {parent}; concepts "
                    "internal to the tree should not be top concepts", (),
                )
            )
    return out


def _mode_redundancy(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    succ = hierarchy.successor_map()
    out = []
    for a, b in sorted(hierarchy.edges, key=lambda e: (term_sort_key(e[0]), term_sort_key(e[1]))):
        verdict = _alt_path_exists(succ, a, b, depth_limit)
        if verdict is True:
            out.append(
                make_violation(
                    cid, severity, a, str(b),
                    f"direct hierarchical link {a} -> {b} is redundant with a "
                    "longer hierarchical path", (),
                )
            )
        elif verdict is None:
            out.append(
                make_violation(
                    cid, Severity.INFO, a, f"depth-limit|{b}",
                    f"redundancy search for {a} -> {b} hit the depth limit "
                    f"({depth_limit}); result indeterminate", (),
                )
            )
    return out


def _alt_path_exists(
    succ: dict[Term, list[Term]], start: Term, goal: Term, depth_limit: int
) -> bool | None:
    """Simple path of length >= 2 from start to goal, skipping the direct
    edge as first hop. None when the depth limit was hit without an answer."""
    limited = False

    def dfs(node: Term, visited: set[Term], depth: int) -> bool:
        nonlocal limited
        if depth > depth_limit:
            limited = True
            return False
        for child in succ.get(node, []):
            if depth == 1 and child == goal:
                continue  # the direct edge itself
            if child == goal:
                return True
            if child in visited:
                continue
            visited.add(child)
            if dfs(child, visited, depth + 1):
                return True
        return False

    found = dfs(start, {start}, 1)
    if found:
        return True
    return None if limited else False


def _mode_reflexive(ctx, hierarchy, depth_limit, cid, severity) -> list[Violation]:
    out = []
    for prop in SEMANTIC_RELATIONS:
        for triple in ctx.statements(prop):
            if triple.subject == triple.object:
                out.append(
                    make_violation(
                        cid, severity, triple.subject, compact(prop),
                        f"concept is related to itself via {compact(prop)}", (prop,),
                    )
                )
    return sorted(out, key=Violation.sort_key)


_STRUCTURE_MODES = {
    "orphan": _mode_orphan,
    "disconnected": _mode_disconnected,
    "cycles": _mode_cycles,
    "valueless-associative": _mode_valueless,
    "solely-transitive": _mode_solely_transitive,
    "unidirectional": _mode_unidirectional,
    "omitted-top-concepts": _mode_omitted_top,
    "top-with-broader": _mode_top_with_broader,
    "hierarchical-redundancy": _mode_redundancy,
    "reflexive": _mode_reflexive,
}


# --------------------------------------------------------------------------
# clashes


def check_skos_clashes(
    ctx: GraphContext,
    hierarchy: HierarchyGraph,
    mode: str,
    *,
    cid: str = "skos-clashes",
    severity: Severity = Severity.INFO,
) -> list[Violation]:
    if mode == "relation":
        return _clash_relation(ctx, hierarchy, cid, severity)
    if mode == "mapping":
        return _clash_mapping(ctx, cid, severity)
    if mode == "misuse":
        return _clash_misuse(ctx, cid, severity)
    raise ValueError(f"unknown skos-clashes mode {mode!r}")


def _reachable(succ: dict[Term, list[Term]], start: Term) -> set[Term]:
    seen: set[Term] = set()
    stack = [start]
    while stack:
        node = stack.pop()
        for child in succ.get(node, []):
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return seen


def _clash_relation(ctx, hierarchy: HierarchyGraph, cid, severity) -> list[Violation]:
    succ = hierarchy.successor_map()
    reach_cache: dict[Term, set[Term]] = {}
    out = []
    seen_pairs: set[tuple[Term, Term]] = set()
    for triple in ctx.statements(SKOS + "related"):
        a, b = triple.subject, triple.object
        if isinstance(b, Literal) or a == b:
            continue
        key = tuple(sorted((a, b), key=term_sort_key))
        if key in seen_pairs:
            continue
        seen_pairs.add(key)  # type: ignore[arg-type]
        for src, dst in ((a, b), (b, a)):
            if src not in reach_cache:
                reach_cache[src] = _reachable(succ, src)
            if dst in reach_cache[src]:
                out.append(
                    make_violation(
                        cid, severity, key[0], str(key[1]),
                        f"concepts {key[0]} and {key[1]} are associatively "
                        "related and also hierarchically connected (SKOS S27)",
                        (),
                    )
                )
                break
    return sorted(out, key=Violation.sort_key)


def _pair_props(ctx, props) -> dict[tuple[Term, Term], set[str]]:
    pairs: dict[tuple[Term, Term], set[str]] = {}
    for prop in props:
        for triple in ctx.statements(prop):
            if isinstance(triple.object, Literal) or triple.subject == triple.object:
                continue
            key = tuple(sorted((triple.subject, triple.object), key=term_sort_key))
            pairs.setdefault(key, set()).add(prop)  # type: ignore[arg-type]
    return pairs


def _clash_mapping(ctx, cid, severity) -> list[Violation]:
    pairs = _pair_props(ctx, MAPPING_RELATIONS)
    out = []
    for (a, b), props in sorted(
        pairs.items(), key=lambda kv: (term_sort_key(kv[0][0]), term_sort_key(kv[0][1]))
    ):
        if SKOS + "exactMatch" not in props:
            continue
        clashing = sorted(props & set(EXACT_MATCH_CLASHES))
        for prop in clashing:
            out.append(
                make_violation(
                    cid, severity, a, f"{compact(prop)}|{b}",
                    f"concepts {a} and {b} carry skos:exactMatch together with "
                    f"the clashing {compact(prop)} (SKOS S46)", (prop,),
                )
            )
    return out


def _clash_misuse(ctx, cid, severity) -> list[Violation]:
    out = []
    seen: set[tuple[Term, Term]] = set()
    for prop in MAPPING_RELATIONS:
        for triple in ctx.statements(prop):
            a, b = triple.subject, triple.object
            if isinstance(b, Literal):
                continue
            key = tuple(sorted((a, b), key=term_sort_key))
            if key in seen:
                continue
            schemes_a = set(ctx.objects(a, SKOS + "inScheme"))
            schemes_b = set(ctx.objects(b, SKOS + "inScheme"))
            if (schemes_a & schemes_b) or (not schemes_a and not schemes_b):
                seen.add(key)  # type: ignore[arg-type]
                reason = (
                    "share a concept scheme"
                    if schemes_a & schemes_b
                    else "are members of no concept scheme"
                )
                out.append(
                    make_violation(
                        cid, severity, key[0], str(key[1]),
                        f"mapping relation between {key[0]} and {key[1]} is "
                        f"misused: the concepts {reason}", (prop,),
                    )
                )
    return sorted(out, key=Violation.sort_key)


# --------------------------------------------------------------------------
# labeling and documentation


def check_skos_labeling(
    ctx: GraphContext,
    mode: str,
    *,
    cid: str = "skos-labeling",
    severity: Severity = Severity.INFO,
) -> list[Violation]:
    handler = _LABELING_MODES.get(mode)
    if handler is None:
        raise ValueError(f"unknown skos-labeling mode {mode!r}")
    return handler(ctx, cid, severity)


def _mode_undocumented(ctx, cid, severity) -> list[Violation]:
    out = []
    for concept in _concepts(ctx):
        if not any(ctx.objects(concept, p) for p in DOCUMENTATION_PROPERTIES):
            out.append(
                make_violation(
                    cid, severity, concept, "undocumented",
                    "concept carries none of the seven SKOS documentation "
                    "properties", (),
                )
            )
    return out


def _mode_overlapping(ctx, cid, severity) -> list[Violation]:
    groups: dict[tuple, list[Term]] = {}
    for concept in _concepts(ctx):
        schemes = ctx.objects(concept, SKOS + "inScheme") or [None]
        for lit in ctx.literal_objects(concept, SKOS + "prefLabel"):
            lang = lit.lang.lower() if lit.lang else ""
            for scheme in schemes:
                groups.setdefault((str(scheme), lang, lit.lexical), []).append(concept)
    out = []
    for (scheme, lang, text), members in sorted(groups.items()):
        distinct = sorted(set(members), key=term_sort_key)
        if len(distinct) > 1:
            listing = ", ".join(str(m) for m in distinct)
            out.append(
                make_violation(
                    cid, severity, distinct[0], f"{text}@{lang}",
                    f"preferred label {text!r} ({lang or 'no language'}) is "
                    f"shared by {listing} in one concept scheme", (),
                )
            )
    return sorted(out, key=Violation.sort_key)


def _mode_missing(ctx, cid, severity) -> list[Violation]:
    out = []
    focus_classes = (
        SKOS + "Concept",
        SKOS + "ConceptScheme",
        SKOS + "Collection",
        SKOS + "OrderedCollection",
    )
    seen: set[Term] = set()
    for cls in focus_classes:
        for node in ctx.extension(cls):
            if node in seen:
                continue
            seen.add(node)
            if not any(ctx.objects(node, p) for p in LABEL_PROPERTIES):
                out.append(
                    make_violation(
                        cid, severity, node, "unlabeled",
                        "SKOS resource has no human-readable label", (),
                    )
                )
    return sorted(out, key=Violation.sort_key)


def _mode_unprintable(ctx, cid, severity) -> list[Violation]:
    out = []
    for prop in (SKOS + "prefLabel", SKOS + "altLabel", SKOS + "hiddenLabel"):
        for triple in ctx.statements(prop):
            lit = triple.object
            if not isinstance(lit, Literal):
                continue
            bad = sorted({ch for ch in lit.lexical if not (ch.isalnum() or ch == " ")})
            if bad:
                out.append(
                    make_violation(
                        cid, severity, triple.subject, f"{compact(prop)}|{lit}",
                        f"label {lit} contains non-alphanumeric, non-blank "
                        f"character(s): {''.join(bad)!r}", (prop,),
                    )
                )
    return sorted(out, key=Violation.sort_key)


def _mode_empty(ctx, cid, severity) -> list[Violation]:
    out = []
    for prop in (SKOS + "prefLabel", SKOS + "altLabel", SKOS + "hiddenLabel"):
        for triple in ctx.statements(prop):
            lit = triple.object
            if not isinstance(lit, Literal):
                continue
            if "".join(lit.lexical.split()) == "":
                out.append(
                    make_violation(
                        cid, severity, triple.subject, f"{compact(prop)}|{lit}",
                        "label is empty after removing whitespace", (prop,),
                    )
                )
    return sorted(out, key=Violation.sort_key)


def _mode_ambiguous_notation(ctx, cid, severity) -> list[Violation]:
    groups: dict[tuple, list[Term]] = {}
    for concept in _concepts(ctx):
        for scheme in ctx.objects(concept, SKOS + "inScheme"):
            for lit in ctx.literal_objects(concept, SKOS + "notation"):
                groups.setdefault((str(scheme), lit.lexical, lit.datatype), []).append(concept)
    out = []
    for (scheme, text, datatype), members in sorted(groups.items()):
        distinct = sorted(set(members), key=term_sort_key)
        if len(distinct) > 1:
            listing = ", ".join(str(m) for m in distinct)
            out.append(
                make_violation(
                    cid, severity, distinct[0], f"{text}|{scheme}",
                    f"notation {text!r} is shared by {listing} within one "
                    "concept scheme", (),
                )
            )
    return sorted(out, key=Violation.sort_key)


_LABELING_MODES = {
    "undocumented": _mode_undocumented,
    "overlapping": _mode_overlapping,
    "missing": _mode_missing,
    "unprintable": _mode_unprintable,
    "empty": _mode_empty,
    "ambiguous-notation": _mode_ambiguous_notation,
}
