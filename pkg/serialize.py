"""
JSON, DOT and table parsing for everything the command line emits.
"""
import dataclasses
import enum
import json

import graphviz as gv
import numpy as np
import serpy

from algebra import OpTable
from cayley_builder import CayleyDigraph
from gp_core import SimpleGraph
from hom_engine import VertexMap

ARC_COLORS = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "gray")


class GraphSerializer(serpy.Serializer):
    """ {"n", "k", "vertices", "edges"} with edges sorted """
    n = serpy.MethodField()
    k = serpy.MethodField()
    vertices = serpy.MethodField()
    edges = serpy.MethodField()

    def get_n(self, graph):
        return None if graph.params is None else graph.params.n

    def get_k(self, graph):
        return None if graph.params is None else graph.params.k

    def get_vertices(self, graph):
        return [graph.label(v) for v in graph.vertices]

    def get_edges(self, graph):
        return [[u, v] for u, v in graph.edges()]


class CoreVerdictSerializer(serpy.Serializer):
    status = serpy.MethodField()
    reason = serpy.MethodField()
    d = serpy.IntField()
    a = serpy.IntField()

    def get_status(self, verdict):
        return verdict.status.value

    def get_reason(self, verdict):
        return None if verdict.reason is None else verdict.reason.value


class TableSerializer(serpy.Serializer):
    """ a Representation, or anything with .table and .connection """
    order = serpy.MethodField()
    table = serpy.MethodField()
    labels = serpy.MethodField()
    connection = serpy.MethodField()

    def get_order(self, rep):
        return rep.table.order

    def get_table(self, rep):
        return rep.table.to_lists()

    def get_labels(self, rep):
        return [rep.table.label(x) for x in rep.table.elements]

    def get_connection(self, rep):
        return list(rep.connection)


class RepresentationReportSerializer(serpy.Serializer):
    associative = serpy.BoolField()
    identity = serpy.IntField(required=False)
    generates = serpy.BoolField()
    loopless = serpy.BoolField()
    loop_count = serpy.IntField()
    is_group = serpy.MethodField()
    is_orthogroup = serpy.MethodField()
    iso_target = serpy.MethodField()
    iso_witness = serpy.MethodField()

    def get_is_group(self, report):
        return report.algebra.is_group

    def get_is_orthogroup(self, report):
        return report.algebra.is_orthogroup

    def get_iso_target(self, report):
        return None if report.iso_target is None else list(report.iso_target)

    def get_iso_witness(self, report):
        return None if report.iso_witness is None else report.iso_witness.to_json()


class PlaneRowSerializer(serpy.Serializer):
    n = serpy.IntField()
    k = serpy.IntField()
    bipartite = serpy.BoolField()
    core = serpy.BoolField()
    vertex_transitive = serpy.BoolField()
    group_graph = serpy.BoolField()
    two_gen_monoid_graph = serpy.BoolField()
    loopless_obstruction = serpy.BoolField()
    aut_order_expected = serpy.IntField(required=False)
    aut_order_found = serpy.IntField(required=False)


class RetractionSerializer(serpy.DictSerializer):
    n = serpy.IntField()
    k = serpy.IntField()
    target = serpy.Field()
    map = serpy.Field()


class EnhancedJSONEncoder(json.JSONEncoder):
    """ dataclasses, enums, sets and numpy scalars for the generic reports """
    def default(self, o):
        if isinstance(o, VertexMap):
            return o.to_json()
        if dataclasses.is_dataclass(o) and not isinstance(o, type):
            return {f.name: getattr(o, f.name) for f in dataclasses.fields(o)}
        if isinstance(o, enum.Enum):
            return o.value
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        if isinstance(o, np.integer):
            return int(o)
        return super().default(o)


def dumps(data) -> str:
    return json.dumps(data, indent=2, cls=EnhancedJSONEncoder)


def deserialize_table(obj) -> tuple[OpTable, tuple[int, ...]]:
    """
    Parse the table JSON schema.
    :raises ValueError: on a missing table, a wrong order or a bad connection
    """
    if not isinstance(obj, dict) or "table" not in obj:
        raise ValueError("table JSON needs a \"table\" entry")
    table = OpTable(np.array(obj["table"]), obj.get("labels"))
    if "order" in obj and obj["order"] != table.order:
        raise ValueError(f"declared order {obj['order']} does not match a {table.order}x{table.order} table")
    connection = tuple(int(c) for c in obj.get("connection", []))
    if any(not 0 <= c < table.order for c in connection):
        raise ValueError("connection element outside the carrier")
    return table, connection


def graph_to_dot(graph: SimpleGraph, name: str = "G") -> str:
    dot = gv.Graph(name)
    for v in graph.vertices:
        dot.node(str(v), label=graph.label(v))
    for u, v in graph.edges():
        dot.edge(str(u), str(v))
    return dot.source


def retraction_to_dot(graph: SimpleGraph, f: VertexMap, target, name: str = "retraction") -> str:
    """ target vertices filled; every vertex shows its image """
    dot = gv.Graph(name)
    target = set(target)
    for v in graph.vertices:
        attrs = {"label": f"{graph.label(v)} -> {graph.label(f[v])}"}
        if v in target:
            attrs["style"] = "filled"
        dot.node(str(v), **attrs)
    for u, v in graph.edges():
        dot.edge(str(u), str(v))
    return dot.source


def cayley_to_dot(D: CayleyDigraph, name: str = "Cay") -> str:
    """ one color per connection element; loops are drawn """
    dot = gv.Digraph(name)
    for s in range(D.order):
        dot.node(str(s), label=D.table.label(s))
    colors = {c: ARC_COLORS[i % len(ARC_COLORS)] for i, c in enumerate(D.connection)}
    for arc in D.arcs():
        dot.edge(str(arc.source), str(arc.target), color=colors[arc.color], label=D.table.label(arc.color))
    return dot.source
