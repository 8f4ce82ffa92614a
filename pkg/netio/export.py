"""
DOT and JSON renderings of nets and analysis results
"""
import json
from enum import Enum
from functools import singledispatch
from typing import Any, Iterable, Optional

from netio.parser import NetDocument
from oracle.reachability import BoundednessVerdict
from petri.components import Component, ComponentKind
from petri.free_choice import Allocation, ClusterPartition
from petri.net import Marking, Net
from petri.siphons import CommonerVerdict, MaxTrapResult
from petri.wellformed import StructuralRefusal, WellFormednessVerdict


def to_dot(document: NetDocument, highlight: Optional[Iterable[str]] = None) -> str:
    """Graphviz digraph: circles for places, boxes for transitions

    Places show their token count when the document has a marking;
    highlighted nodes and the arcs between them are drawn bold.
    """
    net = document.net
    bold = set(highlight or ())
    lines = [f'digraph "{net.name}" {{']
    for p in net.places:
        label = f"{p} ({document.marking[p]})" if document.marking is not None else p
        style = ", style=bold" if p in bold else ""
        lines.append(f'  {p} [shape=circle, label="{label}"{style}];')
    for t in net.transitions:
        style = ", style=bold" if t in bold else ""
        lines.append(f"  {t} [shape=box{style}];")
    for a, b in net.sorted_arcs():
        style = " [style=bold]" if a in bold and b in bold else ""
        lines.append(f"  {a} -> {b}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _names(nodes: Iterable[str]) -> list:
    return sorted(nodes)


@singledispatch
def to_payload(obj: Any) -> Any:
    """JSON-ready structure for a result object"""
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_payload(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(to_payload(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_payload(v) for v in obj]
    return obj


@to_payload.register
def _(kind: ComponentKind) -> dict:
    return {"side": kind.side.value, "status": kind.status.value, "type1": kind.type1, "type2": kind.type2}


@to_payload.register
def _(component: Component) -> dict:
    return {
        "nodes": _names(component.nodes),
        "places": _names(component.places),
        "transitions": _names(component.transitions),
        "kind": to_payload(component.kind),
        "evidence": {
            "excessive": list(component.evidence.excessive),
            "open": list(component.evidence.open_nodes),
            "arcs": [list(arc) for arc in component.evidence.boundary_arcs],
        },
    }


@to_payload.register
def _(verdict: WellFormednessVerdict) -> dict:
    if verdict.is_yes:
        return {"answer": verdict.answer.value, "cover": [_names(c.nodes) for c in verdict.t_cover]}
    return {"answer": verdict.answer.value, "witness": to_payload(verdict.witness), "phase": verdict.phase}


@to_payload.register
def _(refusal: StructuralRefusal) -> dict:
    return {"answer": refusal.answer.value,
            "refusal": {"bottom": _names(refusal.bottom), "upstream": _names(refusal.upstream)}}


@to_payload.register
def _(result: MaxTrapResult) -> dict:
    return {
        "trap": _names(result.trap),
        "layers": [_names(layer) for layer in result.layers],
        "exit_index": dict(sorted(result.exit_index.items())),
    }


@to_payload.register
def _(verdict: CommonerVerdict) -> dict:
    return {
        "live": verdict.live,
        "siphon": _names(verdict.siphon) if verdict.siphon is not None else None,
        "siphons_checked": verdict.siphons_checked,
    }


@to_payload.register
def _(verdict: BoundednessVerdict) -> dict:
    return {
        "outcome": verdict.outcome.value,
        "states": len(verdict.graph.states),
        "edges": len(verdict.graph.edges),
        "path": list(verdict.path),
        "dominated_index": verdict.dominated_index,
        "pump": verdict.pump,
    }


@to_payload.register
def _(marking: Marking) -> dict:
    return marking.as_dict()


@to_payload.register
def _(partition: ClusterPartition) -> list:
    return [_names(block) for block in partition.clusters]


@to_payload.register
def _(alpha: Allocation) -> list:
    return _names(alpha.nodes)


@to_payload.register
def _(net: Net) -> dict:
    return {
        "name": net.name,
        "places": list(net.places),
        "transitions": list(net.transitions),
        "arcs": [list(arc) for arc in net.sorted_arcs()],
    }


@to_payload.register
def _(document: NetDocument) -> dict:
    payload = to_payload(document.net)
    payload["marking"] = to_payload(document.marking) if document.marking is not None else None
    return payload


def to_json(obj: Any) -> str:
    return json.dumps(to_payload(obj), sort_keys=True, separators=(",", ":"))
