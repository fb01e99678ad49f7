from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from loguru import logger

from Config import DOT_GRAPH_NAME, DOT_RANKDIR
from src.dsl import TypedExpr
from src.finite import FinSet

# 叶子中只做重新布线、不产生节点的种类
_REWIRE = ("id", "swap")


@dataclass(eq=False)
class Wire:
    """
    一根导线。协变导线的数据自上而下从 source 流向 target，
    逆变导线自下而上从 source 流向 target；None 表示开放的边界
    """
    port: FinSet
    contra: bool
    source: Optional[str] = None
    target: Optional[str] = None


class DiagramBuilder:
    """把带类型标注的表达式展开成弦图：节点为生成元，边为导线"""

    def __init__(self):
        self.graph = nx.MultiDiGraph(name=DOT_GRAPH_NAME)
        self.wires: List[Wire] = []
        self.cups = set()

    def _node(self, **attrs) -> str:
        node_id = f"n{self.graph.number_of_nodes()}"
        self.graph.add_node(node_id, **attrs)
        return node_id

    def _wire(self, port: FinSet, contra: bool, **ends) -> Wire:
        wire = Wire(port, contra, **ends)
        self.wires.append(wire)
        return wire

    def _generator(self, node_id: str, typed: TypedExpr,
                   cov_in: List[Wire], contra_up: List[Wire]) -> Tuple[List[Wire], List[Wire]]:
        """一般生成元：接上定义域一侧的导线，为值域一侧新建导线"""
        for w in cov_in:
            w.target = node_id
        for w in contra_up:
            w.source = node_id
        cov_out = [self._wire(p, False, source=node_id) for p in typed.codomain.cov]
        contra_down = [self._wire(p, True, target=node_id) for p in typed.codomain.contra]
        return cov_out, contra_down

    def draw(self, typed: TypedExpr, cov_in: List[Wire],
             contra_up: List[Wire]) -> Tuple[List[Wire], List[Wire]]:
        kind = typed.kind
        if kind == "compose":
            left, right = typed.children
            cov_mid, contra_mid = self.draw(left, cov_in, contra_up)
            return self.draw(right, cov_mid, contra_mid)
        if kind == "tensor":
            left, right = typed.children
            i, j = len(left.domain.cov), len(left.domain.contra)
            cov1, contra1 = self.draw(left, cov_in[:i], contra_up[:j])
            cov2, contra2 = self.draw(right, cov_in[i:], contra_up[j:])
            return cov1 + cov2, contra1 + contra2
        if kind == "game":
            return self.draw(typed.children[0], cov_in, contra_up)
        if kind in _REWIRE:
            return self._rewire(typed, cov_in, contra_up)
        if kind == "dual":
            return self._dual(typed, cov_in, contra_up)
        return self._generator(self._leaf_node(typed), typed, cov_in, contra_up)

    def _leaf_node(self, typed: TypedExpr) -> str:
        if typed.kind == "player":
            return self._node(label=typed.name, shape="oval", style="bold")
        if typed.kind == "fun":
            return self._node(label=typed.name, shape="oval")
        if typed.kind in ("copy", "delete"):
            return self._node(label="", shape="point", tooltip=typed.kind)
        if typed.kind == "tau":
            node_id = self._node(label="", shape="point", tooltip="tau")
            self.cups.add(node_id)
            return node_id
        raise ValueError(f"cannot draw {typed.kind}")

    def _rewire(self, typed: TypedExpr, cov_in: List[Wire],
                contra_up: List[Wire]) -> Tuple[List[Wire], List[Wire]]:
        if typed.kind == "id":
            return list(cov_in), list(contra_up)
        split = len(typed.node.args[0].names)
        return cov_in[split:] + cov_in[:split], list(contra_up)

    def _dual(self, typed: TypedExpr, cov_in: List[Wire],
              contra_up: List[Wire]) -> Tuple[List[Wire], List[Wire]]:
        inner = typed.children[0]
        if inner.kind == "id":
            return [], list(contra_up)
        if inner.kind == "swap":
            # 值域一侧按 S+T 排列，定义域一侧按 T+S 排列
            t = len(contra_up) - len(inner.node.args[0].names)
            return [], contra_up[t:] + contra_up[:t]
        if inner.kind in ("copy", "delete"):
            node_id = self._node(label="", shape="point", tooltip=inner.kind)
        else:
            node_id = self._node(label=f"{inner.name}^*", shape="oval")
        return self._generator(node_id, typed, cov_in, contra_up)

    def _boundary(self, side: str) -> str:
        return self._node(label="", shape="point", color="grey", tooltip=side)

    def build(self, typed: TypedExpr) -> nx.MultiDiGraph:
        cov_in = [self._wire(p, False) for p in typed.domain.cov]
        contra_up = [self._wire(p, True) for p in typed.domain.contra]
        self.draw(typed, cov_in, contra_up)
        for wire in self.wires:
            if wire.source is None:
                wire.source = self._boundary("input")
            if wire.target is None:
                wire.target = self._boundary("output")
        self._add_edges()
        logger.debug(f"弦图：{self.graph.number_of_nodes()}个节点，{self.graph.number_of_edges()}条边")
        return self.graph

    def _add_edges(self) -> None:
        """同一对节点之间同方向的导线合并成一条边，标签为集合名的积"""
        bundles: Dict[Tuple[str, str, bool], List[str]] = {}
        for wire in self.wires:
            bundles.setdefault((wire.source, wire.target, wire.contra), []).append(wire.port.name)
        for (source, target, contra), names in bundles.items():
            label = "*".join(names)
            if not contra:
                self.graph.add_edge(source, target, key="cov", label=label)
            elif source in self.cups:
                # 逆变导线画成自上而下的反向边
                self.graph.add_edge(target, source, key="contra", label=label, dir="back", constraint="false")
            else:
                self.graph.add_edge(target, source, key="contra", label=label, dir="back", style="dashed")


def diagram_graph(typed: TypedExpr) -> nx.MultiDiGraph:
    return DiagramBuilder().build(typed)


def _gvquote(s: str) -> str:
    return '"{}"'.format(str(s).replace('"', r'\"'))


def _attrs(data: dict) -> str:
    return ", ".join(f"{k}={_gvquote(v)}" for k, v in data.items())


def dot_lines(graph: nx.MultiDiGraph, rankdir: str = DOT_RANKDIR) -> Iterator[str]:
    """按节点编号与插入顺序逐行产生 DOT 文本"""
    yield f"digraph {_gvquote(graph.graph.get('name', DOT_GRAPH_NAME))} {{\n"
    yield f"  rankdir={rankdir};\n"
    for node, data in graph.nodes(data=True):
        yield f"  {node} [{_attrs(data)}];\n"
    for source, target, data in graph.edges(data=True):
        yield f"  {source} -> {target} [{_attrs(data)}];\n"
    yield "}\n"


def render_dot(typed: TypedExpr, name: Optional[str] = None) -> str:
    graph = diagram_graph(typed)
    if name:
        graph.graph["name"] = name
    return "".join(dot_lines(graph))
