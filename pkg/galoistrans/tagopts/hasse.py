#
# galoistrans: sound model transformation with Galois connections
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Hasse diagrams of finite lattices in DOT format."""

from typing import Dict, List, Optional, Tuple

import networkx as nx

from galoistrans.lattice.base import FiniteLattice

HASSE_MAX_ELEMENTS = 64


def covering_graph(L: FiniteLattice) -> nx.DiGraph:
    """The covering relation of ``L`` as a graph on element positions.

    Edges point from the lower to the higher element of each cover.
    """
    order = nx.DiGraph()
    order.add_nodes_from(range(L.size))
    elements = L.elements
    order.add_edges_from((i, j)
                         for i, a in enumerate(elements)
                         for j, b in enumerate(elements)
                         if i != j and L.leq(a, b))
    return nx.transitive_reduction(order)


def _ranks(graph: nx.DiGraph) -> Dict[int, int]:
    """Length of the longest chain from a minimal element to each node."""
    rank = {}
    for node in nx.topological_sort(graph):
        rank[node] = max((rank[p] + 1 for p in graph.predecessors(node)),
                         default=0)
    return rank


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_layout(L: FiniteLattice) -> Tuple[List[Tuple[int, str]], List[Tuple[int, int]]]:
    """Nodes ``(rank, label)`` in bottom-to-top order and their covering edges.

    Node ``k`` in the returned list is the ``k``-th element when sorting by rank,
    then by enumeration position. Edges are pairs of such node numbers, sorted.
    """
    graph = covering_graph(L)
    rank = _ranks(graph)
    ordered = sorted(graph.nodes, key=lambda i: (rank[i], i))
    number = {position: k for k, position in enumerate(ordered)}
    nodes = [(rank[i], L.render(L.elements[i])) for i in ordered]
    edges = sorted((number[u], number[v]) for u, v in graph.edges)
    return nodes, edges


def hasse_export(L: FiniteLattice,
                 max_elements: int = HASSE_MAX_ELEMENTS,
                 title: Optional[str] = None) -> str:
    """Render the Hasse diagram of ``L`` as a DOT digraph.

    Nodes are numbered ``n0, n1, ...`` from the bottom up and labelled with the
    canonical element rendering. Elements of equal rank share a ``rank=same``
    group. The output only depends on the lattice, so repeated exports are
    byte-identical.

    Args:
        L: The lattice to render.
        max_elements: Largest lattice that is rendered.
        title: Graph name, defaults to the lattice description.

    Raises:
        CapacityError: If ``L`` has more than ``max_elements`` elements.
    """
    L.check_capacity(max_elements, what="lattice to render")
    nodes, edges = hasse_layout(L)
    lines = [
        f"digraph {_quote(title or L.describe())} {{",
        "  rankdir=BT;",
        "  node [shape=box, fontname=\"monospace\"];",
    ]
    for k, (_, label) in enumerate(nodes):
        lines.append(f"  n{k} [label={_quote(label)}];")
    for rank in sorted({rank for rank, _ in nodes}):
        members = [f"n{k}" for k, (r, _) in enumerate(nodes) if r == rank]
        if len(members) > 1:
            lines.append("  { rank=same; " + "; ".join(members) + "; }")
    for u, v in edges:
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = ["covering_graph", "hasse_layout", "hasse_export"]
