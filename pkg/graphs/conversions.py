"""
Optional bridge to networkx for cross-checks.
"""

from models import LabeledGraph, MultiGraph


def to_networkx(G):
    """Convert a LabeledGraph (to nx.Graph) or MultiGraph (to nx.MultiGraph)"""
    try:
        import networkx as nx
    except ImportError:
        raise ImportError("Install networkx: pip install networkx")
    if isinstance(G, MultiGraph):
        out = nx.MultiGraph()
        out.add_nodes_from(sorted(G.vertices))
        for edge_id, (u, v) in enumerate(G.endpoints):
            out.add_edge(u, v, key=edge_id, internal=G.paths[edge_id])
        return out
    if isinstance(G, LabeledGraph):
        out = nx.Graph()
        out.add_nodes_from(G.sorted_vertices)
        out.add_edges_from(G.sorted_edges)
        return out
    raise TypeError(f"cannot convert {type(G).__name__} to networkx")
