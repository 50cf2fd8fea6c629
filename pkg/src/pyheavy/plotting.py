"""
Drawing graphs, witnesses and closures with matplotlib.
"""

from pyheavy.closure import closure
from pyheavy.graphops import Graph, iter_bits, to_networkx
from pyheavy.heavy import heavy_vertices

import matplotlib.pyplot as plt
import networkx as nx
from mpl_toolkits.axes_grid1 import make_axes_locatable

from typing import Optional


LAYOUTS = {
    'circular': nx.circular_layout,
    'spring': lambda g: nx.spring_layout(g, seed=0),
    'shell': nx.shell_layout,
}


def layout_positions(graph: Graph, layout: str = 'circular') -> dict:
    try:
        func = LAYOUTS[layout]
    except KeyError:
        raise ValueError("Unknown layout: {!r}; choose from {}".format(
            layout, ', '.join(LAYOUTS)))
    return func(to_networkx(graph))


def draw_graph(graph: Graph, highlight: Optional[int] = None, ax=None,
               layout: str = 'circular', pos: Optional[dict] = None,
               degree_colors: bool = False, title: Optional[str] = None,
               dashed=()):
    """Draw ``graph``; heavy vertices get a thick outline.

    :param highlight: vertex bitset of a copy to emphasise, together with
                      the edges inside it
    :param layout: name of a networkx layout, see :data:`LAYOUTS`
    :param pos: explicit positions, overrides ``layout``
    :param degree_colors: colour vertices by degree and add a colorbar
    :param dashed: edges to draw dashed
    :return: the axes
    """
    if ax is None:
        ax = plt.gca()
    nxg = to_networkx(graph)
    if pos is None:
        pos = layout_positions(graph, layout)
    marked = set(iter_bits(highlight or 0))
    heavy = set(iter_bits(heavy_vertices(graph)))
    dashed = {tuple(sorted(e)) for e in dashed}
    solid = [e for e in nxg.edges if tuple(sorted(e)) not in dashed]
    inside = [e for e in solid if e[0] in marked and e[1] in marked]

    nx.draw_networkx_edges(nxg, pos, edgelist=solid, ax=ax,
                           edge_color='0.6', width=1.0)
    if dashed:
        nx.draw_networkx_edges(nxg, pos, edgelist=sorted(dashed), ax=ax,
                               edge_color='tab:blue', style='dashed')
    if inside:
        nx.draw_networkx_edges(nxg, pos, edgelist=inside, ax=ax,
                               edge_color='tab:red', width=2.5)

    nodes = list(nxg.nodes)
    if degree_colors:
        colors = [graph.degree(v) for v in nodes]
    else:
        colors = ['tab:red' if v in marked else 'white' for v in nodes]
    collection = nx.draw_networkx_nodes(
        nxg, pos, nodelist=nodes, node_color=colors, ax=ax,
        cmap='viridis' if degree_colors else None,
        edgecolors='black',
        linewidths=[2.5 if v in heavy else 1.0 for v in nodes])
    nx.draw_networkx_labels(nxg, pos, ax=ax, font_size=8)
    if degree_colors:
        divider = make_axes_locatable(ax)
        cax = divider.append_axes('right', size=0.15, pad=0.1)
        ax.figure.colorbar(collection, cax=cax, label='degree')
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    return ax


def draw_closure(graph: Graph, kind: str = 'c', layout: str = 'circular',
                 check: bool = True):
    """Side-by-side drawing of ``graph`` and its closure; edges added by the
    closure are dashed.

    :return: the figure
    """
    result = closure(graph, kind, check=check)
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 5))
    pos = layout_positions(graph, layout)
    draw_graph(graph, ax=left, pos=pos, title='G')
    draw_graph(result.graph, ax=right, pos=pos,
               dashed=result.trace.added_edges,
               title='{}-closure ({} steps)'.format(kind, len(result.trace)))
    return fig
