# -*- coding: utf-8 -*-
# ---
# jupyter:
#   jupytext:
#     formats: py:light,ipynb
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#       jupytext_version: 1.13.5
#   kernelspec:
#     display_name: Python 3 (ipykernel)
#     language: python
#     name: python3
# ---

# # Closures and where they lose a condition
#
# This is a short demo of the `pyheavy.closure` and `pyheavy.families`
# modules: we compute the c-closure of a claw-o-heavy graph, look at its
# regions and then at a construction whose closure breaks the N-c-heavy
# condition.
#
# ## Setup

import matplotlib.pyplot as plt

from pyheavy.closure import check_closed_shape, closure, regions
from pyheavy.cycles import circumference, is_hamiltonian
from pyheavy.families import gen_G2, wheel
from pyheavy.heavy import graph_satisfies, heavy_pairs
from pyheavy.plotting import draw_closure, draw_graph

# ## A small example
#
# The wheel with five spokes is claw-free, so both closures apply. The hub
# is eligible, and completing its neighbourhood gives a complete graph.

graph = wheel(5)
result = closure(graph, 'c')
print(result.trace.to_dict())

fig = draw_closure(graph, 'c')

# The closure keeps the circumference and is claw-free and
# $K_{1,1,2}$-free without heavy pairs:

print(circumference(graph).value, circumference(result.graph).value)
print(check_closed_shape(result.graph, 'c').to_dict())

# ## Regions
#
# Each maximal clique of the closure induces a region in the original
# graph. Vertices in one region are interior, in two regions frontier.

region_map = regions(graph)
print(region_map.to_dict())

# ## Instability of N-c-heavy
#
# The construction `G2(k, r)` is claw-o-heavy and N-c-heavy. Its closure
# merges the clique `K` with the path `a1..a4`, and the net on
# `a1 b1 a2 b2 a3 b3` is not c-heavy any more.

family = gen_G2(5, 8)
g2 = family.graph
print(g2.n, graph_satisfies(g2, 'claw', 'o').satisfied,
      graph_satisfies(g2, 'N', 'c').satisfied)

closed = closure(g2, 'c').graph
witness = graph_satisfies(closed, 'N', 'c').witness
print(witness.members(), heavy_pairs(closed))

fig, ax = plt.subplots(figsize=(8, 8))
draw_graph(closed, highlight=witness.vertices, ax=ax, layout='spring',
           title='c-closure of G2(5, 8)')

# The graph itself is still hamiltonian; the closure only fails to carry the
# condition along.

print(is_hamiltonian(g2).value)
