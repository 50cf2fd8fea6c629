"""
Heavy-subgraph conditions, closure operations and exact cycle oracles for
hamiltonicity experiments on small graphs.
"""

__version__ = '0.1.0'
