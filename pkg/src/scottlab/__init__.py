"""Workbench for countable chain-complete orders.

Order types are words over {finite blocks, ω, ω*}; the package builds
the finite stages of monotone words, their embedding/projection tower
and its limit, spaces of monotone maps into the two-point chain, the
least-fixed-point construction on orders isomorphic to their own map
space, monotypic 01-string calculus with its dualities, glued orders
with adjunction and boundary analysis, and the replication pipeline
that threads all of it together.
"""

__version__ = "0.1.0"
