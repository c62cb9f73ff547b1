"""Kakimizu complexes of special alternating links.

Compute, from a prime special alternating link diagram (or directly from a
weighted theta-graph), the simplicial model of the complex of minimal genus
Seifert surfaces, and verify its structure: flagness, edgewise-subdivision
and product decompositions, ball dimension, Euler-characteristic identities
and the fibredness criterion.
"""

__version__ = "0.1.0"
