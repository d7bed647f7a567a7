"""Semantic package search over a package knowledge graph.

Builds a typed knowledge graph from a corpus of ROS-style packages and ranks
packages against ten-field structured queries with a weighted feature-fusion
score.
"""

__version__ = "0.1.0"
